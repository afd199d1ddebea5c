#include "synlex/text.hpp"

#include <array>
#include <cstdint>

#include "synlex/errors.hpp"

namespace synlex::text {

namespace {

struct Composition {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Latin base + combining mark pairs with a precomposed form, lowercase and
// uppercase, covering French (plus n/o + tilde for loanwords).
constexpr Composition kCompositions[] = {
    {U'a', 0x0300, U'à'}, {U'a', 0x0301, U'á'}, {U'a', 0x0302, U'â'},
    {U'a', 0x0303, U'ã'}, {U'a', 0x0308, U'ä'}, {U'e', 0x0300, U'è'},
    {U'e', 0x0301, U'é'}, {U'e', 0x0302, U'ê'}, {U'e', 0x0308, U'ë'},
    {U'i', 0x0300, U'ì'}, {U'i', 0x0301, U'í'}, {U'i', 0x0302, U'î'},
    {U'i', 0x0308, U'ï'}, {U'o', 0x0300, U'ò'}, {U'o', 0x0301, U'ó'},
    {U'o', 0x0302, U'ô'}, {U'o', 0x0303, U'õ'}, {U'o', 0x0308, U'ö'},
    {U'u', 0x0300, U'ù'}, {U'u', 0x0301, U'ú'}, {U'u', 0x0302, U'û'},
    {U'u', 0x0308, U'ü'}, {U'y', 0x0301, U'ý'}, {U'y', 0x0308, U'ÿ'},
    {U'c', 0x0327, U'ç'}, {U'n', 0x0303, U'ñ'},
    {U'A', 0x0300, U'À'}, {U'A', 0x0301, U'Á'}, {U'A', 0x0302, U'Â'},
    {U'A', 0x0303, U'Ã'}, {U'A', 0x0308, U'Ä'}, {U'E', 0x0300, U'È'},
    {U'E', 0x0301, U'É'}, {U'E', 0x0302, U'Ê'}, {U'E', 0x0308, U'Ë'},
    {U'I', 0x0300, U'Ì'}, {U'I', 0x0301, U'Í'}, {U'I', 0x0302, U'Î'},
    {U'I', 0x0308, U'Ï'}, {U'O', 0x0300, U'Ò'}, {U'O', 0x0301, U'Ó'},
    {U'O', 0x0302, U'Ô'}, {U'O', 0x0303, U'Õ'}, {U'O', 0x0308, U'Ö'},
    {U'U', 0x0300, U'Ù'}, {U'U', 0x0301, U'Ú'}, {U'U', 0x0302, U'Û'},
    {U'U', 0x0308, U'Ü'}, {U'Y', 0x0301, U'Ý'}, {U'Y', 0x0308, 0x0178},
    {U'C', 0x0327, U'Ç'}, {U'N', 0x0303, U'Ñ'},
};

char32_t compose(char32_t base, char32_t mark) {
  for (const auto& c : kCompositions)
    if (c.base == base && c.mark == mark) return c.composed;
  return 0;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 uppercase letters, excluding the multiplication sign.
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if (cp == 0x0152) return 0x0153;  // Œ -> œ
  if (cp == 0x0178) return 0x00FF;  // Ÿ -> ÿ
  return cp;
}

}  // namespace

std::vector<char32_t> utf8_decode(std::string_view s) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    std::size_t len;
    char32_t cp;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw ParseError("invalid UTF-8 byte at offset " + std::to_string(i));
    }
    if (i + len > s.size())
      throw ParseError("truncated UTF-8 sequence at offset " +
                       std::to_string(i));
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80)
        throw ParseError("invalid UTF-8 continuation at offset " +
                         std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw ParseError("invalid UTF-8 codepoint at offset " +
                       std::to_string(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string normalize_lemma(std::string_view s) {
  std::vector<char32_t> cps = utf8_decode(s);
  std::vector<char32_t> composed;
  composed.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i + 1 < cps.size()) {
      if (char32_t c = compose(cps[i], cps[i + 1]); c != 0) {
        composed.push_back(c);
        ++i;
        continue;
      }
    }
    composed.push_back(cps[i]);
  }
  for (char32_t& cp : composed) cp = to_lower(cp);
  return utf8_encode(composed);
}

bool has_control_char(std::string_view s) {
  for (char ch : s) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 0x20 || b == 0x7F) return true;
  }
  return false;
}

}  // namespace synlex::text
