#ifndef SYNLEX_TEXT_HPP
#define SYNLEX_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace synlex::text {

// Decodes UTF-8 into codepoints. Throws ParseError on malformed sequences.
std::vector<char32_t> utf8_decode(std::string_view s);

std::string utf8_encode(const std::vector<char32_t>& cps);

// Canonical lemma form used for all comparisons: composes Latin base letter +
// single combining mark pairs (grave, acute, circumflex, tilde, diaeresis,
// cedilla) to their precomposed codepoints, then lowercases ASCII, Latin-1
// letters, Œ and Ÿ. Input files are required to be NFC already; the
// composition pass covers the common decomposed French sequences so that
// equality does not silently depend on the producer.
std::string normalize_lemma(std::string_view s);

// True if s contains an ASCII control character (tab, newline, ...). Such
// strings are rejected in key fields because the interchange formats are
// line- and tab-delimited.
bool has_control_char(std::string_view s);

}  // namespace synlex::text

#endif
