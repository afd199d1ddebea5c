#ifndef SYNLEX_ERRORS_HPP
#define SYNLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace synlex {

// Syntactic problem in an input file (bad JSON, bad TSV row, bad UTF-8).
// Carries a human-readable location when one is known.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
  ParseError(const std::string& file, std::size_t line, std::size_t column,
             const std::string& msg)
      : std::runtime_error(file + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + msg) {}
};

// Well-formed input that violates a domain invariant (duplicate entry,
// dangling reference, self-synonym, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace synlex

#endif
