#ifndef LGQ_ERRORS_HPP
#define LGQ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace lgq {

// Base class for everything this library throws on bad input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A quiver failed the gentle axioms; every violation is reported at once.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }
  std::vector<std::string> violations_;
};

// An operation was called outside its stated precondition
// (PreconditionViolated, NotGentle, NotClosed, UnknownVertex, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// A rational function cannot be expanded as a series under the given
// degree weighting (some denominator monomial has weighted degree 0).
class NonExpandableError : public Error {
 public:
  explicit NonExpandableError(const std::string& msg) : Error(msg) {}
};

}  // namespace lgq

#endif
