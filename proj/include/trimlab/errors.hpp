#ifndef TRIMLAB_ERRORS_HPP
#define TRIMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trimlab {

// Malformed input: an index out of range, a non-tree, an inconsistent
// embedding. Distinct from a validation report, which describes a
// well-formed object that violates a contract.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force oracle refused an input that is too large to search.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver or enumerator ran out of its configured budget. Never a wrong
// answer; the caller may retry with a larger budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace trimlab

#endif  // TRIMLAB_ERRORS_HPP
