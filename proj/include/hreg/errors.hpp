#ifndef HREG_ERRORS_HPP
#define HREG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hreg {

// Bad input: malformed graphs, out-of-range colors, inconsistent shapes.
// CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact computation would exceed the configured work budget.  Callers can
// retry with a bigger budget or switch to a sampling mode.  CLI exit code 2.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& msg, std::vector<std::string> trace = {})
      : std::runtime_error(msg), partial_trace(std::move(trace)) {}
  // Evaluations finished before the refusal, most recent last.
  std::vector<std::string> partial_trace;
};

// A decision procedure could not certify any of its advertised outcomes at
// the requested scale.  Distinct from BudgetExceeded: more work with the same
// inputs would not help.
class Undecided : public std::runtime_error {
public:
  explicit Undecided(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hreg

#endif
