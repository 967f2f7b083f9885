#pragma once

#include <stdexcept>
#include <string>

namespace finsupp {

/// Mathematical contract violations.  A CLI maps these to exit code 2,
/// while malformed input (parse errors) maps to exit code 1.
class MathError : public std::runtime_error {
 public:
  MathError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct EmptyGenerators : MathError {
  explicit EmptyGenerators(const std::string& w) : MathError("EmptyGenerators", w) {}
};
struct UnitIdeal : MathError {
  explicit UnitIdeal(const std::string& w) : MathError("UnitIdeal", w) {}
};
struct DegenerateInput : MathError {
  explicit DegenerateInput(const std::string& w) : MathError("DegenerateInput", w) {}
};
struct NotMPrimary : MathError {
  explicit NotMPrimary(const std::string& w) : MathError("NotMPrimary", w) {}
};
struct NotFinitelySupported : MathError {
  explicit NotFinitelySupported(const std::string& w) : MathError("NotFinitelySupported", w) {}
};
struct NotComplete : MathError {
  explicit NotComplete(const std::string& w) : MathError("NotComplete", w) {}
};
struct ConstructionUnverified : MathError {
  explicit ConstructionUnverified(const std::string& w) : MathError("ConstructionUnverified", w) {}
};
struct SearchBudgetExceeded : MathError {
  explicit SearchBudgetExceeded(const std::string& w) : MathError("SearchBudgetExceeded", w) {}
};
struct NotCentered : MathError {
  explicit NotCentered(const std::string& w) : MathError("NotCentered", w) {}
};
struct NotInChart : MathError {
  explicit NotInChart(const std::string& w) : MathError("NotInChart", w) {}
};
struct DidNotStabilize : MathError {
  explicit DidNotStabilize(const std::string& w) : MathError("DidNotStabilize", w) {}
};
struct InvalidGamma : MathError {
  explicit InvalidGamma(const std::string& w) : MathError("InvalidGamma", w) {}
};
struct DepthExceeded : MathError {
  explicit DepthExceeded(const std::string& w) : MathError("DepthExceeded", w) {}
};

/// Input/parse problems (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finsupp
