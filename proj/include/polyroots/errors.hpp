#pragma once

#include <stdexcept>
#include <string>

namespace polyroots {

enum class ErrorKind {
  zero_polynomial,
  degenerate_cubic,
  degenerate_quartic,
  degenerate_resolvent,
  selection_failed,
  no_convergence,
  provider_failed,
};

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Degeneracies are the failures a coordinate shift can escape.
  bool is_degeneracy() const noexcept {
    return kind_ == ErrorKind::degenerate_cubic ||
           kind_ == ErrorKind::degenerate_quartic ||
           kind_ == ErrorKind::degenerate_resolvent;
  }

 private:
  ErrorKind kind_;
};

#define POLYROOTS_DEFINE_ERROR(Name, kind_value)                   \
  class Name : public SolverError {                                \
   public:                                                         \
    explicit Name(const std::string& what)                         \
        : SolverError(ErrorKind::kind_value, #Name ": " + what) {} \
  };

POLYROOTS_DEFINE_ERROR(ZeroPolynomial, zero_polynomial)
POLYROOTS_DEFINE_ERROR(DegenerateCubic, degenerate_cubic)
POLYROOTS_DEFINE_ERROR(DegenerateQuartic, degenerate_quartic)
POLYROOTS_DEFINE_ERROR(DegenerateResolvent, degenerate_resolvent)
POLYROOTS_DEFINE_ERROR(SelectionFailed, selection_failed)
POLYROOTS_DEFINE_ERROR(NoConvergence, no_convergence)
POLYROOTS_DEFINE_ERROR(ProviderFailed, provider_failed)

#undef POLYROOTS_DEFINE_ERROR

}  // namespace polyroots
