#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polyroots/closed_form.hpp"
#include "polyroots/poly_core.hpp"
#include "polyroots/tschirnhaus_formulas.hpp"

namespace polyroots {

/// Where the transform and resolvent coefficients come from.
enum class CoefficientSource {
  formula,      // the closed-form expressions in tschirnhaus_formulas.hpp
  elimination,  // recomputed from oracle roots (oracle.hpp)
};

struct SolverConfig {
  // Relative-residual acceptance threshold for candidates.
  Real tol = 1e-8;
  Real degeneracy_threshold = kDefaultDegeneracyThreshold;
  int polish_steps = 2;
  // Extra cube-root branches tried after branch 0.
  int max_branch_retries = 2;
  CoefficientSource coefficient_source = CoefficientSource::formula;
};

/// One of the twelve values x_mn: m indexes the cubic root, n the y root.
struct CandidateRoot {
  Complex value;
  int m = 0;
  int n = 0;
  Real residual = 0;
  // Residual against a second polynomial that must also vanish (the quintic
  // when the candidate comes from its deflated cofactor).
  std::optional<Real> dual_residual;
  bool accepted = false;
};

/// Everything computed for one quartic on the way to its twelve candidates.
struct CandidateStage {
  std::string label;
  Complex shift{0};
  int b0_index = 0;
  int branch = 0;
  ResolventCubicCoeffs resolvent_cubic{};
  TschirnhausCubic transform{};
  BiquadraticResolvent resolvent{};
  std::array<Complex, 4> y{};
  std::vector<CandidateRoot> candidates;
};

struct SolveReport {
  RootSet roots;
  Real vieta_defect = 0;
  Real tol = 0;
  bool low_confidence = false;
  // Accepted candidate stage per quartic solved (one for a quartic, one for
  // the cofactor of a quintic).
  std::vector<CandidateStage> stages;
  std::vector<std::string> trace;
};

}  // namespace polyroots
