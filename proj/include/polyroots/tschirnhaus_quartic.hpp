#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyroots/closed_form.hpp"
#include "polyroots/errors.hpp"
#include "polyroots/oracle.hpp"
#include "polyroots/poly_core.hpp"
#include "polyroots/report.hpp"
#include "polyroots/tschirnhaus_formulas.hpp"

namespace polyroots {

namespace detail {

inline bool resolvent_is_cubic(const ResolventCubicCoeffs& rc) {
  const Real scale = std::max({std::abs(rc.b00), std::abs(rc.b01), std::abs(rc.b02),
                               std::abs(rc.b03)});
  return std::abs(rc.b03) > 1e-12 * scale;
}

inline std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace detail

/// A root of the resolvent cubic, the principal Cardano root first.
inline Complex compute_b0(const ResolventCubicCoeffs& rc) {
  if (!detail::resolvent_is_cubic(rc)) {
    throw DegenerateResolvent("leading resolvent coefficient b03 vanishes");
  }
  return cubic_roots(rc.b00 / rc.b03, rc.b01 / rc.b03, rc.b02 / rc.b03, Complex{0}, 0)[0];
}

/// All usable b0 values in trial order.
///
/// Degree detection is done on the coefficients scaled by the quartic's
/// root size rho = max(|a3|, |a2|^1/2, |a1|^1/3, |a0|^1/4): b0k (a3^2 - 2 a2)^3
/// is homogeneous of weight 15 - 3k, so it is compared against rho^(15 - 3k).
/// When b03 vanishes the resolvent has lower degree and its remaining roots
/// are used; when it vanishes identically every b0 removes the linear term
/// and 0 is returned.
inline std::vector<Complex> resolvent_roots(const ResolventCubicCoeffs& rc,
                                            const QuarticCoeffs& a) {
  const Real rho = std::max({std::abs(a.a3), std::sqrt(std::abs(a.a2)),
                             std::cbrt(std::abs(a.a1)), std::sqrt(std::sqrt(std::abs(a.a0)))});
  const Real d3 = std::pow(std::abs(transform_denominator(a)), 3);
  const std::array<Complex, 4> coeffs{rc.b00, rc.b01, rc.b02, rc.b03};
  std::array<Real, 4> scaled{};
  Real largest = 1;
  for (std::size_t k = 0; k < 4; ++k) {
    const Real weight = std::pow(rho, static_cast<Real>(15 - 3 * static_cast<int>(k)));
    scaled[k] = weight > 0 ? std::abs(coeffs[k]) * d3 / weight : std::abs(coeffs[k]);
    largest = std::max(largest, scaled[k]);
  }
  auto significant = [&](std::size_t k) { return scaled[k] > 1e-10 * largest; };

  if (significant(3)) {
    const Polynomial monic{rc.b00 / rc.b03, rc.b01 / rc.b03, rc.b02 / rc.b03, Complex{1}};
    const auto r = cubic_roots(monic[0], monic[1], monic[2], Complex{0}, 0);
    // Cardano loses digits when the three roots cluster.
    std::vector<Complex> out;
    for (const auto& b0 : r) out.push_back(newton_polish(monic, b0, 3));
    return out;
  }
  if (significant(2)) {
    const auto r = quadratic_roots(rc.b02, rc.b01, rc.b00);
    return {r.begin(), r.end()};
  }
  if (significant(1)) return {-rc.b00 / rc.b01};
  return {Complex{0}};
}

/// Transform, resolvent and the twelve candidates x_mn for one quartic.
///
/// b1 = 0; b0 is the `b0_index`-th resolvent root; b2 follows from b0;
/// B2 and B0 give y_1..y_4; each y_n contributes the three roots of
/// x^3 + b2 x^2 + b0 + y_n = 0 under cube-root branch `branch`.
inline CandidateStage generate_candidates(const QuarticCoeffs& a, int branch,
                                          int b0_index = 0, const SolverConfig& cfg = {}) {
  CandidateStage stage;
  stage.branch = branch;
  stage.b0_index = b0_index;

  std::vector<Complex> oracle_roots;
  if (cfg.coefficient_source == CoefficientSource::elimination) {
    if (is_degenerate(a, cfg.degeneracy_threshold)) {
      throw DegenerateQuartic("a3^2 - 2 a2 vanishes");
    }
    oracle_roots = aberth_all_roots(a.polynomial()).roots;
    stage.resolvent_cubic = resolvent_from_roots(a, oracle_roots, cfg.degeneracy_threshold);
  } else {
    stage.resolvent_cubic = resolvent_cubic_coeffs(a, cfg.degeneracy_threshold);
  }

  const auto b0_values = resolvent_roots(stage.resolvent_cubic, a);
  if (b0_index < 0 || static_cast<std::size_t>(b0_index) >= b0_values.size()) {
    throw DegenerateResolvent("resolvent has no root with index " + std::to_string(b0_index));
  }
  Complex b0 = b0_values[static_cast<std::size_t>(b0_index)];
  if (cfg.coefficient_source == CoefficientSource::elimination) {
    b0 = polish_resolvent_root(a, oracle_roots, stage.resolvent_cubic, b0,
                               cfg.degeneracy_threshold);
  }
  const Complex b1{0};
  const Complex b2 = compute_b2(a, b0, b1, cfg.degeneracy_threshold);
  stage.transform = {b0, b1, b2};

  if (cfg.coefficient_source == CoefficientSource::elimination) {
    const auto e = eliminant_from_roots(oracle_roots, stage.transform);
    stage.resolvent = {e.c2, e.c0};
  } else {
    stage.resolvent = {compute_B2(a, stage.transform), compute_B0(a, stage.transform)};
  }
  stage.y = biquadratic_roots(stage.resolvent);

  const Polynomial quartic = a.polynomial();
  stage.candidates.reserve(12);
  for (int n = 0; n < 4; ++n) {
    const auto x = cubic_roots(b0, b1, b2, stage.y[static_cast<std::size_t>(n)], branch);
    for (int m = 0; m < 3; ++m) {
      const Complex value = x[static_cast<std::size_t>(m)];
      stage.candidates.push_back(
          {value, m + 1, n + 1, relative_residual(quartic, value), std::nullopt, false});
    }
  }
  return stage;
}

struct Selection {
  RootSet roots;
  std::array<std::size_t, 4> indices{};
  Real vieta_defect = 0;
  bool low_confidence = false;
};

inline bool passes(const CandidateRoot& c, Real tol) {
  return c.residual <= tol && (!c.dual_residual || *c.dual_residual <= tol);
}

/// Picks the four candidates that best reproduce the quartic's coefficients
/// (smallest Vieta defect), preferring those whose residuals pass `tol`.
inline Selection select_quartic_roots(const Polynomial& quartic,
                                      const std::vector<CandidateRoot>& candidates, Real tol) {
  if (candidates.size() < 4) throw SelectionFailed("fewer than four candidates");

  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (passes(candidates[i], tol)) pool.push_back(i);
  }
  Selection best;
  if (pool.size() < 4) {
    best.low_confidence = true;
    pool.resize(candidates.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  }

  Real best_defect = std::numeric_limits<Real>::infinity();
  const std::size_t k = pool.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        for (std::size_t r = l + 1; r < k; ++r) {
          const std::array<Complex, 4> subset{
              candidates[pool[i]].value, candidates[pool[j]].value,
              candidates[pool[l]].value, candidates[pool[r]].value};
          const Real defect = vieta_defect(quartic, subset);
          if (defect < best_defect) {
            best_defect = defect;
            best.indices = {pool[i], pool[j], pool[l], pool[r]};
          }
        }

  if (!(best_defect <= std::sqrt(tol))) {
    throw SelectionFailed("best four-candidate subset has Vieta defect " +
                          std::to_string(best_defect));
  }
  best.vieta_defect = best_defect;
  std::vector<Complex> roots;
  for (auto idx : best.indices) roots.push_back(candidates[idx].value);
  best.roots = make_root_set(quartic, std::move(roots));
  return best;
}

namespace detail {

inline const std::array<Complex, 4>& quartic_shifts() {
  static const std::array<Complex, 4> shifts{Complex{0}, Complex{1}, Complex{0, 1},
                                             Complex{1, 1}};
  return shifts;
}

// Solves a monic quartic. When `dual` is set, a candidate must also have a
// residual within tol against it (evaluated at the unshifted value).
inline SolveReport solve_monic_quartic(const Polynomial& monic, const SolverConfig& cfg,
                                       const Polynomial* dual, const std::string& label) {
  SolveReport report;
  report.tol = cfg.tol;

  std::optional<std::pair<CandidateStage, Selection>> fallback;
  bool selection_failed = false;

  auto search = [&] {
    for (const Complex& s : quartic_shifts()) {
      const Polynomial q = (s == Complex{0}) ? monic : shift(monic, s);
      const QuarticCoeffs a = QuarticCoeffs::from(q);
      if (is_degenerate(a, cfg.degeneracy_threshold)) {
        report.trace.push_back(label + ": shift " + format_complex(s) +
                               " leaves a3^2 - 2 a2 degenerate");
        continue;
      }
      for (int branch = 0; branch <= cfg.max_branch_retries && branch < 3; ++branch) {
        for (int b0_index = 0; b0_index < 3; ++b0_index) {
          std::ostringstream tag;
          tag << label << ": shift " << format_complex(s) << ", b0 root " << b0_index
              << ", branch " << branch;
          CandidateStage stage;
          try {
            stage = generate_candidates(a, branch, b0_index, cfg);
          } catch (const SolverError& e) {
            report.trace.push_back(tag.str() + ": " + e.what());
            if (e.kind() == ErrorKind::degenerate_resolvent) break;
            if (!e.is_degeneracy()) selection_failed = true;
            continue;
          }
          stage.label = label;
          stage.shift = s;
          if (dual != nullptr) {
            for (auto& c : stage.candidates) c.dual_residual = relative_residual(*dual, c.value + s);
          }
          try {
            Selection sel = select_quartic_roots(q, stage.candidates, cfg.tol);
            if (!sel.low_confidence) {
              report.trace.push_back(tag.str() + ": selected");
              fallback = {std::move(stage), std::move(sel)};
              return;
            }
            report.trace.push_back(tag.str() + ": only a low-confidence selection");
            if (!fallback) fallback = {std::move(stage), std::move(sel)};
          } catch (const SelectionFailed& e) {
            report.trace.push_back(tag.str() + ": " + e.what());
            selection_failed = true;
          }
        }
      }
    }
  };
  search();

  if (!fallback) {
    if (selection_failed) throw SelectionFailed(label + ": no candidate set passed selection");
    throw DegenerateQuartic(label + ": degenerate for every shift and resolvent root");
  }

  auto& [stage, sel] = *fallback;
  std::vector<Complex> roots;
  for (auto idx : sel.indices) {
    stage.candidates[idx].accepted = true;
    roots.push_back(newton_polish(monic, stage.candidates[idx].value + stage.shift,
                                  cfg.polish_steps));
  }
  report.low_confidence = sel.low_confidence;
  report.roots = make_root_set(monic, std::move(roots));
  report.vieta_defect = vieta_defect(monic, report.roots.roots);
  report.stages.push_back(std::move(stage));
  return report;
}

}  // namespace detail

/// Roots of a quartic through the cubic transform and twelve-candidate
/// selection. Degenerate a3^2 - 2 a2 is escaped by shifting x by 1, i, 1+i.
inline SolveReport solve_quartic(const Polynomial& p, const SolverConfig& cfg = {}) {
  const Polynomial monic = normalize_monic(p);
  if (monic.degree() != 4) throw std::invalid_argument("solve_quartic needs a degree-4 polynomial");
  return detail::solve_monic_quartic(monic, cfg, nullptr, "quartic");
}

}  // namespace polyroots
