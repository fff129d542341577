#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyroots/errors.hpp"
#include "polyroots/oracle.hpp"
#include "polyroots/poly_core.hpp"
#include "polyroots/report.hpp"
#include "polyroots/tschirnhaus_quartic.hpp"

namespace polyroots {

/// Monic quintic x^5 + m x^4 + n x^3 + p x^2 + q x + r.
struct QuinticCoeffs {
  Complex m, n, p, q, r;

  static QuinticCoeffs from(const Polynomial& monic_quintic) {
    return {monic_quintic.coeff(4), monic_quintic.coeff(3), monic_quintic.coeff(2),
            monic_quintic.coeff(1), monic_quintic.coeff(0)};
  }

  Polynomial polynomial() const { return Polynomial{r, q, p, n, m, Complex{1}}; }
};

/// Supplies one root of a monic quintic; the pipeline finds the other four.
/// Implementations must be reentrant.
using FirstRootProvider = std::function<Complex(const Polynomial&, const SolverConfig&)>;

/// Default provider: the simultaneous-iteration oracle's root with the
/// smallest residual, ties broken by (re, im) order.
struct AberthFirstRoot {
  int max_iter = kOracleMaxIterations;

  Complex operator()(const Polynomial& p, const SolverConfig& cfg) const {
    RootSet all;
    try {
      all = aberth_all_roots(p, std::min(cfg.tol, kOracleTolerance), max_iter);
    } catch (const NoConvergence& e) {
      throw ProviderFailed(e.what());
    }
    // make_root_set sorted the roots, so the first minimum is the
    // lexicographically smallest among ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.roots.size(); ++i) {
      if (all.residuals[i] < all.residuals[best]) best = i;
    }
    return all.roots[best];
  }
};

inline Complex first_root(const Polynomial& p, const FirstRootProvider& provider,
                          const SolverConfig& cfg) {
  Complex r1;
  try {
    r1 = provider(p, cfg);
  } catch (const ProviderFailed&) {
    throw;
  } catch (const SolverError& e) {
    throw ProviderFailed(e.what());
  }
  const Real residual = relative_residual(p, r1);
  if (!(residual <= cfg.tol)) {
    throw ProviderFailed("first root has residual " + std::to_string(residual) +
                         " above tolerance " + std::to_string(cfg.tol));
  }
  return r1;
}

inline QuarticCoeffs deflated_quartic_coeffs(const Polynomial& p, const Complex& r1) {
  return QuarticCoeffs::from(deflate(p, r1));
}

struct QuinticSolution {
  // r[0] is the provider's root; r[1..4] come from the cofactor candidates.
  std::array<Complex, 5> r{};
  SolveReport report;
};

/// Five roots of a quintic: one from the provider, four selected from the
/// twelve candidates of the deflated cofactor. A candidate is admissible
/// only if it is a root of both the cofactor and the original quintic.
inline QuinticSolution solve_quintic(const Polynomial& p,
                                     const FirstRootProvider& provider = AberthFirstRoot{},
                                     const SolverConfig& cfg = {}) {
  const Polynomial monic = normalize_monic(p);
  if (monic.degree() != 5) {
    throw std::invalid_argument("solve_quintic needs a degree-5 polynomial");
  }

  const Complex r1 = newton_polish(monic, first_root(monic, provider, cfg), cfg.polish_steps);
  const Polynomial cofactor = deflated_quartic_coeffs(monic, r1).polynomial();

  SolveReport report = detail::solve_monic_quartic(cofactor, cfg, &p, "cofactor");
  report.trace.insert(report.trace.begin(), "first root " + detail::format_complex(r1));

  QuinticSolution solution;
  solution.r[0] = r1;
  // Cofactor roots carry the error of r1; polish them on the quintic itself.
  for (std::size_t i = 0; i < 4; ++i) {
    solution.r[i + 1] = newton_polish(monic, report.roots.roots[i], cfg.polish_steps);
  }
  report.roots = make_root_set(monic, {solution.r.begin(), solution.r.end()});
  report.vieta_defect = vieta_defect(monic, report.roots.roots);
  solution.report = std::move(report);
  return solution;
}

}  // namespace polyroots
