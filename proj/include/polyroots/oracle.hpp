#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "polyroots/errors.hpp"
#include "polyroots/poly_core.hpp"
#include "polyroots/tschirnhaus_formulas.hpp"

namespace polyroots {

inline constexpr Real kOracleTolerance = 1e-12;
inline constexpr int kOracleMaxIterations = 2000;

/// Simultaneous all-roots iteration (Aberth-Ehrlich), Gauss-Seidel order.
///
/// Starts from points on the circle of radius 1 + max|a_k| (monic scaling)
/// at angles 2 pi k / n + 0.4. Once every residual is within `tol` the sweep
/// continues while corrections keep shrinking, so exact and clustered roots
/// are driven to the rounding floor. Returns the converged sweep with the
/// smallest worst residual. Deterministic for fixed inputs.
inline RootSet aberth_all_roots(const Polynomial& p, Real tol = kOracleTolerance,
                                int max_iter = kOracleMaxIterations) {
  if (p.is_zero()) throw ZeroPolynomial("cannot find roots of the zero polynomial");
  if (p.degree() < 1) throw NoConvergence("constant polynomial has no roots");
  const Polynomial monic = normalize_monic(p);
  const int n = monic.degree();

  Real bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(monic.coeff(k)));
  const Real radius = 1 + bound;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::polar(radius, 2 * std::numbers::pi_v<Real> * k / n + Real{0.4});
  }

  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  auto worst_residual = [&](const std::vector<Complex>& pts) {
    Real worst = 0;
    for (const auto& x : pts) worst = std::max(worst, relative_residual(monic, x));
    return worst;
  };

  std::vector<Complex> best;
  Real best_residual = std::numeric_limits<Real>::infinity();
  Real previous_step = std::numeric_limits<Real>::infinity();

  for (int iter = 0; iter < max_iter; ++iter) {
    Real max_step = 0;
    bool all_at_floor = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const auto [value, derivative] = eval_with_derivative(monic, z[i]);
      if (value == Complex{0}) continue;
      if (derivative == Complex{0}) {
        z[i] += Real{1e-8} * (1 + std::abs(z[i])) * Complex{0.6, 0.8};
        all_at_floor = false;
        max_step = std::max(max_step, Real{1e-8});
        continue;
      }
      const Complex ratio = value / derivative;
      Complex repulsion{0};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i && z[i] != z[j]) repulsion += Real{1} / (z[i] - z[j]);
      }
      const Complex step = ratio / (Real{1} - ratio * repulsion);
      z[i] -= step;
      const Real size = std::abs(step);
      max_step = std::max(max_step, size);
      if (size > 2 * eps * std::abs(z[i])) all_at_floor = false;
    }

    const Real worst = worst_residual(z);
    if (worst <= tol) {
      if (worst <= best_residual) {
        best_residual = worst;
        best = z;
      }
      if (all_at_floor || max_step == 0 || max_step >= previous_step) break;
    }
    previous_step = max_step;
  }

  if (best.empty()) {
    throw NoConvergence("Aberth iteration did not reach tolerance " + std::to_string(tol) +
                        " within " + std::to_string(max_iter) + " sweeps");
  }
  return make_root_set(p, std::move(best));
}

/// Coefficients c0..c4 of R(y) = prod_i (y + x_i^3 + b2 x_i^2 + b1 x_i + b0)
/// over the roots x_i of the quartic. The transformed quartic is
/// y^4 + B2 y^2 + B0 exactly when c3 = c1 = 0.
struct EliminantCoeffs {
  Complex c0, c1, c2, c3, c4;
};

/// Ascending coefficients of the polynomial through (nodes[k], values[k]).
inline std::vector<Complex> interpolate(std::span<const Complex> nodes,
                                        std::span<const Complex> values) {
  const std::size_t n = nodes.size();
  // Newton divided differences, then expansion of the nested form.
  std::vector<Complex> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t k = n - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (nodes[k] - nodes[k - level]);
    }
  }
  std::vector<Complex> coeffs(n, Complex{0});
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    for (std::size_t j = n - 1; j >= 1; --j) {
      coeffs[j] = coeffs[j - 1] - nodes[k] * coeffs[j];
    }
    coeffs[0] = dd[k] - nodes[k] * coeffs[0];
  }
  return coeffs;
}

inline EliminantCoeffs eliminant_from_roots(std::span<const Complex> quartic_roots,
                                            const TschirnhausCubic& t) {
  static constexpr std::array<Real, 5> kNodes{0, 1, -1, 2, -2};
  std::array<Complex, 4> shifted{};
  Real sigma = 1;
  for (std::size_t i = 0; i < shifted.size() && i < quartic_roots.size(); ++i) {
    const Complex& x = quartic_roots[i];
    shifted[i] = ((x + t.b2) * x + t.b1) * x + t.b0;
    sigma = std::max(sigma, std::abs(shifted[i]));
  }
  // Nodes scaled to the size of the shifted roots; with fixed unit nodes the
  // samples grow like sigma^4 and the low coefficients drown in cancellation.
  std::array<Complex, 5> nodes{};
  std::array<Complex, 5> values{};
  for (std::size_t k = 0; k < kNodes.size(); ++k) {
    nodes[k] = kNodes[k];
    Complex product{1};
    for (const auto& s : shifted) product *= kNodes[k] + s / sigma;
    values[k] = product;
  }
  const auto c = interpolate(nodes, values);
  // R(y) = sigma^4 r(y / sigma), so c_k = sigma^(4-k) r_k.
  const Complex lead = c[4];
  return {c[0] / lead * std::pow(sigma, 4), c[1] / lead * std::pow(sigma, 3),
          c[2] / lead * (sigma * sigma), c[3] / lead * sigma, Complex{1}};
}

inline EliminantCoeffs eliminant_coeffs(const QuarticCoeffs& a, const TschirnhausCubic& t) {
  const auto roots = aberth_all_roots(a.polynomial()).roots;
  return eliminant_from_roots(roots, t);
}

/// The resolvent cubic recomputed numerically: with b1 = 0 and b2 tied to
/// b0, the eliminant's c1 is a cubic in b0, interpolated at b0 = 0, 1, -1, 2.
/// Its coefficients carry the same (a3^2 - 2 a2)^-3 scaling as the closed
/// forms, so no rescaling is needed.
inline ResolventCubicCoeffs resolvent_from_roots(
    const QuarticCoeffs& a, std::span<const Complex> quartic_roots,
    Real threshold = kDefaultDegeneracyThreshold) {
  static constexpr std::array<Complex, 4> kNodes{Complex{0}, Complex{1}, Complex{-1},
                                                 Complex{2}};
  std::array<Complex, 4> values{};
  for (std::size_t k = 0; k < kNodes.size(); ++k) {
    const Complex b0 = kNodes[k];
    const Complex b2 = compute_b2(a, b0, Complex{0}, threshold);
    values[k] = eliminant_from_roots(quartic_roots, {b0, Complex{0}, b2}).c1;
  }
  const auto c = interpolate(kNodes, values);
  return {c[0], c[1], c[2], c[3]};
}

/// Newton steps on c1(b0) evaluated straight from the eliminant, with the
/// interpolated cubic's derivative. Clustered resolvent roots are far more
/// sensitive to the interpolated coefficients than to c1 itself.
inline Complex polish_resolvent_root(const QuarticCoeffs& a,
                                     std::span<const Complex> quartic_roots,
                                     const ResolventCubicCoeffs& rc, Complex b0,
                                     Real threshold = kDefaultDegeneracyThreshold,
                                     int steps = 8) {
  const Polynomial cubic{rc.b00, rc.b01, rc.b02, rc.b03};
  auto c1_at = [&](const Complex& z) {
    return eliminant_from_roots(quartic_roots, {z, Complex{0}, compute_b2(a, z, Complex{0}, threshold)})
        .c1;
  };
  Complex value = c1_at(b0);
  for (int i = 0; i < steps && value != Complex{0}; ++i) {
    const Complex slope = eval_with_derivative(cubic, b0).derivative;
    if (slope == Complex{0}) break;
    const Complex next = b0 - value / slope;
    const Complex next_value = c1_at(next);
    if (!(std::abs(next_value) < std::abs(value))) break;
    b0 = next;
    value = next_value;
  }
  return b0;
}

inline ResolventCubicCoeffs resolvent_cubic_by_elimination(
    const QuarticCoeffs& a, Real threshold = kDefaultDegeneracyThreshold) {
  if (is_degenerate(a, threshold)) throw DegenerateQuartic("a3^2 - 2 a2 vanishes");
  const auto roots = aberth_all_roots(a.polynomial()).roots;
  return resolvent_from_roots(a, roots, threshold);
}

/// Roots b0 of the interpolated resolvent cubic, each polished on c1(b0).
inline std::vector<Complex> resolvent_roots_by_elimination(
    const QuarticCoeffs& a, Real threshold = kDefaultDegeneracyThreshold) {
  if (is_degenerate(a, threshold)) throw DegenerateQuartic("a3^2 - 2 a2 vanishes");
  const auto roots = aberth_all_roots(a.polynomial()).roots;
  const auto rc = resolvent_from_roots(a, roots, threshold);
  std::vector<Complex> out;
  for (const auto& b0 : aberth_all_roots(Polynomial{rc.b00, rc.b01, rc.b02, rc.b03}).roots) {
    out.push_back(polish_resolvent_root(a, roots, rc, b0, threshold));
  }
  return out;
}

}  // namespace polyroots
