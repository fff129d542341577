#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "polyroots/errors.hpp"
#include "polyroots/poly_core.hpp"

namespace polyroots {

/// y^4 + B2 y^2 + B0, a quadratic in y^2.
struct BiquadraticResolvent {
  Complex B2;
  Complex B0;
};

/// One of the three cube roots feeding the radical cubic formula.
struct CardanoDiscriminant {
  Complex delta;
  int branch = 0;
};

/// Which square root of the inner discriminant enters the cube-root radicand.
enum class SqrtChoice {
  principal,
  // The sign that maximizes |radicand|; avoids cancellation and a spurious
  // zero radicand (x^3 + 8 = 0 under the principal root, for instance).
  larger_magnitude,
};

namespace detail {

inline const Complex& cube_root_of_unity(int branch) {
  static const std::array<Complex, 3> w{
      Complex{1, 0},
      std::polar(Real{1}, 2 * std::numbers::pi_v<Real> / 3),
      std::polar(Real{1}, 4 * std::numbers::pi_v<Real> / 3)};
  return w.at(static_cast<std::size_t>(branch));
}

inline Complex principal_cbrt(const Complex& z) {
  if (z == Complex{0}) return Complex{0};
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3);
}

}  // namespace detail

/// The four roots (y1, y2, y3, y4) of y^4 + B2 y^2 + B0 = 0:
///   y1 = 1/2 sqrt(-2 B2 + 2 sqrt(B2^2 - 4 B0)),  y2 = -y1,
///   y3 = 1/2 sqrt(-2 B2 - 2 sqrt(B2^2 - 4 B0)),  y4 = -y3,
/// principal roots throughout.
///
/// The smaller of the two y^2 values is recomputed from the product
/// relation y1^2 y3^2 = B0, which is the same number without the
/// cancellation of the direct form.
inline std::array<Complex, 4> biquadratic_roots(const BiquadraticResolvent& res) {
  const Complex disc = std::sqrt(res.B2 * res.B2 - Real{4} * res.B0);
  Complex plus = (-res.B2 + disc) / Real{2};
  Complex minus = (-res.B2 - disc) / Real{2};
  if (std::abs(plus) >= std::abs(minus)) {
    if (plus != Complex{0}) minus = res.B0 / plus;
  } else {
    plus = res.B0 / minus;
  }
  const Complex y1 = std::sqrt(plus);
  const Complex y3 = std::sqrt(minus);
  return {y1, -y1, y3, -y3};
}

/// Cube root (branch k rotates by exp(2 pi i k / 3)) of
///   36 b1 b2 - 108 (y + b0) - 8 b2^3
///     + 12 sqrt(12 b1^3 - 3 b1^2 b2^2 - 54 b1 b2 (y + b0) + 81 (y + b0)^2
///               + 12 (y + b0) b2^3),
/// the radicand for x^3 + b2 x^2 + b1 x + (b0 + y) = 0.
inline CardanoDiscriminant cardano_delta(const Complex& b0, const Complex& b1,
                                         const Complex& b2, const Complex& y, int branch,
                                         SqrtChoice choice = SqrtChoice::principal) {
  const Complex c = b0 + y;
  const Complex b1sq = b1 * b1;
  const Complex b2sq = b2 * b2;
  const Complex b2cube = b2sq * b2;
  const Complex outer = Real{36} * b1 * b2 - Real{108} * c - Real{8} * b2cube;
  const Complex inner = Real{12} * b1sq * b1 - Real{3} * b1sq * b2sq -
                        Real{54} * b1 * b2 * c + Real{81} * c * c +
                        Real{12} * c * b2cube;
  const Complex root = Real{12} * std::sqrt(inner);
  Complex radicand = outer + root;
  if (choice == SqrtChoice::larger_magnitude && std::abs(outer - root) > std::abs(radicand)) {
    radicand = outer - root;
  }
  return {detail::principal_cbrt(radicand) * detail::cube_root_of_unity(branch), branch};
}

/// Roots of x^3 + b2 x^2 + b1 x + (b0 + y) = 0 from one cube root Delta:
///   x1 = Delta/6 - 2T - b2/3
///   x2 = -Delta/12 + T - b2/3 + i sqrt(3) (Delta/12 + T)
///   x3 = -Delta/12 + T - b2/3 - i sqrt(3) (Delta/12 + T)
/// with T = (b1 - b2^2/3) / Delta. Changing the branch permutes the roots.
inline std::array<Complex, 3> cubic_roots(const Complex& b0, const Complex& b1,
                                          const Complex& b2, const Complex& y, int branch) {
  const Complex delta =
      cardano_delta(b0, b1, b2, y, branch, SqrtChoice::larger_magnitude).delta;
  if (std::abs(delta) < 1e-300) {
    throw DegenerateCubic("cube-root radicand vanishes (triple root)");
  }
  const Complex t = (b1 - b2 * b2 / Real{3}) / delta;
  const Complex shift = b2 / Real{3};
  const Complex rot = Complex{0, std::numbers::sqrt3_v<Real>} * (delta / Real{12} + t);
  const Complex base = -delta / Real{12} + t - shift;
  return {delta / Real{6} - Real{2} * t - shift, base + rot, base - rot};
}

/// Roots of c2 x^2 + c1 x + c0 with c2 != 0, cancellation-free.
inline std::array<Complex, 2> quadratic_roots(const Complex& c2, const Complex& c1,
                                              const Complex& c0) {
  const Complex disc = std::sqrt(c1 * c1 - Real{4} * c2 * c0);
  // Pick the sign that makes |c1 + sign*disc| large.
  const Complex q = (std::real(std::conj(c1) * disc) >= 0) ? -(c1 + disc) / Real{2}
                                                           : -(c1 - disc) / Real{2};
  if (q == Complex{0}) return {Complex{0}, Complex{0}};
  return {q / c2, c0 / q};
}

}  // namespace polyroots
