#pragma once

#include <cmath>

#include "polyroots/errors.hpp"
#include "polyroots/poly_core.hpp"

namespace polyroots {

/// Monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0.
struct QuarticCoeffs {
  Complex a0, a1, a2, a3;

  static QuarticCoeffs from(const Polynomial& monic_quartic) {
    return {monic_quartic.coeff(0), monic_quartic.coeff(1), monic_quartic.coeff(2),
            monic_quartic.coeff(3)};
  }

  Polynomial polynomial() const { return Polynomial{a0, a1, a2, a3, Complex{1}}; }
};

/// Cubic transform y = -(x^3 + b2 x^2 + b1 x + b0).
struct TschirnhausCubic {
  Complex b0, b1, b2;
};

/// b03 t^3 + b02 t^2 + b01 t + b00; any root t is a valid b0.
struct ResolventCubicCoeffs {
  Complex b00, b01, b02, b03;
};

/// a3^2 - 2 a2, the power sum of the squared roots. It divides b2 and the
/// resolvent coefficients.
inline Complex transform_denominator(const QuarticCoeffs& a) {
  return a.a3 * a.a3 - Real{2} * a.a2;
}

inline constexpr Real kDefaultDegeneracyThreshold = 1e-6;

inline bool is_degenerate(const QuarticCoeffs& a,
                          Real threshold = kDefaultDegeneracyThreshold) {
  return std::abs(transform_denominator(a)) <=
         threshold * (1 + std::norm(a.a3) + std::abs(a.a2));
}

/// b2 = (a3^3 + 3 a1 - 4 b0 + b1 a3 - 3 a3 a2) / (a3^2 - 2 a2).
///
/// This makes the sum of the transformed roots vanish, i.e. kills the y^3
/// term of the transformed quartic.
inline Complex compute_b2(const QuarticCoeffs& a, const Complex& b0, const Complex& b1,
                          Real threshold = kDefaultDegeneracyThreshold) {
  if (is_degenerate(a, threshold)) {
    throw DegenerateQuartic("a3^2 - 2 a2 vanishes");
  }
  const auto& [a0, a1, a2, a3] = a;
  return (a3 * a3 * a3 + Real{3} * a1 - Real{4} * b0 + b1 * a3 - Real{3} * a3 * a2) /
         transform_denominator(a);
}

namespace detail {

struct Powers {
  Complex p1, p2, p3, p4, p5, p6, p7;
  explicit Powers(const Complex& x)
      : p1(x), p2(x * x), p3(p2 * x), p4(p3 * x), p5(p4 * x), p6(p5 * x), p7(p6 * x) {}
};

}  // namespace detail

// The expressions below are expanded term by term in a fixed order, so each
// one can be checked against the symbolic expansion line by line.

/// Coefficients of the resolvent cubic whose root b0 removes the linear term
/// of the transformed quartic (taking b1 = 0).
///
/// The sign joining "64 a3^2 a0^2 a2" and "240 a3 a1^3 a2" in b01 is "+";
/// a "-" leaves a residue of 480 a1^3 a2 a3 against the eliminant's linear
/// coefficient.
inline ResolventCubicCoeffs resolvent_cubic_coeffs(
    const QuarticCoeffs& a, Real threshold = kDefaultDegeneracyThreshold) {
  if (is_degenerate(a, threshold)) {
    throw DegenerateQuartic("a3^2 - 2 a2 vanishes");
  }
  const auto& a0 = a.a0;
  const auto& a1 = a.a1;
  const auto& a2 = a.a2;
  const auto& a3 = a.a3;
  const detail::Powers P0(a0), P1(a1), P2(a2), P3(a3);
  const Complex& a0_2 = P0.p2;
  const Complex &a1_2 = P1.p2, &a1_3 = P1.p3, &a1_4 = P1.p4, &a1_5 = P1.p5;
  const Complex &a2_2 = P2.p2, &a2_3 = P2.p3, &a2_4 = P2.p4, &a2_5 = P2.p5, &a2_6 = P2.p6;
  const Complex &a3_2 = P3.p2, &a3_3 = P3.p3, &a3_4 = P3.p4, &a3_5 = P3.p5, &a3_6 = P3.p6,
                &a3_7 = P3.p7;

  const Complex b00 =
      a0_2 * a3_7 + Real{20} * a2_3 * a1_3 + Real{2} * a3_6 * a1_3
      + Real{18} * a3_3 * a1_4 - Real{36} * a1 * a2_3 * a0 * a3_2
      + Real{150} * a3 * a1_2 * a2_2 * a0 + Real{29} * a1 * a2_2 * a3_4 * a0
      - Real{54} * a3_3 * a1_2 * a0 * a2 - Real{4} * a3_6 * a0 * a1 * a2
      - Real{48} * a3_2 * a0_2 * a1 * a2 + Real{27} * a1_5 - a3_5 * a2_2 * a1_2
      + Real{28} * a3_3 * a0_2 * a2_2 - Real{24} * a2_3 * a0_2 * a3
      + Real{48} * a2_2 * a0_2 * a1 + Real{24} * a2_5 * a0 * a3
      + Real{12} * a3_4 * a0_2 * a1 - Real{10} * a3_5 * a0_2 * a2
      - Real{14} * a3_3 * a0 * a2_4 + Real{2} * a3_5 * a0 * a2_3
      - Real{12} * a3 * a2_4 * a1_2 + Real{7} * a3_3 * a2_3 * a1_2
      - Real{48} * a1 * a2_4 * a0 + Real{3} * a3_5 * a1_2 * a0
      + Real{21} * a2_2 * a1_3 * a3_2 - Real{15} * a2 * a1_3 * a3_4
      - Real{72} * a1_3 * a2 * a0 + Real{9} * a1_3 * a3_2 * a0
      - Real{63} * a3 * a1_4 * a2;

  const Complex b01 =
      -Real{10} * a3_6 * a1_2 - Real{84} * a3_3 * a1_3 + Real{80} * a0 * a2_4
      - Real{76} * a2_3 * a1_2 - Real{64} * a0_2 * a2_2 - Real{2} * a3_4 * a2_4
      + Real{12} * a3_2 * a2_5 - Real{16} * a3_4 * a0_2 - Real{108} * a1_4
      - Real{16} * a2_6 + Real{120} * a3_3 * a1 * a2 * a0
      - Real{344} * a3 * a1 * a2_2 * a0 + Real{16} * a2_3 * a3_2 * a0
      - Real{10} * a3_5 * a1 * a0 - Real{24} * a2_2 * a3_4 * a0
      - Real{74} * a2_2 * a1_2 * a3_2 + Real{70} * a2 * a1_2 * a3_4
      + Real{72} * a3 * a2_4 * a1 - Real{52} * a3_3 * a2_3 * a1
      + Real{8} * a3_5 * a2_2 * a1 + Real{4} * a3_6 * a0 * a2
      + Real{64} * a3_2 * a0_2 * a2 + Real{240} * a3 * a1_3 * a2
      + Real{12} * a3_2 * a0 * a1_2 + Real{192} * a0 * a2 * a1_2;

  const Complex b02 =
      -Real{64} * a3_3 * a2 * a0 + Real{8} * a3_5 * a0 + Real{16} * a1 * a3_6
      - Real{104} * a1 * a3_4 * a2 + Real{112} * a3_2 * a1 * a2_2
      - Real{64} * a3 * a2_4 + Real{128} * a1_2 * a3_3 - Real{8} * a3_5 * a2_2
      - Real{304} * a3 * a2 * a1_2 + Real{144} * a1_3 + Real{64} * a1 * a2_3
      + Real{48} * a3_3 * a2_3 + Real{192} * a0 * a3 * a2_2
      - Real{80} * a1 * a3_2 * a0 - Real{128} * a1 * a2 * a0;

  const Complex b03 =
      -Real{64} * a3_2 * a2_2 + Real{48} * a3_4 * a2 - Real{8} * a3_6
      + Real{64} * a3_2 * a0 - Real{64} * a1_2 + Real{128} * a3 * a2 * a1
      - Real{64} * a1 * a3_3;

  const Complex d = transform_denominator(a);
  const Complex d3 = d * d * d;
  return {b00 / d3, b01 / d3, b02 / d3, b03 / d3};
}

/// y^2 coefficient of the transformed quartic.
inline Complex compute_B2(const QuarticCoeffs& a, const TschirnhausCubic& t) {
  const auto& [a0, a1, a2, a3] = a;
  const auto& [b0, b1, b2] = t;
  const Complex a1_2 = a1 * a1, a2_2 = a2 * a2, a2_3 = a2_2 * a2;
  const Complex a3_2 = a3 * a3, a3_3 = a3_2 * a3;
  const Complex b0_2 = b0 * b0, b1_2 = b1 * b1, b2_2 = b2 * b2;
  return
      a3_2 * a2 * b1 + Real{2} * a1 * b2 * a3_2 - Real{6} * b0 * b2 * a2
      - Real{5} * b2 * a3 * a0 + Real{4} * b1 * a0 - Real{3} * a2 * a0
      + Real{3} * a3_2 * a0 - Real{3} * a3 * a2 * a1 - Real{3} * b0 * a3_3
      + Real{6} * b0_2 - Real{9} * b0 * a1 + b2_2 * a2_2 + Real{3} * a1_2
      - Real{2} * b1 * a2_2 + b1_2 * a2 - b2 * a2 * b1 * a3 - a3 * a2_2 * b2 + a2_3
      + Real{3} * b1 * b2 * a1 - a1 * b1 * a3 - Real{3} * b0 * b1 * a3
      + Real{3} * b0 * b2 * a3_2 + Real{2} * a0 * b2_2 + Real{9} * a3 * a2 * b0
      + b2 * a2 * a1 - Real{2} * b2_2 * a3 * a1;
}

/// Constant term of the transformed quartic.
inline Complex compute_B0(const QuarticCoeffs& a, const TschirnhausCubic& t) {
  const auto& [a0, a1, a2, a3] = a;
  const auto& [b0, b1, b2] = t;
  const detail::Powers P0(a0), P1(a1), P2(a2), P3(a3), Q0(b0), Q1(b1), Q2(b2);
  const Complex &a0_2 = P0.p2, &a0_3 = P0.p3;
  const Complex &a1_2 = P1.p2, &a1_3 = P1.p3;
  const Complex &a2_2 = P2.p2, &a2_3 = P2.p3;
  const Complex &a3_2 = P3.p2, &a3_3 = P3.p3;
  const Complex &b0_2 = Q0.p2, &b0_3 = Q0.p3, &b0_4 = Q0.p4;
  const Complex &b1_2 = Q1.p2, &b1_3 = Q1.p3, &b1_4 = Q1.p4;
  const Complex &b2_2 = Q2.p2, &b2_3 = Q2.p3, &b2_4 = Q2.p4;
  return
      Real{3} * b0_2 * a3_2 * a0 + b0_3 * b2 * a3_2 + b0_2 * b2_2 * a2_2
      - Real{2} * b0_3 * b2 * a2 + Real{3} * a3 * a2 * b0_3 + b0 * b2_3 * a1_2
      - b0_3 * b1 * a3 + Real{4} * b0 * b2 * a0_2 + Real{4} * b0_2 * b1 * a0
      + b0_2 * b1_2 * a2 - Real{2} * b0_2 * b1 * a2_2 - b2_3 * a0_2 * a3
      - Real{2} * a0 * b1_3 * a2 + a3_2 * a0 * b1_3 - b2 * a0_2 * a1
      - Real{2} * b1 * a0_2 * a2 + b1 * a0 * a1_2 + a0 * b1_2 * a2_2
      + a1 * b0_2 * b2 * a2 - Real{3} * b0 * a3 * a0_2
      + Real{2} * a1 * b0_2 * b2 * a3_2 - Real{3} * a1 * a3 * a2 * b0_2
      + b0_2 * a3_2 * a2 * b1 - Real{5} * b0_2 * b2 * a3 * a0 - b0_2 * a3 * a2_2 * b2
      + Real{3} * b0_2 * b1 * b2 * a1 - Real{2} * b0_2 * b2_2 * a3 * a1
      - Real{2} * b0 * b2_3 * a0 * a2 - Real{4} * b0 * b2 * a0 * b1_2
      - Real{2} * b0 * b2 * a0 * a2_2 + Real{2} * b0 * a1 * b1_2 * a2
      + b0 * b2_2 * a0 * a1 - b0 * a3_2 * a1 * b1_2 + Real{2} * b0 * a3 * a1_2 * b1
      - b0 * b2_2 * a3 * a1_2 + b0 * b2 * a2 * a1_2 - b0 * a1 * b1 * a2_2
      + Real{3} * b0 * a1 * a2 * a0 - Real{3} * b0 * b1 * b2 * a1_2
      - Real{5} * b0 * a1 * b1 * a0 + Real{3} * b1 * b2 * a3 * a0_2
      + a0 * b0 * b1_2 * a3 + a0 * b1 * a3 * a2 * b0 - a0 * b1 * b2 * a2 * a1
      - a0 * b2 * a2 * b1_2 * a3 + Real{2} * b1_2 * a0_2 + b2_4 * a0_2 + b1_4 * a0
      - b0 * b1_3 * a1 + a0_2 * b2_2 * a2 - Real{4} * b2_2 * a0_2 * b1
      - Real{3} * a1 * b0_3 + Real{3} * b0_2 * a1_2 - b0 * a1_3
      - Real{3} * b0_2 * a2 * a0 + b0_4 + Real{2} * b2_2 * a0 * b0_2 - b0_3 * a3_3
      + b0_2 * a2_3 - a1 * b0_2 * b1 * a3 + a0_3 - b0_2 * b2 * a2 * b1 * a3
      - b0 * a1 * b2 * a3 * a0 + b0 * b2 * a1 * b1_2 * a3
      + Real{2} * b0 * a0 * b2_2 * a3 * a2 - Real{3} * b0 * a0 * b1 * b2 * a3_2
      + Real{4} * b0 * b2 * a0 * b1 * a2 + Real{3} * b0 * b2_2 * a0 * b1 * a3
      - b0 * b1 * a1 * b2_2 * a2 + b0 * a1 * b2 * a2 * b1 * a3
      + Real{3} * b1_2 * a0 * b2 * a1 - Real{2} * b1_2 * a0 * a1 * a3
      - b1 * a0 * b2_3 * a1 + b1_2 * a0 * b2_2 * a2 + b2_2 * a0 * b1 * a3 * a1
      - b2 * a0 * b1_3 * a3;
}

}  // namespace polyroots
