#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "polyroots/errors.hpp"

namespace polyroots {

// Precision is fixed here; every module computes in these two types.
using Real = double;
using Complex = std::complex<Real>;

/// Complex polynomial with coefficients stored in ascending powers.
///
/// Trailing exact zeros are trimmed on construction, so `degree()` is the
/// index of the highest nonzero coefficient. The zero polynomial keeps a
/// single zero coefficient and reports degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0}} {}

  explicit Polynomial(std::vector<Complex> ascending)
      : coeffs_(std::move(ascending)) {
    trim();
  }

  Polynomial(std::initializer_list<Complex> ascending)
      : Polynomial(std::vector<Complex>(ascending)) {}

  static Polynomial from_descending(std::span<const Complex> descending) {
    return Polynomial(std::vector<Complex>(descending.rbegin(), descending.rend()));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const noexcept {
    return coeffs_.size() == 1 && coeffs_.front() == Complex{0};
  }

  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }

  // Zero beyond the degree.
  Complex coeff(int k) const {
    return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : Complex{0};
  }

  const Complex& leading() const noexcept { return coeffs_.back(); }

  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex{0}) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Complex{0});
  }

  std::vector<Complex> coeffs_;
};

/// Roots sorted lexicographically by (re, im), with parallel residuals.
struct RootSet {
  std::vector<Complex> roots;
  std::vector<Real> residuals;
};

inline bool lexicographic_less(const Complex& a, const Complex& b) noexcept {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

inline void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), lexicographic_less);
}

inline Polynomial normalize_monic(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("all coefficients are zero");
  const Complex lead = p.leading();
  std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
  for (auto& ck : c) ck /= lead;
  c.back() = Complex{1};
  return Polynomial(std::move(c));
}

inline Complex eval_horner(const Polynomial& p, const Complex& x) {
  const auto c = p.coefficients();
  Complex acc{0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};

inline ValueAndDerivative eval_with_derivative(const Polynomial& p, const Complex& x) {
  const auto c = p.coefficients();
  Complex value{0};
  Complex derivative{0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    derivative = derivative * x + value;
    value = value * x + *it;
  }
  return {value, derivative};
}

/// |p(x)| / max(1, sum_k |a_k| |x|^k).
///
/// The denominator is the magnitude scale of the terms being summed, so the
/// result is a backward-error measure that is meaningful for both tiny and
/// huge roots.
inline Real relative_residual(const Polynomial& p, const Complex& x) {
  const Real ax = std::abs(x);
  Real scale = 0;
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
    scale = scale * ax + std::abs(*it);
  }
  return std::abs(eval_horner(p, x)) / std::max(Real{1}, scale);
}

inline RootSet make_root_set(const Polynomial& p, std::vector<Complex> roots) {
  sort_roots(roots);
  RootSet out;
  out.residuals.reserve(roots.size());
  for (const auto& r : roots) out.residuals.push_back(relative_residual(p, r));
  out.roots = std::move(roots);
  return out;
}

/// Synthetic division of p by (x - r), discarding the remainder.
///
/// For a monic quintic x^5 + m x^4 + n x^3 + p x^2 + q x + r this yields
///   a3 = m + r1
///   a2 = n + m r1 + r1^2
///   a1 = p + n r1 + m r1^2 + r1^3
///   a0 = q + p r1 + n r1^2 + m r1^3 + r1^4
/// The cubic term of a0 is m r1^3, as the division identity requires.
inline Polynomial deflate(const Polynomial& p, const Complex& r) {
  const int d = p.degree();
  if (d < 1) return Polynomial{};
  std::vector<Complex> q(static_cast<std::size_t>(d));
  Complex carry = p.leading();
  for (int k = d - 1; k >= 0; --k) {
    q[static_cast<std::size_t>(k)] = carry;
    carry = carry * r + p[static_cast<std::size_t>(k)];
  }
  return Polynomial(std::move(q));
}

/// q(z) = p(z + s), by repeated synthetic division (Taylor shift).
inline Polynomial shift(const Polynomial& p, const Complex& s) {
  std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) c[k] += s * c[k + 1];
  }
  return Polynomial(std::move(c));
}

/// Elementary symmetric functions e_0..e_n of the given values.
inline std::vector<Complex> elementary_symmetric(std::span<const Complex> values) {
  std::vector<Complex> e(values.size() + 1, Complex{0});
  e[0] = 1;
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += values[j] * e[k - 1];
  }
  return e;
}

/// max_k |e_k(roots) - (-1)^k a_{d-k}| for monic p of degree d = |roots|.
inline Real vieta_defect(const Polynomial& p, std::span<const Complex> roots) {
  const auto e = elementary_symmetric(roots);
  const int d = static_cast<int>(roots.size());
  Real defect = 0;
  for (int k = 1; k <= d; ++k) {
    const Complex expected = (k % 2 == 0 ? Real{1} : Real{-1}) * p.coeff(d - k);
    defect = std::max(defect, std::abs(e[static_cast<std::size_t>(k)] - expected));
  }
  return defect;
}

/// Newton steps on p starting at x. A step is kept only if it lowers |p|.
inline Complex newton_polish(const Polynomial& p, Complex x, int steps) {
  for (int i = 0; i < steps; ++i) {
    const auto [value, derivative] = eval_with_derivative(p, x);
    if (value == Complex{0} || derivative == Complex{0}) break;
    const Complex next = x - value / derivative;
    if (!(std::abs(eval_horner(p, next)) < std::abs(value))) break;
    x = next;
  }
  return x;
}

}  // namespace polyroots
