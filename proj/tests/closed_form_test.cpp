#include "polyroots/closed_form.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <vector>

#include "test_support.hpp"

namespace polyroots {
namespace {

using testing::DiscSampler;
using testing::multiset_distance;

constexpr Complex I{0, 1};

TEST(BiquadraticRoots, Examples) {
  {
    // (y^2 - 1)(y^2 - 4)
    const auto y = biquadratic_roots({-5, 4});
    EXPECT_LE(std::abs(y[0] - Complex{2}), 1e-15);
    EXPECT_LE(std::abs(y[1] - Complex{-2}), 1e-15);
    EXPECT_LE(std::abs(y[2] - Complex{1}), 1e-15);
    EXPECT_LE(std::abs(y[3] - Complex{-1}), 1e-15);
  }
  {
    const auto y = biquadratic_roots({0, 0});
    for (const auto& v : y) EXPECT_EQ(v, Complex{0});
  }
  {
    const auto y = biquadratic_roots({0, -1});
    EXPECT_LE(std::abs(y[0] - Complex{1}), 1e-15);
    EXPECT_LE(std::abs(y[1] - Complex{-1}), 1e-15);
    EXPECT_LE(std::abs(y[2] - I), 1e-15);
    EXPECT_LE(std::abs(y[3] + I), 1e-15);
  }
}

TEST(BiquadraticRoots, PairedAndSubstituteBack) {
  DiscSampler sample(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const BiquadraticResolvent res{sample(10), sample(10)};
    const auto y = biquadratic_roots(res);
    EXPECT_EQ(y[1], -y[0]);
    EXPECT_EQ(y[3], -y[2]);
    for (const auto& v : y) {
      const Complex v2 = v * v;
      const Real residual = std::abs(v2 * v2 + res.B2 * v2 + res.B0) /
                            (1 + std::abs(res.B2) * std::norm(v) + std::abs(res.B0));
      EXPECT_LE(residual, 1e-11);
    }
  }
}

TEST(CardanoDelta, Examples) {
  // radicand = 864 + 12 sqrt(81 * 64) = 1728
  EXPECT_LE(std::abs(cardano_delta(-8, 0, 0, 0, 0).delta - Complex{12}), 1e-13);
  for (int branch = 0; branch < 3; ++branch) {
    EXPECT_EQ(cardano_delta(0, 0, 0, 0, branch).delta, Complex{0});
  }
  const Complex rotated = 12.0 * std::polar(1.0, 2 * std::numbers::pi / 3);
  const auto d1 = cardano_delta(-8, 0, 0, 0, 1);
  EXPECT_EQ(d1.branch, 1);
  EXPECT_LE(std::abs(d1.delta - rotated), 1e-13);
}

TEST(CardanoDelta, CubedEqualsRadicand) {
  // y enters only through b0 + y.
  const Complex b0{0.3, -1.2}, b1{2, 0.5}, b2{-1, 1}, y{0.7, 0.1};
  const Complex c = b0 + y;
  const Complex radicand =
      36.0 * b1 * b2 - 108.0 * c - 8.0 * b2 * b2 * b2 +
      12.0 * std::sqrt(12.0 * b1 * b1 * b1 - 3.0 * b1 * b1 * b2 * b2 - 54.0 * b1 * b2 * c +
                       81.0 * c * c + 12.0 * c * b2 * b2 * b2);
  for (int branch = 0; branch < 3; ++branch) {
    const Complex d = cardano_delta(b0, b1, b2, y, branch).delta;
    EXPECT_LE(std::abs(d * d * d - radicand), 1e-12 * std::abs(radicand));
  }
  EXPECT_EQ(cardano_delta(b0, b1, b2, y, 0).delta, cardano_delta(c, b1, b2, 0, 0).delta);
}

TEST(CubicRoots, Examples) {
  const auto x = cubic_roots(-8, 0, 0, 0, 0);
  const Complex s3{0, std::numbers::sqrt3};
  EXPECT_LE(std::abs(x[0] - Complex{2}), 1e-14);
  EXPECT_LE(std::abs(x[1] - (-1.0 + s3)), 1e-14);
  EXPECT_LE(std::abs(x[2] - (-1.0 - s3)), 1e-14);

  // (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
  const auto r = cubic_roots(-6, 11, -6, 0, 0);
  EXPECT_LE(multiset_distance({r.begin(), r.end()}, {1, 2, 3}), 1e-12);

  EXPECT_THROW(cubic_roots(0, 0, 0, 0, 0), DegenerateCubic);
}

TEST(CubicRoots, PrincipalZeroRadicandIsNotDegenerate) {
  // x^3 + 8 = 0 has a vanishing radicand under the principal inner root.
  EXPECT_EQ(cardano_delta(8, 0, 0, 0, 0).delta, Complex{0});
  const auto r = cubic_roots(8, 0, 0, 0, 0);
  const Complex s3{0, std::numbers::sqrt3};
  EXPECT_LE(multiset_distance({r.begin(), r.end()}, {-2, 1.0 + s3, 1.0 - s3}), 1e-14);
}

TEST(CubicRoots, SubstituteAndSumToMinusB2) {
  DiscSampler sample(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex b0 = sample(3), b1 = sample(3), b2 = sample(3), y = sample(3);
    const auto x = cubic_roots(b0, b1, b2, y, 0);
    EXPECT_LE(std::abs(x[0] + x[1] + x[2] + b2), 1e-10 * (1 + std::abs(b2)));
    const Polynomial p{b0 + y, b1, b2, 1};
    for (const auto& r : x) EXPECT_LE(relative_residual(p, r), 1e-11);
  }
}

TEST(CubicRoots, BranchesPermuteTheRoots) {
  DiscSampler sample(23);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex b0 = sample(3), b1 = sample(3), b2 = sample(3), y = sample(3);
    if (std::abs(cardano_delta(b0, b1, b2, y, 0, SqrtChoice::larger_magnitude).delta) <= 1e-6)
      continue;
    const auto x0 = cubic_roots(b0, b1, b2, y, 0);
    for (int branch = 1; branch < 3; ++branch) {
      const auto xb = cubic_roots(b0, b1, b2, y, branch);
      EXPECT_LE(multiset_distance({xb.begin(), xb.end()}, {x0.begin(), x0.end()}), 1e-9);
    }
    ++checked;
  }
  EXPECT_GT(checked, 900);
}

TEST(QuadraticRoots, StableForWidelySeparatedRoots) {
  // (x - 1e8)(x - 1e-8)
  const auto r = quadratic_roots(1, -(1e8 + 1e-8), 1);
  EXPECT_LE(multiset_distance({r.begin(), r.end()}, {1e8, 1e-8}), 1e-15);
  EXPECT_LE(std::abs(r[1] - 1e-8) / 1e-8, 1e-14);
}

}  // namespace
}  // namespace polyroots
