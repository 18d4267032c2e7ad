#include <gtest/gtest.h>

#include <random>

#include "bandsinc/geometry.hpp"
#include "bandsinc/oracle.hpp"
#include "bandsinc/spectral.hpp"

namespace bandsinc {
namespace {

std::vector<Complex> random_values(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) z = Complex(dist(rng), dist(rng));
  return v;
}

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TEST(ZeroPad, PlacesInnerBlock) {
  const Complex a(1.0, 2.0);
  const Complex b(-3.0, 0.5);
  const std::vector<Complex> inner{a, b};
  const auto grid = zero_pad_embed(inner, 2, 4, 1);
  EXPECT_EQ(grid.values, (std::vector<Complex>{0.0, a, b, 0.0}));
}

TEST(ZeroPad, IdentityWhenSizesMatch) {
  const auto inner = random_values(36, 1);
  EXPECT_EQ(zero_pad_embed(inner, 6, 6, 2).values, inner);
}

TEST(ZeroPad, TwoDimensionalPlacement) {
  const auto inner = random_values(16, 2);
  const auto grid = zero_pad_embed(inner, 4, 8, 2);
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    const MultiIndex k = multi_index(i, 8, 2);
    const bool inside = k[0] >= -2 && k[0] < 2 && k[1] >= -2 && k[1] < 2;
    if (inside) {
      EXPECT_EQ(grid.values[i], inner[linear_index(k, 4)]);
    } else {
      EXPECT_EQ(grid.values[i], Complex(0.0));
    }
  }
  EXPECT_EQ(zero_pad_embed(std::vector<Complex>(16), 4, 8, 2).values, std::vector<Complex>(64));
}

TEST(InverseDft, OrthogonalityIdentities) {
  for (int d : {1, 2}) {
    const int L = 12;
    const std::size_t n = ipow(L, d);
    const auto ones = inverse_dft_grid(GridCoefficients{L, d, std::vector<Complex>(n, 1.0)}).values;
    const std::size_t origin = linear_index(MultiIndex(d, 0), L);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(ones[i] - (i == origin ? 1.0 : 0.0)), 0.0, 1e-15);

    GridCoefficients constant{L, d, std::vector<Complex>(n)};
    constant.values[origin] = static_cast<double>(n);
    for (const Complex& z : inverse_dft_grid(constant).values) EXPECT_NEAR(std::abs(z - 1.0), 0.0, 1e-15);
  }
}

TEST(InverseDft, MatchesLiteralSum) {
  unsigned seed = 10;
  for (int d : {1, 2}) {
    for (int L : {4, 8, 12, 16, 20, 40}) {
      const GridCoefficients c{L, d, random_values(ipow(L, d), seed++)};
      const auto fast = inverse_dft_grid(c).values;
      const auto slow = oracle::direct_dft(c).values;
      double scale = 0.0;
      for (const auto& z : slow) scale = std::max(scale, std::abs(z));
      EXPECT_LE(max_abs_diff(fast, slow) / scale, 1e-13) << "d=" << d << " L=" << L;
    }
  }
}

TEST(InverseDft, Parseval) {
  const int L = 20;
  for (int d : {1, 2}) {
    const GridCoefficients c{L, d, random_values(ipow(L, d), 77)};
    const auto samples = inverse_dft_grid(c).values;
    double lhs = 0.0;
    double rhs = 0.0;
    for (const auto& z : samples) lhs += std::norm(z);
    for (const auto& z : c.values) rhs += std::norm(z);
    EXPECT_NEAR(lhs * static_cast<double>(ipow(L, d)) / rhs, 1.0, 1e-12);
  }
}

TEST(InverseDft, LinearAndDeterministic) {
  const int L = 16;
  const auto a = random_values(L * L, 3);
  const auto b = random_values(L * L, 4);
  const Complex alpha(0.3, -1.2);
  const Complex beta(-0.7, 0.25);
  std::vector<Complex> combo(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) combo[i] = alpha * a[i] + beta * b[i];
  const auto fa = inverse_dft_grid({L, 2, a}).values;
  const auto fb = inverse_dft_grid({L, 2, b}).values;
  const auto fc = inverse_dft_grid({L, 2, combo}).values;
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < fc.size(); ++i) {
    worst = std::max(worst, std::abs(fc[i] - (alpha * fa[i] + beta * fb[i])));
    scale = std::max(scale, std::abs(fc[i]));
  }
  EXPECT_LE(worst / scale, 1e-13);
  EXPECT_EQ(inverse_dft_grid({L, 2, a}).values, fa);
}

}  // namespace
}  // namespace bandsinc
