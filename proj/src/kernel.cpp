#include "bandsinc/kernel.hpp"

#include <cmath>
#include <numbers>

#include "bandsinc/error.hpp"

namespace bandsinc {

namespace {
constexpr double kSeriesThreshold = 1e-4;
constexpr double kVanishingFactor = 1e-12;
}  // namespace

double sinc(double u) noexcept {
  if (std::abs(u) < kSeriesThreshold) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double sinc_eval(std::span<const double> u) noexcept {
  double value = 1.0;
  for (double component : u) value *= sinc(component);
  return value;
}

double sinc_pi(double delta) noexcept {
  const double u = std::numbers::pi * delta;
  if (std::abs(u) < kSeriesThreshold) return sinc(u);
  // Reduce around the nearest integer so integer offsets give exact zeros.
  const double nearest = std::nearbyint(delta);
  const double rest = delta - nearest;
  double s = std::sin(std::numbers::pi * rest);
  if (std::fmod(nearest, 2.0) != 0.0) s = -s;
  return s / u;
}

double RegularizedSinc::at_offset(double delta) const noexcept {
  const double s = delta / truncation();
  if (!(std::abs(s) < 1.0)) return 0.0;
  return sinc_pi(delta) * window_.scaled(s);
}

double psi_eval(const RegularizedSinc& kernel, std::span<const double> x) noexcept {
  double value = 1.0;
  for (double component : x) value *= kernel(component);
  return value;
}

double SpectralFactors::at(std::span<const int> k) const {
  double value = 1.0;
  for (int component : k) value *= at(component);
  return value;
}

double SpectralFactors::flatness(int L) const noexcept {
  double worst = 0.0;
  for (double value : table_) worst = std::max(worst, std::abs(L * value - 1.0));
  return worst;
}

namespace {

template <class Transform>
SpectralFactors tabulate(FactorKind kind, int M, int L, const Transform& transform) {
  if (M < 2 || M % 2 != 0 || M > L) {
    throw Error(Errc::ShapeMismatch, "spectral factors need even M <= L (M=" + std::to_string(M) + ", L=" + std::to_string(L) + ")");
  }
  std::vector<double> table(static_cast<std::size_t>(M));
  double error = 0.0;
  for (int k = -M / 2; k < M / 2; ++k) {
    const QuadratureResult q = transform(static_cast<double>(k));
    if (!(std::abs(q.value) >= kVanishingFactor)) {
      throw SpectralFactorVanishes(k, q.value, "spectral factor at k = " + std::to_string(k) + " is " + std::to_string(q.value));
    }
    table[static_cast<std::size_t>(k + M / 2)] = q.value;
    error = std::max(error, q.error_estimate);
  }
  return SpectralFactors(kind, M, std::move(table), error);
}

}  // namespace

SpectralFactors spectral_factors(const RegularizedSinc& kernel, int M) {
  return tabulate(FactorKind::PsiHat, M, kernel.grid_length(), [&](double v) { return psi_hat_1d(kernel, v); });
}

SpectralFactors spectral_factors(const WindowSpec& window, int M) {
  return tabulate(FactorKind::PhiHat, M, window.grid_length(), [&](double v) { return phi_hat_1d(window, v); });
}

}  // namespace bandsinc
