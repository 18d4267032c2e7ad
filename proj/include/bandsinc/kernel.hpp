#pragma once

#include <span>
#include <vector>

#include "bandsinc/geometry.hpp"
#include "bandsinc/windows.hpp"

namespace bandsinc {

/// sin(u)/u with the removable singularity filled in; a short Taylor series
/// is used for |u| < 1e-4.
double sinc(double u) noexcept;
/// Product of sinc over the components of u.
double sinc_eval(std::span<const double> u) noexcept;
/// sinc(pi * delta), exactly zero at nonzero integers and exactly one at zero.
double sinc_pi(double delta) noexcept;

/// psi(x) = sinc(L pi x) phi(x), the localized interpolation kernel.
class RegularizedSinc {
 public:
  explicit RegularizedSinc(WindowSpec window) : window_(window) {}

  const WindowSpec& window() const noexcept { return window_; }
  int grid_length() const noexcept { return window_.grid_length(); }
  int truncation() const noexcept { return window_.truncation(); }

  double operator()(double x) const noexcept { return at_offset(to_grid_units(x, grid_length())); }

  /// psi(delta / L) for an offset measured in grid units.
  double at_offset(double delta) const noexcept;

 private:
  WindowSpec window_;
};

/// d-variate tensor-product kernel value psi(x).
double psi_eval(const RegularizedSinc& kernel, std::span<const double> x) noexcept;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int nodes = 0;
};

/// Gauss-Legendre rule with n nodes on [-1, 1]; n in {32, 64, ..., 4096} is cached.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

/// Fourier transform of psi at a real frequency, psi_hat(v) = int psi(t) cos(2 pi v t) dt.
QuadratureResult psi_hat_1d(const RegularizedSinc& kernel, double v);
/// Fourier transform of the window at a real frequency.
QuadratureResult phi_hat_1d(const WindowSpec& window, double v);
/// Same integrals with a fixed node count, no convergence loop.
double psi_hat_1d_fixed(const RegularizedSinc& kernel, double v, int nodes);
double phi_hat_1d_fixed(const WindowSpec& window, double v, int nodes);

enum class FactorKind { PsiHat, PhiHat };

/// One-axis table of psi_hat(k) or phi_hat(k) for k in I_M. The d-variate
/// factor at k is the product of the table values over the axes.
class SpectralFactors {
 public:
  SpectralFactors(FactorKind kind, int bandwidth, std::vector<double> table, double error_estimate)
      : kind_(kind), M_(bandwidth), table_(std::move(table)), error_estimate_(error_estimate) {}

  FactorKind kind() const noexcept { return kind_; }
  int bandwidth() const noexcept { return M_; }
  std::span<const double> table() const noexcept { return table_; }
  double error_estimate() const noexcept { return error_estimate_; }

  double at(int k) const { return table_.at(static_cast<std::size_t>(k + M_ / 2)); }
  double at(std::span<const int> k) const;

  /// max_k |L * value(k) - 1| over the one-axis table.
  double flatness(int L) const noexcept;

 private:
  FactorKind kind_;
  int M_;
  std::vector<double> table_;
  double error_estimate_;
};

/// Tabulates psi_hat at k = -M/2 .. M/2-1. Throws SpectralFactorVanishes if
/// any |value| < 1e-12 and QuadratureNotConverged on quadrature failure.
SpectralFactors spectral_factors(const RegularizedSinc& kernel, int M);
/// Same for phi_hat.
SpectralFactors spectral_factors(const WindowSpec& window, int M);

}  // namespace bandsinc
