#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bandsinc/geometry.hpp"

namespace bandsinc {

enum class WindowFamily { SinhType, ContinuousKaiserBessel };

std::string_view to_string(WindowFamily family) noexcept;
/// Accepts "sinh" and "ckb" (plus the long names).
WindowFamily parse_window_family(std::string_view text);

/// Even window supported on [-m/L, m/L] with values in [0, 1] and phi(0) = 1.
class WindowSpec {
 public:
  /// Throws InvalidWindow unless beta > 0, m >= 1 and 2m < L.
  WindowSpec(WindowFamily family, double beta, int m, int L);

  WindowFamily family() const noexcept { return family_; }
  double beta() const noexcept { return beta_; }
  int truncation() const noexcept { return m_; }
  int grid_length() const noexcept { return L_; }
  /// Support radius m/L.
  double radius() const noexcept { return radius_; }

  double operator()(double x) const noexcept;

  /// Window as a function of the scaled argument s = L x / m; zero for |s| >= 1.
  double scaled(double s) const noexcept;

 private:
  WindowFamily family_;
  double beta_;
  int m_;
  int L_;
  double radius_;
  double normalizer_;
};

double window_eval(const WindowSpec& spec, double x) noexcept;
/// Tensor-product evaluation, product of the 1-D values.
double window_eval(const WindowSpec& spec, std::span<const double> x) noexcept;

/// Modified Bessel function of the first kind, order zero, z >= 0.
double bessel_i0(double z);
/// I0(z) - 1 without cancellation for small z.
double bessel_i0_minus_one(double z);

/// Shape parameter chosen by a measured sweep over pi*m*2^(j/8), j = -16..8.
/// Results are memoised per (family, m, lambda). Throws CalibrationDegenerate
/// when every candidate error exceeds 0.5.
double default_beta(WindowFamily family, int m, Rational lambda);

struct BetaCandidate {
  double beta;
  double max_error;
};

/// Full sweep behind default_beta: one entry per candidate, in grid order.
std::vector<BetaCandidate> beta_calibration_sweep(WindowFamily family, int m, Rational lambda);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  double worst_x = 0.0;
  double worst_defect = 0.0;
};

struct WindowAxiomsReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const noexcept;
};

/// Probes evenness, range, monotonicity, phi(0) = 1 and phi(+-m/L) = 0 on an
/// equispaced grid of `samples` points over [-m/L, m/L].
WindowAxiomsReport window_axioms_report(const WindowSpec& spec, int samples);

}  // namespace bandsinc
