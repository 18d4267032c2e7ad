#pragma once

#include <optional>
#include <vector>

#include "bandsinc/geometry.hpp"
#include "bandsinc/transforms.hpp"
#include "bandsinc/windows.hpp"

namespace bandsinc::bench {

enum class SweepInterval { Full, Truncated };
enum class ApproxMethod { NfftApprox, BandlimitedApprox };

/// Exponential-approximation sweep in one dimension. Frequencies are
/// v_s = -M/2 - m + s/S for s = 0 .. S(M + 2m); probes are P equispaced,
/// left-closed points over the chosen interval.
struct ExpSweepConfig {
  Geometry geometry;
  WindowSpec window;
  int S = 32;
  int P = 1000;
  SweepInterval interval = SweepInterval::Truncated;
  ApproxMethod method = ApproxMethod::BandlimitedApprox;
  /// Optional filter: only frequencies with |v| <= max_abs_frequency are evaluated.
  std::optional<double> max_abs_frequency;
};

struct SweepRow {
  double v = 0.0;
  double error = 0.0;
};

std::vector<double> sweep_frequencies(int M, int m, int S);
std::vector<double> probe_points(const Geometry& geometry, SweepInterval interval, int P);

std::vector<SweepRow> exp_error_sweep(const ExpSweepConfig& config);

struct Fig1Row {
  double v = 0.0;
  double err_nfft = 0.0;
  double err_bandlimited = 0.0;
};

/// Both methods on the same frequencies, rows ordered by s.
std::vector<Fig1Row> fig1_table(const Geometry& geometry, const WindowSpec& window, int S, int P, SweepInterval interval);

/// (2/M)(1 - |2k/M|) for |k| <= M/2, zero otherwise.
double triangle_spectrum(int M, int k) noexcept;
/// sinc^2(M pi x / 2).
double sinc2_exact(int M, double x) noexcept;
/// x_j = cos((j-1) pi / N) (1/2 - m/L), j = 1..N, as restricted nodes.
NodeSet chebyshev_nodes(int N, int m, int L);

struct BetaPolicy {
  /// Unset means calibrate with default_beta.
  std::optional<double> beta;
};

struct Fig2Row {
  int M = 0;
  double err_nfft = 0.0;
  double err_bandlimited = 0.0;
};

std::vector<Fig2Row> sinc2_experiment(const std::vector<int>& M_list, Rational lambda, int m, WindowFamily family,
                                      BetaPolicy policy);

}  // namespace bandsinc::bench
