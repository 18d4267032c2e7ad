#include "bandsinc/bench.hpp"

#include <cmath>
#include <numbers>

#include "bandsinc/error.hpp"
#include "bandsinc/kernel.hpp"
#include "bandsinc/parallel.hpp"

namespace bandsinc::bench {

namespace {

// Sparse kernel weights of one probe point against I_L.
struct ProbeRow {
  std::vector<int> indices;
  std::vector<double> weights;
};

std::vector<ProbeRow> probe_rows(const ExpSweepConfig& config, const std::vector<double>& probes) {
  const int L = config.geometry.grid_length();
  const int m = config.geometry.truncation();
  const RegularizedSinc kernel(config.window);
  std::vector<ProbeRow> rows(probes.size());
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const double u = to_grid_units(probes[p], L);
    ProbeRow& row = rows[p];
    if (config.method == ApproxMethod::BandlimitedApprox) {
      for (int l : nonperiodic_support_1d(probes[p], L, m)) {
        row.indices.push_back(l);
        row.weights.push_back(kernel.at_offset(u - l));
      }
    } else {
      for (int l : periodic_support_1d(probes[p], L, m)) {
        const int wrapped = wrap_index(l, L);
        row.indices.push_back(wrapped);
        row.weights.push_back(periodized_window(config.window, u - wrapped));
      }
    }
  }
  return rows;
}

}  // namespace

std::vector<double> sweep_frequencies(int M, int m, int S) {
  if (S < 1) throw Error(Errc::ShapeMismatch, "sweep subdivision S must be >= 1");
  const int count = S * (M + 2 * m) + 1;
  std::vector<double> v(static_cast<std::size_t>(count));
  const double start = -M / 2.0 - m;
  for (int s = 0; s < count; ++s) v[static_cast<std::size_t>(s)] = start + static_cast<double>(s) / S;
  return v;
}

std::vector<double> probe_points(const Geometry& geometry, SweepInterval interval, int P) {
  if (P < 2) throw Error(Errc::ShapeMismatch, "probe grid needs P >= 2");
  const double bound = interval == SweepInterval::Full ? 0.5 : geometry.restricted_bound();
  std::vector<double> x(static_cast<std::size_t>(P));
  for (int p = 0; p < P; ++p) x[static_cast<std::size_t>(p)] = -bound + 2.0 * bound * p / P;
  return x;
}

std::vector<SweepRow> exp_error_sweep(const ExpSweepConfig& config) {
  if (config.geometry.dim() != 1) throw Error(Errc::BadDimension, "the exponential sweep is one-dimensional");
  const int M = config.geometry.bandwidth();
  const int L = config.geometry.grid_length();
  const int m = config.geometry.truncation();

  std::vector<double> frequencies = sweep_frequencies(M, m, config.S);
  if (config.max_abs_frequency) {
    std::erase_if(frequencies, [&](double v) { return std::abs(v) > *config.max_abs_frequency; });
  }
  const std::vector<double> probes = probe_points(config.geometry, config.interval, config.P);
  const std::vector<ProbeRow> rows = probe_rows(config, probes);

  std::vector<SweepRow> out(frequencies.size());
  parallel_for(frequencies.size(), [&](std::size_t s) {
    const double v = frequencies[s];
    std::vector<Complex> phase(static_cast<std::size_t>(L));
    for (int l = -L / 2; l < L / 2; ++l) {
      phase[static_cast<std::size_t>(l + L / 2)] = std::polar(1.0, 2.0 * std::numbers::pi * v * l / L);
    }
    double scale = 1.0;
    if (config.method == ApproxMethod::NfftApprox) scale = 1.0 / (L * phi_hat_1d(config.window, v).value);

    double worst = 0.0;
    for (std::size_t p = 0; p < probes.size(); ++p) {
      Complex h{};
      const ProbeRow& row = rows[p];
      for (std::size_t e = 0; e < row.indices.size(); ++e) {
        h += phase[static_cast<std::size_t>(row.indices[e] + L / 2)] * row.weights[e];
      }
      h *= scale;
      const Complex exact = std::polar(1.0, 2.0 * std::numbers::pi * v * probes[p]);
      worst = std::max(worst, std::abs(exact - h));
    }
    out[s] = SweepRow{v, worst};
  });
  return out;
}

std::vector<Fig1Row> fig1_table(const Geometry& geometry, const WindowSpec& window, int S, int P, SweepInterval interval) {
  ExpSweepConfig config{geometry, window, S, P, interval, ApproxMethod::NfftApprox, std::nullopt};
  const auto nfft = exp_error_sweep(config);
  config.method = ApproxMethod::BandlimitedApprox;
  const auto bandlimited = exp_error_sweep(config);
  std::vector<Fig1Row> rows(nfft.size());
  for (std::size_t s = 0; s < rows.size(); ++s) rows[s] = Fig1Row{nfft[s].v, nfft[s].error, bandlimited[s].error};
  return rows;
}

double triangle_spectrum(int M, int k) noexcept {
  const double ratio = std::abs(2.0 * k / M);
  if (ratio > 1.0) return 0.0;
  return (2.0 / M) * (1.0 - ratio);
}

double sinc2_exact(int M, double x) noexcept {
  const double s = sinc(M * std::numbers::pi * x / 2.0);
  return s * s;
}

NodeSet chebyshev_nodes(int N, int m, int L) {
  if (N < 1) throw Error(Errc::ShapeMismatch, "Chebyshev node count must be >= 1");
  const double bound = Geometry::restricted_bound(L, m);
  std::vector<double> x(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) x[static_cast<std::size_t>(j - 1)] = std::cos((j - 1) * std::numbers::pi / N) * bound;
  return validate_nodes(x, 1, L, m, DomainMode::Restricted);
}

std::vector<Fig2Row> sinc2_experiment(const std::vector<int>& M_list, Rational lambda, int m, WindowFamily family,
                                      BetaPolicy policy) {
  const double beta = policy.beta ? *policy.beta : default_beta(family, m, lambda);
  std::vector<Fig2Row> rows;
  rows.reserve(M_list.size());
  for (int M : M_list) {
    const Geometry geometry = make_geometry(1, M, lambda, m);
    const int L = geometry.grid_length();
    const WindowSpec window(family, beta, m, L);

    const NodeSet restricted = chebyshev_nodes(M / 2, m, L);
    const NodeSet periodic = validate_nodes(restricted.coordinates(), 1, L, m, DomainMode::Periodic);

    Spectrum spectrum{M, 1, std::vector<Complex>(static_cast<std::size_t>(M))};
    for (int k = -M / 2; k < M / 2; ++k) spectrum.values[static_cast<std::size_t>(k + M / 2)] = triangle_spectrum(M, k);

    const auto bandlimited = execute_bandlimited(plan_bandlimited(geometry, window, restricted), spectrum);
    const auto nfft = execute_nfft(plan_nfft(geometry, window, periodic), spectrum);

    Fig2Row row{M, 0.0, 0.0};
    for (std::size_t j = 0; j < restricted.size(); ++j) {
      const double exact = sinc2_exact(M, restricted.node(j)[0]);
      row.err_bandlimited = std::max(row.err_bandlimited, std::abs(bandlimited[j] - exact));
      row.err_nfft = std::max(row.err_nfft, std::abs(nfft[j] - exact));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bandsinc::bench
