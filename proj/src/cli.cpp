#include "bandsinc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>

#include "bandsinc/bench.hpp"
#include "bandsinc/csv.hpp"
#include "bandsinc/error.hpp"
#include "bandsinc/oracle.hpp"
#include "bandsinc/transforms.hpp"

namespace bandsinc::cli {

namespace {

struct CommonOptions {
  int d = 1;
  int M = 20;
  std::string lambda = "1";
  int m = 5;
  std::string window = "sinh";
  std::string beta = "auto";
  std::string out;
};

struct TransformOptions {
  std::string spectrum;
  std::string nodes;
};

struct Fig1Options {
  int S = 32;
  int P = 1000;
  std::string interval = "truncated";
};

struct Fig2Options {
  std::vector<int> M_list;
  bool full_scale = false;
};

void add_common(CLI::App* app, CommonOptions& o, bool with_d, bool with_M) {
  if (with_d) app->add_option("--d", o.d, "Dimension")->capture_default_str();
  if (with_M) app->add_option("--M", o.M, "Bandwidth (even)")->capture_default_str();
  app->add_option("--lambda", o.lambda, "Oversampling parameter, decimal or p/q")->capture_default_str();
  app->add_option("--m", o.m, "Truncation half-width")->capture_default_str();
  app->add_option("--window", o.window, "Window family: sinh | ckb")->capture_default_str();
  app->add_option("--beta", o.beta, "Shape parameter or 'auto'")->capture_default_str();
  app->add_option("--out", o.out, "Output CSV path (default: standard output)");
}

double resolve_beta(const CommonOptions& o, WindowFamily family, Rational lambda) {
  if (o.beta == "auto") return default_beta(family, o.m, lambda);
  std::size_t consumed = 0;
  double beta = 0.0;
  try {
    beta = std::stod(o.beta, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed == 0 || consumed != o.beta.size()) throw Error(Errc::Parse, "--beta expects a number or 'auto'");
  return beta;
}

void emit(const csv::Table& table, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    csv::write_table(out, table);
  } else {
    csv::write_table_atomic(path, table);
  }
}

int run_transform(const CommonOptions& o, const TransformOptions& t, bool bandlimited, std::ostream& out, std::ostream& err) {
  const Rational lambda = Rational::parse(o.lambda);
  const Geometry geometry = make_geometry(o.d, o.M, lambda, o.m);
  const WindowFamily family = parse_window_family(o.window);
  const double beta = resolve_beta(o, family, lambda);
  const WindowSpec window(family, beta, o.m, geometry.grid_length());

  const Spectrum spectrum = csv::read_spectrum(t.spectrum, o.M, o.d);
  const auto raw_nodes = csv::read_nodes(t.nodes, o.d);

  std::vector<Complex> values;
  err << "beta = " << csv::format_double(beta) << "\n";
  if (bandlimited) {
    const NodeSet nodes = validate_nodes(raw_nodes, geometry, DomainMode::Restricted);
    const BandlimitedPlan plan = plan_bandlimited(geometry, window, nodes);
    err << "spectral factor flatness max_k |L*psi_hat(k) - 1| = " << csv::format_double(plan.factors().flatness(geometry.grid_length()))
        << "\n";
    err << "quadrature error estimate = " << csv::format_double(plan.factors().error_estimate()) << "\n";
    values = execute_bandlimited(plan, spectrum);
  } else {
    const NodeSet nodes = validate_nodes(raw_nodes, geometry, DomainMode::Periodic);
    const NfftPlan plan = plan_nfft(geometry, window, nodes);
    err << "quadrature error estimate = " << csv::format_double(plan.factors().error_estimate()) << "\n";
    values = execute_nfft(plan, spectrum);
  }
  emit(csv::values_table(values), o.out, out);
  return kOk;
}

int run_fig1(const CommonOptions& o, const Fig1Options& f, std::ostream& out, std::ostream& err) {
  bench::SweepInterval interval;
  if (f.interval == "truncated") {
    interval = bench::SweepInterval::Truncated;
  } else if (f.interval == "full") {
    interval = bench::SweepInterval::Full;
  } else {
    throw Error(Errc::Parse, "--interval expects 'full' or 'truncated'");
  }
  const Rational lambda = Rational::parse(o.lambda);
  const Geometry geometry = make_geometry(1, o.M, lambda, o.m);
  const WindowFamily family = parse_window_family(o.window);
  const double beta = resolve_beta(o, family, lambda);
  err << "beta = " << csv::format_double(beta) << "\n";
  const WindowSpec window(family, beta, o.m, geometry.grid_length());

  csv::Table table{{"v", "err_nfft", "err_bandlimited"}, {}};
  for (const auto& row : bench::fig1_table(geometry, window, f.S, f.P, interval)) {
    table.rows.push_back({row.v, row.err_nfft, row.err_bandlimited});
  }
  emit(table, o.out, out);
  return kOk;
}

int run_fig2(const CommonOptions& o, const Fig2Options& f, std::ostream& out, std::ostream& err) {
  std::vector<int> M_list = f.M_list;
  if (M_list.empty()) {
    const int last = f.full_scale ? 1000 : 200;
    for (int M = 20; M <= last; M += 20) M_list.push_back(M);
  }
  const Rational lambda = Rational::parse(o.lambda);
  const WindowFamily family = parse_window_family(o.window);
  const double beta = resolve_beta(o, family, lambda);
  err << "beta = " << csv::format_double(beta) << "\n";

  csv::Table table{{"M", "err_nfft", "err_bandlimited"}, {}};
  for (const auto& row : bench::sinc2_experiment(M_list, lambda, o.m, family, bench::BetaPolicy{beta})) {
    table.rows.push_back({static_cast<double>(row.M), row.err_nfft, row.err_bandlimited});
  }
  emit(table, o.out, out);
  return kOk;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Io: return kIoError;
    case ErrorKind::Domain: return kDomainError;
    case ErrorKind::Numerical: return kNumericError;
  }
  return kIoError;
}

double relative_max_error(const std::vector<Complex>& got, const std::vector<Complex>& want) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) {
    diff = std::max(diff, std::abs(got[i] - want[i]));
    scale = std::max(scale, std::abs(want[i]));
  }
  return scale == 0.0 ? diff : diff / scale;
}

std::vector<Complex> random_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& z : v) z = Complex(dist(rng), dist(rng));
  return v;
}

}  // namespace

bool selftest(std::ostream& out) {
  std::mt19937_64 rng(20240607);
  bool all = true;
  auto report = [&](const std::string& name, double defect, double tolerance) {
    const bool pass = defect <= tolerance;
    all = all && pass;
    out << (pass ? "PASS " : "FAIL ") << name << " defect=" << csv::format_double(defect)
        << " tol=" << csv::format_double(tolerance) << "\n";
  };

  for (int d : {1, 2}) {
    for (int L : {4, 8, 12, 16, 20, 40}) {
      GridCoefficients c{L, d, random_complex(rng, ipow(static_cast<std::size_t>(L), d))};
      report("idft-vs-direct d=" + std::to_string(d) + " L=" + std::to_string(L),
             relative_max_error(inverse_dft_grid(c).values, oracle::direct_dft(c).values), 1e-13);
    }
  }

  for (int d : {1, 2}) {
    for (int M : {4, 8}) {
      for (int lambda : {0, 1}) {
        if ((1 + lambda) * M <= 4) continue;  // 2m < L cannot hold with m = 2
        const Geometry geometry = make_geometry(d, M, Rational{lambda, 1}, 2);
        const WindowSpec window(WindowFamily::SinhType, 2.0, 2, geometry.grid_length());
        std::uniform_real_distribution<double> coord(-geometry.restricted_bound(), geometry.restricted_bound());
        std::vector<double> flat(static_cast<std::size_t>(7 * d));
        for (auto& x : flat) x = coord(rng);
        const NodeSet restricted = validate_nodes(flat, d, geometry.grid_length(), 2, DomainMode::Restricted);
        const NodeSet periodic = validate_nodes(flat, d, geometry.grid_length(), 2, DomainMode::Periodic);
        const Spectrum spectrum{M, d, random_complex(rng, geometry.spectrum_size())};
        const std::string tag = " d=" + std::to_string(d) + " M=" + std::to_string(M) + " lambda=" + std::to_string(lambda);
        report("bandlimited-vs-dense" + tag,
               relative_max_error(execute_bandlimited(plan_bandlimited(geometry, window, restricted), spectrum),
                                  oracle::dense_bandlimited_apply(geometry, window, restricted, spectrum)),
               1e-12);
        report("nfft-vs-dense" + tag,
               relative_max_error(execute_nfft(plan_nfft(geometry, window, periodic), spectrum),
                                  oracle::dense_nfft_apply(geometry, window, periodic, spectrum)),
               1e-12);
      }
    }
  }

  {
    const int L = 40;
    const WindowSpec window(WindowFamily::SinhType, 10.0, 5, L);
    GridSamples samples{L, 1, random_complex(rng, static_cast<std::size_t>(L))};
    double defect = 0.0;
    for (int k = -L / 2; k < L / 2; ++k) {
      const double x = static_cast<double>(k) / L;
      defect = std::max(defect, std::abs(oracle::shannon_direct(samples, window, std::span<const double>(&x, 1)) -
                                         samples.values[static_cast<std::size_t>(k + L / 2)]));
    }
    report("shannon-interpolation-exact", defect, 0.0);
  }
  return all;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bandlimited evaluation from Fourier samples: fast transforms and experiments", "bandsinc"};
  app.require_subcommand(1);

  CommonOptions bandlimited_opts;
  TransformOptions bandlimited_files;
  auto* bandlimited = app.add_subcommand("bandlimited", "Evaluate a bandlimited function at restricted nodes");
  add_common(bandlimited, bandlimited_opts, true, true);
  bandlimited->add_option("--spectrum", bandlimited_files.spectrum, "Spectrum CSV (k1..kd,re,im)")->required();
  bandlimited->add_option("--nodes", bandlimited_files.nodes, "Nodes CSV (x1..xd)")->required();

  CommonOptions nfft_opts;
  TransformOptions nfft_files;
  auto* nfft = app.add_subcommand("nfft", "Evaluate a trigonometric polynomial with the classical NFFT");
  add_common(nfft, nfft_opts, true, true);
  nfft->add_option("--spectrum", nfft_files.spectrum, "Coefficient CSV (k1..kd,re,im)")->required();
  nfft->add_option("--nodes", nfft_files.nodes, "Nodes CSV (x1..xd)")->required();

  CommonOptions fig1_opts;
  Fig1Options fig1_extra;
  auto* fig1 = app.add_subcommand("fig1", "Exponential approximation error sweep");
  add_common(fig1, fig1_opts, false, true);
  fig1->add_option("--S", fig1_extra.S, "Frequency subdivision")->capture_default_str();
  fig1->add_option("--P", fig1_extra.P, "Probe points")->capture_default_str();
  fig1->add_option("--interval", fig1_extra.interval, "full | truncated")->capture_default_str();

  CommonOptions fig2_opts;
  Fig2Options fig2_extra;
  auto* fig2 = app.add_subcommand("fig2", "sinc^2 bandwidth sweep on Chebyshev nodes");
  add_common(fig2, fig2_opts, false, false);
  fig2->add_option("--M-list", fig2_extra.M_list, "Explicit bandwidths")->delimiter(',');
  fig2->add_flag("--full-scale", fig2_extra.full_scale, "Bandwidths 20..1000 instead of 20..200");

  auto* self = app.add_subcommand("selftest", "Run the oracle-equivalence checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }

  try {
    if (*bandlimited) return run_transform(bandlimited_opts, bandlimited_files, true, out, err);
    if (*nfft) return run_transform(nfft_opts, nfft_files, false, out, err);
    if (*fig1) return run_fig1(fig1_opts, fig1_extra, out, err);
    if (*fig2) return run_fig2(fig2_opts, fig2_extra, out, err);
    if (*self) return selftest(out) ? kOk : kSelftestFailed;
  } catch (const NodeOutOfDomain& e) {
    err << "error: nodes file row " << e.node() + 1 << ": " << e.what() << "\n";
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kIoError;
}

}  // namespace bandsinc::cli
