#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "bandsinc/bench.hpp"
#include "bandsinc/error.hpp"
#include "bandsinc/windows.hpp"

namespace bandsinc {

namespace {

constexpr int kCalibrationBandwidth = 20;
constexpr int kCalibrationSubdivision = 4;
constexpr int kCalibrationProbes = 256;
constexpr double kDegenerateError = 0.5;

}  // namespace

std::vector<BetaCandidate> beta_calibration_sweep(WindowFamily family, int m, Rational lambda) {
  const Geometry geometry = make_geometry(1, kCalibrationBandwidth, lambda, m);
  const int L = geometry.grid_length();
  // Score only the frequencies where the kernel sum is expected to reproduce
  // the exponential: |v| <= M/2 - m/L.
  const double passband = kCalibrationBandwidth / 2.0 - static_cast<double>(m) / L;

  std::vector<BetaCandidate> out;
  for (int j = -16; j <= 8; ++j) {
    const double beta = std::numbers::pi * m * std::exp2(j / 8.0);
    const bench::ExpSweepConfig config{geometry,
                                       WindowSpec(family, beta, m, L),
                                       kCalibrationSubdivision,
                                       kCalibrationProbes,
                                       bench::SweepInterval::Truncated,
                                       bench::ApproxMethod::BandlimitedApprox,
                                       passband};
    double worst = 0.0;
    for (const auto& row : bench::exp_error_sweep(config)) worst = std::max(worst, row.error);
    out.push_back(BetaCandidate{beta, worst});
  }
  return out;
}

double default_beta(WindowFamily family, int m, Rational lambda) {
  using Key = std::tuple<int, int, std::int64_t, std::int64_t>;
  static std::mutex mutex;
  static std::map<Key, double> cache;
  const Key key{static_cast<int>(family), m, lambda.num, lambda.den};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const auto sweep = beta_calibration_sweep(family, m, lambda);
  const BetaCandidate* best = &sweep.front();
  for (const auto& candidate : sweep) {
    if (candidate.max_error < best->max_error) best = &candidate;
  }
  if (!(best->max_error <= kDegenerateError)) {
    throw Error(Errc::CalibrationDegenerate, "no shape parameter reaches error <= 0.5 for m=" + std::to_string(m) +
                                                 ", lambda=" + lambda.str() + " (best " + std::to_string(best->max_error) + ")");
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, best->beta);
  return best->beta;
}

}  // namespace bandsinc
