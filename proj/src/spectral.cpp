#include "bandsinc/spectral.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>

#include "bandsinc/error.hpp"
#include "bandsinc/geometry.hpp"

namespace bandsinc {

namespace {

// FFTW's planner is not reentrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer allocate(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer(p);
}

class BackwardPlan {
 public:
  BackwardPlan(int length, int d, fftw_complex* in, fftw_complex* out) {
    std::vector<int> dims(static_cast<std::size_t>(d), length);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft(d, dims.data(), in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw Error(Errc::UnsupportedLength, "FFTW could not plan length " + std::to_string(length));
  }
  ~BackwardPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  BackwardPlan(const BackwardPlan&) = delete;
  BackwardPlan& operator=(const BackwardPlan&) = delete;

  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

// Lexicographic position of signed index k  <->  position of its residue
// k mod L. With L even both directions are a cyclic shift by L/2 per axis.
std::size_t shifted(std::size_t position, int length, int d) {
  const auto L = static_cast<std::size_t>(length);
  std::size_t result = 0;
  std::size_t stride = 1;
  for (int t = 0; t < d; ++t) {
    const std::size_t digit = position % L;
    position /= L;
    result += ((digit + L / 2) % L) * stride;
    stride *= L;
  }
  return result;
}

}  // namespace

GridCoefficients zero_pad_embed(std::span<const Complex> inner, int M, int L, int d) {
  if (M < 2 || L < M || M % 2 != 0 || L % 2 != 0 || d < 1) {
    throw Error(Errc::ShapeMismatch, "zero padding needs even M <= L (M=" + std::to_string(M) + ", L=" + std::to_string(L) + ")");
  }
  if (inner.size() != ipow(static_cast<std::size_t>(M), d)) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(ipow(static_cast<std::size_t>(M), d)) + " values on I_M, got " +
                                         std::to_string(inner.size()));
  }
  GridCoefficients out{L, d, std::vector<Complex>(ipow(static_cast<std::size_t>(L), d))};
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const MultiIndex k = multi_index(i, M, d);
    out.values[linear_index(k, L)] = inner[i];
  }
  return out;
}

GridSamples inverse_dft_grid(const GridCoefficients& coeffs) {
  const int L = coeffs.length;
  const int d = coeffs.dim;
  if (L < 2 || L % 2 != 0 || d < 1) throw Error(Errc::ShapeMismatch, "grid length must be even and >= 2");
  const std::size_t n = ipow(static_cast<std::size_t>(L), d);
  if (coeffs.values.size() != n) throw Error(Errc::ShapeMismatch, "grid coefficient count does not equal L^d");

  FftwBuffer in = allocate(n);
  FftwBuffer out = allocate(n);
  BackwardPlan plan(L, d, in.get(), out.get());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = shifted(i, L, d);
    in[r][0] = coeffs.values[i].real();
    in[r][1] = coeffs.values[i].imag();
  }
  plan.execute();

  const double scale = 1.0 / static_cast<double>(n);
  GridSamples samples{L, d, std::vector<Complex>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = shifted(i, L, d);
    samples.values[i] = Complex(out[r][0] * scale, out[r][1] * scale);
  }
  return samples;
}

}  // namespace bandsinc
