// Recomputes the frozen reference values used by the acceptance suite.
//
// Everything here is evaluated in long double straight from the defining
// formulas: the window and kernel by closed form, the Fourier transforms by
// composite Simpson after x = r sin(theta), and the approximants by summing
// over the whole grid without any support bookkeeping. Only the shape
// parameter is taken from the library, because freezing it is the point.

#include <cmath>
#include <complex>
#include <cstdio>
#include <vector>

#include "bandsinc/geometry.hpp"
#include "bandsinc/windows.hpp"

namespace {

using real = long double;
using cplx = std::complex<real>;
constexpr real kPi = 3.141592653589793238462643383279502884L;

struct Setup {
  int M, L, m;
  real beta;
};

real window(const Setup& s, real x) {
  const real r = static_cast<real>(s.m) / s.L;
  if (std::fabs(x) >= r) return 0.0L;
  const real t = x / r;
  return std::sinh(s.beta * std::sqrt(1.0L - t * t)) / std::sinh(s.beta);
}

real sinc(real u) { return u == 0.0L ? 1.0L : std::sin(u) / u; }

real kernel(const Setup& s, real x) { return sinc(s.L * kPi * x) * window(s, x); }

template <class F>
real cosine_transform(const Setup& s, F f, real v) {
  const real r = static_cast<real>(s.m) / s.L;
  const int n = 1 << 16;
  const real h = (kPi / 2) / n;
  real sum = 0.0L;
  for (int i = 0; i <= n; ++i) {
    const real theta = i * h;
    const real x = r * std::sin(theta);
    const real g = f(x) * std::cos(2 * kPi * v * x) * r * std::cos(theta);
    sum += g * (i == 0 || i == n ? 1 : (i % 2 ? 4 : 2));
  }
  return 2 * sum * h / 3;
}

real exp_error(const Setup& s, real v, bool nfft, bool full, int P) {
  const real bound = full ? 0.5L : 0.5L - static_cast<real>(s.m) / s.L;
  real scale = 1.0L;
  if (nfft) scale = 1.0L / (s.L * cosine_transform(s, [&](real x) { return window(s, x); }, v));
  real worst = 0.0L;
  for (int p = 0; p < P; ++p) {
    const real x = -bound + 2 * bound * p / P;
    cplx h{};
    for (int l = -s.L / 2; l < s.L / 2; ++l) {
      const real y = x - static_cast<real>(l) / s.L;
      const real w = nfft ? window(s, y - 1) + window(s, y) + window(s, y + 1) : kernel(s, y);
      h += std::polar(1.0L, 2 * kPi * v * l / s.L) * w;
    }
    worst = std::max(worst, std::abs(std::polar(1.0L, 2 * kPi * v * x) - scale * h));
  }
  return worst;
}

}  // namespace

int main() {
  const bandsinc::Rational lambda{1, 1};
  const double beta = bandsinc::default_beta(bandsinc::WindowFamily::SinhType, 5, lambda);
  const Setup s{20, 40, 5, beta};
  std::printf("beta = %.17g\n", beta);

  // Truncated interval, S = 32: worst kernel-sum error over |v| <= M/2 - m/L.
  real worst = 0.0L;
  const int S = 32;
  for (int i = 0; i <= S * (s.M + 2 * s.m); ++i) {
    const real v = -s.M / 2.0L - s.m + static_cast<real>(i) / S;
    if (std::fabs(v) > s.M / 2.0L - static_cast<real>(s.m) / s.L) continue;
    worst = std::max(worst, exp_error(s, v, false, false, 1000));
  }
  std::printf("truncated passband max err_bandlimited = %.6Le\n", worst);

  // Full interval, S = 1: NFFT error at each integer frequency of I_M plus v = M/2.
  for (int v = -s.M / 2; v <= s.M / 2; ++v) {
    std::printf("full S=1 v=%d err_nfft = %.6Le\n", v, exp_error(s, v, true, true, 1000));
  }
  return 0;
}
