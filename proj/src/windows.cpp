#include "bandsinc/windows.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bandsinc/error.hpp"

namespace bandsinc {

std::string_view to_string(WindowFamily family) noexcept {
  switch (family) {
    case WindowFamily::SinhType: return "sinh";
    case WindowFamily::ContinuousKaiserBessel: return "ckb";
  }
  return "unknown";
}

WindowFamily parse_window_family(std::string_view text) {
  if (text == "sinh" || text == "sinh-type") return WindowFamily::SinhType;
  if (text == "ckb" || text == "cKB" || text == "kaiser-bessel") return WindowFamily::ContinuousKaiserBessel;
  throw Error(Errc::Parse, "unknown window family '" + std::string(text) + "' (expected sinh or ckb)");
}

namespace {

// Power series sum_{n>=first} (z^2/4)^n / (n!)^2, accumulated in long double.
double bessel_i0_series(double z, int first) {
  const long double q = static_cast<long double>(z) * z / 4.0L;
  long double term = 1.0L;
  for (int n = 1; n <= first; ++n) term *= q / (static_cast<long double>(n) * n);
  long double sum = 0.0L;
  for (int n = first; n < 1000; ++n) {
    sum += term;
    term *= q / (static_cast<long double>(n + 1) * (n + 1));
    if (term <= sum * 1e-21L) break;
  }
  return static_cast<double>(sum);
}

}  // namespace

double bessel_i0(double z) { return bessel_i0_series(std::abs(z), 0); }

double bessel_i0_minus_one(double z) {
  if (z == 0.0) return 0.0;
  return bessel_i0_series(std::abs(z), 1);
}

WindowSpec::WindowSpec(WindowFamily family, double beta, int m, int L)
    : family_(family), beta_(beta), m_(m), L_(L), radius_(static_cast<double>(m) / L), normalizer_(1.0) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(Errc::InvalidWindow, "shape parameter beta must be > 0");
  if (m < 1 || L < 2 || 2 * m >= L) {
    throw Error(Errc::InvalidWindow, "window needs m >= 1 and 2m < L (m=" + std::to_string(m) + ", L=" + std::to_string(L) + ")");
  }
  normalizer_ = family == WindowFamily::SinhType ? std::sinh(beta) : bessel_i0_minus_one(beta);
  if (!std::isfinite(normalizer_)) throw Error(Errc::InvalidWindow, "beta too large to evaluate the window");
}

double WindowSpec::scaled(double s) const noexcept {
  const double root = std::sqrt(std::max(0.0, 1.0 - s * s));
  if (!(std::abs(s) < 1.0)) return 0.0;
  switch (family_) {
    case WindowFamily::SinhType: return std::sinh(beta_ * root) / normalizer_;
    case WindowFamily::ContinuousKaiserBessel: return bessel_i0_minus_one(beta_ * root) / normalizer_;
  }
  return 0.0;
}

double WindowSpec::operator()(double x) const noexcept {
  if (!(std::abs(x) < radius_)) return 0.0;
  return scaled(x * L_ / m_);
}

double window_eval(const WindowSpec& spec, double x) noexcept { return spec(x); }

double window_eval(const WindowSpec& spec, std::span<const double> x) noexcept {
  double value = 1.0;
  for (double component : x) value *= spec(component);
  return value;
}

bool WindowAxiomsReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

WindowAxiomsReport window_axioms_report(const WindowSpec& spec, int samples) {
  if (samples < 3) throw Error(Errc::ShapeMismatch, "axiom probe needs at least 3 samples");
  const double r = spec.radius();
  std::vector<double> probes(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) probes[static_cast<std::size_t>(i)] = -r + 2.0 * r * i / (samples - 1);

  AxiomCheck even{"even"};
  AxiomCheck range{"range"};
  AxiomCheck monotone{"monotone"};
  AxiomCheck center{"unit-center"};
  AxiomCheck boundary{"zero-boundary"};

  auto record = [](AxiomCheck& check, double x, double defect) {
    if (defect > check.worst_defect) {
      check.worst_defect = defect;
      check.worst_x = x;
    }
  };

  const double roundoff = std::numeric_limits<double>::epsilon();
  double previous = std::numeric_limits<double>::infinity();
  std::vector<double> nonnegative;
  for (double x : probes) {
    const double value = spec(x);
    const double defect_even = std::abs(value - spec(-x));
    record(even, x, defect_even);
    if (defect_even > roundoff) even.passed = false;

    const double defect_range = std::max(-value, value - 1.0);
    if (defect_range > 0.0) {
      range.passed = false;
      record(range, x, defect_range);
    }
    if (x >= 0.0) nonnegative.push_back(x);
  }
  // Include the exact centre so the monotone sweep starts at phi(0).
  nonnegative.insert(nonnegative.begin(), 0.0);
  for (double x : nonnegative) {
    const double value = spec(x);
    if (value > previous) {
      monotone.passed = false;
      record(monotone, x, value - previous);
    }
    previous = value;
  }

  const double at_center = spec(0.0);
  record(center, 0.0, std::abs(at_center - 1.0));
  center.passed = at_center == 1.0;

  for (double x : {-r, r}) {
    const double value = spec(x);
    record(boundary, x, std::abs(value));
    if (value != 0.0) boundary.passed = false;
  }

  return WindowAxiomsReport{{even, range, monotone, center, boundary}};
}

}  // namespace bandsinc
