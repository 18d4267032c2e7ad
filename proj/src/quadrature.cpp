#include <array>
#include <cmath>
#include <mutex>
#include <numbers>

#include "bandsinc/error.hpp"
#include "bandsinc/kernel.hpp"

namespace bandsinc {

namespace {

constexpr int kMinNodes = 32;
constexpr int kMaxNodes = 4096;
constexpr int kLevels = 8;  // 32 .. 4096

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    long double derivative = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1.0L;
      long double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    const long double w = 2.0L / ((1.0L - x * x) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = -static_cast<double>(x);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(x);
    rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(w);
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(w);
  }
  return rule;
}

int level_of(int n) {
  for (int level = 0, size = kMinNodes; level < kLevels; ++level, size *= 2) {
    if (size == n) return level;
  }
  return -1;
}

// Integrates 2 * int_0^r g(t) cos(2 pi v t) dt after substituting
// t = r sin(theta), which removes the square-root behaviour of the windows
// at the support boundary. `shape(s)` receives s = t / r in [0, 1].
template <class Shape>
std::pair<double, double> even_cosine_transform(const Shape& shape, double r, double v, int n) {
  const auto& rule = gauss_legendre(n);
  const double half_pi = std::numbers::pi / 2.0;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    // Map [-1, 1] onto [0, pi/2].
    const double theta = half_pi * (rule.nodes[i] + 1.0) / 2.0;
    const double s = std::sin(theta);
    const double f = shape(s) * std::cos(2.0 * std::numbers::pi * v * r * s) * std::cos(theta);
    const double w = rule.weights[i] * half_pi / 2.0;
    sum += w * f;
    abs_sum += w * std::abs(f);
  }
  return {2.0 * r * sum, 2.0 * r * abs_sum};
}

template <class Shape>
QuadratureResult adaptive_cosine_transform(const Shape& shape, double r, double v) {
  constexpr double kTarget = 1e-14;
  constexpr double kAcceptable = 1e-10;
  auto [previous, scale] = even_cosine_transform(shape, r, v, kMinNodes);
  double increment = 0.0;
  int n = kMinNodes;
  while (n < kMaxNodes) {
    n *= 2;
    auto [current, current_scale] = even_cosine_transform(shape, r, v, n);
    increment = std::abs(current - previous);
    previous = current;
    scale = current_scale;
    const double reference = std::max(std::abs(current), scale);
    if (increment <= kTarget * reference) {
      const double floor = 16.0 * std::numeric_limits<double>::epsilon() * reference;
      return {current, std::max(increment, floor), n};
    }
  }
  const double reference = std::max(std::abs(previous), scale);
  if (increment > kAcceptable * reference) {
    throw Error(Errc::QuadratureNotConverged, "Fourier integral at v = " + std::to_string(v) +
                                                  " did not converge (last change " + std::to_string(increment) + ")");
  }
  return {previous, increment, n};
}

auto psi_shape(const RegularizedSinc& kernel) {
  const double m = kernel.truncation();
  return [&kernel, m](double s) { return sinc_pi(m * s) * kernel.window().scaled(s); };
}

auto phi_shape(const WindowSpec& window) {
  return [&window](double s) { return window.scaled(s); };
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::array<GaussLegendreRule, kLevels> rules;
  static std::array<std::once_flag, kLevels> flags;
  const int level = level_of(n);
  if (level < 0) throw Error(Errc::ShapeMismatch, "unsupported Gauss-Legendre size " + std::to_string(n));
  const auto index = static_cast<std::size_t>(level);
  std::call_once(flags[index], [&] { rules[index] = build_rule(n); });
  return rules[index];
}

QuadratureResult psi_hat_1d(const RegularizedSinc& kernel, double v) {
  return adaptive_cosine_transform(psi_shape(kernel), kernel.window().radius(), v);
}

QuadratureResult phi_hat_1d(const WindowSpec& window, double v) {
  return adaptive_cosine_transform(phi_shape(window), window.radius(), v);
}

double psi_hat_1d_fixed(const RegularizedSinc& kernel, double v, int nodes) {
  return even_cosine_transform(psi_shape(kernel), kernel.window().radius(), v, nodes).first;
}

double phi_hat_1d_fixed(const WindowSpec& window, double v, int nodes) {
  return even_cosine_transform(phi_shape(window), window.radius(), v, nodes).first;
}

}  // namespace bandsinc
