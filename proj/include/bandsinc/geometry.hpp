#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bandsinc {

/// Non-negative rational number p/q kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  /// Accepts "p/q", an integer, or a plain decimal such as "0.5" (converted exactly).
  static Rational parse(std::string_view text);
  static Rational make(std::int64_t num, std::int64_t den);

  friend bool operator==(const Rational&, const Rational&) = default;
};

using MultiIndex = std::vector<int>;

/// Isotropic problem geometry: dimension d, bandwidth M, oversampling lambda,
/// grid length L = M(1 + lambda) and truncation half-width m. The NFFT grid
/// length M_sigma is identified with L.
class Geometry {
 public:
  int dim() const noexcept { return d_; }
  int bandwidth() const noexcept { return M_; }
  int grid_length() const noexcept { return L_; }
  int truncation() const noexcept { return m_; }
  Rational oversampling() const noexcept { return lambda_; }
  double sigma() const noexcept { return static_cast<double>(L_) / M_; }

  /// Largest admissible |x_t| for restricted-mode nodes, 1/2 - m/L.
  double restricted_bound() const noexcept { return restricted_bound(L_, m_); }
  static double restricted_bound(int L, int m) noexcept { return 0.5 - static_cast<double>(m) / L; }

  /// Number of grid points L^d, and bandwidth points M^d.
  std::size_t grid_size() const noexcept;
  std::size_t spectrum_size() const noexcept;

 private:
  friend Geometry make_geometry(int d, int M, Rational lambda, int m);
  Geometry(int d, int M, Rational lambda, int L, int m) : d_(d), M_(M), L_(L), m_(m), lambda_(lambda) {}

  int d_;
  int M_;
  int L_;
  int m_;
  Rational lambda_;
};

Geometry make_geometry(int d, int M, Rational lambda, int m);

/// Lexicographic enumeration of Z^d ∩ [-length/2, length/2)^d, last axis fastest.
std::vector<MultiIndex> grid_indices(int length, int d);

/// Position of k in the lexicographic enumeration of I_length.
std::size_t linear_index(std::span<const int> k, int length);
MultiIndex multi_index(std::size_t linear, int length, int d);

/// Integer power n^d as a size.
std::size_t ipow(std::size_t n, int d);

/// L * x, snapped to the nearest integer when within a few ulps of it. All
/// kernel offsets are formed from this value so grid-aligned nodes hit the
/// exact zeros of sinc.
double to_grid_units(double x, int L) noexcept;

/// Residue of an integer index in the signed range [-length/2, length/2).
int wrap_index(int l, int length) noexcept;

/// One-axis periodic support, unwrapped: ceil(Lx) - m ... floor(Lx) + m.
std::vector<int> periodic_support_1d(double x, int length, int m);
/// One-axis non-periodic support J_{L,m}(x) intersected with I_L.
std::vector<int> nonperiodic_support_1d(double x, int length, int m);

/// I_{M_sigma,m}(x): wrapped indices in the order of their unwrapped enumeration.
std::vector<MultiIndex> support_indices_periodic(std::span<const double> x, int Msigma, int m);
/// J_{L,m}(x) ∩ I_L in lexicographic order.
std::vector<MultiIndex> support_indices_nonperiodic(std::span<const double> x, int L, int m);

enum class DomainMode { Periodic, Restricted };

/// Validated node coordinates, stored row-major (node-major).
class NodeSet {
 public:
  NodeSet() = default;

  int dim() const noexcept { return d_; }
  DomainMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return d_ == 0 ? 0 : coords_.size() / static_cast<std::size_t>(d_); }
  std::span<const double> node(std::size_t j) const {
    return std::span<const double>(coords_).subspan(j * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_));
  }
  std::span<const double> coordinates() const noexcept { return coords_; }

 private:
  friend NodeSet validate_nodes(std::span<const double>, int, int, int, DomainMode);
  NodeSet(int d, DomainMode mode, std::vector<double> coords) : d_(d), mode_(mode), coords_(std::move(coords)) {}

  int d_ = 0;
  DomainMode mode_ = DomainMode::Restricted;
  std::vector<double> coords_;
};

/// Restricted mode rejects components outside [-1/2 + m/L, 1/2 - m/L];
/// periodic mode maps each component into [-1/2, 1/2).
NodeSet validate_nodes(const std::vector<std::vector<double>>& raw, const Geometry& geometry, DomainMode mode);
NodeSet validate_nodes(std::span<const double> flat, int d, int L, int m, DomainMode mode);

}  // namespace bandsinc
