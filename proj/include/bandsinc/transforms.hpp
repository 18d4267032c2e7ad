#pragma once

#include <span>
#include <vector>

#include "bandsinc/geometry.hpp"
#include "bandsinc/kernel.hpp"
#include "bandsinc/spectral.hpp"
#include "bandsinc/windows.hpp"

namespace bandsinc {

/// Values f_hat(k) for k in I_M^d, lexicographic order.
struct Spectrum {
  int bandwidth = 0;
  int dim = 0;
  std::vector<Complex> values;
};

/// Row-compressed real matrix with columns addressing I_L^d lexicographically.
class SparseRows {
 public:
  SparseRows() : offsets_{0} {}

  std::size_t rows() const noexcept { return offsets_.size() - 1; }
  std::span<const std::size_t> columns(std::size_t row) const;
  std::span<const double> weights(std::size_t row) const;
  std::size_t max_row_size() const noexcept;

  void append_row(std::span<const std::size_t> columns, std::span<const double> weights);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> columns_;
  std::vector<double> weights_;
};

/// Precomputed state for evaluating a bandlimited function at restricted
/// nodes from samples of its Fourier transform.
class BandlimitedPlan {
 public:
  BandlimitedPlan(Geometry geometry, RegularizedSinc kernel, SpectralFactors factors, SparseRows rows)
      : geometry_(geometry), kernel_(kernel), factors_(std::move(factors)), rows_(std::move(rows)) {}

  const Geometry& geometry() const noexcept { return geometry_; }
  const RegularizedSinc& kernel() const noexcept { return kernel_; }
  const SpectralFactors& factors() const noexcept { return factors_; }
  const SparseRows& rows() const noexcept { return rows_; }
  std::size_t node_count() const noexcept { return rows_.rows(); }

  /// Support indices of row j as signed multi-indices.
  std::vector<MultiIndex> row_indices(std::size_t j) const;

 private:
  Geometry geometry_;
  RegularizedSinc kernel_;
  SpectralFactors factors_;
  SparseRows rows_;
};

/// Precomputed state of the classical NFFT on the grid of length L.
class NfftPlan {
 public:
  NfftPlan(Geometry geometry, WindowSpec window, SpectralFactors factors, SparseRows rows)
      : geometry_(geometry), window_(window), factors_(std::move(factors)), rows_(std::move(rows)) {}

  const Geometry& geometry() const noexcept { return geometry_; }
  const WindowSpec& window() const noexcept { return window_; }
  const SpectralFactors& factors() const noexcept { return factors_; }
  const SparseRows& rows() const noexcept { return rows_; }
  std::size_t node_count() const noexcept { return rows_.rows(); }

  std::vector<MultiIndex> row_indices(std::size_t j) const;

 private:
  Geometry geometry_;
  WindowSpec window_;
  SpectralFactors factors_;
  SparseRows rows_;
};

/// Window values of the 1-periodic truncated window at offset delta (grid
/// units), summed over shifts r in {-1, 0, 1}.
double periodized_window(const WindowSpec& window, double delta) noexcept;

BandlimitedPlan plan_bandlimited(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes);
std::vector<Complex> execute_bandlimited(const BandlimitedPlan& plan, const Spectrum& spectrum);

NfftPlan plan_nfft(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes);
std::vector<Complex> execute_nfft(const NfftPlan& plan, const Spectrum& coefficients);

}  // namespace bandsinc
