#pragma once

#include <vector>

#include "bandsinc/geometry.hpp"
#include "bandsinc/kernel.hpp"
#include "bandsinc/spectral.hpp"
#include "bandsinc/transforms.hpp"
#include "bandsinc/windows.hpp"

// Slow reference implementations. Everything here is assembled straight from
// the defining sums and matrices and shares no evaluation order with the
// fast paths.
namespace bandsinc::oracle {

/// Largest L^d accepted by the dense paths.
inline constexpr std::size_t kDenseGuard = 4096;

/// Explicit factors of the approximation A ≈ S F D, with S the N x L^d sparse
/// kernel matrix (stored dense), F the truncated Fourier matrix and D the
/// diagonal 1 / (L^d * factor(k)).
struct DenseOperator {
  std::size_t nodes = 0;
  std::size_t grid = 0;      // L^d
  std::size_t spectrum = 0;  // M^d
  std::vector<Complex> diagonal;       // spectrum
  std::vector<Complex> fourier;        // grid x spectrum, row-major
  std::vector<double> kernel_matrix;   // nodes x grid, row-major
  std::vector<Complex> assembled;      // nodes x spectrum, row-major

  std::vector<Complex> apply(const std::vector<Complex>& input) const;
  /// Nonzero count of kernel-matrix row j.
  std::size_t row_nonzeros(std::size_t j) const;
};

/// f(x_j) = sum_{k in I_M} c_k exp(2 pi i k.x_j).
std::vector<Complex> direct_trig_sum(const Spectrum& coefficients, const NodeSet& nodes);

DenseOperator dense_bandlimited_operator(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes);
std::vector<Complex> dense_bandlimited_apply(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes,
                                             const Spectrum& spectrum);

DenseOperator dense_nfft_operator(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes);
std::vector<Complex> dense_nfft_apply(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes,
                                      const Spectrum& coefficients);

/// Literal O(L^{2d}) evaluation of the normalized inverse DFT on I_L.
GridSamples direct_dft(const GridCoefficients& coeffs);

/// Regularized Shannon sum over l in I_L of samples(l) psi(x - l/L).
Complex shannon_direct(const GridSamples& samples, const WindowSpec& window, std::span<const double> x);

}  // namespace bandsinc::oracle
