#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bandsinc {

using Complex = std::complex<double>;

/// Complex values on I_L^d in lexicographic signed-index order.
struct GridCoefficients {
  int length = 0;
  int dim = 0;
  std::vector<Complex> values;
};

/// Output of the inverse transform, same layout as GridCoefficients.
struct GridSamples {
  int length = 0;
  int dim = 0;
  std::vector<Complex> values;
};

/// Places values given on I_M^d into I_L^d, zero elsewhere.
GridCoefficients zero_pad_embed(std::span<const Complex> inner, int M, int L, int d);

/// theta_l = L^-d sum_{k in I_L} c_k exp(2 pi i k.l / L) for every l in I_L,
/// via FFTW. Signed indices are mapped to residues mod L internally.
GridSamples inverse_dft_grid(const GridCoefficients& coeffs);

}  // namespace bandsinc
