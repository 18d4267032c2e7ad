#include "bandsinc/oracle.hpp"

#include <cmath>
#include <numbers>

#include "bandsinc/error.hpp"

namespace bandsinc::oracle {

namespace {

Complex unit_phase(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

double dot(std::span<const int> k, std::span<const double> x) {
  double s = 0.0;
  for (std::size_t t = 0; t < k.size(); ++t) s += k[t] * x[t];
  return s;
}

void guard(std::size_t grid) {
  if (grid > kDenseGuard) {
    throw Error(Errc::SizeGuardExceeded, "dense oracle limited to L^d <= " + std::to_string(kDenseGuard) + ", got " + std::to_string(grid));
  }
}

template <class Entry>
DenseOperator assemble(const Geometry& geometry, const NodeSet& nodes, const SpectralFactors& factors, Entry entry) {
  const int d = geometry.dim();
  const int L = geometry.grid_length();
  const int M = geometry.bandwidth();
  guard(geometry.grid_size());
  if (nodes.dim() != d) throw Error(Errc::ShapeMismatch, "node dimension does not match geometry");

  DenseOperator op;
  op.nodes = nodes.size();
  op.grid = geometry.grid_size();
  op.spectrum = geometry.spectrum_size();

  const auto grid_index = grid_indices(L, d);
  const auto band_index = grid_indices(M, d);

  op.diagonal.resize(op.spectrum);
  for (std::size_t c = 0; c < op.spectrum; ++c) {
    op.diagonal[c] = 1.0 / (static_cast<double>(op.grid) * factors.at(band_index[c]));
  }

  op.fourier.resize(op.grid * op.spectrum);
  for (std::size_t r = 0; r < op.grid; ++r) {
    for (std::size_t c = 0; c < op.spectrum; ++c) {
      double turns = 0.0;
      for (int t = 0; t < d; ++t) {
        turns += static_cast<double>(band_index[c][static_cast<std::size_t>(t)]) * grid_index[r][static_cast<std::size_t>(t)] / L;
      }
      op.fourier[r * op.spectrum + c] = unit_phase(turns);
    }
  }

  op.kernel_matrix.resize(op.nodes * op.grid);
  std::vector<double> offset(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < op.nodes; ++j) {
    const auto x = nodes.node(j);
    for (std::size_t r = 0; r < op.grid; ++r) {
      for (std::size_t t = 0; t < offset.size(); ++t) offset[t] = x[t] - static_cast<double>(grid_index[r][t]) / L;
      op.kernel_matrix[j * op.grid + r] = entry(std::span<const double>(offset));
    }
  }

  op.assembled.assign(op.nodes * op.spectrum, Complex{});
  for (std::size_t j = 0; j < op.nodes; ++j) {
    for (std::size_t r = 0; r < op.grid; ++r) {
      const double s = op.kernel_matrix[j * op.grid + r];
      if (s == 0.0) continue;
      for (std::size_t c = 0; c < op.spectrum; ++c) {
        op.assembled[j * op.spectrum + c] += s * op.fourier[r * op.spectrum + c] * op.diagonal[c];
      }
    }
  }
  return op;
}

}  // namespace

std::vector<Complex> DenseOperator::apply(const std::vector<Complex>& input) const {
  if (input.size() != spectrum) throw Error(Errc::ShapeMismatch, "dense operator input has wrong length");
  std::vector<Complex> scaled(spectrum);
  for (std::size_t c = 0; c < spectrum; ++c) scaled[c] = diagonal[c] * input[c];
  std::vector<Complex> grid_values(grid);
  for (std::size_t r = 0; r < grid; ++r) {
    Complex sum{};
    for (std::size_t c = 0; c < spectrum; ++c) sum += fourier[r * spectrum + c] * scaled[c];
    grid_values[r] = sum;
  }
  std::vector<Complex> out(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    Complex sum{};
    for (std::size_t r = 0; r < grid; ++r) sum += kernel_matrix[j * grid + r] * grid_values[r];
    out[j] = sum;
  }
  return out;
}

std::size_t DenseOperator::row_nonzeros(std::size_t j) const {
  std::size_t count = 0;
  for (std::size_t r = 0; r < grid; ++r) count += kernel_matrix[j * grid + r] != 0.0 ? 1 : 0;
  return count;
}

std::vector<Complex> direct_trig_sum(const Spectrum& coefficients, const NodeSet& nodes) {
  if (nodes.dim() != coefficients.dim) throw Error(Errc::ShapeMismatch, "node dimension does not match spectrum");
  const auto band_index = grid_indices(coefficients.bandwidth, coefficients.dim);
  if (band_index.size() != coefficients.values.size()) throw Error(Errc::ShapeMismatch, "spectrum has wrong length");
  std::vector<Complex> out(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Complex sum{};
    for (std::size_t c = 0; c < band_index.size(); ++c) sum += coefficients.values[c] * unit_phase(dot(band_index[c], nodes.node(j)));
    out[j] = sum;
  }
  return out;
}

DenseOperator dense_bandlimited_operator(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes) {
  const RegularizedSinc kernel(window);
  guard(geometry.grid_size());
  const SpectralFactors factors = spectral_factors(kernel, geometry.bandwidth());
  return assemble(geometry, nodes, factors, [&](std::span<const double> offset) { return psi_eval(kernel, offset); });
}

std::vector<Complex> dense_bandlimited_apply(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes,
                                             const Spectrum& spectrum) {
  return dense_bandlimited_operator(geometry, window, nodes).apply(spectrum.values);
}

DenseOperator dense_nfft_operator(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes) {
  guard(geometry.grid_size());
  const SpectralFactors factors = spectral_factors(window, geometry.bandwidth());
  return assemble(geometry, nodes, factors, [&](std::span<const double> offset) {
    double value = 1.0;
    for (double component : offset) {
      double periodic = 0.0;
      for (int r = -1; r <= 1; ++r) periodic += window(component + r);
      value *= periodic;
    }
    return value;
  });
}

std::vector<Complex> dense_nfft_apply(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes,
                                      const Spectrum& coefficients) {
  return dense_nfft_operator(geometry, window, nodes).apply(coefficients.values);
}

GridSamples direct_dft(const GridCoefficients& coeffs) {
  const int L = coeffs.length;
  const int d = coeffs.dim;
  const std::size_t n = ipow(static_cast<std::size_t>(L), d);
  guard(n);
  if (coeffs.values.size() != n) throw Error(Errc::ShapeMismatch, "grid coefficient count does not equal L^d");
  const auto index = grid_indices(L, d);
  GridSamples out{L, d, std::vector<Complex>(n)};
  for (std::size_t l = 0; l < n; ++l) {
    Complex sum{};
    for (std::size_t k = 0; k < n; ++k) {
      // Reduce k.l mod L exactly in integers before forming the phase.
      long long product = 0;
      for (int t = 0; t < d; ++t) product += static_cast<long long>(index[k][static_cast<std::size_t>(t)]) * index[l][static_cast<std::size_t>(t)];
      product %= L;
      sum += coeffs.values[k] * unit_phase(static_cast<double>(product) / L);
    }
    out.values[l] = sum / static_cast<double>(n);
  }
  return out;
}

Complex shannon_direct(const GridSamples& samples, const WindowSpec& window, std::span<const double> x) {
  const int L = samples.length;
  const int d = samples.dim;
  if (window.grid_length() != L || x.size() != static_cast<std::size_t>(d)) {
    throw Error(Errc::ShapeMismatch, "samples, window and node disagree in shape");
  }
  const RegularizedSinc kernel(window);
  std::vector<double> u(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) u[t] = to_grid_units(x[t], L);
  const auto index = grid_indices(L, d);
  Complex sum{};
  for (std::size_t l = 0; l < index.size(); ++l) {
    double weight = 1.0;
    for (std::size_t t = 0; t < u.size(); ++t) weight *= kernel.at_offset(u[t] - index[l][t]);
    sum += samples.values[l] * weight;
  }
  return sum;
}

}  // namespace bandsinc::oracle
