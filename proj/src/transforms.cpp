#include "bandsinc/transforms.hpp"

#include <algorithm>

#include "bandsinc/error.hpp"
#include "bandsinc/parallel.hpp"

namespace bandsinc {

std::span<const std::size_t> SparseRows::columns(std::size_t row) const {
  return std::span<const std::size_t>(columns_).subspan(offsets_.at(row), offsets_.at(row + 1) - offsets_[row]);
}

std::span<const double> SparseRows::weights(std::size_t row) const {
  return std::span<const double>(weights_).subspan(offsets_.at(row), offsets_.at(row + 1) - offsets_[row]);
}

std::size_t SparseRows::max_row_size() const noexcept {
  std::size_t widest = 0;
  for (std::size_t j = 0; j + 1 < offsets_.size(); ++j) widest = std::max(widest, offsets_[j + 1] - offsets_[j]);
  return widest;
}

void SparseRows::append_row(std::span<const std::size_t> columns, std::span<const double> weights) {
  if (columns.size() != weights.size()) throw Error(Errc::ShapeMismatch, "row columns and weights differ in length");
  columns_.insert(columns_.end(), columns.begin(), columns.end());
  weights_.insert(weights_.end(), weights.begin(), weights.end());
  offsets_.push_back(columns_.size());
}

namespace {

struct AxisEntries {
  std::vector<std::size_t> digits;  // position of l along the axis, l + L/2
  std::vector<double> weights;
};

// Appends the tensor product of per-axis entries as one row, axis 0 outermost.
void append_tensor_row(SparseRows& rows, const std::vector<AxisEntries>& axes, int L) {
  std::size_t count = 1;
  for (const auto& axis : axes) count *= axis.digits.size();
  std::vector<std::size_t> columns;
  std::vector<double> weights;
  columns.reserve(count);
  weights.reserve(count);
  std::vector<std::size_t> pos(axes.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t column = 0;
    double weight = 1.0;
    for (std::size_t t = 0; t < axes.size(); ++t) {
      column = column * static_cast<std::size_t>(L) + axes[t].digits[pos[t]];
      weight *= axes[t].weights[pos[t]];
    }
    columns.push_back(column);
    weights.push_back(weight);
    for (std::size_t t = axes.size(); t-- > 0;) {
      if (++pos[t] < axes[t].digits.size()) break;
      pos[t] = 0;
    }
  }
  rows.append_row(columns, weights);
}

void check_window(const Geometry& geometry, const WindowSpec& window) {
  if (window.truncation() != geometry.truncation() || window.grid_length() != geometry.grid_length()) {
    throw Error(Errc::ShapeMismatch, "window (m=" + std::to_string(window.truncation()) + ", L=" +
                                         std::to_string(window.grid_length()) + ") does not match geometry (m=" +
                                         std::to_string(geometry.truncation()) + ", L=" +
                                         std::to_string(geometry.grid_length()) + ")");
  }
}

void check_nodes(const Geometry& geometry, const NodeSet& nodes, DomainMode expected) {
  if (nodes.dim() != geometry.dim()) throw Error(Errc::ShapeMismatch, "node dimension does not match geometry");
  if (nodes.mode() != expected) {
    throw Error(Errc::NodeOutOfDomain, expected == DomainMode::Restricted ? "bandlimited plan needs restricted-mode nodes"
                                                                          : "NFFT plan needs periodic-mode nodes");
  }
}

void check_spectrum(const Geometry& geometry, const Spectrum& spectrum) {
  if (spectrum.bandwidth != geometry.bandwidth() || spectrum.dim != geometry.dim() ||
      spectrum.values.size() != geometry.spectrum_size()) {
    throw Error(Errc::ShapeMismatch, "spectrum shape (M=" + std::to_string(spectrum.bandwidth) + ", d=" +
                                         std::to_string(spectrum.dim) + ", n=" + std::to_string(spectrum.values.size()) +
                                         ") does not match plan");
  }
}

std::vector<MultiIndex> decode_row(const SparseRows& rows, std::size_t j, int L, int d) {
  std::vector<MultiIndex> out;
  for (std::size_t column : rows.columns(j)) out.push_back(multi_index(column, L, d));
  return out;
}

// Steps 1-3 shared by both algorithms: divide by the diagonal factors, zero
// pad, inverse transform, then gather along the sparse rows.
std::vector<Complex> apply_factored(const Geometry& geometry, const SpectralFactors& factors, const SparseRows& rows,
                                    const Spectrum& spectrum) {
  check_spectrum(geometry, spectrum);
  const int M = geometry.bandwidth();
  const int d = geometry.dim();
  std::vector<Complex> scaled(spectrum.values.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const MultiIndex k = multi_index(i, M, d);
    scaled[i] = spectrum.values[i] / factors.at(k);
  }
  const GridSamples samples = inverse_dft_grid(zero_pad_embed(scaled, M, geometry.grid_length(), d));

  std::vector<Complex> out(rows.rows());
  parallel_for(out.size(), [&](std::size_t j) {
    const auto columns = rows.columns(j);
    const auto weights = rows.weights(j);
    Complex sum{};
    for (std::size_t e = 0; e < columns.size(); ++e) sum += samples.values[columns[e]] * weights[e];
    out[j] = sum;
  });
  return out;
}

}  // namespace

std::vector<MultiIndex> BandlimitedPlan::row_indices(std::size_t j) const {
  return decode_row(rows_, j, geometry_.grid_length(), geometry_.dim());
}

std::vector<MultiIndex> NfftPlan::row_indices(std::size_t j) const {
  return decode_row(rows_, j, geometry_.grid_length(), geometry_.dim());
}

double periodized_window(const WindowSpec& window, double delta) noexcept {
  const int L = window.grid_length();
  const double m = window.truncation();
  double sum = 0.0;
  for (int r = -1; r <= 1; ++r) sum += window.scaled((delta + r * L) / m);
  return sum;
}

BandlimitedPlan plan_bandlimited(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes) {
  check_window(geometry, window);
  check_nodes(geometry, nodes, DomainMode::Restricted);
  const int L = geometry.grid_length();
  const int m = geometry.truncation();
  RegularizedSinc kernel(window);
  SpectralFactors factors = spectral_factors(kernel, geometry.bandwidth());

  SparseRows rows;
  std::vector<AxisEntries> axes(static_cast<std::size_t>(geometry.dim()));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto x = nodes.node(j);
    for (std::size_t t = 0; t < axes.size(); ++t) {
      const double u = to_grid_units(x[t], L);
      axes[t].digits.clear();
      axes[t].weights.clear();
      for (int l : nonperiodic_support_1d(x[t], L, m)) {
        axes[t].digits.push_back(static_cast<std::size_t>(l + L / 2));
        axes[t].weights.push_back(kernel.at_offset(u - l));
      }
    }
    append_tensor_row(rows, axes, L);
  }
  return BandlimitedPlan(geometry, kernel, std::move(factors), std::move(rows));
}

std::vector<Complex> execute_bandlimited(const BandlimitedPlan& plan, const Spectrum& spectrum) {
  return apply_factored(plan.geometry(), plan.factors(), plan.rows(), spectrum);
}

NfftPlan plan_nfft(const Geometry& geometry, const WindowSpec& window, const NodeSet& nodes) {
  check_window(geometry, window);
  check_nodes(geometry, nodes, DomainMode::Periodic);
  const int L = geometry.grid_length();
  const int m = geometry.truncation();
  SpectralFactors factors = spectral_factors(window, geometry.bandwidth());

  SparseRows rows;
  std::vector<AxisEntries> axes(static_cast<std::size_t>(geometry.dim()));
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto x = nodes.node(j);
    for (std::size_t t = 0; t < axes.size(); ++t) {
      const double u = to_grid_units(x[t], L);
      axes[t].digits.clear();
      axes[t].weights.clear();
      for (int l : periodic_support_1d(x[t], L, m)) {
        const int wrapped = wrap_index(l, L);
        axes[t].digits.push_back(static_cast<std::size_t>(wrapped + L / 2));
        axes[t].weights.push_back(periodized_window(window, u - wrapped));
      }
    }
    append_tensor_row(rows, axes, L);
  }
  return NfftPlan(geometry, window, std::move(factors), std::move(rows));
}

std::vector<Complex> execute_nfft(const NfftPlan& plan, const Spectrum& coefficients) {
  return apply_factored(plan.geometry(), plan.factors(), plan.rows(), coefficients);
}

}  // namespace bandsinc
