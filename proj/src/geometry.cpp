#include "bandsinc/geometry.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "bandsinc/error.hpp"

namespace bandsinc {

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::Parse, "not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::Parse, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / g, den / g};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return make(parse_integer(text.substr(0, slash), whole), parse_integer(text.substr(slash + 1), whole));
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  std::string digits(text.substr(0, dot));
  std::int64_t den = 1;
  if (dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw Error(Errc::Parse, "too many decimals in '" + std::string(whole) + "'");
    digits += frac;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  }
  if (digits.empty()) throw Error(Errc::Parse, "not a rational number: '" + std::string(whole) + "'");
  const std::int64_t num = parse_integer(digits, whole);
  return make(negative ? -num : num, den);
}

std::size_t ipow(std::size_t n, int d) {
  std::size_t result = 1;
  for (int t = 0; t < d; ++t) result *= n;
  return result;
}

std::size_t Geometry::grid_size() const noexcept { return ipow(static_cast<std::size_t>(L_), d_); }
std::size_t Geometry::spectrum_size() const noexcept { return ipow(static_cast<std::size_t>(M_), d_); }

Geometry make_geometry(int d, int M, Rational lambda, int m) {
  if (d < 1) throw Error(Errc::BadDimension, "dimension must be >= 1, got " + std::to_string(d));
  if (M < 2 || M % 2 != 0) throw Error(Errc::BadBandwidth, "bandwidth M must be even and >= 2, got " + std::to_string(M));
  if (lambda.num < 0 || lambda.den <= 0) throw Error(Errc::BadOversampling, "oversampling lambda must be >= 0, got " + lambda.str());
  if (m < 1) throw Error(Errc::BadTruncation, "truncation m must be >= 1, got " + std::to_string(m));

  // L = M (den + num) / den must be an integer.
  const std::int64_t numerator = static_cast<std::int64_t>(M) * (lambda.den + lambda.num);
  if (numerator % lambda.den != 0) {
    throw Error(Errc::NonIntegerGridLength,
                "M(1+lambda) = " + std::to_string(numerator) + "/" + std::to_string(lambda.den) + " is not an integer");
  }
  const std::int64_t L = numerator / lambda.den;
  if (L > std::numeric_limits<int>::max() / 2) throw Error(Errc::NonIntegerGridLength, "grid length too large");
  if (L % 2 != 0) throw Error(Errc::OddGridLength, "grid length L = " + std::to_string(L) + " is odd");
  if (2 * static_cast<std::int64_t>(m) >= L) {
    throw Error(Errc::TruncationTooLarge, "2m = " + std::to_string(2 * m) + " must be < L = " + std::to_string(L));
  }
  return Geometry(d, M, lambda, static_cast<int>(L), m);
}

std::vector<MultiIndex> grid_indices(int length, int d) {
  const std::size_t count = ipow(static_cast<std::size_t>(length), d);
  std::vector<MultiIndex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(multi_index(i, length, d));
  return out;
}

std::size_t linear_index(std::span<const int> k, int length) {
  std::size_t index = 0;
  for (int component : k) {
    index = index * static_cast<std::size_t>(length) + static_cast<std::size_t>(component + length / 2);
  }
  return index;
}

MultiIndex multi_index(std::size_t linear, int length, int d) {
  MultiIndex k(static_cast<std::size_t>(d));
  for (int t = d - 1; t >= 0; --t) {
    k[static_cast<std::size_t>(t)] = static_cast<int>(linear % static_cast<std::size_t>(length)) - length / 2;
    linear /= static_cast<std::size_t>(length);
  }
  return k;
}

double to_grid_units(double x, int L) noexcept {
  const double u = x * L;
  const double nearest = std::nearbyint(u);
  const double tolerance = 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(u));
  return std::abs(u - nearest) <= tolerance ? nearest : u;
}

int wrap_index(int l, int length) noexcept {
  int r = (l + length / 2) % length;
  if (r < 0) r += length;
  return r - length / 2;
}

std::vector<int> periodic_support_1d(double x, int length, int m) {
  const double u = to_grid_units(x, length);
  const int lo = static_cast<int>(std::ceil(u)) - m;
  const int hi = static_cast<int>(std::floor(u)) + m;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(2 * m + 1));
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

std::vector<int> nonperiodic_support_1d(double x, int length, int m) {
  const double u = to_grid_units(x, length);
  const int lo = std::max(static_cast<int>(std::ceil(u - m)), -length / 2);
  const int hi = std::min(static_cast<int>(std::floor(u + m)), length / 2 - 1);
  std::vector<int> out;
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

namespace {

std::vector<MultiIndex> tensor_product(const std::vector<std::vector<int>>& axes) {
  std::vector<MultiIndex> out;
  std::size_t count = 1;
  for (const auto& axis : axes) count *= axis.size();
  if (count == 0) return out;
  out.reserve(count);
  std::vector<std::size_t> pos(axes.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    MultiIndex k(axes.size());
    for (std::size_t t = 0; t < axes.size(); ++t) k[t] = axes[t][pos[t]];
    out.push_back(std::move(k));
    for (std::size_t t = axes.size(); t-- > 0;) {
      if (++pos[t] < axes[t].size()) break;
      pos[t] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<MultiIndex> support_indices_periodic(std::span<const double> x, int Msigma, int m) {
  std::vector<std::vector<int>> axes;
  for (double component : x) {
    auto axis = periodic_support_1d(component, Msigma, m);
    for (int& l : axis) l = wrap_index(l, Msigma);
    axes.push_back(std::move(axis));
  }
  return tensor_product(axes);
}

std::vector<MultiIndex> support_indices_nonperiodic(std::span<const double> x, int L, int m) {
  std::vector<std::vector<int>> axes;
  for (double component : x) axes.push_back(nonperiodic_support_1d(component, L, m));
  return tensor_product(axes);
}

NodeSet validate_nodes(std::span<const double> flat, int d, int L, int m, DomainMode mode) {
  if (d < 1 || flat.size() % static_cast<std::size_t>(d) != 0) {
    throw Error(Errc::ShapeMismatch, "node coordinates do not form d-vectors");
  }
  const double bound = Geometry::restricted_bound(L, m);
  std::vector<double> coords(flat.begin(), flat.end());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::size_t node = i / static_cast<std::size_t>(d);
    const std::size_t axis = i % static_cast<std::size_t>(d);
    double& x = coords[i];
    if (!std::isfinite(x)) {
      throw NodeOutOfDomain(node, axis, x, "node " + std::to_string(node + 1) + " has a non-finite coordinate");
    }
    if (mode == DomainMode::Restricted) {
      if (x < -bound || x > bound) {
        throw NodeOutOfDomain(node, axis, x,
                              "node " + std::to_string(node + 1) + " coordinate " + std::to_string(axis + 1) + " = " +
                                  std::to_string(x) + " lies outside [-" + std::to_string(bound) + ", " +
                                  std::to_string(bound) + "]");
      }
    } else {
      x -= std::floor(x + 0.5);
      if (x >= 0.5) x -= 1.0;
    }
  }
  return NodeSet(d, mode, std::move(coords));
}

NodeSet validate_nodes(const std::vector<std::vector<double>>& raw, const Geometry& geometry, DomainMode mode) {
  std::vector<double> flat;
  flat.reserve(raw.size() * static_cast<std::size_t>(geometry.dim()));
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j].size() != static_cast<std::size_t>(geometry.dim())) {
      throw Error(Errc::ShapeMismatch, "node " + std::to_string(j + 1) + " has " + std::to_string(raw[j].size()) +
                                           " components, expected " + std::to_string(geometry.dim()));
    }
    flat.insert(flat.end(), raw[j].begin(), raw[j].end());
  }
  return validate_nodes(flat, geometry.dim(), geometry.grid_length(), geometry.truncation(), mode);
}

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadDimension: return "BadDimension";
    case Errc::BadBandwidth: return "BadBandwidth";
    case Errc::BadOversampling: return "BadOversampling";
    case Errc::BadTruncation: return "BadTruncation";
    case Errc::NonIntegerGridLength: return "NonIntegerGridLength";
    case Errc::OddGridLength: return "OddGridLength";
    case Errc::TruncationTooLarge: return "TruncationTooLarge";
    case Errc::NodeOutOfDomain: return "NodeOutOfDomain";
    case Errc::InvalidWindow: return "InvalidWindow";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::QuadratureNotConverged: return "QuadratureNotConverged";
    case Errc::SpectralFactorVanishes: return "SpectralFactorVanishes";
    case Errc::CalibrationDegenerate: return "CalibrationDegenerate";
    case Errc::UnsupportedLength: return "UnsupportedLength";
    case Errc::Parse: return "ParseError";
    case Errc::Io: return "IoError";
  }
  return "Unknown";
}

ErrorKind kind_of(Errc code) noexcept {
  switch (code) {
    case Errc::Parse:
    case Errc::Io:
      return ErrorKind::Io;
    case Errc::QuadratureNotConverged:
    case Errc::SpectralFactorVanishes:
    case Errc::CalibrationDegenerate:
    case Errc::UnsupportedLength:
      return ErrorKind::Numerical;
    default:
      return ErrorKind::Domain;
  }
}

}  // namespace bandsinc
