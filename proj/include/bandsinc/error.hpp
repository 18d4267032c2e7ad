#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bandsinc {

/// Coarse classification used by the CLI to choose an exit status.
enum class ErrorKind { Io, Domain, Numerical };

enum class Errc {
  BadDimension,
  BadBandwidth,
  BadOversampling,
  BadTruncation,
  NonIntegerGridLength,
  OddGridLength,
  TruncationTooLarge,
  NodeOutOfDomain,
  InvalidWindow,
  ShapeMismatch,
  SizeGuardExceeded,
  QuadratureNotConverged,
  SpectralFactorVanishes,
  CalibrationDegenerate,
  UnsupportedLength,
  Parse,
  Io,
};

const char* to_string(Errc code) noexcept;
ErrorKind kind_of(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  Errc code_;
};

/// A node violated the domain restriction. Indices are zero-based.
class NodeOutOfDomain : public Error {
 public:
  NodeOutOfDomain(std::size_t node, std::size_t coordinate, double value, const std::string& what)
      : Error(Errc::NodeOutOfDomain, what), node_(node), coordinate_(coordinate), value_(value) {}

  std::size_t node() const noexcept { return node_; }
  std::size_t coordinate() const noexcept { return coordinate_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t node_;
  std::size_t coordinate_;
  double value_;
};

class SpectralFactorVanishes : public Error {
 public:
  SpectralFactorVanishes(int frequency, double value, const std::string& what)
      : Error(Errc::SpectralFactorVanishes, what), frequency_(frequency), value_(value) {}

  int frequency() const noexcept { return frequency_; }
  double value() const noexcept { return value_; }

 private:
  int frequency_;
  double value_;
};

}  // namespace bandsinc
