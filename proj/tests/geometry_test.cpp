#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "bandsinc/error.hpp"
#include "bandsinc/geometry.hpp"

namespace bandsinc {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return Errc::Io;
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("1"), (Rational{1, 1}));
  EXPECT_EQ(Rational::parse("2/4"), (Rational{1, 2}));
  EXPECT_EQ(Rational::parse("0.25"), (Rational{1, 4}));
  EXPECT_EQ(Rational::parse("1/3").str(), "1/3");
  EXPECT_EQ(code_of([] { Rational::parse("abc"); }), Errc::Parse);
  EXPECT_EQ(code_of([] { Rational::parse("1/0"); }), Errc::Parse);
}

TEST(MakeGeometry, FigureOneSetup) {
  const Geometry g = make_geometry(1, 20, Rational{1, 1}, 5);
  EXPECT_EQ(g.grid_length(), 40);
  EXPECT_DOUBLE_EQ(g.sigma(), 2.0);
  EXPECT_DOUBLE_EQ(g.restricted_bound(), 0.375);
  EXPECT_EQ(g.grid_size(), 40u);
  EXPECT_EQ(g.spectrum_size(), 20u);
}

TEST(MakeGeometry, NoOversampling) {
  EXPECT_EQ(make_geometry(1, 8, Rational{0, 1}, 3).grid_length(), 8);
}

TEST(MakeGeometry, RejectsInvalidInput) {
  EXPECT_EQ(code_of([] { make_geometry(1, 20, Rational{1, 3}, 2); }), Errc::NonIntegerGridLength);
  EXPECT_EQ(code_of([] { make_geometry(0, 20, Rational{1, 1}, 2); }), Errc::BadDimension);
  EXPECT_EQ(code_of([] { make_geometry(1, 7, Rational{1, 1}, 2); }), Errc::BadBandwidth);
  EXPECT_EQ(code_of([] { make_geometry(1, 20, Rational{1, 1}, 0); }), Errc::BadTruncation);
  EXPECT_EQ(code_of([] { make_geometry(1, 4, Rational{0, 1}, 2); }), Errc::TruncationTooLarge);
  // L = 10 * 3/2 = 15 is an integer but odd.
  EXPECT_EQ(code_of([] { make_geometry(1, 10, Rational{1, 2}, 2); }), Errc::OddGridLength);
}

TEST(GridIndices, Enumeration) {
  EXPECT_EQ(grid_indices(4, 1), (std::vector<MultiIndex>{{-2}, {-1}, {0}, {1}}));
  EXPECT_EQ(grid_indices(2, 2), (std::vector<MultiIndex>{{-1, -1}, {-1, 0}, {0, -1}, {0, 0}}));
  const auto big = grid_indices(40, 1);
  ASSERT_EQ(big.size(), 40u);
  EXPECT_EQ(big.front()[0], -20);
  EXPECT_EQ(big.back()[0], 19);
}

TEST(GridIndices, LinearIndexRoundTrip) {
  for (std::size_t i = 0; i < 64; ++i) EXPECT_EQ(linear_index(multi_index(i, 4, 3), 4), i);
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> first_axis(const std::vector<MultiIndex>& rows) {
  std::vector<int> out;
  for (const auto& k : rows) out.push_back(k[0]);
  return out;
}

TEST(SupportPeriodic, CenteredAndInteriorNodes) {
  const double zero = 0.0;
  EXPECT_EQ(first_axis(support_indices_periodic({&zero, 1}, 40, 5)), (std::vector<int>{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5}));
  const double x = 0.3;
  EXPECT_EQ(sorted(first_axis(support_indices_periodic({&x, 1}, 40, 1))), (std::vector<int>{11, 12, 13}));
}

TEST(SupportPeriodic, WrapsAcrossTheBoundary) {
  // 40 * 0.49 = 19.6, so the window [17.6, 21.6] covers 18..21, i.e. 18, 19, -20, -19.
  const double x = 0.49;
  EXPECT_EQ(sorted(first_axis(support_indices_periodic({&x, 1}, 40, 2))), (std::vector<int>{-20, -19, 18, 19}));
}

TEST(SupportPeriodic, MatchesBruteForceDefinition) {
  const int L = 16;
  const int m = 3;
  for (double x = -0.5; x < 0.5; x += 0.0371) {
    std::vector<int> expected;
    for (int l = -L / 2; l < L / 2; ++l) {
      for (int z : {-1, 0, 1}) {
        if (std::abs(L * x - l - z * L) <= m) {
          expected.push_back(l);
          break;
        }
      }
    }
    EXPECT_EQ(sorted(first_axis(support_indices_periodic({&x, 1}, L, m))), expected) << "x=" << x;
  }
}

TEST(SupportNonperiodic, Examples) {
  const double zero = 0.0;
  EXPECT_EQ(first_axis(support_indices_nonperiodic({&zero, 1}, 40, 5)), (std::vector<int>{-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5}));
  const double x = 0.3;
  EXPECT_EQ(first_axis(support_indices_nonperiodic({&x, 1}, 40, 2)), (std::vector<int>{10, 11, 12, 13, 14}));
  const double edge = 0.5 - 5.0 / 40;
  const auto row = first_axis(support_indices_nonperiodic({&edge, 1}, 40, 5));
  EXPECT_EQ(row.front(), 10);
  EXPECT_EQ(row.back(), 19);
  EXPECT_EQ(row.size(), 10u);
}

TEST(SupportNonperiodic, TensorProductSize) {
  const double x[2] = {0.01, -0.2013};
  EXPECT_EQ(support_indices_nonperiodic(x, 40, 2).size(), 16u);
  const double grid[2] = {0.0, 0.25};
  EXPECT_EQ(support_indices_nonperiodic(grid, 40, 2).size(), 25u);
}

TEST(ValidateNodes, RestrictedDomain) {
  const Geometry g = make_geometry(1, 20, Rational{1, 1}, 5);
  EXPECT_EQ(validate_nodes({{0.0}}, g, DomainMode::Restricted).size(), 1u);
  EXPECT_EQ(validate_nodes({{0.375}}, g, DomainMode::Restricted).size(), 1u);
  EXPECT_EQ(validate_nodes({{-0.375}}, g, DomainMode::Restricted).size(), 1u);
  try {
    validate_nodes({{0.0}, {0.5}}, g, DomainMode::Restricted);
    FAIL() << "0.5 accepted";
  } catch (const NodeOutOfDomain& e) {
    EXPECT_EQ(e.node(), 1u);
    EXPECT_EQ(e.coordinate(), 0u);
    EXPECT_EQ(e.value(), 0.5);
  }
}

TEST(ValidateNodes, PeriodicWrapsIntoHalfOpenInterval) {
  const Geometry g = make_geometry(1, 20, Rational{1, 1}, 5);
  const NodeSet nodes = validate_nodes({{0.5}, {0.75}, {-0.5}, {1.25}}, g, DomainMode::Periodic);
  EXPECT_DOUBLE_EQ(nodes.node(0)[0], -0.5);
  EXPECT_DOUBLE_EQ(nodes.node(1)[0], -0.25);
  EXPECT_DOUBLE_EQ(nodes.node(2)[0], -0.5);
  EXPECT_DOUBLE_EQ(nodes.node(3)[0], 0.25);
}

TEST(ValidateNodes, RejectsWrongDimensionAndNonFinite) {
  const Geometry g = make_geometry(2, 8, Rational{1, 1}, 2);
  EXPECT_EQ(code_of([&] { validate_nodes({{0.0}}, g, DomainMode::Restricted); }), Errc::ShapeMismatch);
  EXPECT_THROW(validate_nodes({{0.0, NAN}}, g, DomainMode::Periodic), Error);
}

TEST(Errors, KindsDriveExitStatus) {
  EXPECT_EQ(kind_of(Errc::Parse), ErrorKind::Io);
  EXPECT_EQ(kind_of(Errc::Io), ErrorKind::Io);
  EXPECT_EQ(kind_of(Errc::NodeOutOfDomain), ErrorKind::Domain);
  EXPECT_EQ(kind_of(Errc::QuadratureNotConverged), ErrorKind::Numerical);
  EXPECT_EQ(kind_of(Errc::CalibrationDegenerate), ErrorKind::Numerical);
}

}  // namespace
}  // namespace bandsinc
