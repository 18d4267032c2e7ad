#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "bandsinc/cli.hpp"
#include "bandsinc/csv.hpp"
#include "bandsinc/error.hpp"

namespace bandsinc {
namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bandsinc_cli_" + std::to_string(::getpid()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  static std::string spectrum_csv(int M, double value) {
    std::string text = "k1,re,im\n";
    for (int k = -M / 2; k < M / 2; ++k) text += std::to_string(k) + "," + std::to_string(value) + ",0\n";
    return text;
  }

  std::filesystem::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, BandlimitedWritesOneRowPerNode) {
  const auto spectrum = file("s.csv", spectrum_csv(20, 0.05));
  const auto nodes = file("n.csv", "x1\n0\n0.1\n-0.375\n");
  ASSERT_EQ(run({"bandlimited", "--d", "1", "--M", "20", "--lambda", "1", "--m", "5", "--window", "sinh", "--beta", "auto",
                 "--spectrum", spectrum, "--nodes", nodes, "--out", path("f.csv")}),
            0)
      << err_.str();
  const auto table = csv::read_table(path("f.csv"));
  EXPECT_EQ(table.header, (std::vector<std::string>{"j", "re", "im"}));
  ASSERT_EQ(table.rows.size(), 3u);
  EXPECT_EQ(table.rows[2][0], 3.0);
  EXPECT_NE(err_.str().find("beta = "), std::string::npos);
  EXPECT_NE(err_.str().find("flatness"), std::string::npos);
}

TEST_F(CliTest, NodeOutsideRestrictedDomainNamesTheRow) {
  const auto spectrum = file("s.csv", spectrum_csv(20, 1.0));
  const auto nodes = file("n.csv", "x1\n0.5\n");
  EXPECT_EQ(run({"bandlimited", "--M", "20", "--spectrum", spectrum, "--nodes", nodes}), cli::kDomainError);
  EXPECT_NE(err_.str().find("row 1"), std::string::npos) << err_.str();
}

TEST_F(CliTest, ZeroSpectrumGivesZeros) {
  const auto spectrum = file("s.csv", spectrum_csv(8, 0.0));
  const auto nodes = file("n.csv", "x1\n0.1\n-0.2\n0.33\n");
  for (const char* command : {"bandlimited", "nfft"}) {
    ASSERT_EQ(run({command, "--M", "8", "--m", "2", "--beta", "2", "--spectrum", spectrum, "--nodes", nodes}), 0) << err_.str();
    std::istringstream in(out_.str());
    const auto table = csv::parse_table(in, "stdout");
    ASSERT_EQ(table.rows.size(), 3u);
    for (const auto& row : table.rows) {
      EXPECT_EQ(row[1], 0.0);
      EXPECT_EQ(row[2], 0.0);
    }
  }
}

TEST_F(CliTest, NfftAcceptsNodesOnTheFullTorus) {
  const auto spectrum = file("s.csv", spectrum_csv(8, 1.0));
  const auto nodes = file("n.csv", "x1\n0.5\n-0.5\n0.49\n");
  EXPECT_EQ(run({"nfft", "--M", "8", "--m", "2", "--beta", "2", "--spectrum", spectrum, "--nodes", nodes}), 0) << err_.str();
}

TEST_F(CliTest, ExitCodesByErrorKind) {
  const auto spectrum = file("s.csv", spectrum_csv(20, 1.0));
  const auto nodes = file("n.csv", "x1\n0\n");
  EXPECT_EQ(run({"bandlimited", "--M", "20", "--spectrum", path("missing.csv"), "--nodes", nodes}), cli::kIoError);
  EXPECT_EQ(run({"bandlimited", "--M", "20", "--spectrum", file("bad.csv", "k1,re,im\n0,x,0\n"), "--nodes", nodes}),
            cli::kIoError);
  EXPECT_EQ(run({"bandlimited", "--M", "20", "--spectrum", file("short.csv", "k1,re,im\n0,1,0\n"), "--nodes", nodes}),
            cli::kIoError);
  EXPECT_EQ(run({"bandlimited", "--M", "20", "--lambda", "1/3", "--spectrum", spectrum, "--nodes", nodes}),
            cli::kDomainError);
  EXPECT_EQ(run({"bandlimited", "--M", "8", "--lambda", "0", "--m", "1", "--spectrum", spectrum, "--nodes", nodes}),
            cli::kNumericError);
  EXPECT_EQ(run({"fig1", "--interval", "sideways"}), cli::kIoError);
  EXPECT_EQ(run({"fig1", "--beta", "abc"}), cli::kIoError);
  EXPECT_EQ(run({"nonsense"}), cli::kIoError);
}

TEST_F(CliTest, Fig1RowCounts) {
  ASSERT_EQ(run({"fig1", "--out", path("a.csv")}), 0);
  EXPECT_EQ(csv::read_table(path("a.csv")).rows.size(), 961u);
  ASSERT_EQ(run({"fig1", "--S", "1", "--out", path("b.csv")}), 0);
  const auto integers = csv::read_table(path("b.csv"));
  ASSERT_EQ(integers.rows.size(), 31u);
  EXPECT_EQ(integers.rows.front()[0], -15.0);
  EXPECT_EQ(integers.header, (std::vector<std::string>{"v", "err_nfft", "err_bandlimited"}));
  ASSERT_EQ(run({"fig1", "--interval", "full", "--out", path("c.csv")}), 0);
  EXPECT_EQ(csv::read_table(path("c.csv")).rows.size(), 961u);
}

TEST_F(CliTest, Fig2RowCounts) {
  ASSERT_EQ(run({"fig2", "--out", path("a.csv")}), 0);
  const auto table = csv::read_table(path("a.csv"));
  ASSERT_EQ(table.rows.size(), 10u);
  EXPECT_EQ(table.header, (std::vector<std::string>{"M", "err_nfft", "err_bandlimited"}));
  ASSERT_EQ(run({"fig2", "--M-list", "20,40", "--out", path("b.csv")}), 0);
  EXPECT_EQ(csv::read_table(path("b.csv")).rows.size(), 2u);
}

TEST_F(CliTest, Fig2FullScaleRowCount) {
  ASSERT_EQ(run({"fig2", "--full-scale", "--out", path("a.csv")}), 0);
  EXPECT_EQ(csv::read_table(path("a.csv")).rows.size(), 50u);
}

TEST_F(CliTest, SelftestPasses) {
  EXPECT_EQ(run({"selftest"}), 0) << out_.str();
  EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
}

TEST(Csv, RoundTripIsBitExact) {
  csv::Table table{{"a", "b"}, {{0.1, -1e-300}, {1.0 / 3.0, 12345678.901234567}}};
  std::ostringstream first;
  csv::write_table(first, table);
  std::istringstream in(first.str());
  const auto parsed = csv::parse_table(in, "memory");
  EXPECT_EQ(parsed.rows, table.rows);
  std::ostringstream second;
  csv::write_table(second, parsed);
  EXPECT_EQ(second.str(), first.str());
}

TEST(Csv, RejectsRaggedRows) {
  std::istringstream in("a,b\n1,2\n3\n");
  EXPECT_THROW(csv::parse_table(in, "memory"), Error);
}

}  // namespace
}  // namespace bandsinc
