#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deltaho/report.hpp"
#include "deltaho/spectrum.hpp"
#include "deltaho/reference_table.hpp"
#include "deltaho/units.hpp"
#include "deltaho/validation.hpp"
#include "deltaho/wavefunction.hpp"

namespace report = deltaho::report;
using deltaho::Coupling;

namespace {

report::RunReport make_report(double g, std::size_t n) {
  deltaho::SolverConfig c;
  c.n_states = n;
  report::RunReport r;
  r.g = g;
  r.states = deltaho::full_spectrum(Coupling(g), c);
  for (const auto& s : r.states) {
    r.residuals.push_back(s.parity == deltaho::Parity::even ? deltaho::jump_check(s.nu, Coupling(g))
                                                             : 0.0);
  }
  r.config = {{"g", g}, {"states", n}};
  return r;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST(Format, Numbers) {
  EXPECT_EQ(report::format_number(0.392744045308952, false), "0.392744");
  EXPECT_EQ(report::format_number(0.1, true), "0.10000000000000001");
  EXPECT_EQ(report::format_fixed(0.39274, 4), "0.3927");
  EXPECT_EQ(report::format_fixed(-12.98996, 4), "-12.9900");
  EXPECT_EQ(report::format_fixed(-0.00001, 4), "0.0000");
}

TEST(Format, FullPrecisionRoundTrips) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_EQ(std::stod(report::format_number(x, true)), x);
  }
}

TEST(Csv, Quoting) {
  EXPECT_EQ(report::csv_field("plain"), "plain");
  EXPECT_EQ(report::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(report::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(report::csv_field("two\nlines"), "\"two\nlines\"");

  report::CsvTable t;
  t.comments = {"note"};
  t.header = {"x", "F(g=1,a)"};
  t.rows = {{"1", "2"}};
  EXPECT_EQ(t.str(), "# note\nx,\"F(g=1,a)\"\n1,2\n");
}

TEST(RunReport, JsonRoundTripRandomCouplings) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 50; ++i) {
    auto r = make_report(u(rng), 1 + i % 7);
    if (i % 3 == 0) r.oracle_gaps = std::vector<double>(r.states.size(), 1.25e-5);
    if (i % 4 == 0) r.timestamp = "2026-01-01T00:00:00Z";
    const auto text = report::to_json(r).dump();
    EXPECT_EQ(report::run_report_from_json(report::json::parse(text)), r);
  }
}

TEST(RunReport, ResidualsWithinBound) {
  for (double g : {-5.0, -1.0, 0.25, 5.0}) {
    for (double res : make_report(g, 10).residuals) EXPECT_LE(res, 1e-8);
  }
}

TEST(RunReport, JsonKeys) {
  const auto j = report::to_json(make_report(1.0, 2));
  for (const char* k : {"g", "states", "residuals", "config", "metadata"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_FALSE(j.contains("oracle_gaps"));
  EXPECT_EQ(j["states"][1]["parity"], "odd");
  EXPECT_THROW(report::parse_parity("sideways"), deltaho::error);
}

TEST(RunReport, CsvLayout) {
  auto r = make_report(1.0, 3);
  r.oracle_gaps = std::vector<double>{1e-5, 2e-5, 3e-5};
  const auto t = report::to_csv(r, false);
  EXPECT_EQ(t.header.back(), "oracle_gap");
  EXPECT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0][1], "even");
  EXPECT_EQ(t.rows[0][2], "0.392744");
  EXPECT_EQ(t.rows[1][2], "1");
}

TEST(ReferenceTable, FixtureMatchesEmbeddedReference) {
  namespace rt = deltaho::reference_table;
  std::ifstream in(std::string(DELTAHO_DATA_DIR) + "/even_levels_reference.csv");
  ASSERT_TRUE(in) << "fixture missing";
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split(line));
  }
  ASSERT_EQ(rows.size(), rt::levels + 1);
  ASSERT_EQ(rows[0].size(), rt::couplings.size() + 1);
  for (std::size_t c = 0; c < rt::couplings.size(); ++c) {
    EXPECT_EQ(std::stod(rows[0][c + 1].substr(2)), rt::couplings[c]);
  }
  for (std::size_t r = 0; r < rt::levels; ++r) {
    for (std::size_t c = 0; c < rt::couplings.size(); ++c) {
      EXPECT_EQ(std::stod(rows[r + 1][c + 1]), rt::reference[r][c]);
    }
  }
}

TEST(ReferenceTable, ComputedWithinTolerance) {
  namespace rt = deltaho::reference_table;
  const auto v = deltaho::validation::compute_reference_table();
  int count = 0;
  for (std::size_t r = 0; r < rt::levels; ++r) {
    for (std::size_t c = 0; c < rt::couplings.size(); ++c) {
      EXPECT_NEAR(v[r][c], rt::reference[r][c], rt::tolerance);
      if (rt::couplings[c] != 0.0) ++count;
    }
  }
  EXPECT_EQ(count, 40);
}

TEST(PhysicalScales, NaturalUnits) {
  deltaho::PhysicalScales s{1.0, 1.0, 1.0, 1.0};
  EXPECT_EQ(s.length(), 1.0);
  EXPECT_EQ(s.coupling().value(), 1.0);
  EXPECT_EQ(s.energy(2.5), 2.5);
}

TEST(PhysicalScales, NoDelta) {
  deltaho::PhysicalScales s{2.0, 3.0, 1.5, 0.0};
  EXPECT_EQ(s.coupling().value(), 0.0);
  for (int n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(s.energy(n + 0.5), (n + 0.5) * 1.5 * 3.0);
}

TEST(PhysicalScales, DeepDeltaReference) {
  deltaho::PhysicalScales s{1.0, 1.0, 1.0, -5.0};
  EXPECT_EQ(s.isolated_delta_energy(), -12.5);
  EXPECT_EQ(s.isolated_delta_kappa(), 5.0);
  deltaho::SolverConfig c;
  c.n_states = 1;
  const double e = s.energy(deltaho::solve_even(s.coupling(), c)[0].epsilon);
  EXPECT_NEAR(e, -12.49, 5e-4);
}

TEST(PhysicalScales, ScalingLaws) {
  deltaho::PhysicalScales s{4.0, 0.25, 2.0, 3.0};
  const double a0 = std::sqrt(2.0 / (4.0 * 0.25));
  EXPECT_DOUBLE_EQ(s.length(), a0);
  EXPECT_DOUBLE_EQ(s.coupling().value(), 3.0 * a0 * 4.0 / 4.0);
  // kappa a0 = |g| in oscillator units.
  EXPECT_DOUBLE_EQ(s.isolated_delta_kappa() * s.length(), std::abs(s.coupling().value()));
}

TEST(PhysicalScales, Validation) {
  EXPECT_THROW((deltaho::PhysicalScales{0.0, 1.0, 1.0, 1.0}.validate()), deltaho::domain_error);
  EXPECT_THROW((deltaho::PhysicalScales{1.0, -1.0, 1.0, 1.0}.validate()), deltaho::domain_error);
  EXPECT_THROW((deltaho::PhysicalScales{1.0, 1.0, 0.0, 1.0}.validate()), deltaho::domain_error);
  EXPECT_NO_THROW((deltaho::PhysicalScales{1.0, 1.0, 1.0, -3.0}.validate()));
}
