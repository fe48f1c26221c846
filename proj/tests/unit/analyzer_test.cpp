#include <gtest/gtest.h>

#include <cstdlib>

#include "germlab/analyzer.hpp"
#include "germlab/catalog.hpp"
#include "germlab/errors.hpp"
#include "germlab/germ_file.hpp"
#include "germlab/linear_elimination.hpp"
#include "support/oracles.hpp"

using namespace germlab;

namespace {

GermCorank1 germ(const std::string& name, const std::string& g1, const std::string& g2) {
  return make_germ(name, 3, 4, {"x", "y"}, "z", {g1, g2});
}

GermCorank1 a_k(int k) { return germ("A", "z^2", "z*(z^2+x^2+y^" + std::to_string(k + 1) + ")"); }

bool has_violation(const GrpReport& r, const std::string& rule, int k) {
  for (const auto& v : r.violations)
    if (v.rule == rule && v.k == k) return true;
  return false;
}

}  // namespace

TEST(MuAlt, AkAveragesTwoEqualMilnorNumbers) {
  for (int k = 1; k <= 4; ++k) {
    // D^2(A_k)^(12) collapses to the plane curve x^2 + y^(k+1) = 0.
    auto fixed = build_Dk(a_k(k), 2, Partition{{2}});
    auto e = eliminate_linear(fixed.ideal.generators);
    ASSERT_EQ(e.generators.size(), 1u);
    const Polynomial& curve = e.generators.front();
    ASSERT_EQ(curve.vars()->size(), 2u);
    std::vector<Polynomial> jac = {curve.derivative(0), curve.derivative(1)};
    auto mu_fixed = oracle::nakayama_colength(jac);
    ASSERT_TRUE(mu_fixed);
    const auto mu_full = oracle::brieskorn_pham({2, 2, static_cast<unsigned>(k + 1)});
    EXPECT_EQ(*mu_fixed, static_cast<std::uint64_t>(k));
    EXPECT_EQ(mu_alt(a_k(k), 2), Integer((mu_full + *mu_fixed) / 2)) << k;
  }
}

TEST(MuAlt, Q2TriplePoints) {
  auto q2 = germ("Q_2", "x*z+y*z^2", "z^3+y^2*z");
  EXPECT_EQ(mu_alt(q2, 3), 1);
  EXPECT_EQ(mu_alt(q2, 2), 1);
}

TEST(Analyze, A2FailsAtDoublePoints) {
  auto report = analyze(a_k(2));
  EXPECT_EQ(report.verdict, Verdict::Fails);
  EXPECT_TRUE(has_violation(report, "R1", 2));
  ASSERT_TRUE(report.row(2));
  EXPECT_EQ(report.row(2)->milnor, Count(2));
}

TEST(Analyze, Q2IsACandidate) {
  auto report = analyze(germ("Q_2", "x*z+y*z^2", "z^3+y^2*z"));
  EXPECT_EQ(report.verdict, Verdict::Candidate);
  EXPECT_TRUE(report.violations.empty());
  ASSERT_TRUE(report.row(2) && report.row(3));
  EXPECT_EQ(report.row(2)->milnor, Count(1));
  EXPECT_EQ(report.row(3)->milnor, Count(1));
  ASSERT_TRUE(report.mu_I);
  EXPECT_EQ(*report.mu_I, 2);
  EXPECT_TRUE(report.complete);
}

TEST(Analyze, TableTwoRowSixFails) {
  auto report = analyze(nonsimple_entry("VI").germ());
  EXPECT_EQ(report.verdict, Verdict::Fails);
  ASSERT_TRUE(report.row(2));
  EXPECT_EQ(report.row(2)->milnor, Count(3));
}

TEST(Analyze, ImmersionHasTrivialImage) {
  auto report = analyze(germ("immersion", "z", "0"));
  for (const auto& [degree, rank] : report.image_betti) EXPECT_EQ(rank, 0) << degree;
  ASSERT_TRUE(report.mu_I);
  EXPECT_EQ(*report.mu_I, 0);
}

TEST(Analyze, NotFiniteThrows) {
  try {
    analyze(germ("suspension", "z^2", "z^3"));
    FAIL() << "expected NotAFinite";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAFinite);
  }
}

TEST(Analyze, CapMarksTheReportIncomplete) {
  AnalyzeOptions options;
  options.max_k = 2;
  auto report = analyze(germ("Q_2", "x*z+y*z^2", "z^3+y^2*z"), options);
  EXPECT_FALSE(report.complete);
  EXPECT_EQ(report.row(3), nullptr);
}

TEST(Rules, EmptyRowsPass) {
  KRow row;
  row.k = 2;
  row.d_k = 2;
  row.empty = true;
  EXPECT_TRUE(apply_rules({row}).empty());
}

TEST(Rules, SingularPositiveDimensionalRowFailsR1) {
  KRow row;
  row.k = 2;
  row.d_k = 2;
  row.empty = false;
  row.milnor = 2;
  auto v = apply_rules({row});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().rule, "R1");
}

TEST(ZeroDimCounts, Q2) {
  auto q2 = germ("Q_2", "x*z+y*z^2", "z^3+y^2*z");
  auto checks = marar_mond_check(q2);
  auto counts = zero_dim_stable_counts(checks);
  bool saw_21 = false;
  for (const auto& c : counts) {
    EXPECT_FALSE(c.k == 2 && c.partition == Partition{{2}});
    if (c.k == 3 && c.partition == Partition{{2, 1}}) {
      saw_21 = true;
      auto space = build_Dk(q2, 3, Partition{{2, 1}});
      auto expected = oracle::nakayama_colength(space.ideal.generators);
      ASSERT_TRUE(expected);
      EXPECT_EQ(c.count, *expected);
    }
  }
  EXPECT_TRUE(saw_21);
}

TEST(ZeroDimCounts, PlaneToThreeSpaceS1) {
  auto s1 = make_germ("S_1", 2, 3, {"x"}, "z", {"z^2", "z^3+x^2*z"});
  auto counts = zero_dim_stable_counts(marar_mond_check(s1));
  bool found = false;
  for (const auto& c : counts)
    if (c.k == 2 && c.partition == Partition{{2}}) {
      found = true;
      auto ring = make_vars({"x", "z1"});
      auto expected = oracle::nakayama_colength(
          {parse_polynomial("2*z1", ring), parse_polynomial("3*z1^2 + x^2", ring)});
      ASSERT_TRUE(expected);
      EXPECT_EQ(c.count, *expected);
      EXPECT_EQ(c.count, 2u);
    }
  EXPECT_TRUE(found);
}

TEST(Environment, MaxK) {
  ::setenv("GERMLAB_MAX_K", "3", 1);
  EXPECT_EQ(max_k_from_environment(), 3);
  ::unsetenv("GERMLAB_MAX_K");
  EXPECT_EQ(max_k_from_environment(), 0);
}

TEST(Catalog, GuardsAreEnforced) {
  EXPECT_THROW(simple_entry("B", 1), Error);
  EXPECT_THROW(simple_entry("S", 2, 0), Error);
  EXPECT_THROW(simple_entry("P", 3), Error);
  EXPECT_THROW(nonsimple_entry("I", {{"a", 1}, {"b", 1}}), Error);
  EXPECT_THROW(nonsimple_entry("VII", {{"a", Rational(5, 4)}}), Error);
  EXPECT_THROW(nonsimple_entry("IX"), Error);
  EXPECT_NO_THROW(nonsimple_entry("I", {{"a", 2}, {"b", 1}}));
}

TEST(Catalog, FormulasRoundTripThroughTheParser) {
  std::vector<CatalogEntry> all = default_simple_catalog();
  for (auto& e : default_nonsimple_catalog()) all.push_back(e);
  for (const auto& e : all) {
    GermCorank1 f = e.germ();
    for (const auto& g : f.components) {
      Polynomial again = parse_polynomial(g.to_string(), g.vars());
      EXPECT_EQ(again, g) << e.name;
    }
  }
}

TEST(Catalog, TableFiveRowAgreesWithAnalysis) {
  auto row = compute_row(nonsimple_entry("V"));
  EXPECT_TRUE(row.matches()) << row.error;
  ASSERT_TRUE(row.report);
  EXPECT_EQ(row.report->verdict, Verdict::Fails);
  bool r1_at_3 = false;
  for (const auto& v : row.report->violations) r1_at_3 |= v.rule == "R1" && v.k == 3;
  EXPECT_TRUE(r1_at_3);
}

TEST(Catalog, DeterministicAcrossRuns) {
  std::vector<CatalogEntry> entries = {simple_entry("A", 2), simple_entry("Q", 2), simple_entry("P", 1)};
  auto a = compute_table(entries);
  auto b = compute_table(entries);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mu_d2, b[i].mu_d2);
    EXPECT_EQ(a[i].mu_d3, b[i].mu_d3);
    EXPECT_EQ(a[i].mu_image, b[i].mu_image);
    EXPECT_EQ(a[i].entry.name, entries[i].name);
  }
}

TEST(GermFile, ParsesAndPrints) {
  GermFile file = load_germ_file(std::string(GERMLAB_DATA_DIR) + "/germs/q2-witness.germ");
  EXPECT_EQ(file.name, "Q2");
  EXPECT_EQ(file.n, 3);
  EXPECT_EQ(file.p, 4);
  ASSERT_EQ(file.params.size(), 1u);
  EXPECT_EQ(file.params[0].second, 1);
  EXPECT_TRUE(file.has_perturbation());
  GermFile again = parse_germ_file(file.to_string());
  EXPECT_EQ(again.vars, file.vars);
  auto same = [](const GermCorank1& a, const GermCorank1& b) {
    if (a.components.size() != b.components.size()) return false;
    for (std::size_t i = 0; i < a.components.size(); ++i)
      if (!(a.components[i] == b.components[i].in_ring(a.ring))) return false;
    return true;
  };
  EXPECT_TRUE(same(again.germ(), file.germ()));
  EXPECT_TRUE(same(again.perturbation_germ(), file.perturbation_germ()));
}

TEST(GermFile, AcceptsFullComponentList) {
  GermFile file = parse_germ_file("germ A1 { n=3 p=4; vars x y z; components: x, y, z^2, z^3 + x^2*z + y^2*z; }");
  EXPECT_EQ(file.components.size(), 2u);
  EXPECT_EQ(analyze(file.germ()).verdict, Verdict::Candidate);
}

TEST(GermFile, MalformedInputIsRejected) {
  EXPECT_THROW(parse_germ_file("germ X { n=3 p=4; vars x y z; components: x*z + ; }"), Error);
  EXPECT_THROW(parse_germ_file("germ X { n=3 p=4; vars x y z; "), Error);
  EXPECT_THROW(parse_germ_file("germ X { n=3 p=4; vars x y z; components: w^2, z^3; }").germ(), Error);
}
