#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "germlab/errors.hpp"
#include "germlab/multiple_points.hpp"
#include "support/oracles.hpp"

using namespace germlab;

namespace {

GermCorank1 q2() { return make_germ("Q_2", 3, 4, {"x", "y"}, "z", {"x*z+y*z^2", "z^3+y^2*z"}); }

int inversion_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

int count_cycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size());
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

bool ideal_contains(const Ideal& ideal, const Polynomial& p) {
  return standard_basis(Ideal(ideal.ring, ideal.generators, false)).reduce(p).is_zero();
}

}  // namespace

TEST(Partitions, CountsAndClassSizes) {
  const std::vector<std::size_t> partition_numbers = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int k = 1; k <= 8; ++k) {
    auto ps = partitions(k);
    ASSERT_EQ(ps.size(), partition_numbers[static_cast<std::size_t>(k - 1)]);
    EXPECT_TRUE(ps.front().is_identity());
    std::uint64_t total = 0;
    for (const auto& p : ps) {
      EXPECT_EQ(p.k(), k);
      total += p.class_size();
    }
    EXPECT_EQ(total, oracle::factorial(static_cast<unsigned>(k)));
  }
}

TEST(Partitions, ClassSizeOfTenCycleType) {
  Partition p{{4, 2, 2, 1, 1}};
  EXPECT_EQ(p.k(), 10);
  EXPECT_EQ(p.cycles(), 5);
  EXPECT_EQ(p.to_string(), "(4,2,2,1,1)");
  // 10! / (4 * 2^2 * 2! * 1^2 * 2!)
  EXPECT_EQ(p.class_size(), 56700u);
}

TEST(Partitions, CanonicalPermutationHasTheCycleType) {
  for (int k = 1; k <= 8; ++k)
    for (const auto& p : partitions(k)) {
      auto perm = canonical_permutation(p);
      std::vector<int> sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> iota(static_cast<std::size_t>(k));
      std::iota(iota.begin(), iota.end(), 0);
      ASSERT_EQ(sorted, iota);
      EXPECT_EQ(count_cycles(perm), p.cycles()) << p.to_string();
    }
}

TEST(Parity, SignMatchesCycleCountForAllPartitionsUpToEight) {
  for (int k = 1; k <= 8; ++k)
    for (const auto& p : partitions(k)) {
      const int sign = inversion_sign(canonical_permutation(p));
      EXPECT_EQ(sign, (k - p.cycles()) % 2 ? -1 : 1) << p.to_string();
      EXPECT_EQ(p.sign(), sign) << p.to_string();
    }
}

TEST(Parity, ExpectedDimensionParity) {
  for (int n = 1; n <= 6; ++n)
    for (int p = n + 1; p <= n + 4; ++p)
      for (int k = 1; k <= 8; ++k)
        for (const auto& part : partitions(k)) {
          auto d = expected_dims(n, p, k, part);
          const int sign = inversion_sign(canonical_permutation(part));
          const int lhs = ((d.d_k % 2 + 2) % 2 ? -1 : 1) * sign;
          const int rhs = (d.d_k_sigma % 2 + 2) % 2 ? -1 : 1;
          EXPECT_EQ(lhs, rhs) << n << " " << p << " " << k << " " << part.to_string();
        }
}

TEST(ExpectedDims, ThreeToFour) {
  auto d2 = expected_dims(3, 4, 2, Partition::identity(2));
  EXPECT_EQ(d2.d_k, 2);
  EXPECT_EQ(d2.d_k_sigma, 2);
  auto d3 = expected_dims(3, 4, 3, Partition{{3}});
  EXPECT_EQ(d3.d_k, 1);
  EXPECT_EQ(d3.d_k_sigma, -1);
  EXPECT_EQ(d3.sigma_sharp, 1);
  EXPECT_EQ(expected_dims(3, 4, 4, Partition::identity(4)).d_k, 0);
}

TEST(ExpectedDims, SigmaSharpOfTenCycleType) {
  EXPECT_EQ(expected_dims(3, 4, 10, Partition{{4, 2, 2, 1, 1}}).sigma_sharp, 5);
}

TEST(MakeGerm, Validation) {
  EXPECT_THROW(make_germ("bad", 3, 4, {"x", "y"}, "z", {"z^2"}), Error);
  EXPECT_THROW(make_germ("bad", 3, 4, {"x", "y"}, "z", {"z^2 + 1", "z^3"}), Error);
  EXPECT_THROW(make_germ("bad", 4, 4, {"x", "y", "w"}, "z", {"z^2"}), Error);
  EXPECT_NO_THROW(make_germ("ok", 3, 4, {"x", "y"}, "z", {"z^2 + s", "z^3"}, {"s"}));
}

TEST(BuildDk, DoublePointsOfQ2) {
  auto space = build_Dk(q2(), 2, Partition::identity(2));
  const auto& ring = space.ideal.ring;
  EXPECT_EQ(ring->names(), (std::vector<std::string>{"x", "y", "z1", "z2"}));
  ASSERT_EQ(space.ideal.generators.size(), 2u);
  EXPECT_EQ(space.ideal.generators[0], parse_polynomial("x + y*(z1 + z2)", ring));
  EXPECT_EQ(space.ideal.generators[1], parse_polynomial("z1^2 + z1*z2 + z2^2 + y^2", ring));
  EXPECT_EQ(space.d_k, 2);
  EXPECT_EQ(local_dimension(space.ideal), 2);
}

TEST(BuildDk, TriplePointsOfQ2) {
  auto space = build_Dk(q2(), 3, Partition::identity(3));
  const auto& ring = space.ideal.ring;
  for (const char* g : {"x + y*(z1 + z2)", "z1^2 + z1*z2 + z2^2 + y^2", "y", "z1 + z2 + z3"})
    EXPECT_TRUE(ideal_contains(space.ideal, parse_polynomial(g, ring))) << g;
  EXPECT_EQ(local_dimension(space.ideal), 1);
}

TEST(BuildDk, FixedPointsAddDiagonalEquations) {
  auto full = build_Dk(q2(), 3, Partition::identity(3));
  auto fixed = build_Dk(q2(), 3, Partition{{2, 1}});
  const auto& ring = fixed.ideal.ring;
  EXPECT_EQ(fixed.expected_dim, 0);
  EXPECT_TRUE(ideal_contains(fixed.ideal, parse_polynomial("z1 - z2", ring)));
  for (const auto& g : full.ideal.generators) EXPECT_TRUE(ideal_contains(fixed.ideal, g));
}

TEST(BuildDk, TriplePointsOfA1AreEmpty) {
  auto a1 = make_germ("A_1", 3, 4, {"x", "y"}, "z", {"z^2", "z*(z^2+x^2+y^2)"});
  auto space = build_Dk(a1, 3, Partition::identity(3));
  EXPECT_TRUE(germ_is_empty(space.ideal));
}

TEST(BuildDk, IdealIsSymmetricInTheCopies) {
  auto f = make_germ("R_3", 3, 4, {"x", "y"}, "z", {"x*z+z^3", "y*z^2+z^4+z^5"});
  auto space = build_Dk(f, 3, Partition::identity(3));
  const auto& ring = space.ideal.ring;
  const std::vector<std::size_t> z = {*ring->index_of("z1"), *ring->index_of("z2"), *ring->index_of("z3")};
  const std::vector<std::vector<int>> moves = {{1, 0, 2}, {1, 2, 0}};
  for (const auto& g : space.ideal.generators)
    for (const auto& move : moves) {
      Polynomial image(ring);
      for (const auto& [m, c] : g.terms()) {
        Monomial moved = m;
        for (std::size_t i = 0; i < 3; ++i) moved.exp[z[static_cast<std::size_t>(move[i])]] = m.exp[z[i]];
        image.add_term(moved, c);
      }
      EXPECT_TRUE(ideal_contains(space.ideal, image)) << g.to_string();
    }
}

TEST(MararMond, Q2IsFinite) {
  auto result = marar_mond_check(q2());
  EXPECT_TRUE(result.finite);
  EXPECT_EQ(result.first_empty_k, 4);
  for (const auto& e : result.entries) {
    EXPECT_NE(e.status, SpaceStatus::Violation) << e.k << e.partition.to_string();
    if (e.k == 4) {
      EXPECT_EQ(e.status, SpaceStatus::Empty);
    }
  }
  const auto* d2 = result.find(2, Partition::identity(2));
  ASSERT_TRUE(d2 && d2->icis);
  EXPECT_EQ(d2->icis->milnor, Count(1));
  const auto* d3 = result.find(3, Partition::identity(3));
  ASSERT_TRUE(d3 && d3->icis);
  EXPECT_EQ(d3->icis->milnor, Count(1));
  const auto* d3c = result.find(3, Partition{{3}});
  ASSERT_TRUE(d3c);
  EXPECT_EQ(d3c->status, SpaceStatus::Point);
}

TEST(MararMond, NonFiniteSuspension) {
  auto f = make_germ("suspension", 3, 4, {"x", "y"}, "z", {"z^2", "z^3"});
  auto result = marar_mond_check(f);
  EXPECT_FALSE(result.finite);
  // Dimension oracle: the fixed locus of the swap has the wrong dimension.
  auto swap = build_Dk(f, 2, Partition{{2}});
  EXPECT_NE(local_dimension(swap.ideal), swap.expected_dim);
  const auto* e = result.find(2, Partition{{2}});
  ASSERT_TRUE(e);
  EXPECT_EQ(e->status, SpaceStatus::Violation);
}

TEST(MararMond, ImmersionHasNoMultiplePoints) {
  auto f = make_germ("immersion", 3, 4, {"x", "y"}, "z", {"z", "0"});
  auto result = marar_mond_check(f);
  EXPECT_TRUE(result.finite);
  EXPECT_EQ(result.first_empty_k, 2);
  for (const auto& e : result.entries) EXPECT_EQ(e.status, SpaceStatus::Empty);
}

TEST(MararMond, RespectsTheCap) {
  MararMondOptions options;
  options.max_k = 2;
  auto result = marar_mond_check(q2(), options);
  EXPECT_EQ(result.first_empty_k, 0);
  for (const auto& e : result.entries) EXPECT_LE(e.k, 2);
}
