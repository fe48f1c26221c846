#include <gtest/gtest.h>

#include <set>

#include "germlab/alternating_homology.hpp"
#include "germlab/complex_json.hpp"
#include "germlab/errors.hpp"
#include "germlab/smith_theory.hpp"
#include "support/oracles.hpp"

using namespace germlab;

namespace {

SimplicialGComplex data(const std::string& name) {
  return load_complex(std::string(GERMLAB_DATA_DIR) + "/complexes/" + name);
}

// Boundary of the octahedron on +x,-x,+y,-y,+z,-z.
std::vector<Simplex> octahedron() {
  std::vector<Simplex> out;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) out.push_back({a, b, c});
  return out;
}

std::vector<Simplex> hexagon() {
  std::vector<Simplex> out;
  for (int i = 0; i < 6; ++i) {
    Simplex s = {i, (i + 1) % 6};
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return out;
}

SimplicialGComplex with_labels(std::vector<Simplex> facets, std::size_t n) {
  SimplicialGComplex x;
  for (std::size_t i = 0; i < n; ++i) x.vertices.push_back("v" + std::to_string(i));
  x.facets = std::move(facets);
  return x;
}

// Octahedron with the reflection through the xy-plane as the transposition of Sigma_2.
SimplicialGComplex sphere_with_swap() {
  auto x = with_labels(octahedron(), 6);
  x.k = 2;
  x.sigma_generators = {{0, 1, 2, 3, 5, 4}};
  x.sigma_elements = {{1, 0}};
  return x;
}

// Hexagon with the dihedral action of Sigma_3: reflections through opposite
// vertices are the transpositions, rotations by two steps the 3-cycles.
SimplicialGComplex circle_with_s3() {
  auto x = with_labels(hexagon(), 6);
  x.k = 3;
  x.sigma_generators = {{0, 5, 4, 3, 2, 1}, {2, 1, 0, 5, 4, 3}};
  x.sigma_elements = {{1, 0, 2}, {0, 2, 1}};
  return x;
}

// Exhaustive goodness check: setwise fixed simplexes are pointwise fixed.
bool good_by_enumeration(const SimplicialGComplex& x) {
  std::vector<Permutation> elements;
  for (const auto& e : oracle::generated_group(x)) elements.push_back(e.vertices);
  for (const auto& g : cyclic_group(x)) elements.push_back(g);
  SimplexIndex index(x.facets);
  for (int d = 0; d <= index.dimension(); ++d)
    for (const auto& s : index.cells(d))
      for (const auto& g : elements) {
        std::set<int> image;
        for (int v : s) image.insert(g[static_cast<std::size_t>(v)]);
        if (image != std::set<int>(s.begin(), s.end())) continue;
        for (int v : s)
          if (g[static_cast<std::size_t>(v)] != v) return false;
      }
  return true;
}

}  // namespace

TEST(Homology, HollowTriangle) {
  auto h = homology(std::vector<Simplex>{{0, 1}, {1, 2}, {0, 2}}, Coefficients::integers());
  ASSERT_EQ(h.size(), 2u);
  EXPECT_EQ(h[0].rank, 1u);
  EXPECT_EQ(h[1].rank, 1u);
  EXPECT_TRUE(h[1].torsion.empty());
}

TEST(Homology, Point) {
  auto h = homology(std::vector<Simplex>{{0}}, Coefficients::integers());
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].to_string(), "Z");
}

TEST(Homology, ProjectivePlane) {
  auto x = data("rp2.json");
  auto f2 = betti_numbers(homology(x, Coefficients::prime(2)));
  EXPECT_EQ(f2, (std::vector<std::size_t>{1, 1, 1}));
  auto z = homology(x, Coefficients::integers());
  EXPECT_EQ(z[1].rank, 0u);
  ASSERT_EQ(z[1].torsion.size(), 1u);
  EXPECT_EQ(z[1].torsion[0], 2);
  EXPECT_EQ(betti_numbers(homology(x, Coefficients::rationals())), oracle::rational_betti(x.facets));
  EXPECT_EQ(euler_characteristic(x.facets), 1);
}

TEST(Homology, SphereMatchesOracle) {
  EXPECT_EQ(betti_numbers(homology(octahedron(), Coefficients::integers())),
            (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(oracle::rational_betti(octahedron()), (std::vector<std::size_t>{1, 0, 1}));
}

TEST(Subdivision, SwappedSegmentGetsAFixedMidpoint) {
  auto x = with_labels({{0, 1}}, 2);
  x.k = 2;
  x.sigma_generators = {{1, 0}};
  x.sigma_elements = {{1, 0}};
  EXPECT_FALSE(is_simplicially_good(x));
  auto y = validate_or_subdivide(x);
  EXPECT_EQ(y.vertex_count(), 3u);
  EXPECT_EQ(y.facets.size(), 2u);
  EXPECT_TRUE(is_simplicially_good(y));
  EXPECT_TRUE(good_by_enumeration(y));
  EXPECT_EQ(fixed_simplices(y.facets, y.sigma_generators[0]).size(), 1u);
}

TEST(Subdivision, GoodComplexIsUnchanged) {
  auto x = sphere_with_swap();
  ASSERT_TRUE(is_simplicially_good(x));
  auto y = validate_or_subdivide(x);
  EXPECT_EQ(y.facets, x.facets);
  EXPECT_EQ(y.vertices, x.vertices);
}

TEST(Subdivision, RotatedHollowTriangleIsAlreadyGood) {
  auto x = with_labels({{0, 1}, {1, 2}, {0, 2}}, 3);
  x.k = 3;
  x.sigma_generators = {{1, 2, 0}};
  x.sigma_elements = {{1, 2, 0}};
  EXPECT_TRUE(good_by_enumeration(x));
  EXPECT_TRUE(is_simplicially_good(x));
}

TEST(Subdivision, RotatedFilledTriangle) {
  auto x = with_labels({{0, 1, 2}}, 3);
  x.k = 3;
  x.sigma_generators = {{1, 2, 0}};
  x.sigma_elements = {{1, 2, 0}};
  EXPECT_FALSE(good_by_enumeration(x));
  EXPECT_FALSE(is_simplicially_good(x));
  auto y = validate_or_subdivide(x);
  EXPECT_TRUE(good_by_enumeration(y));
  EXPECT_EQ(betti_numbers(homology(y, Coefficients::integers())), (std::vector<std::size_t>{1, 0, 0}));
  // Only the barycenter is fixed by the rotation.
  EXPECT_EQ(fixed_simplices(y.facets, y.sigma_generators[0]).size(), 1u);
}

TEST(AltHomology, TrianglesGiveZNotZ2) {
  auto r = alternating_homology(data("triangles.json"));
  ASSERT_FALSE(r.integral.empty());
  EXPECT_EQ(r.integral[0].rank, 1u);
  EXPECT_TRUE(r.integral[0].torsion.empty());
  EXPECT_EQ(r.integral[0].to_string(), "Z");
}

TEST(AltHomology, TrivialSymmetricGroupGivesOrdinaryHomology) {
  auto x = data("rp2.json");
  x.k = 1;
  x.sigma_generators.clear();
  x.sigma_elements.clear();
  x.g_action.reset();
  x.p = 0;
  auto r = alternating_homology(x);
  auto h = homology(x.facets, Coefficients::integers());
  ASSERT_EQ(r.integral.size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_EQ(r.integral[i].rank, h[i].rank);
    EXPECT_EQ(r.integral[i].torsion, h[i].torsion);
  }
}

TEST(AltHomology, SwappedPoints) {
  auto x = with_labels({{0}, {1}}, 2);
  x.k = 2;
  x.sigma_generators = {{1, 0}};
  x.sigma_elements = {{1, 0}};
  auto r = alternating_homology(x);
  EXPECT_EQ(r.integral[0].to_string(), "Z");
}

TEST(AltHomology, FieldRanksMatchIsotypeOracle) {
  for (auto x : {sphere_with_swap(), circle_with_s3(), data("triangles.json"), data("sphere-swap.json")}) {
    auto r = alternating_homology(x, Coefficients::rationals());
    auto expected = oracle::alternating_isotype_ranks(x);
    expected.resize(r.field_ranks.size(), 0);
    EXPECT_EQ(r.field_ranks, expected);
  }
}

TEST(ChiAlt, SphereWithSwap) {
  auto f = chi_alt_fixed_point_formula(sphere_with_swap(), 2);
  EXPECT_EQ(f.to_string(), "(2+0)/2 = 1");
  EXPECT_EQ(f.value, 1);
}

TEST(ChiAlt, CircleWithS3) {
  auto x = circle_with_s3();
  ASSERT_TRUE(is_simplicially_good(x));
  auto f = chi_alt_fixed_point_formula(x, 1);
  EXPECT_EQ(f.to_string(), "(0+6+0)/6 = 1");
  EXPECT_EQ(f.group_order, 6u);
  auto r = alternating_homology(x);
  EXPECT_EQ(r.field_ranks, (std::vector<std::size_t>{0, 1}));
}

TEST(ChiAlt, TrivialActionOnAPoint) {
  auto x = with_labels({{0}}, 1);
  x.k = 2;
  x.sigma_generators = {{0}};
  x.sigma_elements = {{1, 0}};
  auto f = chi_alt_fixed_point_formula(x);
  EXPECT_EQ(f.value, 0);
  EXPECT_EQ(f.to_string(), "(1-1)/2 = 0");
}

TEST(Floyd, FreeInvolutionOnACircle) {
  auto x = with_labels(hexagon(), 6);
  x.g_action = Permutation{3, 4, 5, 0, 1, 2};
  x.p = 2;
  auto ledger = verify_floyd(x);
  EXPECT_TRUE(ledger.holds());
  for (auto r : ledger.fixed) EXPECT_EQ(r, 0u);
}

TEST(Floyd, ReflectedSphere) {
  auto x = with_labels(octahedron(), 6);
  x.g_action = Permutation{0, 1, 2, 3, 5, 4};
  x.p = 2;
  auto ledger = verify_floyd(x);
  EXPECT_TRUE(ledger.holds());
  ASSERT_FALSE(ledger.lines.empty());
  EXPECT_EQ(ledger.lines[0].N, 0);
  EXPECT_EQ(ledger.lines[0].lhs, 2u);
  EXPECT_EQ(ledger.lines[0].rhs, 2u);
}

TEST(Floyd, TrivialActionIsEquality) {
  auto x = data("rp2.json");
  x.g_action = Permutation(x.vertex_count());
  for (std::size_t i = 0; i < x.vertex_count(); ++i) (*x.g_action)[i] = static_cast<int>(i);
  x.p = 2;
  auto ledger = verify_floyd(x);
  for (const auto& line : ledger.lines) EXPECT_EQ(line.lhs, line.rhs);
}

TEST(EquivariantSmith, TwoSwappedSpheres) {
  auto x = data("sphere-swap.json");
  auto ledger = verify_equivariant_smith(x);
  EXPECT_TRUE(ledger.holds());
  ASSERT_FALSE(ledger.lines.empty());
  // AH of two swapped spheres is one sphere's homology; the fixed set is two
  // swapped circles, whose AH is one circle's homology.
  EXPECT_EQ(ledger.lines[0].lhs, 2u);
  EXPECT_EQ(ledger.lines[0].rhs, 2u);
}

TEST(EquivariantSmith, DoublePointSphereModel) {
  auto x = sphere_with_swap();
  x.g_action = Permutation{0, 1, 3, 2, 4, 5};
  x.p = 2;
  auto ledger = verify_equivariant_smith(x);
  EXPECT_TRUE(ledger.holds());
  ASSERT_FALSE(ledger.lines.empty());
  EXPECT_EQ(ledger.lines[0].lhs, 1u);
  EXPECT_EQ(ledger.lines[0].rhs, 1u);
}

TEST(EquivariantSmith, TrivialGroupIsEquality) {
  auto x = data("triangles.json");
  x.g_action = Permutation{0, 1, 2, 3, 4, 5};
  x.p = 3;
  auto ledger = verify_equivariant_smith(x);
  for (const auto& line : ledger.lines) EXPECT_EQ(line.lhs, line.rhs);
}

TEST(SpecialRanks, FreeOrbitIsHalved) {
  auto x = with_labels({{0}, {1}}, 2);
  x.g_action = Permutation{1, 0};
  x.p = 2;
  auto r = smith_special_ranks(x, 1);
  ASSERT_FALSE(r.degrees.empty());
  EXPECT_EQ(r.degrees[0].alt, 2u);
  EXPECT_EQ(r.degrees[0].rho, 1u);
  EXPECT_EQ(r.degrees[0].rho_bar, 1u);
  EXPECT_TRUE(r.exact());
}

TEST(SpecialRanks, FixedSimplexContributesNothing) {
  auto x = with_labels({{0}}, 1);
  x.g_action = Permutation{0};
  x.p = 2;
  auto r = smith_special_ranks(x, 1);
  EXPECT_EQ(r.degrees[0].rho, 0u);
  EXPECT_EQ(r.degrees[0].fixed, 1u);
}

TEST(SpecialRanks, TrivialGroupOnTriangles) {
  auto x = data("triangles.json");
  x.g_action = Permutation{0, 1, 2, 3, 4, 5};
  x.p = 2;
  auto r = smith_special_ranks(x, 1);
  for (const auto& d : r.degrees) {
    EXPECT_EQ(d.rho, 0u);
    EXPECT_EQ(d.rho_bar, 0u);
  }
}

TEST(SpecialRanks, SwappedSpheresAreExact) {
  auto x = data("sphere-swap.json");
  for (unsigned i = 1; i < x.p; ++i) EXPECT_TRUE(smith_special_ranks(x, i).exact());
}

TEST(Json, RoundTrip) {
  auto x = data("sphere-swap.json");
  auto y = complex_from_json(complex_to_json(x));
  EXPECT_EQ(y.vertices, x.vertices);
  EXPECT_EQ(y.facets, x.facets);
  EXPECT_EQ(y.sigma_generators, x.sigma_generators);
  EXPECT_EQ(y.sigma_elements, x.sigma_elements);
  EXPECT_EQ(y.g_action, x.g_action);
  EXPECT_EQ(y.p, x.p);
}

TEST(Json, DefaultSigmaElementsAreAdjacentTranspositions) {
  auto x = complex_from_json(R"({"vertices": ["a", "b"], "facets": [[0], [1]], "sigma_generators": [[1, 0]]})");
  EXPECT_EQ(x.k, 2);
  ASSERT_EQ(x.sigma_elements.size(), 1u);
  EXPECT_EQ(x.sigma_elements[0], (Permutation{1, 0}));
}

TEST(Json, NonSimplicialActionIsRejected) {
  try {
    complex_from_json(R"({"vertices": ["a", "b", "c"], "facets": [[0, 1], [2]], "sigma_generators": [[0, 2, 1]]})");
    FAIL() << "expected InvalidAction";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidAction);
  }
}

TEST(Json, NonCommutingActionsAreRejected) {
  auto x = circle_with_s3();
  x.g_action = Permutation{2, 3, 4, 5, 0, 1};
  x.p = 3;
  // The rotation by two steps does not commute with the reflections.
  EXPECT_THROW(validate(x), Error);
}

TEST(Json, MalformedTextIsRejected) {
  EXPECT_THROW(complex_from_json("{\"vertices\": [1, 2], \"facets\": [[0, 5]]}"), Error);
  EXPECT_THROW(complex_from_json("not json"), Error);
}
