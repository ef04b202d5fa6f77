#include <gtest/gtest.h>

#include <set>

#include "borel/errors.hpp"
#include "borel/good_bijection.hpp"

using namespace borel;

namespace {

NodeSubset nodes(std::initializer_list<int> labels) {
  NodeSubset s = 0;
  for (int l : labels) s |= NodeSubset{1} << (l - 1);
  return s;
}

AbelianIdeal generated(const RootSystem& rs, std::initializer_list<IntVector> gens) {
  std::vector<Root> r;
  for (const auto& c : gens) r.push_back(Root{c});
  return ideal_generated_by(rs, r);
}

// Symmetric difference of generator supports, computed straight from the
// coefficient vectors.
NodeSubset xor_of_supports(const std::vector<Root>& gens) {
  NodeSubset s = 0;
  for (const Root& g : gens)
    for (std::size_t i = 0; i < g.coeffs.size(); ++i)
      if (g.coeffs[i]) s ^= NodeSubset{1} << i;
  return s;
}

}  // namespace

TEST(Interval, RoundTrip) {
  EXPECT_EQ(interval_of(Root{{0, 1, 1}}), (Interval{2, 3}));
  EXPECT_EQ(root_of(Interval{2, 3}, 4).coeffs, (IntVector{0, 1, 1, 0}));
  EXPECT_EQ((Interval{2, 3}).mask(), nodes({2, 3}));
  EXPECT_EQ(maximal_intervals(nodes({1, 3, 4})), (std::vector<Interval>{{1, 1}, {3, 4}}));
  EXPECT_TRUE(maximal_intervals(0).empty());
}

TEST(GeneratorChain, Examples) {
  EXPECT_TRUE(validate_generator_chain(3, std::vector<Interval>{{1, 2}, {2, 3}}));
  EXPECT_FALSE(validate_generator_chain(3, std::vector<Interval>{{1, 1}, {2, 3}}));
  EXPECT_TRUE(validate_generator_chain(3, std::vector<Interval>{{1, 3}}));
  EXPECT_TRUE(validate_generator_chain(3, std::vector<Interval>{}));
  EXPECT_FALSE(validate_generator_chain(3, std::vector<Interval>{{1, 4}}));
}

TEST(GeneratorChain, HoldsForEveryIdeal) {
  for (int n = 1; n <= 7; ++n) {
    const RootSystem rs(TypeSpec::make(Series::A, n));
    for (const auto& ideal : enumerate_abelian_ideals(rs)) {
      std::vector<Interval> gens;
      for (const Root& g : generators(rs, ideal)) gens.push_back(interval_of(g));
      std::sort(gens.begin(), gens.end());
      EXPECT_TRUE(validate_generator_chain(n, gens));
    }
  }
}

TEST(PhiA, Examples) {
  const RootSystem a3(TypeSpec::parse("A3"));
  EXPECT_EQ(phi_a(a3, generated(a3, {{1, 1, 1}})), nodes({1, 2, 3}));
  EXPECT_EQ(phi_a(a3, generated(a3, {{1, 1, 0}, {0, 1, 1}})), nodes({1, 3}));
  EXPECT_EQ(phi_a(a3, AbelianIdeal{}), 0u);
  EXPECT_THROW(phi_a(RootSystem(TypeSpec::parse("C3")), AbelianIdeal{}), WrongType);
}

TEST(PhiA, InverseExamples) {
  EXPECT_EQ(phi_a_inverse_generators(3, nodes({1, 3})), (std::vector<Interval>{{1, 2}, {2, 3}}));
  EXPECT_EQ(phi_a_inverse_generators(3, nodes({2})), (std::vector<Interval>{{2, 2}}));
  for (int a = 1; a <= 6; ++a)
    for (int b = a; b <= 6; ++b)
      EXPECT_EQ(phi_a_inverse_generators(6, Interval{a, b}.mask()), (std::vector<Interval>{{a, b}}));
}

TEST(PhiA, BijectionPreservingComponents) {
  for (int n = 1; n <= 9; ++n) {
    const RootSystem rs(TypeSpec::make(Series::A, n));
    const Graph g = diagram_of(rs);
    std::set<NodeSubset> images;
    for (const auto& ideal : enumerate_abelian_ideals(rs)) {
      const auto gens = generators(rs, ideal);
      const NodeSubset s = phi_a(rs, ideal);
      EXPECT_EQ(s, xor_of_supports(gens));
      EXPECT_EQ(component_count(g, s), static_cast<int>(gens.size()));
      EXPECT_EQ(phi_a_inverse(rs, s), ideal);
      images.insert(s);
    }
    EXPECT_EQ(images.size(), std::size_t{1} << n);
  }
}

TEST(PhiC, Unfolding) {
  EXPECT_EQ(unfold_c_root(2, Root{{1, 1}}), (std::vector<Interval>{{1, 2}, {2, 3}}));
  EXPECT_EQ(unfold_c_root(2, Root{{2, 1}}), (std::vector<Interval>{{1, 3}}));
  EXPECT_EQ(unfold_c_root(2, Root{{0, 1}}), (std::vector<Interval>{{2, 2}}));
  EXPECT_THROW(unfold_c_root(2, Root{{1, 0}}), NotInMaximalIdeal);
  EXPECT_EQ(c_epsilon_coords(Root{{1, 1}}), (IntVector{1, 1}));
  EXPECT_EQ(c_epsilon_coords(Root{{0, 1}}), (IntVector{0, 2}));
}

TEST(PhiC, Examples) {
  const RootSystem c2(TypeSpec::parse("C2"));
  const AbelianIdeal i = generated(c2, {{1, 1}});
  EXPECT_EQ(phi_c_unfolded(c2, i), nodes({1, 3}));
  EXPECT_EQ(phi_c(c2, i), nodes({1}));
  EXPECT_EQ(phi_c(c2, generated(c2, {{0, 1}})), nodes({2}));
  EXPECT_EQ(phi_c(c2, AbelianIdeal{}), 0u);
  EXPECT_THROW(phi_c(RootSystem(TypeSpec::parse("A3")), AbelianIdeal{}), WrongType);
}

TEST(PhiC, InverseExamples) {
  const RootSystem c2(TypeSpec::parse("C2"));
  EXPECT_EQ(phi_c_inverse(c2, nodes({1})), generated(c2, {{1, 1}}));
  EXPECT_EQ(phi_c_inverse(c2, 0), AbelianIdeal{});
}

TEST(PhiC, BijectionPreservingComponents) {
  for (int n = 2; n <= 7; ++n) {
    const RootSystem rs(TypeSpec::make(Series::C, n));
    const Graph g = diagram_of(rs);
    const PhiCInverse inv(rs);
    std::set<NodeSubset> images;
    for (const auto& ideal : enumerate_abelian_ideals(rs)) {
      const NodeSubset unfolded = phi_c_unfolded(rs, ideal);
      // symmetric about node n of the (2n-1)-chain
      for (int i = 1; i < n; ++i) {
        EXPECT_EQ((unfolded >> (i - 1)) & 1, (unfolded >> (2 * n - i - 1)) & 1);
      }
      const NodeSubset s = phi_c(rs, ideal);
      EXPECT_EQ(component_count(g, s), kappa(rs, ideal));
      EXPECT_EQ(inv(s), ideal);
      images.insert(s);
    }
    EXPECT_EQ(images.size(), std::size_t{1} << n);
  }
}
