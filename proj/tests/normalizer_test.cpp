#include <gtest/gtest.h>

#include <map>

#include "borel/errors.hpp"
#include "borel/normalizer.hpp"

using namespace borel;

namespace {

AbelianIdeal generated(const RootSystem& rs, std::initializer_list<IntVector> gens) {
  std::vector<Root> r;
  for (const auto& c : gens) r.push_back(Root{c});
  return ideal_generated_by(rs, r);
}

// alpha_i normalises I iff [e_{-alpha_i}, I] lands in I, i.e. gamma - alpha_i
// stays in I whenever it is a positive root; and alpha_i itself must not be
// in I. Written over coefficient vectors only.
NodeSubset levi_by_definition(const RootSystem& rs, const AbelianIdeal& ideal) {
  NodeSubset out = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    IntVector unit(static_cast<std::size_t>(rs.rank()), 0);
    unit[static_cast<std::size_t>(i)] = 1;
    if (ideal.contains(*rs.index_of(Root{unit}))) continue;
    bool ok = true;
    for (int k : ideal.indices()) {
      IntVector d = rs.root(k).coeffs;
      d[static_cast<std::size_t>(i)] -= 1;
      if (auto j = rs.index_of(Root{d}); j && !ideal.contains(*j)) ok = false;
    }
    if (ok) out |= NodeSubset{1} << i;
  }
  return out;
}

}  // namespace

TEST(Levi, A3Examples) {
  const RootSystem a3(TypeSpec::parse("A3"));
  EXPECT_EQ(levi_of_normalizer(a3, AbelianIdeal{}), 0b111u);
  EXPECT_EQ(levi_of_normalizer(a3, generated(a3, {{1, 1, 0}, {0, 1, 1}})), 0u);
  EXPECT_EQ(levi_of_normalizer(a3, generated(a3, {{0, 1, 0}})), 0b101u);
  AbelianIdeal bogus;
  bogus.roots.set(0);
  EXPECT_THROW(levi_of_normalizer(a3, bogus), InvalidIdeal);
}

TEST(Levi, MatchesDefinition) {
  for (const char* name : {"B4", "C4", "D5", "E6", "F4", "G2"}) {
    const RootSystem rs(TypeSpec::parse(name));
    for (const auto& ideal : enumerate_abelian_ideals(rs)) EXPECT_EQ(levi_of_normalizer(rs, ideal), levi_by_definition(rs, ideal));
  }
}

TEST(Collisions, Examples) {
  EXPECT_TRUE(psi_collisions(RootSystem(TypeSpec::parse("A3"))).empty());
  EXPECT_TRUE(psi_collisions(RootSystem(TypeSpec::parse("C3"))).empty());
  EXPECT_FALSE(psi_collisions(RootSystem(TypeSpec::parse("B3"))).empty());
}

TEST(Collisions, InjectiveExactlyForAAndC) {
  for (const char* name : {"A1", "A5", "A7", "C2", "C5", "C6"}) {
    EXPECT_TRUE(psi_collisions(RootSystem(TypeSpec::parse(name))).empty()) << name;
  }
  for (const char* name : {"B2", "D3"}) {  // B2 = C2, D3 = A3
    EXPECT_TRUE(psi_collisions(RootSystem(TypeSpec::parse(name))).empty()) << name;
  }
  for (const char* name : {"B4", "D4", "D5", "E6", "F4", "G2"}) {
    EXPECT_FALSE(psi_collisions(RootSystem(TypeSpec::parse(name))).empty()) << name;
  }
}

TEST(Collisions, PairsReallyCollide) {
  const RootSystem rs(TypeSpec::parse("D4"));
  const auto ideals = enumerate_abelian_ideals(rs);
  std::map<NodeSubset, int> multiplicity;
  for (const auto& i : ideals) ++multiplicity[levi_of_normalizer(rs, i)];
  std::size_t expected_pairs = 0;
  for (const auto& [s, m] : multiplicity) expected_pairs += static_cast<std::size_t>(m * (m - 1) / 2);
  const auto pairs = psi_collisions(rs);
  EXPECT_EQ(pairs.size(), expected_pairs);
  for (const auto& [a, b] : pairs) {
    EXPECT_LT(a, b);
    EXPECT_EQ(levi_of_normalizer(rs, ideals[a]), levi_of_normalizer(rs, ideals[b]));
  }
}
