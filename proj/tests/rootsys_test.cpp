#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "borel/errors.hpp"
#include "borel/rootsys.hpp"
#include "oracles.hpp"

using namespace borel;

namespace {

RootSystem make(Series s, int n) { return RootSystem(TypeSpec::make(s, n)); }

std::set<IntVector> coeff_set(const RootSystem& rs) {
  std::set<IntVector> out;
  for (const Root& r : rs.positive_roots()) out.insert(r.coeffs);
  return out;
}

}  // namespace

TEST(TypeSpec, ParsesNamesCaseInsensitively) {
  EXPECT_EQ(TypeSpec::parse("A3"), TypeSpec::make(Series::A, 3));
  EXPECT_EQ(TypeSpec::parse("e8"), TypeSpec::make(Series::E, 8));
  EXPECT_EQ(TypeSpec::parse("g2").name(), "G2");
}

TEST(TypeSpec, RejectsInadmissibleTypes) {
  for (const char* bad : {"D2", "B1", "C1", "E5", "E9", "F3", "G3", "H9", "A0", "", "A", "3", "Ax"}) {
    EXPECT_THROW(TypeSpec::parse(bad), InvalidType) << bad;
  }
}

TEST(RootSystem, C2RootOrder) {
  const RootSystem rs = make(Series::C, 2);
  const std::vector<IntVector> expected{{1, 0}, {0, 1}, {1, 1}, {2, 1}};
  ASSERT_EQ(rs.num_positive(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(rs.root(static_cast<int>(k)).coeffs, expected[k]);
  EXPECT_EQ(rs.highest_root().coeffs, (IntVector{2, 1}));
}

TEST(RootSystem, ClassicalRootsMatchEpsilonRealisation) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(coeff_set(make(Series::A, n)), oracle::classical_positive_roots('A', n)) << n;
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(coeff_set(make(Series::B, n)), oracle::classical_positive_roots('B', n)) << n;
    EXPECT_EQ(coeff_set(make(Series::C, n)), oracle::classical_positive_roots('C', n)) << n;
  }
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(coeff_set(make(Series::D, n)), oracle::classical_positive_roots('D', n)) << n;
}

TEST(RootSystem, PositiveRootCounts) {
  const std::vector<std::pair<TypeSpec, std::size_t>> cases{
      {TypeSpec::make(Series::E, 6), 36}, {TypeSpec::make(Series::E, 7), 63}, {TypeSpec::make(Series::E, 8), 120},
      {TypeSpec::make(Series::F, 4), 24}, {TypeSpec::make(Series::G, 2), 6}};
  for (const auto& [t, count] : cases) EXPECT_EQ(RootSystem(t).num_positive(), count) << t.name();
}

TEST(RootSystem, HighestRoots) {
  EXPECT_EQ(make(Series::E, 8).highest_root().coeffs, (IntVector{2, 3, 4, 6, 5, 4, 3, 2}));
  EXPECT_EQ(make(Series::E, 6).highest_root().coeffs, (IntVector{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(make(Series::F, 4).highest_root().coeffs, (IntVector{2, 3, 4, 2}));
  EXPECT_EQ(make(Series::G, 2).highest_root().coeffs, (IntVector{3, 2}));
  EXPECT_EQ(make(Series::B, 3).highest_root().coeffs, (IntVector{1, 2, 2}));
  EXPECT_EQ(make(Series::D, 5).highest_root().coeffs, (IntVector{1, 2, 2, 1, 1}));
}

TEST(RootSystem, HighestRootHasLengthTwo) {
  for (const char* name : {"A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    const RootSystem rs(TypeSpec::parse(name));
    const RationalVector t = to_rational(rs.highest_root().coeffs);
    EXPECT_EQ(rs.inner(t, t), Rational(2)) << name;
  }
}

TEST(RootSystem, CartanFromForm) {
  for (const char* name : {"B4", "C3", "F4", "G2", "E7"}) {
    const RootSystem rs(TypeSpec::parse(name));
    const auto& b = rs.symmetric_form();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        const Rational a = Rational(2) * b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] /
                           b[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
        EXPECT_EQ(a, Rational(rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) << name;
      }
  }
}

TEST(RootSystem, AddRoots) {
  const RootSystem a3 = make(Series::A, 3);
  EXPECT_EQ(a3.add_roots(Root{{1, 1, 0}}, Root{{0, 0, 1}}), Root({1, 1, 1}));
  EXPECT_EQ(a3.add_roots(Root{{1, 1, 0}}, Root{{0, 1, 1}}), std::nullopt);
  const RootSystem c2 = make(Series::C, 2);
  EXPECT_EQ(c2.add_roots(Root{{1, 0}}, Root{{1, 1}}), Root({2, 1}));
  EXPECT_EQ(c2.add_roots(Root{{1, 1}}, Root{{1, 1}}), std::nullopt);
}

TEST(RootSystem, SumTableAgreesWithAddRoots) {
  const RootSystem rs = make(Series::F, 4);
  const int m = static_cast<int>(rs.num_positive());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto sum = rs.add_roots(rs.root(a), rs.root(b));
      EXPECT_EQ(rs.sum_index(a, b), sum ? rs.require_positive(*sum) : -1);
    }
}

TEST(RootSystem, SumsDominateSummands) {
  for (const char* name : {"B4", "E6", "G2"}) {
    const RootSystem rs(TypeSpec::parse(name));
    for (const Root& a : rs.positive_roots())
      for (const Root& b : rs.positive_roots())
        if (auto s = rs.add_roots(a, b)) EXPECT_TRUE(rs.root_order_leq(a, *s));
    for (const Root& a : rs.positive_roots()) EXPECT_TRUE(rs.root_order_leq(a, rs.highest_root()));
  }
}

TEST(RootSystem, ClosureIsIdempotent) {
  const RootSystem rs = make(Series::E, 7);
  const auto again = reflection_closure(rs.cartan(), rs.positive_roots());
  EXPECT_TRUE(std::equal(again.begin(), again.end(), rs.positive_roots().begin(), rs.positive_roots().end()));
}

TEST(RootSystem, RootOrder) {
  const RootSystem a3 = make(Series::A, 3);
  EXPECT_TRUE(a3.root_order_leq(Root{{0, 1, 0}}, Root{{1, 1, 1}}));
  EXPECT_FALSE(a3.root_order_leq(Root{{1, 1, 0}}, Root{{0, 1, 1}}));
  EXPECT_TRUE(a3.root_order_leq(Root{{1, 0, 0}}, Root{{1, 0, 0}}));
}

TEST(RootSystem, NotARoot) {
  const RootSystem a3 = make(Series::A, 3);
  EXPECT_THROW(a3.require_positive(Root{{1, 0, 1}}), NotARoot);
  EXPECT_THROW(a3.coroot(Root{{2, 0, 0}}), NotARoot);
  EXPECT_THROW(a3.add_roots(Root{{1, 0, 1}}, Root{{1, 0, 0}}), NotARoot);
  EXPECT_THROW(a3.inner(to_rational(IntVector{1, 0}), to_rational(IntVector{1, 0, 0})), DimensionMismatch);
}

TEST(RootSystem, Coroots) {
  EXPECT_EQ(make(Series::C, 2).coroot(Root{{2, 1}}).coeffs, (IntVector{1, 1}));
  EXPECT_EQ(make(Series::A, 3).coroot(Root{{1, 1, 1}}).coeffs, (IntVector{1, 1, 1}));
  EXPECT_EQ(make(Series::B, 2).coroot(Root{{1, 1}}).coeffs, (IntVector{2, 1}));
}

TEST(RootSystem, InnerProduct) {
  const RootSystem a3 = make(Series::A, 3);
  EXPECT_EQ(a3.inner(to_rational(IntVector{1, 0, 0}), to_rational(IntVector{0, 1, 0})), Rational(-1));
  EXPECT_EQ(a3.inner(to_rational(IntVector{1, 0, 0}), to_rational(IntVector{0, 0, 1})), Rational(0));
}

TEST(RootSystem, Reflection) {
  const RootSystem a3 = make(Series::A, 3);
  EXPECT_EQ(a3.reflect(1, std::span<const int>(IntVector{1, 0, 0})), (IntVector{1, 1, 0}));
  EXPECT_EQ(a3.reflect(1, std::span<const int>(IntVector{0, 1, 0})), (IntVector{0, -1, 0}));
  EXPECT_THROW(a3.reflect(3, std::span<const int>(IntVector{0, 1, 0})), IndexOutOfRange);
}

TEST(RootSystem, ReflectionIsAnIsometricInvolution) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (const char* name : {"A5", "B4", "C3", "D6", "E6", "F4", "G2"}) {
    const RootSystem rs(TypeSpec::parse(name));
    std::uniform_int_distribution<int> pick(0, rs.rank() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      IntVector x(static_cast<std::size_t>(rs.rank()));
      IntVector y(x.size());
      for (auto& c : x) c = coeff(rng);
      for (auto& c : y) c = coeff(rng);
      const int i = pick(rng);
      const IntVector sx = rs.reflect(i, std::span<const int>(x));
      EXPECT_EQ(rs.reflect(i, std::span<const int>(sx)), x);
      const IntVector sy = rs.reflect(i, std::span<const int>(y));
      EXPECT_EQ(rs.inner(to_rational(sx), to_rational(sy)), rs.inner(to_rational(x), to_rational(y)));
      const RationalVector rx = rs.reflect(i, std::span<const Rational>(to_rational(x)));
      EXPECT_EQ(rx, to_rational(sx));
    }
  }
}

TEST(RootSystem, ReflectionsPermuteRoots) {
  for (const char* name : {"B3", "D4", "E6", "F4", "G2"}) {
    const RootSystem rs(TypeSpec::parse(name));
    for (int i = 0; i < rs.rank(); ++i) {
      for (const Root& r : rs.positive_roots()) {
        const Root image{rs.reflect(i, std::span<const int>(r.coeffs))};
        EXPECT_TRUE(rs.is_root(image)) << name;
      }
    }
  }
}

TEST(RootSystem, CorootBasisRoundTrip) {
  for (const char* name : {"B3", "C4", "G2", "F4"}) {
    const RootSystem rs(TypeSpec::parse(name));
    for (const Root& r : rs.positive_roots()) {
      const CorootVector c = rs.coroot(r);
      EXPECT_EQ(rs.to_coroot_basis(rs.to_alpha_basis(c)), c);
      // (gamma^vee, gamma) = 2
      EXPECT_EQ(rs.pairing(c, r.coeffs), 2);
    }
  }
  const RootSystem b2 = make(Series::B, 2);
  EXPECT_THROW(b2.to_coroot_basis(RationalVector{Rational(1, 2), Rational(0)}), IntegralityViolation);
}

TEST(RootSystem, CorootReflectionMatchesPairing) {
  const RootSystem rs = make(Series::G, 2);
  const CorootVector z{{1, 2}};
  for (int i = 0; i < 2; ++i) {
    const CorootVector sz = rs.reflect_coroot(i, z);
    for (const Root& r : rs.positive_roots()) {
      // (s_i z, gamma) = (z, s_i gamma)
      EXPECT_EQ(rs.pairing(sz, r.coeffs), rs.pairing(z, rs.reflect(i, std::span<const int>(r.coeffs))));
    }
  }
}

TEST(RootSystem, CoeffString) {
  EXPECT_EQ(coeff_string({1, 2, 1}), "121");
  EXPECT_EQ(coeff_string({0, 10}), "0,10");
  EXPECT_EQ(coeff_string({-1, 0}), "-1,0");
}

TEST(RootSystem, DiagramEdges) {
  const auto e = make(Series::E, 6).diagram_edges();
  const std::set<std::pair<int, int>> edges(e.begin(), e.end());
  EXPECT_EQ(edges, (std::set<std::pair<int, int>>{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}));
}
