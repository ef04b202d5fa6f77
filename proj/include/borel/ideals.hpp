#pragma once

#include <bitset>
#include <cstddef>
#include <span>
#include <vector>

#include "borel/dynkin.hpp"
#include "borel/rootsys.hpp"

namespace borel {

inline constexpr std::size_t kMaxIdealRoots = 256;

// Bit k set <=> positive_roots()[k] is a member.
using RootSet = std::bitset<kMaxIdealRoots>;

struct AbelianIdeal {
  RootSet roots;

  std::size_t size() const { return roots.count(); }
  bool contains(int index) const { return roots.test(static_cast<std::size_t>(index)); }
  std::vector<int> indices() const;
  friend bool operator==(const AbelianIdeal&, const AbelianIdeal&) = default;
};

// Size first, then the ascending index sequences lexicographically.
bool ideal_order_less(const AbelianIdeal& a, const AbelianIdeal& b);

// up[k] holds every j with root k <= root j (including k itself).
std::vector<RootSet> upper_sets(const RootSystem& rs);

RootSet to_root_set(const RootSystem& rs, std::span<const Root> roots);

// Upper-closed and sum-free.
bool is_abelian_upper_ideal(const RootSystem& rs, const RootSet& s);
bool is_abelian_upper_ideal(const RootSystem& rs, std::span<const Root> s);

// Every abelian ideal, sorted by ideal_order_less. Exactly 2^rank entries.
std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs);

// Minimal elements of I under the root order, as root indices (ascending).
std::vector<int> generator_indices(const RootSystem& rs, const AbelianIdeal& ideal);
std::vector<Root> generators(const RootSystem& rs, const AbelianIdeal& ideal);
int kappa(const RootSystem& rs, const AbelianIdeal& ideal);

// Smallest upper set containing `roots`; throws InvalidIdeal if that set is
// not abelian.
AbelianIdeal ideal_generated_by(const RootSystem& rs, std::span<const Root> roots);

GradedPolynomial upper_covering_polynomial(const RootSystem& rs);

}  // namespace borel
