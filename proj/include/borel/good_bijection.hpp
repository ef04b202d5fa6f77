#pragma once

// Bijections Ab -> 2^[n] for A_n and C_n that send an ideal with k
// generators to a node subset with k connected components.
//
// Intervals use the 1-based node labels [lo, hi] of the Dynkin chain; a root
// alpha_lo + ... + alpha_hi of A_n is identified with its support interval.

#include <map>
#include <span>
#include <vector>

#include "borel/dynkin.hpp"
#include "borel/ideals.hpp"
#include "borel/rootsys.hpp"

namespace borel {

struct Interval {
  int lo = 1;
  int hi = 1;

  NodeSubset mask() const;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Support interval of an A_n root (all coefficients 0/1, contiguous).
Interval interval_of(const Root& r);
Root root_of(const Interval& iv, int n);

// Maximal runs of set bits, in increasing order.
std::vector<Interval> maximal_intervals(NodeSubset s);

// 1 <= i_1 < ... < i_k <= j_1 < ... < j_k <= n for gens in the given order.
bool validate_generator_chain(int n, std::span<const Interval> gens);

// XOR of generator supports. Throws WrongType unless rs is of type A.
NodeSubset phi_a(const RootSystem& rs, const AbelianIdeal& ideal);

// Generator intervals of the unique ideal with phi_a(I) == s.
std::vector<Interval> phi_a_inverse_generators(int n, NodeSubset s);
AbelianIdeal phi_a_inverse(const RootSystem& rs, NodeSubset s);

// C_n root in epsilon coordinates: alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n.
IntVector c_epsilon_coords(const Root& r);

// e_i + e_j (i < j) -> {[i, 2n-j], [j, 2n-i]};  2 e_i -> {[i, 2n-i]}.
// Throws NotInMaximalIdeal for roots outside {e_i + e_j | i <= j}.
std::vector<Interval> unfold_c_root(int n, const Root& mu);

// Mod-2 sum over [2n-1] of the unfolded generators; symmetric about n.
NodeSubset phi_c_unfolded(const RootSystem& rs, const AbelianIdeal& ideal);
// phi_c_unfolded restricted to [n]. Throws SymmetryViolation if the
// unfolded set is not symmetric.
NodeSubset phi_c(const RootSystem& rs, const AbelianIdeal& ideal);

// Inverts phi_c by tabulating it over Ab(C_n).
class PhiCInverse {
 public:
  explicit PhiCInverse(const RootSystem& rs);
  const AbelianIdeal& operator()(NodeSubset s) const;

 private:
  std::map<NodeSubset, AbelianIdeal> table_;
};

AbelianIdeal phi_c_inverse(const RootSystem& rs, NodeSubset s);

}  // namespace borel
