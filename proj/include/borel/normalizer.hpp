#pragma once

#include <utility>
#include <vector>

#include "borel/dynkin.hpp"
#include "borel/ideals.hpp"
#include "borel/rootsys.hpp"

namespace borel {

// Simple roots of the standard Levi subalgebra of the normaliser of the
// ideal. alpha_i qualifies iff alpha_i is not in I and, for every gamma in I
// with gamma - alpha_i a positive root, gamma - alpha_i is also in I.
NodeSubset levi_of_normalizer(const RootSystem& rs, const AbelianIdeal& ideal);

// Unordered pairs (as indices into enumerate_abelian_ideals) of distinct
// ideals sharing a Levi subset. Empty exactly in types A and C.
std::vector<std::pair<std::size_t, std::size_t>> psi_collisions(const RootSystem& rs);

}  // namespace borel
