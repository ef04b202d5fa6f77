#include "borel/normalizer.hpp"

#include <algorithm>
#include <map>

#include "borel/errors.hpp"

namespace borel {

NodeSubset levi_of_normalizer(const RootSystem& rs, const AbelianIdeal& ideal) {
  if (!is_abelian_upper_ideal(rs, ideal.roots)) throw InvalidIdeal("not an abelian upper ideal");
  const auto n = static_cast<std::size_t>(rs.rank());
  NodeSubset out = 0;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    const int simple = rs.require_positive(Root{e});
    if (ideal.contains(simple)) continue;
    bool stable = true;
    for (int k : ideal.indices()) {
      Root lowered = rs.root(k);
      --lowered.coeffs[i];
      const auto idx = rs.index_of(lowered);
      if (idx && !ideal.contains(*idx)) {
        stable = false;
        break;
      }
    }
    if (stable) out |= NodeSubset{1} << i;
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> psi_collisions(const RootSystem& rs) {
  const auto ideals = enumerate_abelian_ideals(rs);
  std::multimap<NodeSubset, std::size_t> by_levi;
  for (std::size_t k = 0; k < ideals.size(); ++k) by_levi.emplace(levi_of_normalizer(rs, ideals[k]), k);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto it = by_levi.begin(); it != by_levi.end();) {
    const auto range = by_levi.equal_range(it->first);
    for (auto a = range.first; a != range.second; ++a) {
      for (auto b = std::next(a); b != range.second; ++b) {
        out.emplace_back(std::min(a->second, b->second), std::max(a->second, b->second));
      }
    }
    it = range.second;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace borel
