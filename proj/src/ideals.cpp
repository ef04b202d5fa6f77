#include "borel/ideals.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "borel/errors.hpp"

namespace borel {

namespace {

void check_capacity(const RootSystem& rs) {
  if (rs.num_positive() > kMaxIdealRoots) {
    throw TooLarge(rs.type().name() + " has more positive roots than an ideal bitmask can hold");
  }
}

bool sum_free_with(const RootSystem& rs, const RootSet& s, int k) {
  for (std::size_t j = 0; j < rs.num_positive(); ++j) {
    if ((s.test(j) || static_cast<int>(j) == k) && rs.sum_index(k, static_cast<int>(j)) >= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<int> AbelianIdeal::indices() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots.test(k)) out.push_back(static_cast<int>(k));
  }
  return out;
}

bool ideal_order_less(const AbelianIdeal& a, const AbelianIdeal& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  const RootSet diff = a.roots ^ b.roots;
  if (diff.none()) return false;
  std::size_t k = 0;
  while (!diff.test(k)) ++k;
  return a.roots.test(k);
}

std::vector<RootSet> upper_sets(const RootSystem& rs) {
  check_capacity(rs);
  const auto roots = rs.positive_roots();
  std::vector<RootSet> up(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      bool leq = true;
      for (std::size_t i = 0; i < roots[a].coeffs.size() && leq; ++i) leq = roots[a].coeffs[i] <= roots[b].coeffs[i];
      if (leq) up[a].set(b);
    }
  }
  return up;
}

RootSet to_root_set(const RootSystem& rs, std::span<const Root> roots) {
  check_capacity(rs);
  RootSet s;
  for (const Root& r : roots) s.set(static_cast<std::size_t>(rs.require_positive(r)));
  return s;
}

bool is_abelian_upper_ideal(const RootSystem& rs, const RootSet& s) {
  check_capacity(rs);
  const auto up = upper_sets(rs);
  for (std::size_t k = 0; k < rs.num_positive(); ++k) {
    if (!s.test(k)) continue;
    if ((up[k] & ~s).any()) return false;
    if (!sum_free_with(rs, s, static_cast<int>(k))) return false;
  }
  for (std::size_t k = rs.num_positive(); k < kMaxIdealRoots; ++k) {
    if (s.test(k)) return false;
  }
  return true;
}

bool is_abelian_upper_ideal(const RootSystem& rs, std::span<const Root> s) {
  return is_abelian_upper_ideal(rs, to_root_set(rs, s));
}

std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs) {
  check_capacity(rs);
  const auto up = upper_sets(rs);
  const int m = static_cast<int>(rs.num_positive());

  std::unordered_set<RootSet> seen{RootSet{}};
  std::deque<RootSet> queue{RootSet{}};
  std::vector<AbelianIdeal> out;
  while (!queue.empty()) {
    const RootSet current = queue.front();
    queue.pop_front();
    out.push_back(AbelianIdeal{current});
    for (int k = 0; k < m; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      if (current.test(uk)) continue;
      RootSet strictly_above = up[uk];
      strictly_above.reset(uk);
      if ((strictly_above & ~current).any()) continue;
      if (!sum_free_with(rs, current, k)) continue;
      RootSet next = current;
      next.set(uk);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), ideal_order_less);
  return out;
}

std::vector<int> generator_indices(const RootSystem& rs, const AbelianIdeal& ideal) {
  if (!is_abelian_upper_ideal(rs, ideal.roots)) throw InvalidIdeal("not an abelian upper ideal");
  const auto up = upper_sets(rs);
  std::vector<int> out;
  for (int k : ideal.indices()) {
    bool minimal = true;
    for (int j : ideal.indices()) {
      if (j != k && up[static_cast<std::size_t>(j)].test(static_cast<std::size_t>(k))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(k);
  }
  return out;
}

std::vector<Root> generators(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Root> out;
  for (int k : generator_indices(rs, ideal)) out.push_back(rs.root(k));
  return out;
}

int kappa(const RootSystem& rs, const AbelianIdeal& ideal) {
  return static_cast<int>(generator_indices(rs, ideal).size());
}

AbelianIdeal ideal_generated_by(const RootSystem& rs, std::span<const Root> roots) {
  const auto up = upper_sets(rs);
  RootSet s;
  for (const Root& r : roots) s |= up[static_cast<std::size_t>(rs.require_positive(r))];
  if (!is_abelian_upper_ideal(rs, s)) throw InvalidIdeal("generated upper set is not abelian");
  return AbelianIdeal{s};
}

GradedPolynomial upper_covering_polynomial(const RootSystem& rs) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(rs.rank()) + 1, 0);
  for (const AbelianIdeal& ideal : enumerate_abelian_ideals(rs)) {
    const auto k = static_cast<std::size_t>(kappa(rs, ideal));
    if (k >= counts.size()) counts.resize(k + 1, 0);
    ++counts[k];
  }
  return GradedPolynomial(std::move(counts));
}

}  // namespace borel
