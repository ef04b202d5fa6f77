#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call into the code paths they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "borel/rootsys.hpp"

namespace oracle {

using borel::IntVector;

// Positive roots of the classical types from their epsilon realisations,
// converted to simple-root coordinates.
//   A_n: e_i - e_j (i < j) in R^{n+1}
//   B_n: e_i +- e_j, e_i      C_n: e_i +- e_j, 2 e_i      D_n: e_i +- e_j
inline std::set<IntVector> classical_positive_roots(char series, int n) {
  std::set<IntVector> out;
  auto interval = [&](int lo, int hi) {  // alpha_lo + ... + alpha_hi, 0-based
    IntVector c(static_cast<std::size_t>(n), 0);
    for (int k = lo; k <= hi; ++k) c[static_cast<std::size_t>(k)] = 1;
    return c;
  };
  if (series == 'A') {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) out.insert(interval(i, j));
    return out;
  }
  // e_i = alpha_i + ... + alpha_{n-1} + tail, where the tail depends on the
  // last simple root. Work in epsilon coordinates and solve back.
  auto to_alpha = [&](const IntVector& eps) {
    // Invert the triangular map alpha -> eps for each series.
    IntVector c(static_cast<std::size_t>(n), 0);
    // Partial sums s_k = eps_0 + ... + eps_k.
    int s = 0;
    for (int k = 0; k < n - 1; ++k) {
      s += eps[static_cast<std::size_t>(k)];
      c[static_cast<std::size_t>(k)] = s;
    }
    const int total = s + eps[static_cast<std::size_t>(n - 1)];
    if (series == 'B') {
      // alpha_n = e_n: c_n = sum of all eps.
      c[static_cast<std::size_t>(n - 1)] = total;
    } else if (series == 'C') {
      // alpha_n = 2 e_n.
      c[static_cast<std::size_t>(n - 1)] = total / 2;
    } else {
      // D: alpha_{n-1} = e_{n-1} - e_n, alpha_n = e_{n-1} + e_n.
      const int a = s;  // coefficient pattern up to n-2
      const int en1 = eps[static_cast<std::size_t>(n - 2)];
      const int en = eps[static_cast<std::size_t>(n - 1)];
      const int before = a - en1;  // c_{n-2}
      const int cn = (before + en1 + en) / 2;
      const int cn1 = before + en1 - cn;
      c[static_cast<std::size_t>(n - 2)] = cn1;
      c[static_cast<std::size_t>(n - 1)] = cn;
    }
    return c;
  };
  auto unit = [&](int i, int v) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = v;
    return e;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      IntVector minus = unit(i, 1);
      minus[static_cast<std::size_t>(j)] = -1;
      IntVector plus = unit(i, 1);
      plus[static_cast<std::size_t>(j)] = 1;
      out.insert(to_alpha(minus));
      out.insert(to_alpha(plus));
    }
    if (series == 'B') out.insert(to_alpha(unit(i, 1)));
    if (series == 'C') out.insert(to_alpha(unit(i, 2)));
  }
  return out;
}

// Connected components of the induced subgraph by union-find.
inline int components(int n, const std::vector<std::pair<int, int>>& edges, std::uint64_t subset) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [a, b] : edges) {
    if (((subset >> a) & 1) && ((subset >> b) & 1)) parent[static_cast<std::size_t>(find(a))] = find(b);
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (((subset >> v) & 1) && find(v) == v) ++count;
  }
  return count;
}

inline std::vector<std::int64_t> subset_counts(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) ++counts[static_cast<std::size_t>(components(n, edges, s))];
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

// Abelian ideals by filtering every subset of the given positive roots with
// the definitions applied to raw coefficient vectors.
inline std::vector<std::set<IntVector>> abelian_ideals_by_filter(const std::set<IntVector>& roots) {
  const std::vector<IntVector> list(roots.begin(), roots.end());
  const std::size_t m = list.size();
  auto leq = [](const IntVector& a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  std::vector<std::set<IntVector>> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      if (!((s >> a) & 1)) continue;
      for (std::size_t b = 0; b < m && ok; ++b) {
        if (leq(list[a], list[b]) && !((s >> b) & 1)) ok = false;
        if ((s >> b) & 1) {
          IntVector sum = list[a];
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += list[b][i];
          if (roots.count(sum)) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::set<IntVector> ideal;
    for (std::size_t a = 0; a < m; ++a)
      if ((s >> a) & 1) ideal.insert(list[a]);
    out.push_back(std::move(ideal));
  }
  return out;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<std::int64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::int64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace oracle
