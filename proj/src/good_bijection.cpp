#include "borel/good_bijection.hpp"

#include <algorithm>

#include "borel/errors.hpp"

namespace borel {

namespace {

void require_series(const RootSystem& rs, Series s) {
  if (rs.type().series != s) {
    throw WrongType(std::string("expected type ") + static_cast<char>(s) + ", got " + rs.type().name());
  }
}

NodeSubset low_bits(int count) { return count >= 64 ? ~NodeSubset{0} : (NodeSubset{1} << count) - 1; }

}  // namespace

NodeSubset Interval::mask() const {
  if (lo < 1 || hi < lo || hi > kMaxGraphNodes) throw IndexOutOfRange("bad interval");
  return low_bits(hi) & ~low_bits(lo - 1);
}

Interval interval_of(const Root& r) {
  int lo = 0;
  int hi = 0;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const int c = r.coeffs[i];
    if (c == 0) continue;
    if (c != 1 || (hi != 0 && hi != static_cast<int>(i))) {
      throw NotARoot(coeff_string(r.coeffs) + " is not an interval root");
    }
    if (lo == 0) lo = static_cast<int>(i) + 1;
    hi = static_cast<int>(i) + 1;
  }
  if (lo == 0) throw NotARoot("zero vector is not a root");
  return Interval{lo, hi};
}

Root root_of(const Interval& iv, int n) {
  if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > n) throw IndexOutOfRange("interval outside [1, n]");
  IntVector c(static_cast<std::size_t>(n), 0);
  for (int i = iv.lo; i <= iv.hi; ++i) c[static_cast<std::size_t>(i - 1)] = 1;
  return Root{std::move(c)};
}

std::vector<Interval> maximal_intervals(NodeSubset s) {
  std::vector<Interval> out;
  int i = 0;
  while (s >> i) {
    if (!((s >> i) & 1)) {
      ++i;
      continue;
    }
    const int lo = i;
    while (i < 64 && ((s >> i) & 1)) ++i;
    out.push_back(Interval{lo + 1, i});
    if (i >= 64) break;
  }
  return out;
}

bool validate_generator_chain(int n, std::span<const Interval> gens) {
  const std::size_t k = gens.size();
  if (k == 0) return true;
  if (gens.front().lo < 1 || gens.back().hi > n) return false;
  for (std::size_t s = 0; s + 1 < k; ++s) {
    if (!(gens[s].lo < gens[s + 1].lo) || !(gens[s].hi < gens[s + 1].hi)) return false;
  }
  return gens.back().lo <= gens.front().hi;
}

NodeSubset phi_a(const RootSystem& rs, const AbelianIdeal& ideal) {
  require_series(rs, Series::A);
  NodeSubset out = 0;
  for (const Root& g : generators(rs, ideal)) out ^= interval_of(g).mask();
  return out;
}

std::vector<Interval> phi_a_inverse_generators(int n, NodeSubset s) {
  if (n < 1 || n > kMaxGraphNodes || (s & ~low_bits(n))) throw IndexOutOfRange("subset outside [1, n]");
  const std::vector<Interval> runs = maximal_intervals(s);
  const std::size_t k = runs.size();
  const std::size_t h = k / 2;
  // 1-based storage to mirror i_1..i_k, j_1..j_k.
  std::vector<int> i(k + 1, 0);
  std::vector<int> j(k + 1, 0);
  for (std::size_t t = 1; t <= h; ++t) {
    i[2 * t - 1] = runs[t - 1].lo;
    i[2 * t] = runs[t - 1].hi + 1;
  }
  if (k % 2 == 1) {
    i[k] = runs[h].lo;
    j[1] = runs[h].hi;
    for (std::size_t t = 1; t <= h; ++t) {
      j[2 * t] = runs[h + t].lo - 1;
      j[2 * t + 1] = runs[h + t].hi;
    }
  } else {
    for (std::size_t t = 1; t <= h; ++t) {
      j[2 * t - 1] = runs[h + t - 1].lo - 1;
      j[2 * t] = runs[h + t - 1].hi;
    }
  }
  std::vector<Interval> gens;
  for (std::size_t t = 1; t <= k; ++t) gens.push_back(Interval{i[t], j[t]});
  return gens;
}

AbelianIdeal phi_a_inverse(const RootSystem& rs, NodeSubset s) {
  require_series(rs, Series::A);
  std::vector<Root> roots;
  for (const Interval& iv : phi_a_inverse_generators(rs.rank(), s)) roots.push_back(root_of(iv, rs.rank()));
  return ideal_generated_by(rs, roots);
}

IntVector c_epsilon_coords(const Root& r) {
  const std::size_t n = r.coeffs.size();
  if (n < 2) throw DimensionMismatch("C_n needs n >= 2");
  IntVector e(n, 0);
  e[0] = r.coeffs[0];
  for (std::size_t i = 1; i + 1 < n; ++i) e[i] = r.coeffs[i] - r.coeffs[i - 1];
  e[n - 1] = 2 * r.coeffs[n - 1] - r.coeffs[n - 2];
  return e;
}

std::vector<Interval> unfold_c_root(int n, const Root& mu) {
  if (static_cast<int>(mu.coeffs.size()) != n) throw DimensionMismatch("root dimension does not match n");
  const IntVector e = c_epsilon_coords(mu);
  std::vector<int> ones;
  std::vector<int> twos;
  for (int i = 0; i < n; ++i) {
    const int c = e[static_cast<std::size_t>(i)];
    if (c == 1) {
      ones.push_back(i + 1);
    } else if (c == 2) {
      twos.push_back(i + 1);
    } else if (c != 0) {
      throw NotInMaximalIdeal(coeff_string(mu.coeffs) + " is not of the form e_i + e_j");
    }
  }
  if (ones.size() == 2 && twos.empty()) {
    const int a = ones[0];
    const int b = ones[1];
    return {Interval{a, 2 * n - b}, Interval{b, 2 * n - a}};
  }
  if (ones.empty() && twos.size() == 1) {
    const int a = twos[0];
    return {Interval{a, 2 * n - a}};
  }
  throw NotInMaximalIdeal(coeff_string(mu.coeffs) + " is not of the form e_i + e_j");
}

NodeSubset phi_c_unfolded(const RootSystem& rs, const AbelianIdeal& ideal) {
  require_series(rs, Series::C);
  const int n = rs.rank();
  if (2 * n - 1 > kMaxGraphNodes) throw TooLarge("unfolded diagram exceeds 64 nodes");
  NodeSubset out = 0;
  for (const Root& g : generators(rs, ideal)) {
    for (const Interval& iv : unfold_c_root(n, g)) out ^= iv.mask();
  }
  return out;
}

NodeSubset phi_c(const RootSystem& rs, const AbelianIdeal& ideal) {
  const NodeSubset unfolded = phi_c_unfolded(rs, ideal);
  const int n = rs.rank();
  for (int i = 1; i <= 2 * n - 1; ++i) {
    const bool left = (unfolded >> (i - 1)) & 1;
    const bool right = (unfolded >> (2 * n - i - 1)) & 1;
    if (left != right) throw SymmetryViolation("unfolded subset is not symmetric about the middle node");
  }
  return unfolded & low_bits(n);
}

PhiCInverse::PhiCInverse(const RootSystem& rs) {
  require_series(rs, Series::C);
  for (const AbelianIdeal& ideal : enumerate_abelian_ideals(rs)) table_.emplace(phi_c(rs, ideal), ideal);
}

const AbelianIdeal& PhiCInverse::operator()(NodeSubset s) const {
  if (auto it = table_.find(s); it != table_.end()) return it->second;
  throw NotFound("no ideal maps to the requested subset");
}

AbelianIdeal phi_c_inverse(const RootSystem& rs, NodeSubset s) { return PhiCInverse(rs)(s); }

}  // namespace borel
