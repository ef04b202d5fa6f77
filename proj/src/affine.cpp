#include "borel/affine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "borel/errors.hpp"

namespace borel {

namespace {

void check_label(const RootSystem& rs, int label) {
  if (label < 0 || label > rs.rank()) throw IndexOutOfRange("affine node label " + std::to_string(label) + " out of range");
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntVector mat_vec(const IntMatrix& m, std::span<const int> x) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

IntMatrix integer_inverse(const IntMatrix& m) {
  RationalMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i] = to_rational(m[i]);
  const RationalMatrix inv = invert(std::move(q));
  IntMatrix out(m.size(), IntVector(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (inv[i][j].denominator() != 1) throw IntegralityViolation("Weyl group matrix has non-integral inverse");
      out[i][j] = static_cast<int>(inv[i][j].numerator());
    }
  }
  return out;
}

// s_theta on root coordinates: x -> x - <x, theta^vee> theta.
IntMatrix highest_reflection_matrix(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  const Root& theta = rs.highest_root();
  const CorootVector theta_vee = rs.coroot(theta);
  IntMatrix m = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = 1;
    const int p = rs.pairing(theta_vee, e);
    for (std::size_t i = 0; i < n; ++i) m[i][j] -= p * theta.coeffs[i];
  }
  return m;
}

// One affine simple reflection on a real affine root, straight from
// s_j(beta) = beta - <beta, alpha_j^vee> alpha_j.
AffineRoot simple_act(const RootSystem& rs, int label, const AffineRoot& beta) {
  if (label == 0) {
    const CorootVector theta_vee = rs.coroot(rs.highest_root());
    const int p = rs.pairing(theta_vee, beta.finite.coeffs);
    Root image = beta.finite;
    for (std::size_t i = 0; i < image.coeffs.size(); ++i) image.coeffs[i] -= p * rs.highest_root().coeffs[i];
    return AffineRoot{std::move(image), beta.level + p};
  }
  return AffineRoot{Root{rs.reflect(label - 1, beta.finite.coeffs)}, beta.level};
}

// w^{-1}(beta) evaluated letter by letter from w's word.
AffineRoot inverse_act_by_word(const RootSystem& rs, const AffineWeylElement& w, AffineRoot beta) {
  for (int label : w.word) beta = simple_act(rs, label, beta);
  return beta;
}

std::int64_t lcm_of_denominators(const RationalMatrix& m) {
  std::int64_t l = 1;
  for (const auto& row : m) {
    for (const Rational& x : row) l = std::lcm(l, x.denominator());
  }
  return l;
}

}  // namespace

bool AffineRoot::is_positive() const { return level > 0 || (level == 0 && finite.is_positive()); }

AffineRoot affine_simple_root(const RootSystem& rs, int label) {
  check_label(rs, label);
  if (label == 0) return AffineRoot{-rs.highest_root(), 1};
  IntVector e(static_cast<std::size_t>(rs.rank()), 0);
  e[static_cast<std::size_t>(label - 1)] = 1;
  return AffineRoot{Root{std::move(e)}, 0};
}

AffineWeylElement AffineWeylElement::identity(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  return AffineWeylElement{identity_matrix(n), CorootVector{IntVector(n, 0)}, {}};
}

AffineWeylElement AffineWeylElement::simple(const RootSystem& rs, int label) {
  check_label(rs, label);
  const auto n = static_cast<std::size_t>(rs.rank());
  if (label == 0) {
    CorootVector r = rs.coroot(rs.highest_root());
    for (int& c : r.coeffs) c = -c;
    return AffineWeylElement{highest_reflection_matrix(rs), std::move(r), {0}};
  }
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = 1;
    const IntVector image = rs.reflect(label - 1, e);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = image[i];
  }
  return AffineWeylElement{std::move(m), CorootVector{IntVector(n, 0)}, {label}};
}

CorootVector apply_finite(const RootSystem& rs, const IntMatrix& v, const CorootVector& x) {
  const RationalVector xa = rs.to_alpha_basis(x);
  RationalVector image(xa.size(), Rational(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < xa.size(); ++j) image[i] += Rational(v[i][j]) * xa[j];
  }
  return rs.to_coroot_basis(image);
}

AffineRoot affine_act(const RootSystem& rs, const AffineWeylElement& w, const AffineRoot& beta) {
  Root image{mat_vec(w.v, beta.finite.coeffs)};
  if (!rs.is_root(image)) throw NotARoot("affine action left the root system");
  return AffineRoot{std::move(image), beta.level - rs.pairing(w.r, beta.finite.coeffs)};
}

AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& w1, const AffineWeylElement& w2) {
  const CorootVector shifted = apply_finite(rs, integer_inverse(w2.v), w1.r);
  CorootVector r = w2.r;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += shifted.coeffs[i];
  std::vector<int> word = w1.word;
  word.insert(word.end(), w2.word.begin(), w2.word.end());
  return AffineWeylElement{multiply(w1.v, w2.v), std::move(r), std::move(word)};
}

AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& w) {
  CorootVector r = apply_finite(rs, w.v, w.r);
  for (int& c : r.coeffs) c = -c;
  std::vector<int> word(w.word.rbegin(), w.word.rend());
  return AffineWeylElement{integer_inverse(w.v), std::move(r), std::move(word)};
}

CorootVector z_of(const RootSystem& rs, const AffineWeylElement& w) {
  const CorootVector z = apply_finite(rs, w.v, w.r);
  for (int i = 1; i <= rs.rank(); ++i) {
    const AffineRoot alpha = affine_simple_root(rs, i);
    const int k = inverse_act_by_word(rs, w, alpha).level;
    if (rs.pairing(z, alpha.finite.coeffs) != k) {
      throw Error("v(r) disagrees with the level of w^{-1}(alpha_" + std::to_string(i) + ")");
    }
  }
  return z;
}

NodeSubset s_subset(const CorootVector& z) {
  NodeSubset out = 0;
  for (std::size_t i = 0; i < z.coeffs.size(); ++i) {
    if (z.coeffs[i] % 2 != 0) out |= NodeSubset{1} << i;
  }
  return out;
}

std::vector<MinusculeRecord> enumerate_minuscule(const RootSystem& rs) {
  if (rs.rank() >= 63) throw TooLarge("rank too large for minuscule enumeration");
  struct Node {
    AffineWeylElement w;
    RootSet ideal;
  };
  std::unordered_map<RootSet, std::size_t> seen;
  std::vector<Node> nodes{Node{AffineWeylElement::identity(rs), RootSet{}}};
  seen.emplace(RootSet{}, 0);
  for (std::size_t cursor = 0; cursor < nodes.size(); ++cursor) {
    const AffineWeylElement w = nodes[cursor].w;
    const RootSet ideal = nodes[cursor].ideal;
    const AffineWeylElement w_inv = inverse(rs, w);
    for (int label = 0; label <= rs.rank(); ++label) {
      const AffineRoot beta = affine_act(rs, w_inv, affine_simple_root(rs, label));
      if (beta.level != 1) continue;
      const auto gamma = rs.index_of(-beta.finite);
      if (!gamma || ideal.test(static_cast<std::size_t>(*gamma))) continue;
      RootSet next = ideal;
      next.set(static_cast<std::size_t>(*gamma));
      if (seen.contains(next)) continue;
      seen.emplace(next, nodes.size());
      nodes.push_back(Node{compose(rs, AffineWeylElement::simple(rs, label), w), next});
    }
  }

  const std::size_t expected = std::size_t{1} << rs.rank();
  if (nodes.size() != expected) {
    throw Error("minuscule enumeration found " + std::to_string(nodes.size()) + " elements, expected " +
                std::to_string(expected));
  }

  std::vector<MinusculeRecord> out;
  out.reserve(nodes.size());
  for (Node& node : nodes) {
    MinusculeRecord rec;
    rec.ideal = AbelianIdeal{node.ideal};
    rec.z = z_of(rs, node.w);
    rec.s_subset = s_subset(rec.z);
    rec.length = static_cast<int>(node.ideal.count());
    rec.element = std::move(node.w);
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const MinusculeRecord& a, const MinusculeRecord& b) { return ideal_order_less(a.ideal, b.ideal); });
  return out;
}

std::vector<CorootVector> enumerate_Z1(const RootSystem& rs) {
  const int n = rs.rank();
  if (n > 10) throw TooLarge("Z1 scan is limited to rank 10");
  const auto un = static_cast<std::size_t>(n);

  // Pairing matrix P[i][j] = (alpha_j^vee, alpha_i), i.e. the Cartan matrix.
  RationalMatrix p(un);
  for (std::size_t i = 0; i < un; ++i) p[i] = to_rational(rs.cartan()[i]);
  const RationalMatrix p_inv = invert(std::move(p));
  const std::int64_t denom = lcm_of_denominators(p_inv);
  std::vector<std::vector<std::int64_t>> scaled(un, std::vector<std::int64_t>(un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) scaled[i][j] = (p_inv[i][j] * denom).numerator();
  }

  std::vector<CorootVector> out;
  std::vector<int> k(un, -1);
  CorootVector z{IntVector(un, 0)};
  while (true) {
    bool integral = true;
    for (std::size_t i = 0; i < un && integral; ++i) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < un; ++j) acc += scaled[i][j] * k[j];
      if (acc % denom != 0) integral = false;
      z.coeffs[i] = static_cast<int>(acc / denom);
    }
    if (integral) {
      bool ok = true;
      for (const Root& gamma : rs.positive_roots()) {
        const int v = rs.pairing(z, gamma.coeffs);
        if (v < -1 || v > 2) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(z);
    }
    std::size_t pos = 0;
    while (pos < un && k[pos] == 2) k[pos++] = -1;
    if (pos == un) break;
    ++k[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_fundamental_domain(const RootSystem& rs, std::span<const Rational> x) {
  for (const Root& gamma : rs.positive_roots()) {
    const Rational v = rs.inner(x, to_rational(gamma.coeffs));
    if (!(v > Rational(-1) && v <= Rational(1))) return false;
  }
  return true;
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWeylElement& w, int max_level) {
  std::vector<AffineRoot> out;
  for (int level = 0; level <= max_level; ++level) {
    for (const Root& gamma : rs.positive_roots()) {
      for (const Root& finite : {gamma, -gamma}) {
        const AffineRoot beta{finite, level};
        if (!beta.is_positive()) continue;
        if (!affine_act(rs, w, beta).is_positive()) out.push_back(beta);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionMismatch("matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) throw Error("singular matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rational(0)) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace borel
