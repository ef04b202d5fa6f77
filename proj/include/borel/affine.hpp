#pragma once

// Affine Weyl group machinery for the minuscule-element parametrisation of
// abelian ideals.
//
// Affine simple reflections are labelled 0..n: label 0 is s_0 (reflection
// in alpha_0 = delta - theta), label i >= 1 is the finite s_i. The null root
// delta only appears through AffineRoot::level.

#include <span>
#include <vector>

#include "borel/dynkin.hpp"
#include "borel/ideals.hpp"
#include "borel/rootsys.hpp"

namespace borel {

// finite + level * delta
struct AffineRoot {
  Root finite;
  int level = 0;

  bool is_positive() const;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

// alpha_0 = (-theta, 1) for label 0, (alpha_i, 0) otherwise.
AffineRoot affine_simple_root(const RootSystem& rs, int label);

// w = v . t_r, acting on real affine roots by
//   (gamma, m) -> (v(gamma), m - (gamma, r)).
struct AffineWeylElement {
  IntMatrix v;  // column j = v(alpha_j) in root coordinates
  CorootVector r;
  std::vector<int> word;  // s_{word[0]} s_{word[1]} ... ; not necessarily reduced

  static AffineWeylElement identity(const RootSystem& rs);
  static AffineWeylElement simple(const RootSystem& rs, int label);
  // The group element, ignoring the bookkeeping word.
  bool same_element(const AffineWeylElement& other) const { return v == other.v && r == other.r; }
};

AffineRoot affine_act(const RootSystem& rs, const AffineWeylElement& w, const AffineRoot& beta);
// (v1 v2, r2 + v2^{-1}(r1))
AffineWeylElement compose(const RootSystem& rs, const AffineWeylElement& w1, const AffineWeylElement& w2);
// (v^{-1}, -v(r))
AffineWeylElement inverse(const RootSystem& rs, const AffineWeylElement& w);

// v(x) for a coroot-lattice vector x.
CorootVector apply_finite(const RootSystem& rs, const IntMatrix& v, const CorootVector& x);

// v(r). Also checks (z, alpha_i) = k_i where w^{-1}(alpha_i) = mu_i + k_i delta.
CorootVector z_of(const RootSystem& rs, const AffineWeylElement& w);

NodeSubset s_subset(const CorootVector& z);

struct MinusculeRecord {
  AbelianIdeal ideal;
  AffineWeylElement element;
  CorootVector z;
  NodeSubset s_subset = 0;
  int length = 0;
};

// Breadth-first closure from the identity under left multiplication by s_i
// whenever w^{-1}(alpha_i) = delta - gamma with gamma a new positive root.
// Sorted by ideal_order_less, so entry k matches enumerate_abelian_ideals()[k].
std::vector<MinusculeRecord> enumerate_minuscule(const RootSystem& rs);

// { z in Q^vee : (z, gamma) in {-1, 0, 1, 2} for every positive gamma },
// found by scanning the candidate simple-root pairings and solving the
// Cartan system exactly. Sorted ascending.
std::vector<CorootVector> enumerate_Z1(const RootSystem& rs);

// -1 < (x, gamma) <= 1 for every positive root gamma.
bool in_fundamental_domain(const RootSystem& rs, std::span<const Rational> x);

// Positive affine roots of level <= max_level sent to negative roots by w.
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const AffineWeylElement& w, int max_level);

RationalMatrix invert(RationalMatrix m);

}  // namespace borel
