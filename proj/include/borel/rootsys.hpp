#pragma once

// Irreducible reduced root systems over exact arithmetic.
//
// Simple roots are indexed 0..n-1 in code and printed 1..n. Node numbering
// follows Bourbaki:
//   A_n  1 - 2 - ... - n
//   B_n  1 - ... - (n-1) => n        (alpha_n short)
//   C_n  1 - ... - (n-1) <= n        (alpha_n long)
//   D_n  1 - ... - (n-2), with n-1 and n both attached to n-2
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4              (alpha_3, alpha_4 short)
//   G_2  1 <= 2                      (alpha_1 short)
// The inner product is scaled so that long roots (and hence the highest
// root) have squared length 2.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace borel {

using Rational = boost::rational<std::int64_t>;
using IntVector = std::vector<int>;
using RationalVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<RationalVector>;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

bool is_admissible(Series series, int rank);

struct TypeSpec {
  Series series = Series::A;
  int rank = 1;

  // Parses "A3", "e8", ... and rejects inadmissible series/rank pairs.
  static TypeSpec parse(std::string_view text);
  // Throws InvalidType unless (series, rank) is admissible.
  static TypeSpec make(Series series, int rank);

  std::string name() const;
  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

// A root written as sum c_i alpha_i.
struct Root {
  IntVector coeffs;

  int height() const;
  bool is_positive() const;
  Root operator-() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// An element of the coroot lattice written as sum m_i alpha_i^vee.
struct CorootVector {
  IntVector coeffs;

  friend bool operator==(const CorootVector&, const CorootVector&) = default;
  friend auto operator<=>(const CorootVector&, const CorootVector&) = default;
};

// Coefficient-string notation: (1,2,1) -> "121". Multi-digit or negative
// entries are separated by commas instead.
std::string coeff_string(const IntVector& v);

class RootSystem {
 public:
  explicit RootSystem(TypeSpec spec);

  const TypeSpec& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& symmetric_form() const { return form_; }
  std::span<const Root> positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  const Root& highest_root() const { return positive_.back(); }
  const std::vector<std::pair<int, int>>& diagram_edges() const { return edges_; }

  // (alpha_i, alpha_i).
  Rational simple_length_sq(int i) const;

  // Index into positive_roots(), or nullopt when r is not a positive root.
  std::optional<int> index_of(const Root& r) const;
  // Same, but throws NotARoot.
  int require_positive(const Root& r) const;
  bool is_root(const Root& r) const;
  const Root& root(int index) const { return positive_.at(static_cast<std::size_t>(index)); }

  // Index of positive_roots()[a] + positive_roots()[b], or -1.
  int sum_index(int a, int b) const { return sums_[static_cast<std::size_t>(a) * positive_.size() + static_cast<std::size_t>(b)]; }

  std::optional<Root> add_roots(const Root& nu, const Root& mu) const;
  bool root_order_leq(const Root& nu, const Root& mu) const;
  CorootVector coroot(const Root& mu) const;

  Rational inner(std::span<const Rational> x, std::span<const Rational> y) const;
  RationalVector reflect(int i, std::span<const Rational> x) const;
  // Integral version of reflect on root-lattice coordinates.
  IntVector reflect(int i, std::span<const int> x) const;
  // s_i on coroot-lattice coordinates.
  CorootVector reflect_coroot(int i, const CorootVector& z) const;

  // (z, gamma) for a coroot-lattice z and a root-lattice gamma.
  int pairing(const CorootVector& z, std::span<const int> gamma) const;
  RationalVector to_alpha_basis(const CorootVector& z) const;
  // Inverse of to_alpha_basis; throws IntegralityViolation off the lattice.
  CorootVector to_coroot_basis(std::span<const Rational> x) const;

 private:
  TypeSpec type_;
  IntMatrix cartan_;
  std::vector<Rational> length_sq_;
  RationalMatrix form_;
  std::vector<Root> positive_;
  std::map<IntVector, int> index_;
  std::vector<int> sums_;
  std::vector<std::pair<int, int>> edges_;
};

RootSystem build_root_system(TypeSpec spec);

IntMatrix cartan_matrix(TypeSpec spec);

// Positive roots reachable from `seeds` under simple reflections, in the
// canonical order (height ascending, then coefficient vectors descending).
std::vector<Root> reflection_closure(const IntMatrix& cartan, std::span<const Root> seeds);

RationalVector to_rational(std::span<const int> v);

}  // namespace borel
