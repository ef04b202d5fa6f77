#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "borel/rootsys.hpp"

namespace borel {

// Bit i set <=> node i (0-based) is a member.
using NodeSubset = std::uint64_t;

inline constexpr int kMaxGraphNodes = 64;
inline constexpr int kMaxSubsetScanNodes = 24;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count, std::vector<std::pair<int, int>> edges = {});

  int node_count() const { return node_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  NodeSubset neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  NodeSubset all_nodes() const;

  void add_edge(int a, int b);
  // Appends a node, optionally joined to `attach`; returns its index.
  int add_node(std::initializer_list<int> attach = {});

  // Nodes of `other` are shifted past ours.
  Graph disjoint_union(const Graph& other) const;

  static Graph path(int n);
  static Graph star(int leaves);

 private:
  int node_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<NodeSubset> adjacency_;
};

// Integer polynomial in q, coeffs[k] multiplies q^k, trailing zeros trimmed.
class GradedPolynomial {
 public:
  GradedPolynomial() = default;
  explicit GradedPolynomial(std::vector<std::int64_t> coeffs);
  GradedPolynomial(std::initializer_list<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  GradedPolynomial& operator+=(const GradedPolynomial& other);
  GradedPolynomial& operator-=(const GradedPolynomial& other);
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend GradedPolynomial operator*(std::int64_t s, const GradedPolynomial& p);
  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

  // "1 + 6q + q^2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

Graph diagram_of(const RootSystem& rs);
Graph diagram_of(TypeSpec spec);

int component_count(const Graph& g, NodeSubset subset);

GradedPolynomial subset_polynomial(const Graph& g);

// Exact; throws Overflow rather than wrapping.
std::int64_t evaluate(const GradedPolynomial& p, std::int64_t q0);

// Closed forms per type:
//   A_n, B_n, C_n : sum_k C(n+1, 2k) q^k
//   D_n           : sum_k (C(n+2, 2k) - 4 C(n-1, 2k-2)) q^k
//   E6, E7, E8, F4, G2 : fixed lists.
GradedPolynomial closed_form_polynomial(TypeSpec spec);
// The classical-series formulas above evaluated at any n >= 0, including
// ranks that are not irreducible types (B1, D2, ...).
GradedPolynomial series_formula(Series series, int n);

// p_n == 2 p_{n-1} + (q - 1) p_{n-2}
bool check_series_recurrence(const GradedPolynomial& p_n, const GradedPolynomial& p_n1,
                             const GradedPolynomial& p_n2);

// Extends `base` by a two-node chain hung from node `attach` (ignored for an
// empty base) and tests
//   N_k(G_n) = 2 N_k(G_{n-1}) + N_{k-1}(G_{n-2}) - N_k(G_{n-2})
// against exhaustive counts.
bool check_extension_recurrence(const Graph& base, int attach = 0);

}  // namespace borel
