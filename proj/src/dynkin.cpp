#include "borel/dynkin.hpp"

#include <algorithm>
#include <bit>

#include "borel/errors.hpp"

namespace borel {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_node(const Graph& g, int v) {
  if (v < 0 || v >= g.node_count()) throw NodeOutOfRange("node " + std::to_string(v) + " out of range");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("polynomial evaluation overflows 64 bits");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("polynomial evaluation overflows 64 bits");
  return r;
}

}  // namespace

Graph::Graph(int node_count, std::vector<std::pair<int, int>> edges) : node_count_(node_count) {
  if (node_count < 0) throw NodeOutOfRange("negative node count");
  if (node_count > kMaxGraphNodes) throw TooLarge("graphs are limited to 64 nodes");
  adjacency_.assign(static_cast<std::size_t>(node_count), 0);
  for (const auto& [a, b] : edges) add_edge(a, b);
}

NodeSubset Graph::all_nodes() const {
  return node_count_ == 64 ? ~NodeSubset{0} : ((NodeSubset{1} << node_count_) - 1);
}

void Graph::add_edge(int a, int b) {
  check_node(*this, a);
  check_node(*this, b);
  if (a == b) throw NodeOutOfRange("self-loop on node " + std::to_string(a));
  if (a > b) std::swap(a, b);
  if (adjacency_[static_cast<std::size_t>(a)] & (NodeSubset{1} << b)) return;
  adjacency_[static_cast<std::size_t>(a)] |= NodeSubset{1} << b;
  adjacency_[static_cast<std::size_t>(b)] |= NodeSubset{1} << a;
  edges_.emplace_back(a, b);
}

int Graph::add_node(std::initializer_list<int> attach) {
  if (node_count_ >= kMaxGraphNodes) throw TooLarge("graphs are limited to 64 nodes");
  const int v = node_count_++;
  adjacency_.push_back(0);
  for (int a : attach) add_edge(a, v);
  return v;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g(node_count_ + other.node_count_, edges_);
  for (const auto& [a, b] : other.edges_) g.add_edge(a + node_count_, b + node_count_);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

GradedPolynomial::GradedPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GradedPolynomial::GradedPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

void GradedPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return GradedPolynomial(std::move(out));
}

GradedPolynomial operator*(std::int64_t s, const GradedPolynomial& p) {
  std::vector<std::int64_t> out = p.coeffs_;
  for (auto& c : out) c *= s;
  return GradedPolynomial(std::move(out));
}

std::string GradedPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Graph diagram_of(const RootSystem& rs) { return Graph(rs.rank(), rs.diagram_edges()); }

Graph diagram_of(TypeSpec spec) {
  const IntMatrix a = cartan_matrix(spec);
  Graph g(spec.rank);
  for (int i = 0; i < spec.rank; ++i) {
    for (int j = i + 1; j < spec.rank; ++j) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) g.add_edge(i, j);
    }
  }
  return g;
}

int component_count(const Graph& g, NodeSubset subset) {
  if (subset & ~g.all_nodes()) throw NodeOutOfRange("subset contains nodes outside the graph");
  int count = 0;
  NodeSubset remaining = subset;
  while (remaining) {
    ++count;
    NodeSubset frontier = remaining & (~remaining + 1);
    NodeSubset component = 0;
    while (frontier) {
      component |= frontier;
      NodeSubset next = 0;
      for (NodeSubset f = frontier; f; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
      frontier = next & subset & ~component;
    }
    remaining &= ~component;
  }
  return count;
}

GradedPolynomial subset_polynomial(const Graph& g) {
  if (g.node_count() > kMaxSubsetScanNodes) {
    throw TooLarge("subset scan is limited to " + std::to_string(kMaxSubsetScanNodes) + " nodes");
  }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.node_count()) + 1, 0);
  const NodeSubset end = NodeSubset{1} << g.node_count();
  for (NodeSubset s = 0; s < end; ++s) ++counts[static_cast<std::size_t>(component_count(g, s))];
  return GradedPolynomial(std::move(counts));
}

std::int64_t evaluate(const GradedPolynomial& p, std::int64_t q0) {
  std::int64_t acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = checked_add(checked_mul(acc, q0), *it);
  return acc;
}

GradedPolynomial series_formula(Series series, int n) {
  if (n < 0) throw InvalidType("negative rank");
  std::vector<std::int64_t> c;
  switch (series) {
    case Series::A:
    case Series::B:
    case Series::C:
      for (int k = 0; 2 * k <= n + 1; ++k) c.push_back(binomial(n + 1, 2 * k));
      break;
    case Series::D:
      for (int k = 0; 2 * k <= n + 2; ++k) c.push_back(binomial(n + 2, 2 * k) - 4 * binomial(n - 1, 2 * k - 2));
      break;
    default:
      throw InvalidType("no series formula for " + std::string(1, static_cast<char>(series)));
  }
  return GradedPolynomial(std::move(c));
}

GradedPolynomial closed_form_polynomial(TypeSpec spec) {
  spec = TypeSpec::make(spec.series, spec.rank);
  switch (spec.series) {
    case Series::E:
      if (spec.rank == 6) return {1, 25, 27, 11};
      if (spec.rank == 7) return {1, 34, 60, 30, 3};
      return {1, 44, 118, 76, 17};
    case Series::F: return {1, 10, 5};
    case Series::G: return {1, 3};
    default: return series_formula(spec.series, spec.rank);
  }
}

bool check_series_recurrence(const GradedPolynomial& p_n, const GradedPolynomial& p_n1,
                             const GradedPolynomial& p_n2) {
  return p_n == 2 * p_n1 + GradedPolynomial{-1, 1} * p_n2;
}

bool check_extension_recurrence(const Graph& base, int attach) {
  if (base.node_count() > 12) throw TooLarge("extension recurrence check is limited to 12 base nodes");
  Graph g1 = base;
  int a = 0;
  if (base.node_count() == 0) {
    a = g1.add_node();
  } else {
    check_node(base, attach);
    a = g1.add_node({attach});
  }
  Graph g2 = g1;
  g2.add_node({a});

  const GradedPolynomial n0 = subset_polynomial(base);
  const GradedPolynomial n1 = subset_polynomial(g1);
  const GradedPolynomial n2 = subset_polynomial(g2);
  const std::size_t top = static_cast<std::size_t>(g2.node_count()) + 1;
  for (std::size_t k = 0; k <= top; ++k) {
    const std::int64_t lower = k > 0 ? n0[k - 1] : 0;
    if (n2[k] != 2 * n1[k] + lower - n0[k]) return false;
  }
  return true;
}

}  // namespace borel
