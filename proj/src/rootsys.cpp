#include "borel/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "borel/errors.hpp"

namespace borel {

namespace {

std::string series_name(Series s) { return std::string(1, static_cast<char>(s)); }

void link(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
  a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

bool is_positive_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](int c) { return c > 0; });
}

int height_of(const IntVector& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

bool canonical_less(const Root& a, const Root& b) {
  const int ha = a.height();
  const int hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs > b.coeffs;
}

}  // namespace

bool is_admissible(Series series, int rank) {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B: return rank >= 2;
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 3;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

TypeSpec TypeSpec::make(Series series, int rank) {
  if (!is_admissible(series, rank)) {
    throw InvalidType("inadmissible root system type " + series_name(series) + std::to_string(rank));
  }
  return TypeSpec{series, rank};
}

TypeSpec TypeSpec::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidType("malformed type string '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw InvalidType("unknown series in '" + std::string(text) + "'");
  const auto digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidType("malformed rank in '" + std::string(text) + "'");
  }
  int rank = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidType("malformed rank in '" + std::string(text) + "'");
  }
  return make(static_cast<Series>(letter), rank);
}

std::string TypeSpec::name() const { return series_name(series) + std::to_string(rank); }

int Root::height() const { return height_of(coeffs); }

bool Root::is_positive() const { return is_positive_vector(coeffs); }

Root Root::operator-() const {
  Root r{coeffs};
  for (int& c : r.coeffs) c = -c;
  return r;
}

std::string coeff_string(const IntVector& v) {
  const bool compact = std::all_of(v.begin(), v.end(), [](int c) { return c >= 0 && c <= 9; });
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

RationalVector to_rational(std::span<const int> v) {
  return RationalVector(v.begin(), v.end());
}

IntMatrix cartan_matrix(TypeSpec spec) {
  spec = TypeSpec::make(spec.series, spec.rank);
  const int n = spec.rank;
  IntMatrix a(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  switch (spec.series) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case Series::C:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case Series::D:
      for (int i = 0; i + 3 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 2);
      link(a, n - 3, n - 1);
      break;
    case Series::E:
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Series::F:
      link(a, 0, 1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3);
      break;
    case Series::G:
      link(a, 0, 1, -1, -3);
      break;
  }
  return a;
}

std::vector<Root> reflection_closure(const IntMatrix& cartan, std::span<const Root> seeds) {
  const std::size_t n = cartan.size();
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (const Root& r : seeds) {
    if (r.coeffs.size() != n) throw DimensionMismatch("seed root has wrong dimension");
    if (is_positive_vector(r.coeffs) && seen.insert(r.coeffs).second) queue.push_back(r.coeffs);
  }
  while (!queue.empty()) {
    const IntVector beta = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
      IntVector image = beta;
      image[i] -= pairing;
      if (is_positive_vector(image) && seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::vector<Root> out;
  out.reserve(seen.size());
  for (const IntVector& v : seen) out.push_back(Root{v});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

RootSystem::RootSystem(TypeSpec spec)
    : type_(TypeSpec::make(spec.series, spec.rank)), cartan_(cartan_matrix(type_)) {
  const auto n = static_cast<std::size_t>(type_.rank);

  // Symmetrize: A[i][j] * len[j] == A[j][i] * len[i] along every edge.
  length_sq_.assign(n, Rational(0));
  length_sq_[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || cartan_[i][j] == 0 || length_sq_[j] != Rational(0)) continue;
      length_sq_[j] = length_sq_[i] * Rational(cartan_[j][i], cartan_[i][j]);
      queue.push_back(j);
    }
  }
  const Rational longest = *std::max_element(length_sq_.begin(), length_sq_.end());
  for (Rational& l : length_sq_) l = l * 2 / longest;

  form_.assign(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) form_[i][j] = Rational(cartan_[i][j]) * length_sq_[j] / 2;
  }

  std::vector<Root> simple;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    simple.push_back(Root{std::move(e)});
  }
  positive_ = reflection_closure(cartan_, simple);
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k].coeffs, static_cast<int>(k));

  const std::size_t m = positive_.size();
  sums_.assign(m * m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      IntVector s = positive_[a].coeffs;
      for (std::size_t i = 0; i < n; ++i) s[i] += positive_[b].coeffs[i];
      if (auto it = index_.find(s); it != index_.end()) sums_[a * m + b] = it->second;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cartan_[i][j] != 0) edges_.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
}

RootSystem build_root_system(TypeSpec spec) { return RootSystem(spec); }

Rational RootSystem::simple_length_sq(int i) const {
  if (i < 0 || i >= rank()) throw IndexOutOfRange("simple root index " + std::to_string(i) + " out of range");
  return length_sq_[static_cast<std::size_t>(i)];
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  if (auto it = index_.find(r.coeffs); it != index_.end()) return it->second;
  return std::nullopt;
}

int RootSystem::require_positive(const Root& r) const {
  if (auto idx = index_of(r)) return *idx;
  throw NotARoot(coeff_string(r.coeffs) + " is not a positive root of " + type_.name());
}

bool RootSystem::is_root(const Root& r) const { return index_of(r) || index_of(-r); }

std::optional<Root> RootSystem::add_roots(const Root& nu, const Root& mu) const {
  const int s = sum_index(require_positive(nu), require_positive(mu));
  if (s < 0) return std::nullopt;
  return positive_[static_cast<std::size_t>(s)];
}

bool RootSystem::root_order_leq(const Root& nu, const Root& mu) const {
  require_positive(nu);
  require_positive(mu);
  for (std::size_t i = 0; i < nu.coeffs.size(); ++i) {
    if (mu.coeffs[i] < nu.coeffs[i]) return false;
  }
  return true;
}

CorootVector RootSystem::coroot(const Root& mu) const {
  if (!is_root(mu)) throw NotARoot(coeff_string(mu.coeffs) + " is not a root of " + type_.name());
  const auto x = to_rational(mu.coeffs);
  const Rational len = inner(x, x);
  CorootVector out{IntVector(mu.coeffs.size(), 0)};
  for (std::size_t i = 0; i < mu.coeffs.size(); ++i) {
    const Rational m = Rational(mu.coeffs[i]) * length_sq_[i] / len;
    if (m.denominator() != 1) throw IntegralityViolation("non-integral coroot coordinate");
    out.coeffs[i] = static_cast<int>(m.numerator());
  }
  return out;
}

Rational RootSystem::inner(std::span<const Rational> x, std::span<const Rational> y) const {
  const auto n = static_cast<std::size_t>(rank());
  if (x.size() != n || y.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  Rational acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == Rational(0)) continue;
    for (std::size_t j = 0; j < n; ++j) acc += x[i] * form_[i][j] * y[j];
  }
  return acc;
}

RationalVector RootSystem::reflect(int i, std::span<const Rational> x) const {
  if (i < 0 || i >= rank()) throw IndexOutOfRange("simple root index " + std::to_string(i) + " out of range");
  const auto n = static_cast<std::size_t>(rank());
  if (x.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  const auto ui = static_cast<std::size_t>(i);
  Rational dot(0);
  for (std::size_t j = 0; j < n; ++j) dot += x[j] * form_[j][ui];
  RationalVector out(x.begin(), x.end());
  out[ui] -= 2 * dot / length_sq_[ui];
  return out;
}

IntVector RootSystem::reflect(int i, std::span<const int> x) const {
  if (i < 0 || i >= rank()) throw IndexOutOfRange("simple root index " + std::to_string(i) + " out of range");
  const auto n = static_cast<std::size_t>(rank());
  if (x.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  const auto ui = static_cast<std::size_t>(i);
  int p = 0;
  for (std::size_t j = 0; j < n; ++j) p += x[j] * cartan_[j][ui];
  IntVector out(x.begin(), x.end());
  out[ui] -= p;
  return out;
}

CorootVector RootSystem::reflect_coroot(int i, const CorootVector& z) const {
  if (i < 0 || i >= rank()) throw IndexOutOfRange("simple root index " + std::to_string(i) + " out of range");
  const auto n = static_cast<std::size_t>(rank());
  if (z.coeffs.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  const auto ui = static_cast<std::size_t>(i);
  int p = 0;
  for (std::size_t j = 0; j < n; ++j) p += cartan_[ui][j] * z.coeffs[j];
  CorootVector out = z;
  out.coeffs[ui] -= p;
  return out;
}

int RootSystem::pairing(const CorootVector& z, std::span<const int> gamma) const {
  const auto n = static_cast<std::size_t>(rank());
  if (z.coeffs.size() != n || gamma.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (gamma[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc += gamma[i] * cartan_[i][j] * z.coeffs[j];
  }
  return acc;
}

RationalVector RootSystem::to_alpha_basis(const CorootVector& z) const {
  const auto n = static_cast<std::size_t>(rank());
  if (z.coeffs.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  RationalVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = Rational(z.coeffs[i]) * 2 / length_sq_[i];
  return out;
}

CorootVector RootSystem::to_coroot_basis(std::span<const Rational> x) const {
  const auto n = static_cast<std::size_t>(rank());
  if (x.size() != n) throw DimensionMismatch("vector dimension does not match rank");
  CorootVector out{IntVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    const Rational m = x[i] * length_sq_[i] / 2;
    if (m.denominator() != 1) throw IntegralityViolation("vector is not in the coroot lattice");
    out.coeffs[i] = static_cast<int>(m.numerator());
  }
  return out;
}

}  // namespace borel
