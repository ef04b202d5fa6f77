#pragma once

// Rendering of roots, ideals and bijection tables as text, CSV and JSON.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "borel/affine.hpp"
#include "borel/dynkin.hpp"
#include "borel/ideals.hpp"
#include "borel/rootsys.hpp"

namespace borel {

inline constexpr int kJsonSchema = 1;

// "{1,3}" with 1-based labels, or "∅".
std::string subset_string(NodeSubset s);
// Characteristic vector over n nodes, e.g. "101".
std::string mod2_string(NodeSubset s, int n);
std::vector<int> subset_labels(NodeSubset s);
// "{110,011}" in coefficient-string notation, or "∅".
std::string roots_string(std::span<const Root> roots);

enum class BijectionMethod { Good, Minuscule, Normalizer };

BijectionMethod parse_method(std::string_view name);
std::string method_name(BijectionMethod m);

struct BijectionRow {
  AbelianIdeal ideal;
  std::vector<Root> generators;
  int kappa = 0;
  NodeSubset image = 0;  // Phi(I), S_I or the Levi subset depending on method
  int components = 0;
  NodeSubset levi = 0;
  std::optional<CorootVector> z;
  std::vector<int> word;
};

// One row per abelian ideal, in enumerate_abelian_ideals order. The good
// method throws WrongType outside types A and C.
std::vector<BijectionRow> bijection_table(const RootSystem& rs, BijectionMethod method);

std::string render_bijection_text(const RootSystem& rs, BijectionMethod method, const std::vector<BijectionRow>& rows);
std::string render_bijection_csv(const RootSystem& rs, BijectionMethod method, const std::vector<BijectionRow>& rows);
nlohmann::json bijection_json(const RootSystem& rs, BijectionMethod method, const std::vector<BijectionRow>& rows);

// z_I, generators, z_I mod 2, Phi(I) and the normaliser Levi for A3.
std::string render_table_a3();

nlohmann::json polynomial_json(const TypeSpec& type, std::string_view source, const GradedPolynomial& p);
nlohmann::json ideal_json(const RootSystem& rs, const AbelianIdeal& ideal);
nlohmann::json minuscule_json(const RootSystem& rs, const MinusculeRecord& rec);

// Pads with spaces to `width` code points.
std::string pad(const std::string& s, std::size_t width);

}  // namespace borel
