#include "borel/report.hpp"

#include <algorithm>
#include <sstream>

#include "borel/errors.hpp"
#include "borel/good_bijection.hpp"
#include "borel/normalizer.hpp"

namespace borel {

namespace {

std::size_t display_width(const std::string& s) {
  // Counts UTF-8 lead bytes.
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], display_width(row[c]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += c + 1 == row.size() ? row[c] : pad(row[c], width[c]) + "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string image_header(BijectionMethod m) {
  switch (m) {
    case BijectionMethod::Good: return "phi";
    case BijectionMethod::Minuscule: return "s_subset";
    case BijectionMethod::Normalizer: return "levi";
  }
  return "image";
}

std::string generator_cell_csv(const RootSystem& rs, const std::vector<Root>& gens) {
  std::string out;
  for (const Root& g : gens) {
    if (!out.empty()) out += ' ';
    if (rs.type().series == Series::A) {
      const Interval iv = interval_of(g);
      out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
    } else {
      out += coeff_string(g.coeffs);
    }
  }
  return out;
}

std::string word_string(const std::vector<int>& word) {
  std::string out;
  for (int w : word) {
    if (!out.empty()) out += ' ';
    out += std::to_string(w);
  }
  return out.empty() ? "-" : out;
}

nlohmann::json root_strings(std::span<const Root> roots) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Root& r : roots) arr.push_back(coeff_string(r.coeffs));
  return arr;
}

}  // namespace

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::vector<int> subset_labels(NodeSubset s) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i) {
    if ((s >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

std::string subset_string(NodeSubset s) {
  if (s == 0) return "∅";
  std::string out = "{";
  for (int label : subset_labels(s)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(label);
  }
  return out + "}";
}

std::string mod2_string(NodeSubset s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += ((s >> i) & 1) ? '1' : '0';
  return out;
}

std::string roots_string(std::span<const Root> roots) {
  if (roots.empty()) return "∅";
  std::string out = "{";
  for (const Root& r : roots) {
    if (out.size() > 1) out += ',';
    out += coeff_string(r.coeffs);
  }
  return out + "}";
}

BijectionMethod parse_method(std::string_view name) {
  if (name == "good") return BijectionMethod::Good;
  if (name == "minuscule") return BijectionMethod::Minuscule;
  if (name == "normalizer") return BijectionMethod::Normalizer;
  throw Error("unknown bijection method '" + std::string(name) + "'");
}

std::string method_name(BijectionMethod m) {
  switch (m) {
    case BijectionMethod::Good: return "good";
    case BijectionMethod::Minuscule: return "minuscule";
    case BijectionMethod::Normalizer: return "normalizer";
  }
  return "unknown";
}

std::vector<BijectionRow> bijection_table(const RootSystem& rs, BijectionMethod method) {
  const Series series = rs.type().series;
  if (method == BijectionMethod::Good && series != Series::A && series != Series::C) {
    throw WrongType("the good bijection is only available for types A and C");
  }
  const auto ideals = enumerate_abelian_ideals(rs);
  std::vector<MinusculeRecord> records;
  if (method == BijectionMethod::Minuscule) records = enumerate_minuscule(rs);
  const Graph diagram = diagram_of(rs);

  std::vector<BijectionRow> rows;
  rows.reserve(ideals.size());
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    BijectionRow row;
    row.ideal = ideals[k];
    row.generators = generators(rs, ideals[k]);
    row.kappa = static_cast<int>(row.generators.size());
    row.levi = levi_of_normalizer(rs, ideals[k]);
    switch (method) {
      case BijectionMethod::Good:
        row.image = series == Series::A ? phi_a(rs, ideals[k]) : phi_c(rs, ideals[k]);
        break;
      case BijectionMethod::Minuscule:
        if (!(records[k].ideal == ideals[k])) throw Error("minuscule records out of step with ideal enumeration");
        row.image = records[k].s_subset;
        row.z = records[k].z;
        row.word = records[k].element.word;
        break;
      case BijectionMethod::Normalizer:
        row.image = row.levi;
        break;
    }
    row.components = component_count(diagram, row.image);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_bijection_text(const RootSystem& rs, BijectionMethod method, const std::vector<BijectionRow>& rows) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"generators", "kappa", image_header(method), "components"};
  if (method == BijectionMethod::Minuscule) {
    header.insert(header.begin(), "z");
    header.push_back("word");
  }
  if (method != BijectionMethod::Normalizer) header.push_back("levi");
  table.push_back(header);
  for (const BijectionRow& row : rows) {
    std::vector<std::string> line{roots_string(row.generators), std::to_string(row.kappa), subset_string(row.image),
                                  std::to_string(row.components)};
    if (method == BijectionMethod::Minuscule) {
      line.insert(line.begin(), coeff_string(row.z->coeffs));
      line.push_back(word_string(row.word));
    }
    if (method != BijectionMethod::Normalizer) line.push_back(subset_string(row.levi));
    table.push_back(std::move(line));
  }
  return "# " + rs.type().name() + " " + method_name(method) + " bijection\n" + render_columns(table);
}

std::string render_bijection_csv(const RootSystem& rs, BijectionMethod method, const std::vector<BijectionRow>& rows) {
  std::ostringstream out;
  out << "generators,kappa," << image_header(method) << ",components";
  if (method == BijectionMethod::Minuscule) out << ",z,z_mod2,word";
  if (method != BijectionMethod::Normalizer) out << ",levi";
  out << "\n";
  for (const BijectionRow& row : rows) {
    const std::string image = row.image == 0 ? "" : subset_string(row.image);
    out << csv_field(generator_cell_csv(rs, row.generators)) << ',' << row.kappa << ',' << csv_field(image) << ','
        << row.components;
    if (method == BijectionMethod::Minuscule) {
      out << ',' << csv_field(coeff_string(row.z->coeffs)) << ',' << mod2_string(s_subset(*row.z), rs.rank()) << ','
          << word_string(row.word);
    }
    if (method != BijectionMethod::Normalizer) out << ',' << csv_field(row.levi == 0 ? "" : subset_string(row.levi));
    out << "\n";
  }
  return out.str();
}

nlohmann::json bijection_json(const RootSystem& rs, BijectionMethod method, const std::vector<BijectionRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BijectionRow& row : rows) {
    nlohmann::json j;
    j["generators"] = root_strings(row.generators);
    j["kappa"] = row.kappa;
    j[image_header(method)] = subset_labels(row.image);
    j["components"] = row.components;
    j["levi"] = subset_labels(row.levi);
    if (row.z) {
      j["z"] = row.z->coeffs;
      j["z_mod2"] = mod2_string(s_subset(*row.z), rs.rank());
      j["word"] = row.word;
    }
    arr.push_back(std::move(j));
  }
  return nlohmann::json{{"schema", kJsonSchema}, {"type", rs.type().name()}, {"method", method_name(method)}, {"rows", arr}};
}

std::string render_table_a3() {
  const RootSystem rs(TypeSpec::make(Series::A, 3));
  const auto ideals = enumerate_abelian_ideals(rs);
  const auto records = enumerate_minuscule(rs);
  std::vector<std::vector<std::string>> table{{"z_I", "Gamma(I)", "z_I mod 2", "Phi(I)", "Levi"}};
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const CorootVector& z = records[k].z;
    table.push_back({coeff_string(z.coeffs), roots_string(generators(rs, ideals[k])),
                     mod2_string(s_subset(z), rs.rank()), subset_string(phi_a(rs, ideals[k])),
                     subset_string(levi_of_normalizer(rs, ideals[k]))});
  }
  return render_columns(table);
}

nlohmann::json polynomial_json(const TypeSpec& type, std::string_view source, const GradedPolynomial& p) {
  return nlohmann::json{{"type", type.name()}, {"source", std::string(source)}, {"coeffs", p.coeffs()}};
}

nlohmann::json ideal_json(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Root> roots;
  for (int k : ideal.indices()) roots.push_back(rs.root(k));
  const auto gens = generators(rs, ideal);
  return nlohmann::json{{"roots", root_strings(roots)},
                        {"generators", root_strings(gens)},
                        {"kappa", static_cast<int>(gens.size())}};
}

nlohmann::json minuscule_json(const RootSystem& rs, const MinusculeRecord& rec) {
  return nlohmann::json{{"generators", root_strings(generators(rs, rec.ideal))},
                        {"z", rec.z.coeffs},
                        {"z_mod2", mod2_string(rec.s_subset, rs.rank())},
                        {"s_subset", subset_labels(rec.s_subset)},
                        {"word", rec.element.word}};
}

}  // namespace borel
