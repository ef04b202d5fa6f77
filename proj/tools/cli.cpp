#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "borel/acceptance.hpp"
#include "borel/dynkin.hpp"
#include "borel/errors.hpp"
#include "borel/ideals.hpp"
#include "borel/report.hpp"
#include "borel/rootsys.hpp"

namespace borel::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TypeSpec parse_type(const std::string& text) {
  try {
    return TypeSpec::parse(text);
  } catch (const InvalidType& e) {
    throw UsageError(e.what());
  }
}

std::string joined(std::span<const Root> roots) {
  std::string out;
  for (const Root& r : roots) {
    if (!out.empty()) out += ' ';
    out += coeff_string(r.coeffs);
  }
  return out;
}

std::vector<Root> members(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Root> out;
  for (int k : ideal.indices()) out.push_back(rs.root(k));
  return out;
}

int cmd_roots(const std::string& type, const std::string& format, std::ostream& out) {
  const RootSystem rs(parse_type(type));
  const auto roots = rs.positive_roots();
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Root& r : roots) {
      arr.push_back({{"coeffs", r.coeffs}, {"string", coeff_string(r.coeffs)}, {"height", r.height()}});
    }
    out << nlohmann::json{{"schema", kJsonSchema},
                          {"type", rs.type().name()},
                          {"highest_root", coeff_string(rs.highest_root().coeffs)},
                          {"roots", arr}}
               .dump(2)
        << "\n";
  } else if (format == "csv") {
    out << "index,coeffs,height\n";
    for (std::size_t k = 0; k < roots.size(); ++k) {
      out << k + 1 << ',' << coeff_string(roots[k].coeffs) << ',' << roots[k].height() << "\n";
    }
  } else {
    out << "# " << rs.type().name() << " positive roots (" << roots.size() << ")\n";
    for (std::size_t k = 0; k < roots.size(); ++k) {
      out << pad(std::to_string(k + 1), 5) << pad(coeff_string(roots[k].coeffs), rs.rank() + 2) << "height "
          << roots[k].height() << "\n";
    }
  }
  return kExitOk;
}

int cmd_ideals(const std::string& type, const std::string& format, std::ostream& out) {
  const RootSystem rs(parse_type(type));
  const auto ideals = enumerate_abelian_ideals(rs);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const AbelianIdeal& ideal : ideals) arr.push_back(ideal_json(rs, ideal));
    out << nlohmann::json{{"schema", kJsonSchema}, {"type", rs.type().name()}, {"ideals", arr}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "size,kappa,generators,roots\n";
    for (const AbelianIdeal& ideal : ideals) {
      const auto gens = generators(rs, ideal);
      out << ideal.size() << ',' << gens.size() << ',' << joined(gens) << ',' << joined(members(rs, ideal)) << "\n";
    }
  } else {
    out << "# " << rs.type().name() << " abelian ideals (" << ideals.size() << ")\n";
    for (const AbelianIdeal& ideal : ideals) {
      const auto gens = generators(rs, ideal);
      out << "kappa " << gens.size() << "  generators " << roots_string(gens) << "  roots "
          << roots_string(members(rs, ideal)) << "\n";
    }
  }
  return kExitOk;
}

int cmd_poly(const std::string& type, const std::string& source, std::optional<std::int64_t> at,
             const std::string& format, std::ostream& out) {
  const TypeSpec spec = parse_type(type);
  std::vector<std::pair<std::string, GradedPolynomial>> polys;
  if (source == "ideals" || source == "all") polys.emplace_back("ideals", upper_covering_polynomial(RootSystem(spec)));
  if (source == "dynkin" || source == "all") polys.emplace_back("dynkin", subset_polynomial(diagram_of(spec)));
  if (source == "closed" || source == "all") polys.emplace_back("closed_form", closed_form_polynomial(spec));
  const bool agree = std::all_of(polys.begin(), polys.end(), [&](const auto& p) { return p.second == polys.front().second; });

  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [name, p] : polys) {
      nlohmann::json j = polynomial_json(spec, name, p);
      if (at) j["value_at"] = {{"q", *at}, {"value", evaluate(p, *at)}};
      arr.push_back(std::move(j));
    }
    out << nlohmann::json{{"schema", kJsonSchema}, {"polynomials", arr}, {"agree", agree}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "type,source,coeffs" << (at ? ",q,value" : "") << "\n";
    for (const auto& [name, p] : polys) {
      out << spec.name() << ',' << name << ',';
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) out << (k ? " " : "") << p.coeffs()[k];
      if (at) out << ',' << *at << ',' << evaluate(p, *at);
      out << "\n";
    }
  } else {
    for (const auto& [name, p] : polys) {
      out << spec.name() << "  " << pad(name, 12) << p.to_string();
      if (at) out << "    at q=" << *at << ": " << evaluate(p, *at);
      out << "\n";
    }
    if (polys.size() > 1) out << (agree ? "all sources agree\n" : "SOURCES DISAGREE\n");
  }
  return agree ? kExitOk : kExitFailed;
}

int cmd_bijection(const std::string& type, const std::string& method_text, const std::string& format,
                  std::ostream& out) {
  const RootSystem rs(parse_type(type));
  const BijectionMethod method = parse_method(method_text);
  if (method == BijectionMethod::Good && rs.type().series != Series::A && rs.type().series != Series::C) {
    throw UsageError("--method good is only available for types A and C");
  }
  const auto rows = bijection_table(rs, method);
  if (format == "json") {
    out << bijection_json(rs, method, rows).dump(2) << "\n";
  } else if (format == "csv") {
    out << render_bijection_csv(rs, method, rows);
  } else {
    out << render_bijection_text(rs, method, rows);
  }
  return kExitOk;
}

int cmd_verify(int max_rank, const std::vector<std::string>& type_names, const std::string& format,
               std::ostream& out) {
  AcceptanceOptions options;
  options.max_rank = max_rank;
  for (const std::string& name : type_names) options.types.push_back(parse_type(name));
  const auto results = run_acceptance(options);
  const bool passed = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const CriterionResult& r : results) {
      arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary}, {"failures", r.failures}});
    }
    out << nlohmann::json{{"schema", kJsonSchema}, {"passed", passed}, {"criteria", arr}}.dump(2) << "\n";
  } else {
    out << format_results(results);
    out << (passed ? "all criteria passed\n" : "verification FAILED\n");
  }
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian ideals of Borel subalgebras and subsets of Dynkin diagrams", "borel"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  std::string type;
  std::string format = "text";
  std::string source = "all";
  std::optional<std::int64_t> at;
  std::string method;
  int max_rank = 8;
  std::vector<std::string> types;

  auto* roots = app.add_subcommand("roots", "List positive roots");
  roots->add_option("type", type, "Root system type, e.g. A3 or E8")->required();
  roots->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* ideals = app.add_subcommand("ideals", "List abelian ideals with generators");
  ideals->add_option("type", type)->required();
  ideals->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* poly = app.add_subcommand("poly", "Covering / subset polynomials");
  poly->add_option("type", type)->required();
  poly->add_option("--source", source)->check(CLI::IsMember({"ideals", "dynkin", "closed", "all"}));
  poly->add_option("--at", at, "Evaluate at an integer q");
  poly->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* bijection = app.add_subcommand("bijection", "Tabulate a bijection Ab -> subsets of the diagram");
  bijection->add_option("type", type)->required();
  bijection->add_option("--method", method)->required()->check(CLI::IsMember({"good", "minuscule", "normalizer"}));
  bijection->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table-a3", "Compare the three bijections for A3");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--max-rank", max_rank)->check(CLI::Range(1, 10));
  verify->add_option("--types", types, "Comma-separated type list")->delimiter(',');
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*roots) return cmd_roots(type, format, out);
    if (*ideals) return cmd_ideals(type, format, out);
    if (*poly) return cmd_poly(type, source, at, format, out);
    if (*bijection) return cmd_bijection(type, method, format, out);
    if (*table) {
      out << render_table_a3();
      return kExitOk;
    }
    if (*verify) return cmd_verify(max_rank, types, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace borel::cli
