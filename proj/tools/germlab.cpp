#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "germlab/complex_json.hpp"
#include "germlab/errors.hpp"
#include "germlab/germ_file.hpp"
#include "germlab/report_json.hpp"
#include "render.hpp"

namespace {

using namespace germlab;

enum Exit {
  kOk = 0,
  kNegative = 1,
  kInconclusive = 2,
  kAnalysisError = 3,
  kUsage = 64,
  kDataError = 65,
  kInternal = 70,
};

struct Common {
  bool json = false;
  std::optional<int> max_k;
  std::uint64_t seed = 1;
  std::vector<std::string> params;
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "Print the JSON report instead of text");
  app->add_option("--max-k", c.max_k, "Largest multiplicity k to explore (default: GERMLAB_MAX_K or first empty D^k)")
      ->check(CLI::Range(2, 16));
  app->add_option("--seed", c.seed, "Seed for randomized generator combinations");
  app->add_option("--param", c.params, "Parameter value, name=rational (repeatable)");
}

AnalyzeOptions analyze_options(const Common& c) {
  AnalyzeOptions options;
  options.max_k = c.max_k ? *c.max_k : max_k_from_environment();
  options.milnor.seed = c.seed;
  return options;
}

std::map<std::string, Rational> parse_assignments(const std::vector<std::string>& items) {
  std::map<std::string, Rational> out;
  for (const auto& item : items) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::InvalidArgument, "expected name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Syntax:
    case ErrorCode::UnknownIdentifier:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnsubstitutedParameter:
    case ErrorCode::InvalidAction:
      return kDataError;
    case ErrorCode::NonIntegral:
      return kInternal;
    default:
      return kAnalysisError;
  }
}

int cmd_analyze(const std::string& path, const Common& c, bool rules_only) {
  GermFile file = load_germ_file(path);
  GermCorank1 f = file.germ(parse_assignments(c.params));
  GrpReport report = analyze(f, analyze_options(c));
  if (c.json)
    std::cout << to_json(report) << "\n";
  else
    cli::render(std::cout, f, report, rules_only);
  if (report.verdict == Verdict::Fails) return kNegative;
  return report.complete ? kOk : kInconclusive;
}

std::pair<int, int> parse_range(const std::string& text) {
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "expected a range a..b, got '" + text + "'");
  }
}

int cmd_table(const std::string& which, const std::string& family, const std::string& k_range,
              const std::string& j_range, const std::string& row, const Common& c) {
  std::vector<CatalogEntry> entries;
  if (which == "simple") {
    if (family.empty()) {
      if (!k_range.empty() || !j_range.empty())
        throw Error(ErrorCode::InvalidArgument, "--k and --j need --family");
      entries = default_simple_catalog();
    } else if (k_range.empty() && j_range.empty()) {
      for (auto& e : default_simple_catalog())
        if (e.family == family) entries.push_back(std::move(e));
      if (entries.empty()) entries.push_back(simple_entry(family, 0));
    } else {
      if (k_range.empty()) throw Error(ErrorCode::InvalidArgument, "--j needs --k");
      auto [k0, k1] = parse_range(k_range);
      auto [j0, j1] = parse_range(j_range.empty() ? "1" : j_range);
      if (family != "S" && !j_range.empty()) throw Error(ErrorCode::InvalidArgument, "--j applies to S only");
      for (int j = j0; j <= (family == "S" ? j1 : j0); ++j)
        for (int k = k0; k <= k1; ++k) entries.push_back(simple_entry(family, k, family == "S" ? j : 0));
    }
  } else {
    if (!family.empty()) throw Error(ErrorCode::InvalidArgument, "--family applies to the simple table");
    auto values = parse_assignments(c.params);
    if (row.empty()) {
      if (!values.empty()) throw Error(ErrorCode::InvalidArgument, "--param needs --row");
      entries = default_nonsimple_catalog();
    } else {
      entries.push_back(nonsimple_entry(row, values));
    }
  }
  std::vector<TableRow> rows = compute_table(entries, analyze_options(c));
  if (c.json)
    std::cout << to_json(rows) << "\n";
  else
    cli::render(std::cout, rows);
  for (const auto& r : rows)
    if (!r.matches()) return kNegative;
  return kOk;
}

int cmd_witness(const std::string& germ_path, const std::string& perturbation_path, const Common& c) {
  GermFile file = load_germ_file(germ_path);
  GermFile source = perturbation_path.empty() ? file : load_germ_file(perturbation_path);
  GermCorank1 perturbation = source.has_perturbation() ? source.perturbation_germ() : source.symbolic_germ();
  std::map<std::string, Rational> values = source.parameter_values(parse_assignments(c.params));
  std::map<std::string, Rational> used;
  for (const auto& name : perturbation.parameter_names()) used[name] = values.at(name);
  GermCorank1 f = file.germ();
  WitnessReport report = witness_check(f, perturbation, used, analyze_options(c));
  if (c.json)
    std::cout << to_json(report) << "\n";
  else
    cli::render(std::cout, report);
  switch (report.verdict) {
    case WitnessVerdict::Confirmed: return kOk;
    case WitnessVerdict::Refuted: return kNegative;
    case WitnessVerdict::Inconclusive: return kInconclusive;
  }
  return kInternal;
}

Coefficients parse_coefficients(const std::string& text) {
  if (text == "z" || text == "Z") return Coefficients::integers();
  if (text == "q" || text == "Q") return Coefficients::rationals();
  if (text.size() > 1 && (text[0] == 'f' || text[0] == 'F')) {
    try {
      return Coefficients::prime(static_cast<std::uint32_t>(std::stoul(text.substr(1))));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "coefficients must be z, q or f<prime>, got '" + text + "'");
}

int cmd_simplicial(const std::string& path, const std::string& what, const std::string& coeff_text,
                   int dimension, std::optional<unsigned> i, bool subdivide, const Common& c) {
  SimplicialGComplex x = load_complex(path);
  if (subdivide) x = validate_or_subdivide(x);
  if (what == "homology") {
    Coefficients coeff = parse_coefficients(coeff_text);
    auto groups = homology(x, coeff);
    if (c.json)
      std::cout << to_json(groups, coeff) << "\n";
    else
      cli::render(std::cout, groups, coeff);
    return kOk;
  }
  if (what == "alt") {
    AltHomologyResult r = alternating_homology(x, parse_coefficients(coeff_text == "z" ? "q" : coeff_text));
    if (c.json)
      std::cout << to_json(r) << "\n";
    else
      cli::render(std::cout, r);
    return kOk;
  }
  if (what == "chi") {
    FixedPointFormula f = chi_alt_fixed_point_formula(x, dimension);
    if (c.json)
      std::cout << to_json(f) << "\n";
    else
      cli::render(std::cout, f);
    return kOk;
  }
  if (what == "floyd") {
    InequalityLedger ledger = verify_floyd(x);
    if (c.json)
      std::cout << to_json(ledger) << "\n";
    else
      cli::render(std::cout, "Floyd", ledger);
    return ledger.holds() ? kOk : kNegative;
  }
  // smith
  InequalityLedger ledger = verify_equivariant_smith(x);
  std::vector<SpecialRanks> special;
  if (i) {
    special.push_back(smith_special_ranks(x, *i));
  } else {
    for (unsigned s = 1; s < x.p; ++s) special.push_back(smith_special_ranks(x, s));
  }
  bool ok = ledger.holds();
  for (const auto& s : special) ok = ok && s.exact();
  if (c.json) {
    std::cout << "{\"inequality\": " << to_json(ledger) << ",\n\"special\": [";
    for (std::size_t s = 0; s < special.size(); ++s) std::cout << (s ? ",\n" : "") << to_json(special[s]);
    std::cout << "]}\n";
  } else {
    cli::render(std::cout, "equivariant Smith", ledger);
    for (const auto& s : special) cli::render(std::cout, s);
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple point spaces, good real perturbations and equivariant homology of corank-one germs"};
  app.require_subcommand(1);

  Common common;
  bool rules_only = false;
  std::string germ_path, perturbation_path, table_which, family, k_range, j_range, row;
  std::string complex_path, simplicial_what, coeff = "z";
  int dimension = 0;
  std::optional<unsigned> special_i;
  bool no_subdivide = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a germ file");
  analyze_cmd->add_option("germ", germ_path, "Germ definition file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_flag("--rules-only", rules_only, "Print only rule violations and the verdict");
  add_common(analyze_cmd, common);

  auto* table_cmd = app.add_subcommand("table", "Recompute a classification table and compare");
  table_cmd->add_option("which", table_which, "simple or nonsimple")
      ->required()
      ->check(CLI::IsMember({"simple", "nonsimple"}));
  table_cmd->add_option("--family", family, "Simple family: A D E B C F P3 P4 P Q R S");
  table_cmd->add_option("--k", k_range, "Family index or range a..b");
  table_cmd->add_option("--j", j_range, "First index of S_{j,k}, or range a..b");
  table_cmd->add_option("--row", row, "Non-simple row I..VIII");
  add_common(table_cmd, common);

  auto* witness_cmd = app.add_subcommand("witness", "Check a real perturbation");
  witness_cmd->add_option("germ", germ_path, "Germ definition file")->required()->check(CLI::ExistingFile);
  witness_cmd->add_option("perturbation", perturbation_path,
                          "File with the perturbation (default: the germ file's perturbation section)")
      ->check(CLI::ExistingFile);
  add_common(witness_cmd, common);

  auto* simplicial_cmd = app.add_subcommand("simplicial", "Equivariant homology of a JSON complex");
  simplicial_cmd->add_option("complex", complex_path, "JSON complex")->required()->check(CLI::ExistingFile);
  simplicial_cmd->add_option("computation", simplicial_what, "homology, alt, chi, floyd or smith")
      ->required()
      ->check(CLI::IsMember({"homology", "alt", "chi", "floyd", "smith"}));
  simplicial_cmd->add_option("--coeff", coeff, "Coefficients: z, q or f<prime>");
  simplicial_cmd->add_option("--dimension", dimension, "Degree d for the (-1)^d normalized fixed point formula");
  simplicial_cmd->add_option("--i", special_i, "Exponent i of rho = (1-g)^i, 0..p (default: 1..p-1)");
  simplicial_cmd->add_flag("--no-subdivide", no_subdivide, "Reject actions that are not simplicially good");
  add_common(simplicial_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(germ_path, common, rules_only);
    if (*table_cmd) return cmd_table(table_which, family, k_range, j_range, row, common);
    if (*witness_cmd) return cmd_witness(germ_path, perturbation_path, common);
    if (*simplicial_cmd)
      return cmd_simplicial(complex_path, simplicial_what, coeff, dimension, special_i, !no_subdivide, common);
  } catch (const Error& e) {
    std::cerr << "germlab: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "germlab: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
