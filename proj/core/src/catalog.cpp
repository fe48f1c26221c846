#include "germlab/catalog.hpp"

#include <future>

#include "germlab/errors.hpp"

namespace germlab {

std::string TableValue::to_string() const { return empty ? "-" : std::to_string(value); }

namespace {

std::string num(long long v) { return std::to_string(v); }

[[noreturn]] void refuse(const std::string& name, const std::string& condition) {
  throw Error(ErrorCode::InvalidArgument, name + " requires " + condition);
}

CatalogEntry base(const std::string& family, const std::string& name, std::vector<int> indices,
                  std::string c1, std::string c2) {
  CatalogEntry e;
  e.table = "simple";
  e.family = family;
  e.name = name;
  e.indices = std::move(indices);
  e.components = {std::move(c1), std::move(c2)};
  return e;
}

void merged(CatalogEntry& e, std::uint64_t v) {
  e.ae_codim = v;
  e.mu_image = v;
  e.merged_columns = true;
}

}  // namespace

std::vector<std::string> simple_families() {
  return {"A", "D", "E", "B", "C", "F", "P3", "P4", "P", "Q", "R", "S"};
}

std::vector<std::string> nonsimple_rows() { return {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"}; }

CatalogEntry simple_entry(const std::string& family, int k, int j) {
  const auto K = static_cast<std::uint64_t>(k);
  CatalogEntry e;
  if (family == "A") {
    if (k < 1) refuse("A_k", "k >= 1");
    e = base(family, "A_" + num(k), {k}, "z^2", "z*(z^2+x^2+y^" + num(k + 1) + ")");
    e.mu_d2 = TableValue::of(K);
    e.mu_d3 = TableValue::dash();
    merged(e, K);
    e.condition = "k>=1";
  } else if (family == "D") {
    if (k < 4) refuse("D_k", "k >= 4");
    e = base(family, "D_" + num(k), {k}, "z^2", "z*(z^2+x^2*y+y^" + num(k - 1) + ")");
    e.mu_d2 = TableValue::of(K);
    e.mu_d3 = TableValue::dash();
    merged(e, K);
    e.condition = "k>=4";
  } else if (family == "E") {
    static const std::map<int, std::string> tails = {{6, "x^3+y^4"}, {7, "x^3+x*y^3"}, {8, "x^3+y^5"}};
    auto it = tails.find(k);
    if (it == tails.end()) refuse("E_k", "k in {6, 7, 8}");
    e = base(family, "E_" + num(k), {k}, "z^2", "z*(z^2+" + it->second + ")");
    e.mu_d2 = TableValue::of(K);
    e.mu_d3 = TableValue::dash();
    merged(e, K);
  } else if (family == "B") {
    if (k < 2) refuse("B_k", "k >= 2");
    e = base(family, "B_" + num(k), {k}, "z^2", "z*(x^2+y^2+z^" + num(2 * k) + ")");
    e.mu_d2 = TableValue::of(2 * K - 1);
    e.mu_d3 = TableValue::dash();
    merged(e, K);
    e.condition = "k>=2";
  } else if (family == "C") {
    if (k < 3) refuse("C_k", "k >= 3");
    e = base(family, "C_" + num(k), {k}, "z^2", "z*(x^2+y*z^2+y^" + num(k) + ")");
    e.mu_d2 = TableValue::of(K + 1);
    e.mu_d3 = TableValue::dash();
    merged(e, K);
    e.condition = "k>=3";
  } else if (family == "F") {
    if (k != 4) refuse("F_k", "k = 4");
    e = base(family, "F_4", {4}, "z^2", "z*(x^2+y^3+z^4)");
    e.mu_d2 = TableValue::of(6);
    e.mu_d3 = TableValue::dash();
    merged(e, 4);
  } else if (family == "P3") {
    if (k < 2) refuse("P_3^k", "k >= 2");
    e = base(family, "P_3^" + num(k), {k}, "y*z+z^6+z^" + num(3 * k + 2), "x*z+z^3");
    e.mu_d2 = TableValue::of(0);
    e.mu_d3 = TableValue::of(6 * K + 1);
    e.ae_codim = K + 1;
    e.mu_image = K + 2;
    e.condition = "k>=2";
  } else if (family == "P4") {
    if (k != 1) refuse("P_4^k", "k = 1");
    e = base(family, "P_4^1", {1}, "y*z+z^7+z^8", "x*z+z^3");
    e.mu_d2 = TableValue::of(0);
    e.mu_d3 = TableValue::of(16);
    e.ae_codim = 4;
    e.mu_image = 5;
  } else if (family == "P") {
    if (k < 1 || k % 3 == 0) refuse("P_k", "k >= 1 and k not divisible by 3");
    e = base(family, "P_" + num(k), {k}, "y*z+z^" + num(k + 3), "x*z+z^3");
    e.mu_d2 = TableValue::of(0);
    e.mu_d3 = TableValue::of(K * K);
    merged(e, (K + 1) * (K + 2) / 6);
    e.condition = "k>=1, 3 does not divide k";
  } else if (family == "Q") {
    if (k < 2) refuse("Q_k", "k >= 2");
    e = base(family, "Q_" + num(k), {k}, "x*z+y*z^2", "z^3+y^" + num(k) + "*z");
    e.mu_d2 = TableValue::of(K - 1);
    e.mu_d3 = TableValue::of(1);
    merged(e, K);
    e.condition = "k>=2";
  } else if (family == "R") {
    if (k < 3) refuse("R_k", "k >= 3");
    e = base(family, "R_" + num(k), {k}, "x*z+z^3", "y*z^2+z^4+z^" + num(2 * k - 1));
    e.mu_d2 = TableValue::of(2 * K - 3);
    e.mu_d3 = TableValue::of(4);
    e.ae_codim = K;
    e.mu_image = K + 1;
    e.condition = "k>=3";
  } else if (family == "S") {
    if (j < 1 || k < 2) refuse("S_{j,k}", "j >= 1 and k >= 2");
    const auto J = static_cast<std::uint64_t>(j);
    e = base(family, "S_{" + num(j) + "," + num(k) + "}", {j, k}, "x*z+y^2*z^2+z^" + num(3 * j + 2),
             "z^3+y^" + num(k) + "*z");
    e.mu_d2 = TableValue::of(K - 1);
    e.mu_d3 = TableValue::of(6 * J + 1);
    e.ae_codim = K + J;
    e.mu_image = K + J + 1;
    e.condition = "j>=1, k>=2";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown simple family '" + family + "'");
  }
  return e;
}

CatalogEntry nonsimple_entry(const std::string& row, const std::map<std::string, Rational>& values) {
  struct Spec {
    std::string c1, c2;
    std::map<std::string, Rational> sample;
    std::uint64_t d2, d3, codim, mu_image;
    std::string condition;
  };
  static const std::map<std::string, Spec> rows = {
      {"I", {"y*z+x*z^3+z^5+a*z^7", "x*z+z^4+b*z^6", {{"a", 0}, {"b", 1}}, 0, 13, 5, 6, "a != b"}},
      {"II",
       {"y*z+x*z^3+a*z^6+z^7+b*z^8+c*z^9", "x*z+z^4", {{"a", 2}, {"b", 3}, {"c", 5}}, 0, 25, 7, 9, "generic"}},
      {"III", {"y*z+z^5+z^6+a*z^7", "x*z+z^4", {{"a", 0}}, 0, 13, 5, 6, "a != 1"}},
      {"IV", {"y*z+z^5+a*z^7", "x*z+z^4+z^6", {{"a", 0}}, 0, 13, 5, 6, "a != 1"}},
      {"V", {"x*z+z^5+a*y^3*z^2+y^4*z^2", "z^3+y^2*z", {{"a", 0}}, 1, 13, 5, 6, "any a"}},
      {"VI", {"x*z+z^3", "y*z^2+z^5+z^6+a*z^7", {{"a", 0}}, 3, 13, 4, 6, "a != 1"}},
      {"VII", {"x*z+z^3", "y^2*z+x*z^2+a*z^4+z^5", {{"a", 2}}, 4, 7, 5, 6, "a not in {1, -1, 0, 5/4, 1/2, 3/2}"}},
      {"VIII", {"x*z+z^4+a*z^5+b*z^7", "y*z^2+z^4+z^5", {{"a", 0}, {"b", 1}}, 3, 13, 6, 8, "a - a^2 != b"}},
  };
  auto it = rows.find(row);
  if (it == rows.end()) throw Error(ErrorCode::InvalidArgument, "unknown table row '" + row + "'");
  const Spec& s = it->second;
  std::map<std::string, Rational> params = s.sample;
  for (const auto& [name, value] : values) {
    if (!params.count(name)) throw Error(ErrorCode::UnknownIdentifier, "row " + row + " has no parameter '" + name + "'");
    params[name] = value;
  }
  auto a = [&](const char* n) { return params.at(n); };
  bool ok = true;
  if (row == "I") ok = a("a") != a("b");
  if (row == "III" || row == "IV" || row == "VI") ok = a("a") != 1;
  if (row == "VII")
    for (Rational bad : {Rational(1), Rational(-1), Rational(0), Rational(5, 4), Rational(1, 2), Rational(3, 2)})
      if (a("a") == bad) ok = false;
  if (row == "VIII") ok = a("a") - a("a") * a("a") != a("b");
  if (!ok) refuse("row " + row, s.condition);

  CatalogEntry e;
  e.table = "nonsimple";
  e.family = row;
  e.name = row;
  e.parameters = params;
  e.components = {s.c1, s.c2};
  e.mu_d2 = TableValue::of(s.d2);
  e.mu_d3 = TableValue::of(s.d3);
  e.ae_codim = s.codim;
  e.mu_image = s.mu_image;
  e.condition = s.condition;
  return e;
}

std::vector<CatalogEntry> default_simple_catalog() {
  std::vector<CatalogEntry> out;
  for (int k = 1; k <= 4; ++k) out.push_back(simple_entry("A", k));
  out.push_back(simple_entry("D", 4));
  out.push_back(simple_entry("D", 5));
  for (int k = 6; k <= 8; ++k) out.push_back(simple_entry("E", k));
  out.push_back(simple_entry("B", 2));
  out.push_back(simple_entry("B", 3));
  out.push_back(simple_entry("C", 3));
  out.push_back(simple_entry("C", 4));
  out.push_back(simple_entry("F", 4));
  out.push_back(simple_entry("P3", 2));
  out.push_back(simple_entry("P4", 1));
  for (int k : {1, 2, 4}) out.push_back(simple_entry("P", k));
  out.push_back(simple_entry("Q", 2));
  out.push_back(simple_entry("Q", 3));
  out.push_back(simple_entry("R", 3));
  out.push_back(simple_entry("R", 4));
  out.push_back(simple_entry("S", 2, 1));
  return out;
}

std::vector<CatalogEntry> default_nonsimple_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& row : nonsimple_rows()) out.push_back(nonsimple_entry(row));
  return out;
}

GermCorank1 CatalogEntry::germ() const {
  std::vector<std::string> names;
  for (const auto& [n, v] : parameters) names.push_back(n);
  GermCorank1 f = make_germ(name, 3, 4, {"x", "y"}, "z", components, names);
  return parameters.empty() ? f : f.substitute(parameters);
}

std::string CatalogEntry::formula() const {
  return "(x,y," + components[0] + "," + components[1] + ")";
}

TableRow compute_row(const CatalogEntry& entry, const AnalyzeOptions& options) {
  TableRow row;
  row.entry = entry;
  try {
    row.report = analyze(entry.germ(), options);
  } catch (const Error& e) {
    row.error = e.what();
    return row;
  }
  auto column = [&](int k) -> std::optional<TableValue> {
    const KRow* r = row.report->row(k);
    if (!r || r->empty) return TableValue::dash();
    if (!r->milnor) return std::nullopt;
    return TableValue::of(*r->milnor);
  };
  row.mu_d2 = column(2);
  row.mu_d3 = column(3);
  row.mu_image = row.report->mu_I;
  auto compare = [&](const std::string& label, const std::optional<TableValue>& expected,
                     const std::optional<TableValue>& got) {
    if (!expected) return;
    if (!got || !(*got == *expected))
      row.mismatches.push_back(label + ": expected " + expected->to_string() + ", computed " +
                               (got ? got->to_string() : std::string("?")));
  };
  compare("mu(D^2)", entry.mu_d2, row.mu_d2);
  compare("mu(D^3)", entry.mu_d3, row.mu_d3);
  if (entry.mu_image) {
    if (!row.mu_image || *row.mu_image != Integer(static_cast<unsigned long>(*entry.mu_image)))
      row.mismatches.push_back("mu_I: expected " + std::to_string(*entry.mu_image) + ", computed " +
                               (row.mu_image ? row.mu_image->get_str() : std::string("?")));
  }
  return row;
}

std::vector<TableRow> compute_table(const std::vector<CatalogEntry>& entries, const AnalyzeOptions& options) {
  std::vector<std::future<TableRow>> futures;
  for (const auto& e : entries)
    futures.push_back(std::async(std::launch::async, [&e, &options] { return compute_row(e, options); }));
  std::vector<TableRow> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace germlab
