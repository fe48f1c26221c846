#include "germlab/report_json.hpp"

#include "json.hpp"

namespace germlab {

using nlohmann::json;

namespace {

json count(const Count& c) { return c ? json(*c) : json("inf"); }

json integer(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

json rational(const Rational& q) {
  if (q.get_den() == 1) return integer(q.get_num());
  return json(rational_to_string(q));
}

json table_value(const std::optional<TableValue>& v) {
  if (!v) return nullptr;
  if (v->empty) return "-";
  return v->value;
}

json grp(const GrpReport& r) {
  json j;
  j["germ"] = r.germ;
  j["n"] = r.n;
  j["p"] = r.p;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json jr;
    jr["k"] = row.k;
    jr["d_k"] = row.d_k;
    jr["empty"] = row.empty;
    jr["milnor"] = row.milnor ? json(*row.milnor) : json(nullptr);
    jr["mu_alt"] = integer(row.mu_alt);
    jr["partitions"] = json::array();
    for (const auto& p : row.partitions) {
      json jp;
      jp["partition"] = p.partition.to_string();
      jp["sigma_sharp"] = p.sigma_sharp;
      jp["d_k_sigma"] = p.d_k_sigma;
      jp["class_size"] = p.class_size;
      jp["status"] = to_string(p.status);
      if (p.milnor) jp["milnor"] = count(p.milnor);
      if (p.colength) jp["colength"] = count(p.colength);
      jr["partitions"].push_back(jp);
    }
    j["rows"].push_back(jr);
  }
  j["violations"] = json::array();
  for (const auto& v : r.violations) {
    json jv;
    jv["rule"] = v.rule;
    jv["k"] = v.k;
    jv["partition"] = v.partition ? json(v.partition->to_string()) : json(nullptr);
    jv["observed"] = v.observed;
    j["violations"].push_back(jv);
  }
  j["verdict"] = to_string(r.verdict);
  j["image_betti"] = json::object();
  for (const auto& [deg, rank] : r.image_betti) j["image_betti"][std::to_string(deg)] = integer(rank);
  j["mu_I"] = r.mu_I ? integer(*r.mu_I) : json(nullptr);
  j["zero_dim_stable_counts"] = json::array();
  for (const auto& z : r.zero_dim_counts)
    j["zero_dim_stable_counts"].push_back({{"k", z.k}, {"partition", z.partition.to_string()}, {"count", z.count}});
  j["complete"] = r.complete;
  return j;
}

json real_space(const RealSpace& s) {
  json j;
  j["description"] = s.describe();
  const char* kinds[] = {"EMPTY", "POINTS", "SPHERE", "AFFINE", "INCONCLUSIVE"};
  j["kind"] = kinds[static_cast<int>(s.kind)];
  if (s.kind == RealSpace::Kind::Sphere || s.kind == RealSpace::Kind::Affine) j["dim"] = s.dim;
  if (s.kind == RealSpace::Kind::Points) j["points"] = s.points;
  if (s.form.positive + s.form.negative + s.form.zero > 0)
    j["signature"] = {{"positive", s.form.positive}, {"negative", s.form.negative}, {"zero", s.form.zero}};
  if (s.known()) j["betti"] = s.betti();
  return j;
}

json groups(const std::vector<HomologyGroup>& gs) {
  json arr = json::array();
  for (const auto& g : gs) {
    json t = json::array();
    for (const auto& x : g.torsion) t.push_back(integer(x));
    arr.push_back({{"rank", g.rank}, {"torsion", t}});
  }
  return arr;
}

}  // namespace

std::string to_json(const GrpReport& report) { return grp(report).dump(2); }

std::string to_json(const WitnessReport& report) {
  json j;
  j["germ"] = report.germ;
  j["parameters"] = json::object();
  for (const auto& [name, value] : report.parameters) j["parameters"][name] = rational(value);
  j["rows"] = json::array();
  for (const auto& row : report.rows) {
    json jr;
    jr["k"] = row.k;
    jr["d_k"] = row.d_k;
    jr["complex_alt_betti"] = integer(row.complex_alt_betti);
    jr["real_alt_betti"] = row.real_alt_betti ? rational(*row.real_alt_betti) : json(nullptr);
    jr["alt_matches"] = row.alt_matches ? json(*row.alt_matches) : json(nullptr);
    jr["orbits_ok"] = row.orbits_ok ? json(*row.orbits_ok) : json(nullptr);
    jr["summary"] = row.summary();
    jr["classes"] = json::array();
    for (const auto& c : row.classes) {
      json jc;
      jc["partition"] = c.partition.to_string();
      jc["d_k_sigma"] = c.d_k_sigma;
      jc["class_size"] = c.class_size;
      jc["complex_smooth"] = c.complex_smooth;
      jc["complex_chi"] = c.complex_chi;
      jc["real"] = real_space(c.real);
      jc["real_chi"] = c.real_chi ? json(*c.real_chi) : json(nullptr);
      jc["summand"] = c.summand ? json(*c.summand) : json(nullptr);
      jc["chi_matches"] = c.chi_matches ? json(*c.chi_matches) : json(nullptr);
      jc["parity_ok"] = c.parity_ok ? json(*c.parity_ok) : json(nullptr);
      jr["classes"].push_back(jc);
    }
    j["rows"].push_back(jr);
  }
  j["failures"] = report.failures;
  j["verdict"] = to_string(report.verdict);
  j["analysis"] = grp(report.analysis);
  return j.dump(2);
}

std::string to_json(const std::vector<TableRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["name"] = r.entry.name;
    j["table"] = r.entry.table;
    j["formula"] = r.entry.formula();
    json params = json::object();
    for (const auto& [name, value] : r.entry.parameters) params[name] = rational(value);
    j["parameters"] = params;
    j["expected"] = {{"mu_D2", table_value(r.entry.mu_d2)},
                     {"mu_D3", table_value(r.entry.mu_d3)},
                     {"ae_codim", r.entry.ae_codim ? json(*r.entry.ae_codim) : json(nullptr)},
                     {"mu_I", r.entry.mu_image ? json(*r.entry.mu_image) : json(nullptr)},
                     {"merged_columns", r.entry.merged_columns}};
    j["computed"] = {{"mu_D2", table_value(r.mu_d2)},
                     {"mu_D3", table_value(r.mu_d3)},
                     {"mu_I", r.mu_image ? integer(*r.mu_image) : json(nullptr)}};
    j["verdict"] = r.report ? json(to_string(r.report->verdict)) : json(nullptr);
    j["mismatches"] = r.mismatches;
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string to_json(const std::vector<HomologyGroup>& gs, const Coefficients& coeff) {
  json j;
  j["coefficients"] = coeff.to_string();
  j["groups"] = groups(gs);
  return j.dump(2);
}

std::string to_json(const AltHomologyResult& r) {
  json j;
  j["integral"] = groups(r.integral);
  j["field"] = r.field.to_string();
  j["field_ranks"] = r.field_ranks;
  j["chain_ranks"] = r.chain_ranks;
  j["chi_top"] = r.chi_top;
  j["chi_alt"] = r.chi_alt;
  return j.dump(2);
}

std::string to_json(const FixedPointFormula& f) {
  json j;
  j["terms"] = json::array();
  for (const auto& t : f.terms)
    j["terms"].push_back({{"cycle_type", t.cycle_type}, {"elements", t.elements}, {"signed_chi", t.signed_chi}});
  j["group_order"] = f.group_order;
  j["value"] = integer(f.value);
  j["formula"] = f.to_string();
  return j.dump(2);
}

std::string to_json(const InequalityLedger& ledger) {
  json j;
  j["p"] = ledger.p;
  j["space"] = ledger.space;
  j["fixed"] = ledger.fixed;
  j["lines"] = json::array();
  for (const auto& l : ledger.lines)
    j["lines"].push_back({{"N", l.N}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"holds", l.holds()}});
  j["holds"] = ledger.holds();
  return j.dump(2);
}

std::string to_json(const SpecialRanks& r) {
  json j;
  j["p"] = r.p;
  j["i"] = r.i;
  j["orbit_hypothesis"] = r.orbit_hypothesis;
  j["degrees"] = json::array();
  for (const auto& d : r.degrees)
    j["degrees"].push_back({{"d", d.d},
                            {"alt", d.alt},
                            {"fixed", d.fixed},
                            {"rho", d.rho},
                            {"rho_bar", d.rho_bar},
                            {"direct", d.direct},
                            {"kernel", d.kernel},
                            {"additive", d.additive()},
                            {"exact", d.exact()},
                            {"a", d.a},
                            {"a_bar", d.a_bar},
                            {"ah", d.ah},
                            {"ah_fixed", d.ah_fixed},
                            {"bounds", d.bounds}});
  j["exact"] = r.exact();
  return j.dump(2);
}

}  // namespace germlab
