#include "germlab/complex_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "germlab/errors.hpp"
#include "json.hpp"

namespace germlab {

using nlohmann::json;

namespace {

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorCode::InvalidArgument, what + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

SimplicialGComplex complex_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::InvalidArgument, "complex must be a JSON object");
  SimplicialGComplex x;
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::InvalidArgument, "missing \"vertices\" array");
  for (const auto& v : doc["vertices"]) x.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  if (!doc.contains("facets")) throw Error(ErrorCode::InvalidArgument, "missing \"facets\" array");
  for (const auto& f : doc["facets"]) {
    Simplex s = int_list(f, "facet");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::InvalidArgument, "facet repeats a vertex");
    x.facets.push_back(std::move(s));
  }
  if (doc.contains("sigma_generators"))
    for (const auto& g : doc["sigma_generators"]) x.sigma_generators.push_back(int_list(g, "sigma generator"));
  const int n_gen = static_cast<int>(x.sigma_generators.size());
  x.k = doc.contains("k") ? doc["k"].get<int>() : n_gen + 1;
  if (doc.contains("sigma_elements")) {
    for (const auto& e : doc["sigma_elements"]) x.sigma_elements.push_back(int_list(e, "sigma element"));
    if (!doc.contains("k") && !x.sigma_elements.empty())
      x.k = static_cast<int>(x.sigma_elements.front().size());
  } else {
    if (x.k < n_gen + 1) throw Error(ErrorCode::InvalidArgument, "k is too small for the generators");
    for (int i = 0; i < n_gen; ++i) {
      Permutation t(static_cast<std::size_t>(x.k));
      for (int j = 0; j < x.k; ++j) t[static_cast<std::size_t>(j)] = j;
      std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
      x.sigma_elements.push_back(std::move(t));
    }
  }
  if (doc.contains("g_action")) {
    x.g_action = int_list(doc["g_action"], "g_action");
    if (!doc.contains("p") || !doc["p"].is_number_unsigned())
      throw Error(ErrorCode::InvalidArgument, "g_action requires a prime \"p\"");
    x.p = doc["p"].get<std::uint32_t>();
  }
  validate(x);
  return x;
}

SimplicialGComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return complex_from_json(buf.str());
}

std::string complex_to_json(const SimplicialGComplex& x) {
  json doc;
  doc["vertices"] = x.vertices;
  doc["facets"] = x.facets;
  doc["k"] = x.k;
  doc["sigma_generators"] = x.sigma_generators;
  doc["sigma_elements"] = x.sigma_elements;
  if (x.g_action) {
    doc["g_action"] = *x.g_action;
    doc["p"] = x.p;
  }
  return doc.dump();
}

}  // namespace germlab
