#include "germlab/germ_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorCode::Syntax, "line " + std::to_string(line) + ": " + message);
}

struct Statement {
  std::string text;
  int line = 0;
};

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) fail(line, "expected an integer, got '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "expected an integer, got '" + s + "'");
  }
}

std::vector<std::string> expression_list(const std::string& s, int line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  for (const auto& e : out)
    if (e.empty()) fail(line, "empty expression in list");
  return out;
}

}  // namespace

GermFile parse_germ_file(std::string_view text) {
  std::string clean;
  std::vector<int> line_of;
  int line = 1;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      clean += ' ';
      line_of.push_back(line);
      ++line;
      continue;
    }
    if (c == '#') comment = true;
    clean += comment ? ' ' : c;
    line_of.push_back(line);
  }
  auto line_at = [&](std::size_t pos) { return pos < line_of.size() ? line_of[pos] : line; };

  std::size_t open = clean.find('{');
  if (open == std::string::npos) fail(line, "expected '{'");
  std::vector<std::string> head = words(clean.substr(0, open));
  if (head.size() != 2 || head[0] != "germ") fail(line_at(0), "expected 'germ <name> {'");
  GermFile g;
  g.name = head[1];
  std::size_t close = clean.find('}', open);
  if (close == std::string::npos) fail(line, "missing '}'");
  if (!trim(clean.substr(close + 1)).empty()) fail(line_at(close), "text after '}'");
  if (clean.find('{', open + 1) < close) fail(line_at(open), "nested '{'");

  std::vector<Statement> statements;
  std::size_t start = open + 1;
  for (std::size_t i = open + 1; i <= close; ++i) {
    if (clean[i] != ';' && i != close) continue;
    std::string body = trim(clean.substr(start, i - start));
    if (!body.empty()) {
      std::size_t first = start;
      while (std::isspace(static_cast<unsigned char>(clean[first]))) ++first;
      statements.push_back({body, line_at(first)});
    } else if (i != close) {
      fail(line_at(i), "empty statement");
    }
    start = i + 1;
  }
  {
    std::string inner = clean.substr(open + 1, close - open - 1);
    std::size_t last = inner.find_last_of(';');
    if (!trim(last == std::string::npos ? inner : inner.substr(last + 1)).empty())
      fail(statements.back().line, "missing ';'");
  }

  bool have_dims = false, have_vars = false, have_components = false;
  std::set<std::string> param_names;
  for (const auto& st : statements) {
    const std::string& s = st.text;
    std::size_t colon = s.find(':');
    std::string key = trim(s.substr(0, std::min(s.find_first_of(" \t=:"), s.size())));
    if (key == "components" || key == "perturbation") {
      if (colon == std::string::npos) fail(st.line, "expected ':' after " + key);
      auto list = expression_list(s.substr(colon + 1), st.line);
      if (key == "components") {
        if (have_components) fail(st.line, "duplicate components");
        g.components = list;
        have_components = true;
      } else {
        if (!g.perturbation.empty()) fail(st.line, "duplicate perturbation");
        g.perturbation = list;
      }
    } else if (key == "vars") {
      if (have_vars) fail(st.line, "duplicate vars");
      auto w = words(s.substr(4));
      for (const auto& v : w)
        if (!is_identifier(v)) fail(st.line, "bad variable name '" + v + "'");
      g.vars = w;
      have_vars = true;
    } else if (key == "params") {
      std::string rest = s.substr(6);
      for (auto& c : rest)
        if (c == ',') c = ' ';
      std::string joined;
      for (const auto& w : words(rest)) joined += w + (w.back() == '=' ? "" : " ");
      for (const auto& w : words(joined)) {
        std::size_t eq = w.find('=');
        if (eq == std::string::npos || eq + 1 == w.size()) fail(st.line, "expected name=value, got '" + w + "'");
        std::string name = w.substr(0, eq);
        if (!is_identifier(name)) fail(st.line, "bad parameter name '" + name + "'");
        if (!param_names.insert(name).second) fail(st.line, "duplicate parameter '" + name + "'");
        Rational value;
        try {
          value = parse_rational(w.substr(eq + 1));
        } catch (const Error& e) {
          fail(st.line, "bad value for " + name + ": " + e.what());
        }
        g.params.emplace_back(name, value);
      }
    } else if (key == "n" || key == "p") {
      std::string spaced;
      for (char c : s) spaced += (c == '=') ? std::string(" = ") : std::string(1, c);
      auto w = words(spaced);
      if (w.size() % 3 != 0) fail(st.line, "expected n=<int> p=<int>");
      for (std::size_t i = 0; i < w.size(); i += 3) {
        if (w[i + 1] != "=") fail(st.line, "expected '=' after " + w[i]);
        if (w[i] == "n")
          g.n = parse_int(w[i + 2], st.line);
        else if (w[i] == "p")
          g.p = parse_int(w[i + 2], st.line);
        else
          fail(st.line, "unknown dimension '" + w[i] + "'");
      }
      have_dims = true;
    } else {
      fail(st.line, "unknown statement '" + key + "'");
    }
  }
  if (!have_dims || g.n <= 0 || g.p <= g.n) fail(line, "need dimensions n=<int> p=<int> with 0 < n < p");
  if (!have_vars) fail(line, "missing vars");
  if (static_cast<int>(g.vars.size()) != g.n)
    fail(line, "vars lists " + std::to_string(g.vars.size()) + " names but n=" + std::to_string(g.n));
  if (!have_components) fail(line, "missing components");
  for (const auto& [name, value] : g.params)
    for (const auto& v : g.vars)
      if (v == name) fail(line, "'" + name + "' is both a variable and a parameter");

  const std::size_t nonlinear = static_cast<std::size_t>(g.p - g.n + 1);
  auto normalize = [&](std::vector<std::string>& list, const std::string& what) {
    if (list.size() == static_cast<std::size_t>(g.p)) {
      for (int i = 0; i + 1 < g.n; ++i)
        if (trim(list[static_cast<std::size_t>(i)]) != g.vars[static_cast<std::size_t>(i)])
          fail(line, what + " entry " + std::to_string(i + 1) + " must be " + g.vars[static_cast<std::size_t>(i)]);
      list.erase(list.begin(), list.begin() + (g.n - 1));
    }
    if (list.size() != nonlinear)
      fail(line, what + " needs " + std::to_string(nonlinear) + " or " + std::to_string(g.p) + " entries, got " +
                     std::to_string(list.size()));
  };
  normalize(g.components, "components");
  if (!g.perturbation.empty()) normalize(g.perturbation, "perturbation");
  g.symbolic_germ();
  if (g.has_perturbation()) g.perturbation_germ();
  return g;
}

GermFile load_germ_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

std::map<std::string, Rational> GermFile::parameter_values(
    const std::map<std::string, Rational>& overrides) const {
  std::map<std::string, Rational> values;
  for (const auto& [name, value] : params) values[name] = value;
  for (const auto& [name, value] : overrides) {
    if (!values.count(name)) throw Error(ErrorCode::UnknownIdentifier, "unknown parameter '" + name + "'");
    values[name] = value;
  }
  return values;
}

namespace {

std::vector<std::string> names_of(const std::vector<std::pair<std::string, Rational>>& params) {
  std::vector<std::string> out;
  for (const auto& [name, value] : params) out.push_back(name);
  return out;
}

}  // namespace

GermCorank1 GermFile::symbolic_germ() const {
  std::vector<std::string> x(vars.begin(), vars.end() - 1);
  return make_germ(name, n, p, x, vars.back(), components, names_of(params));
}

GermCorank1 GermFile::germ(const std::map<std::string, Rational>& overrides) const {
  GermCorank1 f = symbolic_germ();
  std::map<std::string, Rational> values = parameter_values(overrides);
  GermCorank1 out = f.substitute(values);
  out.validate();
  return out;
}

GermCorank1 GermFile::perturbation_germ() const {
  if (perturbation.empty()) throw Error(ErrorCode::InvalidArgument, name + " declares no perturbation");
  std::vector<std::string> x(vars.begin(), vars.end() - 1);
  return make_germ(name + "_perturbed", n, p, x, vars.back(), perturbation, names_of(params));
}

std::string GermFile::to_string() const {
  std::ostringstream os;
  os << "germ " << name << " {\n";
  os << "  n=" << n << " p=" << p << ";\n";
  os << "  vars";
  for (const auto& v : vars) os << " " << v;
  os << ";\n";
  if (!params.empty()) {
    os << "  params";
    for (const auto& [pname, value] : params) os << " " << pname << "=" << rational_to_string(value);
    os << ";\n";
  }
  GermCorank1 f = symbolic_germ();
  os << "  components: ";
  for (std::size_t i = 0; i < f.components.size(); ++i) os << (i ? ", " : "") << f.components[i].to_string();
  os << ";\n";
  if (has_perturbation()) {
    GermCorank1 q = perturbation_germ();
    os << "  perturbation: ";
    for (std::size_t i = 0; i < q.components.size(); ++i) os << (i ? ", " : "") << q.components[i].to_string();
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace germlab
