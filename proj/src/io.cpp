#include "gkm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gkm/errors.hpp"

namespace gkm::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

CovectorQ covector_from_json(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " coordinates, found " + std::to_string(j.size()));
  CovectorQ c;
  for (std::size_t i = 0; i < j.size(); ++i) c.coords.push_back(rational_from_json(j[i], path + "/" + std::to_string(i)));
  return c;
}

class PolyParser {
 public:
  PolyParser(std::string_view s, std::size_t n) : s_(s), n_(n) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial p(n_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial t = term();
    p += neg ? -t : t;
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }
  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p *= factor();
    return p;
  }
  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) base = base.pow(static_cast<unsigned>(std::stoul(digits())));
    return base;
  }
  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      const std::size_t i = std::stoul(digits());
      if (i < 1 || i > n_) error("variable x" + std::to_string(i) + " out of range 1.." + std::to_string(n_));
      return Polynomial::variable(n_, i - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (eat('/')) num += "/" + digits();
      return Polynomial::constant(n_, parse_rational(num));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) fail(path, "expected a rational as \"a/b\" string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"coef", to_string(c)}});
  return Json{{"n", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, std::size_t n, const std::string& path) {
  if (j.is_string()) {
    if (n == 0) fail(path, "text polynomial needs a known dimension");
    try {
      return parse_polynomial(j.get<std::string>(), n);
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  const std::size_t m = size_from_json(field(j, "n", path), path + "/n");
  if (m == 0) fail(path + "/n", "must be positive");
  if (n != 0 && m != n) fail(path + "/n", "expected " + std::to_string(n) + " variables");
  const Json& terms = field(j, "terms", path);
  if (!terms.is_array()) fail(path + "/terms", "expected an array");
  Polynomial p(m);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tp = path + "/terms/" + std::to_string(t);
    const Json& ex = field(terms[t], "exp", tp);
    if (!ex.is_array() || ex.size() != m) fail(tp + "/exp", "expected " + std::to_string(m) + " exponents");
    Exponents e;
    for (std::size_t i = 0; i < m; ++i) {
      if (!ex[i].is_number_integer() || ex[i].get<long long>() < 0)
        fail(tp + "/exp/" + std::to_string(i), "expected a nonnegative integer");
      e.push_back(ex[i].get<int>());
    }
    p.add_term(e, rational_from_json(field(terms[t], "coef", tp), tp + "/coef"));
  }
  return p;
}

Polynomial parse_polynomial(std::string_view text, std::size_t n) { return PolyParser(text, n).parse(); }

std::vector<Rational> parse_coords(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) throw ParseError("empty coordinate list");
  for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

std::vector<std::vector<Rational>> parse_coord_list(std::string_view text) {
  std::vector<std::vector<Rational>> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_coords(part));
  return out;
}

Json to_json(const CovectorQ& c) {
  Json a = Json::array();
  for (const auto& q : c.coords) a.push_back(to_string(q));
  return a;
}

Json to_json(const VectorQ& v) {
  Json a = Json::array();
  for (const auto& q : v.coords) a.push_back(to_string(q));
  return a;
}

GkmPair graph_from_json(const Json& j) {
  const std::size_t n = size_from_json(field(j, "n", ""), "/n");
  if (n == 0) fail("/n", "must be positive");
  const Json& vs = field(j, "vertices", "");
  if (!vs.is_array()) fail("/vertices", "expected an array of ids");
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_string()) fail("/vertices/" + std::to_string(i), "expected a string id");
    ids.push_back(vs[i].get<std::string>());
    if (!index.emplace(ids.back(), i).second) fail("/vertices/" + std::to_string(i), "duplicate id '" + ids.back() + "'");
  }
  const Json& es = field(j, "edges", "");
  if (!es.is_array()) fail("/edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < es.size(); ++e) {
    const std::string p = "/edges/" + std::to_string(e);
    const Json& ends = field(es[e], "ends", p);
    if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() || !ends[1].is_string())
      fail(p + "/ends", "expected two vertex ids");
    Edge ed;
    for (int k = 0; k < 2; ++k) {
      auto it = index.find(ends[k].get<std::string>());
      if (it == index.end()) fail(p + "/ends/" + std::to_string(k), "unknown vertex '" + ends[k].get<std::string>() + "'");
      (k == 0 ? ed.tail : ed.head) = it->second;
    }
    ed.forward = covector_from_json(field(es[e], "alpha", p), n, p + "/alpha");
    ed.backward = es[e].contains("alpha_reverse") ? covector_from_json(es[e]["alpha_reverse"], n, p + "/alpha_reverse")
                                                  : -ed.forward;
    edges.push_back(std::move(ed));
  }

  std::optional<Connection> theta;
  if (j.contains("connection") && !j["connection"].is_null()) {
    const Json& cj = j["connection"];
    if (!cj.is_object()) fail("/connection", "expected an object");
    theta.emplace();
    for (const auto& [key, mj] : cj.items()) {
      const std::string p = "/connection/" + key;
      const auto arrow = key.find("->");
      if (arrow == std::string::npos) fail(p, "key must look like \"p->q\"");
      auto a = index.find(key.substr(0, arrow));
      auto b = index.find(key.substr(arrow + 2));
      if (a == index.end() || b == index.end()) fail(p, "unknown vertex in key");
      std::optional<std::size_t> along;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if ((edges[e].tail == a->second && edges[e].head == b->second) ||
            (edges[e].tail == b->second && edges[e].head == a->second))
          along = e;
      if (!along) fail(p, "no edge between these vertices");
      if (!mj.is_object()) fail(p, "expected an object mapping edge indices");
      Connection::StarMap m;
      for (const auto& [from, to] : mj.items()) {
        std::size_t fi = 0;
        try {
          std::size_t used = 0;
          fi = std::stoul(from, &used);
          if (used != from.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          fail(p + "/" + from, "key must be an edge index");
        }
        m[fi] = size_from_json(to, p + "/" + from);
      }
      theta->set(a->second, *along, std::move(m));
    }
  }
  try {
    return GkmPair(n, std::move(ids), std::move(edges), std::move(theta));
  } catch (const PreconditionError& e) {
    fail("", e.what());
  }
}

Json to_json(const GkmPair& pair) {
  Json j;
  j["n"] = pair.dim();
  j["vertices"] = pair.vertex_ids();
  Json es = Json::array();
  for (const auto& ed : pair.edges()) {
    Json e{{"ends", {pair.vertex_id(ed.tail), pair.vertex_id(ed.head)}}, {"alpha", to_json(ed.forward)}};
    if (ed.backward != -ed.forward) e["alpha_reverse"] = to_json(ed.backward);
    es.push_back(std::move(e));
  }
  j["edges"] = std::move(es);
  if (pair.connection()) {
    Json c = Json::object();
    for (std::size_t p = 0; p < pair.num_vertices(); ++p)
      for (std::size_t e : pair.star(p)) {
        const auto* m = pair.connection()->find(p, e);
        if (!m) continue;
        Json mj = Json::object();
        for (const auto& [a, b] : *m) mj[std::to_string(a)] = b;
        c[pair.vertex_id(p) + "->" + pair.vertex_id(pair.other_end(e, p))] = std::move(mj);
      }
    j["connection"] = std::move(c);
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

GkmPair load_graph(const std::string& path) {
  try {
    return graph_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + what);
  }
}

CohClass class_from_json(const GkmPair& pair, const Json& j) {
  const Json& dj = field(j, "degree", "");
  if (!dj.is_number_integer() || dj.get<long long>() < 0) fail("/degree", "expected a nonnegative integer");
  CohClass f{dj.get<int>(), std::vector<Polynomial>(pair.num_vertices(), Polynomial(pair.dim()))};
  const Json& vals = field(j, "values", "");
  if (!vals.is_object()) fail("/values", "expected an object keyed by vertex id");
  std::vector<bool> seen(pair.num_vertices(), false);
  for (const auto& [id, pj] : vals.items()) {
    const auto v = pair.find_vertex(id);
    if (!v) fail("/values/" + id, "unknown vertex");
    f.values[*v] = polynomial_from_json(pj, pair.dim(), "/values/" + id);
    seen[*v] = true;
  }
  for (std::size_t v = 0; v < pair.num_vertices(); ++v)
    if (!seen[v]) fail("/values", "missing value for vertex '" + pair.vertex_id(v) + "'");
  for (std::size_t v = 0; v < pair.num_vertices(); ++v)
    if (!f.values[v].is_homogeneous_of(f.degree))
      fail("/values/" + pair.vertex_id(v), "not homogeneous of degree " + std::to_string(f.degree));
  return f;
}

Json to_json(const GkmPair& pair, const CohClass& f) {
  Json vals = Json::object();
  for (std::size_t v = 0; v < pair.num_vertices(); ++v) vals[pair.vertex_id(v)] = to_json(f.values[v]);
  return Json{{"degree", f.degree}, {"values", std::move(vals)}};
}

CohClass load_class(const GkmPair& pair, const std::string& path) {
  try {
    return class_from_json(pair, read_json_file(path));
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + what);
  }
}

Json to_json(const ValidationReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back(Json{{"axiom", v.axiom}, {"detail", v.detail}, {"vertices", v.vertices}, {"edges", v.edges}});
  return vs;
}

}  // namespace gkm::io
