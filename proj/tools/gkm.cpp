// Command-line front end. Every subcommand writes one JSON document to
// stdout (or --out); diagnostics go to stderr.
//
// Exit status: 0 success, 1 a mathematical check failed, 2 usage or input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "gkm/chambers.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/constructions.hpp"
#include "gkm/errors.hpp"
#include "gkm/io.hpp"
#include "gkm/localization.hpp"
#include "gkm/morse.hpp"
#include "gkm/residue.hpp"
#include "gkm/validation.hpp"

using namespace gkm;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct ClassChoice {
  std::string class_file;
  std::string thom;
  int chern = 0;
  std::string constant = "1";
};

void add_class_options(CLI::App* cmd, ClassChoice& c) {
  auto* file = cmd->add_option("--class", c.class_file, "class file {\"degree\", \"values\"}");
  auto* thom = cmd->add_option("--thom", c.thom, "Thom class of this vertex");
  auto* chern = cmd->add_option("--chern", c.chern, "k-th Chern class");
  auto* cst = cmd->add_option("--constant", c.constant, "constant class (default 1)");
  file->excludes(thom)->excludes(chern)->excludes(cst);
  thom->excludes(chern)->excludes(cst);
  chern->excludes(cst);
}

CohClass choose_class(const GkmPair& g, const ClassChoice& c) {
  if (!c.class_file.empty()) return io::load_class(g, c.class_file);
  if (!c.thom.empty()) return thom_class_vertex(g, g.vertex(c.thom));
  if (c.chern != 0) return chern_class(g, c.chern);
  return constant_class(g, parse_rational(c.constant));
}

VectorQ parse_xi(const std::string& text, std::size_t n) {
  VectorQ xi(io::parse_coords(text));
  if (xi.dim() != n) throw ParseError("--xi: expected " + std::to_string(n) + " coordinates");
  return xi;
}

Json sizes(const std::vector<std::size_t>& v) { return Json(v); }

Json phi_json(const GkmPair& g, const std::vector<Rational>& phi) {
  Json j = Json::object();
  for (std::size_t v = 0; v < phi.size(); ++v) j[g.vertex_id(v)] = to_string(phi[v]);
  return j;
}

Json residues_json(const GkmPair& g, const std::map<std::size_t, Polynomial>& m) {
  Json j = Json::object();
  for (const auto& [v, p] : m) j[g.vertex_id(v)] = io::to_json(p);
  return j;
}

Json jk_json(const GkmPair& g, const Rational& c, const JkResult& r) {
  return Json{{"level", to_string(c)},
              {"value", io::to_json(r.value)},
              {"residue_sum", io::to_json(r.residue_side)},
              {"agree", r.agree},
              {"per_vertex_residues", residues_json(g, r.per_vertex)}};
}

// ---- subcommands ----

int cmd_validate(const std::string& file, Json& out) {
  const GkmPair g = io::load_graph(file);
  ValidationReport r = validate_axial(g);
  std::string source = "given";
  if (g.connection()) {
    r.append(validate_connection(g, *g.connection()));
  } else if (r.ok()) {
    try {
      r.append(validate_connection(g, infer_connection(g)));
      source = "inferred";
    } catch (const AmbiguousConnection&) {
      source = "ambiguous";
    } catch (const NoConnection&) {
      source = "none";
    }
  } else {
    source = "not attempted";
  }
  out["valid"] = r.ok();
  out["connection"] = source;
  out["violations"] = io::to_json(r);
  return r.ok() ? kOk : kViolation;
}

int cmd_cohdim(const std::string& file, int max_k, bool with_basis, Json& out) {
  const GkmPair g = io::load_graph(file);
  Json dims = Json::object(), bases = Json::object();
  for (int k = 0; k <= max_k; ++k) {
    if (with_basis) {
      const CohBasis b = coh_basis(g, k);
      dims[std::to_string(k)] = b.dimension;
      Json list = Json::array();
      for (const auto& f : b.basis) list.push_back(io::to_json(g, f));
      bases[std::to_string(k)] = std::move(list);
    } else {
      dims[std::to_string(k)] = coh_dimension(g, k);
    }
  }
  out["dimensions"] = std::move(dims);
  if (with_basis) out["basis"] = std::move(bases);
  return kOk;
}

int cmd_integrate(const std::string& file, const ClassChoice& cc, const std::string& xi_text, Json& out) {
  const GkmPair g = io::load_graph(file);
  const CohClass f = choose_class(g, cc);
  if (!is_class(g, f).ok) {
    std::cerr << "input is not a class of the pair\n";
    out["error"] = "not a class";
    return kViolation;
  }
  const Polynomial pi = integrate(g, f);
  const int d = static_cast<int>(g.valence().value_or(0));
  const VectorQ xi = xi_text.empty() ? generic_vector(g) : parse_xi(xi_text, g.dim());
  orient(g, xi);
  std::map<std::size_t, Polynomial> res;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<LinearForm> forms;
    for (const auto& c : g.star_forms(v)) forms.emplace_back(c);
    res.emplace(v, residue(f.values[v], forms, xi));
  }
  const auto agreement = polynomiality_by_residues(g, f);
  out["pushforward"] = io::to_json(pi);
  out["degree"] = f.degree - d;
  out["method_agreement"] = agreement ? Json(agreement->agree) : Json(nullptr);
  out["per_vertex_residues"] = residues_json(g, res);
  out["xi"] = io::to_json(xi);
  return agreement && !agreement->agree ? kViolation : kOk;
}

int cmd_residue(std::size_t n, const std::string& f_text, const std::string& alphas_text, const std::string& xi_text,
                const std::string& method, Json& out) {
  if (n == 0) throw ParseError("--n must be positive");
  const Polynomial f = io::parse_polynomial(f_text, n);
  std::vector<LinearForm> alphas;
  if (!alphas_text.empty())
    for (auto& c : io::parse_coord_list(alphas_text)) {
      if (c.size() != n) throw ParseError("--alphas: every form needs " + std::to_string(n) + " coordinates");
      alphas.emplace_back(CovectorQ(std::move(c)));
    }
  const VectorQ xi = parse_xi(xi_text, n);
  out["n"] = n;
  if (method == "series" || method == "formula") {
    const auto m = method == "series" ? ResidueMethod::series : ResidueMethod::formula;
    out["residue"] = io::to_json(residue(f, alphas, xi, m));
    out["method"] = method;
    return kOk;
  }
  const Polynomial a = residue(f, alphas, xi, ResidueMethod::series);
  const Polynomial b = residue(f, alphas, xi, ResidueMethod::formula);
  out["residue"] = io::to_json(a);
  out["method"] = "both";
  out["agree"] = a == b;
  return a == b ? kOk : kViolation;
}

int cmd_jk(const std::string& file, const std::string& xi_text, const std::string& level, bool sweep,
           const ClassChoice& cc, Json& out) {
  if (level.empty() && !sweep) throw ParseError("jk: give --level or --sweep");
  const GkmPair g = io::load_graph(file);
  const VectorQ xi = parse_xi(xi_text, g.dim());
  const CohClass f = choose_class(g, cc);
  if (!is_class(g, f).ok) throw PreconditionError("input is not a class of the pair");
  const auto phi = positively_oriented_function(g, xi);
  out["xi"] = io::to_json(xi);
  out["phi"] = phi_json(g, phi);
  if (!sweep) {
    const Rational c = parse_rational(level);
    const JkResult r = jk_pushforward(g, {xi, phi, c}, f);
    Json edges = Json::array();
    for (std::size_t e : cross_section(g, {xi, phi, c})) edges.push_back(e);
    out["cross_section"] = std::move(edges);
    out["cut"] = jk_json(g, c, r);
    return r.agree ? kOk : kViolation;
  }
  const LevelSweep s = level_sweep(g, xi, phi, f);
  Json cuts = Json::array(), steps = Json::array();
  for (std::size_t i = 0; i < s.cuts.size(); ++i) cuts.push_back(jk_json(g, s.levels[i], s.cuts[i]));
  for (const auto& st : s.steps)
    steps.push_back(Json{{"vertex", g.vertex_id(st.vertex)},
                         {"difference", io::to_json(st.difference)},
                         {"residue", io::to_json(st.residue)},
                         {"agree", st.agree}});
  out["cuts"] = std::move(cuts);
  out["steps"] = std::move(steps);
  out["telescoping_total"] = io::to_json(s.total);
  out["ok"] = s.ok;
  return s.ok ? kOk : kViolation;
}

int cmd_betti(const std::string& file, const std::string& xi_text, int samples, std::uint64_t seed, Json& out) {
  const GkmPair g = io::load_graph(file);
  if (!xi_text.empty()) out["betti_at_xi"] = sizes(betti(g, parse_xi(xi_text, g.dim())));
  const BettiInvariance r = betti_invariance_check(g, samples, seed);
  out["betti"] = sizes(r.betti);
  out["chambers_found"] = r.chambers.size();
  out["exhaustive"] = arrangement_classes(g).size() <= 12;
  out["invariant"] = r.invariant;
  out["symmetric"] = r.symmetric;
  Json wall{{"performed", r.wall.performed}, {"ok", r.wall.ok}};
  if (r.wall.performed) {
    wall["xi_minus"] = io::to_json(r.wall.xi_minus);
    wall["xi_plus"] = io::to_json(r.wall.xi_plus);
  }
  out["wall_crossing"] = std::move(wall);
  return r.invariant && (!r.wall.performed || r.wall.ok) ? kOk : kViolation;
}

int cmd_morse(const std::string& file, const std::string& xi_text, int max_k, int l, Json& out) {
  const GkmPair g = io::load_graph(file);
  const VectorQ xi = parse_xi(xi_text, g.dim());
  const CycleCheck cyc = is_acyclic(g, orient(g, xi));
  if (!cyc.acyclic) {
    Json c = Json::array();
    for (std::size_t v : cyc.cycle) c.push_back(g.vertex_id(v));
    out["acyclic"] = false;
    out["cycle"] = std::move(c);
    return kViolation;
  }
  const MorseReport r = morse_inequalities(g, xi, max_k);
  out["acyclic"] = true;
  out["betti"] = sizes(r.betti);
  out["phi"] = phi_json(g, r.phi);
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"k", row.k}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"ok", row.ok}, {"equal", row.lhs == row.rhs}});
  out["morse"] = std::move(rows);
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back(Json{{"k", s.k},
                         {"vertex", g.vertex_id(s.vertex)},
                         {"sigma", s.sigma},
                         {"difference", s.difference},
                         {"upper", s.upper},
                         {"lower", s.lower},
                         {"ok", s.ok}});
  out["steps"] = std::move(steps);
  bool ok = r.ok;
  if (l > 0) {
    const LIndependenceReport li = l_independence_dimension_check(g, xi, l, max_k);
    Json lj{{"l", l},
            {"stars_l_independent", li.stars_l_independent},
            {"components_beta0_one", li.components_beta0_one},
            {"subspaces_checked", li.subspaces.size()}};
    Json lr = Json::array();
    for (const auto& row : li.rows)
      lr.push_back(Json{{"k", row.k}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"asserted", row.asserted}, {"ok", row.ok}});
    lj["rows"] = std::move(lr);
    lj["ok"] = li.ok;
    out["l_independence"] = std::move(lj);
    ok = ok && li.ok;
  }
  out["ok"] = ok;
  return ok ? kOk : kViolation;
}

int cmd_blowup(const std::string& file, const std::string& vertex, bool check, int max_k, Json& out) {
  const GkmPair g = io::load_graph(file);
  const std::size_t p0 = g.vertex(vertex);
  if (!check) {
    const BlowUp b = blow_up(g, p0);
    out["graph"] = io::to_json(b.pair);
    Json bd = Json::object();
    for (std::size_t v = 0; v < b.blow_down.size(); ++v) bd[b.pair.vertex_id(v)] = g.vertex_id(b.blow_down[v]);
    out["blow_down"] = std::move(bd);
    Json locus = Json::array();
    for (std::size_t v : b.singular_locus.vertices) locus.push_back(b.pair.vertex_id(v));
    out["singular_locus"] = std::move(locus);
    ValidationReport r = validate_axial(b.pair);
    r.append(validate_connection(b.pair, *b.pair.connection()));
    out["violations"] = io::to_json(r);
    return r.ok() ? kOk : kViolation;
  }
  const BlowupCheck c = blowup_class_check(g, p0, max_k);
  out["graph"] = io::to_json(c.blowup.pair);
  out["tau"] = io::to_json(c.blowup.pair, c.tau);
  out["tau_is_class"] = c.tau_is_class;
  out["relation_holds"] = c.relation_holds;
  out["pullbacks_are_classes"] = c.pullbacks_are_classes;
  out["pullback_injective"] = c.pullback_injective;
  out["base_dimensions"] = sizes(c.base_dims);
  out["blowup_dimensions"] = sizes(c.blowup_dims);
  out["expected_dimensions"] = sizes(c.expected_dims);
  const bool ok = c.tau_is_class && c.relation_holds && c.pullbacks_are_classes && c.pullback_injective;
  return ok ? kOk : kViolation;
}

int cmd_product(const std::string& a, const std::string& b, Json& out) {
  const ProductResult r = product(io::load_graph(a), io::load_graph(b));
  out["graph"] = io::to_json(r.pair);
  out["violations"] = io::to_json(r.report);
  return r.report.ok() ? kOk : kViolation;
}

std::vector<CovectorQ> covectors(const std::string& text) {
  std::vector<CovectorQ> out;
  for (auto& c : io::parse_coord_list(text)) out.emplace_back(std::move(c));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GKM graph toolkit: axial functions, cohomology, localization, Betti numbers"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "write the JSON result here instead of stdout");

  std::string file, file2, xi, level, vertex, method = "both", f_text, alphas, a1, a2;
  int max_k = 3, samples = 500, l = 0;
  std::size_t n = 0, N = 4;
  std::uint64_t seed = 1;
  bool basis = false, sweep = false, check = false;
  ClassChoice cc;

  auto* validate = app.add_subcommand("validate", "check the axial and connection axioms");
  validate->add_option("graph", file, "GKM pair JSON file")->required();

  auto* cohdim = app.add_subcommand("cohdim", "dimensions of H^{2k}");
  cohdim->add_option("graph", file, "GKM pair JSON file")->required();
  cohdim->add_option("--max-degree", max_k, "largest k reported")->check(CLI::NonNegativeNumber);
  cohdim->add_flag("--basis", basis, "also emit a basis of each degree");

  auto* integ = app.add_subcommand("integrate", "pushforward of a class to a polynomial");
  integ->add_option("graph", file, "GKM pair JSON file")->required();
  integ->add_option("--xi", xi, "polarizing vector for the per-vertex residues");
  add_class_options(integ, cc);

  auto* res = app.add_subcommand("residue", "Res_xi f / (alpha_1 ... alpha_d)");
  res->add_option("--n", n, "ambient dimension")->required();
  res->add_option("--f", f_text, "numerator, e.g. \"x1^2 - 3/2*x1*x2\"")->required();
  res->add_option("--alphas", alphas, "denominator forms, e.g. \"1,-1;1,1\"");
  res->add_option("--xi", xi, "polarizing vector, e.g. \"1,0\"")->required();
  res->add_option("--method", method, "residue method (default both)")->check(CLI::IsMember({"series", "formula", "both"}));

  auto* jk = app.add_subcommand("jk", "cross-section pushforward versus residues below a level");
  jk->add_option("graph", file, "GKM pair JSON file")->required();
  jk->add_option("--xi", xi, "polarizing vector")->required();
  auto* lv = jk->add_option("--level", level, "single cut level, e.g. -1/2");
  auto* sw = jk->add_flag("--sweep", sweep, "every level between consecutive vertices");
  lv->excludes(sw);
  add_class_options(jk, cc);

  auto* bet = app.add_subcommand("betti", "Betti numbers and their chamber invariance");
  bet->add_option("graph", file, "GKM pair JSON file")->required();
  bet->add_option("--xi", xi, "also report the Betti numbers at this vector");
  bet->add_option("--samples", samples, "random vectors when chambers are not enumerated")->check(CLI::NonNegativeNumber);
  bet->add_option("--seed", seed, "sampling seed");

  auto* mor = app.add_subcommand("morse", "Morse inequalities and the filtration steps");
  mor->add_option("graph", file, "GKM pair JSON file")->required();
  mor->add_option("--xi", xi, "polarizing vector")->required();
  mor->add_option("--max-degree", max_k, "largest k checked")->check(CLI::NonNegativeNumber);
  mor->add_option("--l", l, "also check the l-independence dimension statements");

  auto* blo = app.add_subcommand("blowup", "blow up a vertex");
  blo->add_option("graph", file, "GKM pair JSON file")->required();
  blo->add_option("--vertex", vertex, "vertex to blow up")->required();
  blo->add_flag("--check", check, "verify the cohomology of the blow-up");
  blo->add_option("--max-degree", max_k, "largest k compared by --check")->check(CLI::NonNegativeNumber);

  auto* prod = app.add_subcommand("product", "product of two pairs");
  prod->add_option("first", file, "GKM pair JSON file")->required();
  prod->add_option("second", file2, "GKM pair JSON file")->required();

  auto* comp = app.add_subcommand("complete", "complete graph on the given points");
  comp->add_option("--alphas", alphas, "e.g. \"0,0;1,0;0,1\"")->required();

  auto* cyc = app.add_subcommand("cycle", "2-valent cycle with alternating axial values");
  cyc->add_option("--N", N, "number of vertices, a multiple of 4")->required();
  cyc->add_option("--a1", a1, "first axial value")->required();
  cyc->add_option("--a2", a2, "second axial value")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  Json out = Json::object();
  int status = kOk;
  try {
    if (*validate) status = cmd_validate(file, out);
    else if (*cohdim) status = cmd_cohdim(file, max_k, basis, out);
    else if (*integ) status = cmd_integrate(file, cc, xi, out);
    else if (*res) status = cmd_residue(n, f_text, alphas, xi, method, out);
    else if (*jk) status = cmd_jk(file, xi, level, sweep, cc, out);
    else if (*bet) status = cmd_betti(file, xi, samples, seed, out);
    else if (*mor) status = cmd_morse(file, xi, max_k, l, out);
    else if (*blo) status = cmd_blowup(file, vertex, check, max_k, out);
    else if (*prod) status = cmd_product(file, file2, out);
    else if (*comp) out = io::to_json(complete_graph(covectors(alphas)));
    else if (*cyc) {
      const auto v = covectors(a1 + ";" + a2);
      out = io::to_json(cycle_2valent(N, v[0], v[1]));
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AmbiguousConnection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GkmError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string text = out.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsage;
    }
    f << text;
  }
  return status;
}
