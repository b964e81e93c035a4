// Command-line front end: one verb per invocation, JSON in, JSON out.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpval.hpp"

using namespace gpval;

namespace {

struct Options {
  std::string verb;
  std::string matroid, poset, gp, building_set, graph, input, builtin, osp, output, lhs, rhs;
  std::string character = "bjr";
  std::vector<std::string> invariants;
  std::vector<std::string> assume;
  int samples = 200;
  bool strict = false;
};

const std::vector<std::string> kVerbs{"tutte",        "char-poly",     "beta",          "csm",
                                      "g-invariant",  "bjr",           "volume-poly",   "universal-tutte",
                                      "order-poly",   "poset-tutte",   "poincare",      "f-poly",
                                      "canonical-form", "indicator-equal", "check-subdivision", "antipode"};

/// Exit status 1: the computation ran but the checked property failed.
struct ComputedFailure {
  Json result;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// The single input object as {"kind": body}.
Json gather_input(const Options& o) {
  Json j = Json::object();
  auto put = [&](const char* kind, const std::string& text) {
    if (!text.empty()) j[kind] = parse_json(text);
  };
  put("matroid", o.matroid);
  put("poset", o.poset);
  put("gp", o.gp);
  put("building_set", o.building_set);
  put("graph", o.graph);
  if (!o.input.empty()) {
    Json f = parse_json(slurp(o.input));
    if (!f.is_object()) throw InputError("input file must hold a JSON object");
    for (const auto& [k, v] : f.items()) j[k] = v;
  }
  for (const auto& [k, v] : j.items())
    if (v.is_object() && v.size() == 1 && v.contains(k)) j[k] = Json(v.at(k));
  return j;
}

const Json& need(const Json& in, const char* kind, const std::string& verb) {
  if (!in.contains(kind)) throw InputError(verb + " needs a --" + std::string(kind == std::string("building_set") ? "building-set" : kind) + " input");
  return in.at(kind);
}

Matroid need_matroid(const Json& in, const std::string& verb) { return matroid_from_json(need(in, "matroid", verb)); }

BuildingSet need_building_set(const Json& in, const std::string& verb) {
  if (in.contains("building_set")) return building_set_from_json(in.at("building_set"));
  if (in.contains("graph")) return graph_from_json(in.at("graph"));
  throw InputError(verb + " needs a --building-set or --graph input");
}

SubmodularGP need_polytope(const Json& in, const std::string& verb) {
  if (in.contains("gp")) return gp_from_json(in.at("gp"));
  if (in.contains("matroid")) return to_gp(matroid_from_json(in.at("matroid")));
  if (in.contains("building_set") || in.contains("graph")) return nestohedron(need_building_set(in, verb));
  throw InputError(verb + " needs a --gp, --matroid, --building-set or --graph input");
}

BetaConvention beta_convention(const Options& o, Json& assumptions) {
  BetaConvention c = BetaConvention::crapo;
  for (const auto& a : o.assume) {
    auto eq = a.find('=');
    std::string key = a.substr(0, eq), val = eq == std::string::npos ? "" : a.substr(eq + 1);
    if (key != "beta") throw InputError("unknown assumption '" + key + "'");
    if (val == "crapo")
      c = BetaConvention::crapo;
    else if (val == "paper")
      c = BetaConvention::paper;
    else
      throw InputError("beta convention must be crapo or paper, got '" + val + "'");
  }
  assumptions["beta"] = to_string(c);
  return c;
}

/// A signed sum of polytopes: one object or a list of {"coeff": c, <kind>: body}.
FormalSum<GPElement> polytope_sum(const Json& j) {
  FormalSum<GPElement> s;
  auto one = [&](const Json& t) {
    Rational c = t.contains("coeff") ? rational_from_json(t.at("coeff")) : Rational(1);
    s.add(GPElement(cell_from_json(t).gp), c);
  };
  if (j.is_array())
    for (const auto& t : j) one(t);
  else
    one(j);
  return s;
}

Json relation_report(const IndicatorRelation& r, const std::optional<SubdivisionComplex>& k, const Options& o,
                     bool& ok) {
  Json out;
  out["name"] = r.name;
  if (k) {
    auto problems = k->validate();
    Json p = Json::array();
    for (const auto& s : problems) p.push_back(s);
    out["valid"] = problems.empty();
    out["problems"] = p;
    ok = ok && problems.empty();
  }
  const bool strong = strong_check(r);
  out["strong"] = strong;
  ok = ok && strong;
  auto pts = sample_points(r, o.samples);
  auto bad = pointwise_violations(r, pts);
  out["pointwise"] = {{"samples", static_cast<long long>(pts.size())}, {"violations", static_cast<long long>(bad.size())}};
  ok = ok && bad.empty();
  Json reports = Json::array();
  std::vector<const Invariant*> chosen;
  if (o.invariants.empty())
    for (const auto& f : invariant_catalog()) chosen.push_back(&f);
  else
    for (const auto& name : o.invariants) chosen.push_back(&find_invariant(name));
  for (const auto* f : chosen) {
    auto rep = weak_check(*f, r);
    if (rep.applicable) ok = ok && rep.pass;
    reports.push_back(to_json(rep));
  }
  out["invariants"] = reports;
  out["pass"] = ok;
  return out;
}

Json run_verb(const Options& o, Json& assumptions) {
  const std::string& v = o.verb;
  const Json in = gather_input(o);

  if (v == "tutte") return poly_json(tutte(need_matroid(in, v)));
  if (v == "char-poly") return poly_json(char_poly(need_matroid(in, v)));
  if (v == "beta") {
    BetaConvention c = beta_convention(o, assumptions);
    return to_json(beta(need_matroid(in, v), c));
  }
  if (v == "csm") {
    Matroid m = need_matroid(in, v);
    assumptions["beta"] = "crapo";
    if (!o.osp.empty()) return to_json(csm_weight(m, OrderedSetPartition::parse(o.osp)));
    Json all = Json::object();
    for (const auto& blocks : ordered_partitions(m.full())) {
      auto f = OrderedSetPartition::from_masks(m.ground(), blocks);
      all[f.str()] = to_json(csm_weight(m, f));
    }
    return all;
  }
  if (v == "g-invariant") {
    Json out = Json::object();
    for (const auto& [s, k] : g_invariant(need_matroid(in, v))) out[s] = k;
    return out;
  }
  if (v == "bjr") {
    Character zeta = find_character(o.character);
    assumptions["character"] = o.character;
    HopfObject x = in.contains("poset") ? HopfObject(preposet_from_json(in.at("poset")))
                   : in.contains("matroid") ? HopfObject(matroid_from_json(in.at("matroid")))
                                            : throw InputError("bjr needs a --matroid or --poset input");
    return {{"poly", poly_json(polynomial_invariant(zeta, x))},
            {"qsym", qsym_json(qsym_invariant(zeta, x))},
            {"osp", formal_sum_json(osp_invariant(zeta, x))}};
  }
  if (v == "volume-poly") return poly_json(volume_polynomial(need_matroid(in, v)));
  if (v == "universal-tutte") {
    SubmodularGP p = need_polytope(in, v);
    Json out{{"universal", poly_json(universal_tutte(p))}};
    if (in.contains("matroid")) out["specialized"] = poly_json(matroid_tutte_specialization(universal_tutte(p)));
    return out;
  }
  if (v == "order-poly") {
    assumptions["order_poly"] = o.strict ? "strict" : "weak";
    return poly_json(order_polynomial(preposet_from_json(need(in, "poset", v)), o.strict));
  }
  if (v == "poset-tutte") return poly_json(poset_tutte(poset_from_json(need(in, "poset", v))));
  if (v == "poincare") return poly_json(poincare(poset_from_json(need(in, "poset", v))));
  if (v == "f-poly") return poly_json(f_polynomial(need_building_set(in, v)));
  if (v == "canonical-form") {
    if (in.contains("poset") && !in.contains("gp") && !in.contains("matroid")) {
      Preposet q = preposet_from_json(in.at("poset"));
      return formal_sum_json(canonical_form(WeightedPreposet::from_point(q, Point(static_cast<std::size_t>(q.n()), Rational(0)))));
    }
    return formal_sum_json(canonical_form(need_polytope(in, v)));
  }
  if (v == "indicator-equal") {
    FormalSum<GPElement> a, b;
    if (!o.builtin.empty()) {
      auto k = find_builtin_subdivision(o.builtin);
      if (!k) throw InputError("unknown builtin subdivision '" + o.builtin + "'");
      a.add(GPElement(k->parent.gp), Rational(1));
      for (const auto& c : k->cells)
        b.add(GPElement(c.gp), Rational(minus_one_pow(k->parent.dimension - c.dimension)));
    } else {
      if (o.lhs.empty() || o.rhs.empty()) throw InputError("indicator-equal needs --lhs and --rhs, or --builtin");
      a = polytope_sum(parse_json(o.lhs));
      b = polytope_sum(parse_json(o.rhs));
    }
    bool eq = indicator_equal(a, b);
    if (!eq) throw ComputedFailure{Json(false)};
    return true;
  }
  if (v == "check-subdivision") {
    bool ok = true;
    Json out;
    if (!o.builtin.empty()) {
      if (auto k = find_builtin_subdivision(o.builtin)) {
        out = relation_report(k->to_relation(), k, o, ok);
      } else {
        std::optional<IndicatorRelation> found;
        for (auto& r : builtin_relations())
          if (r.name == o.builtin) found = std::move(r);
        if (!found) throw InputError("unknown builtin relation '" + o.builtin + "'");
        out = relation_report(*found, std::nullopt, o, ok);
      }
    } else {
      if (!in.contains("subdivision")) throw InputError("check-subdivision needs --builtin or an --input subdivision");
      SubdivisionComplex k = subdivision_from_json(in.at("subdivision"));
      out = relation_report(k.to_relation(), k, o, ok);
    }
    assumptions["samples"] = o.samples;
    if (!ok) throw ComputedFailure{out};
    return out;
  }
  if (v == "antipode") {
    Json terms = Json::array();
    for (const auto& [q, c] : antipode_face_sum(need_polytope(in, v)))
      terms.push_back({{"coeff", to_json(c)}, {"gp", to_json(q)}});
    return terms;
  }
  throw InputError("unknown verb '" + v + "'");
}

void emit(const Options& o, const Json& envelope) {
  const std::string text = envelope.dump() + "\n";
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write output file '" + o.output + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valuations of generalized permutahedra and their Hopf submonoids"};
  Options o;
  app.add_option("verb", o.verb, "operation to run")->required()->check(CLI::IsMember(kVerbs));
  app.add_option("--matroid", o.matroid, "matroid JSON {\"ground\", \"bases\"}");
  app.add_option("--poset", o.poset, "poset JSON {\"ground\", \"relations\"}");
  app.add_option("--gp", o.gp, "generalized permutahedron JSON {\"ground\", \"z\"}");
  app.add_option("--building-set", o.building_set, "building set JSON {\"ground\", \"members\"}");
  app.add_option("--graph", o.graph, "graph JSON {\"vertices\", \"edges\"}");
  app.add_option("--input", o.input, "file holding a JSON object keyed by input kind");
  app.add_option("--builtin", o.builtin, "name of a stored subdivision or relation");
  app.add_option("--invariant", o.invariants, "invariant to check (repeatable; default all)");
  app.add_option("--assume", o.assume, "convention flag, e.g. beta=paper");
  app.add_option("--samples", o.samples, "sample points for pointwise checks")->check(CLI::NonNegativeNumber);
  app.add_flag("--strict", o.strict, "strict order polynomial");
  app.add_option("--osp", o.osp, "ordered set partition, e.g. 1|23");
  app.add_option("--character", o.character, "character for the bjr verb")->check(CLI::IsMember(character_names()));
  app.add_option("--lhs", o.lhs, "left side of indicator-equal");
  app.add_option("--rhs", o.rhs, "right side of indicator-equal");
  app.add_option("--output", o.output, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Json assumptions = Json::object();
  try {
    Json result = run_verb(o, assumptions);
    emit(o, {{"verb", o.verb}, {"result", result}, {"assumptions", assumptions}});
    return 0;
  } catch (const ComputedFailure& f) {
    emit(o, {{"verb", o.verb}, {"result", f.result}, {"assumptions", assumptions}});
    return 1;
  } catch (const AxiomError& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "axiom"}}.dump() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "input"}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return 3;
  }
}
