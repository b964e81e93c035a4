#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpval/building_set.hpp"
#include "gpval/error.hpp"
#include "gpval/label.hpp"
#include "gpval/matroid.hpp"
#include "gpval/osp.hpp"
#include "gpval/polynomial.hpp"
#include "gpval/preposet.hpp"
#include "gpval/submodular_gp.hpp"
#include "gpval/valuation_lab.hpp"

namespace gpval {

using Json = nlohmann::json;

namespace detail {

template <class F>
auto json_guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

/// {"key": body} -> body; anything else is returned as is.
inline const Json& unwrap(const Json& j, const char* key) {
  if (j.is_object() && j.size() == 1 && j.contains(key)) return j.at(key);
  return j;
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline Label label_from_json(const Json& j) {
  if (j.is_number_integer()) return Label(j.get<long long>());
  if (j.is_string()) return Label(j.get<std::string>());
  throw InputError("labels must be integers or strings, got " + j.dump());
}

inline Json to_json(const Label& l) {
  if (l.numeric() && l.str().size() < 18) return std::stoll(l.str());
  return l.str();
}

inline LabelSet labels_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a list of labels, got " + j.dump());
  std::vector<Label> v;
  for (const auto& x : j) v.push_back(label_from_json(x));
  return LabelSet::strict(std::move(v));
}

inline Json to_json(const LabelSet& s) {
  Json a = Json::array();
  for (const auto& l : s) a.push_back(to_json(l));
  return a;
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

/// Integers as JSON numbers, everything else as "p/q".
inline Json to_json(const Rational& r) {
  if (auto v = r.to_int64(); v && r.is_integer()) return *v;
  return r.str();
}

inline Json to_json(const std::map<std::string, Rational>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[k] = to_json(v);
  return o;
}

template <class E>
Json poly_json(const Polynomial<E>& p) {
  return to_json(coefficient_map(p));
}
inline Json poly_json(const UniPoly& p, const std::string& var = "t") { return to_json(coefficient_map(p, var)); }

inline Json qsym_json(const QSymMonomial& f) {
  Json o = Json::object();
  for (const auto& [alpha, c] : f) o[composition_key(alpha)] = to_json(c);
  return o;
}

template <class T>
Json formal_sum_json(const FormalSum<T>& s) {
  Json o = Json::object();
  for (const auto& [x, c] : s) o[x.str()] = to_json(c);
  return o;
}

inline Matroid matroid_from_json(const Json& in) {
  return detail::json_guard("matroid", [&] {
    const Json& j = detail::unwrap(in, "matroid");
    LabelSet g = labels_from_json(j.at("ground"));
    std::vector<LabelSet> bases;
    for (const auto& b : j.at("bases")) bases.push_back(labels_from_json(b));
    return Matroid(std::move(g), bases);
  });
}

inline Json to_json(const Matroid& m) {
  Json bases = Json::array();
  for (Mask b : m.bases()) bases.push_back(to_json(m.ground().subset(b)));
  return {{"ground", to_json(m.ground())}, {"bases", bases}};
}

inline Preposet preposet_from_json(const Json& in) {
  return detail::json_guard("poset", [&] {
    const Json& j = detail::unwrap(in, "poset");
    LabelSet g = labels_from_json(j.at("ground"));
    std::vector<std::pair<Label, Label>> rel;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) throw InputError("relations are pairs [a, b] meaning a <= b");
        rel.emplace_back(label_from_json(r[0]), label_from_json(r[1]));
      }
    return Preposet(std::move(g), rel);
  });
}

inline Poset poset_from_json(const Json& in) { return Poset(preposet_from_json(in)); }

inline Json to_json(const Preposet& q) {
  Json rel = Json::array();
  for (const auto& [a, b] : q.relations()) rel.push_back(Json::array({to_json(a), to_json(b)}));
  return {{"ground", to_json(q.ground())}, {"relations", rel}};
}

/// z keyed by comma-joined sorted subsets; the empty set may be omitted.
inline SubmodularGP gp_from_json(const Json& in) {
  return detail::json_guard("gp", [&] {
    const Json& j = detail::unwrap(in, "gp");
    LabelSet g = labels_from_json(j.at("ground"));
    check_ground_size(g);
    std::vector<Rational> z(std::size_t{1} << g.size());
    std::vector<bool> seen(z.size(), false);
    seen[0] = true;
    for (const auto& [key, val] : j.at("z").items()) {
      std::vector<Label> part;
      std::size_t start = 0;
      while (!key.empty() && start <= key.size()) {
        std::size_t comma = key.find(',', start);
        if (comma == std::string::npos) comma = key.size();
        part.emplace_back(key.substr(start, comma - start));
        start = comma + 1;
      }
      Mask a = g.mask_of(LabelSet::strict(std::move(part)));
      if (a != 0 && seen[a]) throw InputError("z lists the subset {" + g.subset(a).str() + "} twice");
      seen[a] = true;
      z[a] = rational_from_json(val);
    }
    for (Mask a = 0; a < z.size(); ++a)
      if (!seen[a]) throw InputError("z is missing the subset {" + g.subset(a).str() + "}");
    return SubmodularGP(std::move(g), std::move(z));
  });
}

inline Json to_json(const SubmodularGP& p) {
  Json z = Json::object();
  for (Mask a = 0; a <= p.full(); ++a) {
    z[p.ground().subset(a).str()] = to_json(p.z(a));
    if (a == p.full()) break;
  }
  return {{"ground", to_json(p.ground())}, {"z", z}};
}

inline BuildingSet building_set_from_json(const Json& in) {
  return detail::json_guard("building_set", [&] {
    const Json& j = detail::unwrap(in, "building_set");
    LabelSet g = labels_from_json(j.at("ground"));
    std::vector<LabelSet> members;
    for (const auto& m : j.at("members")) members.push_back(labels_from_json(m));
    return BuildingSet(std::move(g), members);
  });
}

inline BuildingSet graph_from_json(const Json& in) {
  return detail::json_guard("graph", [&] {
    const Json& j = detail::unwrap(in, "graph");
    LabelSet v = labels_from_json(j.at("vertices"));
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edges are pairs [a, b]");
      edges.emplace_back(label_from_json(e[0]), label_from_json(e[1]));
    }
    return BuildingSet::graphical(v, edges);
  });
}

inline Json to_json(const BuildingSet& b) {
  Json m = Json::array();
  for (Mask x : b.members()) m.push_back(to_json(b.ground().subset(x)));
  return {{"ground", to_json(b.ground())}, {"members", m}};
}

/// A cell given as {"matroid": ...}, {"gp": ...} or {"building_set": ...},
/// with an optional recorded "dimension".
inline Cell cell_from_json(const Json& j) {
  return detail::json_guard("cell", [&] {
    if (!j.is_object()) throw InputError("cells are objects with a matroid, gp or building_set entry");
    Cell c;
    if (j.contains("matroid"))
      c = Cell::of(matroid_from_json(j.at("matroid")));
    else if (j.contains("gp"))
      c = Cell::of(gp_from_json(j.at("gp")));
    else if (j.contains("building_set"))
      c = Cell::of(building_set_from_json(j.at("building_set")));
    else if (j.contains("bases"))
      c = Cell::of(matroid_from_json(j));
    else if (j.contains("z"))
      c = Cell::of(gp_from_json(j));
    else
      throw InputError("cells are objects with a matroid, gp or building_set entry");
    if (j.contains("dimension")) c.dimension = j.at("dimension").get<int>();
    return c;
  });
}

inline Json to_json(const Cell& c) {
  Json o;
  if (c.source && std::holds_alternative<Matroid>(*c.source))
    o["matroid"] = to_json(std::get<Matroid>(*c.source));
  else if (c.source && std::holds_alternative<BuildingSet>(*c.source))
    o["building_set"] = to_json(std::get<BuildingSet>(*c.source));
  else
    o["gp"] = to_json(c.gp);
  o["dimension"] = c.dimension;
  return o;
}

inline SubdivisionComplex subdivision_from_json(const Json& in) {
  return detail::json_guard("subdivision", [&] {
    const Json& j = detail::unwrap(in, "subdivision");
    SubdivisionComplex k;
    k.name = j.contains("name") ? j.at("name").get<std::string>() : "input";
    k.parent = cell_from_json(j.at("parent"));
    for (const auto& c : j.at("cells")) k.cells.push_back(cell_from_json(c));
    return k;
  });
}

inline Json to_json(const SubdivisionComplex& k) {
  Json cells = Json::array();
  for (const auto& c : k.cells) cells.push_back(to_json(c));
  return {{"name", k.name}, {"parent", to_json(k.parent)}, {"cells", cells}};
}

inline Json to_json(const ValuationReport& r) {
  Json o{{"invariant", r.invariant}, {"applicable", r.applicable}};
  if (r.applicable) {
    o["pass"] = r.pass;
    o["residue"] = to_json(r.residue);
  }
  return o;
}

}  // namespace gpval
