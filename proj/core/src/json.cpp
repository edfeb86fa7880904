#include "idealtop/json.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "idealtop/error.hpp"

namespace idealtop {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, "at " + where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) parse_error(where + "." + key, "expected an integer");
  return v.get<int>();
}

// Rethrows validation errors from the core with the location attached.
template <class Fn>
auto located(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    throw Error(e.code(), "at " + where + ": " + e.what());
  }
}

Json flags_to_json(const std::vector<std::pair<std::string_view, bool>>& flags) {
  Json out = Json::object();
  for (const auto& [name, value] : flags) out[std::string(name)] = value;
  return out;
}

}  // namespace

Json subset_to_json(SubsetMask a) { return Json(a.points()); }

Json to_json(const Topology& t) {
  Json opens = Json::array();
  for (SubsetMask o : t.opens()) opens.push_back(subset_to_json(o));
  return Json{{"n", t.n()}, {"opens", std::move(opens)}};
}

Json to_json(const Ideal& i) { return Json{{"n", i.n()}, {"carrier", subset_to_json(i.carrier())}}; }

Json to_json(const IdealSpace& s) { return Json{{"topology", to_json(s.top())}, {"ideal", to_json(s.ideal())}}; }

Json to_json(const FiniteMap& f) {
  return Json{{"n_dom", f.n_dom()}, {"n_cod", f.n_cod()}, {"values", f.values()}};
}

Json to_json(const Instance& inst) { return Json{{"X", to_json(inst.x)}, {"Y", to_json(inst.y)}, {"f", to_json(inst.f)}}; }

Json to_json(const Witness& w) {
  Json out{{"conclusion", std::string(w.conclusion)}, {"side", std::string(to_string(w.side))}};
  out["subset"] = w.subset ? subset_to_json(*w.subset) : Json(nullptr);
  out["point"] = w.point ? Json(*w.point) : Json(nullptr);
  out["point_side"] = std::string(to_string(w.point_side));
  return out;
}

Json to_json(const Verdict& v) {
  return Json{{"theorem", std::string(to_string(v.theorem))},
              {"hypotheses", flags_to_json(v.hypotheses)},
              {"conclusions", flags_to_json(v.conclusions)},
              {"vacuous", v.vacuous},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

Json to_json(const SearchReport& r) {
  Json bounds{{"max_n_dom", r.bounds.max_n_dom},
              {"max_n_cod", r.bounds.max_n_cod},
              {"min_n_dom", r.bounds.min_n_dom},
              {"min_n_cod", r.bounds.min_n_cod}};
  auto carriers = [](const std::optional<std::vector<SubsetMask>>& c) {
    if (!c) return Json(nullptr);
    Json out = Json::array();
    for (SubsetMask m : *c) out.push_back(subset_to_json(m));
    return out;
  };
  bounds["dom_carriers"] = carriers(r.bounds.dom_carriers);
  bounds["cod_carriers"] = carriers(r.bounds.cod_carriers);
  bounds["sampling"] = r.bounds.sampling
                           ? Json{{"seed", r.bounds.sampling->seed}, {"samples", r.bounds.sampling->samples}}
                           : Json(nullptr);
  Json out{{"theorem", std::string(to_string(r.theorem))},
           {"dropped_hypotheses", r.dropped_hypotheses},
           {"mode", r.mode()},
           {"certifying", r.bounds.exhaustive()},
           {"bounds", std::move(bounds)},
           {"instances_checked", r.instances_checked},
           {"counterexamples_found", r.counterexamples_found},
           {"certified", r.certified}};
  out["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  out["verdict"] = r.verdict ? to_json(*r.verdict) : Json(nullptr);
  return out;
}

SubsetMask subset_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of points");
  SubsetMask m;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& p = j[i];
    if (!p.is_number_integer()) parse_error(where + "[" + std::to_string(i) + "]", "expected an integer point");
    const int v = p.get<int>();
    if (v < 0 || v >= n)
      throw Error(ErrorCode::BadMask, "at " + where + "[" + std::to_string(i) + "]: point " + std::to_string(v) +
                                          " outside 0.." + std::to_string(n - 1));
    m = m.with(v);
  }
  return m;
}

Topology topology_from_json(const Json& j, const std::string& where) {
  const int n = int_field(j, "n", where);
  located(where + ".n", [&] {
    require_point_count(n);
    return 0;
  });
  const Json& opens = field(j, "opens", where);
  if (!opens.is_array()) parse_error(where + ".opens", "expected an array");
  std::vector<SubsetMask> family{SubsetMask{}, SubsetMask::full(n)};
  for (size_t i = 0; i < opens.size(); ++i)
    family.push_back(subset_from_json(opens[i], n, where + ".opens[" + std::to_string(i) + "]"));
  return located(where + ".opens", [&] { return make_topology(n, family); });
}

Ideal ideal_from_json(const Json& j, std::optional<int> n_hint, const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  int n = 0;
  if (j.contains("n"))
    n = int_field(j, "n", where);
  else if (n_hint)
    n = *n_hint;
  else
    parse_error(where, "missing \"n\"");
  if (n_hint && n != *n_hint)
    throw Error(ErrorCode::DimensionMismatch,
                "at " + where + ".n: ideal has " + std::to_string(n) + " points, expected " + std::to_string(*n_hint));
  located(where + ".n", [&] {
    require_point_count(n);
    return 0;
  });
  const bool has_carrier = j.contains("carrier");
  const bool has_generators = j.contains("generators");
  if (has_carrier == has_generators) parse_error(where, "give exactly one of \"carrier\" or \"generators\"");
  if (has_carrier) return Ideal(n, subset_from_json(j["carrier"], n, where + ".carrier"));
  const Json& gens = j["generators"];
  if (!gens.is_array()) parse_error(where + ".generators", "expected an array");
  std::vector<SubsetMask> g;
  for (size_t i = 0; i < gens.size(); ++i)
    g.push_back(subset_from_json(gens[i], n, where + ".generators[" + std::to_string(i) + "]"));
  return make_ideal(n, g);
}

FiniteMap map_from_json(const Json& j, const std::string& where) {
  const int n_dom = int_field(j, "n_dom", where);
  const int n_cod = int_field(j, "n_cod", where);
  const Json& values = field(j, "values", where);
  if (!values.is_array()) parse_error(where + ".values", "expected an array");
  std::vector<Point> v;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_number_integer())
      parse_error(where + ".values[" + std::to_string(i) + "]", "expected an integer");
    v.push_back(values[i].get<int>());
  }
  return located(where, [&] { return FiniteMap(n_dom, n_cod, std::move(v)); });
}

SpaceFile space_from_json(const Json& j, const std::string& where) {
  Topology t = topology_from_json(field(j, "topology", where), where + ".topology");
  Ideal i = ideal_from_json(field(j, "ideal", where), t.n(), where + ".ideal");
  std::optional<Json> labels;
  if (j.contains("labels")) {
    const Json& l = j["labels"];
    if (!l.is_array() || static_cast<int>(l.size()) != t.n())
      parse_error(where + ".labels", "expected one label per point");
    labels = l;
  }
  return {IdealSpace(std::move(t), i), std::move(labels)};
}

InstanceFile instance_from_json(const Json& j) {
  SpaceFile x = space_from_json(field(j, "X", "instance"), "X");
  SpaceFile y = space_from_json(field(j, "Y", "instance"), "Y");
  FiniteMap f = map_from_json(field(j, "f", "instance"), "f");
  Instance inst = located("f", [&] { return Instance(x.space, y.space, f); });
  return {std::move(inst), std::move(x.labels), std::move(y.labels)};
}

Json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

}  // namespace idealtop
