#include "cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "idealtop/constructions.hpp"
#include "idealtop/error.hpp"
#include "idealtop/json.hpp"
#include "idealtop/search.hpp"
#include "idealtop/star.hpp"
#include "idealtop/theorems.hpp"

namespace idealtop::cli {

namespace {

std::string braces(SubsetMask a) {
  std::string s = "{";
  bool first = true;
  for (Point p : a.points()) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

std::string labelled(SubsetMask a, const Json& labels) {
  std::string s = "{";
  bool first = true;
  for (Point p : a.points()) {
    if (!first) s += ",";
    s += labels[p].is_string() ? labels[p].get<std::string>() : labels[p].dump();
    first = false;
  }
  return s + "}";
}

std::string flags_line(const std::vector<std::pair<std::string_view, bool>>& flags) {
  std::string s;
  for (const auto& [name, value] : flags) {
    if (!s.empty()) s += " ";
    s += std::string(name) + "=" + (value ? "true" : "false");
  }
  return s;
}

void print_verdict(const Verdict& v, std::ostream& out) {
  const char* status = v.refutes() ? "REFUTED" : v.vacuous ? "vacuous" : "holds";
  out << to_string(v.theorem) << ": " << status << "\n";
  out << "  hypotheses:  " << flags_line(v.hypotheses) << "\n";
  out << "  conclusions: " << flags_line(v.conclusions) << "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "  witness: conclusion " << w.conclusion;
    if (w.subset) out << ", " << to_string(w.side) << " subset " << braces(*w.subset);
    if (w.point) out << ", point " << *w.point << " (" << to_string(w.point_side) << ")";
    out << "\n";
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot write " + path);
  f << j.dump(2) << "\n";
}

std::vector<SubsetMask> parse_carrier_list(const std::string& text) {
  const Json j = parse_json_text(text, "carrier list");
  if (!j.is_array()) throw Error(ErrorCode::Parse, "carrier list must be a JSON array of point arrays");
  std::vector<SubsetMask> out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(subset_from_json(j[i], kMaxPoints, "carriers[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

std::vector<int> parse_point_list(std::string_view text) {
  std::string body;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) {
    const char close = body.front() == '{' ? '}' : ']';
    if (body.size() < 2 || body.back() != close) throw Error(ErrorCode::Parse, "unbalanced subset '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> points;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::Parse, "bad point '" + item + "' in subset '" + std::string(text) + "'");
    points.push_back(std::stoi(item));
  }
  std::sort(points.begin(), points.end());
  return points;
}

int cmd_star(const std::string& space_file, std::string_view op, const std::optional<std::string>& subset,
             std::ostream& out) {
  const SpaceFile file = space_from_json(read_json_file(space_file), "space");
  const IdealSpace& s = file.space;

  auto print_set = [&](SubsetMask a) {
    out << braces(a) << "\n";
    if (file.labels) out << "labels: " << labelled(a, *file.labels) << "\n";
  };
  auto operand = [&] {
    if (!subset) throw Error(ErrorCode::Parse, "operator '" + std::string(op) + "' needs --subset");
    const auto pts = parse_point_list(*subset);
    for (int p : pts)
      if (p >= s.n()) throw Error(ErrorCode::BadMask, "point " + std::to_string(p) + " outside the space");
    return SubsetMask::of(pts);
  };

  if (op == "local") {
    print_set(local_function(s, operand()));
  } else if (op == "clstar") {
    print_set(star_closure(s, operand()));
  } else if (op == "psi") {
    print_set(psi(s, operand()));
  } else if (op == "tau_star") {
    out << to_json(star_topology(s)).dump() << "\n";
  } else if (op == "psi_tau") {
    out << to_json(psi_topology(s)).dump() << "\n";
  } else if (op == "compat") {
    out << (is_compatible(s) ? "true" : "false") << "\n";
  } else {
    throw Error(ErrorCode::Parse, "unknown operator '" + std::string(op) + "'");
  }
  return kOk;
}

int cmd_check(const std::string& instance_file, const std::vector<std::string>& theorems,
              const std::optional<std::string>& json_path, std::ostream& out) {
  std::vector<TheoremId> ids;
  for (const auto& name : theorems) {
    if (name == "all") {
      ids.insert(ids.end(), kAllTheorems.begin(), kAllTheorems.end());
    } else {
      ids.push_back(parse_theorem(name));
    }
  }
  if (ids.empty()) throw Error(ErrorCode::UnknownTheorem, "no theorem given");

  const InstanceFile file = instance_from_json(read_json_file(instance_file));
  const AnalyzedSpace x(file.instance.x);
  const AnalyzedSpace y(file.instance.y);
  const AnalyzedMap f(file.instance.f);

  bool refuted = false;
  Json all = Json::array();
  for (TheoremId id : ids) {
    const Verdict v = check(id, x, y, f);
    print_verdict(v, out);
    refuted = refuted || v.refutes();
    all.push_back(to_json(v));
  }
  if (json_path) write_json_file(*json_path, all);
  return refuted ? kRefuted : kOk;
}

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const TheoremId id = parse_theorem(args.theorem);
  for (const auto& d : args.drop) hypothesis_index(id, d);

  SearchBounds bounds;
  bounds.max_n_dom = args.max_n_dom.value_or(args.max_n);
  bounds.max_n_cod = args.max_n_cod.value_or(args.max_n);
  if (args.samples && !args.seed) throw Error(ErrorCode::Parse, "--samples requires an explicit --seed");
  if (args.seed && !args.samples) throw Error(ErrorCode::Parse, "--seed is only meaningful with --samples");
  if (args.samples) bounds.sampling = Sampling{*args.seed, *args.samples};
  if (args.dom_carriers) bounds.dom_carriers = parse_carrier_list(*args.dom_carriers);
  if (args.cod_carriers) bounds.cod_carriers = parse_carrier_list(*args.cod_carriers);

  SearchOptions options;
  options.workers = args.workers;
  if (args.progress)
    options.progress = [&err](const BlockProgress& p) {
      err << "block " << p.block + 1 << "/" << p.total_blocks << " sizes (" << p.n_dom << "," << p.n_cod
          << ") instances=" << p.instances << " counterexamples=" << p.counterexamples_so_far << "\n";
    };

  const SearchReport r = args.drop.empty() ? verify_exhaustive(id, bounds, options)
                                           : find_counterexample(id, args.drop, bounds, options);

  std::string dropped;
  for (const auto& d : r.dropped_hypotheses) dropped += (dropped.empty() ? "" : ",") + d;
  out << "theorem: " << to_string(r.theorem) << "\n";
  out << "dropped hypotheses: " << (dropped.empty() ? "(none)" : dropped) << "\n";
  out << "sizes: domain 1.." << bounds.max_n_dom << ", codomain 1.." << bounds.max_n_cod << "\n";
  out << "mode: " << r.mode() << (bounds.exhaustive() ? "" : " (non-certifying)") << "\n";
  out << "instances checked: " << r.instances_checked << "\n";
  out << "counterexamples found: " << r.counterexamples_found << "\n";
  if (r.certified) {
    out << "result: " << (bounds.exhaustive() ? "certified" : "no counterexample in sample") << "\n";
  } else {
    out << "result: counterexample\n";
    out << "instance: " << to_json(*r.counterexample).dump() << "\n";
    print_verdict(*r.verdict, out);
  }
  err << "elapsed: " << r.elapsed.count() << " ms\n";
  if (args.json_path) write_json_file(*args.json_path, to_json(r));
  return r.certified ? kOk : kRefuted;
}

namespace {

IdealSpace sierpinski_space(SubsetMask carrier) { return IdealSpace(sierpinski(), Ideal(2, carrier)); }

void describe(const Instance& inst, std::ostream& out) {
  out << "domain:   " << to_json(inst.x).dump() << "\n";
  out << "codomain: " << to_json(inst.y).dump() << "\n";
  out << "map:      " << to_json(inst.f).dump() << "\n";
}

int confirm(bool ok, std::ostream& out) {
  out << (ok ? "prediction confirmed\n" : "prediction NOT confirmed\n");
  return ok ? kOk : kRefuted;
}

int demo_add_open_point(std::ostream& out) {
  out << "Seed: identity on the Sierpinski space, both ideals {∅}.\n"
         "Codomain gains a point z lying in every nonempty open set; z joins the ideal.\n"
         "Prediction: CONTPSI conclusion a fails although every hypothesis but surjectivity holds.\n\n";
  const Instance seed(sierpinski_space({}), sierpinski_space({}), FiniteMap::identity(2));
  const PointExtension z = add_open_point(seed.y);
  const Instance inst = widen_codomain(seed, z);
  describe(inst, out);
  const Verdict v = check(TheoremId::CONTPSI, inst);
  print_verdict(v, out);

  const AnalyzedSpace ax(inst.x), az(inst.y);
  const SubsetMask all = inst.x.points();
  const bool z_in_psi = az.psi[inst.f.image(all).bits()].has(z.added);
  const bool z_outside = !inst.f.image(ax.psi[all.bits()]).has(z.added);
  out << "A = X: z in Ψ(f[X]) = " << std::boolalpha << z_in_psi << ", z in f[Ψ(X)] = " << !z_outside << "\n";
  return confirm(v.flag("continuous") && v.flag("injective") && v.flag("preimage_ok") && !v.flag("surjective") &&
                     !v.flag("a") && z_in_psi && z_outside,
                 out);
}

int demo_add_generic_point(std::ostream& out) {
  out << "Seed: identity on the Sierpinski space, both ideals {∅}.\n"
         "Codomain gains a point z whose only neighborhood is the whole space; the ideal is unchanged.\n"
         "Prediction: OPENBIJ conclusion a fails: z ∈ (f[X])* but z ∉ f[X*].\n\n";
  const Instance seed(sierpinski_space({}), sierpinski_space({}), FiniteMap::identity(2));
  const PointExtension z = add_generic_point(seed.y);
  const Instance inst = widen_codomain(seed, z);
  describe(inst, out);
  const Verdict v = check(TheoremId::OPENBIJ, inst);
  print_verdict(v, out);

  const SubsetMask all = inst.x.points();
  const bool in_star = local_function(inst.y, inst.f.image(all)).has(z.added);
  const bool in_image = inst.f.image(local_function(inst.x, all)).has(z.added);
  out << "A = X: z in (f[X])* = " << std::boolalpha << in_star << ", z in f[X*] = " << in_image << "\n";
  return confirm(v.flag("open") && v.flag("injective") && v.flag("image_ok") && !v.flag("surjective") &&
                     !v.flag("a") && in_star && !in_image,
                 out);
}

int demo_collapse_cont(std::ostream& out) {
  out << "Seed: identity on the Sierpinski space, both ideals with carrier {1}; x0 = y0 = 1.\n"
         "Domain gains a twin z of x0 (neighborhoods of x0 gain z); f(z) = y0; x0 and y0 leave the carriers.\n"
         "Prediction: CONTPSI conclusion a fails at A = X although every hypothesis but injectivity holds.\n\n";
  const Instance seed(sierpinski_space(SubsetMask::of({1})), sierpinski_space(SubsetMask::of({1})),
                      FiniteMap::identity(2));
  const Point x0 = 1;
  const Instance inst = collapse_instance(seed, x0, CollapseVariant::Cont);
  describe(inst, out);
  const Verdict v = check(TheoremId::CONTPSI, inst);
  print_verdict(v, out);

  const AnalyzedSpace az(inst.x), ay(inst.y);
  const SubsetMask a = seed.x.points();
  const Point y0 = seed.f(x0);
  const bool in_psi = ay.psi[inst.f.image(a).bits()].has(y0);
  const bool in_image = inst.f.image(az.psi[a.bits()]).has(y0);
  out << "A = X: y0 in Ψ(f[X]) = " << std::boolalpha << in_psi << ", y0 in f[Ψ(X)] = " << in_image << "\n";
  return confirm(v.flag("continuous") && v.flag("surjective") && v.flag("preimage_ok") && !v.flag("injective") &&
                     !v.flag("a") && in_psi && !in_image,
                 out);
}

int demo_collapse_open(std::ostream& out) {
  out << "Seed: identity on the Sierpinski space, both ideals P(X) so that {y0} and X ∖ {x0} are small; x0 = y0 = 1.\n"
         "Domain gains a twin z of x0; opens avoiding x0 are kept and Z is the only other open set;\n"
         "f(z) = y0; x0 and y0 leave the carriers.\n"
         "Prediction: OPENBIJ conclusion a fails at A = X: y0 ∈ (f[X])* but y0 ∉ f[X*].\n\n";
  const Instance seed(sierpinski_space(SubsetMask::full(2)), sierpinski_space(SubsetMask::full(2)),
                      FiniteMap::identity(2));
  const Point x0 = 1;
  const Instance inst = collapse_instance(seed, x0, CollapseVariant::Open);
  describe(inst, out);
  const Verdict v = check(TheoremId::OPENBIJ, inst);
  print_verdict(v, out);

  const SubsetMask a = seed.x.points();
  const Point y0 = seed.f(x0);
  const SubsetMask a_star = local_function(inst.x, a);
  const bool in_star = local_function(inst.y, inst.f.image(a)).has(y0);
  const bool in_image = inst.f.image(a_star).has(y0);
  out << "A = X: X* = " << braces(a_star) << ", y0 in (f[X])* = " << std::boolalpha << in_star
      << ", y0 in f[X*] = " << in_image << "\n";
  if (a_star.has(x0))
    out << "x0 lies in X*: its only neighborhood Z meets X in a set containing x0, which left the carrier.\n";
  return confirm(v.flag("open") && v.flag("surjective") && v.flag("image_ok") && !v.flag("injective") &&
                     !v.flag("a") && in_star && !in_image,
                 out);
}

int demo_pstar_trivial(std::ostream& out) {
  out << "Domain: Sierpinski space with the ideal P(X); codomain: Sierpinski space with {∅}.\n"
         "Map: the swap 0 <-> 1, which is not continuous.\n"
         "Prediction: every A* is empty, so TC1 conclusion a holds while continuity fails.\n\n";
  const Instance inst(sierpinski_space(SubsetMask::full(2)), sierpinski_space({}), FiniteMap(2, 2, {1, 0}));
  describe(inst, out);
  const Verdict v = check(TheoremId::TC1, inst);
  print_verdict(v, out);
  bool all_empty = true;
  for_each_subset(2, [&](SubsetMask a) { all_empty = all_empty && local_function(inst.x, a).empty(); });
  out << "every A* empty in the domain: " << std::boolalpha << all_empty << "\n";
  return confirm(!v.flag("continuous") && v.flag("preimage_ok") && v.flag("a") && all_empty, out);
}

}  // namespace

int cmd_demo(std::string_view name, std::ostream& out) {
  if (name == "add-open-point") return demo_add_open_point(out);
  if (name == "add-generic-point") return demo_add_generic_point(out);
  if (name == "collapse-cont") return demo_collapse_cont(out);
  if (name == "collapse-open") return demo_collapse_open(out);
  if (name == "pstar-trivial") return demo_pstar_trivial(out);
  throw Error(ErrorCode::Parse, "unknown demo '" + std::string(name) + "'");
}

int cmd_enumerate(std::string_view what, int n, std::optional<int> n_cod, bool count_only, std::ostream& out) {
  if (what == "topologies") {
    const auto all = enumerate_topologies(n);
    if (count_only) {
      out << all.size() << "\n";
    } else {
      for (const auto& t : all) out << to_json(t).dump() << "\n";
    }
  } else if (what == "ideals") {
    const auto all = enumerate_ideals(n);
    if (count_only) {
      out << all.size() << "\n";
    } else {
      for (const auto& i : all) out << to_json(i).dump() << "\n";
    }
  } else if (what == "maps") {
    const auto all = enumerate_maps(n, n_cod.value_or(n));
    if (count_only) {
      out << all.size() << "\n";
    } else {
      for (const auto& f : all) out << to_json(f).dump() << "\n";
    }
  } else {
    throw Error(ErrorCode::Parse, "unknown enumeration '" + std::string(what) + "'");
  }
  return kOk;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ideal topological spaces: operators, theorem checkers, counterexample search"};
  app.require_subcommand(1);

  std::string file, op, theorem, demo_name, what;
  std::optional<std::string> subset, json_path;
  std::vector<std::string> theorems;
  auto* star = app.add_subcommand("star", "Apply a local-function operator to an ideal space");
  star->add_option("space", file, "Ideal space JSON file")->required();
  star->add_option("operator", op, "local | clstar | psi | tau_star | psi_tau | compat")->required();
  star->add_option("subset", subset, "Subset operand, e.g. {0,1}");

  auto* chk = app.add_subcommand("check", "Run theorem checkers on an instance");
  chk->add_option("instance", file, "Instance JSON file")->required();
  chk->add_option("theorems", theorems, "Theorem ids or 'all'")->required();
  chk->add_option("--json", json_path, "Write verdicts as JSON");

  SearchArgs search_args;
  if (const char* env = std::getenv("IDEALTOP_WORKERS")) {
    try {
      search_args.workers = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      err << "ignoring malformed IDEALTOP_WORKERS='" << env << "'\n";
    }
  }
  std::string drop_list;
  bool quiet = false;
  auto* srch = app.add_subcommand("search", "Exhaustive certification or counterexample search");
  srch->add_option("theorem", search_args.theorem, "Theorem id")->required();
  srch->add_option("--drop", drop_list, "Comma-separated hypotheses to drop");
  srch->add_option("--max-n", search_args.max_n, "Largest domain and codomain size")->capture_default_str();
  srch->add_option("--max-n-dom", search_args.max_n_dom, "Largest domain size");
  srch->add_option("--max-n-cod", search_args.max_n_cod, "Largest codomain size");
  srch->add_option("--workers", search_args.workers, "Worker threads (default $IDEALTOP_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  srch->add_option("--json", search_args.json_path, "Write the report as JSON");
  srch->add_option("--seed", search_args.seed, "Seed for sampling mode");
  srch->add_option("--samples", search_args.samples, "Sample this many instances instead of enumerating");
  srch->add_option("--dom-carriers", search_args.dom_carriers, "Restrict domain ideals, e.g. '[[],[0]]'");
  srch->add_option("--cod-carriers", search_args.cod_carriers, "Restrict codomain ideals");
  srch->add_flag("--quiet", quiet, "No progress lines");

  auto* dm = app.add_subcommand("demo", "Replay a counterexample construction");
  dm->add_option("name", demo_name, "add-open-point | add-generic-point | collapse-cont | collapse-open | pstar-trivial")
      ->required();

  int n = 0;
  std::optional<int> m;
  bool count_only = false;
  auto* en = app.add_subcommand("enumerate", "List topologies, ideals or maps");
  en->add_option("--what", what, "topologies | ideals | maps")->required();
  en->add_option("--n", n, "Point count (domain size for maps)")->required();
  en->add_option("--m", m, "Codomain size for maps (default --n)");
  en->add_flag("--count-only", count_only, "Print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*star) return cmd_star(file, op, subset, out);
    if (*chk) return cmd_check(file, theorems, json_path, out);
    if (*srch) {
      std::stringstream ss(drop_list);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) search_args.drop.push_back(item);
      search_args.progress = !quiet;
      return cmd_search(search_args, out, err);
    }
    if (*dm) return cmd_demo(demo_name, out);
    if (*en) return cmd_enumerate(what, n, m, count_only, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace idealtop::cli
