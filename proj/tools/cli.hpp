#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tightcycle/census.hpp"
#include "tightcycle/coloring.hpp"
#include "tightcycle/edge_coloring.hpp"
#include "tightcycle/extremal.hpp"
#include "tightcycle/hypergraph.hpp"
#include "tightcycle/permgroup.hpp"
#include "tightcycle/records.hpp"
#include "tightcycle/tightconn.hpp"

namespace tightcycle::cli {

enum exit_code { ok = 0, negative = 1, usage = 2 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw error(errc::parse, "not an integer: '" + s + "'");
}

// "1,2", "3" or "all" (every nonzero residue).
inline std::vector<int> parse_residues(const std::string& s, int r) {
  std::vector<int> out;
  if (s == "all") {
    for (int k = 1; k < r; ++k) out.push_back(k);
    return out;
  }
  for (const auto& t : split(s, ',')) out.push_back(parse_int(t));
  if (out.empty()) throw error(errc::parse, "no residues given");
  return out;
}

// "0,1,2" with optional ranges "0-4".
inline std::vector<Vertex> parse_vertices(const std::string& s) {
  std::vector<Vertex> out;
  for (const auto& t : split(s, ',')) {
    auto dash = t.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(parse_int(t));
    } else {
      int lo = parse_int(t.substr(0, dash)), hi = parse_int(t.substr(dash + 1));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

inline std::array<Vertex, 3> parse_triple(const std::string& s) {
  auto v = parse_vertices(s);
  if (v.size() != 3) throw error(errc::parse, "expected three vertices in '" + s + "'");
  return {v[0], v[1], v[2]};
}

inline std::vector<Side> parse_pattern(const std::string& s) {
  std::vector<Side> out;
  for (char c : s) {
    if (c == 'A' || c == 'a')
      out.push_back(Side::A);
    else if (c == 'B' || c == 'b')
      out.push_back(Side::B);
    else
      throw error(errc::parse, "pattern letters must be A or B");
  }
  return out;
}

inline TripleSet parse_triples(const std::string& text, int n) {
  std::vector<Triple> ts;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Triple t;
    std::string extra;
    if (!(ls >> t[0] >> t[1] >> t[2]) || (ls >> extra))
      throw error(errc::parse, "line " + std::to_string(lineno) + ": expected three vertices");
    ts.push_back(t);
  }
  return TripleSet(n, ts);
}

// All triples inside A u B.
inline TripleSet triples_within(int n, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  std::vector<Triple> ts;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      for (std::size_t k = j + 1; k < u.size(); ++k) ts.push_back({u[i], u[j], u[k]});
  return TripleSet(n, ts);
}

inline std::string join(const std::vector<Vertex>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string gens_text(const PermGroup& g) {
  std::string s;
  for (const auto& p : g.generators()) s += (s.empty() ? "" : " ") + to_cycle_string(p);
  return s.empty() ? "()" : s;
}

inline std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

struct Context {
  bool records = false;
  bool assert_mode = false;
  std::ostringstream out;
  int status = ok;

  void emit(const json& j) { out << j.dump() << "\n"; }
  void negative_if(bool cond) {
    if (cond && assert_mode) status = negative;
  }
};

// ---- verbs ----

inline void do_groups(Context& cx, int r, const std::string& avoid, bool colors) {
  detail::check_arity(r);
  if (avoid.empty()) {
    if (colors) throw error(errc::domain, "--colors needs --avoid");
    const auto& classes = enumerate_subgroup_classes(r);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      if (cx.records) {
        cx.emit(to_record(c, i));
        continue;
      }
      cx.out << "class " << i << ": " << c.name << " order " << c.order() << " conjugates " << c.class_size
             << " generators " << gens_text(c.representative) << " avoids-cyc " << yes_no(avoids(c.representative, Permutation::cyc(r)));
      if (r >= 3) cx.out << " avoids-cyc2 " << yes_no(avoids(c.representative, Permutation::cyc(r).pow(2)));
      cx.out << "\n";
    }
    return;
  }
  Permutation pi = parse_permutation(avoid, r);
  ColorSet cs = color_set(r, pi);
  const auto& classes = cs.classes();
  if (!cx.records) cx.out << "maximal classes avoiding " << to_cycle_string(pi) << ": " << classes.size() << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (cx.records) {
      cx.emit(to_record(classes[i], i));
      continue;
    }
    cx.out << "class " << i << ": " << classes[i].name << " order " << classes[i].order() << " conjugates "
           << classes[i].class_size << " generators " << gens_text(classes[i].representative) << "\n";
  }
  if (!colors) return;
  if (!cx.records) cx.out << "colors: " << cs.size() << "\n";
  for (const auto& c : cs.colors()) {
    if (cx.records) {
      json j = color_json(c);
      j["type"] = "color";
      cx.emit(j);
    } else {
      cx.out << "color class " << c.class_index << " coset " << to_cycle_string(c.coset_rep) << "\n";
    }
  }
}

inline void emit_graph(Context& cx, const Hypergraph& g) {
  if (cx.records)
    cx.emit(to_record(g));
  else
    cx.out << serialize_hypergraph(g);
}

inline Hypergraph load_graph(const std::string& path) {
  if (path.empty()) throw error(errc::domain, "--input is required");
  auto text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return hypergraph_from_record(json::parse(text));
  return parse_hypergraph(text);
}

inline void do_check(Context& cx, const Hypergraph& g, const std::vector<int>& residues) {
  for (int k : residues) {
    auto w = find_hom_cycle_witness(g, k);
    bool free = !w.has_value();
    cx.negative_if(!free);
    if (cx.records) {
      json j{{"type", "check"}, {"k", k}, {"hom_free", free}};
      if (w) j["witness"] = to_record(*w);
      cx.emit(j);
      continue;
    }
    if (residues.size() > 1) cx.out << "k=" << k << " ";
    cx.out << "hom-free: " << yes_no(free) << "\n";
    if (w) cx.out << "witness: " << join(w->vertices) << " (stretch " << w->stretch << ")\n";
  }
}

inline void do_tc(Context& cx, const Hypergraph& g) {
  auto comps = tight_components(g);
  if (!cx.records) cx.out << "components: " << comps.size() << "\n";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    std::size_t cls = class_index_of(c.tc);
    const auto& name = enumerate_subgroup_classes(g.uniformity())[cls].name;
    if (cx.records) {
      cx.emit({{"type", "component"},
               {"index", i},
               {"edges", c.edges.size()},
               {"representative", c.representative},
               {"tc_order", c.tc.order()},
               {"tc_class", name},
               {"generators", generators_json(c.tc)}});
      continue;
    }
    cx.out << "component " << i << ": " << c.edges.size() << " edges, representative (" << join(c.representative)
           << "), tc " << name << " order " << c.tc.order() << " generators " << gens_text(c.tc) << "\n";
  }
}

inline void do_color(Context& cx, const Hypergraph& g, const Permutation& pi, bool triples) {
  auto chi = build_accordant_coloring(g, pi);
  cx.negative_if(!chi);
  if (!chi) {
    if (cx.records)
      cx.emit({{"type", "color"}, {"pi", to_cycle_string(pi)}, {"colorable", false}});
    else
      cx.out << "colorable: false\n";
    return;
  }
  bool accordant = verify_accordant(g, *chi);
  cx.negative_if(!accordant);
  const auto& classes = chi->colors().classes();
  if (!cx.records) cx.out << "colorable: true\naccordant: " << yes_no(accordant) << "\n";
  for (const auto& [e, c] : chi->assignment()) {
    if (cx.records)
      cx.emit(to_record(*chi, e));
    else
      cx.out << "edge " << join(e) << ": class " << c.class_index << " (" << classes[c.class_index].name << ") coset "
             << to_cycle_string(c.coset_rep) << "\n";
  }
  std::optional<bool> round_trip;
  if (triples) {
    if (g.uniformity() != 4) throw error(errc::unsupported_arity, "triple colorings need uniformity 4");
    auto tc4 = triple_coloring_from_accordant(g, *chi);
    for (const auto& [t, c] : tc4.colored()) {
      if (cx.records)
        cx.emit(to_record(t, c));
      else
        cx.out << "triple " << t[0] << " " << t[1] << " " << t[2] << ": " << triangle_kind_name(c.kind)
               << (c.datum.empty() ? "" : " " + join(c.datum)) << "\n";
    }
    auto back = accordant_from_triple_coloring(g, tc4, pi);
    round_trip = back && triple_coloring_from_accordant(g, *back) == tc4;
    cx.negative_if(!*round_trip);
  }
  if (cx.records) {
    json j{{"type", "color"}, {"pi", to_cycle_string(pi)}, {"colorable", true}, {"accordant", accordant}};
    if (round_trip) j["round_trip"] = *round_trip;
    cx.emit(j);
  } else if (round_trip) {
    cx.out << "round-trip: " << yes_no(*round_trip) << "\n";
  }
}

inline void do_census(Context& cx, const EdgeColoring2& c) {
  auto t = count_triangle_types(c);
  auto rep = check_color_inequalities(t);
  cx.negative_if(!rep.all_pass());
  if (cx.records) {
    cx.emit(to_record(t, rep));
    return;
  }
  cx.out << "n " << t.n << "\n";
  cx.out << "triangles: green " << t.t_green << " purple " << t.t_purple << " cherry " << t.t_cherry << "\n";
  cx.out << "densities: alpha " << rational_string(t.alpha) << " beta " << rational_string(t.beta) << " gamma "
         << rational_string(t.gamma) << " delta " << rational_string(t.delta) << "\n";
  int i = 1;
  for (const auto& item : rep.items)
    cx.out << "(" << i++ << ") " << item.name << ": " << fixed(static_cast<double>(item.lhs)) << " <= "
           << fixed(static_cast<double>(item.bound)) << " " << (item.pass ? "pass" : "FAIL") << "\n";
  cx.out << "cherry with 2*sqrt(3)-3: " << fixed(static_cast<double>(rep.cherry_exact.bound)) << " "
         << (rep.cherry_exact.pass ? "pass" : "FAIL") << "\n";
  cx.out << "goodman: " << rational_string(rep.goodman_lhs) << " <= " << rational_string(rep.goodman_rhs) << " "
         << (rep.goodman_pass ? "pass" : "FAIL") << "\n";
  cx.out << "f bound: " << fixed(static_cast<double>(rep.f_check.lhs)) << " <= "
         << fixed(static_cast<double>(rep.f_check.bound)) << " " << (rep.f_check.pass ? "pass" : "FAIL") << "\n";
}

inline long long parse_step(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_int(s);
  if (parse_int(s.substr(0, slash)) != 1) throw error(errc::parse, "step must be 1/N");
  return parse_int(s.substr(slash + 1));
}

inline FRegion parse_region(const std::string& s) {
  if (s == "all") return FRegion::all;
  if (s == "low") return FRegion::low_gamma_delta;
  if (s == "high-delta") return FRegion::high_delta;
  if (s == "slice") return FRegion::gamma_equals_alpha;
  throw error(errc::parse, "region must be all, low, high-delta or slice");
}

inline void do_fopt(Context& cx, long long den, FRegion region, int refine) {
  auto c = maximize_f_on_R(den, region, refine);
  if (cx.records) {
    cx.emit(to_record(c));
    return;
  }
  auto x = c.argmax.coords();
  cx.out << "region " << region_name(region) << " step 1/" << den << " refinements " << refine << "\n";
  cx.out << "max " << fixed(c.max_value, 12) << " at alpha " << fixed(x[0]) << " beta " << fixed(x[1]) << " gamma "
         << fixed(x[2]) << " delta " << fixed(x[3]) << "\n";
  cx.out << "modulus " << fixed(c.modulus) << " certified upper " << fixed(c.certified_upper) << "\n";
}

inline void do_search(Context& cx, int n, int r, const std::vector<int>& residues, const SearchOptions& opts) {
  auto s = brute_force_ex_hom(n, r, residues, opts);
  if (cx.records) {
    cx.emit(to_record(s));
    return;
  }
  std::vector<Vertex> ks(s.residues.begin(), s.residues.end());
  cx.out << "ex = " << s.max_edges << " (n " << n << ", r " << r << ", residues " << join(ks, ",") << ")\n";
  cx.out << (s.canonical ? "optimal classes: " : "optimal graphs: ") << s.optimal_count << "\n";
  cx.out << "explored: " << s.explored << "\n";
  for (std::size_t i = 0; i < s.witnesses.size(); ++i)
    cx.out << "# witness " << i << "\n" << serialize_hypergraph(s.witnesses[i]);
}

inline void do_prune(Context& cx, const Hypergraph& g, double eps, bool verify) {
  auto p = prune_low_codegree(g, eps);
  std::optional<ShortConnectionReport> sc;
  if (verify) {
    sc = verify_short_connection_bound(p.pruned, eps);
    cx.negative_if(!sc->holds);
  }
  if (cx.records) {
    json j{{"type", "prune"},
           {"eps", eps},
           {"deleted", p.deleted},
           {"deletion_bound", p.deletion_bound},
           {"graph", to_record(p.pruned)}};
    if (sc)
      j["short_connection"] = {{"holds", sc->holds},
                               {"bound", sc->bound},
                               {"max_replacements", sc->max_replacements},
                               {"pairs", sc->pairs_checked}};
    cx.emit(j);
    return;
  }
  cx.out << "deleted " << p.deleted << " of " << g.edge_count() << " (bound " << fixed(p.deletion_bound, 3) << ")\n";
  if (sc)
    cx.out << "short connections: " << (sc->holds ? "hold" : "FAIL") << " max " << sc->max_replacements << " bound "
           << fixed(sc->bound, 3) << " pairs " << sc->pairs_checked << "\n";
  cx.out << serialize_hypergraph(p.pruned);
}

inline void do_epsclose(Context& cx, const Hypergraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                        const TripleSet& t, double eps) {
  auto rep = check_eps_close(g, a, b, t, eps);
  cx.negative_if(!rep.close());
  if (cx.records) {
    cx.emit(to_record(rep));
    return;
  }
  cx.out << "eps-close: " << yes_no(rep.close()) << "\n";
  cx.out << "violations: (1) " << rep.cond1.size() << " (2) " << rep.cond2.size() << " (3) " << rep.cond3.size() << "\n";
  for (const auto& v : rep.cond1)
    cx.out << "(1) triple " << v.triple[0] << " " << v.triple[1] << " " << v.triple[2] << " side " << side_name(v.side)
           << " degree " << v.degree << " < " << v.required << "\n";
  for (const auto& v : rep.cond2)
    cx.out << "(2) pair " << join(v.where) << " side " << side_name(v.side) << " degree " << v.degree << " < "
           << v.required << "\n";
  for (const auto& v : rep.cond3)
    cx.out << "(3) vertex " << v.where[0] << " side " << side_name(v.side) << " degree " << v.degree << " < "
           << v.required << "\n";
  if (rep.primed_evaluated)
    cx.out << "primed conditions: (2') " << rep.cond2_primed.size() << " (3') " << rep.cond3_primed.size()
           << " violations\n";
}

inline void do_walk(Context& cx, const Hypergraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                    const TripleSet& t, double eps, const std::array<Vertex, 3>& start, const std::array<Vertex, 3>& end,
                    const std::vector<Side>& pattern) {
  auto w = build_walk_through_T(g, a, b, t, eps, start, end, pattern);
  cx.negative_if(!w);
  if (cx.records) {
    json j{{"type", "walk-build"}, {"found", w.has_value()}};
    if (w) j["walk"] = to_record(*w);
    cx.emit(j);
    return;
  }
  if (!w) {
    cx.out << "walk: none\n";
    return;
  }
  cx.out << "walk: " << join(w->vertices) << " (stretch " << w->stretch << ")\n";
}

// ---- entry point ----

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight-cycle homomorphism toolkit"};
  app.name("tightcycle");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text", output;
  bool assert_mode = false;
  app.add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  app.add_option("--output", output, "write output to this file");
  app.add_flag("--assert", assert_mode, "exit 1 on a negative answer");

  int r = 4, n = 0, a = 0, b = 0, t = 2, ell = 0, budget = 20, jobs = 1, refine = 2, seed = 1;
  std::string avoid, input, k_text, pi_text, kind_text, region = "all", step = "200", a_text, b_text, triples_text;
  std::string start_text, end_text, pattern_text, tournament;
  double eps = 0;
  bool colors = false, triples = false, canonical = false, random = false, verify = false, unpruned = false;
  std::size_t max_witnesses = 64;

  auto* groups = app.add_subcommand("groups", "subgroup classes, maximal avoiding classes, color sets");
  groups->add_option("--r", r, "uniformity");
  groups->add_option("--avoid", avoid, "permutation to avoid, e.g. cyc or (1 2 3 4)");
  groups->add_flag("--colors", colors, "list the color set");

  auto* gen = app.add_subcommand("gen", "generate a hypergraph");
  gen->add_option("kind", kind_text, "tight-cycle, twisted, godd, blowup or tournament3")
      ->required()
      ->check(CLI::IsMember({"tight-cycle", "twisted", "godd", "blowup", "tournament3"}));
  gen->add_option("--r", r);
  gen->add_option("--ell", ell);
  gen->add_option("--pi", pi_text);
  gen->add_option("--a", a);
  gen->add_option("--b", b);
  gen->add_option("--t", t, "blow-up factor");
  gen->add_option("--n", n);
  gen->add_option("--tournament", tournament, "rotational or transitive")
      ->check(CLI::IsMember({"rotational", "transitive"}));
  gen->add_option("--input", input);

  auto* check = app.add_subcommand("check", "hom-freeness for residues");
  check->add_option("--input", input)->required();
  check->add_option("--k", k_text, "residues: list or all")->required();

  auto* tc = app.add_subcommand("tc", "tight components and their groups");
  tc->add_option("--input", input)->required();

  auto* color = app.add_subcommand("color", "accordant coloring");
  color->add_option("--input", input)->required();
  color->add_option("--k", k_text, "residue; pi = cyc^k");
  color->add_option("--pi", pi_text);
  color->add_flag("--triples", triples, "also emit the triple coloring and check the round trip");

  auto* census = app.add_subcommand("census", "triangle census and inequality report");
  census->add_option("--input", input, "edge coloring file");
  census->add_flag("--random", random, "random coloring of --n vertices");
  census->add_option("--tournament", tournament, "purple tournament on --n vertices")
      ->check(CLI::IsMember({"rotational", "transitive"}));
  census->add_option("--n", n);
  census->add_option("--seed", seed);

  auto* fopt = app.add_subcommand("fopt", "grid maximization of f");
  fopt->add_option("--step", step, "N or 1/N");
  fopt->add_option("--region", region, "all, low, high-delta or slice");
  fopt->add_option("--refine", refine);

  auto* eopt = app.add_subcommand("eopt", "best complete oddly bipartite split");
  eopt->add_option("--n", n)->required();

  auto* search = app.add_subcommand("search", "exhaustive ex(n, C-hom)");
  search->add_option("--n", n)->required();
  search->add_option("--r", r);
  search->add_option("--k", k_text, "residues: list or all")->required();
  search->add_option("--budget", budget);
  search->add_flag("--canonical", canonical);
  search->add_flag("--unpruned", unpruned);
  search->add_option("--jobs", jobs);
  search->add_option("--max-witnesses", max_witnesses);

  auto* prune = app.add_subcommand("prune", "low-codegree pruning");
  prune->add_option("--input", input)->required();
  prune->add_option("--eps", eps)->required();
  prune->add_flag("--verify", verify, "check the short-connection bound");

  auto* epsclose = app.add_subcommand("epsclose", "closeness to the oddly bipartite construction");
  auto* walk = app.add_subcommand("walk", "build a walk through a triple set");
  for (auto* sub : {epsclose, walk}) {
    sub->add_option("--input", input)->required();
    sub->add_option("--a", a_text, "vertices of A, e.g. 0-5")->required();
    sub->add_option("--b", b_text, "vertices of B")->required();
    sub->add_option("--triples", triples_text, "triple file (default: all triples of A and B)");
    sub->add_option("--eps", eps)->required();
  }
  walk->add_option("--start", start_text)->required();
  walk->add_option("--end", end_text)->required();
  walk->add_option("--pattern", pattern_text, "sides of the free positions, e.g. BAAAB")->required();

  Context cx;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  cx.records = format == "records";
  cx.assert_mode = assert_mode;

  try {
    auto residues_for = [&](int arity) { return parse_residues(k_text, arity); };
    if (groups->parsed()) {
      do_groups(cx, r, avoid, colors);
    } else if (gen->parsed()) {
      Hypergraph g;
      if (kind_text == "tight-cycle") {
        g = tight_cycle(r, ell);
      } else if (kind_text == "twisted") {
        g = twisted_tight_cycle(r, ell, parse_permutation(pi_text.empty() ? "cyc" : pi_text, r));
      } else if (kind_text == "godd") {
        g = complete_oddly_bipartite(a, b);
      } else if (kind_text == "blowup") {
        g = blowup(load_graph(input), t);
      } else {
        g = tournament_3graph(tournament == "transitive" ? transitive_tournament(n) : rotational_tournament(n));
      }
      emit_graph(cx, g);
    } else if (check->parsed()) {
      auto g = load_graph(input);
      do_check(cx, g, residues_for(g.uniformity()));
    } else if (tc->parsed()) {
      do_tc(cx, load_graph(input));
    } else if (color->parsed()) {
      auto g = load_graph(input);
      if (k_text.empty() == pi_text.empty()) throw error(errc::domain, "give exactly one of --k and --pi");
      Permutation pi = pi_text.empty() ? Permutation::cyc(g.uniformity()).pow(normalize_residue(parse_int(k_text), g.uniformity()))
                                       : parse_permutation(pi_text, g.uniformity());
      do_color(cx, g, pi, triples);
    } else if (census->parsed()) {
      int sources = !input.empty() + random + !tournament.empty();
      if (sources != 1) throw error(errc::domain, "give exactly one of --input, --random and --tournament");
      EdgeColoring2 c;
      if (!input.empty()) {
        c = parse_edge_coloring(read_file(input));
      } else if (random) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        c = random_edge_coloring(n, rng);
      } else {
        if (tournament == "rotational" && n % 2 == 0) throw error(errc::domain, "rotational tournaments need odd n");
        c = purple_tournament(n, tournament == "rotational");
      }
      do_census(cx, c);
    } else if (fopt->parsed()) {
      do_fopt(cx, parse_step(step), parse_region(region), refine);
    } else if (eopt->parsed()) {
      auto e = e_opt(n);
      if (cx.records) {
        cx.emit(to_record(n, e));
      } else {
        cx.out << "e_opt(" << n << ") = " << e.count << "\n";
        for (auto [x, y] : e.splits) cx.out << "split " << x << " " << y << "\n";
      }
    } else if (search->parsed()) {
      SearchOptions opts;
      opts.budget = budget;
      opts.canonical = canonical;
      opts.jobs = jobs;
      opts.prune = !unpruned;
      opts.max_witnesses = max_witnesses;
      do_search(cx, n, r, residues_for(r), opts);
    } else if (prune->parsed()) {
      do_prune(cx, load_graph(input), eps, verify);
    } else if (epsclose->parsed() || walk->parsed()) {
      auto g = load_graph(input);
      auto av = parse_vertices(a_text), bv = parse_vertices(b_text);
      TripleSet ts = triples_text.empty() ? triples_within(g.vertex_count(), av, bv)
                                          : parse_triples(read_file(triples_text), g.vertex_count());
      if (epsclose->parsed())
        do_epsclose(cx, g, av, bv, ts, eps);
      else
        do_walk(cx, g, av, bv, ts, eps, parse_triple(start_text), parse_triple(end_text), parse_pattern(pattern_text));
    }
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    err << "lower bound: " << e.lower_bound() << "\n";
    return usage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const json::exception& e) {
    err << "error: parse: " << e.what() << "\n";
    return usage;
  }

  if (output.empty()) {
    out << cx.out.str();
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return usage;
    }
    f << cx.out.str();
  }
  return cx.status;
}

}  // namespace tightcycle::cli
