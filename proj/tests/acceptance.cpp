// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tightcycle/census.hpp"
#include "tightcycle/coloring.hpp"
#include "tightcycle/edge_coloring.hpp"
#include "tightcycle/extremal.hpp"

using namespace tightcycle;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = clock_type::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double dt = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("%s AC%d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), dt, o.note.str().empty() ? "" : ": ",
              o.note.str().c_str());
  std::fflush(stdout);
}

Hypergraph from_mask(int r, int n, unsigned mask) {
  std::vector<Edge> es;
  int i = 0;
  for (VertexMask m : detail::colex_edges(n, r)) {
    if (mask >> i & 1) es.push_back(edge_of_mask(m));
    ++i;
  }
  return Hypergraph(r, n, es);
}

// ---- AC1 ----

struct TableRow {
  const char* label;
  std::vector<std::vector<std::vector<int>>> gens;  // 1-based cycles per generator
  std::size_t order, class_size;
  bool avoids_cyc, avoids_cyc2;
};

const std::vector<TableRow>& s4_table() {
  static const std::vector<TableRow> rows{
      {"S1", {}, 1, 1, true, true},
      {"S2", {{{1, 2}}}, 2, 6, true, true},
      {"<(12)(34)>", {{{1, 2}, {3, 4}}}, 2, 3, true, false},
      {"A3", {{{1, 2, 3}}}, 3, 4, true, true},
      {"C4", {{{1, 2, 3, 4}}}, 4, 3, false, false},
      {"Klein-nonnormal", {{{1, 2}}, {{3, 4}}}, 4, 3, true, false},
      {"Klein-normal", {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}}, 4, 1, true, false},
      {"S3", {{{1, 2}}, {{1, 2, 3}}}, 6, 4, true, true},
      {"D4", {{{1, 2, 3, 4}}, {{1, 3}}}, 8, 3, false, false},
      {"A4", {{{1, 2, 3}}, {{1, 2}, {3, 4}}}, 12, 1, true, false},
      {"S4", {{{1, 2}}, {{1, 2, 3, 4}}}, 24, 1, false, false},
  };
  return rows;
}

void ac1(Outcome& o) {
  auto t0 = clock_type::now();
  const auto& cs = enumerate_subgroup_classes(4);
  double dt = seconds_since(t0);
  if (cs.size() != 11) return o.fail("class count " + std::to_string(cs.size()));
  auto cyc = Permutation::cyc(4);
  auto cyc2 = cyc.pow(2);
  std::set<std::size_t> seen;
  for (const auto& tr : s4_table()) {
    std::vector<oracle::Perm> gens;
    for (const auto& g : tr.gens) gens.push_back(oracle::from_cycles(4, g));
    auto h = oracle::closure(4, gens);
    // the table itself against brute force
    if (h.size() != tr.order) o.fail(std::string(tr.label) + ": order");
    if (oracle::conjugacy_class(h, 4).size() != tr.class_size) o.fail(std::string(tr.label) + ": class size");
    if (!oracle::contains_conjugate_of(h, cyc.images()) != tr.avoids_cyc) o.fail(std::string(tr.label) + ": cyc flag");
    if (!oracle::contains_conjugate_of(h, cyc2.images()) != tr.avoids_cyc2) o.fail(std::string(tr.label) + ": cyc2 flag");
    // matching library class; the table is not in library order
    std::vector<Permutation> el;
    for (const auto& p : h) el.emplace_back(p);
    std::size_t idx = class_index_of(PermGroup::from_elements(4, el));
    seen.insert(idx);
    const auto& c = cs[idx];
    if (c.order() != tr.order || c.class_size != tr.class_size || avoids(c.representative, cyc) != tr.avoids_cyc ||
        avoids(c.representative, cyc2) != tr.avoids_cyc2)
      o.fail(std::string(tr.label) + ": library cell mismatch");
    if (tr.label[0] != '<' && c.name != tr.label) o.fail(std::string(tr.label) + ": library name " + c.name);
  }
  if (seen.size() != 11) o.fail("table rows do not hit every class");
  if (dt >= 1.0) o.fail("enumeration took " + std::to_string(dt) + "s");
}

// ---- AC2 ----

std::set<std::string> names(const std::vector<SubgroupClass>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.name);
  return out;
}

// Conjugacy classes of maximal pi-avoiding subgroups, by brute force.
std::size_t oracle_maximal_count(int r, const oracle::Perm& pi, const std::vector<SubgroupClass>& lib, bool& lib_ok) {
  auto subs = oracle::all_subgroups(r);
  std::vector<oracle::Group> avoiders;
  for (const auto& h : subs)
    if (!oracle::contains_conjugate_of(h, pi)) avoiders.push_back(h);
  std::set<std::set<oracle::Group>> classes;
  for (const auto& h : avoiders) {
    bool maximal = true;
    for (const auto& g : avoiders)
      if (g.size() > h.size() && oracle::embeds(h, g, r)) maximal = false;
    if (maximal) classes.insert(oracle::conjugacy_class(h, r));
  }
  lib_ok = true;
  for (const auto& c : lib) {
    auto cls = oracle::conjugacy_class(oracle::to_group(c.representative), r);
    if (!classes.count(cls)) lib_ok = false;
  }
  return classes.size();
}

void ac2(Outcome& o) {
  struct Case {
    int r, k;
    std::set<std::string> expect;
  };
  std::vector<Case> cases{{2, 1, {"S1"}}, {3, 1, {"S2"}}, {4, 2, {"S3"}}, {4, 1, {"S3", "A4", "Klein-nonnormal"}}};
  for (const auto& c : cases) {
    auto pi = Permutation::cyc(c.r).pow(c.k);
    auto lib = maximal_avoiding_classes(c.r, pi);
    std::string tag = "r=" + std::to_string(c.r) + " k=" + std::to_string(c.k);
    if (names(lib) != c.expect) o.fail(tag + ": names");
    bool lib_ok = false;
    if (oracle_maximal_count(c.r, pi.images(), lib, lib_ok) != lib.size() || !lib_ok) o.fail(tag + ": brute force disagrees");
  }
}

// ---- AC3 ----

void ac3(Outcome& o) {
  auto t0 = clock_type::now();
  long long checked = 0;
  for (int r : {4, 3, 2}) {
    int m = static_cast<int>(detail::colex_edges(5, r).size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      auto g = from_mask(r, 5, mask);
      for (int k = 0; k < r; ++k) {
        auto pi = Permutation::cyc(r).pow(k);
        bool free = is_hom_free(g, k);
        auto chi = build_accordant_coloring(g, pi);
        ++checked;
        if (free != chi.has_value()) {
          o.fail("r=" + std::to_string(r) + " mask=" + std::to_string(mask) + " k=" + std::to_string(k));
          return;
        }
        if (chi && !oracle::valid_accordant(g, *chi, pi.images())) {
          o.fail("invalid coloring at r=" + std::to_string(r) + " mask=" + std::to_string(mask));
          return;
        }
      }
    }
  }
  double dt = seconds_since(t0);
  o.note << checked << " (graph, residue) pairs";
  if (dt >= 300) o.fail(" too slow");
}

// ---- AC4 ----

void ac4(Outcome& o) {
  long long checked = 0;
  for (int n = 2; n <= 6; ++n) {
    auto pairs = detail::colex_edges(n, 2);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      auto g = from_mask(2, n, mask);
      std::vector<std::pair<int, int>> es;
      for (const auto& e : g.edges()) es.push_back({e[0], e[1]});
      ++checked;
      if (is_hom_free(g, 1) != oracle::bipartite(n, es)) return o.fail("n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  }
  o.note << checked << " graphs";
}

// ---- AC5 ----

void ac5(Outcome& o) {
  for (int a = 3; a <= 6; ++a)
    for (int b = 3; b <= 6; ++b) {
      auto g = complete_oddly_bipartite(a, b);
      std::string tag = "a=" + std::to_string(a) + " b=" + std::to_string(b);
      for (int k = 1; k <= 3; ++k)
        if (!is_hom_free(g, k)) o.fail(tag + " k=" + std::to_string(k));
      if (a >= 4 && b >= 4) {
        if (!contains_hom_cycle_of_length(g, 8)) o.fail(tag + ": no C8");
        auto w = hom_cycle_walk_of_length(g, 8);
        if (!w || !oracle::valid_closed_walk(g, w->vertices, 8)) o.fail(tag + ": C8 witness invalid");
      }
    }
}

// ---- AC6 ----

void ac6(Outcome& o) {
  const long long frozen[] = {0, 0, 0, 0, 1, 4, 10};
  for (int n = 4; n <= 6; ++n) {
    SearchOptions opts;
    opts.canonical = n == 6;
    auto a = brute_force_ex_hom(n, 4, {1}, opts);
    auto b = brute_force_ex_hom(n, 4, {1}, opts);
    std::string tag = "n=" + std::to_string(n);
    double cap = std::pow(static_cast<double>(n), 4) / 48;
    if (!(static_cast<double>(a.max_edges) < cap)) o.fail(tag + ": not below n^4/48");
    if (a.max_edges < e_opt(n).count) o.fail(tag + ": below e_opt");
    if (a.max_edges != b.max_edges || a.optimal_count != b.optimal_count || a.explored != b.explored)
      o.fail(tag + ": unstable");
    if (a.max_edges != frozen[n]) o.fail(tag + ": value " + std::to_string(a.max_edges));
    for (const auto& w : a.witnesses)
      if (!oracle::hom_free(w, 1)) o.fail(tag + ": witness not hom-free");
    o.note << tag << " ex=" << a.max_edges << " ";
  }
}

// ---- AC7 ----

bool six_pass(const EdgeColoring2& c, std::string& why) {
  auto t = count_triangle_types(c);
  auto brute = oracle::triangle_counts(c);
  if (brute.green != t.t_green || brute.purple != t.t_purple || brute.cherry != t.t_cherry) {
    why = "triangle census disagrees with direct count";
    return false;
  }
  auto rep = check_color_inequalities(t);
  for (std::size_t i = 0; i < rep.items.size(); ++i)
    if (!rep.items[i].pass) {
      why = "inequality " + std::to_string(i + 1) + " fails";
      return false;
    }
  return true;
}

void ac7(Outcome& o) {
  const PairColor colors[] = {PairColor::red, PairColor::blue, PairColor::green, PairColor::purple};
  auto pairs = detail::colex_edges(4, 2);
  long long exhaustive = 0;
  // red and purple come in two orientations: 6 choices per pair
  for (int code = 0; code < 6 * 6 * 6 * 6 * 6 * 6; ++code) {
    EdgeColoring2 c(4);
    int x = code;
    for (VertexMask m : pairs) {
      auto e = edge_of_mask(m);
      int choice = x % 6;
      x /= 6;
      if (choice < 4)
        c.set_directed(e[0], e[1], colors[choice]);
      else
        c.set_directed(e[1], e[0], choice == 4 ? PairColor::red : PairColor::purple);
    }
    std::string why;
    ++exhaustive;
    if (!six_pass(c, why)) return o.fail("n=4 code " + std::to_string(code) + ": " + why);
  }
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> nd(5, 40);
  for (int i = 0; i < 10000; ++i) {
    int n = nd(rng);
    auto c = random_edge_coloring(n, rng);
    std::string why;
    if (!six_pass(c, why)) return o.fail("random #" + std::to_string(i) + ": " + why);
  }
  auto rot = count_triangle_types(purple_tournament(5, true));
  if (rot.t_purple != 5 || rot.t_purple != 5 * 4 * 6 / 24) o.fail("rotational tournament T=" + std::to_string(rot.t_purple));
  o.note << exhaustive << " exhaustive + 10000 random";
}

// ---- AC8 ----

void ac8(Outcome& o) {
  auto t0 = clock_type::now();
  auto c = maximize_f_on_R(200, FRegion::all, 2);
  auto x = c.argmax.coords();
  if (!(c.max_value >= 0.5 - 1e-6 && c.max_value <= 0.5 + 1e-9)) o.fail("max out of range");
  const double target[] = {0.25, 0.25, 0.25, 0};
  for (int i = 0; i < 4; ++i)
    if (std::abs(x[i] - target[i]) > 1e-2) o.fail("argmax too far");
  if (std::abs(oracle::f_value(x[0], x[1], x[2], x[3]) - c.max_value) > 1e-12) o.fail("max disagrees with direct f");
  auto low = maximize_f_on_R(200, FRegion::low_gamma_delta, 2);
  auto high = maximize_f_on_R(200, FRegion::high_delta, 2);
  if (!(low.max_value < 0.5)) o.fail("low region reaches 1/2");
  if (!(high.max_value < 0.5)) o.fail("high-delta region reaches 1/2");
  double dt = seconds_since(t0);
  if (dt >= 120) o.fail("too slow");
  char buf[160];
  std::snprintf(buf, sizeof buf, "max %.12f, low %.6f, high-delta %.6f", c.max_value, low.max_value, high.max_value);
  o.note << buf;
}

// ---- AC9 ----

void ac9(Outcome& o) {
  std::mt19937 rng(909);
  long long pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int r = 2 + trial % 3;
    int n = std::uniform_int_distribution<int>(r, 7)(rng);
    double p = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
    auto g = oracle::random_hypergraph(r, n, p, rng);
    if (g.edge_count() == 0) continue;
    TightAnalysis ta(g);
    auto cyc = Permutation::cyc(r);
    auto oriented = oracle::oriented_edges(g);
    for (const auto& x : oriented) {
      auto reach = oracle::walk_residues_from(g, x);
      int sx = ta.state_of(Tuple(x.begin(), x.end()));
      for (const auto& y : oriented) {
        int sy = ta.state_of(Tuple(y.begin(), y.end()));
        auto it = reach.find(y);
        unsigned bits = it == reach.end() ? 0u : it->second;
        for (int s = 0; s < r; ++s) {
          ++pairs;
          bool walk = bits >> s & 1;
          bool tc = ta.tc_class(sy) == ta.tc_class(ta.act(cyc.pow(-s), sx));
          if (walk != tc) return o.fail("trial " + std::to_string(trial) + " residue " + std::to_string(s));
        }
      }
    }
  }
  o.note << pairs << " (x, y, residue) triples";
}

// ---- AC10 ----

void ac10(Outcome& o) {
  std::mt19937 rng(1010);
  int runs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 9)(rng);
    double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
    auto g = oracle::random_hypergraph(4, n, p, rng);
    for (double eps : {0.2, 0.3, 0.5}) {
      ++runs;
      auto pr = prune_low_codegree(g, eps);
      std::string tag = "trial " + std::to_string(trial) + " eps " + std::to_string(eps);
      if (oracle::sorted_edges(pr.pruned) != oracle::prune(g, eps)) o.fail(tag + ": pruned graph differs from naive");
      double cap = eps * n * static_cast<double>(binomial(n, 3));
      if (static_cast<double>(pr.deleted) > cap + 1e-9) o.fail(tag + ": deleted too many");
      if (!verify_short_connection_bound(pr.pruned, eps).holds) o.fail(tag + ": short connection bound fails");
    }
  }
  o.note << runs << " runs";
}

// ---- AC11 ----

void ac11(Outcome& o) {
  std::mt19937 rng(1111);
  long long validated = 0, bad_count = 0;
  std::string first;
  auto bad = [&](const std::string& why) {
    if (bad_count++ == 0) first = why;
  };
  for (int i = 0; i < 10000; ++i) {
    int r = 2 + i % 3;
    int n = std::uniform_int_distribution<int>(r, r == 4 ? 6 : 7)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    auto g = oracle::random_hypergraph(r, n, p, rng);
    int k = std::uniform_int_distribution<int>(0, r - 1)(rng);
    std::string tag = "input " + std::to_string(i);
    // closed walks
    auto w = find_hom_cycle_witness(g, k);
    bool oracle_free = oracle::hom_free(g, k);
    if (w) {
      ++validated;
      if (!oracle::valid_closed_walk(g, w->vertices, w->stretch) || normalize_residue(w->stretch, r) != k || w->stretch <= 0)
        bad(tag + ": bad cycle witness");
      if (oracle_free) bad(tag + ": witness for a hom-free graph");
    } else if (!oracle_free) {
      bad(tag + ": missed a cycle");
    }
    // colorings
    auto chi = build_accordant_coloring(g, Permutation::cyc(r).pow(k));
    if (chi) {
      ++validated;
      if (!oracle::valid_accordant(g, *chi, Permutation::cyc(r).pow(k).images())) bad(tag + ": bad coloring");
    }
    // walks between random oriented edges
    auto oriented = oracle::oriented_edges(g);
    if (oriented.size() >= 2) {
      auto x = oriented[rng() % oriented.size()], y = oriented[rng() % oriented.size()];
      auto rw = replacement_walk(g, Tuple(x.begin(), x.end()), Tuple(y.begin(), y.end()));
      auto reach = oracle::walk_residues_from(g, x);
      bool reachable = reach.count(y) && (reach[y] & 1u);
      if (rw) {
        ++validated;
        bool ends = std::equal(x.begin(), x.end(), rw->vertices.begin()) &&
                    std::equal(y.begin(), y.end(), rw->vertices.end() - r);
        if (!oracle::valid_walk(g, rw->vertices, rw->stretch) || !ends || rw->stretch % r != 0) bad(tag + ": bad walk");
      }
      if (rw.has_value() != reachable) bad(tag + ": walk existence disagrees");
    }
    // random vertex sequences: library validator against the naive one
    std::vector<int> seq(r + std::uniform_int_distribution<int>(0, 6)(rng));
    for (auto& v : seq) v = static_cast<int>(rng() % n);
    WalkWitness ww{seq, static_cast<int>(seq.size()) - r};
    if (validate_walk(g, ww) != oracle::valid_walk(g, seq, ww.stretch)) bad(tag + ": walk validator disagrees");
    if (validate_closed_walk(g, ww) != (ww.stretch > 0 && oracle::valid_closed_walk(g, seq, ww.stretch)))
      bad(tag + ": closed walk validator disagrees");
  }
  o.note << validated << " witnesses validated, " << bad_count << " failures";
  if (bad_count) o.fail(" first: " + first);
}

}  // namespace

int main() {
  report(1, "S4 subgroup class table", ac1);
  report(2, "maximal avoiding classes", ac2);
  report(3, "hom-free iff accordant coloring on 5 vertices", ac3);
  report(4, "graphs: hom-free iff bipartite", ac4);
  report(5, "oddly bipartite graphs", ac5);
  report(6, "exhaustive extremal numbers", ac6);
  report(7, "color inequalities", ac7);
  report(8, "grid maximum of f", ac8);
  report(9, "walk search vs tight-component criterion", ac9);
  report(10, "low-codegree pruning", ac10);
  report(11, "fuzzed witness validation", ac11);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
