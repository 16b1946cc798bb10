#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tightcycle/error.hpp"
#include "tightcycle/hypergraph.hpp"
#include "tightcycle/tightconn.hpp"

namespace tightcycle {

// ---- brute-force ex(n, C-hom) ----

struct SearchOptions {
  // Without canonical mode: C(n,r) must not exceed this. With it: at most 2^budget candidates.
  int budget = 20;
  bool canonical = false;
  int jobs = 1;
  // When false every edge subset is tested (no monotone pruning); used to cross-check.
  bool prune = true;
  std::size_t max_witnesses = 64;
};

struct SearchResult {
  int n = 0, r = 0;
  std::vector<int> residues;
  long long max_edges = 0;
  std::vector<Hypergraph> witnesses;
  // Labeled optimal graphs found, or isomorphism classes in canonical mode.
  long long optimal_count = 0;
  long long explored = 0;
  bool canonical = false;
};

namespace detail {

using EdgeSet = std::vector<VertexMask>;

inline std::vector<VertexMask> colex_edges(int n, int r) {
  std::vector<VertexMask> out;
  if (n < r) return out;
  // Gosper's hack walks r-subsets in increasing mask order, which is colex.
  VertexMask m = (VertexMask{1} << r) - 1;
  VertexMask limit = n == 64 ? 0 : VertexMask{1} << n;
  while (true) {
    out.push_back(m);
    VertexMask c = m & (~m + 1), rr = m + c;
    if (rr == 0) break;
    m = (((rr ^ m) >> 2) / c) | rr;
    if (limit && m >= limit) break;
  }
  return out;
}

inline Hypergraph from_masks(int r, int n, const EdgeSet& masks) {
  std::vector<Edge> es;
  es.reserve(masks.size());
  for (VertexMask m : masks) es.push_back(edge_of_mask(m));
  return Hypergraph(r, n, std::move(es));
}

inline bool hom_free_all(const Hypergraph& g, const std::vector<int>& residues) {
  for (int k : residues)
    if (!is_hom_free(g, k)) return false;
  return true;
}

// Keeps the lexicographically least optimal edge sets, capped.
struct Tally {
  long long best = -1, count = 0, explored = 0;
  std::set<EdgeSet> kept;
  std::size_t cap = 64;

  void offer(const EdgeSet& s) {
    long long sz = static_cast<long long>(s.size());
    if (sz < best) return;
    if (sz > best) {
      best = sz;
      count = 0;
      kept.clear();
    }
    ++count;
    EdgeSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    kept.insert(std::move(sorted));
    if (kept.size() > cap) kept.erase(std::prev(kept.end()));
  }

  void merge(const Tally& o) {
    explored += o.explored;
    if (o.best < best) return;
    if (o.best > best) {
      best = o.best;
      count = 0;
      kept.clear();
    }
    count += o.count;
    kept.insert(o.kept.begin(), o.kept.end());
    while (kept.size() > cap) kept.erase(std::prev(kept.end()));
  }
};

struct DfsFrame {
  std::size_t next;
  EdgeSet chosen;
};

class Searcher {
 public:
  Searcher(int n, int r, std::vector<int> residues, std::vector<VertexMask> edges)
      : n_(n), r_(r), residues_(std::move(residues)), edges_(std::move(edges)) {}

  bool admissible(const EdgeSet& s) const { return hom_free_all(from_masks(r_, n_, s), residues_); }

  // Include edge i (if still hom-free) before excluding it.
  void dfs(std::size_t i, EdgeSet& chosen, Tally& t) const {
    if (i == edges_.size()) {
      t.offer(chosen);
      return;
    }
    chosen.push_back(edges_[i]);
    ++t.explored;
    if (admissible(chosen)) dfs(i + 1, chosen, t);
    chosen.pop_back();
    dfs(i + 1, chosen, t);
  }

  // Same traversal stopped at depth d, collecting frontier frames in DFS order.
  void frontier(std::size_t i, std::size_t d, EdgeSet& chosen, Tally& t, std::vector<DfsFrame>& out) const {
    if (i == d || i == edges_.size()) {
      out.push_back({i, chosen});
      return;
    }
    chosen.push_back(edges_[i]);
    ++t.explored;
    if (admissible(chosen)) frontier(i + 1, d, chosen, t, out);
    chosen.pop_back();
    frontier(i + 1, d, chosen, t, out);
  }

  std::size_t edge_total() const { return edges_.size(); }
  VertexMask edge(std::size_t i) const { return edges_[i]; }

 private:
  int n_, r_;
  std::vector<int> residues_;
  std::vector<VertexMask> edges_;
};

template <class F>
void run_parallel(std::size_t count, int jobs, F&& work) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < count; i += jobs) work(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Edges added greedily in colex order while the graph stays hom-free.
inline long long greedy_hom_free_edges(int n, int r, const std::vector<int>& residues) {
  detail::EdgeSet s;
  for (VertexMask m : detail::colex_edges(n, r)) {
    s.push_back(m);
    if (!detail::hom_free_all(detail::from_masks(r, n, s), residues)) s.pop_back();
  }
  return static_cast<long long>(s.size());
}

// ---- canonical forms ----

// Minimum sorted edge-mask list over relabelings that respect a
// refined vertex coloring of the vertex-edge incidence structure.
inline std::vector<VertexMask> canonical_form(const Hypergraph& g) {
  int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<long long> color(n, 0);
  for (int v = 0; v < n; ++v) color[v] = vertex_degree(g, v);
  auto relabel = [&](std::vector<std::vector<long long>> sig) {
    std::vector<std::vector<long long>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<long long> out(n);
    for (int v = 0; v < n; ++v)
      out[v] = std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin();
    return out;
  };
  color = relabel([&] {
    std::vector<std::vector<long long>> s(n);
    for (int v = 0; v < n; ++v) s[v] = {color[v]};
    return s;
  }());
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long long>> sig(n);
    for (int v = 0; v < n; ++v) sig[v] = {color[v]};
    std::vector<std::vector<std::vector<long long>>> per(n);
    for (const auto& e : g.edges()) {
      std::vector<long long> ec;
      for (Vertex u : e) ec.push_back(color[u]);
      std::sort(ec.begin(), ec.end());
      for (Vertex u : e) per[u].push_back(ec);
    }
    for (int v = 0; v < n; ++v) {
      std::sort(per[v].begin(), per[v].end());
      sig[v].push_back(-1);
      for (auto& ec : per[v]) {
        sig[v].insert(sig[v].end(), ec.begin(), ec.end());
        sig[v].push_back(-2);
      }
    }
    auto next = relabel(sig);
    long long before = *std::max_element(color.begin(), color.end());
    long long after = *std::max_element(next.begin(), next.end());
    color = next;
    if (after == before) break;
  }
  // cells in color order; every ordering inside each cell is tried
  std::vector<std::vector<int>> cells;
  {
    std::map<long long, std::vector<int>> by;
    for (int v = 0; v < n; ++v) by[color[v]].push_back(v);
    for (auto& [c, vs] : by) cells.push_back(vs);
  }
  std::vector<VertexMask> best;
  bool have = false;
  std::vector<int> label(n);
  std::function<void(std::size_t, int)> go = [&](std::size_t ci, int offset) {
    if (ci == cells.size()) {
      std::vector<VertexMask> enc;
      enc.reserve(g.edge_count());
      for (const auto& e : g.edges()) {
        VertexMask m = 0;
        for (Vertex u : e) m |= VertexMask{1} << label[u];
        enc.push_back(m);
      }
      std::sort(enc.begin(), enc.end());
      if (!have || enc < best) {
        best = std::move(enc);
        have = true;
      }
      return;
    }
    std::vector<int> cell = cells[ci];
    std::sort(cell.begin(), cell.end());
    do {
      for (std::size_t j = 0; j < cell.size(); ++j) label[cell[j]] = offset + static_cast<int>(j);
      go(ci + 1, offset + static_cast<int>(cell.size()));
    } while (std::next_permutation(cell.begin(), cell.end()));
  };
  go(0, 0);
  return best;
}

inline Hypergraph canonical_graph(const Hypergraph& g) {
  return detail::from_masks(g.uniformity(), g.vertex_count(), canonical_form(g));
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  return a.uniformity() == b.uniformity() && a.vertex_count() == b.vertex_count() &&
         a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

namespace detail {

inline SearchResult canonical_search(int n, int r, const std::vector<int>& residues, const SearchOptions& opts) {
  SearchResult res;
  auto all = colex_edges(n, r);
  long long limit = opts.budget >= 62 ? (1LL << 62) : (1LL << opts.budget);
  std::set<EdgeSet> level{EdgeSet{}};
  long long best = 0;
  std::set<EdgeSet> best_level = level;
  while (!level.empty()) {
    std::set<EdgeSet> candidates;
    for (const auto& s : level)
      for (VertexMask m : all) {
        if (std::find(s.begin(), s.end(), m) != s.end()) continue;
        EdgeSet t = s;
        t.push_back(m);
        candidates.insert(canonical_form(from_masks(r, n, t)));
      }
    std::vector<EdgeSet> cand(candidates.begin(), candidates.end());
    if (res.explored + static_cast<long long>(cand.size()) > limit)
      throw budget_error("canonical search exceeded 2^" + std::to_string(opts.budget) + " candidates", best);
    res.explored += static_cast<long long>(cand.size());
    std::vector<char> ok(cand.size(), 0);
    run_parallel(cand.size(), opts.jobs, [&](std::size_t i) { ok[i] = hom_free_all(from_masks(r, n, cand[i]), residues); });
    std::set<EdgeSet> next;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (ok[i]) next.insert(cand[i]);
    if (next.empty()) break;
    level = std::move(next);
    best = static_cast<long long>(level.begin()->size());
    best_level = level;
  }
  res.max_edges = best;
  res.optimal_count = static_cast<long long>(best_level.size());
  for (const auto& s : best_level) {
    if (res.witnesses.size() >= opts.max_witnesses) break;
    res.witnesses.push_back(from_masks(r, n, s));
  }
  return res;
}

}  // namespace detail

inline SearchResult brute_force_ex_hom(int n, int r, std::vector<int> residues, const SearchOptions& opts = {}) {
  detail::check_arity(r);
  if (n < 0 || n > max_vertices) throw error(errc::domain, "vertex count out of range");
  if (residues.empty()) throw error(errc::domain, "no residues requested");
  for (int& k : residues) k = normalize_residue(k, r);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());

  SearchResult res;
  if (opts.canonical) {
    res = detail::canonical_search(n, r, residues, opts);
  } else {
    long long m = binomial(n, r);
    if (m > opts.budget)
      throw budget_error("C(" + std::to_string(n) + "," + std::to_string(r) + ") = " + std::to_string(m) +
                             " exceeds budget " + std::to_string(opts.budget),
                         greedy_hom_free_edges(n, r, residues));
    auto edges = detail::colex_edges(n, r);
    detail::Tally total;
    total.cap = opts.max_witnesses;
    if (!opts.prune) {
      std::size_t count = std::size_t{1} << edges.size();
      std::vector<detail::Tally> parts(std::min<std::size_t>(count, 64));
      for (auto& p : parts) p.cap = opts.max_witnesses;
      detail::run_parallel(parts.size(), opts.jobs, [&](std::size_t part) {
        for (std::size_t bits = part; bits < count; bits += parts.size()) {
          detail::EdgeSet s;
          for (std::size_t i = 0; i < edges.size(); ++i)
            if (bits >> i & 1) s.push_back(edges[i]);
          ++parts[part].explored;
          if (detail::hom_free_all(detail::from_masks(r, n, s), residues)) parts[part].offer(s);
        }
      });
      for (auto& p : parts) total.merge(p);
    } else {
      detail::Searcher searcher(n, r, residues, edges);
      std::vector<detail::DfsFrame> frames;
      detail::EdgeSet chosen;
      searcher.frontier(0, std::min<std::size_t>(edges.size(), 6), chosen, total, frames);
      std::vector<detail::Tally> parts(frames.size());
      detail::run_parallel(frames.size(), opts.jobs, [&](std::size_t i) {
        parts[i].cap = opts.max_witnesses;
        detail::EdgeSet c = frames[i].chosen;
        searcher.dfs(frames[i].next, c, parts[i]);
      });
      for (auto& p : parts) total.merge(p);
    }
    res.max_edges = total.best;
    res.optimal_count = total.count;
    res.explored = total.explored;
    for (const auto& s : total.kept) res.witnesses.push_back(detail::from_masks(r, n, s));
  }
  res.n = n;
  res.r = r;
  res.residues = residues;
  res.canonical = opts.canonical;
  return res;
}

// ---- greedy minimum-degree refinement ----

struct MinDegreeResult {
  std::vector<Vertex> kept;
  std::vector<Vertex> removed;  // in removal order
  int iterations = 0;
};

inline MinDegreeResult min_degree_refine(const Hypergraph& g, double c, double eps) {
  if (!(c > 0 && c <= 1)) throw error(errc::domain, "density must lie in (0,1]");
  if (!(eps > 0)) throw error(errc::domain, "eps must be positive");
  int n = g.vertex_count(), r = g.uniformity();
  VertexMask alive = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  std::vector<long long> deg(n, 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (Vertex v : g.edges()[i]) ++deg[v];
  std::vector<char> edge_alive(g.edge_count(), 1);
  MinDegreeResult out;
  double rf = static_cast<double>(factorial(r - 1));
  while (alive) {
    int m = std::popcount(alive);
    double threshold = (c - eps) * std::pow(static_cast<double>(m - 1), r - 1) / rf;
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if ((alive >> v & 1) && static_cast<double>(deg[v]) <= threshold) pick = v;
    if (pick < 0) break;
    alive &= ~(VertexMask{1} << pick);
    out.removed.push_back(pick);
    ++out.iterations;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (edge_alive[i] && (g.edge_mask(i) >> pick & 1)) {
        edge_alive[i] = 0;
        for (Vertex u : g.edges()[i]) --deg[u];
      }
  }
  out.kept = edge_of_mask(alive);
  return out;
}

// ---- low-codegree pruning ----

struct PruneResult {
  Hypergraph pruned;
  long long deleted = 0;
  double eps = 0;
  // eps*n*C(n,r-1)
  double deletion_bound = 0;
};

inline bool low_codegree(long long codeg, double eps, int n) { return static_cast<double>(codeg) <= eps * n + 1e-9; }

inline PruneResult prune_low_codegree(const Hypergraph& g, double eps) {
  if (!(eps > 0)) throw error(errc::domain, "eps must be positive");
  int n = g.vertex_count(), r = g.uniformity();
  std::map<VertexMask, std::vector<std::size_t>> holders;
  std::vector<char> alive(g.edge_count(), 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    VertexMask m = g.edge_mask(i);
    for (Vertex v : g.edges()[i]) holders[m & ~(VertexMask{1} << v)].push_back(i);
  }
  std::map<VertexMask, long long> codeg;
  for (auto& [s, es] : holders) codeg[s] = static_cast<long long>(es.size());
  PruneResult out;
  out.eps = eps;
  out.deletion_bound = eps * n * static_cast<double>(binomial(n, r - 1));
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [s, d] : codeg) {
      if (d == 0 || !low_codegree(d, eps, n)) continue;
      for (std::size_t i : holders[s]) {
        if (!alive[i]) continue;
        alive[i] = 0;
        ++out.deleted;
        VertexMask m = g.edge_mask(i);
        for (Vertex v : g.edges()[i]) --codeg[m & ~(VertexMask{1} << v)];
      }
      changed = true;
    }
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (alive[i]) kept.push_back(g.edges()[i]);
  out.pruned = Hypergraph(r, n, std::move(kept));
  return out;
}

inline bool is_codegree_fixpoint(const Hypergraph& g, double eps) {
  std::map<VertexMask, long long> codeg;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    VertexMask m = g.edge_mask(i);
    for (Vertex v : g.edges()[i]) ++codeg[m & ~(VertexMask{1} << v)];
  }
  for (auto& [s, d] : codeg)
    if (low_codegree(d, eps, g.vertex_count())) return false;
  return true;
}

struct ShortConnectionReport {
  bool holds = true;
  double bound = 0;     // (2r+1) eps^{-r}
  int max_replacements = 0;
  long long pairs_checked = 0;
};

// Fewest single-coordinate replacements between tightly connected oriented
// edges, against (2r+1) eps^{-r}. Replacement distance commutes with
// permuting coordinates, so sources can be sorted orientations.
inline ShortConnectionReport verify_short_connection_bound(const Hypergraph& g, double eps) {
  if (!(eps > 0)) throw error(errc::domain, "eps must be positive");
  if (!is_codegree_fixpoint(g, eps)) throw error(errc::precondition, "graph is not a low-codegree fixpoint at this eps");
  int r = g.uniformity();
  ShortConnectionReport rep;
  rep.bound = (2 * r + 1) * std::pow(eps, -r);
  if (g.edge_count() == 0) return rep;
  TightAnalysis ta(g);
  int per = static_cast<int>(factorial(r));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    int s = static_cast<int>(e) * per;
    auto dist = ta.replacement_distances(s);
    for (int t = 0; t < ta.state_count(); ++t) {
      if (ta.tc_class(t) != ta.tc_class(s)) continue;
      ++rep.pairs_checked;
      if (dist[t] < 0) {
        rep.holds = false;
        continue;
      }
      rep.max_replacements = std::max(rep.max_replacements, dist[t]);
      if (dist[t] > rep.bound) rep.holds = false;
    }
  }
  return rep;
}

struct ResidueDeletion {
  Hypergraph pruned;
  long long deleted = 0;
  double eps = 0;
  double deletion_bound = 0;  // 2r L^{-1/r} n^r
  int residue = 0;
};

inline ResidueDeletion delete_to_residue_free(const Hypergraph& g, int L) {
  int r = g.uniformity();
  if (L <= r) throw error(errc::invalid_length, "length must exceed the uniformity");
  if (contains_hom_cycle_of_length(g, L))
    throw error(errc::not_hom_free, "graph contains a homomorphic tight cycle of length " + std::to_string(L));
  int k = L % r;
  ResidueDeletion out;
  out.residue = k;
  out.eps = std::pow(static_cast<double>(r) * (2 * r + 1) / (L - k), 1.0 / r);
  auto p = prune_low_codegree(g, out.eps);
  out.pruned = std::move(p.pruned);
  out.deleted = p.deleted;
  int n = g.vertex_count();
  out.deletion_bound = 2.0 * r * std::pow(static_cast<double>(L), -1.0 / r) * std::pow(static_cast<double>(n), r);
  if (!is_hom_free(out.pruned, k)) throw std::logic_error("pruned graph still contains a residue walk");
  if (static_cast<double>(out.deleted) > out.deletion_bound + 1e-9) throw std::logic_error("deleted more edges than allowed");
  return out;
}

// ---- closeness to the oddly bipartite construction ----

enum class Side { A, B };

inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

struct SideViolation {
  std::vector<Vertex> where;  // a pair or a single vertex
  Side side;
  long long degree, required;
};

struct TripleViolation {
  Triple triple;
  Side side;
  long long degree, required;
};

struct EpsCloseReport {
  double epsilon = 0;
  std::vector<TripleViolation> cond1;
  std::vector<SideViolation> cond2, cond3;
  // Sufficient conditions, evaluated only when min(|A|,|B|) >= n/3.
  bool primed_evaluated = false;
  std::vector<Pair> cond2_primed;
  std::vector<Vertex> cond3_primed;
  bool close() const { return cond1.empty() && cond2.empty() && cond3.empty(); }
};

// Smallest integer d with d >= (1-eps)*size.
inline long long required_count(double eps, long long size) {
  return static_cast<long long>(std::ceil((1 - eps) * static_cast<double>(size) - 1e-9));
}

namespace detail {

inline VertexMask side_mask(const std::vector<Vertex>& vs, int n, const char* what) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= n) throw error(errc::invalid_partition, std::string(what) + " has a vertex out of range");
    m |= VertexMask{1} << v;
  }
  return m;
}


}  // namespace detail

// Sizes are taken over the vertices a query can actually reach, e.g.
// |U minus xyz|, so the exact construction is 0-close.
inline EpsCloseReport check_eps_close(const Hypergraph& g, const std::vector<Vertex>& A, const std::vector<Vertex>& B,
                                      const TripleSet& T, double eps) {
  if (g.uniformity() != 4) throw error(errc::arity_mismatch, "closeness is defined for 4-graphs");
  if (!(eps >= 0)) throw error(errc::domain, "eps must be nonnegative");
  int n = g.vertex_count();
  VertexMask am = detail::side_mask(A, n, "A"), bm = detail::side_mask(B, n, "B");
  if (am & bm) throw error(errc::invalid_partition, "A and B overlap");
  VertexMask ab = am | bm;
  for (const auto& t : T.triples())
    for (Vertex v : t)
      if (v >= n || !(ab >> v & 1)) throw error(errc::invalid_partition, "triple outside A and B");
  EpsCloseReport rep;
  rep.epsilon = eps;
  long long na = std::popcount(am), nb = std::popcount(bm);

  for (const auto& t : T.triples()) {
    VertexMask tm = mask_of({t[0], t[1], t[2]});
    bool odd = std::popcount(tm & am) % 2 == 1;
    VertexMask um = odd ? bm : am;
    long long deg = 0;
    for (Vertex u = 0; u < n; ++u)
      if ((um >> u & 1) && !(tm >> u & 1) && g.has_edge_mask(tm | VertexMask{1} << u)) ++deg;
    long long req = required_count(eps, std::popcount(um & ~tm));
    if (deg < req) rep.cond1.push_back({t, odd ? Side::B : Side::A, deg, req});
  }

  std::map<Pair, VertexMask> third;
  std::vector<VertexMask> shadow_nbr(n, 0);
  for (const auto& t : T.triples()) {
    third[{t[0], t[1]}] |= VertexMask{1} << t[2];
    third[{t[0], t[2]}] |= VertexMask{1} << t[1];
    third[{t[1], t[2]}] |= VertexMask{1} << t[0];
  }
  for (auto& [p, m] : third) {
    shadow_nbr[p[0]] |= VertexMask{1} << p[1];
    shadow_nbr[p[1]] |= VertexMask{1} << p[0];
    VertexMask pm = (VertexMask{1} << p[0]) | (VertexMask{1} << p[1]);
    for (Side s : {Side::A, Side::B}) {
      VertexMask sm = s == Side::A ? am : bm;
      long long deg = std::popcount(m & sm);
      long long req = required_count(eps, std::popcount(sm & ~pm));
      if (deg < req) rep.cond2.push_back({{p[0], p[1]}, s, deg, req});
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (!(ab >> x & 1)) continue;
    VertexMask xm = VertexMask{1} << x;
    for (Side s : {Side::A, Side::B}) {
      VertexMask sm = s == Side::A ? am : bm;
      long long deg = std::popcount(shadow_nbr[x] & sm);
      long long req = required_count(eps, std::popcount(sm & ~xm));
      if (deg < req) rep.cond3.push_back({{x}, s, deg, req});
    }
  }

  if (3 * std::min(na, nb) >= n) {
    rep.primed_evaluated = true;
    for (auto& [p, m] : third)
      if (std::popcount(m) < required_count(eps / 3, n - 2)) rep.cond2_primed.push_back(p);
    for (Vertex x = 0; x < n; ++x)
      if ((ab >> x & 1) && std::popcount(shadow_nbr[x]) < required_count(eps / 3, n - 1)) rep.cond3_primed.push_back(x);
  }
  return rep;
}

// ---- triple-set refinement ----

struct RefinedTriples {
  std::vector<Vertex> vertices;
  TripleSet triples;
};

inline RefinedTriples refine_triple_set(const TripleSet& T, double alpha, double eps, double delta) {
  int n = T.vertex_count();
  if (!(alpha > 0 && alpha <= 1 && eps > 0 && eps <= 1 && delta > 0))
    throw error(errc::hypothesis, "alpha and eps must lie in (0,1], delta must be positive");
  if (delta > std::min(std::pow(eps, 0.25), 8 * alpha) + 1e-12)
    throw error(errc::hypothesis, "delta exceeds min(eps^(1/4), 8 alpha)");
  double nd = n;
  if (static_cast<double>(T.size()) < (alpha - eps) * nd * nd * nd / 6 - 1e-9)
    throw error(errc::hypothesis, "too few triples");
  std::map<Pair, long long> pair_deg;
  std::vector<long long> vdeg(n, 0);
  for (const auto& t : T.triples()) {
    ++pair_deg[{t[0], t[1]}];
    ++pair_deg[{t[0], t[2]}];
    ++pair_deg[{t[1], t[2]}];
    for (Vertex v : t) ++vdeg[v];
  }
  for (auto& [p, d] : pair_deg)
    if (static_cast<double>(d) > alpha * nd + 1e-9) throw error(errc::hypothesis, "a pair has degree above alpha*n");

  std::vector<char> keep(n, 0);
  RefinedTriples out;
  for (Vertex x = 0; x < n; ++x)
    if (static_cast<double>(vdeg[x]) >= (alpha - delta * delta) * nd * nd / 2 - 1e-9) {
      keep[x] = 1;
      out.vertices.push_back(x);
    }
  std::vector<Triple> inner;
  std::map<Pair, long long> inner_deg;
  for (const auto& t : T.triples())
    if (keep[t[0]] && keep[t[1]] && keep[t[2]]) {
      inner.push_back(t);
      ++inner_deg[{t[0], t[1]}];
      ++inner_deg[{t[0], t[2]}];
      ++inner_deg[{t[1], t[2]}];
    }
  auto bad = [&](Vertex x, Vertex y) {
    auto it = inner_deg.find(make_pair_sorted(x, y));
    long long d = it == inner_deg.end() ? 0 : it->second;
    return static_cast<double>(d) < (alpha - delta) * nd - 1e-9;
  };
  std::vector<Triple> kept;
  for (const auto& t : inner)
    if (!bad(t[0], t[1]) && !bad(t[0], t[2]) && !bad(t[1], t[2])) kept.push_back(t);
  out.triples = TripleSet(n, kept);

  if (static_cast<double>(out.vertices.size()) < (1 - delta * delta) * nd - 1e-9)
    throw error(errc::hypothesis, "vertex filter removed too many vertices; n too small for delta");
  std::map<Pair, long long> final_deg;
  std::vector<long long> shadow_deg(n, 0);
  for (const auto& t : kept) {
    ++final_deg[{t[0], t[1]}];
    ++final_deg[{t[0], t[2]}];
    ++final_deg[{t[1], t[2]}];
  }
  for (auto& [p, d] : final_deg) {
    if (static_cast<double>(d) < (alpha - 7 * delta) * nd - 1e-9)
      throw error(errc::hypothesis, "shadow pair below (alpha-7 delta) n; n too small for delta");
    ++shadow_deg[p[0]];
    ++shadow_deg[p[1]];
  }
  for (Vertex x : out.vertices)
    if (static_cast<double>(shadow_deg[x]) < (1 - 4 * delta) * nd - 1e-9)
      throw error(errc::hypothesis, "shadow degree below (1-4 delta) n; n too small for delta");
  return out;
}

// ---- walks through the triple set ----

// start = x1x2x3 and end = x_{l+1}x_{l+2}x_{l+3}; pattern gives the sides of
// positions 4..l. The result has stretch l-1.
inline std::optional<WalkWitness> build_walk_through_T(const Hypergraph& g, const std::vector<Vertex>& A,
                                                       const std::vector<Vertex>& B, const TripleSet& T, double eps,
                                                       const std::array<Vertex, 3>& start,
                                                       const std::array<Vertex, 3>& end,
                                                       const std::vector<Side>& pattern) {
  if (g.uniformity() != 4) throw error(errc::arity_mismatch, "walk building is defined for 4-graphs");
  if (!(eps >= 0 && eps <= 0.1)) throw error(errc::precondition, "eps must lie in [0, 0.1]");
  if (pattern.size() < 3) throw error(errc::precondition, "need at least three intermediate positions");
  int n = g.vertex_count();
  VertexMask am = detail::side_mask(A, n, "A"), bm = detail::side_mask(B, n, "B");
  if (am & bm) throw error(errc::invalid_partition, "A and B overlap");
  auto side_of = [&](Vertex v) -> Side {
    if (v < 0 || v >= n) throw error(errc::precondition, "endpoint vertex out of range");
    if (am >> v & 1) return Side::A;
    if (bm >> v & 1) return Side::B;
    throw error(errc::precondition, "endpoint vertex outside A and B");
  };
  std::vector<Side> sides;
  for (Vertex v : start) sides.push_back(side_of(v));
  sides.insert(sides.end(), pattern.begin(), pattern.end());
  for (Vertex v : end) sides.push_back(side_of(v));
  for (std::size_t i = 0; i + 4 <= sides.size(); ++i) {
    int in_a = 0;
    for (std::size_t j = i; j < i + 4; ++j) in_a += sides[j] == Side::A;
    if (in_a % 2 == 0) throw error(errc::precondition, "pattern is not a walk of the construction");
  }
  if (!T.contains({start[0], start[1], start[2]}) || !T.contains({end[0], end[1], end[2]}))
    throw error(errc::precondition, "endpoint triple not in the triple set");
  if (!check_eps_close(g, A, B, T, eps).close()) throw error(errc::precondition, "graph is not eps-close via T");

  auto in_side = [&](Vertex v, Side s) { return ((s == Side::A ? am : bm) >> v & 1) != 0; };
  auto edge4 = [&](Vertex a, Vertex b, Vertex c, Vertex d) { return g.has_edge({a, b, c, d}); };
  auto in_t = [&](Vertex a, Vertex b, Vertex c) {
    return a != b && b != c && a != c && T.contains({a, b, c});
  };

  std::vector<Vertex> y(start.begin(), start.end());
  std::size_t ell = pattern.size() + 3;
  // greedy positions 4..ell-3 (1-based), keeping the trailing triple in T
  for (std::size_t pos = 4; pos + 3 <= ell; ++pos) {
    Side s = sides[pos - 1];
    std::optional<Vertex> pick;
    std::size_t k = y.size();
    for (Vertex v = 0; v < n && !pick; ++v)
      if (in_side(v, s) && edge4(y[k - 3], y[k - 2], y[k - 1], v) && in_t(y[k - 2], y[k - 1], v)) pick = v;
    if (!pick) return std::nullopt;
    y.push_back(*pick);
  }
  // last three positions must join both ends
  std::size_t k = y.size();
  Side s1 = sides[ell - 3], s2 = sides[ell - 2], s3 = sides[ell - 1];
  for (Vertex a = 0; a < n; ++a) {
    if (!in_side(a, s1) || !edge4(y[k - 3], y[k - 2], y[k - 1], a)) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (!in_side(b, s2) || !edge4(y[k - 2], y[k - 1], a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (!in_side(c, s3) || !edge4(y[k - 1], a, b, c)) continue;
        if (!edge4(a, b, c, end[0]) || !edge4(b, c, end[0], end[1]) || !edge4(c, end[0], end[1], end[2])) continue;
        WalkWitness w;
        w.vertices = y;
        w.vertices.insert(w.vertices.end(), {a, b, c, end[0], end[1], end[2]});
        w.stretch = static_cast<int>(w.vertices.size()) - 4;
        if (!validate_walk(g, w)) throw std::logic_error("constructed walk failed validation");
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace tightcycle
