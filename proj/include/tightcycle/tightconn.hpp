#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tightcycle/error.hpp"
#include "tightcycle/hypergraph.hpp"
#include "tightcycle/permgroup.hpp"
#include "tightcycle/permutation.hpp"

namespace tightcycle {

struct WalkWitness {
  std::vector<Vertex> vertices;
  int stretch = 0;

  friend bool operator==(const WalkWitness&, const WalkWitness&) = default;
};

// Every window of r consecutive vertices has r distinct entries and is an edge.
inline bool is_tight_walk(const Hypergraph& g, const std::vector<Vertex>& seq) {
  int r = g.uniformity();
  if (static_cast<int>(seq.size()) < r) return false;
  for (std::size_t i = 0; i + r <= seq.size(); ++i) {
    std::vector<Vertex> w(seq.begin() + i, seq.begin() + i + r);
    if (!g.has_edge(w)) return false;
  }
  return true;
}

inline bool validate_walk(const Hypergraph& g, const WalkWitness& w) {
  return w.stretch >= 0 && static_cast<int>(w.vertices.size()) == w.stretch + g.uniformity() && is_tight_walk(g, w.vertices);
}

inline bool validate_closed_walk(const Hypergraph& g, const WalkWitness& w) {
  int r = g.uniformity();
  return validate_walk(g, w) && w.stretch > 0 && std::equal(w.vertices.begin(), w.vertices.begin() + r, w.vertices.end() - r);
}

struct TightComponent {
  std::vector<int> edges;  // indices into the host edge list; members are all orientations of these
  Tuple representative;    // lexicographically least member
  PermGroup tc;            // tc of the representative
};

// Oriented-edge state space of a hypergraph. State e*r! + p is perm p applied to sorted edge e.
// The hypergraph must outlive the analysis.
class TightAnalysis {
 public:
  explicit TightAnalysis(const Hypergraph& g) : g_(&g), r_(g.uniformity()) {
    detail::check_arity(r_);
    n_perm_ = factorial(r_);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      VertexMask m = g.edge_mask(e);
      for (Vertex v : g.edges()[e]) completions_[m & ~(VertexMask{1} << v)].push_back(v);
    }
    for (auto& [k, vs] : completions_) std::sort(vs.begin(), vs.end());
    label_classes();
  }

  const Hypergraph& graph() const { return *g_; }
  int arity() const { return r_; }
  int state_count() const { return static_cast<int>(g_->edge_count()) * n_perm_; }

  Tuple tuple(int s) const { return detail::table(r_).perms[s % n_perm_].act(g_->edges()[s / n_perm_]); }

  // -1 unless t is an oriented edge of the graph.
  int state_of(const Tuple& t) const {
    if (static_cast<int>(t.size()) != r_) return -1;
    VertexMask m = 0;
    for (Vertex v : t) {
      if (v < 0 || v >= g_->vertex_count()) return -1;
      m |= VertexMask{1} << v;
    }
    if (std::popcount(m) != r_) return -1;
    auto e = g_->edge_index(m);
    if (!e) return -1;
    const Edge& sorted = g_->edges()[*e];
    std::vector<int> im(r_);
    for (int j = 0; j < r_; ++j) im[j] = static_cast<int>(std::find(t.begin(), t.end(), sorted[j]) - t.begin());
    return *e * n_perm_ + Permutation(im).rank();
  }

  // State of sigma applied to the tuple of s.
  int act(const Permutation& sigma, int s) const {
    return (s / n_perm_) * n_perm_ + detail::table(r_).times(sigma.rank(), s % n_perm_);
  }

  int tc_class(int s) const { return tc_class_[s]; }

  PermGroup tc_group(int s) const {
    const auto& t = detail::table(r_);
    int base = (s / n_perm_) * n_perm_;
    int p = s % n_perm_;
    std::vector<int> ranks;
    // pi in tc(x) iff pi(x), of perm pi*p, lies in the class of x.
    for (int pi = 0; pi < n_perm_; ++pi)
      if (tc_class_[base + t.times(pi, p)] == tc_class_[s]) ranks.push_back(pi);
    return PermGroup::from_ranks(r_, ranks);
  }

  const std::vector<TightComponent>& components() const { return components_; }

  // Oriented edges differing from s in exactly one coordinate.
  template <class F>
  void for_each_replacement(int s, F&& f) const {
    Tuple x = tuple(s);
    VertexMask m = mask_of(x);
    for (int i = 0; i < r_; ++i) {
      auto it = completions_.find(m & ~(VertexMask{1} << x[i]));
      Vertex old = x[i];
      for (Vertex v : it->second) {
        if (v == old) continue;
        x[i] = v;
        f(state_of(x));
      }
      x[i] = old;
    }
  }

  // One walk step: drop the first entry, append w. Calls f(next_state, w).
  template <class F>
  void for_each_step(int s, F&& f) const {
    Tuple x = tuple(s);
    VertexMask m = mask_of(x) & ~(VertexMask{1} << x[0]);
    Tuple y(x.begin() + 1, x.end());
    y.push_back(0);
    for (Vertex w : completions_.find(m)->second) {
      y.back() = w;
      f(state_of(y), w);
    }
  }

  // Fewest single-coordinate replacements from s to every state (-1 if unreachable).
  std::vector<int> replacement_distances(int s) const {
    std::vector<int> dist(state_count(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for_each_replacement(u, [&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
      });
    }
    return dist;
  }

  // States in lexicographic order of their tuples.
  std::vector<int> states_in_tuple_order() const {
    std::vector<std::pair<Tuple, int>> v;
    for (int s = 0; s < state_count(); ++s) v.emplace_back(tuple(s), s);
    std::sort(v.begin(), v.end());
    std::vector<int> out;
    for (auto& p : v) out.push_back(p.second);
    return out;
  }

 private:
  void label_classes() {
    int total = state_count();
    tc_class_.assign(total, -1);
    int next = 0;
    for (int s = 0; s < total; ++s) {
      if (tc_class_[s] >= 0) continue;
      std::deque<int> q{s};
      tc_class_[s] = next;
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for_each_replacement(u, [&](int v) {
          if (tc_class_[v] < 0) {
            tc_class_[v] = next;
            q.push_back(v);
          }
        });
      }
      ++next;
    }
    // ~ merges the classes of all orientations of an edge.
    std::vector<int> parent(next);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (std::size_t e = 0; e < g_->edge_count(); ++e)
      for (int p = 1; p < n_perm_; ++p) {
        int a = find(tc_class_[e * n_perm_]), b = find(tc_class_[e * n_perm_ + p]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    std::unordered_map<int, int> comp_of_root;
    for (std::size_t e = 0; e < g_->edge_count(); ++e) {
      int root = find(tc_class_[e * n_perm_]);
      auto [it, fresh] = comp_of_root.emplace(root, static_cast<int>(components_.size()));
      if (fresh) {
        TightComponent c;
        c.representative = g_->edges()[e];  // edges are visited in lex order
        c.tc = tc_group(static_cast<int>(e) * n_perm_);
        components_.push_back(std::move(c));
      }
      components_[it->second].edges.push_back(static_cast<int>(e));
    }
  }

  const Hypergraph* g_;
  int r_;
  int n_perm_;
  std::unordered_map<VertexMask, std::vector<Vertex>> completions_;
  std::vector<int> tc_class_;
  std::vector<TightComponent> components_;
};

inline std::vector<TightComponent> tight_components(const Hypergraph& g) { return TightAnalysis(g).components(); }

inline PermGroup tc_group(const Hypergraph& g, const Tuple& x) {
  TightAnalysis ta(g);
  int s = ta.state_of(x);
  if (s < 0) throw error(errc::invalid_oriented_edge, "tuple is not an oriented edge of the graph");
  return ta.tc_group(s);
}

inline bool tightly_connected(const Hypergraph& g, const Tuple& x, const Tuple& y) {
  TightAnalysis ta(g);
  int a = ta.state_of(x), b = ta.state_of(y);
  if (a < 0 || b < 0) throw error(errc::invalid_oriented_edge, "tuple is not an oriented edge of the graph");
  return ta.tc_class(a) == ta.tc_class(b);
}

// True iff no tc group contains a conjugate of pi.
inline bool is_pi_hom_free(const Hypergraph& g, const Permutation& pi) {
  if (pi.arity() != g.uniformity()) throw error(errc::arity_mismatch, "permutation arity differs from uniformity");
  if (g.edge_count() == 0) return true;
  for (const auto& c : tight_components(g))
    if (!avoids(c.tc, pi)) return false;
  return true;
}

inline int normalize_residue(int k, int r) { return ((k % r) + r) % r; }

inline bool is_hom_free(const Hypergraph& g, int k) {
  int r = g.uniformity();
  detail::check_arity(r);
  return is_pi_hom_free(g, Permutation::cyc(r).pow(normalize_residue(k, r)));
}

// Tight walk x = z0, z1, ..., zs = y through single-coordinate replacements; stretch r*s.
inline std::optional<WalkWitness> replacement_walk(const Hypergraph& g, const Tuple& x, const Tuple& y) {
  TightAnalysis ta(g);
  int a = ta.state_of(x), b = ta.state_of(y);
  if (a < 0 || b < 0) throw error(errc::invalid_oriented_edge, "tuple is not an oriented edge of the graph");
  std::vector<int> prev(ta.state_count(), -2);
  std::deque<int> q{a};
  prev[a] = -1;
  while (!q.empty() && prev[b] == -2) {
    int u = q.front();
    q.pop_front();
    ta.for_each_replacement(u, [&](int v) {
      if (prev[v] == -2) {
        prev[v] = u;
        q.push_back(v);
      }
    });
  }
  if (prev[b] == -2) return std::nullopt;
  std::vector<int> path;
  for (int s = b; s != -1; s = prev[s]) path.push_back(s);
  std::reverse(path.begin(), path.end());
  WalkWitness w;
  for (int s : path) {
    Tuple t = ta.tuple(s);
    w.vertices.insert(w.vertices.end(), t.begin(), t.end());
  }
  w.stretch = static_cast<int>(w.vertices.size()) - g.uniformity();
  if (!validate_walk(g, w)) throw std::logic_error("replacement walk failed validation");
  return w;
}

namespace detail {

// Shortest closed walk with stretch = k mod r; product BFS over (state, residue).
inline std::optional<WalkWitness> shortest_closed_walk(const Hypergraph& g, int k) {
  int r = g.uniformity();
  check_arity(r);
  k = normalize_residue(k, r);
  if (g.edge_count() == 0) return std::nullopt;
  if (k == 0) {
    WalkWitness w;
    w.vertices = g.edges().front();
    w.vertices.insert(w.vertices.end(), g.edges().front().begin(), g.edges().front().end());
    w.stretch = r;
    return w;
  }
  if (is_hom_free(g, k)) return std::nullopt;
  TightAnalysis ta(g);
  int total = ta.state_count();
  int best = -1;
  std::vector<Vertex> best_seq;
  std::vector<int> dist(static_cast<std::size_t>(total) * r);
  std::vector<int> prev(static_cast<std::size_t>(total) * r);
  std::vector<Vertex> via(static_cast<std::size_t>(total) * r);
  for (int s0 : ta.states_in_tuple_order()) {
    std::fill(dist.begin(), dist.end(), -1);
    int start = s0 * r;
    dist[start] = 0;
    std::deque<int> q{start};
    int found = -1, found_from = -1;
    Vertex found_w = 0;
    while (!q.empty() && found < 0) {
      int u = q.front();
      q.pop_front();
      if (best >= 0 && dist[u] + 1 >= best) break;
      int s = u / r, res = u % r;
      ta.for_each_step(s, [&](int t, Vertex w) {
        if (found >= 0) return;
        int v = t * r + (res + 1) % r;
        if (t == s0 && (res + 1) % r == k) {
          found = dist[u] + 1;
          found_from = u;
          found_w = w;
          return;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          prev[v] = u;
          via[v] = w;
          q.push_back(v);
        }
      });
    }
    if (found < 0 || (best >= 0 && found >= best)) continue;
    best = found;
    std::vector<Vertex> appended{found_w};
    for (int u = found_from; u != start; u = prev[u]) appended.push_back(via[u]);
    std::reverse(appended.begin(), appended.end());
    best_seq = ta.tuple(s0);
    best_seq.insert(best_seq.end(), appended.begin(), appended.end());
  }
  if (best < 0) throw std::logic_error("tc criterion and walk search disagree");
  WalkWitness w{best_seq, best};
  if (!validate_closed_walk(g, w)) throw std::logic_error("closed walk failed validation");
  return w;
}

}  // namespace detail

inline std::optional<int> min_closed_stretch(const Hypergraph& g, int k) {
  auto w = detail::shortest_closed_walk(g, k);
  if (!w) return std::nullopt;
  return w->stretch;
}

inline std::optional<WalkWitness> find_hom_cycle_witness(const Hypergraph& g, int k) {
  return detail::shortest_closed_walk(g, k);
}

// Upper bound on the minimal closed stretch from replacement distances: r*s + k.
inline std::optional<int> replacement_closed_stretch_bound(const Hypergraph& g, int k) {
  int r = g.uniformity();
  detail::check_arity(r);
  k = normalize_residue(k, r);
  TightAnalysis ta(g);
  Permutation c = Permutation::cyc(r).pow(k);
  std::optional<int> best;
  for (int s = 0; s < ta.state_count(); ++s) {
    int target = ta.act(c, s);
    if (ta.tc_class(target) != ta.tc_class(s)) continue;
    int d = ta.replacement_distances(s)[target];
    int bound = std::max(r * d + k, r);
    if (!best || bound < *best) best = bound;
  }
  return best;
}

inline bool contains_hom_cycle_of_length(const Hypergraph& g, int L) {
  int r = g.uniformity();
  if (L <= r) throw error(errc::invalid_length, "cycle length must exceed r");
  auto m = min_closed_stretch(g, L % r);
  return m && *m <= L;
}

// Closed walk of stretch exactly L, padding the minimal one with repetitions of its start window.
inline std::optional<WalkWitness> hom_cycle_walk_of_length(const Hypergraph& g, int L) {
  int r = g.uniformity();
  if (L <= r) throw error(errc::invalid_length, "cycle length must exceed r");
  auto w = find_hom_cycle_witness(g, L % r);
  if (!w || w->stretch > L) return std::nullopt;
  std::vector<Vertex> head(w->vertices.begin(), w->vertices.begin() + r);
  while (w->stretch < L) {
    w->vertices.insert(w->vertices.end(), head.begin(), head.end());
    w->stretch += r;
  }
  if (!validate_closed_walk(g, *w)) throw std::logic_error("padded walk failed validation");
  return w;
}

inline bool tc_family_leq(const Hypergraph& f, const Hypergraph& g) {
  if (f.uniformity() != g.uniformity()) throw error(errc::arity_mismatch, "uniformity mismatch");
  auto cf = tight_components(f);
  auto cg = tight_components(g);
  for (const auto& a : cf) {
    bool ok = false;
    for (const auto& b : cg)
      if (embeds_up_to_conjugacy(a.tc, b.tc)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

inline bool tc_nontrivial(const Hypergraph& g) {
  for (const auto& c : tight_components(g))
    if (c.tc.order() > 1) return true;
  return false;
}

inline std::string format_witness(const WalkWitness& w) {
  std::string s = "stretch " + std::to_string(w.stretch) + "\n";
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.vertices[i]);
  }
  return s + "\n";
}

}  // namespace tightcycle
