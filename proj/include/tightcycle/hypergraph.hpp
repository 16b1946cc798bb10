#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tightcycle/error.hpp"
#include "tightcycle/permutation.hpp"

namespace tightcycle {

using Vertex = int;
using Edge = std::vector<Vertex>;  // sorted, distinct
using Tuple = std::vector<Vertex>;  // ordered, distinct
using VertexMask = std::uint64_t;

inline constexpr int max_vertices = 64;

inline VertexMask mask_of(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= VertexMask{1} << v;
  return m;
}

inline Edge edge_of_mask(VertexMask m) {
  Edge e;
  while (m) {
    e.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return e;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long b = 1;
  for (long long i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// r-uniform hypergraph on vertices 0..n-1; edges kept sorted and duplicate-free.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(int r, int n, std::vector<Edge> edges = {}) : r_(r), n_(n) {
    if (r < 1 || r > max_arity) throw error(errc::unsupported_arity, "uniformity " + std::to_string(r));
    if (n < 0 || n > max_vertices) throw error(errc::domain, "vertex count " + std::to_string(n) + " outside 0..64");
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      if (static_cast<int>(e.size()) != r) throw error(errc::arity_mismatch, "edge size differs from uniformity");
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw error(errc::domain, "edge with repeated vertex");
      if (e.front() < 0 || e.back() >= n) throw error(errc::domain, "edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    index_.reserve(edges_.size() * 2);
    masks_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      masks_.push_back(mask_of(edges_[i]));
      index_.emplace(masks_.back(), static_cast<int>(i));
    }
  }

  int uniformity() const { return r_; }
  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexMask edge_mask(std::size_t i) const { return masks_[i]; }

  std::optional<int> edge_index(VertexMask m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has_edge_mask(VertexMask m) const { return index_.count(m) > 0; }

  // Order-insensitive; false for tuples with repeats or of the wrong size.
  bool has_edge(const std::vector<Vertex>& vs) const {
    if (static_cast<int>(vs.size()) != r_) return false;
    VertexMask m = 0;
    for (Vertex v : vs) {
      if (v < 0 || v >= n_) return false;
      m |= VertexMask{1} << v;
    }
    if (std::popcount(m) != r_) return false;
    return has_edge_mask(m);
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int r_ = 1;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> masks_;
  std::unordered_map<VertexMask, int> index_;
};

// --- constructions -------------------------------------------------------

// Vertices 0..ell-1 in cyclic order; edges are the ell windows of r consecutive vertices.
inline Hypergraph tight_cycle(int r, int ell) {
  if (ell <= r) throw error(errc::invalid_length, "tight cycle needs ell > r");
  std::vector<Edge> es;
  for (int i = 0; i < ell; ++i) {
    Edge e;
    for (int j = 0; j < r; ++j) e.push_back((i + j) % ell);
    es.push_back(e);
  }
  return Hypergraph(r, ell, es);
}

// Windows of v_1..v_ell followed by pi(v_1...v_r); supports that coincide are merged.
inline Hypergraph twisted_tight_cycle(int r, int ell, const Permutation& pi) {
  if (pi.arity() != r) throw error(errc::arity_mismatch, "twist arity differs from r");
  if (ell < 2 * r) throw error(errc::invalid_length, "twisted tight cycle needs ell >= 2r");
  std::vector<Vertex> seq(ell);
  for (int i = 0; i < ell; ++i) seq[i] = i;
  std::vector<Vertex> head(seq.begin(), seq.begin() + r);
  auto tail = pi.act(head);
  seq.insert(seq.end(), tail.begin(), tail.end());
  std::vector<Edge> es;
  for (int i = 0; i <= ell; ++i) es.emplace_back(seq.begin() + i, seq.begin() + i + r);
  return Hypergraph(r, ell, es);
}

// Membership of the twisted cycle in the family C_pi requires r | ell.
inline bool twisted_length_in_family(int r, int ell) { return ell % r == 0; }

// A = {0..a-1}, B = {a..a+b-1}; edges are the r-sets meeting A in an odd number of vertices.
inline Hypergraph complete_oddly_bipartite(int a, int b, int r = 4) {
  if (r % 2 != 0) throw error(errc::unsupported_arity, "oddly bipartite construction needs even r");
  if (a < 0 || b < 0) throw error(errc::domain, "negative part size");
  int n = a + b;
  if (n < r) throw error(errc::domain, "a + b must be at least r");
  if (n > max_vertices) throw error(errc::domain, "too many vertices");
  std::vector<Edge> es;
  VertexMask amask = a == 64 ? ~VertexMask{0} : ((VertexMask{1} << a) - 1);
  std::vector<int> pick(r);
  // Enumerate r-subsets in lex order.
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    if (std::popcount(mask_of(pick) & amask) % 2 == 1) es.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(r, n, es);
}

// Vertex v becomes t*v ... t*v+t-1.
inline Hypergraph blowup(const Hypergraph& g, int t) {
  if (t < 1) throw error(errc::domain, "blowup factor must be positive");
  int r = g.uniformity();
  std::vector<Edge> es;
  for (const auto& e : g.edges()) {
    std::vector<int> choice(r, 0);
    while (true) {
      Edge f(r);
      for (int i = 0; i < r; ++i) f[i] = e[i] * t + choice[i];
      es.push_back(f);
      int i = r - 1;
      while (i >= 0 && choice[i] == t - 1) choice[i--] = 0;
      if (i < 0) break;
      ++choice[i];
    }
  }
  return Hypergraph(r, g.vertex_count() * t, es);
}

// beats[i][j] is true when i -> j.
using Tournament = std::vector<std::vector<bool>>;

inline void check_tournament(const Tournament& t) {
  std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) throw error(errc::invalid_orientation, "adjacency matrix is not square");
    if (t[i][i]) throw error(errc::invalid_orientation, "loop at vertex " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t[i][j] == t[j][i])
        throw error(errc::invalid_orientation, "pair " + std::to_string(i) + "," + std::to_string(j) + " not oriented exactly once");
}

// i beats i+1, ..., i+(n-1)/2 modulo n; n odd.
inline Tournament rotational_tournament(int n) {
  if (n % 2 == 0) throw error(errc::domain, "rotational tournament needs odd n");
  Tournament t(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= (n - 1) / 2; ++d) t[i][(i + d) % n] = true;
  return t;
}

inline Tournament transitive_tournament(int n) {
  Tournament t(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t[i][j] = true;
  return t;
}

inline Hypergraph tournament_3graph(const Tournament& t) {
  check_tournament(t);
  int n = static_cast<int>(t.size());
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        bool cyc1 = t[a][b] && t[b][c] && t[c][a];
        bool cyc2 = t[b][a] && t[c][b] && t[a][c];
        if (cyc1 || cyc2) es.push_back({a, b, c});
      }
  return Hypergraph(3, n, es);
}

// --- local structure -----------------------------------------------------

inline void check_subset(const Hypergraph& g, const std::vector<Vertex>& s) {
  int k = static_cast<int>(s.size());
  if (k <= 0 || k >= g.uniformity()) throw error(errc::invalid_query, "subset size must lie strictly between 0 and r");
  for (Vertex v : s)
    if (v < 0 || v >= g.vertex_count()) throw error(errc::invalid_query, "vertex out of range");
  if (std::popcount(mask_of(s)) != k) throw error(errc::invalid_query, "subset has repeated vertices");
}

// Link of v as an (r-1)-graph; vertex labels are kept, so v is isolated.
inline Hypergraph link(const Hypergraph& g, Vertex v) {
  check_subset(g, {v});
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (std::binary_search(e.begin(), e.end(), v)) {
      Edge f;
      for (Vertex u : e)
        if (u != v) f.push_back(u);
      es.push_back(f);
    }
  return Hypergraph(g.uniformity() - 1, g.vertex_count(), es);
}

// Number of edges containing the subset.
inline long long degree(const Hypergraph& g, const std::vector<Vertex>& s) {
  check_subset(g, s);
  VertexMask m = mask_of(s);
  long long d = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if ((g.edge_mask(i) & m) == m) ++d;
  return d;
}

inline long long vertex_degree(const Hypergraph& g, Vertex v) {
  long long d = 0;
  VertexMask m = VertexMask{1} << v;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.edge_mask(i) & m) ++d;
  return d;
}

// Sets S' of size r-|S| with S u S' an edge; optionally only those inside `within`.
inline std::vector<Edge> neighborhood(const Hypergraph& g, const std::vector<Vertex>& s,
                                      const std::optional<std::vector<Vertex>>& within = std::nullopt) {
  check_subset(g, s);
  VertexMask m = mask_of(s);
  VertexMask allowed = ~VertexMask{0};
  if (within) allowed = mask_of(*within);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    VertexMask e = g.edge_mask(i);
    if ((e & m) != m) continue;
    VertexMask rest = e & ~m;
    if ((rest & ~allowed) == 0) out.push_back(edge_of_mask(rest));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- triples and shadows -------------------------------------------------

using Triple = std::array<Vertex, 3>;
using Pair = std::array<Vertex, 2>;

inline Triple make_triple(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline Pair make_pair_sorted(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }

class TripleSet {
 public:
  TripleSet() = default;
  TripleSet(int n, std::vector<Triple> ts) : n_(n) {
    for (auto& t : ts) {
      std::sort(t.begin(), t.end());
      if (t[0] < 0 || t[2] >= n || t[0] == t[1] || t[1] == t[2]) throw error(errc::domain, "invalid triple");
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    triples_ = std::move(ts);
  }

  static TripleSet all(int n) {
    std::vector<Triple> ts;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) ts.push_back({a, b, c});
    return TripleSet(n, std::move(ts));
  }

  int vertex_count() const { return n_; }
  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool contains(Triple t) const {
    std::sort(t.begin(), t.end());
    return std::binary_search(triples_.begin(), triples_.end(), t);
  }

 private:
  int n_ = 0;
  std::vector<Triple> triples_;
};

inline std::vector<Pair> shadow(const TripleSet& t) {
  std::vector<Pair> out;
  for (const auto& x : t.triples()) {
    out.push_back({x[0], x[1]});
    out.push_back({x[0], x[2]});
    out.push_back({x[1], x[2]});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- text format ---------------------------------------------------------

inline std::string serialize_hypergraph(const Hypergraph& g) {
  std::string s = std::to_string(g.uniformity()) + " " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(e[i]);
    }
    s += '\n';
  }
  return s;
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> es;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> nums;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw error(errc::parse, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
    }
    if (!header) {
      if (nums.size() != 2) throw error(errc::parse, "line " + std::to_string(lineno) + ": header must be 'r n'");
      header = std::make_pair(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
      continue;
    }
    if (static_cast<int>(nums.size()) != header->first)
      throw error(errc::parse, "line " + std::to_string(lineno) + ": expected " + std::to_string(header->first) + " vertices");
    Edge e;
    for (long long v : nums) {
      if (v < 0 || v >= header->second) throw error(errc::parse, "line " + std::to_string(lineno) + ": vertex out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw error(errc::parse, "line " + std::to_string(lineno) + ": repeated vertex");
    es.push_back(e);
  }
  if (!header) throw error(errc::parse, "missing 'r n' header");
  return Hypergraph(header->first, header->second, es);
}

}  // namespace tightcycle
