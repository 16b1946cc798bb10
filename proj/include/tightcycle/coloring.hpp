#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tightcycle/edge_coloring.hpp"
#include "tightcycle/error.hpp"
#include "tightcycle/hypergraph.hpp"
#include "tightcycle/permgroup.hpp"
#include "tightcycle/tightconn.hpp"

namespace tightcycle {

// Equivariant coloring of oriented edges by A_pi. Only the sorted orientation of each edge is
// stored; the color of sigma(sorted e) is sigma * chi(sorted e).
class OrientedColoring {
 public:
  OrientedColoring() = default;
  explicit OrientedColoring(ColorSet colors) : colors_(std::move(colors)) {}

  const ColorSet& colors() const { return colors_; }
  int arity() const { return colors_.arity(); }
  const std::map<Edge, Color>& assignment() const { return assignment_; }

  void assign(Edge e, const Color& c) {
    std::sort(e.begin(), e.end());
    assignment_[e] = c;
  }

  std::optional<Color> color_of(const Tuple& x) const {
    Edge e = x;
    std::sort(e.begin(), e.end());
    auto it = assignment_.find(e);
    if (it == assignment_.end()) return std::nullopt;
    return colors_.act(arranging(e, x), it->second);
  }

  // sigma with sigma(sorted) = x.
  static Permutation arranging(const Edge& sorted, const Tuple& x) {
    std::vector<int> im(sorted.size());
    for (std::size_t j = 0; j < sorted.size(); ++j) im[j] = static_cast<int>(std::find(x.begin(), x.end(), sorted[j]) - x.begin());
    return Permutation(im);
  }

 private:
  ColorSet colors_;
  std::map<Edge, Color> assignment_;
};

inline void check_coverage(const Hypergraph& g, const OrientedColoring& chi) {
  if (g.edge_count() == 0 && chi.assignment().empty()) return;
  if (chi.arity() != g.uniformity()) throw error(errc::coverage, "coloring arity differs from uniformity");
  if (chi.assignment().size() != g.edge_count()) throw error(errc::coverage, "assignment does not match the edge set");
  for (const auto& [e, c] : chi.assignment()) {
    if (!g.has_edge(e)) throw error(errc::coverage, "assignment colors a non-edge");
    if (!chi.colors().contains(c)) throw error(errc::coverage, "color outside the color set");
  }
}

inline bool verify_accordant(const Hypergraph& g, const OrientedColoring& chi) {
  check_coverage(g, chi);
  if (g.edge_count() == 0) return true;
  TightAnalysis ta(g);
  const auto& t = detail::table(g.uniformity());
  std::vector<Color> of_state(ta.state_count());
  for (int s = 0; s < ta.state_count(); ++s) of_state[s] = *chi.color_of(ta.tuple(s));
  for (int s = 0; s < ta.state_count(); ++s)
    for (int sg = 0; sg < t.n; ++sg)
      if (of_state[ta.act(t.perms[sg], s)] != chi.colors().act(t.perms[sg], of_state[s])) return false;
  bool ok = true;
  for (int s = 0; s < ta.state_count() && ok; ++s)
    ta.for_each_replacement(s, [&](int u) {
      if (of_state[u] != of_state[s]) ok = false;
    });
  return ok;
}

// Per ~-class: tc(x_j) <= sigma Gamma sigma^-1, and chi(y) = p^-1 sigma Gamma where x_j ~tc p(y).
inline std::optional<OrientedColoring> build_accordant_coloring(const Hypergraph& g, const Permutation& pi) {
  int r = g.uniformity();
  if (pi.arity() != r) throw error(errc::arity_mismatch, "permutation arity differs from uniformity");
  OrientedColoring chi(color_set(r, pi));
  if (g.edge_count() == 0) return chi;
  TightAnalysis ta(g);
  const auto& t = detail::table(r);
  int nperm = t.n;
  const auto& classes = chi.colors().classes();
  for (const auto& comp : ta.components()) {
    if (!avoids(comp.tc, pi)) return std::nullopt;
    int rep = comp.edges.front() * nperm;
    int cls = -1;
    Permutation sigma;
    for (int i = 0; i < static_cast<int>(classes.size()) && cls < 0; ++i)
      if (auto s = conjugator_into(comp.tc, classes[i].representative)) {
        cls = i;
        sigma = *s;
      }
    if (cls < 0) throw std::logic_error("avoiding tc group lies in no maximal avoiding class");
    for (int e : comp.edges) {
      int p = 0;
      while (ta.tc_class(e * nperm + p) != ta.tc_class(rep)) ++p;
      chi.assign(g.edges()[e], chi.colors().make(cls, t.perms[p].inverse() * sigma));
    }
  }
  if (!verify_accordant(g, chi)) throw std::logic_error("constructed coloring is not accordant");
  return chi;
}

inline std::pair<bool, bool> hom_free_iff_colorable_check(const Hypergraph& g, int k) {
  int r = g.uniformity();
  Permutation pi = Permutation::cyc(r).pow(normalize_residue(k, r));
  return {is_hom_free(g, k), build_accordant_coloring(g, pi).has_value()};
}

// --- uniformity four: colorings of triples -------------------------------

enum class TriangleKind { free, pointed, blue, circle, red_edge, yellow_edge };

inline const char* triangle_kind_name(TriangleKind k) {
  switch (k) {
    case TriangleKind::free: return "free";
    case TriangleKind::pointed: return "pointed";
    case TriangleKind::blue: return "blue";
    case TriangleKind::circle: return "circle";
    case TriangleKind::red_edge: return "rededge";
    case TriangleKind::yellow_edge: return "yellowedge";
  }
  return "?";
}

// datum: apex for pointed; rotation (a,b,c) starting at its least vertex for circle;
// sorted distinguished pair for the edge kinds; empty otherwise.
struct TriangleColor {
  TriangleKind kind = TriangleKind::free;
  std::vector<Vertex> datum;

  friend bool operator==(const TriangleColor&, const TriangleColor&) = default;
};

inline TriangleColor rotation_color(Vertex a, Vertex b, Vertex c) {
  std::vector<Vertex> d{a, b, c};
  std::rotate(d.begin(), std::min_element(d.begin(), d.end()), d.end());
  return {TriangleKind::circle, d};
}

inline TriangleColor pair_color(TriangleKind k, Vertex a, Vertex b) { return {k, {std::min(a, b), std::max(a, b)}}; }

class TripleColoring4 {
 public:
  TripleColoring4() = default;
  TripleColoring4(int n, bool five_colors) : n_(n), five_(five_colors) {}

  int vertex_count() const { return n_; }
  bool five_color_palette() const { return five_; }
  const std::map<Triple, TriangleColor>& colored() const { return colors_; }

  TriangleColor get(Triple t) const {
    std::sort(t.begin(), t.end());
    auto it = colors_.find(t);
    return it == colors_.end() ? TriangleColor{} : it->second;
  }

  void set(Triple t, const TriangleColor& c) {
    std::sort(t.begin(), t.end());
    if (!five_ && c.kind != TriangleKind::pointed && c.kind != TriangleKind::blue && c.kind != TriangleKind::free)
      throw error(errc::invalid_coloring, "color outside the two-color palette");
    if (c.kind == TriangleKind::free)
      colors_.erase(t);
    else
      colors_[t] = c;
  }

  // The palette flag is a constraint on set(), not part of the coloring.
  friend bool operator==(const TripleColoring4& a, const TripleColoring4& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_;
  }

 private:
  int n_ = 0;
  bool five_ = true;
  std::map<Triple, TriangleColor> colors_;
};

namespace detail {

// Face colors of a tetrahedron: x is an oriented 4-tuple colored by tau*Gamma.
// faces[i] is the face opposite x[i].
inline std::array<TriangleColor, 4> tetrahedron_faces(const ColorSet& cs, const Tuple& x, const Color& c) {
  const PermGroup& gamma = cs.classes().at(c.class_index).representative;
  const Permutation& tau = c.coset_rep;
  std::array<TriangleColor, 4> faces;
  if (gamma.order() == 6) {
    int p = 0;
    for (; p < 4; ++p) {
      bool fixed = true;
      for (const auto& e : gamma.elements())
        if (e[p] != p) fixed = false;
      if (fixed) break;
    }
    Vertex apex = x[tau[p]];
    for (int i = 0; i < 4; ++i)
      faces[i] = x[i] == apex ? TriangleColor{TriangleKind::blue, {}} : TriangleColor{TriangleKind::pointed, {apex}};
  } else if (gamma.order() == 12) {
    Tuple o = x;
    if (tau.sign() < 0) std::swap(o[0], o[1]);
    // o is positively oriented; an even rearrangement ending in w gives the face rotation.
    for (int i = 0; i < 4; ++i) {
      Vertex w = x[i];
      Tuple y;
      for (int rk = 0; rk < 24; ++rk) {
        Permutation q = Permutation::from_rank(4, rk);
        if (q.sign() < 0) continue;
        y = q.act(o);
        if (y[3] == w) break;
      }
      faces[i] = rotation_color(y[0], y[1], y[2]);
    }
  } else if (gamma.order() == 4) {
    int a = -1;
    for (const auto& e : gamma.elements())
      if (e[0] != 0) a = e[0];
    bool red[4] = {false, false, false, false};
    red[tau[0]] = red[tau[a]] = true;
    std::vector<Vertex> rp, yp;
    for (int j = 0; j < 4; ++j) (red[j] ? rp : yp).push_back(x[j]);
    for (int i = 0; i < 4; ++i)
      faces[i] = red[i] ? pair_color(TriangleKind::yellow_edge, yp[0], yp[1]) : pair_color(TriangleKind::red_edge, rp[0], rp[1]);
  } else {
    throw error(errc::invalid_coloring, "color class has no triple pictogram");
  }
  return faces;
}

inline Triple face_triple(const Tuple& x, int i) {
  std::vector<Vertex> f;
  for (int j = 0; j < 4; ++j)
    if (j != i) f.push_back(x[j]);
  return make_triple(f[0], f[1], f[2]);
}

inline bool triple_palette_supported(const Permutation& pi) {
  if (pi.arity() != 4) return false;
  auto ct = pi.cycle_type();
  return ct == std::vector<int>{4} || ct == std::vector<int>{2, 2};
}

}  // namespace detail

inline TripleColoring4 triple_coloring_from_accordant(const Hypergraph& g, const OrientedColoring& chi) {
  if (g.uniformity() != 4) throw error(errc::unsupported_arity, "triple colorings need uniformity 4");
  const Permutation& pi = chi.colors().pi();
  if (!detail::triple_palette_supported(pi)) throw error(errc::domain, "pi must be conjugate to cyc or cyc^2");
  if (!verify_accordant(g, chi)) throw error(errc::invalid_coloring, "coloring is not accordant");
  TripleColoring4 out(g.vertex_count(), pi.cycle_type() == std::vector<int>{4});
  std::map<Triple, TriangleColor> seen;
  for (const auto& [e, c] : chi.assignment()) {
    auto faces = detail::tetrahedron_faces(chi.colors(), e, c);
    for (int i = 0; i < 4; ++i) {
      Triple t = detail::face_triple(e, i);
      auto [it, fresh] = seen.emplace(t, faces[i]);
      if (!fresh && !(it->second == faces[i])) throw error(errc::invalid_coloring, "faces disagree across edges");
      out.set(t, faces[i]);
    }
  }
  return out;
}

// Inverse direction: the unique color of each edge whose faces match tc4, if every edge has one.
inline std::optional<OrientedColoring> accordant_from_triple_coloring(const Hypergraph& g, const TripleColoring4& tc4, const Permutation& pi) {
  if (g.uniformity() != 4) throw error(errc::unsupported_arity, "triple colorings need uniformity 4");
  if (!detail::triple_palette_supported(pi)) throw error(errc::domain, "pi must be conjugate to cyc or cyc^2");
  OrientedColoring chi(color_set(4, pi));
  for (const auto& e : g.edges()) {
    bool found = false;
    for (const auto& c : chi.colors().colors()) {
      auto faces = detail::tetrahedron_faces(chi.colors(), e, c);
      bool match = true;
      for (int i = 0; i < 4 && match; ++i) match = tc4.get(detail::face_triple(e, i)) == faces[i];
      if (match) {
        chi.assign(e, c);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  if (!verify_accordant(g, chi)) return std::nullopt;
  return chi;
}

inline bool verify_boundary_patterns(const Hypergraph& g, const TripleColoring4& tc4, int k) {
  if (g.uniformity() != 4) throw error(errc::unsupported_arity, "boundary patterns need uniformity 4");
  if (k < 1 || k > 3) throw error(errc::domain, "residue must be 1, 2 or 3");
  ColorSet cs = color_set(4, Permutation::cyc(4).pow(k));
  const auto& t = detail::table(4);
  for (const auto& e : g.edges()) {
    bool matched = false;
    for (int sg = 0; sg < t.n && !matched; ++sg) {
      Tuple y = t.perms[sg].act(e);
      for (int i = 0; i < static_cast<int>(cs.classes().size()) && !matched; ++i) {
        auto faces = detail::tetrahedron_faces(cs, y, Color{i, Permutation::identity(4)});
        bool ok = true;
        for (int f = 0; f < 4 && ok; ++f) ok = tc4.get(detail::face_triple(y, f)) == faces[f];
        matched = ok;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// Triples with one vertex on one side and two on the other are pointed at the lone vertex;
// triples inside a part are blue. Parts are {0..a-1} and {a..a+b-1}.
inline TripleColoring4 godd_triple_coloring(int a, int b) {
  int n = a + b;
  TripleColoring4 tc(n, false);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        int in_a = (x < a) + (y < a) + (z < a);
        if (in_a == 0 || in_a == 3) {
          tc.set({x, y, z}, {TriangleKind::blue, {}});
        } else {
          bool lone_in_a = in_a == 1;
          Vertex apex = ((x < a) == lone_in_a) ? x : ((y < a) == lone_in_a) ? y : z;
          tc.set({x, y, z}, {TriangleKind::pointed, {apex}});
        }
      }
  return tc;
}

// --- link colorings ------------------------------------------------------

enum class LinkKind { none, green, red1, red2, red3, blue1, blue2, blue3, purple };

inline const char* link_kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::none: return "none";
    case LinkKind::green: return "green";
    case LinkKind::red1: return "red-1";
    case LinkKind::red2: return "red-2";
    case LinkKind::red3: return "red-3";
    case LinkKind::blue1: return "blue-1";
    case LinkKind::blue2: return "blue-2";
    case LinkKind::blue3: return "blue-3";
    case LinkKind::purple: return "purple";
  }
  return "?";
}

struct LinkEdge {
  LinkKind kind = LinkKind::none;
  Vertex tail = -1;  // set for red and purple kinds
  Vertex head = -1;
};

struct LinkColoring {
  int n = 0;
  Vertex w = 0;
  std::map<Pair, LinkEdge> edges;  // every pair of V - {w}

  // Reds merged, blues merged; pairs over free triples become blue.
  EdgeColoring2 simplified() const {
    EdgeColoring2 c(n);
    for (const auto& [p, le] : edges) {
      switch (le.kind) {
        case LinkKind::green: c.set(p[0], p[1], PairColor::green); break;
        case LinkKind::red1:
        case LinkKind::red2:
        case LinkKind::red3: c.set_directed(le.tail, le.head, PairColor::red); break;
        case LinkKind::purple: c.set_directed(le.tail, le.head, PairColor::purple); break;
        default: c.set(p[0], p[1], PairColor::blue); break;
      }
    }
    return c;
  }

  long long count(LinkKind k) const {
    long long c = 0;
    for (const auto& [p, le] : edges)
      if (le.kind == k) ++c;
    return c;
  }
};

// Color of xy in the link of w, read off the color of the triple wxy.
inline LinkColoring link_coloring(const TripleColoring4& tc4, Vertex w) {
  int n = tc4.vertex_count();
  if (w < 0 || w >= n) throw error(errc::domain, "vertex outside host set");
  LinkColoring lc;
  lc.n = n;
  lc.w = w;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (x == w || y == w) continue;
      TriangleColor c = tc4.get(make_triple(w, x, y));
      LinkEdge le;
      auto toward = [&](Vertex v) {
        le.head = v;
        le.tail = v == x ? y : x;
      };
      switch (c.kind) {
        case TriangleKind::free: break;
        case TriangleKind::pointed:
          if (c.datum[0] == w) {
            le.kind = LinkKind::green;
          } else {
            le.kind = LinkKind::red1;
            toward(c.datum[0]);
          }
          break;
        case TriangleKind::blue: le.kind = LinkKind::blue1; break;
        case TriangleKind::circle: {
          // rotation w -> a -> b gives a -> b
          auto d = c.datum;
          std::rotate(d.begin(), std::find(d.begin(), d.end(), w), d.end());
          le.kind = LinkKind::purple;
          le.tail = d[1];
          le.head = d[2];
          break;
        }
        case TriangleKind::red_edge:
        case TriangleKind::yellow_edge: {
          bool red = c.kind == TriangleKind::red_edge;
          if (c.datum[0] != w && c.datum[1] != w) {
            le.kind = red ? LinkKind::blue2 : LinkKind::blue3;
          } else {
            le.kind = red ? LinkKind::red3 : LinkKind::red2;
            toward(c.datum[0] == w ? c.datum[1] : c.datum[0]);
          }
          break;
        }
      }
      lc.edges[{x, y}] = le;
    }
  return lc;
}

}  // namespace tightcycle
