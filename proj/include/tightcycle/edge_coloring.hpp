#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tightcycle/error.hpp"

namespace tightcycle {

// Red and purple are directed; blue and green are not.
enum class PairColor : std::uint8_t { red, blue, green, purple };

inline const char* pair_color_name(PairColor c) {
  switch (c) {
    case PairColor::red: return "red";
    case PairColor::blue: return "blue";
    case PairColor::green: return "green";
    case PairColor::purple: return "purple";
  }
  return "?";
}

inline bool is_directed(PairColor c) { return c == PairColor::red || c == PairColor::purple; }

// Coloring of all pairs of {0..n-1}; a directed color records its tail and head.
class EdgeColoring2 {
 public:
  EdgeColoring2() = default;
  explicit EdgeColoring2(int n, PairColor fill = PairColor::blue)
      : n_(n), color_(slots(n), fill), forward_(slots(n), true) {
    if (n < 0) throw error(errc::domain, "negative vertex count");
  }

  int vertex_count() const { return n_; }

  void set(int a, int b, PairColor c) {
    std::size_t k = index(a, b);
    color_[k] = c;
    forward_[k] = !is_directed(c) || a < b;
  }
  // Same as set; for directed colors a is the tail.
  void set_directed(int tail, int head, PairColor c) { set(tail, head, c); }

  PairColor color(int a, int b) const { return color_[index(a, b)]; }

  // For a directed color: true iff the pair is oriented a -> b.
  bool points(int a, int b) const {
    std::size_t k = index(a, b);
    return forward_[k] == (a < b);
  }

  bool has(int a, int b, PairColor c) const { return color(a, b) == c; }
  bool has_arc(int tail, int head, PairColor c) const { return color(tail, head) == c && points(tail, head); }

 private:
  static std::size_t slots(int n) { return n > 1 ? static_cast<std::size_t>(n) * (n - 1) / 2 : 0; }
  std::size_t index(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) throw error(errc::domain, "bad pair " + std::to_string(a) + "," + std::to_string(b));
    if (a > b) std::swap(a, b);
    // pairs (a,b) with a<b laid out row by row
    return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
  }

  int n_ = 0;
  std::vector<PairColor> color_;
  std::vector<bool> forward_;
};

inline std::optional<PairColor> parse_pair_color(const std::string& s) {
  for (PairColor c : {PairColor::red, PairColor::blue, PairColor::green, PairColor::purple})
    if (s == pair_color_name(c)) return c;
  return std::nullopt;
}

// First line n, then one line "a b color" per pair; a is the tail of red and purple pairs.
inline std::string serialize_edge_coloring(const EdgeColoring2& c) {
  std::string s = std::to_string(c.vertex_count()) + "\n";
  for (int a = 0; a < c.vertex_count(); ++a)
    for (int b = a + 1; b < c.vertex_count(); ++b) {
      PairColor col = c.color(a, b);
      bool flip = is_directed(col) && !c.points(a, b);
      s += std::to_string(flip ? b : a) + " " + std::to_string(flip ? a : b) + " " + pair_color_name(col) + "\n";
    }
  return s;
}

// Pairs not listed keep the fill color (blue).
inline EdgeColoring2 parse_edge_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<EdgeColoring2> c;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    auto where = "line " + std::to_string(lineno) + ": ";
    if (!c) {
      int n = -1;
      std::string extra;
      if (!(ls >> n) || (ls >> extra) || n < 0) throw error(errc::parse, where + "header must be the vertex count");
      c.emplace(n);
      continue;
    }
    int a = -1, b = -1;
    std::string name, extra;
    if (!(ls >> a >> b >> name) || (ls >> extra)) throw error(errc::parse, where + "expected 'a b color'");
    auto col = parse_pair_color(name);
    if (!col) throw error(errc::parse, where + "unknown color '" + name + "'");
    if (a == b || a < 0 || b < 0 || a >= c->vertex_count() || b >= c->vertex_count())
      throw error(errc::parse, where + "bad pair");
    c->set(a, b, *col);
  }
  if (!c) throw error(errc::parse, "missing header");
  return *c;
}

// Each pair gets a uniform color and, if directed, a uniform orientation.
template <class Rng>
EdgeColoring2 random_edge_coloring(int n, Rng& rng, const std::vector<PairColor>& palette = {PairColor::red, PairColor::blue, PairColor::green, PairColor::purple}) {
  EdgeColoring2 c(n);
  std::uniform_int_distribution<std::size_t> pick(0, palette.size() - 1);
  std::bernoulli_distribution coin(0.5);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      PairColor col = palette[pick(rng)];
      if (coin(rng))
        c.set(b, a, col);
      else
        c.set(a, b, col);
    }
  return c;
}

// Purple tournament; arcs i -> j with j-i mod n in 1..(n-1)/2 when rotational, i -> j for i<j otherwise.
inline EdgeColoring2 purple_tournament(int n, bool rotational) {
  EdgeColoring2 c(n, PairColor::purple);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool forward = !rotational || (b - a) <= (n - 1) / 2;
      if (forward)
        c.set(a, b, PairColor::purple);
      else
        c.set(b, a, PairColor::purple);
    }
  return c;
}

}  // namespace tightcycle
