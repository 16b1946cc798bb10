#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tightcycle/edge_coloring.hpp"
#include "tightcycle/error.hpp"
#include "tightcycle/hypergraph.hpp"

namespace tightcycle {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline long double to_long_double(const Rational& q) { return q.convert_to<long double>(); }

// Densities are zero when n < 2 (there are no pairs to color).
struct TriangleCensus {
  int n = 0;
  long long t_green = 0, t_purple = 0, t_cherry = 0;
  long long red = 0, blue = 0, green = 0, purple = 0;
  Rational alpha, beta, gamma, delta;
};

inline TriangleCensus count_triangle_types(const EdgeColoring2& c) {
  TriangleCensus t;
  int n = t.n = c.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) switch (c.color(a, b)) {
        case PairColor::red: ++t.red; break;
        case PairColor::blue: ++t.blue; break;
        case PairColor::green: ++t.green; break;
        case PairColor::purple: ++t.purple; break;
      }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int d = b + 1; d < n; ++d) {
        PairColor ab = c.color(a, b), bd = c.color(b, d), ad = c.color(a, d);
        if (ab == PairColor::green && bd == PairColor::green && ad == PairColor::green) {
          ++t.t_green;
        } else if (ab == PairColor::purple && bd == PairColor::purple && ad == PairColor::purple) {
          bool fwd = c.points(a, b) && c.points(b, d) && c.points(d, a);
          bool bwd = c.points(b, a) && c.points(d, b) && c.points(a, d);
          if (fwd || bwd) ++t.t_purple;
        } else {
          // apex z, blue base xy, both red arcs into z
          std::array<std::array<int, 3>, 3> shapes{{{a, b, d}, {a, d, b}, {b, d, a}}};
          for (auto [x, y, z] : shapes)
            if (c.has(x, y, PairColor::blue) && c.has_arc(x, z, PairColor::red) && c.has_arc(y, z, PairColor::red)) {
              ++t.t_cherry;
              break;
            }
        }
      }
  if (n >= 2) {
    Rational pairs = Rational(binomial(n, 2));
    t.alpha = Rational(t.red) / (2 * pairs);
    t.beta = Rational(t.blue) / pairs;
    t.gamma = Rational(t.green) / pairs;
    t.delta = Rational(t.purple) / (2 * pairs);
  }
  return t;
}

// Sum over vertices of purple indegree times purple outdegree.
inline long long goodman_sum(const EdgeColoring2& c) {
  int n = c.vertex_count();
  long long s = 0;
  for (int v = 0; v < n; ++v) {
    long long in = 0, out = 0;
    for (int u = 0; u < n; ++u) {
      if (u == v || c.color(u, v) != PairColor::purple) continue;
      (c.points(u, v) ? in : out) += 1;
    }
    s += in * out;
  }
  return s;
}

inline Rational goodman_bound(int n) { return Rational(static_cast<long long>(n) * (n - 1) * (n + 1), 24); }

inline constexpr double cherry_constant = 0.465;
inline double cherry_constant_exact() { return 2.0 * std::sqrt(3.0) - 3.0; }

inline void check_nonnegative(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!(x >= 0)) throw error(errc::domain, "density arguments must be nonnegative");
}

// All evaluations use IEEE double with the default round-to-nearest mode.
// x^{3/2} is computed as x*sqrt(x), which is exact at the points of interest.
inline double eval_g(double alpha, double beta, double gamma) {
  check_nonnegative({alpha, beta, gamma});
  double harmonic = alpha + beta == 0 ? 0.0 : 3 * alpha * beta / (alpha + beta);
  return gamma * std::sqrt(gamma) + std::min({cherry_constant, harmonic, 3 * alpha * std::sqrt(beta)});
}

inline double eval_f(double alpha, double beta, double gamma, double delta) {
  check_nonnegative({alpha, beta, gamma, delta});
  double g = eval_g(alpha, beta, gamma);
  return std::min(2 * delta * std::sqrt(delta) + g, 0.25 + 0.75 * g);
}

struct InequalityCheck {
  std::string name;
  long double lhs = 0, bound = 0, slack = 0;
  bool pass = false;
};

struct InequalityReport {
  int n = 0;
  std::array<InequalityCheck, 6> items;
  // Same as item (4) with 2*sqrt(3)-3 in place of 0.465; informational.
  InequalityCheck cherry_exact;
  // T(purple) + (T(green)+T(cherry))/4 <= n(n-1)(n+1)/24, exact.
  Rational goodman_lhs, goodman_rhs;
  bool goodman_pass = false;
  // T(purple)+T(green)+T(cherry) <= f(alpha,beta,gamma,delta) n^3/6.
  InequalityCheck f_check;

  bool all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const InequalityCheck& c) { return c.pass; });
  }
};

// Relative tolerance applied to the floating-point bounds.
inline constexpr long double inequality_tolerance = 1e-12L;

inline InequalityCheck make_check(std::string name, long double lhs, long double bound) {
  InequalityCheck c{std::move(name), lhs, bound, bound - lhs, false};
  c.pass = lhs <= bound + inequality_tolerance * std::max<long double>(1, std::fabs(bound));
  return c;
}

inline InequalityReport check_color_inequalities(const TriangleCensus& t) {
  InequalityReport r;
  r.n = t.n;
  long double a = to_long_double(t.alpha), b = to_long_double(t.beta);
  long double g = to_long_double(t.gamma), d = to_long_double(t.delta);
  long double scale = static_cast<long double>(t.n) * t.n * t.n / 6;
  long double tg = t.t_green, tp = t.t_purple, tc = t.t_cherry;
  long double harmonic = a + b == 0 ? 0 : 3 * a * b / (a + b);
  r.items[0] = make_check("green", tg, g * std::sqrt(g) * scale);
  r.items[1] = make_check("purple", tp, 2 * d * std::sqrt(d) * scale);
  r.items[2] = make_check("cherry-sqrt", tc, 3 * a * std::sqrt(b) * scale);
  r.items[3] = make_check("cherry-constant", tc, static_cast<long double>(cherry_constant) * scale);
  r.items[4] = make_check("mixed", tp + (tg + tc) / 4, scale / 4);
  r.items[5] = make_check("cherry-harmonic", tc, harmonic * scale);
  r.cherry_exact = make_check("cherry-exact-constant", tc, (2 * std::sqrt(3.0L) - 3) * scale);
  r.goodman_lhs = Rational(t.t_purple) + Rational(t.t_green + t.t_cherry, 4);
  r.goodman_rhs = goodman_bound(t.n);
  r.goodman_pass = r.goodman_lhs <= r.goodman_rhs;
  double f = eval_f(static_cast<double>(a), static_cast<double>(b), static_cast<double>(g), static_cast<double>(d));
  r.f_check = make_check("f", tp + tg + tc, f * scale);
  return r;
}

// ---- grid maximization of f over R = {2a+b+c+2d = 1, c <= a} ----

enum class FRegion { all, low_gamma_delta, high_delta, gamma_equals_alpha };

inline const char* region_name(FRegion r) {
  switch (r) {
    case FRegion::all: return "all";
    case FRegion::low_gamma_delta: return "gamma+2delta<=0.1";
    case FRegion::high_delta: return "delta>=0.18";
    case FRegion::gamma_equals_alpha: return "gamma=alpha";
  }
  return "?";
}

// A grid point: alpha = i/D, gamma = j/D, delta = l/D, beta = (D-2i-j-2l)/D.
struct GridPoint {
  long long i = 0, j = 0, l = 0, den = 1;
  long long beta_num() const { return den - 2 * i - j - 2 * l; }
  std::array<double, 4> coords() const {
    double dd = static_cast<double>(den);
    return {i / dd, beta_num() / dd, j / dd, l / dd};
  }
  double value() const {
    auto c = coords();
    return eval_f(c[0], c[1], c[2], c[3]);
  }
};

inline bool in_region(const GridPoint& p, FRegion region) {
  if (p.i < 0 || p.j < 0 || p.l < 0 || p.j > p.i || p.beta_num() < 0) return false;
  switch (region) {
    case FRegion::all: return true;
    case FRegion::low_gamma_delta: return 10 * (p.j + 2 * p.l) <= p.den;
    case FRegion::high_delta: return 100 * p.l >= 18 * p.den;
    case FRegion::gamma_equals_alpha: return p.j == p.i;
  }
  return false;
}

struct FCertificate {
  FRegion region = FRegion::all;
  long long denominator = 0;        // coarse grid resolution
  long long final_denominator = 0;  // after refinement
  int refinements = 0;
  double max_value = 0;
  GridPoint argmax;
  // Largest change of f between adjacent coarse grid points.
  double modulus = 0;
  double certified_upper = 0;
  long long points_evaluated = 0;
  bool empty = true;
};

inline FCertificate maximize_f_on_R(long long denominator, FRegion region = FRegion::all, int refinements = 2) {
  if (denominator <= 0) throw error(errc::domain, "grid resolution must be positive");
  if (refinements < 0) throw error(errc::domain, "negative refinement count");
  FCertificate cert;
  cert.region = region;
  cert.denominator = cert.final_denominator = denominator;
  cert.refinements = refinements;
  auto consider = [&](const GridPoint& p) {
    double v = p.value();
    ++cert.points_evaluated;
    if (cert.empty || v > cert.max_value) {
      cert.max_value = v;
      cert.argmax = p;
      cert.empty = false;
    }
    return v;
  };
  const long long D = denominator;
  for (long long i = 0; 2 * i <= D; ++i)
    for (long long j = 0; j <= i && 2 * i + j <= D; ++j)
      for (long long l = 0; 2 * i + j + 2 * l <= D; ++l) {
        GridPoint p{i, j, l, D};
        if (!in_region(p, region)) continue;
        double v = consider(p);
        for (auto q : {GridPoint{i + 1, j, l, D}, GridPoint{i, j + 1, l, D}, GridPoint{i, j, l + 1, D},
                       GridPoint{i + 1, j + 1, l, D}})
          if (in_region(q, region)) cert.modulus = std::max(cert.modulus, std::fabs(q.value() - v));
      }
  for (int round = 0; round < refinements && !cert.empty; ++round) {
    // the incumbent may still sit on a coarser grid
    GridPoint c = cert.argmax;
    long long den = cert.final_denominator * 10, s = den / c.den;
    for (long long di = -10; di <= 10; ++di)
      for (long long dj = -10; dj <= 10; ++dj)
        for (long long dl = -10; dl <= 10; ++dl) {
          GridPoint p{c.i * s + di, c.j * s + dj, c.l * s + dl, den};
          if (in_region(p, region)) consider(p);
        }
    cert.final_denominator = den;
  }
  cert.certified_upper = cert.max_value + cert.modulus;
  return cert;
}

// ---- complete oddly bipartite edge counts ----

struct EOpt {
  long long count = 0;
  std::vector<std::pair<int, int>> splits;  // (a, b) with a >= b
};

inline long long oddly_bipartite_edges(int a, int b) { return binomial(a, 3) * b + a * binomial(b, 3); }

inline EOpt e_opt(int n) {
  if (n < 0) throw error(errc::domain, "negative vertex count");
  EOpt best;
  for (int a = n; 2 * a >= n; --a) {
    long long c = oddly_bipartite_edges(a, n - a);
    if (c > best.count || best.splits.empty()) best = EOpt{c, {}};
    if (c == best.count) best.splits.push_back({a, n - a});
  }
  return best;
}

inline long long degree_spread(const Hypergraph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<long long> deg(n, 0);
  for (const auto& e : g.edges())
    for (Vertex v : e) ++deg[v];
  auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return *hi - *lo;
}

// ---- Milne's inequality ----

struct MilneResult {
  Rational lhs, rhs, slack;
  bool holds = false;
};

inline MilneResult milne_check(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw error(errc::domain, "sequences differ in length");
  Rational harmonic = 0, total = 0, sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) throw error(errc::domain, "negative entry at index " + std::to_string(i));
    if (a[i] + b[i] == 0) throw error(errc::domain, "zero-sum pair at index " + std::to_string(i));
    harmonic += a[i] * b[i] / (a[i] + b[i]);
    total += a[i] + b[i];
    sa += a[i];
    sb += b[i];
  }
  MilneResult m;
  m.lhs = harmonic * total;
  m.rhs = sa * sb;
  m.slack = m.rhs - m.lhs;
  m.holds = m.lhs <= m.rhs;
  return m;
}

inline MilneResult milne_check(const std::vector<long long>& a, const std::vector<long long>& b) {
  return milne_check(std::vector<Rational>(a.begin(), a.end()), std::vector<Rational>(b.begin(), b.end()));
}

struct MilneStability {
  double difference = 0;  // (1/4) sum(a+b) - sum(ab)
  double threshold = 0;   // eps^3 n
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  std::vector<int> exceptional;
  bool ok() const { return !hypothesis_holds || conclusion_holds; }
};

inline MilneStability milne_stability_check(const std::vector<double>& a, const std::vector<double>& b, double eps) {
  if (a.size() != b.size()) throw error(errc::domain, "sequences differ in length");
  if (!(eps > 0)) throw error(errc::domain, "eps must be positive");
  MilneStability s;
  long double sum = 0, prod = 0;
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (!(a[i] >= 0) || !(b[i] >= 0) || !(a[i] + b[i] <= 1))
      throw error(errc::domain, "pair out of range at index " + std::to_string(i));
    sum += a[i] + b[i];
    prod += static_cast<long double>(a[i]) * b[i];
    bool middle = a[i] > 0.5 - eps && a[i] < 0.5 + eps && b[i] > 0.5 - eps && b[i] < 0.5 + eps;
    bool low = a[i] < eps && b[i] < eps;
    if (!middle && !low) s.exceptional.push_back(i);
  }
  s.difference = static_cast<double>(sum / 4 - prod);
  s.threshold = eps * eps * eps * n;
  s.hypothesis_holds = s.difference <= s.threshold;
  s.conclusion_holds = s.exceptional.size() <= eps * n;
  return s;
}

}  // namespace tightcycle
