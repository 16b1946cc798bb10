#pragma once

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tightcycle/error.hpp"
#include "tightcycle/permutation.hpp"

namespace tightcycle {

namespace detail {

inline constexpr int max_group_order = 720;
using member_set = std::bitset<max_group_order>;

// Multiplication and inverse tables for S_r indexed by lex rank.
struct SymmetricTable {
  int r = 0;
  int n = 0;
  std::vector<Permutation> perms;
  std::vector<std::uint16_t> mul;  // mul[a*n+b] = rank(perm a * perm b)
  std::vector<std::uint16_t> inv;

  explicit SymmetricTable(int arity) : r(arity), n(factorial(arity)) {
    perms.reserve(n);
    for (int i = 0; i < n; ++i) perms.push_back(Permutation::from_rank(r, i));
    mul.resize(static_cast<std::size_t>(n) * n);
    inv.resize(n);
    for (int a = 0; a < n; ++a) {
      inv[a] = static_cast<std::uint16_t>(perms[a].inverse().rank());
      for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((perms[a] * perms[b]).rank());
    }
  }

  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
  int conj(int s, int g) const { return times(times(s, g), inv[s]); }
};

inline void check_arity(int r) {
  if (r < 2 || r > max_arity) throw error(errc::unsupported_arity, "arity " + std::to_string(r) + " outside 2..6");
}

inline const SymmetricTable& table(int r) {
  if (r < 1 || r > max_arity) throw error(errc::unsupported_arity, "arity " + std::to_string(r));
  static std::once_flag flags[max_arity + 1];
  static std::unique_ptr<SymmetricTable> tables[max_arity + 1];
  std::call_once(flags[r], [r] { tables[r] = std::make_unique<SymmetricTable>(r); });
  return *tables[r];
}

// Closure of gens under composition, as a sorted list of ranks.
inline std::vector<int> closure(int r, const std::vector<int>& gens) {
  const SymmetricTable& t = table(r);
  member_set seen;
  std::vector<int> out{0};
  seen.set(0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      int h = t.times(out[i], g);
      if (!seen.test(h)) {
        seen.set(h);
        out.push_back(h);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int r) { return from_ranks(r, {0}); }

  static PermGroup symmetric(int r) {
    std::vector<int> all(factorial(r));
    std::iota(all.begin(), all.end(), 0);
    return from_ranks(r, all);
  }

  static PermGroup alternating(int r) {
    std::vector<int> even;
    const auto& t = detail::table(r);
    for (int i = 0; i < t.n; ++i)
      if (t.perms[i].sign() == 1) even.push_back(i);
    return from_ranks(r, even);
  }

  static PermGroup generated_by(int r, const std::vector<Permutation>& gens) {
    std::vector<int> ranks;
    for (const auto& g : gens) {
      if (g.arity() != r) throw error(errc::arity_mismatch, "generator arity differs from group arity");
      ranks.push_back(g.rank());
    }
    return from_ranks(r, detail::closure(r, ranks));
  }

  // Validates the group axioms; throws domain error otherwise.
  static PermGroup from_elements(int r, const std::vector<Permutation>& elems) {
    std::vector<int> ranks;
    for (const auto& p : elems) {
      if (p.arity() != r) throw error(errc::arity_mismatch, "element arity differs from group arity");
      ranks.push_back(p.rank());
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    if (detail::closure(r, ranks) != ranks) throw error(errc::domain, "element set is not a subgroup");
    return from_ranks(r, ranks);
  }

  // ranks must already form a subgroup.
  static PermGroup from_ranks(int r, const std::vector<int>& ranks) {
    PermGroup g;
    g.r_ = r;
    const auto& t = detail::table(r);
    g.ranks_ = ranks;
    std::sort(g.ranks_.begin(), g.ranks_.end());
    g.elems_.reserve(ranks.size());
    for (int k : g.ranks_) {
      g.elems_.push_back(t.perms[k]);
      g.member_.set(k);
    }
    return g;
  }

  int arity() const { return r_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<int>& ranks() const { return ranks_; }
  const detail::member_set& members() const { return member_; }

  bool contains(const Permutation& p) const { return p.arity() == r_ && member_.test(p.rank()); }

  bool is_subgroup_of(const PermGroup& h) const { return r_ == h.r_ && (member_ & ~h.member_).none(); }

  // s * G * s^-1
  PermGroup conjugate(const Permutation& s) const {
    if (s.arity() != r_) throw error(errc::arity_mismatch, "conjugating permutation arity differs");
    const auto& t = detail::table(r_);
    int sr = s.rank();
    std::vector<int> out;
    out.reserve(ranks_.size());
    for (int g : ranks_) out.push_back(t.conj(sr, g));
    return from_ranks(r_, out);
  }

  // Greedy generating set: scan elements in order, keep those outside the span so far.
  std::vector<Permutation> generators() const {
    std::vector<int> gens;
    detail::member_set span;
    span.set(0);
    for (int k : ranks_) {
      if (span.test(k)) continue;
      gens.push_back(k);
      span.reset();
      for (int m : detail::closure(r_, gens)) span.set(m);
    }
    std::vector<Permutation> out;
    for (int k : gens) out.push_back(detail::table(r_).perms[k]);
    return out;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.r_ == b.r_ && a.ranks_ == b.ranks_; }
  friend bool operator<(const PermGroup& a, const PermGroup& b) {
    if (a.r_ != b.r_) return a.r_ < b.r_;
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ranks_ < b.ranks_;
  }

 private:
  int r_ = 0;
  std::vector<int> ranks_;
  std::vector<Permutation> elems_;
  detail::member_set member_;
};

// Lexicographically least conjugate (by sorted element list).
inline PermGroup canonical_conjugate(const PermGroup& g) {
  const auto& t = detail::table(g.arity());
  std::vector<int> best;
  for (int s = 0; s < t.n; ++s) {
    std::vector<int> c;
    c.reserve(g.order());
    for (int e : g.ranks()) c.push_back(t.conj(s, e));
    std::sort(c.begin(), c.end());
    if (best.empty() || c < best) best = std::move(c);
  }
  return PermGroup::from_ranks(g.arity(), best);
}

inline std::size_t conjugate_count(const PermGroup& g) {
  const auto& t = detail::table(g.arity());
  std::unordered_set<detail::member_set> seen;
  for (int s = 0; s < t.n; ++s) {
    detail::member_set m;
    for (int e : g.ranks()) m.set(t.conj(s, e));
    seen.insert(m);
  }
  return seen.size();
}

// True iff some conjugate of h is contained in g.
inline bool embeds_up_to_conjugacy(const PermGroup& h, const PermGroup& g) {
  if (h.arity() != g.arity()) throw error(errc::arity_mismatch, "groups of different arity");
  if (g.order() % h.order() != 0) return false;
  const auto& t = detail::table(h.arity());
  for (int s = 0; s < t.n; ++s) {
    bool inside = true;
    for (int e : h.ranks())
      if (!g.members().test(t.conj(s, e))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

// Returns sigma with h inside sigma * g * sigma^-1, if one exists.
inline std::optional<Permutation> conjugator_into(const PermGroup& h, const PermGroup& g) {
  if (h.arity() != g.arity()) throw error(errc::arity_mismatch, "groups of different arity");
  const auto& t = detail::table(h.arity());
  for (int s = 0; s < t.n; ++s) {
    // h <= s g s^-1  iff  s^-1 h s <= g
    int si = t.inv[s];
    bool inside = true;
    for (int e : h.ranks())
      if (!g.members().test(t.conj(si, e))) {
        inside = false;
        break;
      }
    if (inside) return t.perms[s];
  }
  return std::nullopt;
}

struct SubgroupClass {
  PermGroup representative;
  std::size_t class_size = 0;
  std::string name;

  std::size_t order() const { return representative.order(); }
  std::size_t normalizer_order() const { return static_cast<std::size_t>(factorial(representative.arity())) / class_size; }
};

namespace detail {

inline PermGroup sym_on_prefix(int r, int m) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<int> im(r);
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[i], im[i + 1]);
    gens.emplace_back(im);
  }
  return PermGroup::generated_by(r, gens);
}

inline PermGroup alt_on_prefix(int r, int m) {
  std::vector<Permutation> gens;
  for (int i = 0; i + 2 < m; ++i) {
    std::vector<int> im(r);
    std::iota(im.begin(), im.end(), 0);
    im[i] = i + 1;
    im[i + 1] = i + 2;
    im[i + 2] = i;
    gens.emplace_back(im);
  }
  return PermGroup::generated_by(r, gens);
}

inline std::vector<std::pair<PermGroup, std::string>> named_groups(int r) {
  std::vector<std::pair<PermGroup, std::string>> out;
  for (int m = 1; m <= r; ++m) out.emplace_back(canonical_conjugate(sym_on_prefix(r, m)), "S" + std::to_string(m));
  for (int m = 3; m <= r; ++m) out.emplace_back(canonical_conjugate(alt_on_prefix(r, m)), "A" + std::to_string(m));
  if (r == 4) {
    auto p = [](const char* s) { return parse_permutation(s, 4); };
    out.emplace_back(canonical_conjugate(PermGroup::generated_by(4, {p("(1 2 3 4)"), p("(1 3)")})), "D4");
    out.emplace_back(canonical_conjugate(PermGroup::generated_by(4, {p("(1 2 3 4)")})), "C4");
    out.emplace_back(canonical_conjugate(PermGroup::generated_by(4, {p("(1 2)"), p("(3 4)")})), "Klein-nonnormal");
    out.emplace_back(canonical_conjugate(PermGroup::generated_by(4, {p("(1 2)(3 4)"), p("(1 3)(2 4)")})), "Klein-normal");
  }
  return out;
}

inline std::vector<SubgroupClass> compute_classes(int r) {
  const SymmetricTable& t = table(r);
  std::vector<PermGroup> reps{PermGroup::trivial(r)};
  std::unordered_set<member_set> seen_subgroups;
  std::unordered_set<member_set> seen_classes;
  seen_classes.insert(reps[0].members());
  for (std::size_t q = 0; q < reps.size(); ++q) {
    std::vector<int> base = reps[q].ranks();
    std::vector<int> gens;
    for (const auto& g : reps[q].generators()) gens.push_back(g.rank());
    for (int g = 1; g < t.n; ++g) {
      if (reps[q].members().test(g)) continue;
      std::vector<int> joined = gens;
      joined.push_back(g);
      std::vector<int> k = closure(r, joined);
      member_set m;
      for (int e : k) m.set(e);
      if (!seen_subgroups.insert(m).second) continue;
      PermGroup c = canonical_conjugate(PermGroup::from_ranks(r, k));
      if (seen_classes.insert(c.members()).second) reps.push_back(c);
    }
  }
  std::sort(reps.begin(), reps.end());
  auto named = named_groups(r);
  std::vector<SubgroupClass> out;
  std::map<std::size_t, int> per_order;
  for (const auto& g : reps) {
    SubgroupClass c;
    c.representative = g;
    c.class_size = conjugate_count(g);
    int j = ++per_order[g.order()];
    for (const auto& [ng, nm] : named)
      if (ng == g) c.name = nm;
    if (c.name.empty()) c.name = "order-" + std::to_string(g.order()) + "-#" + std::to_string(j);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

// All conjugacy classes of subgroups of S_r, sorted by order then canonical element list.
inline const std::vector<SubgroupClass>& enumerate_subgroup_classes(int r) {
  detail::check_arity(r);
  static std::once_flag flags[max_arity + 1];
  static std::vector<SubgroupClass> cache[max_arity + 1];
  std::call_once(flags[r], [r] { cache[r] = detail::compute_classes(r); });
  return cache[r];
}

inline bool avoids(const PermGroup& g, const Permutation& pi) {
  if (g.arity() != pi.arity()) throw error(errc::arity_mismatch, "group and permutation arity differ");
  auto type = pi.cycle_type();
  for (const auto& e : g.elements())
    if (e.cycle_type() == type) return false;
  return true;
}

// Index into enumerate_subgroup_classes(g.arity()) of the class containing g.
inline std::size_t class_index_of(const PermGroup& g) {
  const auto& classes = enumerate_subgroup_classes(g.arity());
  PermGroup c = canonical_conjugate(g);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].representative == c) return i;
  throw error(errc::domain, "group not found among subgroup classes");
}

inline std::vector<SubgroupClass> maximal_avoiding_classes(int r, const Permutation& pi) {
  detail::check_arity(r);
  if (pi.arity() != r) throw error(errc::arity_mismatch, "permutation arity differs from r");
  std::vector<const SubgroupClass*> avoiding;
  for (const auto& c : enumerate_subgroup_classes(r))
    if (avoids(c.representative, pi)) avoiding.push_back(&c);
  std::vector<SubgroupClass> out;
  for (const auto* h : avoiding) {
    bool maximal = true;
    for (const auto* k : avoiding)
      if (k->order() > h->order() && embeds_up_to_conjugacy(h->representative, k->representative)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(*h);
  }
  return out;
}

// A color is a left coset tau*Gamma_i, stored by class index and least element.
struct Color {
  int class_index = 0;
  Permutation coset_rep;

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color& a, const Color& b) {
    if (a.class_index != b.class_index) return a.class_index <=> b.class_index;
    return a.coset_rep <=> b.coset_rep;
  }
};

// The color set A_pi: disjoint union of S_r / Gamma_i over maximal pi-avoiding classes.
class ColorSet {
 public:
  ColorSet() = default;

  ColorSet(int r, const Permutation& pi) : r_(r), pi_(pi), classes_(maximal_avoiding_classes(r, pi)) {
    const auto& t = detail::table(r);
    for (int i = 0; i < static_cast<int>(classes_.size()); ++i) {
      detail::member_set covered;
      for (int s = 0; s < t.n; ++s) {
        if (covered.test(s)) continue;
        // s is the least element of its coset since cosets are visited in rank order.
        for (int g : classes_[i].representative.ranks()) covered.set(t.times(s, g));
        colors_.push_back(Color{i, t.perms[s]});
      }
    }
  }

  int arity() const { return r_; }
  const Permutation& pi() const { return pi_; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const std::vector<Color>& colors() const { return colors_; }
  std::size_t size() const { return colors_.size(); }

  // Least element of tau * Gamma_i.
  Color make(int class_index, const Permutation& tau) const {
    const auto& t = detail::table(r_);
    int tr = tau.rank();
    int best = t.n;
    for (int g : classes_.at(class_index).representative.ranks()) best = std::min(best, t.times(tr, g));
    return Color{class_index, t.perms[best]};
  }

  // sigma * (tau Gamma) = (sigma tau) Gamma
  Color act(const Permutation& sigma, const Color& c) const { return make(c.class_index, sigma * c.coset_rep); }

  bool contains(const Color& c) const { return std::binary_search(colors_.begin(), colors_.end(), c); }

  std::size_t index_of(const Color& c) const {
    auto it = std::lower_bound(colors_.begin(), colors_.end(), c);
    if (it == colors_.end() || !(*it == c)) throw error(errc::domain, "color not in color set");
    return static_cast<std::size_t>(it - colors_.begin());
  }

  // Stabilizer of tau Gamma under left multiplication: tau Gamma tau^-1.
  PermGroup stabilizer(const Color& c) const { return classes_.at(c.class_index).representative.conjugate(c.coset_rep); }

 private:
  int r_ = 0;
  Permutation pi_;
  std::vector<SubgroupClass> classes_;
  std::vector<Color> colors_;
};

inline ColorSet color_set(int r, const Permutation& pi) {
  detail::check_arity(r);
  return ColorSet(r, pi);
}

}  // namespace tightcycle
