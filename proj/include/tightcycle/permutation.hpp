#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "tightcycle/error.hpp"

namespace tightcycle {

inline constexpr int max_arity = 6;

inline int factorial(int r) {
  int f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

// Permutation of {0,...,r-1}. Composition is right-to-left: (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(const std::vector<int>& images) : r_(static_cast<int>(images.size())) {
    if (r_ < 1 || r_ > max_arity)
      throw error(errc::unsupported_arity, "permutation arity " + std::to_string(r_));
    std::array<bool, max_arity> seen{};
    for (int i = 0; i < r_; ++i) {
      int v = images[i];
      if (v < 0 || v >= r_ || seen[v]) throw error(errc::domain, "images do not form a bijection");
      seen[v] = true;
      img_[i] = static_cast<std::uint8_t>(v);
    }
  }

  static Permutation identity(int r) {
    std::vector<int> im(r);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(im);
  }

  // The long cycle (1 2 ... r); on tuples it maps x1...xr to xr x1 ... x(r-1).
  static Permutation cyc(int r) {
    std::vector<int> im(r);
    for (int i = 0; i < r; ++i) im[i] = (i + 1) % r;
    return Permutation(im);
  }

  // Inverse of rank(): the permutation whose image sequence is the rank-th in lex order.
  static Permutation from_rank(int r, int rank) {
    std::vector<int> pool(r), im(r);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < r; ++i) {
      int f = factorial(r - 1 - i);
      int q = rank / f;
      rank %= f;
      im[i] = pool[q];
      pool.erase(pool.begin() + q);
    }
    return Permutation(im);
  }

  int arity() const { return r_; }
  int operator[](int i) const { return img_[i]; }
  int operator()(int i) const { return img_[i]; }

  std::vector<int> images() const { return std::vector<int>(img_.begin(), img_.begin() + r_); }

  Permutation operator*(const Permutation& q) const {
    require_same_arity(q);
    Permutation p = *this;
    for (int i = 0; i < r_; ++i) p.img_[i] = img_[q.img_[i]];
    return p;
  }

  Permutation inverse() const {
    Permutation p = *this;
    for (int i = 0; i < r_; ++i) p.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  Permutation pow(int k) const {
    int ord = order();
    k %= ord;
    if (k < 0) k += ord;
    Permutation p = identity(r_);
    for (int i = 0; i < k; ++i) p = *this * p;
    return p;
  }

  // Lex rank of the image sequence, in [0, r!).
  int rank() const {
    int rk = 0;
    for (int i = 0; i < r_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < r_; ++j)
        if (img_[j] < img_[i]) ++smaller;
      rk += smaller * factorial(r_ - 1 - i);
    }
    return rk;
  }

  bool is_identity() const {
    for (int i = 0; i < r_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  // Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> lens;
    std::array<bool, max_arity> seen{};
    for (int i = 0; i < r_; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  }

  int order() const {
    int o = 1;
    for (int len : cycle_type()) o = std::lcm(o, len);
    return o;
  }

  int sign() const {
    int s = 1;
    for (int len : cycle_type())
      if (len % 2 == 0) s = -s;
    return s;
  }

  // pi(x1...xr) = x_{pi^-1(1)} ... x_{pi^-1(r)}, i.e. entry i moves to slot pi(i).
  template <class T>
  std::vector<T> act(const std::vector<T>& x) const {
    if (static_cast<int>(x.size()) != r_) throw error(errc::arity_mismatch, "tuple length differs from arity");
    std::vector<T> y(r_);
    for (int i = 0; i < r_; ++i) y[img_[i]] = x[i];
    return y;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.r_ == b.r_ && std::equal(a.img_.begin(), a.img_.begin() + a.r_, b.img_.begin());
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (a.r_ != b.r_) return a.r_ <=> b.r_;
    for (int i = 0; i < a.r_; ++i)
      if (a.img_[i] != b.img_[i]) return a.img_[i] <=> b.img_[i];
    return std::strong_ordering::equal;
  }

  void require_same_arity(const Permutation& q) const {
    if (q.r_ != r_) throw error(errc::arity_mismatch, "permutations of different arity");
  }

 private:
  int r_ = 0;
  std::array<std::uint8_t, max_arity> img_{};
};

inline bool same_cycle_type(const Permutation& a, const Permutation& b) {
  return a.arity() == b.arity() && a.cycle_type() == b.cycle_type();
}

// Cycle notation with 1-based points, fixed points omitted; identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::string s;
  std::array<bool, max_arity> seen{};
  for (int i = 0; i < p.arity(); ++i) {
    if (seen[i] || p[i] == i) continue;
    s += '(';
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (s.back() != '(') s += ' ';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

// Accepts "(1 2 3 4)", "(1 3)(2 4)", "()", "id", "cyc", "cyc^k".
inline Permutation parse_permutation(std::string_view text, int r) {
  if (r < 1 || r > max_arity) throw error(errc::unsupported_arity, "arity " + std::to_string(r));
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || (!t.empty() && t.back() != ' ')) t += c;
  while (!t.empty() && t.back() == ' ') t.pop_back();
  if (t.empty() || t == "id" || t == "()") return Permutation::identity(r);
  if (t.rfind("cyc", 0) == 0) {
    int k = 1;
    if (t.size() > 3) {
      if (t[3] != '^' || t.size() == 4) throw error(errc::parse, "bad permutation '" + std::string(text) + "'");
      try {
        k = std::stoi(t.substr(4));
      } catch (const std::exception&) {
        throw error(errc::parse, "bad permutation '" + std::string(text) + "'");
      }
    }
    return Permutation::cyc(r).pow(k);
  }
  Permutation p = Permutation::identity(r);
  std::size_t i = 0;
  std::array<bool, max_arity> used{};
  while (i < t.size()) {
    if (t[i] == ' ') {
      ++i;
      continue;
    }
    if (t[i] != '(') throw error(errc::parse, "bad permutation '" + std::string(text) + "'");
    std::size_t close = t.find(')', i);
    if (close == std::string::npos) throw error(errc::parse, "unbalanced parenthesis in '" + std::string(text) + "'");
    std::vector<int> cycle;
    std::string body = t.substr(i + 1, close - i - 1);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && body[pos] == ' ') ++pos;
      std::size_t end = pos;
      while (end < body.size() && body[end] != ' ') ++end;
      if (end > pos) {
        int v = 0;
        for (std::size_t q = pos; q < end; ++q) {
          if (!std::isdigit(static_cast<unsigned char>(body[q])))
            throw error(errc::parse, "bad point in '" + std::string(text) + "'");
          v = v * 10 + (body[q] - '0');
        }
        if (v < 1 || v > r) throw error(errc::domain, "point " + std::to_string(v) + " outside 1.." + std::to_string(r));
        if (used[v - 1]) throw error(errc::parse, "repeated point in '" + std::string(text) + "'");
        used[v - 1] = true;
        cycle.push_back(v - 1);
      }
      pos = end;
    }
    std::vector<int> im = p.images();
    for (std::size_t c = 0; c < cycle.size(); ++c) im[cycle[c]] = cycle[(c + 1) % cycle.size()];
    p = Permutation(im);
    i = close + 1;
  }
  return p;
}

}  // namespace tightcycle
