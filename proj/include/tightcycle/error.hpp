#pragma once

#include <stdexcept>
#include <string>

namespace tightcycle {

enum class errc {
  unsupported_arity,
  arity_mismatch,
  invalid_length,
  invalid_query,
  invalid_partition,
  invalid_orientation,
  invalid_oriented_edge,
  invalid_coloring,
  coverage,
  precondition,
  not_hom_free,
  hypothesis,
  domain,
  budget,
  parse,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unsupported_arity: return "unsupported-arity";
    case errc::arity_mismatch: return "arity-mismatch";
    case errc::invalid_length: return "invalid-length";
    case errc::invalid_query: return "invalid-query";
    case errc::invalid_partition: return "invalid-partition";
    case errc::invalid_orientation: return "invalid-orientation";
    case errc::invalid_oriented_edge: return "invalid-oriented-edge";
    case errc::invalid_coloring: return "invalid-coloring";
    case errc::coverage: return "coverage";
    case errc::precondition: return "precondition";
    case errc::not_hom_free: return "not-hom-free";
    case errc::hypothesis: return "hypothesis";
    case errc::domain: return "domain";
    case errc::budget: return "budget";
    case errc::parse: return "parse";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Raised when an exhaustive search would exceed its candidate budget.
class budget_error : public error {
 public:
  budget_error(const std::string& what, long long lower_bound)
      : error(errc::budget, what), lower_bound_(lower_bound) {}
  long long lower_bound() const noexcept { return lower_bound_; }

 private:
  long long lower_bound_;
};

}  // namespace tightcycle
