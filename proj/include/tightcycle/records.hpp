#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tightcycle/census.hpp"
#include "tightcycle/coloring.hpp"
#include "tightcycle/extremal.hpp"
#include "tightcycle/hypergraph.hpp"
#include "tightcycle/permgroup.hpp"
#include "tightcycle/tightconn.hpp"

namespace tightcycle {

using json = nlohmann::json;

// Structured records: one JSON object per line. Rationals are "p/q" strings.

inline json to_record(const Hypergraph& g) {
  return {{"type", "hypergraph"}, {"r", g.uniformity()}, {"n", g.vertex_count()}, {"edges", g.edges()}};
}

inline Hypergraph hypergraph_from_record(const json& j) {
  try {
    return Hypergraph(j.at("r").get<int>(), j.at("n").get<int>(), j.at("edges").get<std::vector<Edge>>());
  } catch (const json::exception& e) {
    throw error(errc::parse, std::string("hypergraph record: ") + e.what());
  }
}

inline json to_record(const WalkWitness& w) {
  return {{"type", "walk"}, {"stretch", w.stretch}, {"vertices", w.vertices}};
}

inline WalkWitness walk_from_record(const json& j) {
  try {
    return WalkWitness{j.at("vertices").get<std::vector<Vertex>>(), j.at("stretch").get<int>()};
  } catch (const json::exception& e) {
    throw error(errc::parse, std::string("walk record: ") + e.what());
  }
}

inline json generators_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_cycle_string(p));
  return gens;
}

inline json to_record(const SubgroupClass& c, std::size_t index) {
  int r = c.representative.arity();
  json j{{"type", "subgroup-class"}, {"index", index},       {"name", c.name},
         {"order", c.order()},      {"class_size", c.class_size}, {"generators", generators_json(c.representative)}};
  j["avoids_cyc"] = avoids(c.representative, Permutation::cyc(r));
  if (r >= 3) j["avoids_cyc2"] = avoids(c.representative, Permutation::cyc(r).pow(2));
  return j;
}

inline json color_json(const Color& c) { return {{"class", c.class_index}, {"coset", to_cycle_string(c.coset_rep)}}; }

inline json to_record(const OrientedColoring& chi, const Edge& e) {
  const Color& c = chi.assignment().at(e);
  return {{"type", "edge-color"}, {"edge", e}, {"class", c.class_index}, {"coset", to_cycle_string(c.coset_rep)}};
}

inline json to_record(const Triple& t, const TriangleColor& c) {
  return {{"type", "triple-color"}, {"triple", t}, {"color", triangle_kind_name(c.kind)}, {"datum", c.datum}};
}

inline json check_json(const InequalityCheck& c) {
  return {{"name", c.name},
          {"lhs", static_cast<double>(c.lhs)},
          {"bound", static_cast<double>(c.bound)},
          {"slack", static_cast<double>(c.slack)},
          {"pass", c.pass}};
}

inline json to_record(const TriangleCensus& t, const InequalityReport& rep) {
  json ineq = json::array();
  for (const auto& c : rep.items) ineq.push_back(check_json(c));
  return {{"type", "census"},
          {"n", t.n},
          {"counts", {{"green", t.t_green}, {"purple", t.t_purple}, {"cherry", t.t_cherry}}},
          {"edges", {{"red", t.red}, {"blue", t.blue}, {"green", t.green}, {"purple", t.purple}}},
          {"densities",
           {{"alpha", rational_string(t.alpha)},
            {"beta", rational_string(t.beta)},
            {"gamma", rational_string(t.gamma)},
            {"delta", rational_string(t.delta)}}},
          {"inequalities", ineq},
          {"cherry_exact_constant", check_json(rep.cherry_exact)},
          {"goodman",
           {{"lhs", rational_string(rep.goodman_lhs)}, {"bound", rational_string(rep.goodman_rhs)}, {"pass", rep.goodman_pass}}},
          {"f_bound", check_json(rep.f_check)},
          {"all_pass", rep.all_pass()}};
}

inline json to_record(const FCertificate& c) {
  auto x = c.argmax.coords();
  return {{"type", "f-maximum"},
          {"region", region_name(c.region)},
          {"denominator", c.denominator},
          {"final_denominator", c.final_denominator},
          {"refinements", c.refinements},
          {"max", c.max_value},
          {"argmax", {{"alpha", x[0]}, {"beta", x[1]}, {"gamma", x[2]}, {"delta", x[3]}}},
          {"modulus", c.modulus},
          {"certified_upper", c.certified_upper},
          {"points", c.points_evaluated}};
}

inline json to_record(int n, const EOpt& e) {
  json splits = json::array();
  for (auto [a, b] : e.splits) splits.push_back({a, b});
  return {{"type", "eopt"}, {"n", n}, {"count", e.count}, {"splits", splits}};
}

inline json to_record(const SearchResult& s) {
  json w = json::array();
  for (const auto& g : s.witnesses) w.push_back(g.edges());
  return {{"type", "search"},          {"n", s.n},
          {"r", s.r},                  {"residues", s.residues},
          {"max_edges", s.max_edges},  {"optimal_count", s.optimal_count},
          {"explored", s.explored},    {"canonical", s.canonical},
          {"witnesses", w}};
}

inline SearchResult search_from_record(const json& j) {
  try {
    SearchResult s;
    s.n = j.at("n").get<int>();
    s.r = j.at("r").get<int>();
    s.residues = j.at("residues").get<std::vector<int>>();
    s.max_edges = j.at("max_edges").get<long long>();
    s.optimal_count = j.at("optimal_count").get<long long>();
    s.explored = j.at("explored").get<long long>();
    s.canonical = j.at("canonical").get<bool>();
    for (const auto& w : j.at("witnesses")) s.witnesses.emplace_back(s.r, s.n, w.get<std::vector<Edge>>());
    return s;
  } catch (const json::exception& e) {
    throw error(errc::parse, std::string("search record: ") + e.what());
  }
}

inline json to_record(const EpsCloseReport& rep) {
  json c1 = json::array(), c2 = json::array(), c3 = json::array();
  for (const auto& v : rep.cond1)
    c1.push_back({{"triple", v.triple}, {"side", side_name(v.side)}, {"degree", v.degree}, {"required", v.required}});
  for (const auto& v : rep.cond2)
    c2.push_back({{"pair", v.where}, {"side", side_name(v.side)}, {"degree", v.degree}, {"required", v.required}});
  for (const auto& v : rep.cond3)
    c3.push_back({{"vertex", v.where.at(0)}, {"side", side_name(v.side)}, {"degree", v.degree}, {"required", v.required}});
  json j{{"type", "eps-close"}, {"eps", rep.epsilon}, {"close", rep.close()},
         {"cond1", c1},         {"cond2", c2},        {"cond3", c3}};
  if (rep.primed_evaluated) {
    j["cond2_primed"] = rep.cond2_primed;
    j["cond3_primed"] = rep.cond3_primed;
  }
  return j;
}

}  // namespace tightcycle
