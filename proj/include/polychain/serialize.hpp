#ifndef POLYCHAIN_SERIALIZE_HPP
#define POLYCHAIN_SERIALIZE_HPP

// JSON renderings shared by the command-line tool. Rational values appear as
// exact "p/q" strings alongside a 10-significant-digit "decimal".

#include <string>
#include <vector>

#include <json.hpp>

#include "polychain/azi.hpp"
#include "polychain/chain.hpp"
#include "polychain/classify.hpp"
#include "polychain/dp.hpp"
#include "polychain/oracle.hpp"

namespace polychain {

inline nlohmann::json to_json(const LinkVector& chain) {
  nlohmann::json a = nlohmann::json::array();
  for (Link l : chain) a.push_back(to_int(l));
  return a;
}

inline nlohmann::json to_json(const std::vector<LinkVector>& chains) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : chains) a.push_back(to_json(c));
  return a;
}

inline nlohmann::json to_json(const CellPath& cells) {
  nlohmann::json a = nlohmann::json::array();
  for (const Cell& c : cells) a.push_back({c.x, c.y});
  return a;
}

inline nlohmann::json value_json(const Rational& v) {
  return {{"exact", to_string(v)}, {"decimal", to_decimal(v)}};
}

inline nlohmann::json value_json(double v) {
  return {{"exact", nullptr}, {"float", to_float_string(v)}, {"decimal", to_decimal(v)}};
}

/// Arbitrary-precision counts stay exact as decimal strings.
inline nlohmann::json count_json(const BigInt& v) { return v.str(); }

template <Scalar T>
nlohmann::json to_json(const GTable<T>& g) {
  return {{"g11", value_json(g.g11)}, {"g12", value_json(g.g12)}, {"g21", value_json(g.g21)},
          {"g22", value_json(g.g22)}, {"g2", value_json(g.g2)},   {"base_pc2", value_json(g.base_pc2)}};
}

template <Scalar T>
nlohmann::json to_json(const ExtremalResult<T>& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["objective"] = std::string(to_string(r.objective));
  j["value"] = value_json(r.value);
  j["end_values"] = {{"1", value_json(r.end_values[0])}, {"2", value_json(r.end_values[1])}};
  nlohmann::json ends = nlohmann::json::array();
  for (Link l : r.winning_ends) ends.push_back(to_int(l));
  j["winning_ends"] = ends;
  j["witness"] = to_json(r.witness);
  j["labeled_count"] = count_json(r.labeled_count);
  if (r.iso_count) j["iso_count"] = count_json(*r.iso_count);
  j["tolerance_dependent"] = r.tolerance_dependent;
  return j;
}

inline nlohmann::json to_json(const ClassifierVerdict& v) {
  nlohmann::json j;
  j["premise_holds"] = v.premise_holds;
  j["case"] = std::string(to_string(v.kind));
  j["n_star"] = v.n_star ? nlohmann::json(v.n_star->str()) : nlohmann::json(nullptr);
  j["zigzag_ties_at_threshold"] =
      v.zigzag_ties_at_threshold ? nlohmann::json(*v.zigzag_ties_at_threshold) : nlohmann::json(nullptr);
  return j;
}

template <Scalar T>
nlohmann::json to_json(const OracleReport<T>& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["index"] = r.index_name;
  j["chains_evaluated"] = r.chains_evaluated;
  j["max_value"] = value_json(r.max_value);
  j["min_value"] = value_json(r.min_value);
  j["argmax"] = to_json(r.argmax);
  j["argmin"] = to_json(r.argmin);
  j["end_max"] = {{"1", value_json(r.end_max[0])}, {"2", value_json(r.end_max[1])}};
  j["end_argmax"] = {{"1", to_json(r.end_argmax[0])}, {"2", to_json(r.end_argmax[1])}};
  return j;
}

inline nlohmann::json to_json(const azi::Check& c) {
  return {{"n", c.n}, {"claim", c.claim}, {"expected", c.expected}, {"actual", c.actual},
          {"status", c.pass ? "pass" : "fail"}};
}

inline nlohmann::json to_json(const Mismatch& m) {
  return {{"n", m.n}, {"claim", m.claim}, {"expected", m.expected}, {"actual", m.actual}, {"status", "fail"}};
}

inline nlohmann::json to_json(const azi::VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : r.failures) failures.push_back(to_json(c));
  return {{"claim", r.name}, {"checks", r.checks_run}, {"status", r.ok() ? "pass" : "fail"},
          {"failures", failures}};
}

inline nlohmann::json to_json(const azi::ChainFamilyReport& r) {
  return {{"n", r.n},
          {"family", r.tag()},
          {"closed_value", value_json(r.closed_value)},
          {"labeled_count", count_json(r.labeled_count)},
          {"iso_count", count_json(r.iso_count)}};
}

}  // namespace polychain

#endif  // POLYCHAIN_SERIALIZE_HPP
