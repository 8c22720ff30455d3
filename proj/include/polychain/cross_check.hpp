#ifndef POLYCHAIN_CROSS_CHECK_HPP
#define POLYCHAIN_CROSS_CHECK_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polychain/dp.hpp"
#include "polychain/oracle.hpp"

namespace polychain {

struct Mismatch {
  std::size_t n = 0;
  std::string claim;
  std::string expected;  // oracle
  std::string actual;    // dynamic program
};

struct CrossCheckResult {
  bool ok = true;
  std::vector<Mismatch> mismatches;
};

namespace detail {

inline std::string render(const Rational& r) { return to_string(r); }
inline std::string render(double v) { return to_float_string(v); }
inline std::string render(const BigInt& v) { return v.str(); }
inline std::string render(std::size_t v) { return std::to_string(v); }
inline std::string render(const std::vector<LinkVector>& chains) {
  std::string s = "{";
  for (std::size_t i = 0; i < chains.size(); ++i) s += (i ? " " : "") + std::string("[") + to_string(chains[i]) + "]";
  return s + "}";
}

inline std::vector<LinkVector> sorted(std::vector<LinkVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace detail

/// Compares the exhaustive oracle against the dynamic program for one n:
/// global and per-end extrema, argmax/argmin sets, and labeled counts.
/// `g_override` substitutes the DP's increment table (fault injection).
template <Scalar T>
CrossCheckResult cross_check(const IndexFunction<T>& f, std::size_t n,
                             const std::optional<GTable<T>>& g_override = {},
                             std::size_t cap = kOracleDefaultCap) {
  const OracleReport<T> oracle = exhaustive(f, n, cap);
  const Tolerance<T>& tol = f.tolerance;

  GTable<T> g_max = g_override ? *g_override : g_table(f);
  GTable<T> g_min = g_max;
  for (T* v : {&g_min.g11, &g_min.g12, &g_min.g21, &g_min.g22, &g_min.g2, &g_min.base_pc2}) *v = -*v;
  const DpTable<T> max_table(g_max, n, tol);
  const DpTable<T> min_table(g_min, n, tol);

  CrossCheckResult out;
  auto check_value = [&](const std::string& claim, const T& expected, const T& actual) {
    if (!tol.equal(expected, actual)) {
      out.ok = false;
      out.mismatches.push_back({n, claim, detail::render(expected), detail::render(actual)});
    }
  };
  auto check_set = [&](const std::string& claim, const std::vector<LinkVector>& expected,
                       const std::vector<LinkVector>& actual) {
    auto a = detail::sorted(actual);
    if (expected != a) {
      out.ok = false;
      out.mismatches.push_back({n, claim, detail::render(expected), detail::render(a)});
    }
  };
  auto check_count = [&](const std::string& claim, std::size_t expected, const BigInt& actual) {
    if (BigInt(expected) != actual) {
      out.ok = false;
      out.mismatches.push_back({n, claim, detail::render(expected), detail::render(actual)});
    }
  };

  const ExtremalResult<T> best = maximize(max_table, n);
  check_value("max value", oracle.max_value, best.value);
  check_set("argmax set", oracle.argmax, enumerate_maximal(max_table, n));
  check_count("max labeled count", oracle.argmax.size(), best.labeled_count);
  check_value("max witness value", oracle.max_value, ti_direct(best.witness, f));

  ExtremalResult<T> worst = maximize(min_table, n);
  check_value("min value", oracle.min_value, -worst.value);
  check_set("argmin set", oracle.argmin, enumerate_maximal(min_table, n));
  check_count("min labeled count", oracle.argmin.size(), worst.labeled_count);
  check_value("min witness value", oracle.min_value, ti_direct(worst.witness, f));

  for (Link end : kLinks) {
    const std::size_t e = detail::slot(end);
    const std::string tag = " (end " + std::to_string(to_int(end)) + ")";
    check_value("max value" + tag, oracle.end_max[e], max_table.value(n, end));
    check_set("argmax set" + tag, oracle.end_argmax[e], enumerate_maximal(max_table, n, end));
    check_count("max count" + tag, oracle.end_argmax[e].size(), count_maximal(max_table, n, end));
    check_value("min value" + tag, oracle.end_min[e], -min_table.value(n, end));
    check_set("argmin set" + tag, oracle.end_argmin[e], enumerate_maximal(min_table, n, end));
    check_count("min count" + tag, oracle.end_argmin[e].size(), count_maximal(min_table, n, end));
  }
  return out;
}

}  // namespace polychain

#endif  // POLYCHAIN_CROSS_CHECK_HPP
