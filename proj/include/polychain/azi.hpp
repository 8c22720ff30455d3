#ifndef POLYCHAIN_AZI_HPP
#define POLYCHAIN_AZI_HPP

// Augmented Zagreb index: closed-form maxima, the extremal chain families,
// and regression harnesses that re-derive them from the DP and the oracle.
// Everything here is exact; there is no float entry point.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "polychain/chain.hpp"
#include "polychain/classify.hpp"
#include "polychain/cross_check.hpp"
#include "polychain/dp.hpp"
#include "polychain/index.hpp"
#include "polychain/oracle.hpp"

namespace polychain::azi {

using polychain::to_string;

/// Maximum AZI over chains with n >= 5 squares:
/// 4456/125 n - 26763/2000 - [n even] 2312/3375.
inline Rational max_closed_form(std::size_t n) {
  if (n < 5) throw std::domain_error("closed form stated for n >= 5, got n=" + std::to_string(n));
  Rational v = Rational(4456, 125) * static_cast<long long>(n) - Rational(26763, 2000);
  if (n % 2 == 0) v -= Rational(2312, 3375);
  return v;
}

enum class Family { linear, zigzag, az1, az2, pair_n4 };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::linear: return "Li";
    case Family::zigzag: return "Z";
    case Family::az1: return "AZ1";
    case Family::az2: return "AZ2";
    case Family::pair_n4: return "Pair_n4";
  }
  return "?";
}

struct ChainFamilyReport {
  std::size_t n = 0;
  Family family = Family::linear;
  std::size_t segments = 0;  // m for AZ1/AZ2
  Rational closed_value;
  BigInt labeled_count = 0;
  BigInt iso_count = 0;

  /// "AZ1(4)", "AZ2(6)", "Li", "Pair_n4".
  std::string tag() const {
    if (family == Family::az1 || family == Family::az2)
      return to_string(family) + "(" + std::to_string(segments) + ")";
    return to_string(family);
  }
};

/// ceil(n/4 - 1) for even n.
inline BigInt az2_isomorphism_count(std::size_t n) {
  return ceil(Rational(static_cast<long long>(n), 4) - 1);
}

/// The maximal chain family and its counts for n >= 3; n = 3 and n = 4 take
/// their values from the DP.
inline ChainFamilyReport extremal_report(std::size_t n) {
  if (n < 3) throw std::domain_error("AZI extremal report requires n >= 3, got " + std::to_string(n));
  ChainFamilyReport r;
  r.n = n;
  if (n <= 4) {
    r.closed_value = maximize(presets::azi(), n).value;
    if (n == 3) {
      r.family = Family::linear;
      r.labeled_count = 1;
      r.iso_count = 1;
    } else {
      r.family = Family::pair_n4;
      r.labeled_count = 2;
      r.iso_count = 1;
    }
    return r;
  }
  r.closed_value = max_closed_form(n);
  if (n % 2 == 1) {
    r.family = Family::az1;
    r.segments = (n - 1) / 2;
    r.labeled_count = 1;
    r.iso_count = 1;
  } else {
    r.family = Family::az2;
    r.segments = n / 2;
    r.labeled_count = (n - 6) / 2 + 1;
    r.iso_count = az2_isomorphism_count(n);
  }
  return r;
}

/// The labeled maximal chains predicted for n >= 3, sorted.
inline std::vector<LinkVector> predicted_maximal_set(std::size_t n) {
  std::vector<LinkVector> out;
  if (n == 3)
    out = {linear_chain(3)};
  else if (n == 4)
    out = {LinkVector{1, 2}, LinkVector{2, 1}};
  else if (n % 2 == 1)
    out = {az1((n - 1) / 2)};
  else
    out = az2_family(n / 2);
  std::sort(out.begin(), out.end());
  return out;
}

/// One verified claim; serializes as {n, claim, expected, actual, status}.
struct Check {
  std::size_t n = 0;
  std::string claim;
  std::string expected;
  std::string actual;
  bool pass = true;
};

struct VerificationReport {
  std::string name;
  std::size_t checks_run = 0;
  std::vector<Check> failures;

  bool ok() const { return failures.empty(); }
  void record(std::size_t n, std::string claim, std::string expected, std::string actual) {
    ++checks_run;
    const bool pass = expected == actual;
    if (!pass) failures.push_back({n, std::move(claim), std::move(expected), std::move(actual), false});
  }
  void absorb(const CrossCheckResult& cc, const std::string& prefix) {
    ++checks_run;
    for (const Mismatch& m : cc.mismatches)
      failures.push_back({m.n, prefix + m.claim, m.expected, m.actual, false});
  }
};

struct VerifyOptions {
  /// Enumerated-set and count checks run for n up to this bound.
  std::size_t structure_limit = 200;
  /// Exhaustive oracle confirmation runs for n up to this bound.
  std::size_t oracle_limit = 16;
  /// Replaces the DP increment table (fault injection).
  std::optional<GTable<Rational>> g_override;
};

namespace detail {

inline std::string render_set(std::vector<LinkVector> v) {
  std::sort(v.begin(), v.end());
  return polychain::detail::render(v);
}

inline std::size_t reversal_classes(const std::vector<LinkVector>& chains) {
  std::set<LinkVector> classes;
  for (const auto& c : chains) classes.insert(canonical_reversal(c));
  return classes.size();
}

}  // namespace detail

/// Re-derives the maximum-AZI theorem for 5 <= n <= n_max: DP value against
/// the closed form at every n; enumerated maximal set, labeled and
/// reversal-class counts up to `structure_limit`; oracle agreement up to
/// `oracle_limit`.
inline VerificationReport verify_theorem(std::size_t n_max, const VerifyOptions& opt = {}) {
  if (n_max < 5) throw std::domain_error("verify_theorem requires n_max >= 5, got " + std::to_string(n_max));
  const RationalIndex f = presets::azi();
  const GTable<Rational> g = opt.g_override ? *opt.g_override : g_table(f);
  const DpTable<Rational> table(g, n_max);
  VerificationReport rep;
  rep.name = "azi_max_theorem";

  for (std::size_t n = 5; n <= n_max; ++n) {
    const ExtremalResult<Rational> best = maximize(table, n);
    rep.record(n, "M(n) equals closed form", to_string(max_closed_form(n)), to_string(best.value));
    rep.record(n, "M(n,1) > M(n,2)", "true", table.compare_ends(n) > 0 ? "true" : "false");
    if (n > opt.structure_limit) continue;

    const ChainFamilyReport expected = extremal_report(n);
    const auto chains = enumerate_maximal(table, n);
    rep.record(n, "maximal set is " + expected.tag(), detail::render_set(predicted_maximal_set(n)),
               detail::render_set(chains));
    rep.record(n, "labeled count", expected.labeled_count.str(), best.labeled_count.str());
    rep.record(n, "reversal-class count", expected.iso_count.str(),
               std::to_string(detail::reversal_classes(chains)));
    rep.record(n, "witness attains closed form (graph evaluation)", to_string(expected.closed_value),
               to_string(ti_direct(best.witness, f)));
    if (n <= opt.oracle_limit) rep.absorb(cross_check(f, n, opt.g_override), "oracle: ");
  }
  return rep;
}

/// Re-derives the minimum-AZI result: Z_n is the unique minimizer for
/// n = 3,4,5 and Li_n for n >= 6; the classifier on -AZI gives n* = 6.
inline VerificationReport verify_min(std::size_t n_max, const VerifyOptions& opt = {}) {
  if (n_max < 3) throw std::domain_error("verify_min requires n_max >= 3, got " + std::to_string(n_max));
  const RationalIndex f = presets::azi();
  const RationalIndex neg = negate(f);
  GTable<Rational> g = g_table(neg);
  if (opt.g_override) {
    const GTable<Rational>& o = *opt.g_override;
    g = {-o.g11, -o.g12, -o.g21, -o.g22, -o.g2, -o.base_pc2};
  }
  const DpTable<Rational> table(g, n_max);
  VerificationReport rep;
  rep.name = "azi_min_corollary";

  const ClassifierVerdict verdict = classify(g);
  rep.record(0, "classify(-azi) case", std::string(to_string(ClassifierCase::zigzag_then_linear)),
             std::string(to_string(verdict.kind)));
  rep.record(0, "classify(-azi) n*", "6", verdict.n_star ? verdict.n_star->str() : "none");

  for (std::size_t n = 3; n <= n_max; ++n) {
    const LinkVector expected = n <= 5 ? zigzag_chain(n) : linear_chain(n);
    const std::size_t limit = std::min(n_max, opt.structure_limit);
    if (n > limit) {
      const ExtremalResult<Rational> r = maximize(table, n);
      rep.record(n, "minimizer", to_string(expected), to_string(r.witness));
      rep.record(n, "minimizer count", "1", r.labeled_count.str());
      continue;
    }
    const auto chains = enumerate_maximal(table, n);
    rep.record(n, "minimizer set", detail::render_set({expected}), detail::render_set(chains));
    if (n <= opt.oracle_limit) {
      const OracleReport<Rational> o = exhaustive(f, n);
      rep.record(n, "oracle argmin", detail::render_set({expected}), detail::render_set(o.argmin));
      rep.record(n, "oracle min value", to_string(o.min_value), to_string(-maximize(table, n).value));
    }
  }
  return rep;
}

/// At n = 6 (the threshold), whether Z_6 also attains the minimum.
inline bool zigzag_ties_linear_at_six() {
  const RationalIndex f = presets::azi();
  return ti_direct(zigzag_chain(6), f) == ti_direct(linear_chain(6), f);
}

}  // namespace polychain::azi

#endif  // POLYCHAIN_AZI_HPP
