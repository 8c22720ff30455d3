#ifndef POLYCHAIN_CLASSIFY_HPP
#define POLYCHAIN_CLASSIFY_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "polychain/index.hpp"
#include "polychain/rational.hpp"

namespace polychain {

enum class ClassifierCase {
  linear_always,                  // Li_n is the unique maximizer for n >= 3
  linear_from_four_tie_at_three,  // unique for n >= 4; PC(1) and PC(2) tie at n = 3
  zigzag_then_linear,             // Z_n below n*, Li_n from n* on
  not_applicable,
};

inline std::string_view to_string(ClassifierCase c) {
  switch (c) {
    case ClassifierCase::linear_always: return "linear_always";
    case ClassifierCase::linear_from_four_tie_at_three: return "linear_from_n4_tie_at_3";
    case ClassifierCase::zigzag_then_linear: return "zigzag_then_linear";
    case ClassifierCase::not_applicable: return "not_applicable";
  }
  return "?";
}

struct ClassifierVerdict {
  bool premise_holds = false;
  ClassifierCase kind = ClassifierCase::not_applicable;
  std::optional<BigInt> n_star;
  /// At n = n*, whether the zigzag chain ties the linear chain.
  std::optional<bool> zigzag_ties_at_threshold;
};

namespace detail {

inline BigInt ceil_scalar(const Rational& r) { return ceil(r); }
inline BigInt ceil_scalar(double v) { return BigInt(static_cast<long long>(std::ceil(v))); }

}  // namespace detail

/// Sufficient conditions under which the linear or zigzag chain maximizes
/// the index, read off the increment table alone.
template <Scalar T>
ClassifierVerdict classify(const GTable<T>& g, const Tolerance<T>& tol = {}) {
  auto gt = [&](const T& a, const T& b) { return tol.compare(a, b) > 0; };
  ClassifierVerdict v;
  const T mean = (g.g12 + g.g21) / 2;
  v.premise_holds = gt(g.g11, g.g12) && gt(g.g11, g.g22) && gt(g.g11, mean);
  if (!v.premise_holds) return v;

  const int cmp = tol.compare(g.g11, g.g2);
  if (cmp > 0) {
    v.kind = ClassifierCase::linear_always;
  } else if (cmp == 0) {
    v.kind = ClassifierCase::linear_from_four_tie_at_three;
  } else {
    if (!gt(g.g11, g.g22))
      throw std::logic_error("classifier inconsistency: g(1,1) <= g(2,2) under a holding premise");
    v.kind = ClassifierCase::zigzag_then_linear;
    const T shifted = (g.g2 - g.g11) / (g.g11 - g.g22) + 3;
    v.n_star = detail::ceil_scalar(shifted);
    // TI(Li_n) = base + g11 (n-2); TI(Z_n) = base + g2 + g22 (n-3).
    const T k = static_cast<T>(v.n_star->template convert_to<long long>());
    const T linear = g.base_pc2 + g.g11 * (k - 2);
    const T zigzag = g.base_pc2 + g.g2 + g.g22 * (k - 3);
    v.zigzag_ties_at_threshold = tol.equal(linear, zigzag);
  }
  return v;
}

template <Scalar T>
ClassifierVerdict classify(const IndexFunction<T>& f) {
  return classify(g_table(f), f.tolerance);
}

}  // namespace polychain

#endif  // POLYCHAIN_CLASSIFY_HPP
