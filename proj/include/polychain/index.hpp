#ifndef POLYCHAIN_INDEX_HPP
#define POLYCHAIN_INDEX_HPP

#include <array>
#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "polychain/chain.hpp"
#include "polychain/rational.hpp"

namespace polychain {

template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

/// Ordering policy for index values. Rational values compare exactly;
/// floating values treat |a-b| <= eps*max(1,|a|,|b|) as equal.
template <Scalar T>
struct Tolerance;

template <>
struct Tolerance<Rational> {
  static constexpr bool exact = true;

  int compare(const Rational& a, const Rational& b) const { return a < b ? -1 : (b < a ? 1 : 0); }
  bool equal(const Rational& a, const Rational& b) const { return a == b; }
  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

template <>
struct Tolerance<double> {
  static constexpr bool exact = false;
  double eps = 1e-9;

  bool equal(double a, double b) const {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= eps * scale;
  }
  int compare(double a, double b) const {
    if (equal(a, b)) return 0;
    return a < b ? -1 : 1;
  }
  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// A degree-based index: f(a,b) tabulated on the six unordered pairs over
/// {2,3,4}, the only degrees a polyomino chain can have.
template <Scalar T>
struct IndexFunction {
  std::string name;
  std::array<T, 6> values{};
  Tolerance<T> tolerance{};

  const T& operator()(DegreePair p) const { return values[p.index()]; }
  const T& operator()(int a, int b) const { return values[DegreePair(a, b).index()]; }

  friend bool operator==(const IndexFunction&, const IndexFunction&) = default;
};

using RationalIndex = IndexFunction<Rational>;
using FloatIndex = IndexFunction<double>;
using AnyIndex = std::variant<RationalIndex, FloatIndex>;

inline std::string_view mode_name(const AnyIndex& f) {
  return std::holds_alternative<RationalIndex>(f) ? "rational" : "float";
}

/// Builds a table by evaluating `fn(a, b)` on every degree pair.
template <Scalar T, class Fn>
IndexFunction<T> tabulate(std::string name, Fn&& fn, Tolerance<T> tolerance = {}) {
  IndexFunction<T> f{std::move(name), {}, tolerance};
  for (DegreePair p : kDegreePairs) f.values[p.index()] = static_cast<T>(fn(p.low, p.high));
  return f;
}

template <Scalar T>
IndexFunction<T> negate(const IndexFunction<T>& f) {
  IndexFunction<T> g = f;
  g.name = f.name + "_neg";
  for (auto& v : g.values) v = -v;
  return g;
}

inline AnyIndex negate(const AnyIndex& f) {
  return std::visit([](const auto& g) -> AnyIndex { return negate(g); }, f);
}

/// Per-square increments of the two-link recurrence, plus the value of the
/// two-square chain that seeds it.
template <Scalar T>
struct GTable {
  T g11{};
  T g12{};
  T g21{};
  T g22{};
  T g2{};
  T base_pc2{};

  /// Increment for the third square.
  const T& first(Link l3) const { return l3 == Link::straight ? g11 : g2; }
  /// Increment for square k given links L_{k-1} and L_k.
  const T& step(Link prev, Link next) const {
    if (prev == Link::straight) return next == Link::straight ? g11 : g12;
    return next == Link::straight ? g21 : g22;
  }

  friend bool operator==(const GTable&, const GTable&) = default;
};

template <Scalar T>
GTable<T> g_table(const IndexFunction<T>& f) {
  const T& f22 = f(2, 2);
  const T& f23 = f(2, 3);
  const T& f24 = f(2, 4);
  const T& f33 = f(3, 3);
  const T& f34 = f(3, 4);
  const T& f44 = f(4, 4);
  GTable<T> g;
  g.g11 = 3 * f33;
  g.g12 = 3 * f34 + f24 + f23 - 2 * f33;
  g.g21 = f34 - f24 + f23 + 2 * f33;
  g.g22 = f44 + 2 * f24;
  g.g2 = 2 * f34 + 2 * f24 - f33;
  g.base_pc2 = 4 * f23 + 2 * f22 + f33;
  return g;
}

/// Index value by building the corner graph and summing f over its edges.
template <Scalar T>
T ti_direct(const LinkVector& chain, const IndexFunction<T>& f) {
  const EdgeDegreeMultiset edges = edge_degree_multiset(chain);
  T total{};
  for (DegreePair p : kDegreePairs) {
    const std::size_t c = edges[p];
    if (c) total += static_cast<T>(static_cast<long long>(c)) * f(p);
  }
  return total;
}

/// Index value by the two-link increment recurrence.
template <Scalar T>
T ti_recursive(const LinkVector& chain, const GTable<T>& g) {
  T total = g.base_pc2;
  if (chain.empty()) return total;
  total += g.first(chain[0]);
  for (std::size_t k = 1; k < chain.size(); ++k) total += g.step(chain[k - 1], chain[k]);
  return total;
}

template <Scalar T>
T ti_recursive(const LinkVector& chain, const IndexFunction<T>& f) {
  return ti_recursive(chain, g_table(f));
}

namespace presets {

inline RationalIndex azi() {
  return tabulate<Rational>("azi", [](int x, int y) {
    Rational r(x * y, x + y - 2);
    return r * r * r;
  });
}

inline RationalIndex zagreb1() {
  return tabulate<Rational>("zagreb1", [](int x, int y) { return Rational(x + y); });
}

inline RationalIndex zagreb2() {
  return tabulate<Rational>("zagreb2", [](int x, int y) { return Rational(x * y); });
}

inline RationalIndex harmonic() {
  return tabulate<Rational>("harmonic", [](int x, int y) { return Rational(2, x + y); });
}

/// (xy)^gamma; rational whenever gamma is an integer.
inline AnyIndex randic(const Rational& gamma) {
  const std::string name = "randic(" + to_string(gamma) + ")";
  if (denominator(gamma) == 1) {
    const long exponent = numerator(gamma).convert_to<long>();
    return tabulate<Rational>(name, [exponent](int x, int y) {
      Rational base(x * y), r(1);
      for (long k = 0; k < std::labs(exponent); ++k) r *= base;
      return exponent < 0 ? Rational(1) / r : r;
    });
  }
  const double g = gamma.convert_to<double>();
  return tabulate<double>(name, [g](int x, int y) { return std::pow(double(x * y), g); });
}

inline FloatIndex abc() {
  return tabulate<double>("abc", [](int x, int y) { return std::sqrt(double(x + y - 2) / (x * y)); });
}

inline FloatIndex ga() {
  return tabulate<double>("ga", [](int x, int y) { return 2.0 * std::sqrt(double(x * y)) / (x + y); });
}

inline FloatIndex sum_connectivity() {
  return tabulate<double>("sum_connectivity", [](int x, int y) { return 1.0 / std::sqrt(double(x + y)); });
}

}  // namespace presets

/// Names accepted by `preset`; randic needs its exponent.
inline constexpr std::array<std::string_view, 8> kPresetNames{
    "azi", "zagreb1", "zagreb2", "harmonic", "randic", "abc", "ga", "sum_connectivity"};

inline AnyIndex preset(std::string_view name, const Rational& randic_gamma = Rational(-1, 2)) {
  if (name == "azi") return presets::azi();
  if (name == "zagreb1") return presets::zagreb1();
  if (name == "zagreb2") return presets::zagreb2();
  if (name == "harmonic") return presets::harmonic();
  if (name == "randic") return presets::randic(randic_gamma);
  if (name == "abc") return presets::abc();
  if (name == "ga") return presets::ga();
  if (name == "sum_connectivity") return presets::sum_connectivity();
  throw std::domain_error("unknown index '" + std::string(name) + "'");
}

inline const std::string& index_name(const AnyIndex& f) {
  return std::visit([](const auto& g) -> const std::string& { return g.name; }, f);
}

}  // namespace polychain

#endif  // POLYCHAIN_INDEX_HPP
