#ifndef POLYCHAIN_DP_HPP
#define POLYCHAIN_DP_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polychain/chain.hpp"
#include "polychain/index.hpp"
#include "polychain/rational.hpp"

namespace polychain {

enum class Objective { maximize, minimize };

inline std::string_view to_string(Objective o) { return o == Objective::maximize ? "max" : "min"; }

namespace detail {

constexpr std::size_t slot(Link l) { return l == Link::straight ? 0 : 1; }

inline void require_dp_size(std::size_t n) {
  if (n < 3) throw std::domain_error("extremal problems require n >= 3, got " + std::to_string(n));
}

/// Accumulator used inside the recurrence. Rational tables are rescaled to a
/// common denominator so every step is integer addition; floats pass through.
template <Scalar T>
struct Accumulator;

template <>
struct Accumulator<Rational> {
  using type = BigInt;
  BigInt scale = 1;

  explicit Accumulator(const GTable<Rational>& g) {
    for (const Rational* r : {&g.g11, &g.g12, &g.g21, &g.g22, &g.g2, &g.base_pc2})
      scale = boost::multiprecision::lcm(scale, denominator(*r));
  }
  BigInt lift(const Rational& r) const { return numerator(r) * (scale / denominator(r)); }
  Rational lower(const BigInt& v) const { return Rational(v, scale); }
  int compare(const BigInt& a, const BigInt& b, const Tolerance<Rational>&) const {
    return a < b ? -1 : (b < a ? 1 : 0);
  }
};

template <>
struct Accumulator<double> {
  using type = double;

  explicit Accumulator(const GTable<double>&) {}
  double lift(double v) const { return v; }
  double lower(double v) const { return v; }
  int compare(double a, double b, const Tolerance<double>& tol) const { return tol.compare(a, b); }
};

}  // namespace detail

/// Optimal-value state for one square count k: per ending link, the best
/// value M(k,i), the predecessor links attaining it, and the tie count.
template <Scalar T>
struct DpState {
  std::size_t n = 0;
  std::array<T, 2> value{};
  std::array<std::uint8_t, 2> predecessors{};  // bit 0: link 1, bit 1: link 2
  std::array<BigInt, 2> ties{};

  const T& value_at(Link end) const { return value[detail::slot(end)]; }
  const BigInt& ties_at(Link end) const { return ties[detail::slot(end)]; }
  bool has_predecessor(Link end, Link prev) const {
    return predecessors[detail::slot(end)] & (1u << detail::slot(prev));
  }
  std::vector<Link> predecessor_links(Link end) const {
    std::vector<Link> out;
    for (Link l : kLinks)
      if (has_predecessor(end, l)) out.push_back(l);
    return out;
  }
};

/// Runs the two-link maximization recurrence step by step with O(1) memory.
/// `DpTable` records every step; this class alone serves value-only queries
/// for very large n.
template <Scalar T>
class DpStream {
 public:
  using Acc = typename detail::Accumulator<T>::type;

  DpStream(const GTable<T>& g, Tolerance<T> tolerance)
      : acc_(g), tolerance_(tolerance), n_(3) {
    for (Link i : kLinks)
      for (Link j : kLinks) step_[detail::slot(j)][detail::slot(i)] = acc_.lift(g.step(j, i));
    for (Link i : kLinks) {
      value_[detail::slot(i)] = acc_.lift(g.base_pc2) + acc_.lift(g.first(i));
      ties_[detail::slot(i)] = 0;
    }
    predecessors_ = {0, 0};
  }

  std::size_t n() const { return n_; }

  /// Advances from k to k+1 squares.
  void advance() {
    std::array<Acc, 2> next_value;
    std::array<BigInt, 2> next_ties;
    for (std::size_t i = 0; i < 2; ++i) {
      Acc via1 = value_[0] + step_[0][i];
      Acc via2 = value_[1] + step_[1][i];
      const int cmp = acc_.compare(via1, via2, tolerance_);
      if (cmp == 0) {
        next_value[i] = via1 < via2 ? std::move(via2) : std::move(via1);
        next_ties[i] = 1 + ties_[0] + ties_[1];
        predecessors_[i] = 0b11;
      } else if (cmp > 0) {
        next_value[i] = std::move(via1);
        next_ties[i] = ties_[0];
        predecessors_[i] = 0b01;
      } else {
        next_value[i] = std::move(via2);
        next_ties[i] = ties_[1];
        predecessors_[i] = 0b10;
      }
    }
    value_ = std::move(next_value);
    ties_ = std::move(next_ties);
    ++n_;
  }

  DpState<T> state() const {
    DpState<T> s;
    s.n = n_;
    for (std::size_t i = 0; i < 2; ++i) {
      s.value[i] = acc_.lower(value_[i]);
      s.ties[i] = ties_[i];
    }
    s.predecessors = predecessors_;
    return s;
  }

  const std::array<Acc, 2>& raw_values() const { return value_; }
  const std::array<BigInt, 2>& raw_ties() const { return ties_; }
  const std::array<std::uint8_t, 2>& raw_predecessors() const { return predecessors_; }
  const detail::Accumulator<T>& accumulator() const { return acc_; }
  const Tolerance<T>& tolerance() const { return tolerance_; }

 private:
  detail::Accumulator<T> acc_;
  Tolerance<T> tolerance_;
  std::array<std::array<Acc, 2>, 2> step_;  // [previous][next]
  std::size_t n_;
  std::array<Acc, 2> value_;
  std::array<BigInt, 2> ties_;
  std::array<std::uint8_t, 2> predecessors_;
};

/// Full recurrence table for k = 3..n, retained so maximal chains can be
/// reconstructed by walking predecessor sets backwards.
template <Scalar T>
class DpTable {
 public:
  using Acc = typename detail::Accumulator<T>::type;

  DpTable(const GTable<T>& g, std::size_t n, Tolerance<T> tolerance = {})
      : g_(g), acc_(g), tolerance_(tolerance) {
    detail::require_dp_size(n);
    const std::size_t steps = n - 2;
    values_.reserve(2 * steps);
    ties_.reserve(2 * steps);
    predecessors_.reserve(2 * steps);
    DpStream<T> stream(g, tolerance);
    record(stream);
    while (stream.n() < n) {
      stream.advance();
      record(stream);
    }
  }

  std::size_t max_n() const { return predecessors_.size() / 2 + 2; }
  const GTable<T>& g() const { return g_; }
  const Tolerance<T>& tolerance() const { return tolerance_; }

  T value(std::size_t k, Link end) const { return acc_.lower(values_[at(k, end)]); }
  const BigInt& ties(std::size_t k, Link end) const { return ties_[at(k, end)]; }
  BigInt labeled_count(std::size_t k, Link end) const { return ties(k, end) + 1; }
  std::uint8_t predecessor_mask(std::size_t k, Link end) const { return predecessors_[at(k, end)]; }
  bool has_predecessor(std::size_t k, Link end, Link prev) const {
    return predecessor_mask(k, end) & (1u << detail::slot(prev));
  }

  /// Exact-or-tolerant comparison of M(k,a) and M(k,b) in accumulator space.
  int compare_ends(std::size_t k) const {
    return acc_.compare(values_[at(k, Link::straight)], values_[at(k, Link::turn)], tolerance_);
  }

  DpState<T> state(std::size_t k) const {
    DpState<T> s;
    s.n = k;
    for (Link l : kLinks) {
      s.value[detail::slot(l)] = value(k, l);
      s.ties[detail::slot(l)] = ties(k, l);
      s.predecessors[detail::slot(l)] = predecessor_mask(k, l);
    }
    return s;
  }

 private:
  std::size_t at(std::size_t k, Link end) const {
    if (k < 3 || k > max_n())
      throw std::out_of_range("square count " + std::to_string(k) + " outside table [3, " +
                              std::to_string(max_n()) + "]");
    return 2 * (k - 3) + detail::slot(end);
  }

  void record(const DpStream<T>& s) {
    for (std::size_t i = 0; i < 2; ++i) {
      values_.push_back(s.raw_values()[i]);
      ties_.push_back(s.raw_ties()[i]);
      predecessors_.push_back(s.raw_predecessors()[i]);
    }
  }

  GTable<T> g_;
  detail::Accumulator<T> acc_;
  Tolerance<T> tolerance_;
  std::vector<Acc> values_;
  std::vector<BigInt> ties_;
  std::vector<std::uint8_t> predecessors_;
};

template <Scalar T>
DpTable<T> run_dp(const IndexFunction<T>& f, std::size_t n) {
  return DpTable<T>(g_table(f), n, f.tolerance);
}

template <Scalar T>
struct ExtremalResult {
  std::size_t n = 0;
  Objective objective = Objective::maximize;
  T value{};
  std::array<T, 2> end_values{};
  std::vector<Link> winning_ends;
  LinkVector witness;
  BigInt labeled_count = 0;
  std::optional<BigInt> iso_count;
  bool tolerance_dependent = false;
};

/// Ending links attaining the optimum at k squares, link 1 first.
template <Scalar T>
std::vector<Link> winning_ends(const DpTable<T>& table, std::size_t k, std::optional<Link> end = {}) {
  if (end) return {*end};
  const int cmp = table.compare_ends(k);
  if (cmp == 0) return {Link::straight, Link::turn};
  return {cmp > 0 ? Link::straight : Link::turn};
}

/// One maximal chain by walking predecessors back from `end`, taking link 1
/// whenever both links are optimal.
template <Scalar T>
LinkVector construct_witness(const DpTable<T>& table, std::size_t n, Link end) {
  std::vector<Link> links(n - 2);
  links[n - 3] = end;
  for (std::size_t k = n; k >= 4; --k) {
    const Link cur = links[k - 3];
    links[k - 4] = table.has_predecessor(k, cur, Link::straight) ? Link::straight : Link::turn;
  }
  return LinkVector(std::move(links));
}

template <Scalar T>
ExtremalResult<T> maximize(const DpTable<T>& table, std::size_t n, std::optional<Link> end = {}) {
  detail::require_dp_size(n);
  ExtremalResult<T> r;
  r.n = n;
  r.objective = Objective::maximize;
  r.tolerance_dependent = !Tolerance<T>::exact;
  for (Link l : kLinks) r.end_values[detail::slot(l)] = table.value(n, l);
  r.winning_ends = winning_ends(table, n, end);
  r.value = table.value(n, r.winning_ends.front());
  for (Link l : r.winning_ends) {
    T v = table.value(n, l);
    if (r.value < v) r.value = v;
    r.labeled_count += table.labeled_count(n, l);
  }
  r.witness = construct_witness(table, n, r.winning_ends.front());
  return r;
}

template <Scalar T>
ExtremalResult<T> maximize(const IndexFunction<T>& f, std::size_t n, std::optional<Link> end = {}) {
  return maximize(run_dp(f, n), n, end);
}

/// Minimum via maximization of the negated index.
template <Scalar T>
ExtremalResult<T> minimize(const IndexFunction<T>& f, std::size_t n, std::optional<Link> end = {}) {
  ExtremalResult<T> r = maximize(negate(f), n, end);
  r.objective = Objective::minimize;
  r.value = -r.value;
  for (auto& v : r.end_values) v = -v;
  return r;
}

template <Scalar T>
ExtremalResult<T> solve(const IndexFunction<T>& f, std::size_t n, Objective objective,
                        std::optional<Link> end = {}) {
  return objective == Objective::maximize ? maximize(f, n, end) : minimize(f, n, end);
}

template <Scalar T>
BigInt count_maximal(const DpTable<T>& table, std::size_t n, Link end) {
  detail::require_dp_size(n);
  return table.labeled_count(n, end);
}

template <Scalar T>
BigInt count_maximal(const IndexFunction<T>& f, std::size_t n, Link end) {
  return count_maximal(run_dp(f, n), n, end);
}

/// Value-only maximization in constant memory.
template <Scalar T>
struct StreamingResult {
  std::size_t n = 0;
  T value{};
  std::array<T, 2> end_values{};
  BigInt labeled_count = 0;
};

template <Scalar T>
StreamingResult<T> maximize_streaming(const IndexFunction<T>& f, std::size_t n) {
  detail::require_dp_size(n);
  DpStream<T> stream(g_table(f), f.tolerance);
  while (stream.n() < n) stream.advance();
  const DpState<T> s = stream.state();
  StreamingResult<T> r;
  r.n = n;
  r.end_values = s.value;
  const auto& acc = stream.accumulator();
  const int cmp = acc.compare(stream.raw_values()[0], stream.raw_values()[1], stream.tolerance());
  if (cmp >= 0) {
    r.value = s.value[0];
    r.labeled_count += s.ties[0] + 1;
  }
  if (cmp <= 0) {
    if (cmp < 0 || r.value < s.value[1]) r.value = s.value[1];
    r.labeled_count += s.ties[1] + 1;
  }
  return r;
}

/// Depth-first walk over predecessor sets yielding every maximal labeled
/// chain exactly once. Each emission costs O(n); no branch dead-ends because
/// every recorded predecessor is optimal.
///
/// With `dedup`, only the first chain of each reversal class is yielded.
template <Scalar T>
class MaximalChainEnumerator {
 public:
  MaximalChainEnumerator(const DpTable<T>& table, std::size_t n, std::optional<Link> end = {},
                         bool dedup = false)
      : table_(&table), n_(n), ends_(winning_ends(table, n, end)), dedup_(dedup) {
    detail::require_dp_size(n);
    if (n > table.max_n()) throw std::out_of_range("enumeration beyond table size");
    links_.resize(n - 2);
    option_.resize(n - 2);
  }

  std::optional<LinkVector> next() {
    while (true) {
      if (!advance()) return std::nullopt;
      LinkVector chain{links_};
      if (!dedup_) return chain;
      if (seen_.insert(canonical_reversal(chain)).second) return chain;
    }
  }

  /// Number of distinct reversal classes seen so far (dedup mode only).
  std::size_t classes_seen() const { return seen_.size(); }

 private:
  // Options at position p (index p-3): the ending links at p == n, otherwise
  // the predecessors of L_{p+1}.
  std::vector<Link> options(std::size_t idx) const {
    if (idx == n_ - 3) return ends_;
    std::vector<Link> out;
    for (Link l : kLinks)
      if (table_->has_predecessor(idx + 4, links_[idx + 1], l)) out.push_back(l);
    return out;
  }

  void descend_from(std::size_t top) {
    for (std::size_t idx = top + 1; idx-- > 0;) {
      option_[idx] = 0;
      links_[idx] = options(idx).front();
    }
  }

  bool advance() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      descend_from(n_ - 3);
      return true;
    }
    for (std::size_t idx = 0; idx < n_ - 2; ++idx) {
      const auto opts = options(idx);
      if (option_[idx] + 1 < opts.size()) {
        ++option_[idx];
        links_[idx] = opts[option_[idx]];
        if (idx > 0) descend_from(idx - 1);
        return true;
      }
    }
    done_ = true;
    return false;
  }

  const DpTable<T>* table_;
  std::size_t n_;
  std::vector<Link> ends_;
  bool dedup_;
  std::vector<Link> links_;
  std::vector<std::size_t> option_;
  std::set<LinkVector> seen_;
  bool started_ = false;
  bool done_ = false;
};

template <Scalar T>
std::vector<LinkVector> enumerate_maximal(const DpTable<T>& table, std::size_t n,
                                          std::optional<Link> end = {},
                                          std::optional<std::size_t> limit = {}, bool dedup = false) {
  MaximalChainEnumerator<T> it(table, n, end, dedup);
  std::vector<LinkVector> out;
  while (!limit || out.size() < *limit) {
    auto c = it.next();
    if (!c) break;
    out.push_back(std::move(*c));
  }
  return out;
}

template <Scalar T>
std::vector<LinkVector> enumerate_maximal(const IndexFunction<T>& f, std::size_t n,
                                          std::optional<Link> end = {},
                                          std::optional<std::size_t> limit = {}, bool dedup = false) {
  return enumerate_maximal(run_dp(f, n), n, end, limit, dedup);
}

/// Minimal chains: maximal chains of the negated index.
template <Scalar T>
std::vector<LinkVector> enumerate_minimal(const IndexFunction<T>& f, std::size_t n,
                                          std::optional<Link> end = {},
                                          std::optional<std::size_t> limit = {}, bool dedup = false) {
  return enumerate_maximal(negate(f), n, end, limit, dedup);
}

}  // namespace polychain

#endif  // POLYCHAIN_DP_HPP
