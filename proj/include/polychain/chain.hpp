#ifndef POLYCHAIN_CHAIN_HPP
#define POLYCHAIN_CHAIN_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polychain/rational.hpp"

namespace polychain {

/// How square k attaches to square k-1: `straight` keeps the running
/// direction, `turn` switches between right and down.
enum class Link : std::uint8_t { straight = 1, turn = 2 };

inline constexpr std::array<Link, 2> kLinks{Link::straight, Link::turn};

constexpr int to_int(Link l) { return static_cast<int>(l); }

constexpr Link other(Link l) { return l == Link::straight ? Link::turn : Link::straight; }

/// Link sequence L_3..L_n of a chain with n squares. Element 0 holds L_3;
/// `at(p)` addresses by absolute position p in [3, n]. The empty vector is
/// the two-square chain.
class LinkVector {
 public:
  static constexpr std::size_t kFirstPosition = 3;

  LinkVector() = default;
  explicit LinkVector(std::vector<Link> links) : links_(std::move(links)) {}
  LinkVector(std::initializer_list<int> digits) {
    links_.reserve(digits.size());
    for (int d : digits) {
      if (d != 1 && d != 2) throw std::domain_error("link must be 1 or 2, got " + std::to_string(d));
      links_.push_back(static_cast<Link>(d));
    }
  }

  std::size_t square_count() const { return links_.size() + 2; }
  std::size_t size() const { return links_.size(); }
  bool empty() const { return links_.empty(); }

  Link operator[](std::size_t i) const { return links_[i]; }
  Link at(std::size_t position) const {
    if (position < kFirstPosition || position > square_count())
      throw std::out_of_range("link position " + std::to_string(position) + " outside [3, " +
                              std::to_string(square_count()) + "]");
    return links_[position - kFirstPosition];
  }
  Link back() const { return links_.back(); }

  auto begin() const { return links_.begin(); }
  auto end() const { return links_.end(); }
  std::span<const Link> links() const { return links_; }

  std::size_t count(Link l) const {
    return static_cast<std::size_t>(std::count(links_.begin(), links_.end(), l));
  }

  LinkVector prefix(std::size_t squares) const {
    if (squares < 2 || squares > square_count())
      throw std::out_of_range("prefix of " + std::to_string(squares) + " squares");
    return LinkVector(std::vector<Link>(links_.begin(), links_.begin() + (squares - 2)));
  }

  LinkVector reversed() const { return LinkVector(std::vector<Link>(links_.rbegin(), links_.rend())); }

  friend bool operator==(const LinkVector&, const LinkVector&) = default;
  friend auto operator<=>(const LinkVector& a, const LinkVector& b) {
    return std::lexicographical_compare_three_way(a.links_.begin(), a.links_.end(), b.links_.begin(),
                                                  b.links_.end());
  }

 private:
  std::vector<Link> links_;
};

/// "1,2,2,1" form; the empty string is the two-square chain.
inline std::string to_string(const LinkVector& chain) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + to_int(chain[i]));
  }
  return s;
}

inline LinkVector parse_links(std::string_view text) {
  std::vector<Link> links;
  if (text.empty()) return LinkVector{};
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok == "1")
      links.push_back(Link::straight);
    else if (tok == "2")
      links.push_back(Link::turn);
    else
      throw ParseError("invalid link '" + std::string(tok) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LinkVector(std::move(links));
}

struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

using CellPath = std::vector<Cell>;

/// Lattice cells of the chain, growing right or down from (0,0),(1,0).
inline CellPath realize(const LinkVector& chain) {
  CellPath cells{{0, 0}, {1, 0}};
  cells.reserve(chain.square_count());
  bool going_right = true;
  for (Link l : chain) {
    if (l == Link::turn) going_right = !going_right;
    Cell c = cells.back();
    if (going_right)
      ++c.x;
    else
      --c.y;
    cells.push_back(c);
  }
  return cells;
}

/// Unordered pair of vertex degrees, restricted to {2,3,4}.
struct DegreePair {
  int low = 2;
  int high = 2;

  constexpr DegreePair() = default;
  constexpr DegreePair(int a, int b) : low(a < b ? a : b), high(a < b ? b : a) {
    if (low < 2 || high > 4)
      throw std::domain_error("degree pair (" + std::to_string(low) + "," + std::to_string(high) +
                              ") outside {2,3,4}");
  }

  /// Dense index in (2,2),(2,3),(2,4),(3,3),(3,4),(4,4) order.
  constexpr std::size_t index() const {
    constexpr std::size_t kRowStart[3] = {0, 3, 5};
    return kRowStart[low - 2] + static_cast<std::size_t>(high - low);
  }

  friend constexpr bool operator==(const DegreePair&, const DegreePair&) = default;
  friend constexpr auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

inline constexpr std::array<DegreePair, 6> kDegreePairs{
    DegreePair{2, 2}, DegreePair{2, 3}, DegreePair{2, 4},
    DegreePair{3, 3}, DegreePair{3, 4}, DegreePair{4, 4}};

inline std::string to_string(DegreePair p) {
  return std::to_string(p.low) + "," + std::to_string(p.high);
}

/// Edge multiplicities per degree pair of the chain's corner graph.
struct EdgeDegreeMultiset {
  std::array<std::size_t, 6> counts{};

  std::size_t operator[](DegreePair p) const { return counts[p.index()]; }
  std::size_t total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
  }
  friend bool operator==(const EdgeDegreeMultiset&, const EdgeDegreeMultiset&) = default;
};

/// Builds the graph of unit-square corners and sides of realize(chain) and
/// tallies its edges by endpoint degrees.
inline EdgeDegreeMultiset edge_degree_multiset(const LinkVector& chain) {
  using Vertex = std::pair<int, int>;
  using Edge = std::pair<Vertex, Vertex>;
  std::vector<Edge> edges;
  const CellPath cells = realize(chain);
  edges.reserve(cells.size() * 4);
  for (const Cell& c : cells) {
    const Vertex sw{c.x, c.y}, se{c.x + 1, c.y}, ne{c.x + 1, c.y + 1}, nw{c.x, c.y + 1};
    edges.push_back({sw, se});
    edges.push_back({nw, ne});
    edges.push_back({sw, nw});
    edges.push_back({se, ne});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Vertex> ends;
  ends.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    ends.push_back(u);
    ends.push_back(v);
  }
  std::sort(ends.begin(), ends.end());
  auto degree = [&](const Vertex& v) {
    auto [lo, hi] = std::equal_range(ends.begin(), ends.end(), v);
    return static_cast<int>(hi - lo);
  };

  EdgeDegreeMultiset result;
  for (const auto& [u, v] : edges) ++result.counts[DegreePair(degree(u), degree(v)).index()];
  return result;
}

/// Segment lengths l_1..l_m; kink squares belong to two segments.
using SegmentDecomposition = std::vector<std::size_t>;

inline SegmentDecomposition segments(const LinkVector& chain) {
  const std::size_t n = chain.square_count();
  std::vector<std::size_t> turns;
  for (std::size_t p = LinkVector::kFirstPosition; p <= n; ++p)
    if (chain.at(p) == Link::turn) turns.push_back(p);
  if (turns.empty()) return {n};
  SegmentDecomposition lengths;
  lengths.reserve(turns.size() + 1);
  lengths.push_back(turns.front() - 1);
  for (std::size_t j = 1; j < turns.size(); ++j) lengths.push_back(turns[j] - turns[j - 1] + 1);
  lengths.push_back(n - turns.back() + 2);
  return lengths;
}

namespace detail {

inline void require_squares(std::size_t n, std::size_t minimum, const char* what) {
  if (n < minimum)
    throw std::domain_error(std::string(what) + " requires n >= " + std::to_string(minimum) +
                            ", got " + std::to_string(n));
}

}  // namespace detail

inline LinkVector linear_chain(std::size_t n) {
  detail::require_squares(n, 2, "linear_chain");
  return LinkVector(std::vector<Link>(n - 2, Link::straight));
}

inline LinkVector zigzag_chain(std::size_t n) {
  detail::require_squares(n, 2, "zigzag_chain");
  return LinkVector(std::vector<Link>(n - 2, Link::turn));
}

/// The chain with m segments, all of length 3 (2m+1 squares).
inline LinkVector az1(std::size_t m) {
  if (m < 2) throw std::domain_error("az1 requires m >= 2, got " + std::to_string(m));
  std::vector<Link> links{Link::straight};
  for (std::size_t k = 1; k < m; ++k) {
    links.push_back(Link::turn);
    links.push_back(Link::straight);
  }
  return LinkVector(std::move(links));
}

/// The m-2 labeled chains with 2m squares whose segments have length 3
/// except for one internal segment of length 2: (1,2)^i (2,1)^(m-1-i).
inline std::vector<LinkVector> az2_family(std::size_t m) {
  if (m < 3) throw std::domain_error("az2_family requires m >= 3, got " + std::to_string(m));
  std::vector<LinkVector> family;
  for (std::size_t i = 1; i <= m - 2; ++i) {
    std::vector<Link> links;
    links.reserve(2 * m - 2);
    for (std::size_t k = 0; k < i; ++k) {
      links.push_back(Link::straight);
      links.push_back(Link::turn);
    }
    for (std::size_t k = 0; k < m - 1 - i; ++k) {
      links.push_back(Link::turn);
      links.push_back(Link::straight);
    }
    family.emplace_back(std::move(links));
  }
  return family;
}

/// Lexicographic minimum of the chain and its mirror image.
inline LinkVector canonical_reversal(const LinkVector& chain) {
  LinkVector r = chain.reversed();
  return r < chain ? r : chain;
}

}  // namespace polychain

#endif  // POLYCHAIN_CHAIN_HPP
