#ifndef POLYCHAIN_ORACLE_HPP
#define POLYCHAIN_ORACLE_HPP

// Exhaustive ground truth. Evaluates every link vector through the corner
// graph only; this header must not depend on the recurrence or the DP.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polychain/chain.hpp"
#include "polychain/index.hpp"

namespace polychain {

inline constexpr std::size_t kOracleDefaultCap = 24;

class OracleCapExceeded : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Streaming best-value tracker keeping every candidate tied with the best.
/// `sign` = +1 tracks maxima, -1 minima.
template <Scalar T>
class ExtremumTracker {
 public:
  ExtremumTracker(int sign, Tolerance<T> tol) : sign_(sign), tol_(tol) {}

  void offer(const LinkVector& chain, const T& value) {
    if (members_.empty()) {
      best_ = value;
      members_.push_back({chain, value});
      return;
    }
    const int cmp = sign_ * tol_.compare(value, best_);
    if (cmp < 0) return;
    members_.push_back({chain, value});
    if (cmp > 0 || sign_ * (value < best_ ? -1 : (best_ < value ? 1 : 0)) > 0) {
      best_ = value;
      std::erase_if(members_, [&](const auto& m) { return !tol_.equal(m.second, best_); });
    }
  }

  bool empty() const { return members_.empty(); }
  const T& best() const { return best_; }

  std::vector<LinkVector> members() const {
    std::vector<LinkVector> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.first);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int sign_;
  Tolerance<T> tol_;
  T best_{};
  std::vector<std::pair<LinkVector, T>> members_;
};

template <Scalar T>
struct OracleReport {
  std::size_t n = 0;
  std::string index_name;
  std::size_t chains_evaluated = 0;
  T max_value{};
  T min_value{};
  std::vector<LinkVector> argmax;
  std::vector<LinkVector> argmin;
  std::array<T, 2> end_max{};
  std::array<std::vector<LinkVector>, 2> end_argmax;
  std::array<T, 2> end_min{};
  std::array<std::vector<LinkVector>, 2> end_argmin;
};

/// Link vector number `code` of length `len`, most significant bit first, so
/// increasing codes visit vectors in lexicographic order.
inline LinkVector decode_chain(std::uint64_t code, std::size_t len) {
  std::vector<Link> links(len);
  for (std::size_t i = 0; i < len; ++i)
    links[i] = (code >> (len - 1 - i)) & 1u ? Link::turn : Link::straight;
  return LinkVector(std::move(links));
}

template <Scalar T>
OracleReport<T> exhaustive(const IndexFunction<T>& f, std::size_t n, std::size_t cap = kOracleDefaultCap) {
  if (n < 3) throw std::domain_error("oracle requires n >= 3, got " + std::to_string(n));
  if (n > cap || n > 62)
    throw OracleCapExceeded("oracle refuses n=" + std::to_string(n) + " (cap " + std::to_string(cap) +
                            "): would evaluate 2^" + std::to_string(n - 2) + " chains of " +
                            std::to_string(3 * n + 1) + " edges each");
  const std::size_t len = n - 2;
  const std::uint64_t total = std::uint64_t{1} << len;

  ExtremumTracker<T> hi(+1, f.tolerance), lo(-1, f.tolerance);
  std::array<ExtremumTracker<T>, 2> end_hi{ExtremumTracker<T>(+1, f.tolerance),
                                           ExtremumTracker<T>(+1, f.tolerance)};
  std::array<ExtremumTracker<T>, 2> end_lo{ExtremumTracker<T>(-1, f.tolerance),
                                           ExtremumTracker<T>(-1, f.tolerance)};
  for (std::uint64_t code = 0; code < total; ++code) {
    const LinkVector chain = decode_chain(code, len);
    const T v = ti_direct(chain, f);
    const std::size_t e = chain.back() == Link::straight ? 0 : 1;
    hi.offer(chain, v);
    lo.offer(chain, v);
    end_hi[e].offer(chain, v);
    end_lo[e].offer(chain, v);
  }

  OracleReport<T> r;
  r.n = n;
  r.index_name = f.name;
  r.chains_evaluated = static_cast<std::size_t>(total);
  r.max_value = hi.best();
  r.min_value = lo.best();
  r.argmax = hi.members();
  r.argmin = lo.members();
  for (std::size_t e = 0; e < 2; ++e) {
    r.end_max[e] = end_hi[e].best();
    r.end_argmax[e] = end_hi[e].members();
    r.end_min[e] = end_lo[e].best();
    r.end_argmin[e] = end_lo[e].members();
  }
  return r;
}

}  // namespace polychain

#endif  // POLYCHAIN_ORACLE_HPP
