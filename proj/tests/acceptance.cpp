// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/resource.h>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "polychain/polychain.hpp"

using namespace polychain;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class Fn>
double timed(Fn&& fn) {
  const auto t0 = Clock::now();
  fn();
  return seconds_since(t0);
}

// Collects the first failure message of a criterion.
struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<LinkVector> all_chains(std::size_t n) {
  std::vector<LinkVector> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n - 2)); ++code) out.push_back(decode_chain(code, n - 2));
  return out;
}

std::vector<LinkVector> sorted(std::vector<LinkVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<RationalIndex> rational_presets() {
  return {presets::azi(),
          presets::zagreb1(),
          presets::zagreb2(),
          presets::harmonic(),
          std::get<RationalIndex>(presets::randic(Rational(1))),
          std::get<RationalIndex>(presets::randic(Rational(-1)))};
}

std::string n_tag(std::size_t n) { return "n=" + std::to_string(n); }

Outcome recurrence_equivalence() {
  Outcome o;
  const double t = timed([&] {
    for (const auto& f : rational_presets()) {
      const auto g = g_table(f);
      for (std::size_t n = 2; n <= 12; ++n)
        for (const auto& c : all_chains(n))
          o.require(ti_recursive(c, g) == ti_direct(c, f), f.name + " " + to_string(c));
    }
  });
  o.require(t < 10.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome increment_identity() {
  Outcome o;
  std::mt19937_64 rng(20261019);
  std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 97);
  for (int trial = 0; trial < 1000; ++trial) {
    const RationalIndex f = tabulate<Rational>("rnd", [&](int, int) { return Rational(num(rng), den(rng)); });
    const auto g = g_table(f);
    o.require(g.g2 + g.g21 == g.g11 + g.g12, "random table " + std::to_string(trial));
  }
  for (std::string_view name : kPresetNames) {
    std::visit(
        [&](const auto& f) {
          const auto g = g_table(f);
          o.require(f.tolerance.equal(g.g2 + g.g21, g.g11 + g.g12), "preset " + std::string(name));
        },
        preset(name));
  }
  return o;
}

Outcome dp_matches_oracle() {
  Outcome o;
  const std::vector<AnyIndex> indices = {presets::azi(),     presets::zagreb1(), presets::zagreb2(),
                                         presets::harmonic(), presets::randic(Rational(-1, 2)),
                                         presets::abc(),     presets::ga()};
  const double t = timed([&] {
    for (const AnyIndex& any : indices)
      std::visit(
          [&](const auto& f) {
            for (std::size_t n = 3; n <= 16; ++n) {
              const auto cc = cross_check(f, n);
              o.require(cc.ok, f.name + " " + n_tag(n) + " " + (cc.ok ? "" : cc.mismatches.front().claim));
            }
          },
          any);
  });
  o.require(t < 120.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome closed_form() {
  Outcome o;
  const double t = timed([&] {
    const auto table = run_dp(presets::azi(), 5000);
    for (std::size_t n = 5; n <= 5000; ++n) {
      const Rational expected = Rational(4456, 125) * n - Rational(26763, 2000) - (n % 2 == 0 ? Rational(2312, 3375) : 0);
      o.require(maximize(table, n).value == expected, n_tag(n));
    }
  });
  o.require(t < 5.0, "took " + std::to_string(t) + " s");
  // Anchors against brute force over every chain.
  o.require(exhaustive(presets::azi(), 5).max_value == Rational(329717, 2000), "anchor n=5");
  o.require(exhaustive(presets::azi(), 6).max_value == Rational(10790359, 54000), "anchor n=6");
  o.require(maximize(presets::azi(), 5).value == Rational(329717, 2000), "dp anchor n=5");
  o.require(maximize(presets::azi(), 6).value == Rational(10790359, 54000), "dp anchor n=6");
  return o;
}

Outcome maximal_structure() {
  Outcome o;
  const RationalIndex f = presets::azi();
  const auto table = run_dp(f, 200);
  for (std::size_t n = 5; n <= 200; ++n) {
    const auto found = sorted(enumerate_maximal(table, n));
    const auto dedup = enumerate_maximal(table, n, std::nullopt, std::nullopt, true);
    const auto r = maximize(table, n);
    if (n % 2 == 1) {
      o.require(found == std::vector<LinkVector>{az1((n - 1) / 2)}, "odd set " + n_tag(n));
      o.require(r.labeled_count == 1, "odd count " + n_tag(n));
    } else {
      o.require(found == sorted(az2_family(n / 2)), "even set " + n_tag(n));
      o.require(r.labeled_count == BigInt((n - 6) / 2 + 1), "labeled count " + n_tag(n));
      const std::size_t classes = (n + 3) / 4 - 1;  // ceil(n/4 - 1)
      o.require(dedup.size() == classes, "reversal classes " + n_tag(n));
    }
    if (n <= 16) o.require(exhaustive(f, n).argmax == found, "oracle " + n_tag(n));
  }
  return o;
}

Outcome minimizers() {
  Outcome o;
  const RationalIndex f = presets::azi();
  const auto neg = run_dp(negate(f), 200);
  for (std::size_t n = 3; n <= 200; ++n) {
    const LinkVector expected = n <= 5 ? zigzag_chain(n) : linear_chain(n);
    o.require(enumerate_maximal(neg, n) == std::vector<LinkVector>{expected}, "minimizer " + n_tag(n));
    if (n <= 16) o.require(exhaustive(f, n).argmin == std::vector<LinkVector>{expected}, "oracle " + n_tag(n));
  }
  const auto v = classify(negate(f));
  o.require(v.kind == ClassifierCase::zigzag_then_linear, "classifier case");
  o.require(v.n_star && *v.n_star == 6, "n* = 6");
  const auto g = g_table(negate(f));
  const Rational ratio = (g.g2 - g.g11) / (g.g11 - g.g22) + 3;
  o.require(ratio > 5 && ratio <= 6, "threshold lies in (5, 6]");
  return o;
}

Outcome n4_anchor() {
  Outcome o;
  const RationalIndex f = presets::azi();
  const auto table = run_dp(f, 4);
  const Rational m(513013, 4000);
  o.require(table.value(4, Link::straight) == m, "M(4,1)");
  o.require(table.value(4, Link::turn) == m, "M(4,2)");
  const std::vector<LinkVector> both{{1, 2}, {2, 1}};
  o.require(sorted(enumerate_maximal(table, 4)) == both, "argmax");
  o.require(enumerate_maximal(table, 4, std::nullopt, std::nullopt, true).size() == 1, "dedup count");
  const auto brute = exhaustive(f, 4);
  o.require(brute.chains_evaluated == 4 && brute.argmax == both && brute.max_value == m, "brute force");
  return o;
}

long peak_rss_kb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return u.ru_maxrss;
}

Outcome performance() {
  Outcome o;
  const RationalIndex f = presets::azi();

  // Streaming first: the peak resident set must not move with n.
  const long base = peak_rss_kb();
  StreamingResult<Rational> s;
  const double t_stream = timed([&] { s = maximize_streaming(f, 1000000); });
  const long stream_growth = peak_rss_kb() - base;
  o.require(s.value == azi::max_closed_form(1000000), "streaming value");
  o.require(stream_growth < 4096, "streaming grew resident set by " + std::to_string(stream_growth) + " kB");
  (void)t_stream;
  std::ostringstream rss;
  rss << "streaming RSS growth " << stream_growth << " kB; ";

  ExtremalResult<Rational> r;
  const double t_table = timed([&] { r = maximize(f, 1000000); });
  o.require(t_table < 2.0, "n=10^6 took " + std::to_string(t_table) + " s");
  o.require(r.value == azi::max_closed_form(1000000), "table value");

  auto best_of = [&](std::size_t n) {
    double best = 1e9;
    for (int rep = 0; rep < 5; ++rep) best = std::min(best, timed([&] { (void)maximize(f, n); }));
    return best;
  };
  const double a = best_of(100000), b = best_of(200000), c = best_of(400000);
  const double r1 = b / a, r2 = c / b;
  std::ostringstream ratios;
  ratios << "ratios " << r1 << ", " << r2;
  o.require(r1 >= 1.7 && r1 <= 2.5 && r2 >= 1.7 && r2 <= 2.5, ratios.str());
  if (o.ok) o.detail = rss.str() + ratios.str() + "; 10^6 in " + std::to_string(t_table) + " s";
  return o;
}

std::pair<std::string, int> run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYCHAIN_CLI) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> commands = {
      "chain --links 1,2,2,1",
      "value --index azi --links 1,2,2,1",
      "value --index azi --links 1,2,2,1 --format plain",
      "value --index randic --gamma -1/2 --links 2,1,2",
      "max --index azi --n 12 --enumerate",
      "max --index azi --n 12 --enumerate --dedup",
      "max --index azi --n 100000 --streaming",
      "max --index ga --n 30 --format plain",
      "min --index azi --n 10",
      "min --index abc --n 20 --enumerate --limit 5",
      "classify --index azi --minimize",
      "classify --index harmonic --format plain",
      "table --index azi --from 3 --to 40 --format csv",
      "table --index zagreb1 --from 3 --to 10",
      "table --index sum_connectivity --from 5 --to 9 --format plain",
      "verify --index azi --n-max 14",
      "verify --index ga --n-max 12",
      "max --index azi --n 2",
  };
  for (const auto& args : commands) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    o.require(first == second, args);
    o.require(!first.first.empty(), "no output from " + args);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 recurrence equals direct sum for n <= 12", recurrence_equivalence},
      {"2 increment identity g2+g21 = g11+g12", increment_identity},
      {"3 DP agrees with exhaustive search for n = 3..16", dp_matches_oracle},
      {"4 AZI closed form for 5 <= n <= 5000", closed_form},
      {"5 AZI maximal chain structure for n <= 200", maximal_structure},
      {"6 AZI minimizers and threshold n* = 6", minimizers},
      {"7 n = 4 tie between both ends", n4_anchor},
      {"8 linear-time performance", performance},
      {"9 CLI output is deterministic", determinism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(t0);
    std::printf("[%s] criterion %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), t,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
