// polychain: extremal degree-based indices over polyomino chains.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "polychain/polychain.hpp"
#include "polychain/serialize.hpp"

namespace {

using namespace polychain;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IndexOptions {
  std::string name;
  std::string gamma = "-1/2";
  std::string file;
  std::string mode;
  std::optional<double> eps;
};

struct OutputOptions {
  std::string format = "json";
  std::string out;
  bool exact = false;
};

AnyIndex resolve_index(const IndexOptions& o) {
  if (o.name.empty() == o.file.empty()) throw UsageError("give exactly one of --index or --index-file");
  AnyIndex f = o.file.empty() ? preset(o.name, parse_rational(o.gamma)) : load_custom_index_file(o.file);
  if (o.mode == "float") {
    if (auto* r = std::get_if<RationalIndex>(&f)) {
      FloatIndex d{r->name, {}, {}};
      for (std::size_t i = 0; i < 6; ++i) d.values[i] = r->values[i].convert_to<double>();
      f = d;
    }
  } else if (o.mode == "rational") {
    if (std::holds_alternative<FloatIndex>(f))
      throw UsageError("index '" + index_name(f) + "' has irrational values; rational mode unavailable");
  } else if (!o.mode.empty()) {
    throw UsageError("unknown mode '" + o.mode + "'");
  }
  if (o.eps) {
    auto* d = std::get_if<FloatIndex>(&f);
    if (!d) throw UsageError("--eps only applies in float mode");
    if (*o.eps < 0) throw UsageError("negative eps");
    d->tolerance.eps = *o.eps;
  }
  return f;
}

bool is_azi(const AnyIndex& f) {
  const auto* r = std::get_if<RationalIndex>(&f);
  return r && r->values == presets::azi().values;
}

std::optional<Link> parse_end(int end) {
  if (end == 0) return std::nullopt;
  if (end == 1) return Link::straight;
  if (end == 2) return Link::turn;
  throw UsageError("--end must be 1 or 2");
}

void require_n(std::size_t n) {
  if (n < 3) throw UsageError("n must be >= 3, got " + std::to_string(n));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string plain_value(const Rational& v) { return to_string(v) + " (~" + to_decimal(v) + ")"; }
std::string plain_value(double v) { return to_float_string(v); }

std::string csv_value(const Rational& v, bool exact) { return exact ? to_string(v) : to_decimal(v); }
std::string csv_value(double v, bool) { return to_decimal(v); }

// --- chain -----------------------------------------------------------------

int cmd_chain(const std::string& links, const OutputOptions& out) {
  const LinkVector chain = parse_links(links);
  const EdgeDegreeMultiset edges = edge_degree_multiset(chain);
  json j;
  j["links"] = to_json(chain);
  j["squares"] = chain.square_count();
  j["cells"] = to_json(realize(chain));
  j["segments"] = segments(chain);
  json counts = json::object();
  for (DegreePair p : kDegreePairs)
    if (edges[p]) counts[to_string(p)] = edges[p];
  j["edge_degrees"] = counts;
  j["edges"] = edges.total();
  j["canonical"] = to_json(canonical_reversal(chain));
  Output o(out.out);
  if (out.format == "plain") {
    auto& s = o.stream();
    s << "squares " << chain.square_count() << "\ncells";
    for (const Cell& c : realize(chain)) s << " (" << c.x << "," << c.y << ")";
    s << "\nsegments";
    for (auto l : segments(chain)) s << ' ' << l;
    s << "\ncanonical " << to_string(canonical_reversal(chain)) << '\n';
  } else {
    o.stream() << j.dump(2) << '\n';
  }
  return kExitOk;
}

// --- value -----------------------------------------------------------------

int cmd_value(const AnyIndex& index, const std::string& links, const OutputOptions& out) {
  const LinkVector chain = parse_links(links);
  return std::visit(
      [&](const auto& f) {
        const auto direct = ti_direct(chain, f);
        const auto recursive = ti_recursive(chain, f);
        const bool agree = f.tolerance.equal(direct, recursive);
        Output o(out.out);
        if (out.format == "plain") {
          o.stream() << plain_value(direct) << '\n';
          if (!agree) o.stream() << "recursive evaluation disagrees: " << plain_value(recursive) << '\n';
        } else {
          json j;
          j["index"] = f.name;
          j["links"] = to_json(chain);
          j["squares"] = chain.square_count();
          j["value"] = value_json(direct);
          j["recursive"] = value_json(recursive);
          j["agree"] = agree;
          o.stream() << j.dump(2) << '\n';
        }
        return agree ? kExitOk : kExitMismatch;
      },
      index);
}

// --- max / min -------------------------------------------------------------

struct ExtremeOptions {
  std::size_t n = 0;
  int end = 0;
  bool enumerate = false;
  bool dedup = false;
  std::optional<std::size_t> limit;
  bool streaming = false;
};

int cmd_extreme(const AnyIndex& index, Objective objective, const ExtremeOptions& opt,
                const OutputOptions& out) {
  require_n(opt.n);
  const std::optional<Link> end = parse_end(opt.end);
  if (opt.streaming && (opt.enumerate || end))
    throw UsageError("--streaming reports values only; drop --enumerate/--end");
  if (out.format != "json" && out.format != "plain") throw UsageError("max/min support json or plain output");

  return std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f.values[0])>;
        Output o(out.out);
        const double sign = objective == Objective::maximize ? 1 : -1;

        if (opt.streaming) {
          StreamingResult<T> s =
              objective == Objective::maximize ? maximize_streaming(f, opt.n) : maximize_streaming(negate(f), opt.n);
          if (sign < 0) {
            s.value = -s.value;
            for (auto& v : s.end_values) v = -v;
          }
          json j;
          j["index"] = f.name;
          j["n"] = opt.n;
          j["objective"] = std::string(to_string(objective));
          j["value"] = value_json(s.value);
          j["end_values"] = {{"1", value_json(s.end_values[0])}, {"2", value_json(s.end_values[1])}};
          j["labeled_count"] = count_json(s.labeled_count);
          j["tolerance_dependent"] = !Tolerance<T>::exact;
          if (out.format == "plain")
            o.stream() << plain_value(s.value) << '\n';
          else
            o.stream() << j.dump(2) << '\n';
          return kExitOk;
        }

        const IndexFunction<T> target = objective == Objective::maximize ? f : negate(f);
        const DpTable<T> table = run_dp(target, opt.n);
        ExtremalResult<T> r = maximize(table, opt.n, end);
        if (objective == Objective::minimize) {
          r.objective = Objective::minimize;
          r.value = -r.value;
          for (auto& v : r.end_values) v = -v;
        }

        if (out.format == "plain") {
          auto& s = o.stream();
          s << to_string(objective) << ' ' << plain_value(r.value) << "\nwitness " << to_string(r.witness)
            << "\nlabeled_count " << r.labeled_count << '\n';
          if (opt.enumerate) {
            MaximalChainEnumerator<T> it(table, opt.n, end, opt.dedup);
            std::size_t emitted = 0;
            while (!opt.limit || emitted < *opt.limit) {
              auto c = it.next();
              if (!c) break;
              s << to_string(*c) << '\n';
              ++emitted;
            }
          }
          return kExitOk;
        }

        json j = to_json(r);
        j["index"] = f.name;
        if (opt.enumerate) {
          MaximalChainEnumerator<T> it(table, opt.n, end, opt.dedup);
          std::set<LinkVector> classes;
          json chains = json::array();
          bool truncated = false;
          while (true) {
            if (opt.limit && chains.size() >= *opt.limit) {
              truncated = true;
              break;
            }
            auto c = it.next();
            if (!c) break;
            classes.insert(canonical_reversal(*c));
            chains.push_back(to_json(*c));
          }
          if (truncated && it.next()) {
            j["truncated"] = true;
          } else {
            j["truncated"] = false;
            j["iso_count"] = count_json(BigInt(classes.size()));
          }
          j["dedup"] = opt.dedup;
          j["chains"] = chains;
        }
        o.stream() << j.dump(2) << '\n';
        return kExitOk;
      },
      index);
}

// --- classify --------------------------------------------------------------

int cmd_classify(const AnyIndex& index, bool minimize, const OutputOptions& out) {
  const AnyIndex target = minimize ? negate(index) : index;
  return std::visit(
      [&](const auto& f) {
        const auto g = g_table(f);
        const ClassifierVerdict v = classify(g, f.tolerance);
        Output o(out.out);
        if (out.format == "plain") {
          o.stream() << to_string(v.kind);
          if (v.n_star) o.stream() << " n*=" << *v.n_star;
          o.stream() << '\n';
        } else {
          json j = to_json(v);
          j["index"] = f.name;
          j["objective"] = minimize ? "min" : "max";
          j["g"] = to_json(g);
          o.stream() << j.dump(2) << '\n';
        }
        return kExitOk;
      },
      target);
}

// --- table -----------------------------------------------------------------

constexpr std::size_t kIsoCountCap = 100000;

int cmd_table(const AnyIndex& index, std::size_t from, std::size_t to, const OutputOptions& out) {
  require_n(from);
  if (from > to) throw UsageError("--from must not exceed --to");
  const bool azi_rows = is_azi(index);
  return std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f.values[0])>;
        const DpTable<T> max_table = run_dp(f, to);
        const DpTable<T> min_table = run_dp(negate(f), to);
        json rows = json::array();
        std::vector<std::vector<std::string>> csv;
        for (std::size_t n = from; n <= to; ++n) {
          const ExtremalResult<T> hi = maximize(max_table, n);
          const ExtremalResult<T> lo = maximize(min_table, n);
          std::optional<std::size_t> iso;
          if (hi.labeled_count <= kIsoCountCap)
            iso = enumerate_maximal(max_table, n, std::nullopt, std::nullopt, true).size();
          std::string family;
          if (azi_rows) family = azi::extremal_report(n).tag();

          json row;
          row["n"] = n;
          row["M"] = value_json(hi.value);
          row["m"] = value_json(-lo.value);
          row["labeled_count"] = count_json(hi.labeled_count);
          row["iso_count"] = iso ? json(std::to_string(*iso)) : json(nullptr);
          if (azi_rows) row["family"] = family;
          rows.push_back(row);
          csv.push_back({std::to_string(n), csv_value(hi.value, out.exact), csv_value(T(-lo.value), out.exact),
                         hi.labeled_count.str(), iso ? std::to_string(*iso) : "", family});
        }
        Output o(out.out);
        auto& s = o.stream();
        if (out.format == "csv" || out.format == "plain") {
          const char sep = out.format == "csv" ? ',' : '\t';
          s << "n" << sep << "M" << sep << "m" << sep << "labeled_count" << sep << "iso_count";
          if (azi_rows) s << sep << "family";
          s << '\n';
          for (const auto& r : csv) {
            for (std::size_t c = 0; c < 5; ++c) s << (c ? std::string(1, sep) : "") << r[c];
            if (azi_rows) s << sep << r[5];
            s << '\n';
          }
        } else {
          json j;
          j["index"] = f.name;
          j["mode"] = Tolerance<T>::exact ? "rational" : "float";
          j["rows"] = rows;
          s << j.dump(2) << '\n';
        }
        return kExitOk;
      },
      index);
}

// --- verify ----------------------------------------------------------------

struct VerifyCliOptions {
  std::size_t n_max = 16;
  std::size_t oracle_cap = kOracleDefaultCap;
  std::size_t structure_limit = 200;
  std::string perturb_g22;
};

int cmd_verify(const AnyIndex& index, const VerifyCliOptions& opt, const OutputOptions& out) {
  require_n(opt.n_max);
  return std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f.values[0])>;
        std::optional<GTable<T>> g_override;
        if (!opt.perturb_g22.empty()) {
          if constexpr (std::is_same_v<T, Rational>) {
            GTable<T> g = g_table(f);
            g.g22 += parse_rational(opt.perturb_g22);
            g_override = g;
          } else {
            GTable<T> g = g_table(f);
            g.g22 += parse_rational(opt.perturb_g22).template convert_to<double>();
            g_override = g;
          }
        }

        bool ok = true;
        json j;
        j["index"] = f.name;
        j["n_max"] = opt.n_max;

        const std::size_t oracle_top = std::min(opt.n_max, opt.oracle_cap);
        json oracle_failures = json::array();
        std::size_t oracle_runs = 0;
        for (std::size_t n = 3; n <= oracle_top; ++n, ++oracle_runs) {
          const CrossCheckResult cc = cross_check(f, n, g_override, opt.oracle_cap);
          for (const Mismatch& m : cc.mismatches) oracle_failures.push_back(to_json(m));
          ok = ok && cc.ok;
        }
        j["oracle"] = {{"claim", "dp_matches_exhaustive"},
                       {"n_range", {3, oracle_top}},
                       {"capped", opt.n_max > opt.oracle_cap},
                       {"checks", oracle_runs},
                       {"status", oracle_failures.empty() ? "pass" : "fail"},
                       {"failures", oracle_failures}};

        if (is_azi(AnyIndex(f))) {
          if constexpr (std::is_same_v<T, Rational>) {
            azi::VerifyOptions vo;
            vo.structure_limit = opt.structure_limit;
            vo.oracle_limit = 0;  // covered above
            vo.g_override = g_override;
            if (opt.n_max >= 5) {
              const auto thm = azi::verify_theorem(opt.n_max, vo);
              j["azi_max_theorem"] = to_json(thm);
              ok = ok && thm.ok();
            }
            const auto cor = azi::verify_min(opt.n_max, vo);
            j["azi_min_corollary"] = to_json(cor);
            ok = ok && cor.ok();
          }
        }
        j["status"] = ok ? "pass" : "fail";
        Output o(out.out);
        if (out.format == "plain")
          o.stream() << (ok ? "pass" : "fail") << '\n';
        else
          o.stream() << j.dump(2) << '\n';
        return ok ? kExitOk : kExitMismatch;
      },
      index);
}

void add_index_options(CLI::App* cmd, IndexOptions& o) {
  cmd->add_option("--index", o.name, "Preset: azi, zagreb1, zagreb2, harmonic, randic, abc, ga, sum_connectivity");
  cmd->add_option("--gamma", o.gamma, "Randic exponent as p/q (default -1/2)");
  cmd->add_option("--index-file", o.file, "Custom index document (JSON)");
  cmd->add_option("--mode", o.mode, "Arithmetic override: rational | float");
  cmd->add_option("--eps", o.eps, "Float tie tolerance (relative)");
}

void add_output_options(CLI::App* cmd, OutputOptions& o, const std::vector<std::string>& formats) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out, "Write to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal degree-based topological indices over polyomino chains"};
  app.require_subcommand(1);

  IndexOptions index;
  OutputOptions output;
  std::string links;
  ExtremeOptions extreme;
  std::size_t limit = 0;
  bool minimize_flag = false;
  std::size_t from = 0, to = 0;
  VerifyCliOptions verify;

  auto* chain_cmd = app.add_subcommand("chain", "Geometry and structure of one chain");
  chain_cmd->add_option("--links", links, "Link vector, e.g. 1,2,2,1")->required();
  add_output_options(chain_cmd, output, {"json", "plain"});

  auto* value_cmd = app.add_subcommand("value", "Index value of one chain (both evaluators)");
  add_index_options(value_cmd, index);
  value_cmd->add_option("--links", links, "Link vector, e.g. 1,2,2,1")->required();
  add_output_options(value_cmd, output, {"json", "plain"});

  CLI::App* extreme_cmds[2];
  for (int k = 0; k < 2; ++k) {
    auto* cmd = app.add_subcommand(k == 0 ? "max" : "min", k == 0 ? "Maximum over chains with n squares"
                                                                  : "Minimum over chains with n squares");
    add_index_options(cmd, index);
    cmd->add_option("--n", extreme.n, "Number of squares (>= 3)")->required();
    cmd->add_option("--end", extreme.end, "Restrict the final link to 1 or 2");
    cmd->add_flag("--enumerate", extreme.enumerate, "List every extremal chain");
    cmd->add_flag("--dedup", extreme.dedup, "With --enumerate: one chain per reversal class");
    cmd->add_option("--limit", limit, "With --enumerate: stop after this many chains");
    cmd->add_flag("--streaming", extreme.streaming, "Constant-memory value-only run");
    add_output_options(cmd, output, {"json", "plain"});
    extreme_cmds[k] = cmd;
  }

  auto* classify_cmd = app.add_subcommand("classify", "Linear/zigzag sufficient-condition classifier");
  add_index_options(classify_cmd, index);
  classify_cmd->add_flag("--minimize", minimize_flag, "Classify the minimization problem");
  add_output_options(classify_cmd, output, {"json", "plain"});

  auto* table_cmd = app.add_subcommand("table", "One row of extremal data per n");
  add_index_options(table_cmd, index);
  table_cmd->add_option("--from", from, "First n (>= 3)")->required();
  table_cmd->add_option("--to", to, "Last n")->required();
  table_cmd->add_flag("--exact", output.exact, "CSV: exact p/q values instead of decimals");
  add_output_options(table_cmd, output, {"json", "csv", "plain"});

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the DP against exhaustive search");
  add_index_options(verify_cmd, index);
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n to verify");
  verify_cmd->add_option("--oracle-cap", verify.oracle_cap, "Largest n for exhaustive search (default 24)");
  verify_cmd->add_option("--structure-limit", verify.structure_limit,
                         "Largest n for enumerated-set checks (default 200)");
#ifdef POLYCHAIN_FAULT_INJECTION
  verify_cmd->add_option("--perturb-g22", verify.perturb_g22, "Add this rational to g(2,2) on the DP side");
#endif
  add_output_options(verify_cmd, output, {"json", "plain"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (limit > 0) extreme.limit = limit;
    if (*chain_cmd) return cmd_chain(links, output);
    if (*value_cmd) return cmd_value(resolve_index(index), links, output);
    if (*extreme_cmds[0]) return cmd_extreme(resolve_index(index), Objective::maximize, extreme, output);
    if (*extreme_cmds[1]) return cmd_extreme(resolve_index(index), Objective::minimize, extreme, output);
    if (*classify_cmd) return cmd_classify(resolve_index(index), minimize_flag, output);
    if (*table_cmd) return cmd_table(resolve_index(index), from, to, output);
    if (*verify_cmd) return cmd_verify(resolve_index(index), verify, output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
