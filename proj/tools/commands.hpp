#pragma once

// Subcommand implementations for the semidlog CLI. Each command writes its
// report to `out`, diagnostics to `err`, and returns the process exit code.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semidlog.hpp"
#include "semidlog/selftest.hpp"

namespace semidlog::cli {

enum ExitCode : int {
  kOk = 0,
  kSelftestFailure = 1,
  kParseError = 2,
  kVerificationFailure = 3,
  kNoSolution = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct RunConfig {
  std::string command;
  std::vector<std::string> specs;  // inline JSON or @path
  std::string algorithm;
  std::optional<Exponent> bound;
  Exponent divisor_bound = 10'000;
  unsigned inner_rounds = 4;
  std::optional<unsigned> outer_rounds;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool verify = false;
  // bench
  std::string family = "monogenic";
  std::vector<Exponent> sizes;
  unsigned trials = 1;
  std::optional<Exponent> max_start;
  Exponent modulus = 7;
  std::string format = "jsonl";
  bool timing = false;
  // selftest
  std::string inject_fault;
};

/// Seed precedence: --seed, then SEMIDLOG_SEED, then kDefaultSeed.
inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SEMIDLOG_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw ParseError("SEMIDLOG_SEED is not an unsigned integer", "SEMIDLOG_SEED");
    }
  }
  return kDefaultSeed;
}

inline AnyElementSpec load_spec(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw ParseError("cannot open element spec file", arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_element_spec(buf.str());
  }
  return parse_element_spec(arg);
}

namespace detail {

template <Semigroup S>
struct CycleRun {
  Exponent length = 0;
  nlohmann::json trace;
  std::size_t table_peak = 0;
};

template <Semigroup S>
CycleRun<S> run_cycle_length(Context<S>& ctx, const element_t<S>& x, const RunConfig& cfg, Rng& rng) {
  CycleRun<S> run;
  if (cfg.algorithm == "deterministic") {
    auto r = deterministic_cycle_length(ctx, x, cfg.bound);
    run.length = r.length;
    run.table_peak = r.trace.peak_table_size;
    run.trace = r.trace;
  } else if (cfg.algorithm == "monico") {
    auto r = monico_cycle_length(ctx, x, MonicoOptions{cfg.bound, cfg.divisor_bound});
    run.length = r.length;
    run.table_peak = r.trace.table_size;
    run.trace = r.trace;
  } else if (cfg.algorithm == "banin-tsaban") {
    BaninTsabanOptions opts;
    opts.bound = cfg.bound.value_or(4);
    opts.inner_rounds = cfg.inner_rounds;
    opts.outer_rounds = cfg.outer_rounds;
    auto r = banin_tsaban_cycle_length(ctx, x, opts, rng);
    run.length = r.length;
    run.table_peak = ceil_sqrt(r.trace.bound);
    run.trace = r.trace;
  } else if (cfg.algorithm == "brute") {
    const auto c = brute_force_cycle(ctx, x);
    run.length = c.length;
    run.table_peak = c.order();
    run.trace = nlohmann::json::object();
  } else {
    throw ParseError("unknown algorithm \"" + cfg.algorithm + "\"", "--alg");
  }
  return run;
}

inline int report_error(std::ostream& err, int code, const std::string& what) {
  err << "semidlog: " << what << "\n";
  return code;
}

}  // namespace detail

inline int cmd_cycle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<AnyElementSpec> spec;
  try {
    if (cfg.specs.size() != 1) throw ParseError("cycle expects exactly one element spec", "ELEMENT_SPEC");
    spec = load_spec(cfg.specs.front());
  } catch (const ParseError& e) {
    return detail::report_error(err, kParseError, e.what());
  }
  return std::visit([&](const auto& es) -> int {
    using S = std::decay_t<decltype(es.semigroup)>;
    Context<S> ctx(es.semigroup);
    Rng rng(cfg.seed);
    detail::CycleRun<S> run;
    Exponent start = 0;
    try {
      run = detail::run_cycle_length(ctx, es.element, cfg, rng);
      start = cycle_start_search(ctx, es.element, run.length);
    } catch (const ParseError& e) {
      return detail::report_error(err, kParseError, e.what());
    } catch (const std::domain_error& e) {
      return detail::report_error(err, kVerificationFailure, e.what());
    } catch (const NotTorsion& e) {
      return detail::report_error(err, kVerificationFailure, e.what());
    }
    const CycleStructure cycle{start, run.length};
    const std::uint64_t used = ctx.multiplications();

    std::optional<bool> verified;
    if (cfg.verify) {
      Context<S> oracle_ctx(es.semigroup);
      verified = brute_force_cycle(oracle_ctx, es.element) == cycle;
    }

    if (cfg.json) {
      nlohmann::json j = {{"command", "cycle"},
                          {"instance", es.semigroup.describe()},
                          {"element", to_spec_json(es.semigroup, es.element)},
                          {"algorithm", cfg.algorithm},
                          {"seed", cfg.seed},
                          {"cycle", cycle},
                          {"trace", run.trace},
                          {"multiplications", used},
                          {"verified", verified ? nlohmann::json(*verified) : nlohmann::json(nullptr)}};
      out << j.dump() << "\n";
    } else {
      out << "s=" << cycle.start << " L=" << cycle.length << " N=" << cycle.order() << "\n";
      out << "algorithm=" << cfg.algorithm << " multiplications=" << used;
      if (verified) out << " verified=" << (*verified ? "yes" : "no");
      out << "\n";
    }
    if (verified && !*verified) return detail::report_error(err, kVerificationFailure, "result differs from brute-force oracle");
    return kOk;
  }, *spec);
}

inline int cmd_dlog(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<AnyElementSpec> xs, ys;
  try {
    if (cfg.specs.size() != 2) throw ParseError("dlog expects two element specs (x then y)", "ELEMENT_SPEC");
    xs = load_spec(cfg.specs[0]);
    ys = load_spec(cfg.specs[1]);
    if (xs->index() != ys->index()) throw ParseError("x and y belong to different families", "ELEMENT_SPEC");
    if (cfg.algorithm != "reduction" && cfg.algorithm != "pohlig-hellman")
      throw ParseError("unknown algorithm \"" + cfg.algorithm + "\"", "--alg");
  } catch (const ParseError& e) {
    return detail::report_error(err, kParseError, e.what());
  }
  return std::visit([&](const auto& xspec) -> int {
    using Spec = std::decay_t<decltype(xspec)>;
    using S = std::decay_t<decltype(xspec.semigroup)>;
    const auto& yspec = std::get<Spec>(*ys);
    if (!(xspec.semigroup == yspec.semigroup))
      return detail::report_error(err, kParseError, "x and y belong to different instances");

    Context<S> ctx(xspec.semigroup);
    const auto& x = xspec.element;
    const auto& y = yspec.element;
    CycleStructure cycle;
    DlogSolution sol;
    nlohmann::json trace;
    try {
      cycle = deterministic_cycle(ctx, x, cfg.bound);
      if (cfg.algorithm == "reduction") {
        auto r = semigroup_dlog(ctx, x, y, cycle);
        sol = r.solution;
        trace = r.trace;
      } else {
        auto r = pohlig_hellman_dlog(ctx, x, y, cycle, factor_integer(cycle.length));
        sol = r.solution;
        trace = r.trace;
      }
    } catch (const NoSolution&) {
      return detail::report_error(err, kNoSolution, "no solution: y is not a power of x");
    }
    {
      Context<S> check(xspec.semigroup);
      if (!(power(check, x, representative(sol)) == y))
        return detail::report_error(err, kVerificationFailure, "reported exponent does not reproduce y");
    }
    if (cfg.json) {
      nlohmann::json j = {{"command", "dlog"},
                          {"instance", xspec.semigroup.describe()},
                          {"algorithm", cfg.algorithm},
                          {"cycle", cycle},
                          {"solution", sol},
                          {"trace", trace},
                          {"multiplications", ctx.multiplications()}};
      out << j.dump() << "\n";
    } else {
      if (const auto* u = std::get_if<Unique>(&sol)) out << "unique m=" << u->m << "\n";
      else {
        const auto& p = std::get<Progression>(sol);
        out << "progression m0=" << p.first << " period=" << p.period << "\n";
      }
    }
    return kOk;
  }, *xs);
}

struct BenchRecord {
  std::string instance;
  Exponent order = 0;
  std::string algorithm;
  std::uint64_t multiplications = 0;
  std::uint64_t start_multiplications = 0;
  std::size_t table_peak = 0;
  double wall_ms = 0;
  Exponent length = 0;
  Exponent start = 0;
  std::optional<bool> success;
};

namespace detail {

template <Semigroup S>
BenchRecord bench_one(const S& sg, const element_t<S>& x, std::optional<CycleStructure> truth, const RunConfig& cfg,
                      Rng& rng) {
  BenchRecord rec;
  rec.instance = sg.describe();
  rec.algorithm = cfg.algorithm;
  if (!truth) {
    Context<S> oracle(sg);
    truth = brute_force_cycle(oracle, x);
  }
  rec.order = truth->order();
  Context<S> ctx(sg);
  const auto t0 = std::chrono::steady_clock::now();
  auto run = run_cycle_length(ctx, x, cfg, rng);
  rec.multiplications = ctx.multiplications();
  rec.length = run.length;
  rec.table_peak = run.table_peak;
  try {
    rec.start = cycle_start_search(ctx, x, run.length);
  } catch (const std::domain_error&) {
    rec.start = 0;
  }
  rec.start_multiplications = ctx.multiplications() - rec.multiplications;
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rec.success = (CycleStructure{rec.start, rec.length} == *truth);
  return rec;
}

}  // namespace detail

inline std::vector<BenchRecord> run_bench(const RunConfig& cfg) {
  std::vector<BenchRecord> records;
  Rng rng(cfg.seed);
  for (Exponent size : cfg.sizes) {
    for (unsigned trial = 0; trial < cfg.trials; ++trial) {
      const std::uint64_t element_seed = rng();
      if (cfg.family == "monogenic") {
        Exponent s, L;
        if (cfg.max_start) {
          s = uniform_in(rng, 1, *cfg.max_start);
          L = uniform_in(rng, 1, size);
        } else {
          s = uniform_in(rng, 1, size);
          L = size - s + 1;
        }
        records.push_back(detail::bench_one(Monogenic(s, L), 1, CycleStructure{s, L}, cfg, rng));
      } else if (cfg.family == "zmod") {
        const ZMod sg(size);
        records.push_back(detail::bench_one(sg, random_element(sg, element_seed), std::nullopt, cfg, rng));
      } else if (cfg.family == "matmod") {
        const MatMod sg(size, cfg.modulus);
        records.push_back(detail::bench_one(sg, random_element(sg, element_seed), std::nullopt, cfg, rng));
      } else if (cfg.family == "boolmat") {
        const BoolMat sg(size);
        records.push_back(detail::bench_one(sg, random_element(sg, element_seed), std::nullopt, cfg, rng));
      } else if (cfg.family == "transformation") {
        const Transformation sg(size);
        records.push_back(detail::bench_one(sg, random_element(sg, element_seed), std::nullopt, cfg, rng));
      } else {
        throw ParseError("unknown family \"" + cfg.family + "\"", "--family");
      }
    }
  }
  return records;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<BenchRecord> records;
  try {
    if (cfg.format != "csv" && cfg.format != "jsonl") throw ParseError("format must be csv or jsonl", "--format");
    records = run_bench(cfg);
  } catch (const ParseError& e) {
    return detail::report_error(err, kParseError, e.what());
  } catch (const std::domain_error& e) {
    return detail::report_error(err, kParseError, e.what());
  }
  if (cfg.format == "csv" && !records.empty()) {
    out << "instance,N_x,algorithm,multiplications,start_multiplications,table_peak,L,s,success";
    if (cfg.timing) out << ",wall_ms";
    out << "\n";
  }
  std::size_t successes = 0;
  for (const auto& r : records) {
    successes += r.success.value_or(false);
    if (cfg.format == "csv") {
      out << '"' << r.instance << "\"," << r.order << ',' << r.algorithm << ',' << r.multiplications << ','
          << r.start_multiplications << ',' << r.table_peak << ',' << r.length << ',' << r.start << ','
          << (r.success ? (*r.success ? "1" : "0") : "");
      if (cfg.timing) out << ',' << r.wall_ms;
      out << "\n";
    } else {
      nlohmann::json j = {{"instance", r.instance},
                          {"N_x", r.order},
                          {"algorithm", r.algorithm},
                          {"multiplications", r.multiplications},
                          {"start_multiplications", r.start_multiplications},
                          {"table_peak", r.table_peak},
                          {"L", r.length},
                          {"s", r.start},
                          {"success", r.success ? nlohmann::json(*r.success) : nlohmann::json(nullptr)}};
      if (cfg.timing) j["wall_ms"] = r.wall_ms;
      out << j.dump() << "\n";
    }
  }
  if (!records.empty())
    err << "semidlog: " << successes << "/" << records.size() << " runs matched the oracle\n";
  return kOk;
}

inline int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto results = run_selftest(cfg.inject_fault);
  bool all = true;
  for (const auto& r : results) all = all && r.passed();
  if (cfg.json) {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& r : results)
      suites.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", r.failures},
                        {"first_failure", r.first_failure}});
    out << nlohmann::json{{"command", "selftest"}, {"passed", all}, {"suites", suites}}.dump() << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
      if (!r.passed()) out << ": " << r.first_failure;
      out << "\n";
    }
  }
  return all ? kOk : kSelftestFailure;
}

}  // namespace semidlog::cli
