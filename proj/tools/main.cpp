#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using semidlog::cli::RunConfig;

// Accepts "256" or "2^8".
semidlog::Exponent parse_size(const std::string& token) {
  const auto caret = token.find('^');
  if (caret == std::string::npos) return std::stoull(token);
  const auto base = std::stoull(token.substr(0, caret));
  const auto exp = std::stoull(token.substr(caret + 1));
  semidlog::Exponent v = 1;
  for (unsigned long long i = 0; i < exp; ++i) v *= base;
  return v;
}

std::vector<semidlog::Exponent> parse_sizes(const std::string& list) {
  std::vector<semidlog::Exponent> out;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ','))
    if (!token.empty()) out.push_back(parse_size(token));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle structure and discrete logarithms of torsion semigroup elements"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::optional<semidlog::Exponent> bound;
  std::string rounds;
  std::string out_path;
  std::string sizes;
  std::string cycle_alg = "deterministic", dlog_alg = "reduction", bench_alg = "deterministic";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (default SEMIDLOG_SEED or 0x5eed)");
    sub->add_flag("--json-output", cfg.json, "Emit JSON");
    sub->add_option("--out", out_path, "Write report to FILE");
  };

  auto* cycle = app.add_subcommand("cycle", "Cycle start, cycle length and order of x");
  cycle->add_option("--alg", cycle_alg, "deterministic | monico | banin-tsaban | brute")->capture_default_str();
  cycle->add_option("--bound", bound, "Known upper bound on the order");
  cycle->add_option("--B", cfg.divisor_bound, "Divisor bound for monico")->default_val(10000);
  cycle->add_option("--rounds", rounds, "r,s for banin-tsaban");
  cycle->add_flag("--verify", cfg.verify, "Compare against brute force");
  cycle->add_option("ELEMENT_SPEC", cfg.specs, "Inline JSON or @file")->required();
  add_common(cycle);

  auto* dlog = app.add_subcommand("dlog", "Solve x^m = y");
  dlog->add_option("--alg", dlog_alg, "reduction | pohlig-hellman")->capture_default_str();
  dlog->add_option("--bound", bound, "Known upper bound on the order");
  dlog->add_option("ELEMENT_SPEC", cfg.specs, "x then y, inline JSON or @file")->required();
  add_common(dlog);

  auto* bench = app.add_subcommand("bench", "Seeded sweep of a cycle-length algorithm");
  bench->add_option("--alg", bench_alg, "deterministic | monico | banin-tsaban | brute")->capture_default_str();
  bench->add_option("--family", cfg.family, "monogenic | zmod | matmod | boolmat | transformation")->default_val("monogenic");
  bench->add_option("--sizes", sizes, "Comma-separated sizes, e.g. 2^8,2^10");
  bench->add_option("--trials", cfg.trials, "Runs per size")->default_val(1);
  bench->add_option("--max-s", cfg.max_start, "Monogenic: draw s in [1,S] and L in [1,size]");
  bench->add_option("--modulus", cfg.modulus, "Modulus for matmod")->default_val(7);
  bench->add_option("--bound", bound, "Known upper bound on the order");
  bench->add_option("--B", cfg.divisor_bound, "Divisor bound for monico")->default_val(10000);
  bench->add_option("--rounds", rounds, "r,s for banin-tsaban");
  bench->add_option("--format", cfg.format, "jsonl | csv")->default_val("jsonl");
  bench->add_flag("--timing", cfg.timing, "Include wall time (not reproducible)");
  add_common(bench);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in property suites");
  selftest->add_option("--inject-fault", cfg.inject_fault, "Perturb the named suite");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : semidlog::cli::kParseError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.algorithm = cfg.command == "cycle" ? cycle_alg : cfg.command == "dlog" ? dlog_alg : bench_alg;
    cfg.seed = semidlog::cli::resolve_seed(seed);
    cfg.bound = bound;
    if (!rounds.empty()) {
      const auto comma = rounds.find(',');
      cfg.inner_rounds = static_cast<unsigned>(std::stoul(rounds.substr(0, comma)));
      if (comma != std::string::npos) cfg.outer_rounds = static_cast<unsigned>(std::stoul(rounds.substr(comma + 1)));
    }
    cfg.sizes = parse_sizes(sizes);
  } catch (const semidlog::ParseError& e) {
    std::cerr << "semidlog: " << e.what() << "\n";
    return semidlog::cli::kParseError;
  } catch (const std::exception&) {
    std::cerr << "semidlog: malformed numeric option\n";
    return semidlog::cli::kParseError;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "semidlog: cannot open " << out_path << "\n";
      return semidlog::cli::kParseError;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (cfg.command == "cycle") return semidlog::cli::cmd_cycle(cfg, out, std::cerr);
  if (cfg.command == "dlog") return semidlog::cli::cmd_dlog(cfg, out, std::cerr);
  if (cfg.command == "bench") return semidlog::cli::cmd_bench(cfg, out, std::cerr);
  return semidlog::cli::cmd_selftest(cfg, out, std::cerr);
}
