#include "hanoipath/analysis.hpp"
#include "hanoipath/gasket.hpp"
#include "hanoipath/machine.hpp"
#include "hanoipath/oracle.hpp"
#include "hanoipath/pathfinder.hpp"
#include "hanoipath/transducer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace hanoipath;

constexpr int kMaxPathDiscs = 30;

constexpr const char* kWordHelp =
    "Words are most-significant first: the leftmost Hanoi digit is the peg "
    "of the largest disc, the leftmost gasket symbol the outermost "
    "triangle.";

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct WordPair {
  bool hanoi = false;
  HanoiWord hx, hy;
  GasketWord gx, gy;
};

WordPair parse_pair(const std::string& from, const std::string& to,
                    const std::string& coords) {
  WordPair p;
  p.hanoi = coords == "hanoi";
  if (p.hanoi) {
    p.hx = parse_hanoi_word(from);
    p.hy = parse_hanoi_word(to);
    if (p.hx.size() != p.hy.size()) {
      throw LengthMismatchError(p.hx.size(), p.hy.size());
    }
  } else {
    p.gx = parse_gasket_word(from);
    p.gy = parse_gasket_word(to);
    if (p.gx.size() != p.gy.size()) {
      throw LengthMismatchError(p.gx.size(), p.gy.size());
    }
  }
  return p;
}

int cmd_distance(const std::string& from, const std::string& to,
                 const std::string& coords, const std::string& format) {
  const WordPair p = parse_pair(from, to, coords);
  const Distance d =
      p.hanoi ? distance_hanoi(p.hx, p.hy) : distance(p.gx, p.gy);
  if (format == "json") {
    ordered_json out;
    out["distance"] = d.str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << d.str() << "\n";
  }
  return 0;
}

int cmd_decide(const std::string& from, const std::string& to,
               const std::string& coords, const std::string& format) {
  const WordPair p = parse_pair(from, to, coords);
  const Decision d = p.hanoi ? decide_hanoi(p.hx, p.hy) : decide(p.gx, p.gy);
  if (format == "json") {
    ordered_json out;
    out["verdict"] = to_string(d.verdict);
    out["prefix_discarded"] = d.prefix_discarded;
    out["core_pairs_read"] = d.core_pairs_read;
    out["permutation_pair_read"] = d.permutation_pair_read;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(d.verdict)
              << " prefix_discarded=" << d.prefix_discarded
              << " core_pairs_read=" << d.core_pairs_read << "\n";
  }
  return 0;
}

int cmd_path(const std::string& from, const std::string& to,
             const std::string& format) {
  const HanoiWord x = parse_hanoi_word(from);
  const HanoiWord y = parse_hanoi_word(to);
  if (x.size() != y.size()) throw LengthMismatchError(x.size(), y.size());
  if (x.size() > kMaxPathDiscs) {
    std::cerr << "path construction is refused for n > " << kMaxPathDiscs
              << " discs; use the distance command instead\n";
    return 1;
  }
  const bool draw = decide_hanoi(x, y).verdict == Verdict::Draw;
  const MovePath path = p2_path(x, y);
  if (format == "json") {
    ordered_json out;
    out["start"] = to_string(x);
    out["end"] = to_string(y);
    out["length"] = path.moves.size();
    out["draw"] = draw;
    ordered_json moves = ordered_json::array();
    for (const Move& m : path.moves) {
      moves.push_back({{"disc", m.disc}, {"from", m.from}, {"to", m.to}});
    }
    out["moves"] = std::move(moves);
    std::cout << out.dump() << "\n";
  } else {
    if (draw) {
      std::cerr << "draw: both alternatives are optimal; printing the "
                   "alternative-1 path\n";
    }
    for (const Move& m : path.moves) std::cout << to_string(m) << "\n";
  }
  return 0;
}

int cmd_verify(int max_n) {
  if (max_n > kMaxVerifyDiscs) {
    std::cerr << "verification is capped at --max-n " << kMaxVerifyDiscs
              << "\n";
    return 1;
  }
  const VerifyReport report = verify_suite(max_n);
  for (const CheckResult& check : report.checks) {
    if (check.pass) {
      std::cout << "PASS " << check.name << " (" << check.detail << ")\n";
    } else {
      std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
    }
  }
  return report.all_pass() ? 0 : 2;
}

int cmd_stats_constants() {
  const auto t = absorption_times();
  const auto d = expected_distance_constants();
  ordered_json out;
  out["t1"] = to_fraction_string(t[0]);
  out["t2"] = to_fraction_string(t[1]);
  out["t3"] = to_fraction_string(t[2]);
  out["d1"] = to_fraction_string(d[0]);
  out["d2"] = to_fraction_string(d[1]);
  out["d3"] = to_fraction_string(d[2]);
  out["d4"] = to_fraction_string(d[3]);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_stats_simulate(int n, std::uint64_t samples, std::uint64_t seed) {
  const StoppingTimeStats stats = simulate_stopping_time(n, samples, seed);
  ordered_json out;
  out["n"] = stats.n;
  out["samples"] = stats.samples;
  out["seed"] = stats.seed;
  out["mean"] = stats.mean;
  out["stddev"] = stats.stddev;
  out["stderr"] = stats.standard_error;
  ordered_json hist;
  for (const auto& [reads, count] : stats.histogram) {
    hist[std::to_string(reads)] = count;
  }
  out["histogram"] = std::move(hist);
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_stats_finite_reads(int n) {
  const ordered_json out = to_fraction_string(expected_reads_finite(n));
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_bench(int n, std::uint64_t samples, std::uint64_t seed,
              const std::string& format) {
  if (samples < 1) {
    std::cerr << "--samples must be at least 1\n";
    return 1;
  }
  std::mt19937_64 rng(seed);
  std::vector<HanoiWord> xs(samples), ys(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    HanoiWord& x = xs[s];
    HanoiWord& y = ys[s];
    x.resize(static_cast<std::size_t>(n));
    y.resize(static_cast<std::size_t>(n));
    do {
      for (auto& p : x) p = static_cast<PegId>(rng() % 3);
      for (auto& p : y) p = static_cast<PegId>(rng() % 3);
    } while (x == y);  // the baseline needs a differing disc
  }

  using clock = std::chrono::steady_clock;
  std::uint64_t machine_reads = 0;
  std::uint64_t mismatches = 0;
  std::vector<Distance> machine_distances(samples);
  const auto m0 = clock::now();
  for (std::uint64_t s = 0; s < samples; ++s) {
    MachineRun run = run_machine_hanoi(xs[s], ys[s]);
    machine_reads += run.symbols_read;
    machine_distances[s] = std::move(run.distance);
  }
  const double machine_seconds =
      std::chrono::duration<double>(clock::now() - m0).count();

  std::uint64_t baseline_reads = 0;
  const auto b0 = clock::now();
  for (std::uint64_t s = 0; s < samples; ++s) {
    const AlternativeCosts costs = both_alternative_costs(xs[s], ys[s]);
    baseline_reads += costs.symbols_read;
    if (costs.minimum != machine_distances[s]) ++mismatches;
  }
  const double baseline_seconds =
      std::chrono::duration<double>(clock::now() - b0).count();

  if (mismatches > 0) {
    std::cerr << "warning: " << mismatches
              << " distance disagreements between the two routes\n";
  }
  const double ratio = static_cast<double>(baseline_reads) /
                       static_cast<double>(machine_reads);
  // Wall-clock varies run to run, so it goes to stderr; stdout stays
  // byte-identical across identical invocations.
  std::cerr << "machine_seconds=" << fixed6(machine_seconds)
            << " baseline_seconds=" << fixed6(baseline_seconds) << "\n";
  if (format == "json") {
    ordered_json out;
    out["n"] = n;
    out["samples"] = samples;
    out["seed"] = seed;
    out["machine_reads"] = machine_reads;
    out["baseline_reads"] = baseline_reads;
    out["read_ratio"] = ratio;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "machine_reads=" << machine_reads
              << " baseline_reads=" << baseline_reads
              << " read_ratio=" << fixed6(ratio) << "\n";
  }
  return 0;
}

int cmd_export(int n, const std::string& kind) {
  if (n > kMaxDotDiscs) {
    std::cerr << "DOT export is capped at --n " << kMaxDotDiscs << "\n";
    return 1;
  }
  const GraphKind k = kind == "sg" ? GraphKind::Gasket : GraphKind::Hanoi;
  std::cout << export_dot(build_graph(n, k));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Shortest paths and distances between Tower of Hanoi states and "
      "discrete Sierpinski gasket vertices. " +
      std::string(kWordHelp)};
  app.require_subcommand(1);

  std::string from, to, coords, format = "text", kind;
  int n = 0;
  int max_n = 5;
  std::uint64_t samples = 0, seed = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_pair = [&](CLI::App* cmd, bool with_coords) {
    cmd->add_option("--from", from, "Source word")->required();
    cmd->add_option("--to", to, "Target word")->required();
    if (with_coords) {
      cmd->add_option("--coords", coords, "Coordinate system of both words")
          ->required()
          ->check(CLI::IsMember({"hanoi", "sg"}));
    }
  };

  CLI::App* distance_cmd = app.add_subcommand(
      "distance", "Length of the shortest path between two states");
  add_pair(distance_cmd, true);
  add_format(distance_cmd);

  CLI::App* decide_cmd = app.add_subcommand(
      "decide",
      "Whether the largest differing disc moves once or twice on a "
      "shortest path");
  add_pair(decide_cmd, true);
  add_format(decide_cmd);

  CLI::App* path_cmd = app.add_subcommand(
      "path", "An explicit shortest move sequence (Hanoi words only)");
  add_pair(path_cmd, false);
  add_format(path_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Cross-check the solvers against brute-force ground truth");
  verify_cmd->add_option("--max-n", max_n, "Largest disc count to check");

  CLI::App* stats_cmd = app.add_subcommand(
      "stats", "Exact chain constants, finite-length expectations and "
               "stopping-time simulation");
  bool constants = false, finite_reads = false, simulate = false;
  stats_cmd->add_flag("--constants", constants,
                      "Print the exact absorption and distance constants");
  stats_cmd->add_flag("--simulate", simulate,
                      "Simulate the decision machine's stopping time");
  stats_cmd->add_flag("--finite-reads", finite_reads,
                      "Exact expected pair reads with n pairs of input");
  stats_cmd->add_option("--n", n, "Word length / available pairs");
  stats_cmd->add_option("--samples", samples, "Sample count");
  stats_cmd->add_option("--seed", seed, "RNG seed (echoed in the output)");

  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Compare symbol reads of the machine route against the "
               "both-alternatives baseline");
  bench_cmd->add_option("--n", n, "Word length")->required();
  bench_cmd->add_option("--samples", samples, "Random pairs to measure")
      ->required();
  bench_cmd->add_option("--seed", seed, "RNG seed (echoed in the output)");
  add_format(bench_cmd);

  CLI::App* export_cmd =
      app.add_subcommand("export", "Emit the state graph in DOT format");
  export_cmd->add_option("--n", n, "Disc count")->required();
  export_cmd->add_option("--kind", kind, "Which graph to emit")
      ->required()
      ->check(CLI::IsMember({"sg", "hanoi"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(distance_cmd)) {
      return cmd_distance(from, to, coords, format);
    }
    if (app.got_subcommand(decide_cmd)) {
      return cmd_decide(from, to, coords, format);
    }
    if (app.got_subcommand(path_cmd)) return cmd_path(from, to, format);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(max_n);
    if (app.got_subcommand(stats_cmd)) {
      if (constants + simulate + finite_reads != 1) {
        std::cerr << "pick exactly one of --constants, --simulate, "
                     "--finite-reads\n";
        return 1;
      }
      if (constants) return cmd_stats_constants();
      if (simulate) {
        if (samples < 1) {
          std::cerr << "--samples must be at least 1\n";
          return 1;
        }
        return cmd_stats_simulate(n, samples, seed);
      }
      return cmd_stats_finite_reads(n);
    }
    if (app.got_subcommand(bench_cmd)) {
      return cmd_bench(n, samples, seed, format);
    }
    if (app.got_subcommand(export_cmd)) return cmd_export(n, kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
