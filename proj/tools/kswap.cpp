// kswap: generate instances, run local search, benchmark operators, replay the
// lower-bound family, build k-sum schedules and run verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kswap/kswap.hpp"
#include "kswap/verify.hpp"

namespace {

using nlohmann::json;
using namespace kswap;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Writes to `path`, or stdout when empty or "-".
void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw UsageError("write to '" + path + "' failed");
}

json loads_json(const Schedule& s) {
  json out = json::array();
  for (Weight l : s.loads()) out.push_back(to_string(l));
  return out;
}

struct GenArgs {
  std::size_t n = 10;
  std::size_t m = 2;
  std::uint64_t seed = 1;
  std::uint64_t lo = kDefaultLo;
  std::uint64_t hi = kDefaultHi;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const Instance inst = gen_uniform(a.n, a.m, derive_seed(a.seed, "instance", {0}), a.lo, a.hi);
  write_output(a.out, serialize_instance(inst));
  return kExitOk;
}

struct SolveArgs {
  std::string in = "-";
  int k = 2;
  std::string op = "naive";
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> max_iters;
  std::string out;
};

int run_solve(const SolveArgs& a) {
  const Instance inst = parse_instance(read_input(a.in));
  LocalSearchOptions opts;
  opts.iteration_cap = a.max_iters;
  const auto lpt = lpt_schedule(inst);
  const auto run = local_search(inst, {parse_operator(a.op), a.k, 0}, derive_seed(a.seed, "search", {0}), opts);
  using ms = std::chrono::duration<double, std::milli>;
  const json report{
      {"n", inst.jobs()},
      {"m", inst.machines()},
      {"k", a.k},
      {"operator", a.op},
      {"seed", a.seed},
      {"lpt_makespan", to_string(lpt.makespan())},
      {"makespan", to_string(run.schedule.makespan())},
      {"improving_iterations", run.stats.improving_iterations},
      {"operator_invocations", run.stats.operator_invocations},
      {"search_time_ms", ms(run.stats.search_time).count()},
      {"certified", run.certified},
      {"cap_reached", run.cap_reached},
      {"loads", loads_json(run.schedule)},
      {"assignment", std::vector<MachineId>(run.schedule.assignment().begin(), run.schedule.assignment().end())},
  };
  write_output(a.out, report.dump(2) + "\n");
  return kExitOk;
}

struct BenchArgs {
  std::string cls;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::size_t count = kClassInstanceCount;
  std::uint64_t seed = 1;
  std::vector<int> ks;
  std::vector<std::string> ops{"naive", "randomized"};
  std::uint64_t lo = kDefaultLo;
  std::uint64_t hi = kDefaultHi;
  std::optional<std::uint64_t> max_iters;
  unsigned threads = 1;
  std::string out;
};

int run_bench_cmd(const BenchArgs& a) {
  BenchSpec spec;
  if (!a.cls.empty()) {
    const auto preset = find_preset(a.cls);
    if (!preset) throw UsageError("unknown class '" + a.cls + "' (expected C1..C9)");
    spec.label = std::string(preset->label);
    spec.n = preset->n;
    spec.m = preset->m;
  }
  if (a.n) spec.n = *a.n;
  if (a.m) spec.m = *a.m;
  if (a.cls.empty() && (!a.n || !a.m)) throw UsageError("bench needs --class or both --n and --m");
  spec.count = a.count;
  spec.seed = a.seed;
  spec.lo = a.lo;
  spec.hi = a.hi;
  spec.iteration_cap = a.max_iters;
  spec.threads = a.threads;
  spec.ks = a.ks;
  if (spec.ks.empty())
    for (int k = 1; k <= max_k_for(spec.n); ++k) spec.ks.push_back(k);
  spec.operators.clear();
  for (const auto& op : a.ops) spec.operators.push_back(parse_operator(op));

  // Open the destination before running so an unwritable path fails fast.
  std::ofstream file;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out);
    if (!file) throw UsageError("cannot write '" + a.out + "'");
  }
  const auto rows = run_bench(spec);
  std::ostream& os = file.is_open() ? static_cast<std::ostream&>(file) : std::cout;
  write_bench_csv(os, rows);
  if (!os.flush()) throw UsageError("write failed");
  return kExitOk;
}

int run_lowerbound_cmd(int n) {
  if (n < 1 || n > 24) throw UsageError("lowerbound needs 1 <= n <= 24");
  const auto rep = verify::run_lowerbound(n);
  const json report{{"n", n},
                    {"moves", rep.moves},
                    {"required", rep.required},
                    {"all_improving", rep.all_improving},
                    {"all_three_jobs", rep.all_three_jobs},
                    {"machine0_critical", rep.machine0_critical},
                    {"all_tuples_visited", rep.all_tuples_visited},
                    {"seconds", rep.seconds},
                    {"status", rep.ok() ? "pass" : "fail"}};
  std::cout << report.dump(2) << "\n";
  if (!rep.error.empty()) std::cerr << "error: " << rep.error << "\n";
  return rep.ok() ? kExitOk : kExitFail;
}

struct KSumArgs {
  std::vector<std::int64_t> values;
  int k = 3;
  std::string out;
};

int run_ksum_cmd(const KSumArgs& a) {
  const auto red = gen_ksum_reduction(a.values, a.k);
  const auto search = derandomized_search_exact(red.instance, red.schedule, {0, 1}, a.k);
  json report{{"k", a.k},
              {"negated", red.negated},
              {"theta", red.theta},
              {"instance", serialize_instance(red.instance)},
              {"assignment", std::vector<MachineId>(red.schedule.assignment().begin(), red.schedule.assignment().end())},
              {"loads", loads_json(red.schedule)},
              {"swap_found", search.found()}};
  if (search.move) {
    std::vector<std::int64_t> subset;
    for (const auto* side : {&search.move->out_jobs, &search.move->in_jobs})
      for (JobId j : *side)
        if (j < a.values.size()) subset.push_back(a.values[j]);
    report["zero_sum_subset"] = subset;
  }
  write_output(a.out, report.dump(2) + "\n");
  return kExitOk;
}

int run_verify_cmd(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify::suite_names();
  else
    names.push_back(suite);
  json reports = json::array();
  bool ok = true;
  for (const auto& name : names) {
    const auto r = verify::run_suite(name, seed);
    ok = ok && r.passed;
    reports.push_back(r.to_json());
  }
  const json out = names.size() == 1 ? reports.front() : json{{"status", ok ? "pass" : "fail"}, {"suites", reports}};
  std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-swap local search for makespan minimization on identical machines"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a uniform random instance");
  gen_cmd->add_option("--n", gen.n, "Number of jobs")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.m, "Number of machines")->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  gen_cmd->add_option("--seed", gen.seed, "Master seed");
  gen_cmd->add_option("--lo", gen.lo, "Smallest processing time");
  gen_cmd->add_option("--hi", gen.hi, "Largest processing time");
  gen_cmd->add_option("--out", gen.out, "Output file (stdout if omitted)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run local search from LPT on an instance file");
  solve_cmd->add_option("--in", solve.in, "Instance file ('-' for stdin)");
  solve_cmd->add_option("--k", solve.k, "Largest swap size")->check(CLI::Range(1, kMaxK));
  solve_cmd->add_option("--operator", solve.op, "naive | randomized | derandomized")
      ->check(CLI::IsMember({"naive", "randomized", "derandomized"}));
  solve_cmd->add_option("--seed", solve.seed, "Master seed");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Stop after this many improving iterations");
  solve_cmd->add_option("--out", solve.out, "Report file (stdout if omitted)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark operators on a class of random instances (CSV)");
  bench_cmd->add_option("--class", bench.cls, "Preset class C1..C9");
  bench_cmd->add_option("--n", bench.n, "Number of jobs (overrides the class)");
  bench_cmd->add_option("--m", bench.m, "Number of machines (overrides the class)");
  bench_cmd->add_option("--count", bench.count, "Instances per class");
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("--k", bench.ks, "Swap sizes, comma separated (default 1..cap)")->delimiter(',');
  bench_cmd->add_option("--operator", bench.ops, "Operators, comma separated")
      ->delimiter(',')
      ->check(CLI::IsMember({"naive", "randomized", "derandomized"}));
  bench_cmd->add_option("--lo", bench.lo, "Smallest processing time");
  bench_cmd->add_option("--hi", bench.hi, "Largest processing time");
  bench_cmd->add_option("--max-iters", bench.max_iters, "Iteration cap per run");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  bench_cmd->add_option("--out", bench.out, "CSV file (stdout if omitted)");

  int lb_n = 8;
  auto* lb_cmd = app.add_subcommand("lowerbound", "Replay the exponential 3-swap sequence");
  lb_cmd->add_option("--n", lb_n, "Family size (1..24)");

  KSumArgs ks;
  auto* ksum_cmd = app.add_subcommand("ksum", "Build the two-machine schedule encoding a k-sum set");
  ksum_cmd->add_option("--values", ks.values, "Integers, comma separated")->delimiter(',')->required();
  ksum_cmd->add_option("--k", ks.k, "Subset size")->check(CLI::Range(1, kMaxK));
  ksum_cmd->add_option("--out", ks.out, "Report file (stdout if omitted)");

  std::string suite;
  std::uint64_t verify_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::string suites_help = "all";
  for (const auto& s : verify::suite_names()) suites_help += " | " + s;
  verify_cmd->add_option("suite", suite, suites_help)->required();
  verify_cmd->add_option("--seed", verify_seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*bench_cmd) return run_bench_cmd(bench);
    if (*lb_cmd) return run_lowerbound_cmd(lb_n);
    if (*ksum_cmd) return run_ksum_cmd(ks);
    if (*verify_cmd) return run_verify_cmd(suite, verify_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
