#pragma once

// Verification suites behind `kswap verify`. Each suite checks library
// behavior against the brute-force oracle or a structural property and
// returns a machine-readable report; failing cases are dumped as JSON
// counterexamples (first ten per suite).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kswap/derand.hpp"
#include "kswap/driver.hpp"
#include "kswap/generators.hpp"
#include "kswap/neighborhood.hpp"
#include "kswap/oracle.hpp"
#include "kswap/seed.hpp"

namespace kswap::verify {

using nlohmann::json;

inline constexpr std::size_t kMaxDumpedFailures = 10;

struct SuiteReport {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::uint64_t moves_checked = 0;
  std::uint64_t soundness_violations = 0;
  json metrics = json::object();
  json failures = json::array();

  void fail(json counterexample) {
    passed = false;
    if (failures.size() < kMaxDumpedFailures) failures.push_back(std::move(counterexample));
  }

  [[nodiscard]] json to_json() const {
    return {{"suite", name},
            {"status", passed ? "pass" : "fail"},
            {"cases", cases},
            {"moves_checked", moves_checked},
            {"soundness_violations", soundness_violations},
            {"metrics", metrics},
            {"failures", failures}};
  }
};

inline json to_json(const Instance& inst) {
  json p = json::array();
  for (Weight v : inst.processing_times()) p.push_back(to_string(v));
  return {{"n", inst.jobs()}, {"m", inst.machines()}, {"p", p}};
}

inline json to_json(const Schedule& s) {
  json loads = json::array();
  for (Weight l : s.loads()) loads.push_back(to_string(l));
  return {{"assignment", std::vector<MachineId>(s.assignment().begin(), s.assignment().end())}, {"loads", loads}};
}

inline json to_json(const SwapMove& mv) {
  return {{"src", mv.src}, {"dst", mv.dst}, {"out", mv.out_jobs}, {"in", mv.in_jobs}, {"gain", to_string(mv.gain)}};
}

/// Independent soundness check of a move returned by a search operator.
inline void audit_move(SuiteReport& r, const Instance& inst, const Schedule& s, const SwapMove& mv,
                       std::string_view origin) {
  ++r.moves_checked;
  if (!oracle::move_is_improving(inst, s, mv)) {
    ++r.soundness_violations;
    r.fail({{"kind", "unsound move"}, {"origin", origin}, {"instance", to_json(inst)}, {"schedule", to_json(s)},
            {"move", to_json(mv)}});
  }
}

inline Instance random_small_instance(std::mt19937_64& rng, std::size_t n_lo, std::size_t n_hi, std::int64_t p_lo,
                                      std::int64_t p_hi) {
  const auto n = std::uniform_int_distribution<std::size_t>(n_lo, n_hi)(rng);
  std::uniform_int_distribution<std::int64_t> dist(p_lo, p_hi);
  std::vector<Weight> p(n);
  for (auto& v : p) v = dist(rng);
  return {2, std::move(p)};
}

inline Schedule random_schedule(const Instance& inst, std::mt19937_64& rng) {
  std::vector<MachineId> assignment(inst.jobs());
  std::uniform_int_distribution<MachineId> dist(0, static_cast<MachineId>(inst.machines() - 1));
  for (auto& a : assignment) a = dist(rng);
  return {inst, std::move(assignment)};
}

/// Loaded machine first; with equal loads the pair is (0, 1) and Delta = 0.
inline MachinePair two_machine_pair(const Schedule& s) {
  return s.load(0) >= s.load(1) ? MachinePair{0, 1} : MachinePair{1, 0};
}

// ---------------------------------------------------------------------------

struct OracleEquivalenceParams {
  std::uint64_t seed = 1;
  std::size_t instances = 500;
  std::vector<int> ks{2, 3, 4};
  std::size_t max_n = 12;
  std::int64_t p_lo = 1;
  std::int64_t p_hi = 100;
};

/// naive_search and derandomized_search find a move iff the oracle does.
/// Schedules rotate between random assignments, LPT, and naive 2-swap optima.
inline SuiteReport oracle_equivalence(const OracleEquivalenceParams& params) {
  SuiteReport r{"oracle-equivalence"};
  std::uint64_t exists = 0, none = 0, naive_mismatch = 0, derand_mismatch = 0;
  for (std::size_t i = 0; i < params.instances; ++i) {
    std::mt19937_64 rng(derive_seed(params.seed, r.name, {i}));
    const Instance inst = random_small_instance(rng, 1, params.max_n, params.p_lo, params.p_hi);
    Schedule s = random_schedule(inst, rng);
    if (i % 3 == 1) s = lpt_schedule(inst);
    if (i % 3 == 2) {
      LocalSearchOptions opts;
      opts.start = s;
      s = local_search(inst, {OperatorKind::naive, 2, 0}, 0, opts).schedule;
    }
    const MachinePair pair = two_machine_pair(s);
    for (int k : params.ks) {
      ++r.cases;
      const auto truth = oracle::improving(inst, s, k);
      (truth.exists ? exists : none) += 1;
      const auto naive = naive_search(inst, s, pair, k);
      const auto derand = derandomized_search(inst, s, pair, k);
      if (naive.move) audit_move(r, inst, s, *naive.move, "naive");
      if (derand.move) audit_move(r, inst, s, *derand.move, "derandomized");
      const bool naive_ok = naive.found() == truth.exists;
      const bool derand_ok = derand.found() == truth.exists;
      naive_mismatch += naive_ok ? 0 : 1;
      derand_mismatch += derand_ok ? 0 : 1;
      if (!naive_ok || !derand_ok)
        r.fail({{"kind", "oracle mismatch"}, {"k", k}, {"instance", to_json(inst)}, {"schedule", to_json(s)},
                {"oracle", truth.exists}, {"naive", naive.found()}, {"derandomized", derand.found()}});
    }
  }
  r.metrics = {{"oracle_exists", exists}, {"oracle_none", none}, {"naive_mismatches", naive_mismatch},
               {"derandomized_mismatches", derand_mismatch}};
  return r;
}

// ---------------------------------------------------------------------------

struct RandomizedRateParams {
  std::uint64_t seed = 1;
  std::size_t cases_per_k = 100;
  std::vector<int> ks{2, 3, 4};
  double threshold = 0.55;
};

/// One batch of gamma(k) meet-in-the-middle runs on cases where an improving
/// exact-k swap is known to exist succeeds with frequency >= threshold.
inline SuiteReport randomized_rate(const RandomizedRateParams& params) {
  SuiteReport r{"randomized-rate"};
  std::uint64_t successes = 0;
  json per_k = json::object();
  for (int k : params.ks) {
    std::mt19937_64 rng(derive_seed(params.seed, r.name, {static_cast<std::uint64_t>(k)}));
    std::uint64_t k_cases = 0, k_hits = 0, attempts = 0;
    while (k_cases < params.cases_per_k) {
      if (++attempts > 1000 * params.cases_per_k) {
        r.fail({{"kind", "could not generate cases"}, {"k", k}});
        break;
      }
      const Instance inst = random_small_instance(rng, static_cast<std::size_t>(k), 12, 1, 100);
      const Schedule s = random_schedule(inst, rng);
      if (!oracle::improving(inst, s, k, oracle::SizeMode::exact).exists) continue;
      ++k_cases;
      const MachinePair pair = two_machine_pair(s);
      bool hit = false;
      for (std::uint64_t rep = 0; rep < gamma(k) && !hit; ++rep) {
        const auto run = mim_single_run(inst, s, pair, k, random_partition(s, pair, rng));
        if (run.move) {
          audit_move(r, inst, s, *run.move, "randomized");
          hit = true;
        }
      }
      k_hits += hit ? 1 : 0;
    }
    r.cases += k_cases;
    successes += k_hits;
    per_k[std::to_string(k)] = {{"cases", k_cases}, {"successes", k_hits}};
  }
  const double rate = r.cases ? static_cast<double>(successes) / static_cast<double>(r.cases) : 0.0;
  r.metrics = {{"success_rate", rate}, {"threshold", params.threshold}, {"per_k", per_k}};
  if (rate < params.threshold) r.fail({{"kind", "success rate below threshold"}, {"rate", rate}});
  return r;
}

// ---------------------------------------------------------------------------

struct DescentParams {
  std::uint64_t seed = 1;
  std::vector<std::size_t> ns{50};
  std::size_t runs = 100;
  bool random_start = false;  // LPT otherwise
};

/// Naive 2-swap descents on two machines: the potential of the source machine
/// drops on every move that leaves it critical, and the number of improving
/// iterations stays within n^4.
inline SuiteReport phi_descent(const DescentParams& params, std::string name = "phi-descent") {
  SuiteReport r{std::move(name)};
  std::uint64_t transitions = 0, same_critical = 0, max_iters = 0, ceiling_violations = 0;
  for (std::size_t n : params.ns) {
    for (std::size_t i = 0; i < params.runs; ++i) {
      ++r.cases;
      const std::uint64_t seed = derive_seed(params.seed, r.name, {n, i});
      const Instance inst = gen_uniform(n, 2, seed);
      LocalSearchOptions opts;
      opts.record_log = true;
      opts.on_move = [&](const Schedule& before, const SwapMove& mv) { audit_move(r, inst, before, mv, "driver"); };
      if (params.random_start) {
        std::mt19937_64 rng(seed);
        opts.start = random_schedule(inst, rng);
      }
      LocalSearchResult run{Schedule::all_on(inst, 0), {}, false, false};
      try {
        run = local_search(inst, {OperatorKind::naive, 2, 0}, seed, opts);
      } catch (const std::logic_error& e) {
        ++ceiling_violations;
        r.fail({{"kind", e.what()}, {"n", n}, {"run", i}});
        continue;
      }
      const auto iters = run.stats.improving_iterations;
      max_iters = std::max(max_iters, iters);
      const std::uint64_t ceiling = static_cast<std::uint64_t>(n) * n * n * n;
      if (iters > ceiling) {
        ++ceiling_violations;
        r.fail({{"kind", "iteration ceiling exceeded"}, {"n", n}, {"run", i}, {"iterations", iters}});
      }
      for (std::size_t t = 0; t < run.stats.log.size(); ++t) {
        const auto& rec = run.stats.log[t];
        ++transitions;
        if (rec.makespan_after > rec.makespan_before)
          r.fail({{"kind", "makespan increased"}, {"n", n}, {"run", i}, {"iteration", t}});
        if (!rec.src_still_critical) continue;
        ++same_critical;
        if (rec.phi_after >= rec.phi_before)
          r.fail({{"kind", "potential did not decrease"}, {"n", n}, {"run", i}, {"iteration", t},
                  {"phi_before", rec.phi_before}, {"phi_after", rec.phi_after}});
      }
    }
  }
  r.metrics = {{"transitions", transitions}, {"same_critical_transitions", same_critical},
               {"max_iterations", max_iters}, {"ceiling_violations", ceiling_violations}};
  return r;
}

// ---------------------------------------------------------------------------

struct LowerBoundReport {
  int n = 0;
  std::uint64_t moves = 0;
  std::uint64_t required = 0;  // 2^n - 1
  bool all_improving = true;
  bool all_three_jobs = true;
  bool machine0_critical = true;
  bool all_tuples_visited = true;
  double seconds = 0;
  std::string error;

  [[nodiscard]] bool ok() const {
    return error.empty() && moves >= required && all_improving && all_three_jobs && machine0_critical &&
           all_tuples_visited;
  }
};

inline constexpr int kMaxTupleTrackingN = 24;

/// Replays the adversarial 3-swap sequence with independent checks on every move.
inline LowerBoundReport run_lowerbound(int n) {
  LowerBoundReport rep;
  rep.n = n;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const LowerBoundInstance lb = gen_lowerbound(n);
    rep.required = (std::uint64_t{1} << n) - 1;
    Schedule shadow = lb.initial;
    std::vector<bool> visited;
    if (n <= kMaxTupleTrackingN) {
      visited.assign(std::size_t{1} << n, false);
      visited[0] = true;
    }
    rep.moves = for_each_adversarial_move(lb, [&](const SwapMove& mv, const Schedule& after) {
      if (mv.size() != 3) rep.all_three_jobs = false;
      if (!oracle::move_is_improving(lb.instance, shadow, mv)) rep.all_improving = false;
      apply_move(lb.instance, shadow, mv);
      if (!(after.load(0) > after.load(1))) rep.machine0_critical = false;
      if (!visited.empty()) {
        const auto w = omega_state(lb, after);
        std::size_t code = 0;
        bool binary = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (w[i] < 0) binary = false;
          if (w[i] == 1) code |= std::size_t{1} << i;
        }
        if (binary) visited[code] = true;
      }
    });
    if (!visited.empty()) rep.all_tuples_visited = std::all_of(visited.begin(), visited.end(), [](bool b) { return b; });
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

struct LowerBoundParams {
  std::vector<int> ns{2, 4, 8, 12};
  double max_seconds_at_12 = 10.0;
};

inline SuiteReport lowerbound(const LowerBoundParams& params) {
  SuiteReport r{"lowerbound"};
  json per_n = json::object();
  for (int n : params.ns) {
    ++r.cases;
    const auto rep = run_lowerbound(n);
    r.moves_checked += rep.moves;
    if (!rep.all_improving) ++r.soundness_violations;
    per_n[std::to_string(n)] = {{"moves", rep.moves}, {"required", rep.required}, {"seconds", rep.seconds}};
    if (!rep.ok())
      r.fail({{"kind", "lower-bound replay failed"}, {"n", n}, {"moves", rep.moves}, {"error", rep.error},
              {"all_improving", rep.all_improving}, {"all_three_jobs", rep.all_three_jobs},
              {"machine0_critical", rep.machine0_critical}, {"all_tuples_visited", rep.all_tuples_visited}});
    if (n == 12 && rep.seconds >= params.max_seconds_at_12)
      r.fail({{"kind", "too slow"}, {"n", n}, {"seconds", rep.seconds}});
  }
  r.metrics = per_n;
  return r;
}

// ---------------------------------------------------------------------------

struct KSumParams {
  std::uint64_t seed = 1;
  std::size_t planted = 100;
  std::size_t negative = 100;
  std::vector<int> ks{3, 4};
  std::size_t max_size = 12;
};

/// Set with a zero-sum k-subset inserted among random values.
inline std::vector<std::int64_t> planted_ksum_set(std::mt19937_64& rng, int k, std::size_t max_size) {
  std::uniform_int_distribution<std::int64_t> val(-50, 50);
  const auto size = std::uniform_int_distribution<std::size_t>(static_cast<std::size_t>(k), max_size)(rng);
  for (;;) {
    std::vector<std::int64_t> s;
    std::int64_t sum = 0;
    for (int i = 0; i + 1 < k; ++i) {
      s.push_back(val(rng));
      sum += s.back();
    }
    s.push_back(-sum);
    while (s.size() < size) s.push_back(val(rng));
    std::shuffle(s.begin(), s.end(), rng);
    if (std::any_of(s.begin(), s.end(), [](std::int64_t v) { return v != 0; })) return s;
  }
}

/// Set with no zero-sum subset of any size 1..k (oracle-verified).
inline std::vector<std::int64_t> negative_ksum_set(std::mt19937_64& rng, int k, std::size_t max_size) {
  std::uniform_int_distribution<std::int64_t> val(-1'000'000, 1'000'000);
  const auto size = std::uniform_int_distribution<std::size_t>(static_cast<std::size_t>(k), max_size)(rng);
  for (;;) {
    std::vector<std::int64_t> s(size);
    for (auto& v : s) v = val(rng);
    bool clean = true;
    for (int t = 1; t <= k && clean; ++t) clean = !oracle::ksum(s, t).exists;
    if (clean) return s;
  }
}

inline SuiteReport ksum(const KSumParams& params) {
  SuiteReport r{"ksum"};
  std::uint64_t planted_found = 0, negative_clean = 0, equivalence_mismatch = 0, identity_violations = 0;
  std::mt19937_64 rng(derive_seed(params.seed, r.name));

  auto check_common = [&](const KSumInstance& red, const std::vector<std::int64_t>& set, int k) {
    const Weight gap = red.schedule.load(0) - red.schedule.load(1);
    if (gap != static_cast<Weight>(red.theta) + 1) {
      ++identity_violations;
      r.fail({{"kind", "load identity violated"}, {"set", set}, {"k", k}});
    }
    const bool swap_exists = oracle::improving(red.instance, red.schedule, k, oracle::SizeMode::exact).exists;
    const bool ksum_exists = oracle::ksum(set, k).exists;
    if (swap_exists != ksum_exists) {
      ++equivalence_mismatch;
      r.fail({{"kind", "reduction equivalence violated"}, {"set", set}, {"k", k}, {"swap", swap_exists},
              {"ksum", ksum_exists}});
    }
  };

  for (std::size_t i = 0; i < params.planted; ++i) {
    ++r.cases;
    const int k = params.ks[i % params.ks.size()];
    const auto set = planted_ksum_set(rng, k, params.max_size);
    const auto red = gen_ksum_reduction(set, k);
    check_common(red, set, k);
    const auto res = derandomized_search_exact(red.instance, red.schedule, {0, 1}, k);
    if (!res.move) {
      r.fail({{"kind", "planted zero-sum not found"}, {"set", set}, {"k", k}});
      continue;
    }
    audit_move(r, red.instance, red.schedule, *res.move, "derandomized");
    Weight element_sum = 0;
    bool only_elements = res.move->size() == static_cast<std::size_t>(k);
    for (const auto* side : {&res.move->out_jobs, &res.move->in_jobs})
      for (JobId j : *side) {
        if (j >= red.values.size())
          only_elements = false;
        else
          element_sum += red.values[j];
      }
    if (!only_elements || element_sum != 0) {
      r.fail({{"kind", "move does not encode a zero-sum k-subset"}, {"set", set}, {"k", k},
              {"move", to_json(*res.move)}});
      continue;
    }
    ++planted_found;
  }

  for (std::size_t i = 0; i < params.negative; ++i) {
    ++r.cases;
    const int k = params.ks[i % params.ks.size()];
    const auto set = negative_ksum_set(rng, k, params.max_size);
    const auto red = gen_ksum_reduction(set, k);
    check_common(red, set, k);
    const auto res = derandomized_search(red.instance, red.schedule, {0, 1}, k);
    if (res.move) {
      audit_move(r, red.instance, red.schedule, *res.move, "derandomized");
      r.fail({{"kind", "move found on a negative set"}, {"set", set}, {"k", k}, {"move", to_json(*res.move)}});
      continue;
    }
    ++negative_clean;
  }
  r.metrics = {{"planted_found", planted_found}, {"planted_total", params.planted},
               {"negative_clean", negative_clean}, {"negative_total", params.negative},
               {"equivalence_mismatches", equivalence_mismatch}, {"identity_violations", identity_violations}};
  return r;
}

// ---------------------------------------------------------------------------

struct SplitterParams {
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_max_n = 20;
  std::uint64_t exhaustive_max_k = 4;
  std::uint64_t sampled_n = 200;
  std::uint64_t sampled_max_k = 6;
  std::size_t samples = 10'000;
  std::uint64_t schedule_max_k = 6;
};

inline bool injective_on(const SplitterFamily& fam, std::size_t f, const std::vector<std::uint64_t>& subset) {
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b)
      if (fam.bucket(f, subset[a]) == fam.bucket(f, subset[b])) return false;
  return true;
}

inline bool covered(const SplitterFamily& fam, const std::vector<std::uint64_t>& subset) {
  for (std::size_t f = 0; f < fam.size(); ++f)
    if (injective_on(fam, f, subset)) return true;
  return false;
}

/// Structural checks on a mapping schedule: first coloring, complement at the
/// end, single-coordinate steps, k^2 + 1 entries.
inline bool schedule_well_formed(const MappingSchedule& ms) {
  const std::size_t buckets = static_cast<std::size_t>(ms.k * ms.k);
  const std::size_t half = (buckets + 1) / 2;
  if (ms.mappings.size() != buckets + 1) return false;
  const auto& first = ms.mappings.front();
  const auto& last = ms.mappings.back();
  for (std::size_t c = 0; c < buckets; ++c) {
    if (first[c] != (c < half ? 0 : 1)) return false;
    if (last[c] != 1 - first[c]) return false;
  }
  for (std::size_t i = 1; i < ms.mappings.size(); ++i) {
    std::size_t diff = 0;
    for (std::size_t c = 0; c < buckets; ++c) diff += ms.mappings[i][c] != ms.mappings[i - 1][c];
    if (diff != 1) return false;
  }
  return true;
}

/// Every k-subset of buckets has exactly ceil(k/2) zeros under some coloring.
inline bool schedule_balances_all_subsets(const MappingSchedule& ms) {
  const auto k = static_cast<std::size_t>(ms.k);
  const std::size_t buckets = k * k;
  if (buckets > 64) return false;
  std::vector<std::uint64_t> zero_masks;
  for (const auto& m : ms.mappings) {
    std::uint64_t z = 0;
    for (std::size_t c = 0; c < buckets; ++c)
      if (m[c] == 0) z |= std::uint64_t{1} << c;
    zero_masks.push_back(z);
  }
  const int want = static_cast<int>((k + 1) / 2);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (auto c : idx) mask |= std::uint64_t{1} << c;
    if (std::none_of(zero_masks.begin(), zero_masks.end(), [&](std::uint64_t z) { return std::popcount(z & mask) == want; }))
      return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == buckets - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

inline SuiteReport splitter(const SplitterParams& params) {
  SuiteReport r{"splitter"};
  std::uint64_t exhaustive_subsets = 0, sampled_subsets = 0, uncovered = 0;

  for (std::uint64_t n = 1; n <= params.exhaustive_max_n; ++n) {
    for (std::uint64_t k = 1; k <= params.exhaustive_max_k && k <= n; ++k) {
      ++r.cases;
      const auto fam = build_splitter(n, k);
      std::vector<std::uint64_t> subset(k);
      for (std::uint64_t i = 0; i < k; ++i) subset[i] = i;
      for (;;) {
        ++exhaustive_subsets;
        if (!covered(fam, subset)) {
          ++uncovered;
          r.fail({{"kind", "uncovered subset"}, {"n", n}, {"k", k}, {"subset", subset}});
        }
        std::size_t pos = k;
        while (pos > 0 && subset[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++subset[pos - 1];
        for (std::size_t i = pos; i < k; ++i) subset[i] = subset[i - 1] + 1;
      }
    }
  }

  std::mt19937_64 rng(derive_seed(params.seed, r.name));
  for (std::uint64_t k = 1; k <= params.sampled_max_k; ++k) {
    ++r.cases;
    const auto fam = build_splitter(params.sampled_n, k);
    std::vector<std::uint64_t> universe(params.sampled_n);
    for (std::uint64_t i = 0; i < params.sampled_n; ++i) universe[i] = i;
    for (std::size_t s = 0; s < params.samples; ++s) {
      std::vector<std::uint64_t> subset;
      std::sample(universe.begin(), universe.end(), std::back_inserter(subset), k, rng);
      ++sampled_subsets;
      if (!covered(fam, subset)) {
        ++uncovered;
        r.fail({{"kind", "uncovered subset"}, {"n", params.sampled_n}, {"k", k}, {"subset", subset}});
      }
    }
  }

  for (std::uint64_t k = 1; k <= params.schedule_max_k; ++k) {
    ++r.cases;
    const auto ms = mapping_schedule(k);
    if (!schedule_well_formed(ms)) r.fail({{"kind", "malformed mapping schedule"}, {"k", k}});
    if (!schedule_balances_all_subsets(ms)) r.fail({{"kind", "mapping schedule misses a balanced coloring"}, {"k", k}});
  }
  r.metrics = {{"exhaustive_subsets", exhaustive_subsets}, {"sampled_subsets", sampled_subsets},
               {"uncovered", uncovered}};
  return r;
}

// ---------------------------------------------------------------------------

struct SoundnessParams {
  std::uint64_t seed = 1;
  std::size_t instances = 60;
  std::vector<int> ks{1, 2, 3, 4};
};

/// Full descents with every operator from random starts on two and three
/// machines; each applied move is re-checked by the oracle.
inline SuiteReport driver_soundness(const SoundnessParams& params) {
  SuiteReport r{"soundness"};
  std::uint64_t uncertified = 0;
  for (std::size_t i = 0; i < params.instances; ++i) {
    std::mt19937_64 rng(derive_seed(params.seed, r.name, {i}));
    const auto m = std::size_t{2} + i % 2;
    const auto n = std::uniform_int_distribution<std::size_t>(1, 14)(rng);
    const Instance inst = gen_uniform(n, m, rng(), 1, 1000);
    const Schedule start = random_schedule(inst, rng);
    for (int k : params.ks) {
      for (OperatorKind op : {OperatorKind::naive, OperatorKind::randomized, OperatorKind::derandomized}) {
        ++r.cases;
        LocalSearchOptions opts;
        opts.start = start;
        opts.on_move = [&](const Schedule& before, const SwapMove& mv) { audit_move(r, inst, before, mv, "driver"); };
        const auto run = local_search(inst, {op, k, 0}, rng(), opts);
        // A certified optimum must agree with the oracle.
        if (run.certified && oracle::improving(inst, run.schedule, k).exists) {
          ++uncertified;
          r.fail({{"kind", "certified schedule has an improving move"}, {"k", k}, {"operator", to_string(op)},
                  {"instance", to_json(inst)}, {"schedule", to_json(run.schedule)}});
        }
      }
    }
  }
  r.metrics = {{"false_certificates", uncertified}};
  return r;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle-equivalence", "randomized-rate", "phi-descent",
                                              "iteration-ceiling", "lowerbound", "ksum", "splitter", "soundness"};
  return names;
}

/// Runs a suite by name with its default parameters; throws InvalidInput for
/// an unknown name.
inline SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "oracle-equivalence") return oracle_equivalence({.seed = seed});
  if (name == "randomized-rate") return randomized_rate({.seed = seed});
  if (name == "phi-descent") return phi_descent({.seed = seed});
  if (name == "iteration-ceiling") return phi_descent({.seed = seed, .ns = {50, 100, 200}}, "iteration-ceiling");
  if (name == "lowerbound") return lowerbound({});
  if (name == "ksum") return ksum({.seed = seed});
  if (name == "splitter") return splitter({.seed = seed});
  if (name == "soundness") return driver_soundness({.seed = seed});
  std::string known;
  for (const auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
  throw InvalidInput("unknown suite '" + std::string(name) + "'; known suites: " + known);
}

}  // namespace kswap::verify
