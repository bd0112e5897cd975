#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace roadcover {

struct TrialResult {
  std::uint64_t seed = 0;
  int n = 0;
  double rho = 0;
  int side_lb = 0;
  int side_deployed = 0;
  int arb_lb = 0;
  int arb_deployed = 0;
};

struct TableRow {
  int n = 0;
  double rho = 0;
  int trials = 0;
  double side_lb_mean = 0;
  double side_deployed_mean = 0;
  double arb_lb_mean = 0;
  double arb_deployed_mean = 0;
};

// Runs `trials` seeded experiments: horizontal-only instances in a 1000x1000
// region, width 50, lengths (0, 200], seed = base_seed + trial. Both
// deployment modes run on the same instance; every deployment must pass
// independent verification and the 2x / 4x per-orientation sensor bounds
// (violations throw, tagged with the trial index). Returns the means.
TableRow run_trials(int n, double rho, int trials, std::uint64_t base_seed,
                    std::vector<TrialResult>* per_trial = nullptr);

struct SimReport {
  std::string csv;
  std::vector<std::string> diagnostics;  // ordering-trend checks, one line each
  bool trends_ok = true;
};

// CSV with one row per (n, rho) plus trend diagnostics: deployed/lower-bound
// means should not decrease with n at fixed rho and not increase with rho at
// fixed n.
SimReport aggregate_results(std::vector<TableRow> rows);

}  // namespace roadcover
