#include "roadcover/sim.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "roadcover/deploy.hpp"
#include "roadcover/instance.hpp"
#include "roadcover/verify.hpp"

namespace roadcover {

namespace {

void check_deployment(const std::vector<RoadSegment>& roads, const Deployment& dep,
                      int factor) {
  CoverageReport rep = verify_independent(roads, dep.placed);
  if (!rep.all_independent.value_or(false))
    throw std::runtime_error("deployment failed independent verification");
  int h = dep.placed_count(Orientation::horizontal);
  int v = dep.placed_count(Orientation::vertical);
  if (h > factor * static_cast<int>(dep.independent_h.size()) ||
      v > factor * static_cast<int>(dep.independent_v.size()))
    throw std::runtime_error("deployment exceeded its approximation bookkeeping bound");
}

}  // namespace

TableRow run_trials(int n, double rho, int trials, std::uint64_t base_seed,
                    std::vector<TrialResult>* per_trial) {
  if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
  if (n < 1) throw std::invalid_argument("run_trials: n must be >= 1");
  if (rho < 50.0) throw std::invalid_argument("run_trials: rho must be >= the road width 50");

  TableRow row;
  row.n = n;
  row.rho = rho;
  row.trials = trials;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = base_seed + static_cast<std::uint64_t>(t);
    try {
      GenSpec spec;
      spec.n = n;
      spec.seed = seed;
      Instance inst = generate_random(spec);
      Deployment side = deploy_side_boundary(inst.roads, rho);
      Deployment arb = deploy_arbitrary(inst.roads, rho);
      check_deployment(inst.roads, side, 2);
      check_deployment(inst.roads, arb, 4);
      TrialResult tr;
      tr.seed = seed;
      tr.n = n;
      tr.rho = rho;
      tr.side_lb = side.lower_bound();
      tr.side_deployed = static_cast<int>(side.placed.size());
      tr.arb_lb = arb.lower_bound();
      tr.arb_deployed = static_cast<int>(arb.placed.size());
      row.side_lb_mean += tr.side_lb;
      row.side_deployed_mean += tr.side_deployed;
      row.arb_lb_mean += tr.arb_lb;
      row.arb_deployed_mean += tr.arb_deployed;
      if (per_trial) per_trial->push_back(tr);
    } catch (const std::exception& e) {
      throw std::runtime_error("trial " + std::to_string(t) + " (seed " + std::to_string(seed) +
                               "): " + e.what());
    }
  }
  row.side_lb_mean /= trials;
  row.side_deployed_mean /= trials;
  row.arb_lb_mean /= trials;
  row.arb_deployed_mean /= trials;
  return row;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

SimReport aggregate_results(std::vector<TableRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return a.n != b.n ? a.n < b.n : a.rho < b.rho;
  });
  SimReport rep;
  rep.csv = "n,rho,trials,side_lb_mean,side_deployed_mean,arb_lb_mean,arb_deployed_mean\n";
  for (const auto& r : rows)
    rep.csv += std::to_string(r.n) + "," + fmt(r.rho) + "," + std::to_string(r.trials) + "," +
               fmt(r.side_lb_mean) + "," + fmt(r.side_deployed_mean) + "," + fmt(r.arb_lb_mean) +
               "," + fmt(r.arb_deployed_mean) + "\n";

  auto metrics = [](const TableRow& r) {
    return std::array<double, 4>{r.side_lb_mean, r.side_deployed_mean, r.arb_lb_mean,
                                 r.arb_deployed_mean};
  };
  static const char* names[4] = {"side_lb_mean", "side_deployed_mean", "arb_lb_mean",
                                 "arb_deployed_mean"};

  std::map<double, std::vector<const TableRow*>> by_rho;
  std::map<int, std::vector<const TableRow*>> by_n;
  for (const auto& r : rows) {
    by_rho[r.rho].push_back(&r);
    by_n[r.n].push_back(&r);
  }
  for (const auto& [rho, group] : by_rho) {
    if (group.size() < 2) continue;
    for (int m = 0; m < 4; ++m) {
      bool ok = true;
      for (size_t i = 1; i < group.size(); ++i)
        if (metrics(*group[i])[m] < metrics(*group[i - 1])[m]) ok = false;
      rep.diagnostics.push_back(std::string(names[m]) + " non-decreasing in n at rho=" + fmt(rho) +
                                ": " + (ok ? "ok" : "violated"));
      rep.trends_ok = rep.trends_ok && ok;
    }
  }
  for (const auto& [n, group] : by_n) {
    if (group.size() < 2) continue;
    for (int m = 0; m < 4; ++m) {
      bool ok = true;
      for (size_t i = 1; i < group.size(); ++i)
        if (metrics(*group[i])[m] > metrics(*group[i - 1])[m]) ok = false;
      rep.diagnostics.push_back(std::string(names[m]) + " non-increasing in rho at n=" +
                                std::to_string(n) + ": " + (ok ? "ok" : "violated"));
      rep.trends_ok = rep.trends_ok && ok;
    }
  }
  return rep;
}

}  // namespace roadcover
