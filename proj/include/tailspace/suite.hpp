#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tailspace/checks.hpp"

namespace tailspace {

/// Options shared by every named sweep; zero/empty fields take the sweep's
/// own defaults (which match the acceptance criteria).
struct SweepOptions {
  int n = 0;                   // max cube dimension
  int k = 0;                   // tail level
  int trials = 0;
  std::uint64_t seed = 1;
  std::vector<double> p_grid;
  std::vector<double> t_grid;
  int workers = 1;
};

std::vector<std::string> known_check_ids();

/// Runs one named sweep.  Deterministic given the options: per-trial RNG
/// streams are derived from (seed, trial index), so the result is
/// independent of the worker count.
std::vector<CheckReport> run_check_sweep(const std::string& check_id,
                                         const SweepOptions& opt);

bool all_pass(const std::vector<CheckReport>& reports);

/// Splitmix-style mixer for per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace tailspace
