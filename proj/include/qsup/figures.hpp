#ifndef QSUP_FIGURES_HPP
#define QSUP_FIGURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsup/table.hpp"

namespace qsup {

// Centralised defaults for every dataset the `figure` command can emit.
// Grids in t are log-spaced in the complement 1 - t so the approach to full
// transparency is resolved; endpoints are taken exactly.
struct FigureDefaults {
  static constexpr int t_steps = 400;
  static constexpr double t_min = 0.01;
  static constexpr double t_max = 0.999;
  static constexpr double t_max_mixture = 0.9999;  // ids 5: push closer to 1
  static constexpr int n_steps = 400;              // ids 3a/3b: n grid
  static constexpr double n_min = 0.1;
  static constexpr double n_max = 1000.0;
  static constexpr std::uint64_t mc_shots = 10000;   // id s1
  static constexpr std::uint64_t mc_trials = 10000;  // id s1
  static constexpr std::uint64_t mc_seed = 20240215; // id s1
};

// Overridable knobs; unset fields fall back to FigureDefaults.
struct FigureOptions {
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::optional<int> t_steps;
  std::optional<std::uint64_t> mc_shots;
  std::optional<std::uint64_t> mc_trials;
  std::optional<std::uint64_t> mc_seed;
};

// Valid dataset identifiers, in emission order:
//   2a,2b  multipass QFI of transmission / phase vs t, n in {0.5,1,2,5,100}
//   2c     phase-scan information vs t: QFI, scan average, their ratio
//   3a,3b  QFI of transmission / phase vs pass count, t in a fixed list
//   3c     optimal-multipass enhancement vs t (continuous and integer)
//   4a,4b  inverse Holevo / Nagaoka cost vs t, n in {0.5,1,2,5,100}
//   4c     cost-optimal pass count vs t for each bound and both QFIs
//   5      joint Nagaoka cost vs split-strategy cost and their ratio
//   s1     per-trial estimation errors for histogram panels
//   s2     absorbing-medium Fisher informations vs 1/gamma and vs L
const std::vector<std::string>& figure_ids();

// Builds the dataset for one figure id; throws DomainError for unknown ids.
Table make_figure(const std::string& id, const FigureOptions& opts = {});

// Log-complement grid in t: 1 - t log-spaced between 1 - t_min and
// 1 - t_max, endpoints exact, increasing in t.
std::vector<double> transmission_grid(double t_min, double t_max, int steps);

// Plain log-spaced grid, endpoints exact.
std::vector<double> log_grid(double lo, double hi, int steps);

}  // namespace qsup

#endif  // QSUP_FIGURES_HPP
