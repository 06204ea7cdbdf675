#include "qsup/figures.hpp"

#include <cmath>
#include <cstdio>

#include "qsup/bounds.hpp"
#include "qsup/fisher.hpp"
#include "qsup/material.hpp"
#include "qsup/montecarlo.hpp"
#include "qsup/multipass.hpp"
#include "qsup/parallel.hpp"
#include "qsup/params.hpp"

namespace qsup {

namespace {

// Pass counts shown in the multipass and bound figures.
const std::vector<double> kPassCounts = {0.5, 1.0, 2.0, 5.0, 100.0};
// Transmissions shown in the information-vs-pass-count figures.
const std::vector<double> kTransmissions = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
// Histogram panels: operating transmissions x pass counts.
const std::vector<double> kMcTransmissions = {0.8, 0.05, 0.005};
const std::vector<double> kMcPassCounts = {0.5, 1.0, 2.0};

// Multipass informations evaluated to underflow gracefully (t^{2n} -> 0
// gives 0 information rather than a domain error).
double info_t(double t, double n) {
  return n * n * std::pow(t, 2.0 * n - 2.0) / one_minus_pow(t, 2.0 * n);
}

double info_phi(double t, double n) {
  double tn = std::pow(t, n);
  return n * n * tn * tn;
}

// Inverse scalar costs in underflow-safe form.
double holevo_information(double t, double n) {
  double t2n = std::exp(2.0 * n * std::log(t));
  return n * n * t2n / (1.0 + t * t * one_minus_pow(t, 2.0 * n));
}

double nagaoka_information(double t, double n) {
  double t2n = std::exp(2.0 * n * std::log(t));
  double vis = 1.0 + t * std::sqrt(one_minus_pow(t, 2.0 * n));
  return n * n * t2n / (vis * vis);
}

std::string label(const char* prefix, double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%g", prefix, value);
  return buf;
}

Table qfi_vs_transmission(const FigureOptions& opts) {
  Table tab;
  tab.columns = {"t", "n", "qfi_t", "qfi_phi"};
  auto grid = transmission_grid(opts.t_min.value_or(FigureDefaults::t_min),
                                opts.t_max.value_or(FigureDefaults::t_max),
                                opts.t_steps.value_or(FigureDefaults::t_steps));
  for (double t : grid) {
    for (double n : kPassCounts) {
      tab.add_row({t, n, info_t(t, n), info_phi(t, n)});
    }
  }
  return tab;
}

Table phase_scan_vs_transmission(const FigureOptions& opts) {
  Table tab;
  tab.columns = {"t", "qfi_t", "scan_cfi_per_setting", "ratio"};
  auto grid = transmission_grid(opts.t_min.value_or(FigureDefaults::t_min),
                                opts.t_max.value_or(FigureDefaults::t_max),
                                opts.t_steps.value_or(FigureDefaults::t_steps));
  for (double t : grid) {
    double qfi = 1.0 / ((1.0 - t) * (1.0 + t));
    double scan = phase_scan_cfi_limit(t);
    tab.add_row({t, qfi, scan, qfi / scan});
  }
  return tab;
}

Table qfi_vs_passes() {
  Table tab;
  tab.columns = {"t", "n", "qfi_t", "qfi_phi"};
  auto grid = log_grid(FigureDefaults::n_min, FigureDefaults::n_max,
                       FigureDefaults::n_steps);
  for (double t : kTransmissions) {
    for (double n : grid) {
      tab.add_row({t, n, info_t(t, n), info_phi(t, n)});
    }
  }
  return tab;
}

Table enhancement_vs_transmission(const FigureOptions& opts) {
  Table tab;
  tab.columns = {"t", "gain_t", "gain_t_integer", "gain_phi",
                 "gain_phi_integer"};
  auto grid = transmission_grid(opts.t_min.value_or(FigureDefaults::t_min),
                                opts.t_max.value_or(FigureDefaults::t_max),
                                opts.t_steps.value_or(FigureDefaults::t_steps));
  std::vector<std::vector<double>> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    double t = grid[i];
    rows[i] = {t, enhancement_ratio(t, Which::transmission, false),
               enhancement_ratio(t, Which::transmission, true),
               enhancement_ratio(t, Which::phase, false),
               enhancement_ratio(t, Which::phase, true)};
  });
  for (auto& r : rows) tab.add_row(std::move(r));
  return tab;
}

Table bound_information_vs_transmission(const FigureOptions& opts,
                                        bool nagaoka) {
  Table tab;
  tab.columns = {"t", "n",
                 nagaoka ? "nagaoka_information" : "holevo_information"};
  auto grid = transmission_grid(opts.t_min.value_or(FigureDefaults::t_min),
                                opts.t_max.value_or(FigureDefaults::t_max),
                                opts.t_steps.value_or(FigureDefaults::t_steps));
  for (double t : grid) {
    for (double n : kPassCounts) {
      tab.add_row({t, n,
                   nagaoka ? nagaoka_information(t, n)
                           : holevo_information(t, n)});
    }
  }
  return tab;
}

Table optimal_passes_vs_transmission(const FigureOptions& opts) {
  Table tab;
  tab.columns = {"t", "n_qfi_t", "n_qfi_phi", "n_holevo", "n_nagaoka"};
  auto grid = transmission_grid(opts.t_min.value_or(FigureDefaults::t_min),
                                opts.t_max.value_or(FigureDefaults::t_max),
                                opts.t_steps.value_or(FigureDefaults::t_steps));
  std::vector<std::vector<double>> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    double t = grid[i];
    rows[i] = {t, optimal_n_transmission(t).n_star, optimal_n_phase(t).n_star,
               optimal_n_bound(t, BoundKind::holevo).n_star,
               optimal_n_bound(t, BoundKind::nagaoka).n_star};
  });
  for (auto& r : rows) tab.add_row(std::move(r));
  return tab;
}

Table mixture_vs_joint(const FigureOptions& opts) {
  Table tab;
  tab.columns = {"t", "joint_cost", "mixture_cost", "ratio"};
  auto grid =
      transmission_grid(opts.t_min.value_or(FigureDefaults::t_min),
                        opts.t_max.value_or(FigureDefaults::t_max_mixture),
                        opts.t_steps.value_or(FigureDefaults::t_steps));
  std::vector<std::vector<double>> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    double t = grid[i];
    double joint = optimal_n_bound(t, BoundKind::nagaoka).objective_at_star;
    double mixture = mixture_optimum(t).variance_sum;
    rows[i] = {t, joint, mixture, joint / mixture};
  });
  for (auto& r : rows) tab.add_row(std::move(r));
  return tab;
}

Table histogram_errors(const FigureOptions& opts) {
  Table tab;
  tab.columns = {"trial"};
  std::uint64_t shots = opts.mc_shots.value_or(FigureDefaults::mc_shots);
  std::uint64_t trials = opts.mc_trials.value_or(FigureDefaults::mc_trials);
  std::uint64_t seed = opts.mc_seed.value_or(FigureDefaults::mc_seed);

  std::vector<McResult> results;
  std::uint64_t combo = 0;
  for (double t : kMcTransmissions) {
    for (double n : kMcPassCounts) {
      tab.columns.push_back(label("err_t", t) + label("_n", n));
      // Each panel gets its own seed stream.
      McConfig cfg(t, 0.0, n, shots, trials, seed + combo);
      results.push_back(run_histogram(cfg));
      ++combo;
    }
  }
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::vector<double> row;
    row.reserve(results.size() + 1);
    row.push_back(static_cast<double>(i));
    for (const McResult& r : results) row.push_back(r.errors[i]);
    tab.add_row(std::move(row));
  }
  return tab;
}

Table material_information() {
  Table tab;
  tab.columns = {"panel", "inv_gamma", "gamma", "length", "qfi_gamma",
                 "qfi_kappa"};
  // Panel 1: fixed unit length, swept attenuation (plotted against 1/gamma).
  for (double inv_gamma : log_grid(0.1, 100.0, FigureDefaults::t_steps)) {
    MaterialParams m(1.0 / inv_gamma, 1.0, 1.0);
    tab.add_row({1.0, inv_gamma, m.gamma, m.length, qfi_gamma(m),
                 qfi_kappa(m)});
  }
  // Panel 2: fixed attenuations, swept path length.
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (double length : log_grid(0.01, 10.0, FigureDefaults::t_steps)) {
      MaterialParams m(gamma, 1.0, length);
      tab.add_row({2.0, 1.0 / gamma, gamma, length, qfi_gamma(m),
                   qfi_kappa(m)});
    }
  }
  return tab;
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"2a", "2b", "2c", "3a",
                                               "3b", "3c", "4a", "4b",
                                               "4c", "5",  "s1", "s2"};
  return ids;
}

Table make_figure(const std::string& id, const FigureOptions& opts) {
  if (id == "2a" || id == "2b") return qfi_vs_transmission(opts);
  if (id == "2c") return phase_scan_vs_transmission(opts);
  if (id == "3a" || id == "3b") return qfi_vs_passes();
  if (id == "3c") return enhancement_vs_transmission(opts);
  if (id == "4a") return bound_information_vs_transmission(opts, false);
  if (id == "4b") return bound_information_vs_transmission(opts, true);
  if (id == "4c") return optimal_passes_vs_transmission(opts);
  if (id == "5") return mixture_vs_joint(opts);
  if (id == "s1") return histogram_errors(opts);
  if (id == "s2") return material_information();
  throw DomainError("make_figure: unknown figure id '" + id + "'");
}

std::vector<double> transmission_grid(double t_min, double t_max, int steps) {
  if (!(t_min > 0.0 && t_max < 1.0 && t_min <= t_max)) {
    throw DomainError("transmission_grid: need 0 < t_min <= t_max < 1");
  }
  if (steps < 1) throw DomainError("transmission_grid: need steps >= 1");
  if (steps == 1) return {t_min};
  std::vector<double> grid(steps);
  double lo = std::log(1.0 - t_max);
  double hi = std::log(1.0 - t_min);
  for (int i = 0; i < steps; ++i) {
    grid[i] = 1.0 - std::exp(hi + (lo - hi) * i / (steps - 1));
  }
  grid.front() = t_min;  // exact endpoints
  grid.back() = t_max;
  return grid;
}

std::vector<double> log_grid(double lo, double hi, int steps) {
  if (!(lo > 0.0 && lo <= hi)) {
    throw DomainError("log_grid: need 0 < lo <= hi");
  }
  if (steps < 1) throw DomainError("log_grid: need steps >= 1");
  if (steps == 1) return {lo};
  std::vector<double> grid(steps);
  double llo = std::log(lo);
  double lhi = std::log(hi);
  for (int i = 0; i < steps; ++i) {
    grid[i] = std::exp(llo + (lhi - llo) * i / (steps - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

}  // namespace qsup
