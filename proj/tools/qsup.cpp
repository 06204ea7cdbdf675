// Command-line front end: every quantity the library computes, emitted as a
// deterministic CSV or JSON table.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsup/bounds.hpp"
#include "qsup/figures.hpp"
#include "qsup/fisher.hpp"
#include "qsup/material.hpp"
#include "qsup/montecarlo.hpp"
#include "qsup/multipass.hpp"
#include "qsup/params.hpp"
#include "qsup/qubit.hpp"
#include "qsup/table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct OutputSpec {
  std::string path = "-";
  std::string format = "csv";

  qsup::OutputFormat parsed_format() const {
    return format == "json" ? qsup::OutputFormat::json
                            : qsup::OutputFormat::csv;
  }
};

void add_output_flags(CLI::App* cmd, OutputSpec* out) {
  cmd->add_option("--out", out->path, "Output path ('-' for stdout)");
  cmd->add_option("--format", out->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

struct GridSpec {
  std::optional<double> t;
  double t_min = qsup::FigureDefaults::t_min;
  double t_max = qsup::FigureDefaults::t_max;
  int t_steps = qsup::FigureDefaults::t_steps;
  std::string scale = "log-complement";

  std::vector<double> values() const {
    if (t) return {*t};
    if (scale == "linear") {
      if (!(t_min > 0.0 && t_max < 1.0 && t_min <= t_max)) {
        throw qsup::DomainError("grid: need 0 < t-min <= t-max < 1");
      }
      if (t_steps == 1) return {t_min};
      std::vector<double> grid(t_steps);
      for (int i = 0; i < t_steps; ++i) {
        grid[i] = t_min + (t_max - t_min) * i / (t_steps - 1.0);
      }
      grid.front() = t_min;
      grid.back() = t_max;
      return grid;
    }
    return qsup::transmission_grid(t_min, t_max, t_steps);
  }
};

void add_grid_flags(CLI::App* cmd, GridSpec* grid) {
  cmd->add_option("--t", grid->t, "Single transmission value");
  cmd->add_option("--t-min", grid->t_min, "Grid start");
  cmd->add_option("--t-max", grid->t_max, "Grid end");
  cmd->add_option("--t-steps", grid->t_steps, "Grid size")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--grid-scale", grid->scale,
                  "Spacing of the t grid (log-complement resolves t -> 1)")
      ->check(CLI::IsMember({"linear", "log-complement"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Estimation-theory toolkit for two-parameter (absorption and "
               "phase) sensing with undetected photons"};
  app.require_subcommand(1);

  // ---- state ----------------------------------------------------------
  double st_t = 0.5, st_phi = 0.0, st_n = 1.0, st_theta = 0.0;
  OutputSpec st_out;
  CLI::App* state_cmd =
      app.add_subcommand("state", "Signal state at an operating point");
  state_cmd->add_option("--t", st_t, "Transmission")->required();
  state_cmd->add_option("--phi", st_phi, "Per-pass phase");
  state_cmd->add_option("--n", st_n, "Pass count");
  state_cmd->add_option("--theta", st_theta, "Detection phase");
  add_output_flags(state_cmd, &st_out);

  // ---- qfi ------------------------------------------------------------
  GridSpec qfi_grid;
  double qfi_phi = 0.0, qfi_n = 1.0;
  OutputSpec qfi_out;
  CLI::App* qfi_cmd =
      app.add_subcommand("qfi", "Quantum Fisher information matrix");
  add_grid_flags(qfi_cmd, &qfi_grid);
  qfi_cmd->add_option("--phi", qfi_phi, "Per-pass phase");
  qfi_cmd->add_option("--n", qfi_n, "Pass count");
  add_output_flags(qfi_cmd, &qfi_out);

  // ---- bounds ---------------------------------------------------------
  GridSpec bounds_grid;
  double bounds_phi = 0.0, bounds_n = 1.0;
  bool bounds_numeric = false;
  std::optional<double> bounds_lambda;
  OutputSpec bounds_out;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Two-parameter cost bounds (SLD, Holevo, Nagaoka)");
  add_grid_flags(bounds_cmd, &bounds_grid);
  bounds_cmd->add_option("--phi", bounds_phi, "Per-pass phase");
  bounds_cmd->add_option("--n", bounds_n, "Pass count");
  bounds_cmd->add_flag("--numeric", bounds_numeric,
                       "Also run the numeric minimisers");
  bounds_cmd->add_option("--lambda", bounds_lambda,
                         "Also report the split-measurement variance at this "
                         "detector weight");
  add_output_flags(bounds_cmd, &bounds_out);

  // ---- optimal-passes -------------------------------------------------
  GridSpec passes_grid;
  OutputSpec passes_out;
  CLI::App* passes_cmd = app.add_subcommand(
      "optimal-passes", "Information-optimal pass counts and gains");
  add_grid_flags(passes_cmd, &passes_grid);
  add_output_flags(passes_cmd, &passes_out);

  // ---- mixture --------------------------------------------------------
  GridSpec mixture_grid;
  OutputSpec mixture_out;
  CLI::App* mixture_cmd = app.add_subcommand(
      "mixture", "Shot-splitting strategy vs the joint measurement");
  add_grid_flags(mixture_cmd, &mixture_grid);
  add_output_flags(mixture_cmd, &mixture_out);

  // ---- montecarlo -----------------------------------------------------
  double mc_t = 0.8, mc_delta = 0.0, mc_n = 1.0;
  std::uint64_t mc_shots = 10000, mc_trials = 1000, mc_seed = 1;
  OutputSpec mc_out;
  mc_out.path = "montecarlo.csv";
  CLI::App* mc_cmd = app.add_subcommand(
      "montecarlo", "Shot-by-shot simulation of the deviation estimator");
  mc_cmd->add_option("--t", mc_t, "Reference transmission")->required();
  mc_cmd->add_option("--delta-t", mc_delta, "True deviation");
  mc_cmd->add_option("--n", mc_n, "Pass count");
  mc_cmd->add_option("--shots", mc_shots, "Detections per trial");
  mc_cmd->add_option("--trials", mc_trials, "Independent trials");
  mc_cmd->add_option("--seed", mc_seed, "Base seed");
  add_output_flags(mc_cmd, &mc_out);

  // ---- phase-scan -----------------------------------------------------
  GridSpec scan_grid;
  double scan_phi = 0.0;
  int scan_settings = 10000;
  OutputSpec scan_out;
  CLI::App* scan_cmd = app.add_subcommand(
      "phase-scan", "Transmission information of a referenceless phase scan");
  add_grid_flags(scan_cmd, &scan_grid);
  scan_cmd->add_option("--phi", scan_phi, "Scan offset");
  scan_cmd->add_option("--settings", scan_settings, "Number of phase settings")
      ->check(CLI::Range(2, 100000000));
  add_output_flags(scan_cmd, &scan_out);

  // ---- material -------------------------------------------------------
  double mat_gamma = 1.0, mat_kappa = 1.0;
  double mat_length_min = 0.01, mat_length_max = 10.0;
  int mat_length_steps = 400;
  std::optional<double> mat_length;
  OutputSpec mat_out;
  CLI::App* mat_cmd = app.add_subcommand(
      "material", "Attenuation/phase-coefficient information of a medium");
  mat_cmd->add_option("--gamma", mat_gamma, "Attenuation coefficient")
      ->required();
  mat_cmd->add_option("--kappa", mat_kappa, "Phase coefficient");
  mat_cmd->add_option("--length", mat_length, "Single path length");
  mat_cmd->add_option("--length-min", mat_length_min, "Sweep start");
  mat_cmd->add_option("--length-max", mat_length_max, "Sweep end");
  mat_cmd->add_option("--length-steps", mat_length_steps, "Sweep size")
      ->check(CLI::PositiveNumber);
  add_output_flags(mat_cmd, &mat_out);

  // ---- figure ---------------------------------------------------------
  std::string fig_id;
  OutputSpec fig_out;
  fig_out.path.clear();  // default depends on the id
  qsup::FigureOptions fig_opts;
  CLI::App* fig_cmd =
      app.add_subcommand("figure", "Emit the dataset behind one figure");
  fig_cmd->add_option("--id", fig_id, "Figure identifier")
      ->required()
      ->check(CLI::IsMember(qsup::figure_ids()));
  fig_cmd->add_option("--t-min", fig_opts.t_min, "Grid start override");
  fig_cmd->add_option("--t-max", fig_opts.t_max, "Grid end override");
  fig_cmd->add_option("--t-steps", fig_opts.t_steps, "Grid size override");
  fig_cmd->add_option("--shots", fig_opts.mc_shots, "Histogram shots");
  fig_cmd->add_option("--trials", fig_opts.mc_trials, "Histogram trials");
  fig_cmd->add_option("--seed", fig_opts.mc_seed, "Histogram seed");
  add_output_flags(fig_cmd, &fig_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, returns 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  using qsup::SampleParams;
  using qsup::Table;
  using qsup::Which;

  try {
    if (*state_cmd) {
      SampleParams p(st_t, st_phi, st_n);
      qsup::QubitState rho = qsup::signal_state(p);
      qsup::Vector3 r = qsup::bloch_vector(rho);
      Table tab;
      tab.columns = {"t",        "phi",      "n",        "theta",
                     "rho00_re", "rho01_re", "rho01_im", "rho11_re",
                     "bloch_x",  "bloch_y",  "bloch_z",  "purity",
                     "p_plus",   "p_minus"};
      tab.add_row({p.t, p.phi, p.n, st_theta, rho.matrix()(0, 0).real(),
                   rho.matrix()(0, 1).real(), rho.matrix()(0, 1).imag(),
                   rho.matrix()(1, 1).real(), r.x(), r.y(), r.z(),
                   qsup::purity(rho),
                   qsup::detection_probability(p, st_theta, qsup::Sign::plus),
                   qsup::detection_probability(p, st_theta,
                                               qsup::Sign::minus)});
      qsup::write_table(tab, st_out.path, st_out.parsed_format());
    } else if (*qfi_cmd) {
      Table tab;
      tab.columns = {"t", "phi", "n", "qfi_t", "qfi_phi"};
      for (double t : qfi_grid.values()) {
        qsup::FisherMatrix f = qsup::qfi_matrix(SampleParams(t, qfi_phi, qfi_n));
        tab.add_row({t, qfi_phi, qfi_n, f(0, 0), f(1, 1)});
      }
      qsup::write_table(tab, qfi_out.path, qfi_out.parsed_format());
    } else if (*bounds_cmd) {
      Table tab;
      tab.columns = {"t",      "phi",    "n",           "c_s",
                     "c_h",    "c_n",    "d_star",      "h_star",
                     "lambda_star"};
      if (bounds_numeric) {
        tab.columns.push_back("c_h_numeric");
        tab.columns.push_back("c_n_numeric");
      }
      if (bounds_lambda) tab.columns.push_back("povm_variance");
      for (double t : bounds_grid.values()) {
        SampleParams p(t, bounds_phi, bounds_n);
        qsup::BoundsReport r = qsup::bounds_report(p);
        std::vector<double> row = {t,        bounds_phi, bounds_n,
                                   r.c_s,    r.c_h,      r.c_n,
                                   r.d_star, r.h_star,   r.lambda_star};
        if (bounds_numeric) {
          row.push_back(qsup::holevo_numeric(p).value);
          row.push_back(qsup::nagaoka_numeric(p).value);
        }
        if (bounds_lambda) {
          row.push_back(qsup::povm_variance(p, *bounds_lambda));
        }
        tab.add_row(std::move(row));
      }
      qsup::write_table(tab, bounds_out.path, bounds_out.parsed_format());
    } else if (*passes_cmd) {
      Table tab;
      tab.columns = {"t",          "n_t",        "n_t_integer",
                     "n_phi",      "n_phi_integer", "n_holevo",
                     "n_nagaoka",  "gain_t",     "gain_t_integer",
                     "gain_phi",   "gain_phi_integer"};
      for (double t : passes_grid.values()) {
        qsup::PassOptimum opt_t = qsup::optimal_n_transmission(t);
        qsup::PassOptimum opt_phi = qsup::optimal_n_phase(t);
        tab.add_row({t, opt_t.n_star, static_cast<double>(opt_t.n_star_int),
                     opt_phi.n_star, static_cast<double>(opt_phi.n_star_int),
                     qsup::optimal_n_bound(t, qsup::BoundKind::holevo).n_star,
                     qsup::optimal_n_bound(t, qsup::BoundKind::nagaoka).n_star,
                     qsup::enhancement_ratio(t, Which::transmission, false),
                     qsup::enhancement_ratio(t, Which::transmission, true),
                     qsup::enhancement_ratio(t, Which::phase, false),
                     qsup::enhancement_ratio(t, Which::phase, true)});
      }
      qsup::write_table(tab, passes_out.path, passes_out.parsed_format());
    } else if (*mixture_cmd) {
      Table tab;
      tab.columns = {"t",     "x",          "n_t", "n_phi",
                     "mixture_cost", "joint_cost", "ratio"};
      for (double t : mixture_grid.values()) {
        qsup::MixtureAllocation mix = qsup::mixture_optimum(t);
        double joint =
            qsup::optimal_n_bound(t, qsup::BoundKind::nagaoka).objective_at_star;
        tab.add_row({t, mix.x, mix.n_t, mix.n_phi, mix.variance_sum, joint,
                     joint / mix.variance_sum});
      }
      qsup::write_table(tab, mixture_out.path, mixture_out.parsed_format());
    } else if (*mc_cmd) {
      qsup::McConfig cfg(mc_t, mc_delta, mc_n, mc_shots, mc_trials, mc_seed);
      qsup::McResult res = qsup::run_histogram(cfg);
      Table tab;
      tab.columns = {"trial", "error"};
      for (std::uint64_t i = 0; i < cfg.trials; ++i) {
        tab.add_row({static_cast<double>(i), res.errors[i]});
      }
      qsup::write_table(tab, mc_out.path, mc_out.parsed_format());
      std::printf("{\"sample_std\": %s, \"predicted_std\": %s, "
                  "\"ratio\": %s, \"skewness\": %s, \"clamped_trials\": %llu}\n",
                  qsup::format_double(res.sample_std).c_str(),
                  qsup::format_double(res.predicted_std).c_str(),
                  qsup::format_double(res.sample_std / res.predicted_std).c_str(),
                  qsup::format_double(res.skewness).c_str(),
                  static_cast<unsigned long long>(res.clamped_trials));
    } else if (*scan_cmd) {
      Table tab;
      tab.columns = {"t",     "phi",          "settings", "scan_cfi",
                     "per_setting", "limit",  "qfi_ratio"};
      for (double t : scan_grid.values()) {
        double total = qsup::phase_scan_cfi(t, scan_phi, scan_settings);
        double limit = qsup::phase_scan_cfi_limit(t);
        double qfi = 1.0 / ((1.0 - t) * (1.0 + t));
        tab.add_row({t, scan_phi, static_cast<double>(scan_settings), total,
                     total / scan_settings, limit, qfi / limit});
      }
      qsup::write_table(tab, scan_out.path, scan_out.parsed_format());
    } else if (*mat_cmd) {
      Table tab;
      tab.columns = {"gamma", "kappa", "length", "qfi_gamma", "qfi_kappa"};
      std::vector<double> lengths =
          mat_length ? std::vector<double>{*mat_length}
                     : qsup::log_grid(mat_length_min, mat_length_max,
                                      mat_length_steps);
      for (double length : lengths) {
        qsup::MaterialParams m(mat_gamma, mat_kappa, length);
        tab.add_row({m.gamma, m.kappa, m.length, qsup::qfi_gamma(m),
                     qsup::qfi_kappa(m)});
      }
      qsup::write_table(tab, mat_out.path, mat_out.parsed_format());
    } else if (*fig_cmd) {
      Table tab = qsup::make_figure(fig_id, fig_opts);
      if (fig_out.path.empty()) {
        fig_out.path = "figure_" + fig_id +
                       (fig_out.format == "json" ? ".json" : ".csv");
      }
      qsup::write_table(tab, fig_out.path, fig_out.parsed_format());
    }
  } catch (const qsup::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return kExitIo;
  }
  return kExitOk;
}
