// Experiment harness: runs the full condition x synchrony protocol, derives
// drift and force metrics from the traces, aggregates per cell, and writes
// traces, a summary CSV and deterministic plot rasters.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhi/agent.hpp"

namespace rhi {

struct ExperimentConfig {
    std::vector<Condition> conditions{Condition::Left, Condition::Center,
                                      Condition::Right};
    std::vector<StimulationMode> modes{StimulationMode::Sync, StimulationMode::Async};
    int trials_per_cell = 5;
    std::uint64_t master_seed = 42;
    std::string model_path;
    std::string env_config_path;
    std::string agent_config_path;
    std::string out_dir = "out/run";
    int workers = 2;

    static ExperimentConfig from_config(const Config& cfg);
};

struct TrialScalars {
    Condition condition = Condition::Center;
    StimulationMode mode = StimulationMode::Sync;
    int trial = 0;
    double drift_cm = 0.0;
    double mean_abs_force = 0.0;
    double gamma_tail_mean = 0.0;
    bool aborted = false;
};

struct CellSummary {
    Condition condition = Condition::Center;
    StimulationMode mode = StimulationMode::Sync;
    int n = 0;
    int aborted_count = 0;
    double drift_mean = 0.0;
    double drift_std = 0.0;
    double mean_abs_force = 0.0;
    double gamma_tail_mean = 0.0;
    std::vector<double> force_series_mean;  // per-iteration cell average
};

// Perceptual drift in cm along x; positive is rightward. Uses the believed
// end effector only (recomputed from the mu columns).
double compute_drift_cm(const TrialTrace& trace, const EnvConfig& env,
                        DriftMeasure measure = DriftMeasure::Final);

// Horizontal end-effector acceleration proxy per iteration: x component of
// fk_jacobian(true resting posture) * action, optionally smoothed with a
// centered moving average.
std::vector<double> compute_force_proxy(const TrialTrace& trace, const EnvConfig& env,
                                        int smooth_window = 1);

double gamma_tail_mean(const TrialTrace& trace);

// Pure function of (master seed, condition, mode, trial index).
std::uint64_t experiment_child_seed(std::uint64_t master, Condition c,
                                    StimulationMode m, int trial);

TrialScalars trial_scalars(const TrialTrace& trace, const EnvConfig& env,
                           const AgentConfig& agent, Condition c, StimulationMode m,
                           int trial);

struct ExperimentResult {
    std::vector<TrialScalars> trials;  // sorted by (condition, mode, trial)
    std::vector<CellSummary> cells;
    std::string out_dir;
};

// Runs every (condition, mode, trial) with derived child seeds, writes
// out_dir/{traces/,summary.csv,plots/,resolved-config.txt}. Trials may run
// on parallel workers; outputs are aggregated in sorted order.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const EnvConfig& env,
                                const VisualModel& model, const AgentConfig& agent);

void write_summary_csv(const std::string& path, const std::vector<TrialScalars>& trials,
                       const std::vector<CellSummary>& cells);

// Recomputes all scalars from the per-trial trace files of a finished run.
std::vector<TrialScalars> recompute_from_traces(const std::string& run_dir,
                                                const ExperimentConfig& cfg,
                                                const EnvConfig& env,
                                                const AgentConfig& agent);

void emit_plots(const std::vector<CellSummary>& cells, double dt,
                const std::string& plots_dir);

}  // namespace rhi
