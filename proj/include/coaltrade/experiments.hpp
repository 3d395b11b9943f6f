#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coaltrade/admm.hpp"
#include "coaltrade/data.hpp"
#include "coaltrade/model.hpp"
#include "coaltrade/mpc.hpp"

namespace coaltrade::experiments {

/// Which variable a sweep walks while everything else stays fixed.
enum class SweepAxis {
    building_count,  // regenerate the scenario with N = axis value
    coalition_size,  // same scenario, max coalition size = axis value
};

std::string to_string(SweepAxis axis);
SweepAxis axis_from_string(const std::string& name);

/// One batch-driver configuration: which schemes to run, on which scenario,
/// under which controller and solver knobs, and where to write the outputs.
///
/// JSON document shape (all keys optional, defaults below):
///   {
///     "schemes": ["decentralised", "limited_info", ...],
///     "max_coalition_size": 4,
///     "prediction_horizon": 8,
///     "exact_first_step": true,
///     "dissolution": true,
///     "merge_threshold": 1e-9,
///     "max_partitions": 200000,
///     "admm": {"penalty": 0.5, "residual_tolerance": 1e-5,
///              "max_iterations": 5000},
///     "scenario": {"path": "dir"}            // load from disk, or
///     "scenario": {"seed": 1, "buildings": 4, "slots": 96,
///                  "producer_fraction": 0.5, "forecast_noise": 0.1},
///     "budget_secs": 600,
///     "out_dir": ".",
///     "sweep": {"axis": "building_count", "values": [4, 8]}
///   }
/// Unknown keys are rejected so typos fail loudly.
struct ExperimentConfig {
    std::vector<mpc::Scheme> schemes{mpc::Scheme::decentralised, mpc::Scheme::limited_info};
    int max_coalition_size = 4;
    int prediction_horizon = 8;
    bool exact_first_step = true;
    bool dissolution = true;
    double merge_threshold = 1e-9;
    std::uint64_t max_partitions = 200000;
    admm::AdmmSettings admm;

    std::string scenario_path;      // when non-empty, load_scenario wins
    data::GeneratorSpec generator;  // otherwise the scenario is generated

    double budget_secs = 600.0;  // wall-clock budget per scheme run
    std::string out_dir = ".";

    SweepAxis sweep_axis = SweepAxis::building_count;
    std::vector<int> sweep_values;

    /// Throws std::invalid_argument on out-of-range knobs (empty scheme
    /// list, max_coalition_size < 1, budget <= 0, ...).
    void validate() const;
};

/// Parses a JSON config document.  Throws LoadError naming the offending
/// key on unknown keys, wrong types, or unparsable JSON.
ExperimentConfig config_from_json(const std::string& text);

/// Reads and parses a JSON config file.
ExperimentConfig load_config(const std::string& path);

/// The outcome of one scheme on one scenario.  On a timeout the partial
/// results are discarded: cost and iteration fields are meaningless and the
/// plan/log payloads are empty.
struct SchemeRun {
    mpc::Scheme scheme = mpc::Scheme::decentralised;
    int axis_value = -1;  // sweep point, -1 outside sweeps
    std::string status = "ok";  // "ok" | "timeout"
    double cost = 0.0;
    long admm_iterations = 0;
    double runtime_secs = 0.0;
    bool converged = true;
    std::vector<model::DispatchPlan> plans;  // per building, full horizon
    std::optional<mpc::MpcLog> log;          // closed-loop runs only
};

struct ExperimentReport {
    std::string kind;  // "openloop" | "mpc" | "sweep"
    std::string axis;  // sweep runs: the axis name, else ""
    std::string scenario_id;
    std::uint64_t seed = 0;
    int buildings = 0;
    int slots = 0;
    std::vector<SchemeRun> runs;
};

/// Solves the full-horizon problem once per scheme (no receding horizon):
/// scheme cost, total ADMM iterations, and runtime; schemes that exhaust
/// their wall-clock or enumeration budget get a "timeout" row while the
/// rest complete.
ExperimentReport run_openloop(const ExperimentConfig& config);

/// Runs the receding-horizon loop per scheme and reports realized totals.
ExperimentReport run_mpc(const ExperimentConfig& config);

/// Repeats run_mpc at every sweep value.  The building_count axis requires
/// a generated scenario (the fleet is resized); coalition_size reuses one
/// scenario and varies the size cap.
ExperimentReport run_sweep(const ExperimentConfig& config);

/// report.csv: one row per scheme run.  Plain runs use
///   scheme,cost,admm_iterations,runtime_secs,status
/// and sweeps prepend axis,axis_value.  Costs print with full round-trip
/// precision so identical runs produce bit-identical cost columns; timeout
/// rows leave cost and iterations empty.
void write_report_csv(const ExperimentReport& report, std::ostream& out);

/// trace.csv: per-slot per-building trades for plotting, one block of
/// slots x buildings rows per completed scheme:
///   scheme,slot,building,grid_net_kwh,coal_net_kwh,charge_kwh,
///   discharge_kwh,soc_kwh
void write_trace_csv(const ExperimentReport& report, std::ostream& out);

/// Full machine-readable record: scenario identity, the knobs that shaped
/// the run, and every scheme outcome (including per-run baselines and
/// dissolution counts for closed-loop runs).
std::string summary_json(const ExperimentReport& report, const ExperimentConfig& config);

/// Writes report.csv, trace.csv and summary.json into config.out_dir
/// (created if missing); closed-loop runs also get steps.csv, one row per
/// step per coalition.  Returns the directory written to.
std::string write_outputs(const ExperimentReport& report, const ExperimentConfig& config);

}  // namespace coaltrade::experiments
