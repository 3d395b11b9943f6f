#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coaltrade/admm.hpp"
#include "coaltrade/coalition.hpp"
#include "coaltrade/data.hpp"
#include "coaltrade/deadline.hpp"
#include "coaltrade/model.hpp"

namespace coaltrade::mpc {

/// How each planning window is optimized.
enum class Scheme {
    decentralised,  // every building alone
    limited_info,   // bottom-up formation scored from aggregate trades only
    bottom_up,      // bottom-up formation scoring merges by solving them
    centralised,    // one grand coalition, no size cap
    optimal,        // exhaustive partition search
};

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);

/// Forecast window for one step: per-building predicted series over the
/// next L slots (L = min(T_pred + 1, slots remaining)) plus the matching
/// price slice.  Slot 0 of the window is the slot about to happen.
struct PredictionSet {
    int start = 0;  // absolute slot index of window slot 0
    std::vector<model::BuildingSeries> series;
    model::PriceSeries prices;

    int window() const { return prices.slots(); }
};

/// Builds the window at absolute slot t.  When the scenario carries
/// forecasts they provide slots t+1.., otherwise the true series do (exact
/// predictions).  With exact_first_step, window slot 0 always uses the true
/// demand and generation.
PredictionSet make_predictions(const data::Scenario& scenario, int t, int prediction_horizon,
                               bool exact_first_step);

struct MpcSettings {
    Scheme scheme = Scheme::decentralised;
    int prediction_horizon = 8;    // extra slots beyond the current one
    bool exact_first_step = true;  // window slot 0 uses true data
    bool dissolution = true;       // per-step coalition dissolution check
    int max_coalition_size = 4;
    std::uint64_t max_partitions = 200000;  // optimal scheme enumeration budget
    double merge_threshold = 1e-9;
    admm::AdmmSettings admm;
};

/// One coalition's slice of a step: what it planned, what the slot really
/// cost, and whether it had to dissolve.
struct CoalitionStepRecord {
    std::vector<int> members;
    double realized_cost = 0.0;   // stage cost actually booked for the coalition
    double singleton_sum = 0.0;   // sum of the members' individual stage costs
    bool dissolved = false;
};

struct MpcStep {
    int t = 0;
    std::vector<CoalitionStepRecord> coalitions;
    long admm_iterations = 0;
    double stage_cost = 0.0;     // sum of realized coalition costs
    double baseline_cost = 0.0;  // sum of all singleton stage costs
};

/// Complete closed-loop record of one scheme on one scenario.
struct MpcLog {
    Scheme scheme = Scheme::decentralised;
    std::vector<std::string> building_ids;
    std::vector<MpcStep> steps;
    std::vector<model::DispatchPlan> realized;  // per building, full horizon
    double total_cost = 0.0;      // sum of stage costs
    double baseline_total = 0.0;  // sum of singleton baselines (same states)
    long admm_iterations = 0;
    int dissolutions = 0;
    bool all_converged = true;
};

/// Keep the coalition when its realized stage cost does not exceed the sum
/// of its members' individual stage costs; dissolve on strict excess.
bool should_dissolve(double coalition_cost, double singleton_sum);

/// Runs the receding-horizon loop over the whole scenario horizon:
/// form/solve on the prediction window, apply first-slot battery controls
/// and coalition trades, settle the slot against true demand and generation
/// through the grid, check dissolution, advance the state.
MpcLog mpc_run(const data::Scenario& scenario, const MpcSettings& settings,
               const Deadline* deadline = nullptr);

/// One CSV row per step per coalition:
/// scheme,step,coalition,members,realized_cost,singleton_sum,dissolved,
/// step_admm_iterations,step_cost,baseline_cost
void write_step_csv(const MpcLog& log, std::ostream& out, bool header = true);

/// JSON object with the run totals (cost, baseline, iterations,
/// dissolutions, convergence).
std::string summary_json(const MpcLog& log);

}  // namespace coaltrade::mpc
