#pragma once

#include <vector>

#include "coaltrade/model.hpp"

namespace coaltrade::solver {

/// Tolerances and limits for the interior-point solver.
///
/// optimality_tolerance bounds the duality gap in currency units;
/// feasibility_tolerance is the worst acceptable constraint residual in kWh.
struct SolveSettings {
    double optimality_tolerance = 1e-8;
    double feasibility_tolerance = 1e-9;
    int max_iterations = 120;

    void validate() const;
};

/// The dispatch subproblem one agent solves inside consensus ADMM: its own
/// grid bill plus the price term dual'C and the proximal penalty
/// (penalty/2)*||C - consensus||^2 on the coalition trade vector C.
struct LocalQpSpec {
    model::BuildingParams params;
    model::BuildingSeries series;
    model::PriceSeries prices;
    std::vector<double> dual;       // lambda, one entry per slot
    std::vector<double> consensus;  // z, one entry per slot
    double penalty = 0.5;           // c > 0

    void validate() const;
};

struct SolveResult {
    model::DispatchPlan plan;
    double cost = 0.0;  // grid bill of the returned plan
    int iterations = 0;
};

/// Minimum-cost dispatch of a single building acting alone (no coalition
/// trades).  The returned plan is feasible at the solver's feasibility
/// tolerance, never both buys and sells at one slot, and its cost is within
/// optimality_tolerance of the true optimum.  Throws SolverError if the
/// interior-point iteration fails to converge.
SolveResult solve_decentralised(const model::BuildingParams& params,
                                const model::BuildingSeries& series,
                                const model::PriceSeries& prices,
                                const SolveSettings& settings = {});

/// Solves the ADMM local step (strongly convex in the coalition trade).
/// Coalition buy/sell columns of the returned plan carry the optimal C
/// split by sign.
model::DispatchPlan solve_local_qp(const LocalQpSpec& spec, const SolveSettings& settings = {});

/// Independent correctness anchor: exhaustive search of charge/discharge
/// controls on a per-slot grid (refined around the incumbent until the step
/// drops below control_grid_step), with grid trades induced by the power
/// balance.  Exponential in T; rejects T > 4.
SolveResult brute_force_plan(const model::BuildingParams& params,
                             const model::BuildingSeries& series,
                             const model::PriceSeries& prices, double control_grid_step);

}  // namespace coaltrade::solver
