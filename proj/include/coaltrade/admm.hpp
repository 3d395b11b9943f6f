#pragma once

#include <iosfwd>
#include <vector>

#include "coaltrade/deadline.hpp"
#include "coaltrade/model.hpp"
#include "coaltrade/solver.hpp"

namespace coaltrade::admm {

/// Consensus-ADMM configuration.  The defaults mirror the evaluation setup
/// used throughout the experiments: penalty 0.5 and a 1e-5 cap on the primal
/// residual.
struct AdmmSettings {
    double penalty = 0.5;
    double residual_tolerance = 1e-5;
    int max_iterations = 5000;
    solver::SolveSettings local;  // tolerances of the per-agent QP solves
    std::ostream* trace = nullptr;  // when set, receives "iteration,residual,objective" rows

    void validate() const;
};

/// Coordinator state after a solve: consensus targets and duals per agent,
/// the iteration count, and the residual trajectory.
struct AdmmState {
    std::vector<std::vector<double>> consensus;  // z_i, one vector per agent
    std::vector<std::vector<double>> dual;       // lambda_i
    double penalty = 0.5;
    int iterations = 0;
    double primal_residual = 0.0;
    std::vector<double> residual_history;
};

struct AdmmResult {
    std::vector<model::DispatchPlan> plans;  // aligned with the member list
    double cost = 0.0;                       // joint grid bill after restoration
    bool converged = false;
    AdmmState state;

    int iterations() const { return state.iterations; }
};

/// Projection of the coalition trades onto the balanced subspace: every
/// agent's target is its own trade minus the coalition mean, so the targets
/// sum to zero at every slot.
std::vector<std::vector<double>> consensus_update(
    const std::vector<std::vector<double>>& trades);

/// Gradient ascent on the consensus multipliers:
/// lambda_i += penalty * (C_i - z_i).
void dual_update(std::vector<std::vector<double>>& dual,
                 const std::vector<std::vector<double>>& trades,
                 const std::vector<std::vector<double>>& consensus, double penalty);

/// Replaces each agent's coalition trade with its consensus target (which is
/// balanced by construction) and recomputes grid trades from the power
/// balance, keeping battery controls fixed.  Throws std::invalid_argument if
/// the targets do not sum to zero per slot within 1e-9.
std::vector<model::DispatchPlan> restore_feasibility(
    const std::vector<model::DispatchPlan>& plans,
    const std::vector<std::vector<double>>& consensus,
    const std::vector<const model::Building*>& members);

/// Cooperative dispatch of a coalition (at least two members) by consensus
/// ADMM.  Each round every agent solves its local QP against the current
/// targets and prices; only trade vectors cross the agent boundary.  The
/// measured residual is max_{i,t} |C_i(t) - z_i(t)| against the targets the
/// local solves used, which controls both the balance violation and the
/// target drift.  Non-convergence is reported through `converged`, never
/// silently.  Returned plans are restored to exact per-slot balance.
AdmmResult admm_solve(const std::vector<const model::Building*>& members,
                      const model::PriceSeries& prices, const AdmmSettings& settings = {},
                      const Deadline* deadline = nullptr);

}  // namespace coaltrade::admm
