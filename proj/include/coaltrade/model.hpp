#pragma once

#include <string>
#include <vector>

namespace coaltrade::model {

/// Discrete planning horizon: T slots of fixed duration (15 minutes covers a
/// day in 96 slots, but any positive count is accepted).
struct Horizon {
    int slots = 0;
    double slot_minutes = 15.0;
};

/// Battery and connection limits of a single building.
///
/// Charge/discharge efficiencies are in (0,1); rates and capacities are in
/// kWh per slot resp. kWh.  All energies are slot-integrated, so no separate
/// power/energy conversion appears anywhere.
struct BuildingParams {
    double charge_efficiency = 0.9;     // fraction of drawn energy stored
    double discharge_efficiency = 0.9;  // fraction of drained energy delivered
    double max_charge_rate = 0.0;       // bound on both charge and discharge, kWh/slot
    double soc_max = 0.0;               // usable capacity, kWh
    double soc_init = 0.0;              // state of charge before the first slot, kWh

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// Metered demand and on-site generation per slot, kWh.  Values are
/// non-negative; net load may have either sign.
struct BuildingSeries {
    std::vector<double> demand;
    std::vector<double> generation;

    int slots() const { return static_cast<int>(demand.size()); }
    void validate() const;
};

/// Per-slot retail prices.  Buying is always strictly dearer than selling
/// (buy > sell > 0), which rules out trivial same-slot grid arbitrage.
struct PriceSeries {
    std::vector<double> buy;
    std::vector<double> sell;

    int slots() const { return static_cast<int>(buy.size()); }
    double spread(int t) const { return buy[t] - sell[t]; }
    void validate() const;
};

/// One building's dispatch over a horizon: grid trades, coalition trades,
/// battery controls, and the induced state-of-charge trajectory.
///
/// Trades are split into non-negative buy/sell pairs; net trade is the
/// difference.  soc has length T+1 with soc[0] the initial state, so the
/// whole trajectory is explicit rather than recomputed by callers.
struct DispatchPlan {
    std::vector<double> grid_buy;
    std::vector<double> grid_sell;
    std::vector<double> coal_buy;
    std::vector<double> coal_sell;
    std::vector<double> charge;
    std::vector<double> discharge;
    std::vector<double> soc;

    int slots() const { return static_cast<int>(grid_buy.size()); }
    double grid_net(int t) const { return grid_buy[t] - grid_sell[t]; }
    double coal_net(int t) const { return coal_buy[t] - coal_sell[t]; }

    /// All-zero plan holding the battery at soc_init for T slots.
    static DispatchPlan idle(int slots, double soc_init);
};

/// A building with its identity, parameters and metered series.
struct Building {
    std::string id;
    BuildingParams params;
    BuildingSeries series;
};

/// Result of a feasibility check.  When feasible is false, `constraint`
/// describes the first violated constraint and `slot` locates it (-1 for
/// structural problems that are not slot-specific).
struct FeasibilityReport {
    bool feasible = true;
    std::string constraint;
    int slot = -1;
    double error = 0.0;
};

/// Battery state transition for one slot: the battery stores a fraction
/// rho_c of the charged energy and drains 1/rho_d per unit delivered.
double soc_step(double soc, const BuildingParams& params, double charge, double discharge);

/// Grid energy bill of one plan over the whole horizon.  Coalition trades
/// are internal and free; only grid buys and sells are priced.
/// Throws std::invalid_argument on horizon mismatch.
double horizon_cost(const DispatchPlan& plan, const PriceSeries& prices);

/// Combined grid cost of a set of plans at a single slot (the realized stage
/// cost of a coalition).  Throws std::out_of_range when t is not a valid slot.
double realized_stage_cost(const std::vector<DispatchPlan>& plans, const PriceSeries& prices,
                           int t);

/// Verifies a plan against the building model within `tolerance` kWh:
/// non-negative trades, control bounds, power balance, SoC recursion and SoC
/// bounds.  Simultaneous charge and discharge is permitted (it is feasible,
/// merely wasteful).  Checks run slot by slot and report the first failure.
FeasibilityReport check_feasible(const DispatchPlan& plan, const BuildingParams& params,
                                 const BuildingSeries& series, double tolerance = 1e-6);

}  // namespace coaltrade::model
