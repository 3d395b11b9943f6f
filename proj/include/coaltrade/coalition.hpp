#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coaltrade/admm.hpp"
#include "coaltrade/deadline.hpp"
#include "coaltrade/model.hpp"

namespace coaltrade::coalition {

/// Net grid trade of a coalition, one entry per slot (positive buys).
struct AggregateTrade {
    std::vector<double> net;

    int slots() const { return static_cast<int>(net.size()); }
};

/// Everything a coalition discloses to the coordinator under limited
/// information: its stand-alone cost and its aggregate grid trade.  Member
/// demand, generation and battery state never leave the coalition.
struct CoalitionSummary {
    double value = 0.0;
    AggregateTrade trade;
};

/// A candidate pairwise merge between two coalitions of the current
/// structure, scored by the evaluator (higher is better).
struct MergeCandidate {
    int left = 0;
    int right = 0;
    double value = 0.0;
};

/// A partition of the fleet into coalitions with their values.  Members are
/// building indices; each coalition is sorted ascending and coalitions are
/// ordered by smallest member.
struct CoalitionStructure {
    std::vector<std::vector<int>> members;
    std::vector<double> values;

    /// Throws std::invalid_argument unless the coalitions partition
    /// {0..fleet_size-1} exactly.
    void validate(int fleet_size) const;
};

/// Sum of the stored coalition values.
double structure_value(const CoalitionStructure& structure);

/// Sum of the members' net grid trades per slot.
AggregateTrade aggregate_trade(const std::vector<model::DispatchPlan>& plans);

/// Value of trading opportunities visible from aggregates alone: at every
/// slot where the two coalitions trade in opposite directions, the
/// overlapping volume can move off the grid, saving the buy/sell spread.
double merge_gain(const AggregateTrade& left, const AggregateTrade& right,
                  const model::PriceSeries& prices);

/// Upper bound on the merged coalition's cost: both sides keep their plans
/// and only the overlapping opposite-direction volume is settled internally.
double limited_info_upper_bound(double left_value, double right_value, double gain);

struct MergedPlans {
    std::vector<model::DispatchPlan> plans;  // left side then right side
    double cost = 0.0;
};

/// Constructive proof that the upper bound is achievable: shifts the
/// overlapping volume from grid trades to coalition trades, pro rata over
/// the members trading in the aggregate direction, leaving batteries and
/// balances untouched.  The returned cost equals the bound exactly (up to
/// floating-point accumulation).  Inputs must be decentralised-style plans
/// (no pre-existing coalition trades).
MergedPlans construct_feasible_merge(const std::vector<model::DispatchPlan>& left,
                                     const std::vector<model::DispatchPlan>& right,
                                     const model::PriceSeries& prices);

struct CoalitionSolution {
    double value = 0.0;
    std::vector<model::DispatchPlan> plans;  // aligned with the sorted member list
    bool converged = true;
};

/// Memoized coalition dispatch: singletons solve their decentralised LP,
/// larger coalitions run consensus ADMM.  One cache instance accumulates the
/// ADMM iteration count across all solves it performs.
class CoalitionValueCache {
public:
    CoalitionValueCache(const std::vector<model::Building>& fleet,
                        const model::PriceSeries& prices, const admm::AdmmSettings& settings,
                        const Deadline* deadline = nullptr);

    const CoalitionSolution& value(const std::vector<int>& members);

    int fleet_size() const { return static_cast<int>(fleet_.size()); }
    const Deadline* deadline() const { return deadline_; }
    long admm_iterations() const { return admm_iterations_; }
    bool all_converged() const { return all_converged_; }

private:
    const std::vector<model::Building>& fleet_;
    const model::PriceSeries& prices_;
    const admm::AdmmSettings& settings_;
    const Deadline* deadline_;
    std::map<std::vector<int>, CoalitionSolution> memo_;
    long admm_iterations_ = 0;
    bool all_converged_ = true;
};

/// Scores a candidate merge; larger is better and only strictly positive
/// scores (above the acceptance threshold) are merged.
class MergeEvaluator {
public:
    virtual ~MergeEvaluator() = default;
    virtual double merge_value(const std::vector<int>& left_members,
                               const std::vector<int>& right_members,
                               const CoalitionSummary& left, const CoalitionSummary& right) = 0;
};

/// Scores merges from coalition summaries alone.  The class holds only the
/// price series, so no private building data can influence the score.
class LimitedInfoEvaluator final : public MergeEvaluator {
public:
    explicit LimitedInfoEvaluator(const model::PriceSeries& prices) : prices_(prices) {}

    double merge_value(const std::vector<int>&, const std::vector<int>&,
                       const CoalitionSummary& left, const CoalitionSummary& right) override {
        return merge_gain(left.trade, right.trade, prices_);
    }

private:
    const model::PriceSeries& prices_;
};

/// Scores merges by actually solving the merged coalition:
/// value = V(left) + V(right) - V(left u right), at the same ADMM tolerance
/// as everything else.  Solves are shared with the formation loop through
/// the common cache.
class FullInfoEvaluator final : public MergeEvaluator {
public:
    explicit FullInfoEvaluator(CoalitionValueCache& cache) : cache_(cache) {}

    double merge_value(const std::vector<int>& left_members,
                       const std::vector<int>& right_members, const CoalitionSummary& left,
                       const CoalitionSummary& right) override;

private:
    CoalitionValueCache& cache_;
};

struct FormationOptions {
    int max_coalition_size = 4;
    double merge_threshold = 1e-9;  // accepted merges need value strictly above this
};

struct FormationResult {
    CoalitionStructure structure;
    std::vector<std::vector<model::DispatchPlan>> plans;  // per coalition
    long admm_iterations = 0;
    int rounds = 0;        // loop executions, including the final fixed-point round
    int merge_rounds = 0;  // rounds that accepted at least one merge
    int merges = 0;
    bool all_converged = true;
};

/// Bottom-up pairwise formation: every round solves each current coalition,
/// scores all size-feasible pairs with the evaluator, greedily accepts
/// disjoint candidates in descending score order (ties resolved toward the
/// earlier pair), and repeats until the structure stops changing.  The
/// number of merging rounds is at most N - ceil(N / max_coalition_size).
/// All coalition solves go through `cache`, so an evaluator holding the same
/// cache shares them and the cache's iteration count covers the whole run.
FormationResult bottom_up_form(CoalitionValueCache& cache, MergeEvaluator& evaluator,
                               const FormationOptions& options);

/// Convenience wrapper running on a throwaway cache.
FormationResult bottom_up_form(const std::vector<model::Building>& fleet,
                               const model::PriceSeries& prices, MergeEvaluator& evaluator,
                               const FormationOptions& options,
                               const admm::AdmmSettings& admm_settings,
                               const Deadline* deadline = nullptr);

struct OptimalOptions {
    int max_coalition_size = 4;
    std::uint64_t max_partitions = 200000;  // enumeration budget
};

/// Exhaustive search over all partitions with blocks of at most
/// max_coalition_size.  Ties break toward fewer coalitions, then toward the
/// lexicographically smaller structure.  Throws BudgetExceededError when the
/// number of partitions exceeds the budget.
FormationResult optimal_partition(CoalitionValueCache& cache, const OptimalOptions& options);

/// Convenience wrapper running on a throwaway cache.
FormationResult optimal_partition(const std::vector<model::Building>& fleet,
                                  const model::PriceSeries& prices, const OptimalOptions& options,
                                  const admm::AdmmSettings& admm_settings,
                                  const Deadline* deadline = nullptr);

}  // namespace coaltrade::coalition
