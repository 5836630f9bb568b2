// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/scheduling.hpp"

#include <algorithm>
#include <vector>

#include "placement_internal.hpp"

namespace orchsim {

const char* to_string(Objective objective) {
    switch (objective) {
    case Objective::Energy: return "energy";
    case Objective::Cost: return "cost";
    }
    return "?";
}

double latest_start(const NanoService& task, const TimingEstimate& timing) {
    const double result = task.deadline - timing.t_total;
    if (result < task.arrival) {
        throw Error(ErrorCode::Infeasible,
                    "task '" + task.id + "' cannot finish by its deadline");
    }
    return result;
}

namespace {

// Candidate starts for a deferral decision. Piecewise-constant prices
// make the cost piecewise-linear in the start, so the minimum lies at
// `now`, a slot boundary, or the latest feasible start. Each candidate
// is kept only if start + t_total <= deadline holds in double
// arithmetic, so every plan built from one meets the deadline exactly.
std::vector<double> candidate_starts(const NanoService& task,
                                     const TimingEstimate& timing,
                                     const EnergyPriceForecast& forecast,
                                     double now) {
    std::vector<double> starts;
    starts.push_back(now);
    for (const PriceSlot& slot : forecast.slots) {
        if (slot.start > now && slot.start + timing.t_total <= task.deadline) {
            starts.push_back(slot.start);
        }
    }
    const double last = task.deadline - timing.t_total;
    if (last > now && last + timing.t_total <= task.deadline) {
        starts.push_back(last);
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    return starts;
}

// Predicted cost of deploying at `start`: compute energy integrated over
// the processing interval plus transfer energy priced at the start
// instant.
double cost_of_start(const PlacementDecision& decision,
                     const EnergyPriceForecast& forecast, double start) {
    return execution_cost(forecast, start, decision.timing.t_proc,
                          decision.predicted_power) +
           price_at(forecast, start) * decision.transfer_energy;
}

// Tie-break tail for the cost objective: lower energy, tier order,
// lexicographic node id.
bool cost_tie_order(const PlacementDecision& a, const PlacementDecision& b) {
    if (a.predicted_energy != b.predicted_energy) {
        return a.predicted_energy < b.predicted_energy;
    }
    if (a.tier != b.tier) {
        return a.tier < b.tier;
    }
    return a.node_id < b.node_id;
}

// Clamped variant for reporting under the energy objective, where time
// beyond the forecast carries no defined price.
double cost_of_start_clamped(const PlacementDecision& decision,
                             const EnergyPriceForecast& forecast,
                             double start) {
    double cost = execution_cost_clamped(forecast, start,
                                         decision.timing.t_proc,
                                         decision.predicted_power);
    if (!forecast.slots.empty() && start >= forecast.slots.front().start &&
        start < forecast.horizon_end) {
        cost += price_at(forecast, start) * decision.transfer_energy;
    }
    return cost;
}

} // namespace

double select_start(const NanoService& task, const PlacementDecision& decision,
                    const EnergyPriceForecast& forecast, double now) {
    latest_start(task, decision.timing); // Infeasible when nothing fits
    const auto starts = candidate_starts(task, decision.timing, forecast, now);
    double best_start = starts.front();
    double best_cost = cost_of_start(decision, forecast, starts.front());
    for (std::size_t i = 1; i < starts.size(); ++i) {
        const double cost = cost_of_start(decision, forecast, starts[i]);
        if (cost < best_cost) { // ties keep the earliest start
            best_cost = cost;
            best_start = starts[i];
        }
    }
    return best_start;
}

DeploymentPlan orchestrate(const NanoService& task,
                           std::span<const NodeState> nodes,
                           const SliceSet& slices,
                           const SliceThresholds& thresholds,
                           const EnergyPriceForecast& forecast, double now,
                           Objective objective,
                           std::span<const PowerProfile> profiles) {
    const auto candidates =
        detail::evaluate_nodes(task, nodes, slices, thresholds, now, profiles);

    if (objective == Objective::Energy) {
        const PlacementDecision* best = nullptr;
        for (const auto& cand : candidates) {
            if (cand.decision &&
                (best == nullptr || detail::energy_order(*cand.decision, *best))) {
                best = &*cand.decision;
            }
        }
        if (best == nullptr) {
            throw Error(ErrorCode::NoFeasibleNode,
                        "no node can host task '" + task.id + "'");
        }
        DeploymentPlan plan;
        plan.decision = *best;
        plan.start = now;
        plan.predicted_finish = now + best->timing.t_total;
        plan.predicted_cost = cost_of_start_clamped(*best, forecast, now);
        return plan;
    }

    // Cost objective: per feasible node find its cheapest start, then
    // take the global argmin by (cost, start, energy, tier, id).
    const PlacementDecision* best = nullptr;
    double best_cost = 0.0;
    double best_start = 0.0;
    for (const auto& cand : candidates) {
        if (!cand.decision) {
            continue;
        }
        const PlacementDecision& d = *cand.decision;
        std::vector<double> starts;
        if (task.comm.delay_tolerant) {
            starts = candidate_starts(task, d.timing, forecast, now);
        } else {
            starts.push_back(now);
        }
        double node_start = starts.front();
        double node_cost = cost_of_start(d, forecast, starts.front());
        for (std::size_t i = 1; i < starts.size(); ++i) {
            const double cost = cost_of_start(d, forecast, starts[i]);
            if (cost < node_cost) {
                node_cost = cost;
                node_start = starts[i];
            }
        }
        bool take = best == nullptr;
        if (!take) {
            if (node_cost != best_cost) {
                take = node_cost < best_cost;
            } else if (node_start != best_start) {
                take = node_start < best_start;
            } else {
                take = cost_tie_order(d, *best);
            }
        }
        if (take) {
            best = &d;
            best_cost = node_cost;
            best_start = node_start;
        }
    }
    if (best == nullptr) {
        throw Error(ErrorCode::NoFeasibleNode,
                    "no node can host task '" + task.id + "'");
    }
    DeploymentPlan plan;
    plan.decision = *best;
    plan.start = best_start;
    plan.predicted_finish = best_start + best->timing.t_total;
    plan.predicted_cost = best_cost;
    return plan;
}

} // namespace orchsim
