// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Reference optimizer. Everything here is re-derived from the model
// definitions with straight-line code and no pruning, on purpose: it
// shares no decision logic with placement.cpp / scheduling.cpp so the
// two paths can cross-check each other.

#include "orchsim/oracle.hpp"

#include <algorithm>
#include <vector>

namespace orchsim::oracle {

namespace {

// Price of the slot containing t, by linear scan.
double scan_price(const EnergyPriceForecast& forecast, double t) {
    if (forecast.slots.empty() || t < forecast.slots.front().start ||
        t >= forecast.horizon_end) {
        throw Error(ErrorCode::OutOfHorizon, "oracle price lookup outside forecast");
    }
    double price = forecast.slots.front().price;
    for (const PriceSlot& slot : forecast.slots) {
        if (slot.start <= t) {
            price = slot.price;
        }
    }
    return price;
}

// Piecewise integral of power over [start, start + duration).
double scan_cost(const EnergyPriceForecast& forecast, double start,
                 double duration, double power) {
    if (duration == 0.0) {
        return 0.0;
    }
    if (forecast.slots.empty() || start < forecast.slots.front().start ||
        start + duration > forecast.horizon_end) {
        throw Error(ErrorCode::OutOfHorizon, "oracle interval outside forecast");
    }
    const double end = start + duration;
    double cost = 0.0;
    for (std::size_t i = 0; i < forecast.slots.size(); ++i) {
        const double slot_end = i + 1 < forecast.slots.size()
                                    ? forecast.slots[i + 1].start
                                    : forecast.horizon_end;
        const double lo = std::max(start, forecast.slots[i].start);
        const double hi = std::min(end, slot_end);
        if (hi > lo) {
            cost += power * (hi - lo) * forecast.slots[i].price;
        }
    }
    return cost;
}

} // namespace

OracleDecision exhaustive_best(const NanoService& task,
                               std::span<const NodeState> nodes,
                               const SliceSet& slices,
                               const SliceThresholds& thresholds,
                               const EnergyPriceForecast& forecast, double now,
                               Objective objective,
                               std::span<const PowerProfile> profiles) {
    if (nodes.size() > 16 || forecast.slots.size() > 64) {
        throw Error(ErrorCode::InstanceTooLarge,
                    "oracle guard: max 16 nodes and 64 slots");
    }

    SliceClass slice_class = SliceClass::MMTC;
    if (task.comm.latency_req <= thresholds.urllc_latency_max) {
        slice_class = SliceClass::URLLC;
    } else if (task.comm.bandwidth_req >= thresholds.embb_bw_min) {
        slice_class = SliceClass::EMBB;
    }
    const NetworkSlice& slice = slices.at(slice_class);
    const double remaining = slice.capacity_bw - slice.allocated_bw;

    OracleDecision result;
    bool have_best = false;
    double best_energy = 0.0;
    double best_t_total = 0.0;
    Tier best_tier = Tier::Local;
    std::string best_id;

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NodeState& state = nodes[i];
        const Node& node = state.node;

        const ResourceVector after = state.allocated + task.demand;
        const bool fits = after.cpu <= node.capacity.cpu &&
                          after.gpu <= node.capacity.gpu &&
                          after.memory <= node.capacity.memory &&
                          after.storage <= node.capacity.storage;
        if (!fits) {
            continue;
        }

        const double granted =
            std::min({task.comm.bandwidth_req, remaining, node.link_bw});
        if (task.comm.bandwidth_req > remaining) {
            continue;
        }
        if (task.data_size > 0.0 && granted == 0.0) {
            continue;
        }

        const double t_proc = task.workload / node.service_rate;
        const double t_net =
            node.rtt_to_end +
            (task.data_size > 0.0 ? task.data_size / granted : 0.0);
        const double t_total = t_net + t_proc;
        if (now + t_total > task.deadline) {
            continue;
        }
        if (!task.comm.delay_tolerant && t_net > task.comm.latency_req) {
            continue;
        }

        const double share =
            node.capacity.cpu == 0.0 ? 0.0 : task.demand.cpu / node.capacity.cpu;
        const double power =
            i < profiles.size()
                ? (profiles[i].p_max_hat - profiles[i].p_idle_hat) * share
                : (node.p_max - node.p_idle) * share;
        const double transfer_energy = node.net_energy_coeff * task.data_size;
        const double energy = power * t_proc + transfer_energy;

        if (objective == Objective::Energy) {
            ++result.evaluated_count;
            const bool better =
                !have_best || energy < best_energy ||
                (energy == best_energy &&
                 (t_total < best_t_total ||
                  (t_total == best_t_total &&
                   (node.tier < best_tier ||
                    (node.tier == best_tier && node.id < best_id)))));
            if (better) {
                have_best = true;
                result.best_node_id = node.id;
                result.best_start = now;
                result.best_value = energy;
                best_energy = energy;
                best_t_total = t_total;
                best_tier = node.tier;
                best_id = node.id;
            }
            continue;
        }

        std::vector<double> starts;
        starts.push_back(now);
        if (task.comm.delay_tolerant) {
            for (const PriceSlot& slot : forecast.slots) {
                if (slot.start > now && slot.start + t_total <= task.deadline) {
                    starts.push_back(slot.start);
                }
            }
            const double last = task.deadline - t_total;
            if (last > now && last + t_total <= task.deadline) {
                starts.push_back(last);
            }
            std::sort(starts.begin(), starts.end());
            starts.erase(std::unique(starts.begin(), starts.end()),
                         starts.end());
        }

        for (double start : starts) {
            ++result.evaluated_count;
            const double cost = scan_cost(forecast, start, t_proc, power) +
                                scan_price(forecast, start) * transfer_energy;
            const bool better =
                !have_best || cost < result.best_value ||
                (cost == result.best_value &&
                 (start < result.best_start ||
                  (start == result.best_start &&
                   (energy < best_energy ||
                    (energy == best_energy &&
                     (node.tier < best_tier ||
                      (node.tier == best_tier && node.id < best_id)))))));
            if (better) {
                have_best = true;
                result.best_node_id = node.id;
                result.best_start = start;
                result.best_value = cost;
                best_energy = energy;
                best_t_total = t_total;
                best_tier = node.tier;
                best_id = node.id;
            }
        }
    }
    return result;
}

bool compare(const std::optional<DeploymentPlan>& plan,
             const OracleDecision& decision, Objective objective) {
    if (!plan.has_value()) {
        return !decision.best_node_id.has_value();
    }
    if (!decision.best_node_id.has_value()) {
        return false;
    }
    const double plan_value = objective == Objective::Energy
                                  ? plan->decision.predicted_energy
                                  : plan->predicted_cost;
    return *decision.best_node_id == plan->decision.node_id &&
           decision.best_start == plan->start &&
           decision.best_value == plan_value;
}

} // namespace orchsim::oracle
