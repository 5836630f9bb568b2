// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/placement.hpp"

#include <algorithm>

#include "placement_internal.hpp"

namespace orchsim {

namespace detail {

std::vector<NodeCandidate> evaluate_nodes(
    const NanoService& task, std::span<const NodeState> nodes,
    const SliceSet& slices, const SliceThresholds& thresholds, double now,
    std::span<const PowerProfile> profiles) {
    const SliceClass slice_class = classify_slice(task.comm, thresholds);
    const NetworkSlice& slice = slices.at(slice_class);
    const double remaining = slice.remaining_bw();

    std::vector<NodeCandidate> out;
    out.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NodeState& state = nodes[i];
        const Node& node = state.node;
        NodeCandidate cand;
        cand.report.node_id = node.id;
        cand.report.fits_resources = check_fit(task.demand, state);

        const double granted =
            std::min({task.comm.bandwidth_req, remaining, node.link_bw});
        const bool transfer_possible = !(task.data_size > 0.0 && granted == 0.0);
        cand.report.fits_slice =
            transfer_possible && task.comm.bandwidth_req <= remaining;

        TimingEstimate timing;
        if (transfer_possible) {
            timing = estimate_timing(task, node, granted);
            cand.report.meets_deadline =
                now + timing.t_total <= task.deadline &&
                (task.comm.delay_tolerant ||
                 timing.t_net <= task.comm.latency_req);
        } else {
            // No usable bandwidth: transfer time is unbounded.
            cand.report.meets_deadline = false;
        }

        if (cand.report.fits_resources && cand.report.fits_slice &&
            cand.report.meets_deadline) {
            const double share = node.capacity.cpu == 0.0
                                     ? 0.0
                                     : task.demand.cpu / node.capacity.cpu;
            const double power =
                i < profiles.size()
                    ? dynamic_power(profiles[i].p_idle_hat,
                                    profiles[i].p_max_hat, share)
                    : dynamic_power(node.p_idle, node.p_max, share);
            PlacementDecision d;
            d.task_id = task.id;
            d.node_id = node.id;
            d.slice_class = slice_class;
            d.granted_bw = granted;
            d.timing = timing;
            d.predicted_power = power;
            d.transfer_energy = node.net_energy_coeff * task.data_size;
            d.predicted_energy = power * timing.t_proc + d.transfer_energy;
            d.tier = node.tier;
            cand.report.predicted_energy = d.predicted_energy;
            cand.decision = std::move(d);
        }
        out.push_back(std::move(cand));
    }
    return out;
}

bool energy_order(const PlacementDecision& a, const PlacementDecision& b) {
    if (a.predicted_energy != b.predicted_energy) {
        return a.predicted_energy < b.predicted_energy;
    }
    if (a.timing.t_total != b.timing.t_total) {
        return a.timing.t_total < b.timing.t_total;
    }
    if (a.tier != b.tier) {
        return a.tier < b.tier;
    }
    return a.node_id < b.node_id;
}

} // namespace detail

std::vector<FeasibilityReport> feasible_nodes(
    const NanoService& task, std::span<const NodeState> nodes,
    const SliceSet& slices, const SliceThresholds& thresholds, double now,
    std::span<const PowerProfile> profiles) {
    std::vector<FeasibilityReport> reports;
    reports.reserve(nodes.size());
    for (auto& cand :
         detail::evaluate_nodes(task, nodes, slices, thresholds, now, profiles)) {
        reports.push_back(std::move(cand.report));
    }
    return reports;
}

PlacementDecision select_node(const NanoService& task,
                              std::span<const NodeState> nodes,
                              const SliceSet& slices,
                              const SliceThresholds& thresholds, double now,
                              std::span<const PowerProfile> profiles) {
    const auto candidates =
        detail::evaluate_nodes(task, nodes, slices, thresholds, now, profiles);
    const PlacementDecision* best = nullptr;
    for (const auto& cand : candidates) {
        if (!cand.decision) {
            continue;
        }
        if (best == nullptr || detail::energy_order(*cand.decision, *best)) {
            best = &*cand.decision;
        }
    }
    if (best == nullptr) {
        throw Error(ErrorCode::NoFeasibleNode,
                    "no node can host task '" + task.id + "'");
    }
    return *best;
}

} // namespace orchsim
