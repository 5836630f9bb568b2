// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Node selection: filter nodes by resource, slice, and deadline
// feasibility, then pick the feasible node with minimum predicted
// cumulative energy.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orchsim/energy.hpp"
#include "orchsim/model.hpp"
#include "orchsim/slicing.hpp"

namespace orchsim {

// Outcome of placing one task on one node.
struct PlacementDecision {
    std::string task_id;
    std::string node_id;
    SliceClass slice_class = SliceClass::MMTC;
    double granted_bw = 0.0; // Mbps
    TimingEstimate timing;
    double predicted_energy = 0.0; // joules
    // Derived values carried so downstream scheduling needs no node lookup.
    double predicted_power = 0.0;  // watts (dynamic, profile-based if enabled)
    double transfer_energy = 0.0;  // joules, net_energy_coeff * data_size
    Tier tier = Tier::Local;
};

// Per-node feasibility outcome. predicted_energy is present iff all
// three flags are true.
struct FeasibilityReport {
    std::string node_id;
    bool fits_resources = false;
    bool fits_slice = false;
    bool meets_deadline = false;
    std::optional<double> predicted_energy;
};

// One report per node, in input order. Bandwidth granted to the task is
// min(bandwidth_req, remaining bandwidth of the task's slice, node
// link_bw). fits_slice fails when the request exceeds the slice's
// remaining capacity or when data must move but the grant is zero.
// meets_deadline requires now + t_total <= deadline, and for
// non-delay-tolerant tasks additionally t_net <= latency_req.
// When `profiles` is non-empty it must parallel `nodes` and energy is
// predicted from the profile estimates instead of ground-truth power.
std::vector<FeasibilityReport> feasible_nodes(
    const NanoService& task, std::span<const NodeState> nodes,
    const SliceSet& slices, const SliceThresholds& thresholds, double now,
    std::span<const PowerProfile> profiles = {});

// The feasible node minimizing predicted energy. Deterministic
// tie-break: lower energy, lower t_total, tier order Local < Edge <
// Cloud, lexicographic node id. Throws NoFeasibleNode.
PlacementDecision select_node(const NanoService& task,
                              std::span<const NodeState> nodes,
                              const SliceSet& slices,
                              const SliceThresholds& thresholds, double now,
                              std::span<const PowerProfile> profiles = {});

} // namespace orchsim
