// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared node-evaluation core for placement and scheduling. Not part of
// the public API.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orchsim/placement.hpp"

namespace orchsim::detail {

struct NodeCandidate {
    FeasibilityReport report;
    // Present iff all three feasibility flags are true.
    std::optional<PlacementDecision> decision;
};

std::vector<NodeCandidate> evaluate_nodes(
    const NanoService& task, std::span<const NodeState> nodes,
    const SliceSet& slices, const SliceThresholds& thresholds, double now,
    std::span<const PowerProfile> profiles);

// Strict weak order for the energy objective:
// (energy, t_total, tier, node id).
bool energy_order(const PlacementDecision& a, const PlacementDecision& b);

} // namespace orchsim::detail
