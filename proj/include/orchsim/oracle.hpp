// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive reference optimizer over (node, candidate-start) pairs for
// small instances. Implemented as straight-line enumeration, independent
// of the placement/scheduling code paths, so it can cross-check them.

#pragma once

#include <optional>
#include <span>
#include <string>

#include "orchsim/scheduling.hpp"

namespace orchsim::oracle {

struct OracleDecision {
    std::optional<std::string> best_node_id; // empty when nothing feasible
    double best_start = 0.0;
    // Minimum over all feasible pairs: joules under Energy, cost-units
    // under Cost.
    double best_value = 0.0;
    int evaluated_count = 0;
};

// Enumerates every node x every candidate start, applies the same
// feasibility predicates and tie-break order as orchestrate, and returns
// the exact argmin. Guarded to |nodes| <= 16 and |slots| <= 64; throws
// InstanceTooLarge beyond that. Infeasibility is encoded as an empty
// best_node_id, not an error.
OracleDecision exhaustive_best(const NanoService& task,
                               std::span<const NodeState> nodes,
                               const SliceSet& slices,
                               const SliceThresholds& thresholds,
                               const EnergyPriceForecast& forecast, double now,
                               Objective objective,
                               std::span<const PowerProfile> profiles = {});

// True iff the plan and the oracle agree exactly: same objective value,
// same node, same start - or both report infeasible (plan == nullopt).
bool compare(const std::optional<DeploymentPlan>& plan,
             const OracleDecision& decision, Objective objective);

} // namespace orchsim::oracle
