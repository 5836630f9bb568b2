// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Start-time selection for delay-tolerant tasks under a price forecast,
// and the joint orchestrate entry point combining placement and
// deferral.

#pragma once

#include <span>

#include "orchsim/placement.hpp"

namespace orchsim {

enum class Objective { Energy, Cost };

const char* to_string(Objective objective);

// A committed deployment: where, when, and at what predicted cost.
struct DeploymentPlan {
    PlacementDecision decision;
    double start = 0.0;            // seconds, >= task arrival
    double predicted_finish = 0.0; // start + timing.t_total, <= deadline
    double predicted_cost = 0.0;   // cost-units
};

// Latest start that still meets the deadline: deadline - t_total.
// Throws Infeasible when that precedes the task's arrival.
double latest_start(const NanoService& task, const TimingEstimate& timing);

// Cheapest start for a delay-tolerant task on an already-chosen node.
// Candidates are {now}, the slot boundaries within [now, latest_start],
// and latest_start itself; since the price is piecewise-constant the
// cost is piecewise-linear in start, so the minimum is always at one of
// these. Cost of a candidate = execution_cost over t_proc from that
// start + transfer energy priced at the start instant. Ties go to the
// earliest start. Throws Infeasible / OutOfHorizon.
double select_start(const NanoService& task, const PlacementDecision& decision,
                    const EnergyPriceForecast& forecast, double now);

// Joint decision for one task at time `now`.
//   Energy: minimum-energy node (select_node), start = now.
//   Cost:   over all feasible nodes, the (node, start) pair minimizing
//           predicted cost; ties broken by earlier start, lower energy,
//           tier order, node id.
// Non-delay-tolerant tasks always start at now under either objective.
// Throws NoFeasibleNode / Infeasible / OutOfHorizon.
DeploymentPlan orchestrate(const NanoService& task,
                           std::span<const NodeState> nodes,
                           const SliceSet& slices,
                           const SliceThresholds& thresholds,
                           const EnergyPriceForecast& forecast, double now,
                           Objective objective,
                           std::span<const PowerProfile> profiles = {});

} // namespace orchsim
