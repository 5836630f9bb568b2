// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic discrete-event simulator: arrivals -> orchestration ->
// transfer -> execution -> release, with energy/cost/QoS accounting.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orchsim/oracle.hpp"
#include "orchsim/scenario.hpp"
#include "orchsim/scheduling.hpp"

namespace orchsim {

enum class EventKind { TaskArrival, TransferComplete, TaskComplete, DeferredStart };

// Events are processed in (time, seq) lexicographic order; seq is the
// insertion sequence, so ties never depend on memory identity.
struct Event {
    double time = 0.0;
    std::uint64_t seq = 0;
    EventKind kind = EventKind::TaskArrival;
    std::string task_id;
};

// Per-task outcome. Rejected tasks keep an empty node_id and zeroed
// timing/energy/cost fields.
struct TaskRecord {
    std::string task_id;
    std::string node_id;
    SliceClass slice_class = SliceClass::MMTC;
    double start = 0.0;
    double finish = 0.0;
    double energy_j = 0.0;        // ground-truth energy actually drawn
    double cost_units = 0.0;      // ground-truth monetary cost
    bool deadline_met = false;
    bool rejected = false;
    double predicted_energy_j = 0.0; // profile-based prediction frozen at decision time
};

struct NodeUsage {
    std::string node_id;
    double busy_seconds = 0.0; // union of intervals with >= 1 running task
    double utilization = 0.0;  // busy_seconds / horizon
};

struct SliceUsage {
    SliceClass slice_class = SliceClass::MMTC;
    double peak_bw = 0.0; // Mbps, maximum concurrent allocation
};

// One row per orchestration decision when the oracle cross-check is on.
struct OracleRow {
    std::string task_id;
    bool match = false;
    std::string plan_node;   // empty = rejected
    double plan_start = 0.0;
    double plan_value = 0.0;
    std::string oracle_node; // empty = infeasible
    double oracle_start = 0.0;
    double oracle_value = 0.0;
};

struct SimulationReport {
    std::vector<TaskRecord> tasks; // scenario task order
    double total_task_energy_j = 0.0;
    double total_predicted_energy_j = 0.0;
    double total_idle_energy_j = 0.0;
    double total_cost_units = 0.0;
    int deadline_miss_count = 0; // deadline_met == false among non-rejected
    int rejection_count = 0;
    double horizon = 0.0;
    std::vector<NodeUsage> node_usage;   // scenario node order
    std::vector<SliceUsage> slice_usage; // URLLC, EMBB, MMTC
    std::vector<OracleRow> oracle_rows;  // empty unless with_oracle
};

struct RunOptions {
    // Verify capacity and slice invariants after every event; violations
    // throw. Intended for tests.
    bool audit = false;
    // Cross-check every orchestration decision against the exhaustive
    // oracle on the residual state.
    bool with_oracle = false;
};

// Runs the scenario to completion. Identical (scenario, seed, objective)
// inputs yield identical reports. Seeded randomness affects only the
// optional power-observation noise. Throws InvalidScenario on a bad
// scenario and HorizonExceeded when a Cost-objective plan does not fit
// the forecast horizon.
SimulationReport run(const Scenario& scenario, std::uint64_t seed,
                     Objective objective, const RunOptions& options = {});

// One power measurement taken at a task completion.
struct PowerObservation {
    std::string node_id;
    double observed_p_max = 0.0; // watts
};

// Applies update_profile once per observation, in order. Observations
// for unknown node ids are ignored.
std::vector<PowerProfile> observe_and_update(
    std::span<const PowerObservation> observations,
    std::vector<PowerProfile> profiles, double alpha);

} // namespace orchsim
