// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Domain types for the compute continuum: nodes, tasks, capacity
// accounting and timing estimation. All types are immutable values;
// state-changing operations return new states.

#pragma once

#include <limits>
#include <map>
#include <string>

#include "orchsim/error.hpp"

namespace orchsim {

// Compute tier. The order Local < Edge < Cloud is used only for
// tie-breaking between otherwise equal placement candidates.
enum class Tier { Local, Edge, Cloud };

const char* to_string(Tier tier);

// Resource demand/capacity in four dimensions.
//   cpu     - abstract compute-capacity units (CU)
//   gpu     - GPU units
//   memory  - megabytes
//   storage - megabytes
// Componentwise partial order: a <= b iff every component <=.
struct ResourceVector {
    double cpu = 0.0;
    double gpu = 0.0;
    double memory = 0.0;
    double storage = 0.0;

    bool operator==(const ResourceVector&) const = default;

    ResourceVector operator+(const ResourceVector& other) const {
        return {cpu + other.cpu, gpu + other.gpu, memory + other.memory,
                storage + other.storage};
    }

    ResourceVector operator-(const ResourceVector& other) const {
        return {cpu - other.cpu, gpu - other.gpu, memory - other.memory,
                storage - other.storage};
    }

    // Componentwise <=.
    bool fits_within(const ResourceVector& other) const {
        return cpu <= other.cpu && gpu <= other.gpu &&
               memory <= other.memory && storage <= other.storage;
    }

    bool all_finite_nonnegative() const;
};

// A compute host in one tier.
struct Node {
    std::string id;
    Tier tier = Tier::Local;
    ResourceVector capacity;
    double service_rate = 1.0;   // CU per second, > 0
    double p_idle = 0.0;         // watts
    double p_max = 0.0;          // watts, >= p_idle
    double rtt_to_end = 0.0;     // seconds, propagation RTT to the end device
    double net_energy_coeff = 0.0; // joules per megabit transferred
    // Access-link capacity in Mbps. Caps the bandwidth a slice can grant
    // on this node; unlimited by default.
    double link_bw = std::numeric_limits<double>::infinity();

    bool operator==(const Node&) const = default;
};

// Allocation snapshot of one node. `running` maps task id to the demand
// it holds, so release can return exactly what admit took.
// Invariants: allocated <= node.capacity, allocated == sum of running demands.
struct NodeState {
    Node node;
    ResourceVector allocated;
    std::map<std::string, ResourceVector> running;

    bool operator==(const NodeState&) const = default;
};

// Communication requirement of one task.
struct CommRequirement {
    double latency_req = 1.0;    // seconds, end-to-end bound, > 0
    double bandwidth_req = 0.0;  // Mbps
    bool delay_tolerant = false;

    bool operator==(const CommRequirement&) const = default;
};

// A schedulable task.
struct NanoService {
    std::string id;
    ResourceVector demand;
    double workload = 0.0;   // CU, total compute
    double data_size = 0.0;  // megabits moved end-node -> compute node
    CommRequirement comm;
    double arrival = 0.0;    // seconds, absolute sim time
    double deadline = 0.0;   // seconds, absolute, > arrival

    bool operator==(const NanoService&) const = default;
};

// Timing prediction for one (task, node, bandwidth) combination.
struct TimingEstimate {
    double t_net = 0.0;   // propagation + transfer, seconds
    double t_proc = 0.0;  // compute, seconds
    double t_total = 0.0; // t_net + t_proc

    bool operator==(const TimingEstimate&) const = default;
};

// True iff state.allocated + demand fits the node capacity (inclusive:
// an exact fit admits). Total function.
bool check_fit(const ResourceVector& demand, const NodeState& state);

// Returns a state with the task's demand allocated and its id running.
// Throws CapacityExceeded / DuplicateTask.
NodeState admit(const NanoService& task, const NodeState& state);

// Returns a state with the task's demand released. Throws UnknownTask.
NodeState release(const std::string& task_id, const NodeState& state);

// Predicts network and processing time for a task on a node given the
// granted bandwidth. No contention term: an admitted task runs at the
// node's full service_rate. Throws ZeroBandwidth when data_size > 0 and
// granted_bandwidth == 0.
TimingEstimate estimate_timing(const NanoService& task, const Node& node,
                               double granted_bandwidth);

} // namespace orchsim
