// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/model.hpp"

#include <cmath>

namespace orchsim {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::DuplicateTask: return "DuplicateTask";
    case ErrorCode::UnknownTask: return "UnknownTask";
    case ErrorCode::ZeroBandwidth: return "ZeroBandwidth";
    case ErrorCode::OutOfHorizon: return "OutOfHorizon";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::SliceSaturated: return "SliceSaturated";
    case ErrorCode::Underflow: return "Underflow";
    case ErrorCode::NoFeasibleNode: return "NoFeasibleNode";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantError: return "InvariantError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
    }
    return "UnknownError";
}

const char* to_string(Tier tier) {
    switch (tier) {
    case Tier::Local: return "local";
    case Tier::Edge: return "edge";
    case Tier::Cloud: return "cloud";
    }
    return "?";
}

bool ResourceVector::all_finite_nonnegative() const {
    for (double v : {cpu, gpu, memory, storage}) {
        if (!std::isfinite(v) || v < 0.0) {
            return false;
        }
    }
    return true;
}

bool check_fit(const ResourceVector& demand, const NodeState& state) {
    return (state.allocated + demand).fits_within(state.node.capacity);
}

NodeState admit(const NanoService& task, const NodeState& state) {
    if (state.running.count(task.id) != 0) {
        throw Error(ErrorCode::DuplicateTask,
                    "task '" + task.id + "' already running on node '" +
                        state.node.id + "'");
    }
    if (!check_fit(task.demand, state)) {
        throw Error(ErrorCode::CapacityExceeded,
                    "task '" + task.id + "' does not fit on node '" +
                        state.node.id + "'");
    }
    NodeState next = state;
    next.allocated = state.allocated + task.demand;
    next.running.emplace(task.id, task.demand);
    return next;
}

NodeState release(const std::string& task_id, const NodeState& state) {
    auto it = state.running.find(task_id);
    if (it == state.running.end()) {
        throw Error(ErrorCode::UnknownTask,
                    "task '" + task_id + "' not running on node '" +
                        state.node.id + "'");
    }
    NodeState next = state;
    next.allocated = state.allocated - it->second;
    next.running.erase(task_id);
    return next;
}

TimingEstimate estimate_timing(const NanoService& task, const Node& node,
                               double granted_bandwidth) {
    if (task.data_size > 0.0 && granted_bandwidth == 0.0) {
        throw Error(ErrorCode::ZeroBandwidth,
                    "task '" + task.id + "' has data to move but zero bandwidth");
    }
    TimingEstimate timing;
    timing.t_proc = task.workload / node.service_rate;
    timing.t_net = node.rtt_to_end +
                   (task.data_size > 0.0 ? task.data_size / granted_bandwidth : 0.0);
    timing.t_total = timing.t_net + timing.t_proc;
    return timing;
}

} // namespace orchsim
