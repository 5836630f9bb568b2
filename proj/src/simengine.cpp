// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/simengine.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <random>
#include <unordered_map>
#include <vector>

#include "orchsim/log.hpp"

namespace orchsim {

namespace {

struct EventOrder {
    // Min-heap on (time, seq).
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time) {
            return a.time > b.time;
        }
        return a.seq > b.seq;
    }
};

// Clamped ground-truth cost of one execution: compute energy priced over
// the in-horizon part of the processing interval, transfer energy priced
// at the start instant when it is covered.
double recorded_cost(const EnergyPriceForecast& forecast, double start,
                     double t_proc, double power, double transfer_energy) {
    double cost = execution_cost_clamped(forecast, start, t_proc, power);
    if (!forecast.slots.empty() && start >= forecast.slots.front().start &&
        start < forecast.horizon_end) {
        cost += price_at(forecast, start) * transfer_energy;
    }
    return cost;
}

class Engine {
public:
    Engine(const Scenario& scenario, std::uint64_t seed, Objective objective,
           const RunOptions& options)
        : scenario_(scenario), objective_(objective), options_(options),
          rng_(seed) {}

    SimulationReport run() {
        init();
        while (!queue_.empty()) {
            Event event = queue_.top();
            queue_.pop();
            dispatch(event);
            if (options_.audit) {
                verify_invariants(event);
            }
        }
        return finalize();
    }

private:
    void init() {
        states_.reserve(scenario_.nodes.size());
        profiles_.reserve(scenario_.nodes.size());
        for (const Node& node : scenario_.nodes) {
            states_.push_back(NodeState{node, {}, {}});
            profiles_.push_back(PowerProfile{node.id, node.p_idle, node.p_max});
            node_index_[node.id] = states_.size() - 1;
        }
        slices_ = scenario_.slices;
        records_.resize(scenario_.tasks.size());
        busy_since_.assign(scenario_.nodes.size(), 0.0);
        busy_seconds_.assign(scenario_.nodes.size(), 0.0);
        running_count_.assign(scenario_.nodes.size(), 0);
        for (auto& usage : peak_bw_) {
            usage = 0.0;
        }
        for (std::size_t i = 0; i < scenario_.tasks.size(); ++i) {
            task_index_[scenario_.tasks[i].id] = i;
            push_event(scenario_.tasks[i].arrival, EventKind::TaskArrival,
                       scenario_.tasks[i].id);
        }
    }

    void push_event(double time, EventKind kind, const std::string& task_id) {
        queue_.push(Event{time, next_seq_++, kind, task_id});
    }

    void dispatch(const Event& event) {
        switch (event.kind) {
        case EventKind::TaskArrival: on_arrival(event); break;
        case EventKind::DeferredStart: on_deferred_start(event); break;
        case EventKind::TransferComplete: on_transfer_complete(event); break;
        case EventKind::TaskComplete: on_complete(event); break;
        }
    }

    void on_arrival(const Event& event) {
        const NanoService& task = task_of(event);
        std::optional<DeploymentPlan> plan;
        try {
            plan = orchestrate(task, states_, slices_, scenario_.thresholds,
                               scenario_.forecast, event.time, objective_,
                               profiles_);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NoFeasibleNode ||
                e.code() == ErrorCode::Infeasible) {
                if (options_.with_oracle) {
                    record_oracle_row(task, event.time, std::nullopt);
                }
                reject(task, e.what());
                return;
            }
            if (e.code() == ErrorCode::OutOfHorizon) {
                throw Error(ErrorCode::HorizonExceeded,
                            "task '" + task.id +
                                "' cannot be priced inside the forecast horizon");
            }
            throw;
        }
        if (objective_ == Objective::Cost &&
            plan->predicted_finish > scenario_.forecast.horizon_end) {
            throw Error(ErrorCode::HorizonExceeded,
                        "task '" + task.id + "' finishes at " +
                            std::to_string(plan->predicted_finish) +
                            ", beyond the forecast horizon");
        }
        if (options_.with_oracle) {
            record_oracle_row(task, event.time, plan);
        }
        if (log_enabled(LogLevel::Debug)) {
            log(LogLevel::Debug,
                "task '" + task.id + "' -> node '" + plan->decision.node_id +
                    "', start " + std::to_string(plan->start) + ", finish " +
                    std::to_string(plan->predicted_finish));
        }
        committed_[task.id] = *plan;
        if (plan->start > event.time) {
            push_event(plan->start, EventKind::DeferredStart, task.id);
        } else {
            begin_deployment(task, *plan);
        }
    }

    void on_deferred_start(const Event& event) {
        const NanoService& task = task_of(event);
        const DeploymentPlan& plan = committed_.at(task.id);
        const std::size_t node = node_index_.at(plan.decision.node_id);
        NetworkSlice& slice = slices_.at(plan.decision.slice_class);
        // The decision was made against the state at arrival time; tasks
        // placed meanwhile may have taken the room. Nothing is reserved
        // across the deferral window, so a conflicting start is a
        // rejection, not a violation.
        const bool fits = check_fit(task.demand, states_[node]);
        const bool slice_ok =
            slice.allocated_bw + plan.decision.granted_bw <= slice.capacity_bw;
        if (!fits || !slice_ok) {
            log(LogLevel::Warn, "deferred start of task '" + task.id +
                                    "' no longer fits node '" +
                                    plan.decision.node_id + "'; rejecting");
            committed_.erase(task.id);
            reject(task, "deferred start conflict");
            return;
        }
        begin_deployment(task, plan);
    }

    void begin_deployment(const NanoService& task, const DeploymentPlan& plan) {
        const std::size_t node = node_index_.at(plan.decision.node_id);
        states_[node] = admit(task, states_[node]);
        NetworkSlice& slice = slices_.at(plan.decision.slice_class);
        slice = admit_bandwidth(slice, plan.decision.granted_bw);
        auto& peak = peak_bw_[static_cast<int>(plan.decision.slice_class)];
        peak = std::max(peak, slice.allocated_bw);
        if (running_count_[node]++ == 0) {
            busy_since_[node] = plan.start;
        }
        push_event(plan.start + plan.decision.timing.t_net,
                   EventKind::TransferComplete, task.id);
    }

    void on_transfer_complete(const Event& event) {
        const DeploymentPlan& plan = committed_.at(event.task_id);
        push_event(plan.predicted_finish, EventKind::TaskComplete,
                   event.task_id);
    }

    void on_complete(const Event& event) {
        const NanoService& task = task_of(event);
        const DeploymentPlan& plan = committed_.at(task.id);
        const std::size_t node = node_index_.at(plan.decision.node_id);
        const Node& ground_truth = states_[node].node;

        states_[node] = release(task.id, states_[node]);
        NetworkSlice& slice = slices_.at(plan.decision.slice_class);
        slice = release_bandwidth(slice, plan.decision.granted_bw);
        if (--running_count_[node] == 0) {
            busy_seconds_[node] += event.time - busy_since_[node];
        }

        TaskRecord& record = records_[task_index_.at(task.id)];
        record.task_id = task.id;
        record.node_id = plan.decision.node_id;
        record.slice_class = plan.decision.slice_class;
        record.start = plan.start;
        record.finish = event.time;
        record.energy_j = task_energy(task, ground_truth, plan.decision.timing);
        record.cost_units = recorded_cost(
            scenario_.forecast, plan.start, plan.decision.timing.t_proc,
            task_power(task, ground_truth),
            ground_truth.net_energy_coeff * task.data_size);
        record.deadline_met = event.time <= task.deadline;
        record.rejected = false;
        record.predicted_energy_j = plan.decision.predicted_energy;

        observe_power(node);
        committed_.erase(task.id);
    }

    // At completion the orchestrator measures the node's power envelope
    // and feeds the EMA estimate. Noise, when configured, perturbs the
    // measurement by a seeded uniform factor.
    void observe_power(std::size_t node) {
        double observed = states_[node].node.p_max;
        if (scenario_.observation_noise > 0.0) {
            std::uniform_real_distribution<double> jitter(-1.0, 1.0);
            observed *= 1.0 + scenario_.observation_noise * jitter(rng_);
        }
        observed = std::max(observed, profiles_[node].p_idle_hat);
        profiles_[node] =
            update_profile(profiles_[node], observed, scenario_.profile_alpha);
    }

    void record_oracle_row(const NanoService& task, double now,
                           const std::optional<DeploymentPlan>& plan) {
        const auto decision = oracle::exhaustive_best(
            task, states_, slices_, scenario_.thresholds, scenario_.forecast,
            now, objective_, profiles_);
        OracleRow row;
        row.task_id = task.id;
        row.match = oracle::compare(plan, decision, objective_);
        if (plan) {
            row.plan_node = plan->decision.node_id;
            row.plan_start = plan->start;
            row.plan_value = objective_ == Objective::Energy
                                 ? plan->decision.predicted_energy
                                 : plan->predicted_cost;
        }
        if (decision.best_node_id) {
            row.oracle_node = *decision.best_node_id;
            row.oracle_start = decision.best_start;
            row.oracle_value = decision.best_value;
        }
        oracle_rows_.push_back(std::move(row));
    }

    void reject(const NanoService& task, const std::string& reason) {
        log(LogLevel::Info, "task '" + task.id + "' rejected: " + reason);
        TaskRecord& record = records_[task_index_.at(task.id)];
        record.task_id = task.id;
        record.slice_class = classify_slice(task.comm, scenario_.thresholds);
        record.rejected = true;
        record.deadline_met = false;
    }

    const NanoService& task_of(const Event& event) const {
        return scenario_.tasks[task_index_.at(event.task_id)];
    }

    void verify_invariants(const Event& event) const {
        for (const NodeState& state : states_) {
            ResourceVector sum;
            for (const auto& [id, demand] : state.running) {
                sum = sum + demand;
            }
            if (!(sum == state.allocated) ||
                !state.allocated.fits_within(state.node.capacity)) {
                throw std::logic_error("capacity invariant violated on node '" +
                                       state.node.id + "' at t=" +
                                       std::to_string(event.time));
            }
        }
        for (const NetworkSlice& slice : slices_.slices) {
            if (slice.allocated_bw < 0.0 ||
                slice.allocated_bw > slice.capacity_bw) {
                throw std::logic_error(
                    std::string("slice invariant violated on ") +
                    to_string(slice.slice_class) + " at t=" +
                    std::to_string(event.time));
            }
        }
    }

    SimulationReport finalize() {
        SimulationReport report;
        report.horizon = scenario_.forecast.horizon_end;
        report.tasks = std::move(records_);
        for (const TaskRecord& record : report.tasks) {
            if (record.rejected) {
                ++report.rejection_count;
                continue;
            }
            report.total_task_energy_j += record.energy_j;
            report.total_predicted_energy_j += record.predicted_energy_j;
            report.total_cost_units += record.cost_units;
            if (!record.deadline_met) {
                ++report.deadline_miss_count;
            }
        }
        for (std::size_t i = 0; i < states_.size(); ++i) {
            report.total_idle_energy_j +=
                states_[i].node.p_idle * report.horizon;
            NodeUsage usage;
            usage.node_id = states_[i].node.id;
            usage.busy_seconds = busy_seconds_[i];
            usage.utilization =
                report.horizon > 0.0 ? busy_seconds_[i] / report.horizon : 0.0;
            report.node_usage.push_back(std::move(usage));
        }
        for (int c = 0; c < 3; ++c) {
            report.slice_usage.push_back(
                SliceUsage{static_cast<SliceClass>(c), peak_bw_[c]});
        }
        report.oracle_rows = std::move(oracle_rows_);
        return report;
    }

    const Scenario& scenario_;
    Objective objective_;
    RunOptions options_;
    std::mt19937_64 rng_;

    std::priority_queue<Event, std::vector<Event>, EventOrder> queue_;
    std::uint64_t next_seq_ = 0;
    std::vector<NodeState> states_;
    std::vector<PowerProfile> profiles_;
    SliceSet slices_;
    std::unordered_map<std::string, std::size_t> node_index_;
    std::unordered_map<std::string, std::size_t> task_index_;
    std::unordered_map<std::string, DeploymentPlan> committed_;
    std::vector<TaskRecord> records_;
    std::vector<OracleRow> oracle_rows_;
    std::vector<double> busy_since_;
    std::vector<double> busy_seconds_;
    std::vector<int> running_count_;
    std::array<double, 3> peak_bw_{};
};

} // namespace

SimulationReport run(const Scenario& scenario, std::uint64_t seed,
                     Objective objective, const RunOptions& options) {
    try {
        validate_scenario(scenario);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidScenario, e.what());
    }
    Engine engine(scenario, seed, objective, options);
    return engine.run();
}

std::vector<PowerProfile> observe_and_update(
    std::span<const PowerObservation> observations,
    std::vector<PowerProfile> profiles, double alpha) {
    for (const PowerObservation& obs : observations) {
        for (PowerProfile& profile : profiles) {
            if (profile.node_id == obs.node_id) {
                profile = update_profile(profile, obs.observed_p_max, alpha);
                break;
            }
        }
    }
    return profiles;
}

} // namespace orchsim
