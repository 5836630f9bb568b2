// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared builders for test scenarios.

#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "orchsim/scenario.hpp"

namespace orchsim::test {

inline Node make_node(const std::string& id, Tier tier, double cpu,
                      double service_rate, double p_idle, double p_max,
                      double rtt,
                      double link_bw = std::numeric_limits<double>::infinity(),
                      double net_energy_coeff = 0.0) {
    Node node;
    node.id = id;
    node.tier = tier;
    node.capacity = {cpu, 1.0, 8192.0, 8192.0};
    node.service_rate = service_rate;
    node.p_idle = p_idle;
    node.p_max = p_max;
    node.rtt_to_end = rtt;
    node.net_energy_coeff = net_energy_coeff;
    node.link_bw = link_bw;
    return node;
}

inline NanoService make_task(const std::string& id, double cpu, double workload,
                             double data_size, double latency_req,
                             double bandwidth_req, bool delay_tolerant,
                             double arrival, double deadline) {
    NanoService task;
    task.id = id;
    task.demand = {cpu, 0.0, 256.0, 0.0};
    task.workload = workload;
    task.data_size = data_size;
    task.comm = {latency_req, bandwidth_req, delay_tolerant};
    task.arrival = arrival;
    task.deadline = deadline;
    return task;
}

inline SliceSet make_slices(double urllc_bw = 100.0, double embb_bw = 1000.0,
                            double mmtc_bw = 10.0) {
    SliceSet slices;
    slices.at(SliceClass::URLLC) = {SliceClass::URLLC, 0.01, urllc_bw, 0.0};
    slices.at(SliceClass::EMBB) = {SliceClass::EMBB, 0.1, embb_bw, 0.0};
    slices.at(SliceClass::MMTC) = {SliceClass::MMTC, 10.0, mmtc_bw, 0.0};
    return slices;
}

// The three-tier instance behind the node-selection example: local is
// feasible but energy-hungry, edge is feasible and cheapest, cloud is
// fast but starved by its 2 Mbps backhaul.
struct Fig2b {
    std::vector<NodeState> states;
    SliceSet slices = make_slices();
    SliceThresholds thresholds;
    NanoService task =
        make_task("video-analytics", 2.0, 10.0, 100.0, 2.0, 1000.0, false,
                  0.0, 30.0);
    EnergyPriceForecast forecast{{{0.0, 1.0}}, 200.0};

    Fig2b() {
        Node local = make_node("local-0", Tier::Local, 2.0, 0.5, 1.0, 3.0,
                               0.001, 1000.0);
        Node edge = make_node("edge-0", Tier::Edge, 4.0, 10.0, 5.0, 25.0,
                              0.01, 100.0);
        Node cloud = make_node("cloud-0", Tier::Cloud, 8.0, 100.0, 40.0, 200.0,
                               0.05, 2.0);
        states.push_back({local, {}, {}});
        states.push_back({edge, {}, {}});
        states.push_back({cloud, {}, {}});
    }
};

// Seeded single-task instance for oracle cross-checks: up to 5 nodes,
// up to 12 forecast slots, deadline always inside the horizon.
struct RandomInstance {
    std::vector<NodeState> states;
    SliceSet slices = make_slices(200.0, 2000.0, 100.0);
    SliceThresholds thresholds;
    NanoService task;
    EnergyPriceForecast forecast;
    double now = 0.0;
};

inline RandomInstance random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RandomInstance inst;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) {
        const Tier tier = static_cast<Tier>(rng() % 3);
        inst.states.push_back(
            {make_node("node" + std::to_string(k), tier, 1 + 7 * unit(rng),
                       0.5 + 20 * unit(rng), 4 * unit(rng), 4 + 30 * unit(rng),
                       0.05 * unit(rng),
                       rng() % 4 == 0 ? std::numeric_limits<double>::infinity()
                                      : 1 + 400 * unit(rng),
                       rng() % 3 == 0 ? 0.02 * unit(rng) : 0.0),
             {},
             {}});
    }
    const int slots = 1 + static_cast<int>(rng() % 12);
    double t = 0.0;
    for (int s = 0; s < slots; ++s) {
        inst.forecast.slots.push_back({t, 5.0 * unit(rng)});
        t += 1.0 + 30.0 * unit(rng);
    }
    const double arrival = 20.0 * unit(rng);
    const double deadline = arrival + 0.5 + 80.0 * unit(rng);
    inst.forecast.horizon_end = std::max(t, deadline) + 1.0 + 10.0 * unit(rng);
    inst.task = make_task("task", 8 * unit(rng), 30 * unit(rng),
                          rng() % 4 == 0 ? 0.0 : 200 * unit(rng),
                          0.002 + 2 * unit(rng), 300 * unit(rng),
                          rng() % 2 == 0, arrival, deadline);
    inst.now = arrival;
    return inst;
}

// A full mixed scenario: several tiers, several task shapes, dyadic
// demands so exact accounting checks hold.
inline Scenario random_scenario(std::uint64_t seed, int node_count,
                                int task_count, double noise = 0.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Scenario scenario;
    for (int i = 0; i < node_count; ++i) {
        scenario.nodes.push_back(make_node(
            "node" + std::to_string(i), static_cast<Tier>(rng() % 3),
            2 + static_cast<double>(rng() % 15) * 0.5, 0.5 + 20 * unit(rng),
            4 * unit(rng), 4 + 30 * unit(rng), 0.05 * unit(rng),
            rng() % 4 == 0 ? std::numeric_limits<double>::infinity()
                           : 1 + 400 * unit(rng),
            rng() % 3 == 0 ? 0.02 * unit(rng) : 0.0));
    }
    scenario.slices = make_slices(400.0, 4000.0, 200.0);
    double t = 0.0;
    const int slots = 1 + static_cast<int>(rng() % 12);
    for (int s = 0; s < slots; ++s) {
        scenario.forecast.slots.push_back({t, 5.0 * unit(rng)});
        t += 10.0 + 50.0 * unit(rng);
    }
    scenario.forecast.horizon_end = 4000.0;
    for (int i = 0; i < task_count; ++i) {
        const double arrival = 3000.0 * unit(rng);
        scenario.tasks.push_back(make_task(
            "task" + std::to_string(i),
            static_cast<double>(rng() % 9) * 0.25, 30 * unit(rng),
            rng() % 4 == 0 ? 0.0 : 100 * unit(rng), 0.002 + 2 * unit(rng),
            static_cast<double>(rng() % 120), rng() % 2 == 0, arrival,
            arrival + 1.0 + 80.0 * unit(rng)));
    }
    scenario.profile_alpha = 0.3;
    scenario.observation_noise = noise;
    return scenario;
}

// Single-node, two-price-slot instance behind the deferral example.
struct Fig2a {
    std::vector<NodeState> states;
    SliceSet slices = make_slices(50.0, 100.0, 10.0);
    SliceThresholds thresholds;
    NanoService task =
        make_task("nightly-report", 2.0, 10.0, 0.0, 10.0, 0.0, true, 0.0,
                  150.0);
    EnergyPriceForecast forecast{{{0.0, 3.0}, {100.0, 1.0}}, 200.0};

    Fig2a() {
        states.push_back(
            {make_node("edge-0", Tier::Edge, 4.0, 10.0, 5.0, 25.0, 0.0), {}, {}});
    }
};

} // namespace orchsim::test
