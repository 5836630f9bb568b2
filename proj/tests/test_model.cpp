// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "orchsim/model.hpp"
#include "test_util.hpp"

using namespace orchsim;

namespace {

NodeState state_with_capacity(double cpu, double gpu, double memory,
                              double storage) {
    Node node;
    node.id = "n";
    node.capacity = {cpu, gpu, memory, storage};
    return NodeState{node, {}, {}};
}

NanoService demand_task(const std::string& id, ResourceVector demand) {
    NanoService task;
    task.id = id;
    task.demand = demand;
    task.deadline = 1.0;
    return task;
}

} // namespace

TEST_CASE("check_fit admits within capacity") {
    NodeState state = state_with_capacity(4, 1, 2048, 0);
    CHECK(check_fit({2, 0, 1024, 0}, state));
}

TEST_CASE("check_fit rejects a single-axis overflow") {
    NodeState state = state_with_capacity(4, 1, 2048, 0);
    state.allocated = {3, 0, 0, 0};
    CHECK_FALSE(check_fit({2, 0, 1024, 0}, state));
}

TEST_CASE("check_fit boundary is inclusive") {
    NodeState state = state_with_capacity(4, 1, 2048, 0);
    state.allocated = {1, 0, 1024, 0};
    CHECK(check_fit({3, 1, 1024, 0}, state));
}

TEST_CASE("check_fit always admits the zero vector") {
    NodeState state = state_with_capacity(0, 0, 0, 0);
    CHECK(check_fit({}, state));
}

TEST_CASE("admit then release restores the original state") {
    NodeState state = state_with_capacity(8, 2, 4096, 100);
    NanoService task = demand_task("t1", {2, 1, 512, 10});
    NodeState restored = release("t1", admit(task, state));
    CHECK(restored == state);
}

TEST_CASE("admit with zero demand only registers the id") {
    NodeState state = state_with_capacity(1, 0, 0, 0);
    NodeState next = admit(demand_task("t0", {}), state);
    CHECK(next.allocated == ResourceVector{});
    CHECK(next.running.count("t0") == 1);
}

TEST_CASE("admit errors") {
    NodeState state = state_with_capacity(4, 0, 1024, 0);
    state = admit(demand_task("a", {3, 0, 0, 0}), state);
    CHECK_THROWS_AS(admit(demand_task("b", {2, 0, 0, 0}), state), Error);
    try {
        admit(demand_task("b", {2, 0, 0, 0}), state);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapacityExceeded);
    }
    try {
        admit(demand_task("a", {0, 0, 0, 0}), state);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateTask);
    }
}

TEST_CASE("release accounting") {
    NodeState state = state_with_capacity(8, 0, 4096, 0);
    NanoService a = demand_task("a", {2, 0, 512, 0});
    NanoService b = demand_task("b", {3, 0, 1024, 0});

    SUBCASE("releasing the only task zeroes the allocation") {
        NodeState s = release("a", admit(a, state));
        CHECK(s.allocated == ResourceVector{});
    }
    SUBCASE("unknown id") {
        CHECK_THROWS_AS(release("ghost", state), Error);
        try {
            release("ghost", state);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnknownTask);
        }
    }
    SUBCASE("admit A, admit B, release A leaves exactly B") {
        NodeState s = release("a", admit(b, admit(a, state)));
        CHECK(s.allocated == b.demand);
        CHECK(s.running.size() == 1);
    }
}

TEST_CASE("capacity conservation over random admit/release sequences") {
    // Dyadic demands keep every sum exact, so the fold-check can use
    // equality rather than a tolerance.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> quarters(0, 8); // 0 .. 2.0 CU
    for (int round = 0; round < 50; ++round) {
        NodeState state = state_with_capacity(16, 4, 4096, 256);
        std::vector<NanoService> live;
        for (int step = 0; step < 200; ++step) {
            const bool do_admit = live.empty() || (rng() % 2 == 0);
            if (do_admit) {
                NanoService task = demand_task(
                    "t" + std::to_string(round) + "_" + std::to_string(step),
                    {quarters(rng) * 0.25, quarters(rng) * 0.25,
                     static_cast<double>(quarters(rng) * 64),
                     static_cast<double>(quarters(rng))});
                if (!check_fit(task.demand, state)) {
                    continue;
                }
                state = admit(task, state);
                live.push_back(task);
            } else {
                const std::size_t victim = rng() % live.size();
                state = release(live[victim].id, state);
                live.erase(live.begin() + victim);
            }
            ResourceVector sum;
            for (const auto& [id, demand] : state.running) {
                sum = sum + demand;
            }
            CHECK(sum == state.allocated);
            CHECK(state.allocated.fits_within(state.node.capacity));
        }
    }
}

TEST_CASE("estimate_timing matches the hand-computed examples") {
    Node node = test::make_node("n", Tier::Edge, 4, 10.0, 0, 0, 0.01);
    NanoService task = test::make_task("t", 2, 10.0, 100.0, 1, 100, false, 0, 10);
    TimingEstimate timing = estimate_timing(task, node, 100.0);
    CHECK(timing.t_proc == 1.0);
    CHECK(timing.t_net == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(timing.t_total == doctest::Approx(2.01).epsilon(1e-12));
    CHECK(timing.t_total == timing.t_net + timing.t_proc);
}

TEST_CASE("estimate_timing with no work and no data is pure rtt") {
    Node node = test::make_node("n", Tier::Local, 4, 2.0, 0, 0, 0.005);
    NanoService task = test::make_task("t", 1, 0.0, 0.0, 1, 0, false, 0, 10);
    TimingEstimate timing = estimate_timing(task, node, 0.0);
    CHECK(timing.t_proc == 0.0);
    CHECK(timing.t_net == 0.005);
    CHECK(timing.t_total == 0.005);
}

TEST_CASE("estimate_timing on a slow node") {
    Node node = test::make_node("n", Tier::Local, 4, 0.5, 0, 0, 0.001);
    NanoService task = test::make_task("t", 2, 10.0, 100.0, 1, 1000, false, 0, 60);
    TimingEstimate timing = estimate_timing(task, node, 1000.0);
    CHECK(timing.t_total == doctest::Approx(20.101).epsilon(1e-12));
}

TEST_CASE("estimate_timing rejects zero bandwidth when data must move") {
    Node node = test::make_node("n", Tier::Edge, 4, 1.0, 0, 0, 0.0);
    NanoService task = test::make_task("t", 1, 1.0, 5.0, 1, 10, false, 0, 10);
    CHECK_THROWS_AS(estimate_timing(task, node, 0.0), Error);
}

TEST_CASE("estimate_timing is monotone in workload and bandwidth") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        Node node = test::make_node("n", Tier::Edge, 4, 0.1 + 50.0 * unit(rng),
                                    0, 0, unit(rng));
        const double workload = 100.0 * unit(rng);
        const double data = 500.0 * unit(rng);
        const double bw = 1.0 + 999.0 * unit(rng);
        NanoService task =
            test::make_task("t", 1, workload, data, 1, bw, false, 0, 1e6);

        NanoService heavier = task;
        heavier.workload = workload + 10.0 * unit(rng);
        CHECK(estimate_timing(heavier, node, bw).t_total >=
              estimate_timing(task, node, bw).t_total);

        const double more_bw = bw + 500.0 * unit(rng);
        CHECK(estimate_timing(task, node, more_bw).t_total <=
              estimate_timing(task, node, bw).t_total);
    }
}
