// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "orchsim/energy.hpp"
#include "test_util.hpp"

using namespace orchsim;

namespace {

EnergyPriceForecast two_slot_forecast() {
    return {{{0.0, 3.0}, {100.0, 1.0}}, 200.0};
}

} // namespace

TEST_CASE("task_power scales dynamic power by the cpu share") {
    Node node = test::make_node("n", Tier::Edge, 4, 10, 5.0, 25.0, 0);
    NanoService task = test::make_task("t", 2, 1, 0, 1, 0, false, 0, 1);
    CHECK(task_power(task, node) == 10.0);

    task.demand.cpu = 0.0;
    CHECK(task_power(task, node) == 0.0);

    task.demand.cpu = 4.0; // full utilization draws the whole envelope
    CHECK(task_power(task, node) == 20.0);

    node.capacity.cpu = 0.0;
    CHECK(task_power(task, node) == 0.0);
}

TEST_CASE("task_energy combines processing and transfer terms") {
    Node slow = test::make_node("local", Tier::Local, 2, 0.5, 1.0, 3.0, 0.001);
    NanoService task = test::make_task("t", 2, 10, 0, 1, 0, false, 0, 60);
    CHECK(task_energy(task, slow, {0.0, 20.0, 20.0}) == 40.0);

    Node edge = test::make_node("edge", Tier::Edge, 4, 10, 5.0, 25.0, 0.01);
    CHECK(task_energy(task, edge, {0.0, 1.0, 1.0}) == 10.0);

    CHECK(task_energy(task, edge, {0.0, 0.0, 0.0}) == 0.0);

    Node wired = test::make_node("w", Tier::Edge, 4, 10, 0.0, 0.0, 0, 100.0, 0.5);
    NanoService mover = test::make_task("m", 0, 0, 8.0, 1, 10, false, 0, 60);
    CHECK(task_energy(mover, wired, {0.8, 0.0, 0.8}) == 4.0);
}

TEST_CASE("task_energy is nonnegative and monotone in processing time") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        Node node = test::make_node("n", Tier::Edge, 1 + 7 * unit(rng), 1.0,
                                    10 * unit(rng), 10 + 40 * unit(rng), 0,
                                    100.0, unit(rng));
        NanoService task = test::make_task("t", unit(rng), 1, 10 * unit(rng),
                                           1, 10, false, 0, 1);
        const double t1 = 100 * unit(rng);
        const double t2 = t1 + 10 * unit(rng);
        const double e1 = task_energy(task, node, {0, t1, t1});
        const double e2 = task_energy(task, node, {0, t2, t2});
        CHECK(e1 >= 0.0);
        CHECK(e2 >= e1);
    }
}

TEST_CASE("price_at looks up the covering slot") {
    EnergyPriceForecast forecast = two_slot_forecast();
    CHECK(price_at(forecast, 50.0) == 3.0);
    CHECK(price_at(forecast, 100.0) == 1.0); // boundary belongs to the later slot
    CHECK(price_at(forecast, 0.0) == 3.0);
    CHECK_THROWS_AS(price_at(forecast, 250.0), Error);
    CHECK_THROWS_AS(price_at(forecast, 200.0), Error);
    CHECK_THROWS_AS(price_at(forecast, -1.0), Error);
}

TEST_CASE("execution_cost integrates the covered slots exactly") {
    EnergyPriceForecast forecast = two_slot_forecast();
    CHECK(execution_cost(forecast, 0.0, 1.0, 10.0) == 30.0);
    CHECK(execution_cost(forecast, 100.0, 1.0, 10.0) == 10.0);
    // Boundary-spanning: 0.5 s at price 3 plus 0.5 s at price 1.
    CHECK(execution_cost(forecast, 99.5, 1.0, 10.0) == 20.0);
    CHECK_THROWS_AS(execution_cost(forecast, 199.5, 1.0, 10.0), Error);
}

TEST_CASE("execution_cost properties") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SUBCASE("constant price reduces to power * duration * price") {
        EnergyPriceForecast flat{{{0.0, 2.0}}, 1000.0};
        for (int i = 0; i < 200; ++i) {
            const double start = 900 * unit(rng);
            const double duration = (1000 - start) * unit(rng);
            const double power = 50 * unit(rng);
            CHECK(execution_cost(flat, start, duration, power) ==
                  doctest::Approx(power * duration * 2.0).epsilon(1e-12));
        }
    }

    SUBCASE("additive in time") {
        EnergyPriceForecast forecast{
            {{0.0, 3.0}, {40.0, 0.5}, {90.0, 2.5}, {130.0, 1.0}}, 500.0};
        for (int i = 0; i < 200; ++i) {
            const double start = 400 * unit(rng);
            const double d1 = 40 * unit(rng);
            const double d2 = 40 * unit(rng);
            const double whole = execution_cost(forecast, start, d1 + d2, 7.0);
            const double split = execution_cost(forecast, start, d1, 7.0) +
                                 execution_cost(forecast, start + d1, d2, 7.0);
            CHECK(whole == doctest::Approx(split).epsilon(1e-9));
        }
    }

    SUBCASE("linear in a uniform price scaling") {
        EnergyPriceForecast forecast = two_slot_forecast();
        EnergyPriceForecast scaled = forecast;
        const double k = 2.5;
        for (PriceSlot& slot : scaled.slots) {
            slot.price *= k;
        }
        for (int i = 0; i < 200; ++i) {
            const double start = 150 * unit(rng);
            const double duration = 40 * unit(rng);
            CHECK(execution_cost(scaled, start, duration, 4.0) ==
                  doctest::Approx(k * execution_cost(forecast, start, duration, 4.0))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("execution_cost_clamped ignores uncovered time") {
    EnergyPriceForecast forecast = two_slot_forecast();
    // Half the interval sits beyond the horizon.
    CHECK(execution_cost_clamped(forecast, 199.0, 2.0, 10.0) == 10.0);
    CHECK(execution_cost_clamped(forecast, 50.0, 1.0, 10.0) ==
          execution_cost(forecast, 50.0, 1.0, 10.0));
}

TEST_CASE("update_profile follows the EMA recurrence") {
    PowerProfile profile{"n", 2.0, 10.0};
    PowerProfile next = update_profile(profile, 14.0, 0.3);
    CHECK(next.p_max_hat == doctest::Approx(11.2).epsilon(1e-12));
    CHECK(next.p_idle_hat == 2.0);

    CHECK(update_profile(profile, 14.0, 0.0).p_max_hat == 10.0);
    CHECK(update_profile(profile, 14.0, 1.0).p_max_hat == 14.0);

    CHECK_THROWS_AS(update_profile(profile, 14.0, -0.1), Error);
    CHECK_THROWS_AS(update_profile(profile, 14.0, 1.1), Error);
}

TEST_CASE("update_profile stays between the old and observed value") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        PowerProfile profile{"n", 0.0, 5 + 20 * unit(rng)};
        const double observed = profile.p_max_hat * (0.5 + unit(rng));
        const double alpha = unit(rng);
        const double updated = update_profile(profile, observed, alpha).p_max_hat;
        CHECK(updated >= std::min(profile.p_max_hat, observed) - 1e-12);
        CHECK(updated <= std::max(profile.p_max_hat, observed) + 1e-12);
    }
}
