// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Power/energy model per task-on-node, piecewise-constant price
// forecasts, monetary cost of an execution interval, and online
// power-profile estimation (EMA).

#pragma once

#include <string>
#include <vector>

#include "orchsim/model.hpp"

namespace orchsim {

// One price slot: constant price from `start` until the next slot start
// (or horizon_end for the last slot). Prices are cost-units per joule.
struct PriceSlot {
    double start = 0.0;
    double price = 0.0;

    bool operator==(const PriceSlot&) const = default;
};

// Piecewise-constant price-over-time series. Slot starts strictly
// increasing; the covered range is [slots.front().start, horizon_end).
struct EnergyPriceForecast {
    std::vector<PriceSlot> slots;
    double horizon_end = 0.0;

    bool operator==(const EnergyPriceForecast&) const = default;
};

// Online estimate of a node's power envelope.
struct PowerProfile {
    std::string node_id;
    double p_idle_hat = 0.0; // watts
    double p_max_hat = 0.0;  // watts, >= p_idle_hat

    bool operator==(const PowerProfile&) const = default;
};

// Dynamic power for a given utilization share: (p_max - p_idle) * share.
inline double dynamic_power(double p_idle, double p_max, double cpu_share) {
    return (p_max - p_idle) * cpu_share;
}

// Dynamic power attributed to a task on a node, scaled by its CPU share
// of the node capacity. Idle power is never attributed to tasks; it is
// accounted separately in aggregate metrics. Returns 0 when the node has
// zero CPU capacity.
double task_power(const NanoService& task, const Node& node);

// Cumulative energy of one execution: dynamic power over the processing
// time plus the per-megabit transfer energy of the node.
double task_energy(const NanoService& task, const Node& node,
                   const TimingEstimate& timing);

// Price of the slot whose half-open interval [start, next_start)
// contains t. Throws OutOfHorizon outside the covered range.
double price_at(const EnergyPriceForecast& forecast, double t);

// Exact piecewise integral: sum over overlapped slots of
// power * overlap_seconds * slot_price. Throws OutOfHorizon when the
// interval [start, start + duration) exits the forecast.
double execution_cost(const EnergyPriceForecast& forecast, double start,
                      double duration, double power);

// Same integral restricted to the covered range; time outside the
// forecast contributes zero instead of raising OutOfHorizon.
double execution_cost_clamped(const EnergyPriceForecast& forecast,
                              double start, double duration, double power);

// EMA update of the p_max estimate:
// p_max_hat' = alpha * observed + (1 - alpha) * p_max_hat.
// p_idle_hat is kept. Throws InvalidAlpha when alpha is outside [0, 1].
PowerProfile update_profile(const PowerProfile& profile,
                            double observed_p_max, double alpha);

} // namespace orchsim
