// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/energy.hpp"

#include <algorithm>
#include <cmath>

namespace orchsim {

double task_power(const NanoService& task, const Node& node) {
    if (node.capacity.cpu == 0.0) {
        return 0.0;
    }
    return dynamic_power(node.p_idle, node.p_max,
                         task.demand.cpu / node.capacity.cpu);
}

double task_energy(const NanoService& task, const Node& node,
                   const TimingEstimate& timing) {
    return task_power(task, node) * timing.t_proc +
           node.net_energy_coeff * task.data_size;
}

double price_at(const EnergyPriceForecast& forecast, double t) {
    if (forecast.slots.empty() || t < forecast.slots.front().start ||
        t >= forecast.horizon_end) {
        throw Error(ErrorCode::OutOfHorizon,
                    "t=" + std::to_string(t) + " outside forecast range");
    }
    // Last slot whose start <= t.
    auto it = std::upper_bound(
        forecast.slots.begin(), forecast.slots.end(), t,
        [](double value, const PriceSlot& slot) { return value < slot.start; });
    return std::prev(it)->price;
}

namespace {

// Shared integration core. Slot i covers [slots[i].start, next_start)
// where next_start is slots[i+1].start or horizon_end. Per-slot terms
// are accumulated in ascending slot order so results are reproducible
// bit for bit.
double integrate(const EnergyPriceForecast& forecast, double start,
                 double duration, double power) {
    const double end = start + duration;
    double cost = 0.0;
    for (std::size_t i = 0; i < forecast.slots.size(); ++i) {
        const double slot_start = forecast.slots[i].start;
        const double slot_end = i + 1 < forecast.slots.size()
                                    ? forecast.slots[i + 1].start
                                    : forecast.horizon_end;
        const double lo = std::max(start, slot_start);
        const double hi = std::min(end, slot_end);
        if (hi > lo) {
            cost += power * (hi - lo) * forecast.slots[i].price;
        }
    }
    return cost;
}

} // namespace

double execution_cost(const EnergyPriceForecast& forecast, double start,
                      double duration, double power) {
    if (duration == 0.0) {
        return 0.0;
    }
    if (forecast.slots.empty() || start < forecast.slots.front().start ||
        start + duration > forecast.horizon_end) {
        throw Error(ErrorCode::OutOfHorizon,
                    "interval [" + std::to_string(start) + ", " +
                        std::to_string(start + duration) +
                        ") exits the forecast");
    }
    return integrate(forecast, start, duration, power);
}

double execution_cost_clamped(const EnergyPriceForecast& forecast,
                              double start, double duration, double power) {
    if (duration == 0.0 || forecast.slots.empty()) {
        return 0.0;
    }
    return integrate(forecast, start, duration, power);
}

PowerProfile update_profile(const PowerProfile& profile,
                            double observed_p_max, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw Error(ErrorCode::InvalidAlpha,
                    "alpha=" + std::to_string(alpha) + " outside [0, 1]");
    }
    PowerProfile next = profile;
    next.p_max_hat = alpha * observed_p_max + (1.0 - alpha) * profile.p_max_hat;
    return next;
}

} // namespace orchsim
