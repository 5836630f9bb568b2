// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Network-slice classification (URLLC / eMBB / mMTC) and slice
// bandwidth admission.

#pragma once

#include <array>

#include "orchsim/model.hpp"

namespace orchsim {

enum class SliceClass { URLLC = 0, EMBB = 1, MMTC = 2 };

const char* to_string(SliceClass slice_class);

// A virtual network partition with a bandwidth budget.
struct NetworkSlice {
    SliceClass slice_class = SliceClass::MMTC;
    double latency_bound = 1.0; // seconds, > 0
    double capacity_bw = 1.0;   // Mbps, > 0
    double allocated_bw = 0.0;  // Mbps, <= capacity_bw

    double remaining_bw() const { return capacity_bw - allocated_bw; }

    bool operator==(const NetworkSlice&) const = default;
};

// Classification thresholds. The defaults are 3GPP-flavored; the rules
// themselves are qualitative, so both knobs are configuration.
struct SliceThresholds {
    double urllc_latency_max = 0.010; // seconds
    double embb_bw_min = 50.0;        // Mbps

    bool operator==(const SliceThresholds&) const = default;
};

// Exactly one slice per class. Deterministic storage order
// URLLC, EMBB, MMTC.
struct SliceSet {
    std::array<NetworkSlice, 3> slices{
        NetworkSlice{SliceClass::URLLC},
        NetworkSlice{SliceClass::EMBB},
        NetworkSlice{SliceClass::MMTC},
    };

    const NetworkSlice& at(SliceClass c) const {
        return slices[static_cast<int>(c)];
    }
    NetworkSlice& at(SliceClass c) { return slices[static_cast<int>(c)]; }

    bool operator==(const SliceSet&) const = default;
};

// Maps a communication requirement to a slice class. Rules in priority
// order: URLLC when latency_req <= urllc_latency_max, else eMBB when
// bandwidth_req >= embb_bw_min, else mMTC. Total function.
SliceClass classify_slice(const CommRequirement& comm,
                          const SliceThresholds& thresholds);

// Returns a slice with `demand` more Mbps allocated. Admission is
// inclusive at capacity. Throws SliceSaturated.
NetworkSlice admit_bandwidth(const NetworkSlice& slice, double demand);

// Returns a slice with `demand` fewer Mbps allocated. Throws Underflow.
NetworkSlice release_bandwidth(const NetworkSlice& slice, double demand);

} // namespace orchsim
