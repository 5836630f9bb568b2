// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/slicing.hpp"

#include <string>

namespace orchsim {

const char* to_string(SliceClass slice_class) {
    switch (slice_class) {
    case SliceClass::URLLC: return "URLLC";
    case SliceClass::EMBB: return "EMBB";
    case SliceClass::MMTC: return "MMTC";
    }
    return "?";
}

SliceClass classify_slice(const CommRequirement& comm,
                          const SliceThresholds& thresholds) {
    // Priority order: the latency rule binds before the throughput rule.
    if (comm.latency_req <= thresholds.urllc_latency_max) {
        return SliceClass::URLLC;
    }
    if (comm.bandwidth_req >= thresholds.embb_bw_min) {
        return SliceClass::EMBB;
    }
    return SliceClass::MMTC;
}

NetworkSlice admit_bandwidth(const NetworkSlice& slice, double demand) {
    if (slice.allocated_bw + demand > slice.capacity_bw) {
        throw Error(ErrorCode::SliceSaturated,
                    std::string(to_string(slice.slice_class)) +
                        " slice cannot grant " + std::to_string(demand) +
                        " Mbps");
    }
    NetworkSlice next = slice;
    next.allocated_bw = slice.allocated_bw + demand;
    return next;
}

NetworkSlice release_bandwidth(const NetworkSlice& slice, double demand) {
    if (demand > slice.allocated_bw) {
        throw Error(ErrorCode::Underflow,
                    std::string(to_string(slice.slice_class)) +
                        " slice release of " + std::to_string(demand) +
                        " Mbps exceeds allocation");
    }
    NetworkSlice next = slice;
    next.allocated_bw = slice.allocated_bw - demand;
    return next;
}

} // namespace orchsim
