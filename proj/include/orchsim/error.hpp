// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace orchsim {

// Failure categories surfaced by the library. Each maps to one named
// error condition of the public operations.
enum class ErrorCode {
    CapacityExceeded,
    DuplicateTask,
    UnknownTask,
    ZeroBandwidth,
    OutOfHorizon,
    InvalidAlpha,
    SliceSaturated,
    Underflow,
    NoFeasibleNode,
    Infeasible,
    InstanceTooLarge,
    HorizonExceeded,
    SchemaError,
    InvariantError,
    DuplicateId,
    InvalidScenario,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace orchsim
