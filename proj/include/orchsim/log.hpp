// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace orchsim {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Threshold from ORCHSIM_LOG (error|warn|info|debug), read once.
// Defaults to warn; unknown values fall back to the default.
LogLevel log_level();

inline bool log_enabled(LogLevel level) {
    return static_cast<int>(level) <= static_cast<int>(log_level());
}

// Writes "[level] message" to stderr when the level is enabled.
void log(LogLevel level, const std::string& message);

} // namespace orchsim
