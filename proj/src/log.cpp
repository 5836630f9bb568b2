// Copyright (c) 2026 The orchsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "orchsim/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace orchsim {

namespace {

const char* level_name(LogLevel level) {
    switch (level) {
    case LogLevel::Error: return "error";
    case LogLevel::Warn: return "warn";
    case LogLevel::Info: return "info";
    case LogLevel::Debug: return "debug";
    }
    return "?";
}

LogLevel read_env() {
    const char* env = std::getenv("ORCHSIM_LOG");
    if (env == nullptr) {
        return LogLevel::Warn;
    }
    if (std::strcmp(env, "error") == 0) return LogLevel::Error;
    if (std::strcmp(env, "warn") == 0) return LogLevel::Warn;
    if (std::strcmp(env, "info") == 0) return LogLevel::Info;
    if (std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    return LogLevel::Warn;
}

} // namespace

LogLevel log_level() {
    static const LogLevel level = read_env();
    return level;
}

void log(LogLevel level, const std::string& message) {
    if (!log_enabled(level)) {
        return;
    }
    std::fprintf(stderr, "[%s] %s\n", level_name(level), message.c_str());
}

} // namespace orchsim
