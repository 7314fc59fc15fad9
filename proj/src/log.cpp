#include "wavedecay/log.hpp"

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace wavedecay {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("WAVEDECAY_LOG");
        if (env == nullptr) return LogLevel::kQuiet;
        if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
        if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
        return LogLevel::kQuiet;
    }();
    return level;
}

void log_info(const char* fmt, ...) {
    if (log_level() < LogLevel::kInfo) return;
    va_list args;
    va_start(args, fmt);
    std::fprintf(stderr, "[wavedecay info] ");
    std::vfprintf(stderr, fmt, args);
    std::fputc('\n', stderr);
    va_end(args);
}

void log_debug(const char* fmt, ...) {
    if (log_level() < LogLevel::kDebug) return;
    va_list args;
    va_start(args, fmt);
    std::fprintf(stderr, "[wavedecay debug] ");
    std::vfprintf(stderr, fmt, args);
    std::fputc('\n', stderr);
    va_end(args);
}

}  // namespace wavedecay
