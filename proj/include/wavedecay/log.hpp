#pragma once

namespace wavedecay {

enum class LogLevel { kQuiet = 0, kInfo = 1, kDebug = 2 };

// Level is read once from the WAVEDECAY_LOG environment variable
// ("quiet", "info", "debug"); default is quiet.
LogLevel log_level();

void log_info(const char* fmt, ...);
void log_debug(const char* fmt, ...);

}  // namespace wavedecay
