#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace tweetinfo {

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

// "2024-03-01T12:00:00.000Z" (always UTC, millisecond precision).
std::string format_iso8601(Timestamp t);

// Accepts YYYY-MM-DDTHH:MM:SS[.fff...](Z|+hh:mm|-hh:mm). A bare date
// (YYYY-MM-DD) means midnight UTC.
std::optional<Timestamp> parse_iso8601(std::string_view s);

Timestamp now_utc();

}  // namespace tweetinfo
