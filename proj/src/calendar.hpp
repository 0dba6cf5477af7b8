#pragma once

#include <cstdint>
#include <string>

// UTC calendar helpers on millisecond epoch timestamps. No time zones, no
// leap seconds; a day is exactly 86,400,000 ms and a week starts on Sunday
// 00:00:00 UTC.
namespace mpspec::cal {

constexpr std::int64_t kMsPerSecond = 1000;
constexpr std::int64_t kMsPerDay = 86'400'000;
constexpr std::int64_t kMsPerWeek = 7 * kMsPerDay;

// Floor of the UTC day containing t_ms.
std::int64_t day_start(std::int64_t t_ms);

// Floor of the Sunday-00:00 week containing t_ms.
std::int64_t week_start(std::int64_t t_ms);

// 0 = Sunday ... 6 = Saturday.
int weekday(std::int64_t t_ms);

// Calendar year (UTC) of t_ms.
int utc_year(std::int64_t t_ms);

// "YYYY-MM-DD"
std::string iso_date(std::int64_t t_ms);

// "YYYY-MM-DDTHH:MM:SSZ" (t_ms must be whole seconds for a faithful label;
// sub-second remainders are truncated).
std::string iso_datetime(std::int64_t t_ms);

// In-period offset label: "HH:MM:SS" for day offsets, "SUN 12:30:00" style
// for week offsets. offset_seconds may be fractional; it is rounded to the
// nearest second.
std::string day_offset_label(double offset_seconds);
std::string week_offset_label(double offset_seconds);

// Accepts "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS" with optional trailing "Z",
// or a plain integer (epoch ms). Throws FormatError otherwise.
std::int64_t parse_time(const std::string& text);

}  // namespace mpspec::cal
