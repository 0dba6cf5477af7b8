#include "calendar.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace mpspec::cal {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

std::chrono::year_month_day to_ymd(std::int64_t t_ms) {
    const auto days = std::chrono::sys_days{std::chrono::days{floor_div(t_ms, kMsPerDay)}};
    return std::chrono::year_month_day{days};
}

constexpr std::array<const char*, 7> kWeekdayNames = {"SUN", "MON", "TUE", "WED",
                                                      "THU", "FRI", "SAT"};

}  // namespace

std::int64_t day_start(std::int64_t t_ms) { return floor_div(t_ms, kMsPerDay) * kMsPerDay; }

std::int64_t week_start(std::int64_t t_ms) {
    // Epoch day 0 (1970-01-01) was a Thursday; day 3 (1970-01-04) a Sunday.
    const std::int64_t days = floor_div(t_ms, kMsPerDay);
    const std::int64_t since_sunday = ((days - 3) % 7 + 7) % 7;
    return (days - since_sunday) * kMsPerDay;
}

int weekday(std::int64_t t_ms) {
    const std::int64_t days = floor_div(t_ms, kMsPerDay);
    return static_cast<int>(((days + 4) % 7 + 7) % 7);
}

int utc_year(std::int64_t t_ms) { return static_cast<int>(to_ymd(t_ms).year()); }

std::string iso_date(std::int64_t t_ms) {
    const auto ymd = to_ymd(t_ms);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::string iso_datetime(std::int64_t t_ms) {
    const std::int64_t day_ms = t_ms - day_start(t_ms);
    const std::int64_t s = day_ms / kMsPerSecond;
    char buf[16];
    std::snprintf(buf, sizeof buf, "T%02d:%02d:%02dZ", static_cast<int>(s / 3600),
                  static_cast<int>((s / 60) % 60), static_cast<int>(s % 60));
    return iso_date(t_ms) + buf;
}

std::string day_offset_label(double offset_seconds) {
    const auto s = static_cast<std::int64_t>(std::llround(offset_seconds));
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", static_cast<int>(s / 3600),
                  static_cast<int>((s / 60) % 60), static_cast<int>(s % 60));
    return buf;
}

std::string week_offset_label(double offset_seconds) {
    const auto s = static_cast<std::int64_t>(std::llround(offset_seconds));
    const int day = static_cast<int>(s / 86'400);
    if (day < 0 || day > 6) throw InvalidArgument("week offset out of range");
    return std::string(kWeekdayNames[day]) + " " + day_offset_label(static_cast<double>(s % 86'400));
}

std::int64_t parse_time(const std::string& text) {
    if (text.empty()) throw FormatError("empty timestamp");

    // Plain integer: epoch milliseconds.
    {
        std::int64_t ms = 0;
        const char* b = text.data();
        const char* e = b + text.size();
        auto [p, ec] = std::from_chars(b, e, ms);
        if (ec == std::errc() && p == e) return ms;
    }

    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    const int n = std::sscanf(text.c_str(), "%d-%d-%dT%d:%d:%d", &y, &mo, &d, &h, &mi, &s);
    if (n != 3 && n != 5 && n != 6)
        throw FormatError("unparseable timestamp: '" + text + "'");
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(mo)},
                                          std::chrono::day{unsigned(d)}};
    if (!ymd.ok()) throw FormatError("invalid calendar date: '" + text + "'");
    const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
    return (static_cast<std::int64_t>(days) * 86'400 + h * 3600 + mi * 60 + s) * kMsPerSecond;
}

}  // namespace mpspec::cal
