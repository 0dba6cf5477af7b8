#include "series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>

#include "error.hpp"

namespace mpspec::ingest {

namespace {

bool parse_double(std::string_view s, double& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e && std::isfinite(out);
}

bool parse_i64(std::string_view s, std::int64_t& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

// Splits a CSV line in place; no quoting in either declared format.
void split_fields(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

bool extract_record(const std::vector<std::string_view>& f, InputFormat format, TickRecord& rec) {
    switch (format) {
        case InputFormat::Generic:
            if (f.size() != 3) return false;
            if (!parse_i64(f[0], rec.timestamp_ms)) return false;
            if (!parse_double(f[1], rec.price)) return false;
            if (!parse_double(f[2], rec.quantity)) return false;
            break;
        case InputFormat::BinanceAgg:
            if (f.size() != 8) return false;
            if (!parse_double(f[1], rec.price)) return false;
            if (!parse_double(f[2], rec.quantity)) return false;
            if (!parse_i64(f[5], rec.timestamp_ms)) return false;
            break;
    }
    return rec.price > 0.0 && rec.quantity >= 0.0;
}

}  // namespace

InputFormat parse_format_tag(std::string_view tag) {
    if (tag == "generic") return InputFormat::Generic;
    if (tag == "binance-agg") return InputFormat::BinanceAgg;
    throw FormatError("unknown input format tag: '" + std::string(tag) + "'");
}

std::string_view format_tag(InputFormat f) {
    return f == InputFormat::Generic ? "generic" : "binance-agg";
}

Observable parse_observable(std::string_view name) {
    if (name == "log_return") return Observable::LogReturn;
    if (name == "volume") return Observable::Volume;
    if (name == "tx_count") return Observable::TxCount;
    throw FormatError("unknown observable: '" + std::string(name) + "'");
}

std::string_view observable_name(Observable o) {
    switch (o) {
        case Observable::LogReturn: return "log_return";
        case Observable::Volume: return "volume";
        case Observable::TxCount: return "tx_count";
    }
    return "";
}

ParsedTrades parse_trades(std::istream& in, InputFormat format) {
    ParsedTrades result;
    std::vector<std::string_view> fields;
    std::string line;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const bool header_candidate = first_line;
        first_line = false;
        if (line.empty()) continue;

        split_fields(line, fields);
        TickRecord rec;
        if (extract_record(fields, format, rec)) {
            result.ticks.push_back(rec);
        } else if (header_candidate) {
            // An optional header line is tolerated, not counted as malformed.
        } else {
            ++result.rejected_lines;
        }
    }
    if (in.bad()) throw IoError("read failure while parsing trades");
    if (result.ticks.empty()) throw FormatError("no valid trade records in input");

    std::stable_sort(result.ticks.begin(), result.ticks.end(),
                     [](const TickRecord& a, const TickRecord& b) {
                         return a.timestamp_ms < b.timestamp_ms;
                     });
    return result;
}

ParsedTrades parse_trades_file(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open trade file: " + path);
    return parse_trades(in, format);
}

ResampleResult resample(std::span<const TickRecord> ticks, const std::string& asset,
                        int delta_t_s, std::int64_t span_start_ms, std::int64_t span_end_ms) {
    if (delta_t_s <= 0) throw InvalidArgument("delta_t must be positive");
    const std::int64_t dt_ms = static_cast<std::int64_t>(delta_t_s) * 1000;
    if (span_end_ms <= span_start_ms) throw InvalidArgument("empty resample span");
    auto aligned = [&](std::int64_t t) { return ((t % dt_ms) + dt_ms) % dt_ms == 0; };
    if (!aligned(span_start_ms) || !aligned(span_end_ms))
        throw InvalidArgument("span boundaries must be aligned to the delta_t grid");

    const std::size_t bins = static_cast<std::size_t>((span_end_ms - span_start_ms) / dt_ms);

    std::vector<double> volume(bins, 0.0), count(bins, 0.0);
    std::vector<double> last_price(bins, std::numeric_limits<double>::quiet_NaN());

    double anchor_price = std::numeric_limits<double>::quiet_NaN();
    for (const TickRecord& t : ticks) {
        if (t.timestamp_ms < span_start_ms) {
            anchor_price = t.price;
            continue;
        }
        if (t.timestamp_ms >= span_end_ms) break;
        const auto b = static_cast<std::size_t>((t.timestamp_ms - span_start_ms) / dt_ms);
        volume[b] += t.quantity;
        count[b] += 1.0;
        last_price[b] = t.price;
    }

    const bool have_anchor = !std::isnan(anchor_price);
    if (!have_anchor && std::isnan(last_price[0]))
        throw InvalidArgument(
            "cannot anchor prices: no trade at or before span start and none in the first bin");

    std::vector<double> returns(bins, 0.0);
    double prev = have_anchor ? anchor_price : last_price[0];
    for (std::size_t b = 0; b < bins; ++b) {
        const double p = std::isnan(last_price[b]) ? prev : last_price[b];
        returns[b] = std::log(p) - std::log(prev);
        prev = p;
    }

    ResampleResult r;
    r.log_return = {asset, Observable::LogReturn, delta_t_s, span_start_ms, std::move(returns)};
    r.volume = {asset, Observable::Volume, delta_t_s, span_start_ms, std::move(volume)};
    r.tx_count = {asset, Observable::TxCount, delta_t_s, span_start_ms, std::move(count)};
    return r;
}

std::pair<std::int64_t, std::int64_t> aligned_span(std::span<const TickRecord> ticks,
                                                   int delta_t_s) {
    if (ticks.empty()) throw InvalidArgument("no ticks to derive a span from");
    const std::int64_t dt_ms = static_cast<std::int64_t>(delta_t_s) * 1000;
    auto floor_to = [&](std::int64_t t) {
        std::int64_t q = t / dt_ms;
        if (t % dt_ms != 0 && t < 0) --q;
        return q * dt_ms;
    };
    const std::int64_t start = floor_to(ticks.front().timestamp_ms);
    const std::int64_t end = floor_to(ticks.back().timestamp_ms) + dt_ms;
    return {start, end};
}

}  // namespace mpspec::ingest
