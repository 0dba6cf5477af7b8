#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpspec::ingest {

// One executed trade. Prices are quote units, quantities base units.
struct TickRecord {
    std::int64_t timestamp_ms = 0;
    double price = 0.0;
    double quantity = 0.0;
};

enum class InputFormat {
    Generic,     // timestamp_ms,price,quantity
    BinanceAgg,  // aggTradeId,price,quantity,firstTradeId,lastTradeId,timestamp,isBuyerMaker,isBestMatch
};

enum class Observable { LogReturn, Volume, TxCount };

InputFormat parse_format_tag(std::string_view tag);
std::string_view format_tag(InputFormat f);
Observable parse_observable(std::string_view name);
std::string_view observable_name(Observable o);

// A regular delta-t grid of one observable for one asset. values[i] covers
// [start_ms + i*dt, start_ms + (i+1)*dt).
struct SampledSeries {
    std::string asset;
    Observable observable = Observable::LogReturn;
    int delta_t_s = 10;
    std::int64_t start_ms = 0;
    std::vector<double> values;

    std::int64_t end_ms() const {
        return start_ms + static_cast<std::int64_t>(values.size()) * delta_t_s * 1000;
    }
};

struct ParsedTrades {
    std::vector<TickRecord> ticks;  // sorted by timestamp, stable on input order
    std::uint64_t rejected_lines = 0;
};

// Reads and validates one trade file. Malformed lines are counted, not fatal;
// zero valid records is a hard error. Records come back sorted by timestamp
// (stable, so same-millisecond trades keep file order).
ParsedTrades parse_trades(std::istream& in, InputFormat format);
ParsedTrades parse_trades_file(const std::string& path, InputFormat format);

struct ResampleResult {
    SampledSeries log_return;
    SampledSeries volume;
    SampledSeries tx_count;
};

// Folds sorted ticks onto the delta-t grid over [span_start_ms, span_end_ms).
// Per bin: volume = sum of quantities, count = number of trades, price = last
// trade in the bin carried forward over empty bins. Returns are
// log(p_bin) - log(p_prev); the first bin anchors on the last trade before the
// span when one exists, otherwise its return is 0.
ResampleResult resample(std::span<const TickRecord> ticks, const std::string& asset,
                        int delta_t_s, std::int64_t span_start_ms, std::int64_t span_end_ms);

// Smallest delta-t-aligned span covering all ticks. Convenience for callers
// that do not pin the span explicitly.
std::pair<std::int64_t, std::int64_t> aligned_span(std::span<const TickRecord> ticks,
                                                   int delta_t_s);

}  // namespace mpspec::ingest
