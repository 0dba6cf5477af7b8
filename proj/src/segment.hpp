#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "series.hpp"

namespace mpspec::seg {

enum class Period { Day, Week };
enum class Transform { Raw, Absolute };

Period parse_period(std::string_view name);
std::string_view period_name(Period p);
Transform parse_transform(std::string_view name);
std::string_view transform_name(Transform t);
std::int64_t period_ms(Period p);

// K x T matrix of row-standardized segments. labels[k] is the UTC start (ms)
// of row k's calendar period; dropped_rows lists the starts of periods that
// were excluded (partial coverage or zero variance). row_mean/row_std record
// the pre-standardization moments of each retained row. raw, when non-empty,
// holds the pre-standardization rows (kept by the synthetic generator).
struct SegmentMatrix {
    Period period = Period::Day;
    ingest::Observable observable = ingest::Observable::LogReturn;
    Transform transform = Transform::Raw;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major, standardized
    std::vector<std::int64_t> labels;
    std::vector<std::int64_t> dropped_rows;
    std::vector<double> row_mean;
    std::vector<double> row_std;
    std::vector<double> raw;

    std::span<const double> row(std::size_t k) const { return {data.data() + k * cols, cols}; }
    // Seconds per column; fractional for synthetic matrices whose T does not
    // divide the period evenly.
    double bin_seconds() const {
        return static_cast<double>(period_ms(period)) / 1000.0 / static_cast<double>(cols);
    }
};

// Complete calendar periods of a series, untouched values. Shared by
// segment() and the average-profile computation.
struct FoldedPeriods {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major, raw values
    std::vector<std::int64_t> labels;
    std::vector<std::int64_t> dropped;  // partial leading/trailing periods
};

FoldedPeriods fold_periods(const ingest::SampledSeries& series, Period period);

// In place: subtract the row mean and divide by the population (1/T) standard
// deviation. Returns false (row untouched) when the variance is zero.
bool standardize_row(std::span<double> row, double& mean, double& stdev);

// Folds a series into complete periods, applies the transform, standardizes
// rows, and drops zero-variance rows. Throws when fewer than two complete
// periods survive.
SegmentMatrix segment(const ingest::SampledSeries& series, Period period, Transform transform);

// Rows whose label satisfies the predicate, carried bit-for-bit; throws when
// fewer than two match.
SegmentMatrix filter_rows(const SegmentMatrix& m,
                          const std::function<bool(std::int64_t label_ms)>& predicate);

// Calendar-year filter (UTC year of the row label).
SegmentMatrix filter_year(const SegmentMatrix& m, int year);

std::vector<int> years_present(const SegmentMatrix& m);

}  // namespace mpspec::seg
