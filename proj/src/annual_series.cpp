#include "thermoecon/annual_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace thermoecon {

namespace {

std::string year_str(int year) { return std::to_string(year); }

// Index of `year` in the sorted year vector, or npos.
std::size_t find_year(const std::vector<int>& years, int year) {
    auto it = std::lower_bound(years.begin(), years.end(), year);
    if (it == years.end() || *it != year) {
        return static_cast<std::size_t>(-1);
    }
    return static_cast<std::size_t>(it - years.begin());
}

}  // namespace

YearRange::YearRange(int s, int e) : start(s), end(e) {
    if (start > end) {
        throw std::invalid_argument("YearRange: start " + year_str(s) + " > end " + year_str(e));
    }
}

AnnualSeries::AnnualSeries(std::string label, UnitTag unit, std::vector<int> years,
                           std::vector<double> values)
    : label_(std::move(label)),
      unit_(unit),
      years_(std::move(years)),
      values_(std::move(values)) {
    if (years_.size() != values_.size()) {
        throw std::invalid_argument("AnnualSeries '" + label_ + "': " +
                                    std::to_string(years_.size()) + " years vs " +
                                    std::to_string(values_.size()) + " values");
    }
    if (years_.empty()) {
        throw std::invalid_argument("AnnualSeries '" + label_ + "': empty series");
    }
    for (std::size_t i = 1; i < years_.size(); ++i) {
        if (years_[i] <= years_[i - 1]) {
            throw std::invalid_argument("AnnualSeries '" + label_ +
                                        "': years not strictly increasing at year " +
                                        year_str(years_[i]));
        }
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::invalid_argument("AnnualSeries '" + label_ + "': non-finite value at year " +
                                        year_str(years_[i]));
        }
    }
}

AnnualSeries AnnualSeries::from_points(std::string label, UnitTag unit,
                                       const std::vector<std::pair<int, double>>& points) {
    std::vector<int> years;
    std::vector<double> values;
    years.reserve(points.size());
    values.reserve(points.size());
    for (const auto& [year, value] : points) {
        years.push_back(year);
        values.push_back(value);
    }
    return AnnualSeries(std::move(label), unit, std::move(years), std::move(values));
}

bool AnnualSeries::has_year(int year) const {
    return find_year(years_, year) != static_cast<std::size_t>(-1);
}

double AnnualSeries::value_at(int year) const {
    const std::size_t i = find_year(years_, year);
    if (i == static_cast<std::size_t>(-1)) {
        throw std::out_of_range("series '" + label_ + "' has no year " + year_str(year));
    }
    return values_[i];
}

std::optional<double> AnnualSeries::try_value_at(int year) const {
    const std::size_t i = find_year(years_, year);
    if (i == static_cast<std::size_t>(-1)) {
        return std::nullopt;
    }
    return values_[i];
}

bool AnnualSeries::is_consecutive() const {
    return years_.back() - years_.front() + 1 == static_cast<int>(years_.size());
}

bool AnnualSeries::covers(const YearRange& range) const {
    if (range.start < first_year() || range.end > last_year()) {
        return false;
    }
    const std::size_t i = find_year(years_, range.start);
    if (i == static_cast<std::size_t>(-1)) {
        return false;
    }
    // Strictly increasing years: a full span of indices means no gap.
    const std::size_t need = static_cast<std::size_t>(range.span()) + 1;
    if (i + need > years_.size()) {
        return false;
    }
    return years_[i + need - 1] == range.end;
}

AnnualSeries AnnualSeries::slice(const YearRange& range) const {
    std::vector<int> years;
    std::vector<double> values;
    for (std::size_t i = 0; i < years_.size(); ++i) {
        if (range.contains(years_[i])) {
            years.push_back(years_[i]);
            values.push_back(values_[i]);
        }
    }
    if (years.empty()) {
        throw std::invalid_argument("slice: series '" + label_ + "' has no points in [" +
                                    year_str(range.start) + ", " + year_str(range.end) + "]");
    }
    AnnualSeries out(label_, unit_, std::move(years), std::move(values));
    out.unreliable_before_ = unreliable_before_;
    return out;
}

AnnualSeries AnnualSeries::with_label(std::string label) const {
    AnnualSeries out = *this;
    out.label_ = std::move(label);
    return out;
}

AnnualSeries AnnualSeries::with_unit(UnitTag unit) const {
    AnnualSeries out = *this;
    out.unit_ = unit;
    return out;
}

AnnualSeries AnnualSeries::marked_unreliable_before(int year) const {
    AnnualSeries out = *this;
    out.unreliable_before_ = year;
    return out;
}

double growth_factor(double n0, double ny, int span) {
    if (n0 <= 0.0 || ny <= 0.0) {
        throw std::invalid_argument("growth_factor: endpoints must be positive");
    }
    if (span < 1) {
        throw std::invalid_argument("growth_factor: span must be >= 1");
    }
    return std::exp(std::log(ny / n0) / static_cast<double>(span));
}

namespace {

// Shared anchor-segment walk for the fill_* family: keeps anchors bit-exact
// and asks `interior` for each missing year between consecutive anchors.
template <typename Interior>
AnnualSeries fill_segments(const AnnualSeries& series, const YearRange& range, const char* op,
                           Interior interior) {
    if (!series.has_year(range.start) || !series.has_year(range.end)) {
        throw std::invalid_argument(std::string(op) + ": series '" + series.label() +
                                    "' lacks anchors at " + year_str(range.start) + " and/or " +
                                    year_str(range.end));
    }
    std::vector<int> years;
    std::vector<double> values;
    years.reserve(static_cast<std::size_t>(range.span()) + 1);
    values.reserve(static_cast<std::size_t>(range.span()) + 1);

    const auto& in_years = series.years();
    const auto& in_values = series.values();
    for (std::size_t i = 0; i < in_years.size(); ++i) {
        if (!range.contains(in_years[i])) {
            continue;
        }
        years.push_back(in_years[i]);
        values.push_back(in_values[i]);
        if (i + 1 < in_years.size() && in_years[i + 1] <= range.end) {
            for (int y = in_years[i] + 1; y < in_years[i + 1]; ++y) {
                years.push_back(y);
                values.push_back(interior(in_years[i], in_values[i], in_years[i + 1],
                                          in_values[i + 1], y));
            }
        }
    }
    return AnnualSeries(series.label(), series.unit(), std::move(years), std::move(values));
}

}  // namespace

AnnualSeries fill_exponential(const AnnualSeries& series, const YearRange& range) {
    return fill_segments(series, range, "fill_exponential",
                         [&](int y0, double v0, int y1, double v1, int y) {
                             if (v0 <= 0.0 || v1 <= 0.0) {
                                 throw std::invalid_argument(
                                     "fill_exponential: non-positive anchor in segment [" +
                                     year_str(y0) + ", " + year_str(y1) + "]");
                             }
                             const double a = growth_factor(v0, v1, y1 - y0);
                             return v0 * std::pow(a, static_cast<double>(y - y0));
                         });
}

AnnualSeries fill_linear(const AnnualSeries& series, const YearRange& range) {
    return fill_segments(series, range, "fill_linear",
                         [](int y0, double v0, int y1, double v1, int y) {
                             const double t =
                                 static_cast<double>(y - y0) / static_cast<double>(y1 - y0);
                             return v0 + t * (v1 - v0);
                         });
}

AnnualSeries fill_proportional(const AnnualSeries& anchors, const AnnualSeries& reference,
                               const YearRange& range) {
    if (!reference.covers(range)) {
        throw std::invalid_argument("fill_proportional: reference '" + reference.label() +
                                    "' does not cover every year of [" + year_str(range.start) +
                                    ", " + year_str(range.end) + "]");
    }
    for (int y = range.start; y <= range.end; ++y) {
        if (reference.value_at(y) <= 0.0) {
            throw std::invalid_argument("fill_proportional: non-positive reference value at year " +
                                        year_str(y));
        }
    }
    return fill_segments(anchors, range, "fill_proportional",
                         [&](int y0, double v0, int y1, double v1, int y) {
                             const double raw =
                                 v0 * reference.value_at(y) / reference.value_at(y0);
                             const double raw_end =
                                 v0 * reference.value_at(y1) / reference.value_at(y0);
                             const double correction = v1 / raw_end - 1.0;
                             const double t =
                                 static_cast<double>(y - y0) / static_cast<double>(y1 - y0);
                             return raw * (1.0 + t * correction);
                         });
}

AnnualSeries cumulative_sum(const AnnualSeries& series, int from) {
    if (!series.has_year(from)) {
        throw std::invalid_argument("cumulative_sum: series '" + series.label() +
                                    "' has no start year " + year_str(from));
    }
    const AnnualSeries part = series.slice(YearRange(from, series.last_year()));
    if (!part.is_consecutive()) {
        throw std::invalid_argument("cumulative_sum: series '" + series.label() +
                                    "' has gaps after year " + year_str(from));
    }
    std::vector<double> sums;
    sums.reserve(part.size());
    double acc = 0.0;
    for (double v : part.values()) {
        acc += v;
        sums.push_back(acc);
    }
    return AnnualSeries(series.label(), series.unit(), part.years(), std::move(sums));
}

AnnualSeries diff_yoy(const AnnualSeries& series) {
    if (series.size() < 2) {
        throw std::invalid_argument("diff_yoy: series '" + series.label() +
                                    "' needs at least two years");
    }
    if (!series.is_consecutive()) {
        throw std::invalid_argument("diff_yoy: series '" + series.label() + "' has gaps");
    }
    std::vector<int> years(series.years().begin() + 1, series.years().end());
    std::vector<double> diffs;
    diffs.reserve(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i) {
        diffs.push_back(series.values()[i] - series.values()[i - 1]);
    }
    return AnnualSeries(series.label(), series.unit(), std::move(years), std::move(diffs));
}

AnnualSeries ratio(const AnnualSeries& numerator, const AnnualSeries& denominator) {
    std::vector<int> years;
    std::vector<double> values;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
        const int year = numerator.years()[i];
        const auto den = denominator.try_value_at(year);
        if (!den) {
            continue;
        }
        if (*den == 0.0) {
            throw std::invalid_argument("ratio: zero denominator in '" + denominator.label() +
                                        "' at year " + year_str(year));
        }
        years.push_back(year);
        values.push_back(numerator.values()[i] / *den);
    }
    if (years.empty()) {
        throw std::invalid_argument("ratio: '" + numerator.label() + "' and '" +
                                    denominator.label() + "' share no years");
    }
    const UnitTag unit = UnitTag::make_ratio(numerator.unit(), denominator.unit());
    return AnnualSeries(numerator.label() + "/" + denominator.label(), unit, std::move(years),
                        std::move(values));
}

AnnualSeries sum_series(std::span<const AnnualSeries> sources, const std::string& label) {
    if (sources.empty()) {
        throw std::invalid_argument("sum_series: no sources");
    }
    const AnnualSeries& first = sources.front();
    for (const AnnualSeries& s : sources) {
        if (s.unit() != first.unit()) {
            throw std::invalid_argument("sum_series: unit mismatch between '" + first.label() +
                                        "' (" + first.unit().str() + ") and '" + s.label() + "' (" +
                                        s.unit().str() + ")");
        }
        if (s.years() != first.years()) {
            throw std::invalid_argument("sum_series: year grid of '" + s.label() +
                                        "' differs from '" + first.label() + "'");
        }
    }
    std::vector<double> values(first.size(), 0.0);
    for (const AnnualSeries& s : sources) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            values[i] += s.values()[i];
        }
    }
    return AnnualSeries(label, first.unit(), first.years(), std::move(values));
}

AnnualSeries scale_series(const AnnualSeries& series, double factor) {
    std::vector<double> values = series.values();
    for (double& v : values) {
        v *= factor;
    }
    return AnnualSeries(series.label(), series.unit(), series.years(), std::move(values));
}

}  // namespace thermoecon
