#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thermoecon/units.hpp"

namespace thermoecon {

/// Inclusive range of calendar years (astronomical numbering, so year 0
/// exists and negative years are valid).
struct YearRange {
    int start = 0;
    int end = 0;

    YearRange() = default;
    YearRange(int s, int e);

    int span() const { return end - start; }
    bool contains(int year) const { return year >= start && year <= end; }
};

/// Immutable annual time series: strictly increasing integer years with
/// finite values and a unit tag. The universal carrier for GWP, energy,
/// wealth, population and CPI series.
class AnnualSeries {
public:
    AnnualSeries(std::string label, UnitTag unit, std::vector<int> years,
                 std::vector<double> values);

    static AnnualSeries from_points(std::string label, UnitTag unit,
                                    const std::vector<std::pair<int, double>>& points);

    const std::string& label() const { return label_; }
    const UnitTag& unit() const { return unit_; }
    const std::vector<int>& years() const { return years_; }
    const std::vector<double>& values() const { return values_; }

    std::size_t size() const { return years_.size(); }
    int first_year() const { return years_.front(); }
    int last_year() const { return years_.back(); }

    bool has_year(int year) const;
    /// Value at an exact year. Throws std::out_of_range naming the year if absent.
    double value_at(int year) const;
    std::optional<double> try_value_at(int year) const;

    /// True when the year grid has no gaps (consecutive integers).
    bool is_consecutive() const;
    /// True when every integer year of the range is present.
    bool covers(const YearRange& range) const;

    /// Points with year inside [range.start, range.end].
    AnnualSeries slice(const YearRange& range) const;
    AnnualSeries with_label(std::string label) const;
    AnnualSeries with_unit(UnitTag unit) const;

    /// Flag-and-keep marker: years strictly before this are considered
    /// unreliable (e.g. the early span of a cumulative sum started from an
    /// artificial zero). Values are never deleted.
    std::optional<int> unreliable_before() const { return unreliable_before_; }
    AnnualSeries marked_unreliable_before(int year) const;

private:
    std::string label_;
    UnitTag unit_;
    std::vector<int> years_;
    std::vector<double> values_;
    std::optional<int> unreliable_before_;
};

/// Annual growth factor a with n0 * a^span == ny, i.e.
/// a = exp(ln(ny/n0) / span). Endpoints must be positive, span >= 1.
double growth_factor(double n0, double ny, int span);

/// Fills every missing integer year between consecutive anchors inside
/// `range` geometrically (constant annual growth factor per segment).
/// Requires anchors at range.start and range.end, all anchors in range
/// positive. Anchor values are preserved bit-exactly.
AnnualSeries fill_exponential(const AnnualSeries& series, const YearRange& range);

/// Same segment logic with straight-line interpolation; anchors need not be
/// positive.
AnnualSeries fill_linear(const AnnualSeries& series, const YearRange& range);

/// Fills between anchors by scaling a reference series (interior value
/// proportional to reference), with a linear blend that corrects the raw
/// proportional curve so both anchors are matched exactly:
///   raw(y)   = anchors(a0) * reference(y) / reference(a0)
///   value(y) = raw(y) * (1 + (y - a0)/(a1 - a0) * (anchors(a1)/raw(a1) - 1))
/// Reference must cover the range with positive values.
AnnualSeries fill_proportional(const AnnualSeries& anchors, const AnnualSeries& reference,
                               const YearRange& range);

/// Running sum from `from` to each year. Requires a gapless grid from
/// `from` to the series end; points before `from` are ignored.
AnnualSeries cumulative_sum(const AnnualSeries& series, int from);

/// Year-on-year first difference; output starts one year after the input.
/// Requires a gapless grid with at least two years.
AnnualSeries diff_yoy(const AnnualSeries& series);

/// Pointwise quotient over the intersection of the two year grids; the
/// unit tag composes as numerator-unit per denominator-unit. A zero
/// denominator is an error naming the year.
AnnualSeries ratio(const AnnualSeries& numerator, const AnnualSeries& denominator);

/// Pointwise sum of sources sharing one unit; grids must be identical.
AnnualSeries sum_series(std::span<const AnnualSeries> sources, const std::string& label);

/// Pointwise scaling by a constant factor (unit preserved).
AnnualSeries scale_series(const AnnualSeries& series, double factor);

}  // namespace thermoecon
