#pragma once

#include <vector>

#include "thermoecon/annual_series.hpp"

namespace thermoecon {

/// Ordinary least squares y = slope * (year - x_origin) + intercept.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    YearRange range;
    int x_origin = 0;

    double at(int year) const { return slope * (year - x_origin) + intercept; }
};

/// Log-linearized exponential fit y = amplitude * exp(rate * (year - x_origin)).
/// r2 is reported from the log-space regression.
struct ExpFit {
    double amplitude = 0.0;
    double rate = 0.0;
    double r2 = 0.0;
    YearRange range;
    int x_origin = 0;

    double at(int year) const;
};

/// Outcome of the W/E constancy test. relative_slope is the dimensionless
/// drift of the fitted line over the window: slope * span / mean(ratio).
struct ConstancyVerdict {
    LinearFit fit;
    double relative_slope = 0.0;
    double threshold = 0.0;
    bool falsified = false;
};

/// Knobs of the dE/dt-vs-inflation discontinuity test. The divergence rule
/// flags a crossing year only when CPI within +/- divergence_window_years of
/// it exceeds divergence_factor times the largest CPI magnitude seen away
/// from all crossings.
struct InflationTestConfig {
    double outlier_cutoff = 10.0;
    int divergence_window_years = 1;
    double divergence_factor = 3.0;
};

/// dE/dt vs CPI comparison over the common year window.
struct InflationReport {
    AnnualSeries de_dt;   // year-on-year energy difference, EJ/yr
    AnnualSeries cpi;     // inflation, percent
    AnnualSeries ratio;   // de_dt / cpi
    std::vector<int> zero_crossings;  // years where de_dt changes sign
    std::vector<int> outliers;        // years with |ratio| > cutoff
    bool discontinuity_at_zero = false;
};

/// OLS on (year - x_origin, value) over the points inside `range`.
/// Needs >= 3 points and nonzero x variance. A zero-variance target yields
/// r2 = 0 (not NaN) with slope 0.
LinearFit fit_linear(const AnnualSeries& series, const YearRange& range, int x_origin);

/// OLS on (year - x_origin, ln value); all values in range must be positive.
ExpFit fit_exponential(const AnnualSeries& series, const YearRange& range, int x_origin);

/// Ratio w/e then linear fit over `range` (x origin at range.start);
/// falsified iff |slope| * span / mean > threshold.
ConstancyVerdict test_w_over_e_constancy(const AnnualSeries& w, const AnnualSeries& e,
                                         const YearRange& range, double threshold);

InflationReport test_de_dt_inflation(const AnnualSeries& energy, const AnnualSeries& cpi,
                                     double outlier_cutoff);
InflationReport test_de_dt_inflation(const AnnualSeries& energy, const AnnualSeries& cpi,
                                     const InflationTestConfig& config);

struct MeanRatio {
    double mean = 0.0;
    double sigma = 0.0;  // population standard deviation
};

/// Mean and population sigma of a(y)/b(y) over the shared years (>= 2
/// required, b nonzero everywhere shared).
MeanRatio mean_ratio(const AnnualSeries& a, const AnnualSeries& b);

}  // namespace thermoecon
