#include "thermoecon/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thermoecon {

namespace {

struct XyData {
    std::vector<double> x;
    std::vector<double> y;
};

XyData collect(const AnnualSeries& series, const YearRange& range, int x_origin) {
    XyData d;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (range.contains(series.years()[i])) {
            d.x.push_back(static_cast<double>(series.years()[i] - x_origin));
            d.y.push_back(series.values()[i]);
        }
    }
    return d;
}

LinearFit ols(const XyData& d, const YearRange& range, int x_origin, const char* op) {
    const std::size_t n = d.x.size();
    if (n < 3) {
        throw std::invalid_argument(std::string(op) + ": needs at least 3 points in range, got " +
                                    std::to_string(n));
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += d.x[i];
        mean_y += d.y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = d.x[i] - mean_x;
        const double dy = d.y[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw std::invalid_argument(std::string(op) + ": zero variance in x");
    }

    LinearFit fit;
    fit.range = range;
    fit.x_origin = x_origin;
    if (syy == 0.0) {
        // Degenerate target: flat series fits itself with slope 0; r2 is
        // defined as 0 rather than NaN so downstream checks stay finite.
        fit.slope = 0.0;
        fit.intercept = mean_y;
        fit.r2 = 0.0;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = d.y[i] - (fit.intercept + fit.slope * d.x[i]);
        ss_res += r * r;
    }
    fit.r2 = 1.0 - ss_res / syy;
    return fit;
}

}  // namespace

double ExpFit::at(int year) const {
    return amplitude * std::exp(rate * static_cast<double>(year - x_origin));
}

LinearFit fit_linear(const AnnualSeries& series, const YearRange& range, int x_origin) {
    return ols(collect(series, range, x_origin), range, x_origin, "fit_linear");
}

ExpFit fit_exponential(const AnnualSeries& series, const YearRange& range, int x_origin) {
    XyData d = collect(series, range, x_origin);
    for (std::size_t i = 0; i < d.y.size(); ++i) {
        if (d.y[i] <= 0.0) {
            throw std::invalid_argument("fit_exponential: non-positive value in range");
        }
        d.y[i] = std::log(d.y[i]);
    }
    const LinearFit log_fit = ols(d, range, x_origin, "fit_exponential");
    ExpFit fit;
    fit.amplitude = std::exp(log_fit.intercept);
    fit.rate = log_fit.slope;
    fit.r2 = log_fit.r2;
    fit.range = range;
    fit.x_origin = x_origin;
    return fit;
}

ConstancyVerdict test_w_over_e_constancy(const AnnualSeries& w, const AnnualSeries& e,
                                         const YearRange& range, double threshold) {
    const AnnualSeries r = ratio(w, e);
    ConstancyVerdict verdict;
    verdict.fit = fit_linear(r, range, range.start);
    verdict.threshold = threshold;

    double mean = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (range.contains(r.years()[i])) {
            mean += r.values()[i];
            ++n;
        }
    }
    mean /= static_cast<double>(n);
    if (mean == 0.0) {
        throw std::invalid_argument("test_w_over_e_constancy: zero mean ratio");
    }
    verdict.relative_slope = verdict.fit.slope * static_cast<double>(range.span()) / mean;
    verdict.falsified = std::abs(verdict.relative_slope) > threshold;
    return verdict;
}

InflationReport test_de_dt_inflation(const AnnualSeries& energy, const AnnualSeries& cpi,
                                     double outlier_cutoff) {
    InflationTestConfig config;
    config.outlier_cutoff = outlier_cutoff;
    return test_de_dt_inflation(energy, cpi, config);
}

InflationReport test_de_dt_inflation(const AnnualSeries& energy, const AnnualSeries& cpi,
                                     const InflationTestConfig& config) {
    const AnnualSeries de_full = diff_yoy(energy);

    // Restrict both to the shared window.
    const int start = std::max(de_full.first_year(), cpi.first_year());
    const int end = std::min(de_full.last_year(), cpi.last_year());
    if (start > end || end - start + 1 < 10) {
        throw std::invalid_argument("test_de_dt_inflation: overlap shorter than 10 years");
    }
    const YearRange window(start, end);
    const AnnualSeries de = de_full.slice(window);
    const AnnualSeries cpi_win = cpi.slice(window);
    for (int y = window.start; y <= window.end; ++y) {
        if (!cpi_win.has_year(y)) {
            throw std::invalid_argument("test_de_dt_inflation: CPI missing year " +
                                        std::to_string(y));
        }
        if (cpi_win.value_at(y) == 0.0) {
            throw std::invalid_argument("test_de_dt_inflation: CPI is zero at year " +
                                        std::to_string(y) + "; ratio undefined");
        }
    }

    InflationReport report{de.with_label(energy.label() + "_de_dt"), cpi_win, ratio(de, cpi_win),
                           {}, {}, false};

    // Sign changes of dE/dt; exact zeros carry the previous sign forward and
    // the crossing is recorded at the year the new sign first appears.
    int prev_sign = 0;
    for (std::size_t i = 0; i < report.de_dt.size(); ++i) {
        const double v = report.de_dt.values()[i];
        const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sign != 0) {
            if (prev_sign != 0 && sign != prev_sign) {
                report.zero_crossings.push_back(report.de_dt.years()[i]);
            }
            prev_sign = sign;
        }
    }

    for (std::size_t i = 0; i < report.ratio.size(); ++i) {
        if (std::abs(report.ratio.values()[i]) > config.outlier_cutoff) {
            report.outliers.push_back(report.ratio.years()[i]);
        }
    }

    // Discontinuity detector: CPI near a crossing must dwarf the CPI level
    // seen everywhere away from crossings.
    if (!report.zero_crossings.empty()) {
        auto near_crossing = [&](int year) {
            for (int c : report.zero_crossings) {
                if (std::abs(year - c) <= config.divergence_window_years) {
                    return true;
                }
            }
            return false;
        };
        double near_max = 0.0;
        double away_max = 0.0;
        bool has_away = false;
        for (std::size_t i = 0; i < report.cpi.size(); ++i) {
            const double mag = std::abs(report.cpi.values()[i]);
            if (near_crossing(report.cpi.years()[i])) {
                near_max = std::max(near_max, mag);
            } else {
                away_max = std::max(away_max, mag);
                has_away = true;
            }
        }
        if (has_away && away_max > 0.0) {
            report.discontinuity_at_zero = near_max > config.divergence_factor * away_max;
        }
    }
    return report;
}

MeanRatio mean_ratio(const AnnualSeries& a, const AnnualSeries& b) {
    const AnnualSeries r = ratio(a, b);
    if (r.size() < 2) {
        throw std::invalid_argument("mean_ratio: needs at least 2 shared years");
    }
    double mean = 0.0;
    for (double v : r.values()) {
        mean += v;
    }
    mean /= static_cast<double>(r.size());
    double var = 0.0;
    for (double v : r.values()) {
        var += (v - mean) * (v - mean);
    }
    var /= static_cast<double>(r.size());
    return MeanRatio{mean, std::sqrt(var)};
}

}  // namespace thermoecon
