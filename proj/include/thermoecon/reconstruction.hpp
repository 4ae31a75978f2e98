#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include "thermoecon/annual_series.hpp"

namespace thermoecon {

/// Parameters of the fitted exponential used to project the supplement's
/// speculative wealth curve into deep time: W(x) = amplitude * e^(rate * x),
/// x the calendar year.
struct WLwFitParams {
    double amplitude = 0.0;
    double rate = 0.0;
};

// The two published parameterizations of that fit (they disagree; both are
// kept selectable and neither is silently preferred beyond the default).
inline constexpr WLwFitParams kWLwFitFigure{244.064, 5.596e-4};
inline constexpr WLwFitParams kWLwFitText{2.440, 5.965e-4};

struct ReconstructionConfig {
    double year1_energy_ej = 5.45875;       // 1 CE energy anchor
    double gk_ratio_tusd_per_ej = 0.03827;  // trillion 1990 $ per EJ at 1 CE
    double energy_1800_ej = 20.3508;        // expected 1800 CE energy
    WLwFitParams w_lw_fit = kWLwFitFigure;
    int truncate_w_years = 1000;            // unreliable span of summed LW wealth
};

/// Pre-1800 energy interpolation choice: A = constant annual growth factor,
/// B = population-proportional (the shipped default).
enum class EnergyInterpolation { exponential_growth, population_proportional };

/// Sparse per-civilization daily energy-capture estimates (kcal/cap/day)
/// with the 1 CE population split used to weight them into a global total.
struct MorrisTable {
    struct Row {
        int year = 0;
        double west = 0.0;
        double east = 0.0;
        double americas = 0.0;
        double hunter_gatherer = 0.0;
    };

    std::vector<Row> rows;  // strictly increasing years
    // Fractions of the 1 CE population {west, east, americas, hunter-gatherer};
    // must sum to 1. Held constant across the whole span.
    std::array<double, 4> shares = default_shares();

    /// Nothing below this is accepted anywhere in the table.
    static constexpr double kBaselineKcal = 4000.0;

    /// {34, 74, 6, remainder} million of a 226 million total.
    static std::array<double, 4> default_shares();

    /// Loads a CSV with columns year,west,east,americas,hunter_gatherer.
    static MorrisTable from_csv(const std::filesystem::path& path);

    void validate() const;
};

/// Composite GWP series, 1 CE to the last OWID year:
///   anchors through 1820 filled geometrically, 1820-1960 filled linearly,
///   1960-1990 shaped by yearly FRED values rescaled through linearly
///   interpolated OWID/FRED anchor multipliers, 1990+ OWID passthrough.
AnnualSeries build_y_rep(const AnnualSeries& owid_gwp, const AnnualSeries& fred_gwp);

/// Energy series in EJ, 1 CE to the last data year. The TWh input (already
/// summed across sources) is converted at 0.0036 EJ/TWh, gaps through 1965
/// are filled linearly, and the 1 CE anchor is connected to 1800 by the
/// chosen interpolation. The 1800 value must agree with
/// config.energy_1800_ej to 0.1%.
AnnualSeries build_e_rep(const AnnualSeries& energy_twh_total, const AnnualSeries& population,
                         const ReconstructionConfig& config, EnergyInterpolation method);

struct MorrisExtension {
    AnnualSeries energy;  // E_RepMorris, EJ
    AnnualSeries gwp;     // Y_RepMorris, trillion 1990 USD
};

/// Deep-time extension from the Morris table and the population series over
/// [-14000, 1]: E(y) = sum_g share_g * pop(y) * kcal_g(y) * 4184 * 365.25 / 1e18,
/// Y(y) = E(y) * gk ratio. The 1 CE result must land on
/// config.year1_energy_ej within 0.1%.
MorrisExtension build_morris_extension(const MorrisTable& table, const AnnualSeries& population,
                                       const ReconstructionConfig& config);

/// Cumulative sum of GWP from start_year; the first truncate_years are
/// flagged unreliable (kept, never deleted).
AnnualSeries build_w(const AnnualSeries& gwp, int start_year, int truncate_years);

/// amplitude * e^(rate * year) over the range; the deep-time projection of
/// the supplement wealth curve.
AnnualSeries project_w_lw_backward(const WLwFitParams& fit, const YearRange& range);

/// Mean of the sources at every anchor year any of them defines, then
/// linear fill between anchors. All sources must be person-tagged.
AnnualSeries build_population(std::span<const AnnualSeries> sources);

}  // namespace thermoecon
