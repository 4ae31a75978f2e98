#pragma once

#include <span>
#include <vector>

#include "thermoecon/annual_series.hpp"

namespace thermoecon {

/// One firm's conversion efficiency (J per $ of product) and its production.
struct FirmProduction {
    double lambda_j_per_usd = 0.0;
    double production_usd = 0.0;
};

/// Inputs of the energy-based Cobb-Douglas efficiency for one firm (or the
/// globe): energy and dollar levels of capital and labour plus the capital
/// earnings share. The labour share is 1 - capital_share.
struct EbcdInputs {
    double capital_energy_j = 0.0;
    double capital_usd = 0.0;
    double labour_energy_j = 0.0;
    double labour_usd = 0.0;
    double capital_share = 2.0 / 3.0;

    double labour_share() const { return 1.0 - capital_share; }
};

/// One year of the fuel-to-work chain:
///   available = conversion_efficiency * gibbs
///   exergy    = work_efficiency * available
struct EnergyChainYear {
    int year = 0;
    double gibbs_j = 0.0;
    double conversion_efficiency = 1.0;  // in [0,1]
    double available_j = 0.0;
    double work_efficiency = 1.0;  // in [0,1]
    double exergy_j = 0.0;
};

/// Compound growth: value(t) = initial * (1 + interest_rate)^t.
struct GrowthSpec {
    double initial_value = 0.0;
    double interest_rate = 0.0;

    double factor() const { return 1.0 + interest_rate; }
};

// Slack accepted on the firm-coverage precondition of lambda_aggregate;
// partial firm lists yield a partial aggregate, but total production may
// not exceed GWP beyond rounding.
inline constexpr double kFirmCoverageTolerance = 1e-6;

/// Production-weighted aggregate efficiency: sum(lambda_i * p_i) / gwp.
/// Requires gwp > 0, a nonempty firm list, every lambda_i > 0, p_i >= 0 and
/// sum(p_i) <= gwp * (1 + kFirmCoverageTolerance).
double lambda_aggregate(std::span<const FirmProduction> firms, double gwp);

/// (E_K/K)^alpha * (E_L/L)^(1-alpha); all energies and dollars must be
/// positive and the share within [0,1].
double ebcd_lambda(const EbcdInputs& in);

/// Y = E_A / Lambda. Requires lambda_agg > 0.
double production_from_energy(double available_energy_j, double lambda_agg);

/// Lambda = E_A / Y. Requires production > 0.
double lambda_from_observables(double available_energy_j, double production_usd);

/// Applies both efficiency series to a Gibbs-energy series year by year.
/// All three series must share one year grid; coefficients must lie in [0,1].
std::vector<EnergyChainYear> energy_chain(const AnnualSeries& gibbs,
                                          const AnnualSeries& conversion_efficiency,
                                          const AnnualSeries& work_efficiency);

/// Series of spec.initial * (1 + rate)^(t - range.start) over the range.
/// Requires 1 + rate > 0.
AnnualSeries growth_series(const GrowthSpec& spec, const YearRange& range,
                           const UnitTag& unit = UnitTag::trillion_usd(1990),
                           const std::string& label = "growth");

/// w = W / E (cumulative dollars over current-year energy). Requires e != 0.
/// Constancy of this ratio is a hypothesis tested in analysis, never assumed.
double w_ratio(double cumulative_usd, double energy_ej);

}  // namespace thermoecon
