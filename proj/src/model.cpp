#include "thermoecon/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace thermoecon {

double lambda_aggregate(std::span<const FirmProduction> firms, double gwp) {
    if (gwp <= 0.0) {
        throw std::invalid_argument("lambda_aggregate: gwp must be positive");
    }
    if (firms.empty()) {
        throw std::invalid_argument("lambda_aggregate: empty firm list");
    }
    double weighted = 0.0;
    double total_production = 0.0;
    for (const FirmProduction& f : firms) {
        if (f.lambda_j_per_usd <= 0.0) {
            throw std::invalid_argument("lambda_aggregate: firm efficiency must be positive");
        }
        if (f.production_usd < 0.0) {
            throw std::invalid_argument("lambda_aggregate: negative firm production");
        }
        weighted += f.lambda_j_per_usd * f.production_usd;
        total_production += f.production_usd;
    }
    if (total_production > gwp * (1.0 + kFirmCoverageTolerance)) {
        throw std::invalid_argument("lambda_aggregate: total firm production " +
                                    std::to_string(total_production) + " exceeds gwp " +
                                    std::to_string(gwp));
    }
    return weighted / gwp;
}

double ebcd_lambda(const EbcdInputs& in) {
    if (in.capital_share < 0.0 || in.capital_share > 1.0) {
        throw std::invalid_argument("ebcd_lambda: capital share outside [0,1]");
    }
    if (in.capital_energy_j <= 0.0 || in.capital_usd <= 0.0 || in.labour_energy_j <= 0.0 ||
        in.labour_usd <= 0.0) {
        throw std::invalid_argument("ebcd_lambda: energies and dollar inputs must be positive");
    }
    const double capital_intensity = in.capital_energy_j / in.capital_usd;
    const double labour_intensity = in.labour_energy_j / in.labour_usd;
    return std::pow(capital_intensity, in.capital_share) *
           std::pow(labour_intensity, in.labour_share());
}

double production_from_energy(double available_energy_j, double lambda_agg) {
    if (lambda_agg <= 0.0) {
        throw std::invalid_argument("production_from_energy: efficiency must be positive");
    }
    return available_energy_j / lambda_agg;
}

double lambda_from_observables(double available_energy_j, double production_usd) {
    if (production_usd <= 0.0) {
        throw std::invalid_argument("lambda_from_observables: production must be positive");
    }
    return available_energy_j / production_usd;
}

std::vector<EnergyChainYear> energy_chain(const AnnualSeries& gibbs,
                                          const AnnualSeries& conversion_efficiency,
                                          const AnnualSeries& work_efficiency) {
    if (gibbs.years() != conversion_efficiency.years() || gibbs.years() != work_efficiency.years()) {
        throw std::invalid_argument("energy_chain: the three series must share one year grid");
    }
    std::vector<EnergyChainYear> chain;
    chain.reserve(gibbs.size());
    for (std::size_t i = 0; i < gibbs.size(); ++i) {
        const double alpha_t = conversion_efficiency.values()[i];
        const double eps_t = work_efficiency.values()[i];
        if (alpha_t < 0.0 || alpha_t > 1.0 || eps_t < 0.0 || eps_t > 1.0) {
            throw std::invalid_argument("energy_chain: efficiency outside [0,1] at year " +
                                        std::to_string(gibbs.years()[i]));
        }
        EnergyChainYear y;
        y.year = gibbs.years()[i];
        y.gibbs_j = gibbs.values()[i];
        y.conversion_efficiency = alpha_t;
        y.available_j = alpha_t * y.gibbs_j;
        y.work_efficiency = eps_t;
        y.exergy_j = eps_t * y.available_j;
        chain.push_back(y);
    }
    return chain;
}

AnnualSeries growth_series(const GrowthSpec& spec, const YearRange& range, const UnitTag& unit,
                           const std::string& label) {
    const double g = spec.factor();
    if (g <= 0.0) {
        throw std::invalid_argument("growth_series: growth factor must be positive");
    }
    std::vector<int> years;
    std::vector<double> values;
    years.reserve(static_cast<std::size_t>(range.span()) + 1);
    values.reserve(static_cast<std::size_t>(range.span()) + 1);
    for (int y = range.start; y <= range.end; ++y) {
        years.push_back(y);
        values.push_back(spec.initial_value * std::pow(g, static_cast<double>(y - range.start)));
    }
    return AnnualSeries(label, unit, std::move(years), std::move(values));
}

double w_ratio(double cumulative_usd, double energy_ej) {
    if (energy_ej == 0.0) {
        throw std::invalid_argument("w_ratio: zero energy");
    }
    return cumulative_usd / energy_ej;
}

}  // namespace thermoecon
