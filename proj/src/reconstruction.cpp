#include "thermoecon/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "thermoecon/ingest.hpp"
#include "thermoecon/units.hpp"

namespace thermoecon {

namespace {

// Era boundaries of the composite GWP build.
constexpr int kExponentialEraEnd = 1820;
constexpr int kLinearEraEnd = 1960;
constexpr int kCompositeEraEnd = 1990;

// The energy-mix table is decadal up to here; gaps below are filled linearly.
constexpr int kEnergyYearlyFrom = 1965;
constexpr int kEnergyAnchor1800 = 1800;

void require_anchor(const AnnualSeries& s, int year, const char* op) {
    if (!s.has_year(year)) {
        throw std::invalid_argument(std::string(op) + ": '" + s.label() +
                                    "' is missing the anchor year " + std::to_string(year));
    }
}

}  // namespace

std::array<double, 4> MorrisTable::default_shares() {
    // 1 CE split: west 34M, east 74M, americas 6M of a 226M total; the
    // remainder is hunter-gatherer.
    constexpr double total = 226.0;
    return {34.0 / total, 74.0 / total, 6.0 / total, (total - 34.0 - 74.0 - 6.0) / total};
}

MorrisTable MorrisTable::from_csv(const std::filesystem::path& path) {
    CsvTableSpec spec;
    spec.path = path;
    const UnitTag kcal = UnitTag::kcal_per_capita_day();
    spec.value_columns = {
        {"west", kcal}, {"east", kcal}, {"americas", kcal}, {"hunter_gatherer", kcal}};
    spec.na_policy = NaPolicy::error;
    std::vector<AnnualSeries> cols = read_series(spec);

    MorrisTable table;
    const std::vector<int>& years = cols[0].years();
    for (const AnnualSeries& c : cols) {
        if (c.years() != years) {
            throw std::runtime_error("morris table: ragged rows in " + path.string());
        }
    }
    table.rows.reserve(years.size());
    for (std::size_t i = 0; i < years.size(); ++i) {
        table.rows.push_back(Row{years[i], cols[0].values()[i], cols[1].values()[i],
                                 cols[2].values()[i], cols[3].values()[i]});
    }
    table.validate();
    return table;
}

void MorrisTable::validate() const {
    if (rows.empty()) {
        throw std::invalid_argument("morris table: no rows");
    }
    double share_sum = 0.0;
    for (double s : shares) {
        if (s < 0.0) {
            throw std::invalid_argument("morris table: negative population share");
        }
        share_sum += s;
    }
    if (std::abs(share_sum - 1.0) > 1e-9) {
        throw std::invalid_argument("morris table: population shares sum to " +
                                    std::to_string(share_sum) + ", expected 1");
    }
    for (const Row& r : rows) {
        for (double v : {r.west, r.east, r.americas, r.hunter_gatherer}) {
            if (v < kBaselineKcal) {
                throw std::invalid_argument("morris table: value below the " +
                                            std::to_string(static_cast<int>(kBaselineKcal)) +
                                            " kcal baseline at year " + std::to_string(r.year));
            }
        }
    }
}

AnnualSeries build_y_rep(const AnnualSeries& owid_gwp, const AnnualSeries& fred_gwp) {
    require_anchor(owid_gwp, kExponentialEraEnd, "build_y_rep");
    require_anchor(owid_gwp, kLinearEraEnd, "build_y_rep");
    require_anchor(owid_gwp, kCompositeEraEnd, "build_y_rep");

    const int first = owid_gwp.first_year();
    const int last = owid_gwp.last_year();

    // 1 CE .. 1820: constant-growth fill between the sparse early anchors.
    const AnnualSeries early =
        fill_exponential(owid_gwp, YearRange(first, kExponentialEraEnd));
    // 1820 .. 1960: straight lines over the 10-30 year intervals.
    const AnnualSeries industrial =
        fill_linear(owid_gwp, YearRange(kExponentialEraEnd, kLinearEraEnd));

    std::vector<int> years;
    std::vector<double> values;
    years.reserve(static_cast<std::size_t>(last - first) + 1);
    values.reserve(static_cast<std::size_t>(last - first) + 1);
    for (std::size_t i = 0; i < early.size(); ++i) {
        years.push_back(early.years()[i]);
        values.push_back(early.values()[i]);
    }
    for (std::size_t i = 0; i < industrial.size(); ++i) {
        if (industrial.years()[i] > kExponentialEraEnd) {
            years.push_back(industrial.years()[i]);
            values.push_back(industrial.values()[i]);
        }
    }

    // 1960 .. 1990: FRED supplies the yearly shape; OWID decade anchors fix
    // the level through linearly interpolated multipliers.
    std::vector<int> owid_anchors;
    for (int y : owid_gwp.years()) {
        if (y >= kLinearEraEnd && y <= kCompositeEraEnd) {
            owid_anchors.push_back(y);
        }
    }
    for (std::size_t k = 0; k + 1 < owid_anchors.size(); ++k) {
        const int a0 = owid_anchors[k];
        const int a1 = owid_anchors[k + 1];
        if (!fred_gwp.covers(YearRange(a0, a1))) {
            throw std::invalid_argument("build_y_rep: '" + fred_gwp.label() +
                                        "' does not cover [" + std::to_string(a0) + ", " +
                                        std::to_string(a1) + "]");
        }
        const double m0 = owid_gwp.value_at(a0) / fred_gwp.value_at(a0);
        const double m1 = owid_gwp.value_at(a1) / fred_gwp.value_at(a1);
        for (int y = a0 + 1; y <= a1; ++y) {
            const double t = static_cast<double>(y - a0) / static_cast<double>(a1 - a0);
            const double multiplier = m0 + t * (m1 - m0);
            years.push_back(y);
            values.push_back(y == a1 ? owid_gwp.value_at(a1) : multiplier * fred_gwp.value_at(y));
        }
    }

    // 1990+: OWID is yearly; pass it through.
    if (!owid_gwp.covers(YearRange(kCompositeEraEnd, last))) {
        throw std::invalid_argument("build_y_rep: '" + owid_gwp.label() +
                                    "' must be yearly from " + std::to_string(kCompositeEraEnd));
    }
    for (int y = kCompositeEraEnd + 1; y <= last; ++y) {
        years.push_back(y);
        values.push_back(owid_gwp.value_at(y));
    }

    return AnnualSeries("Y_Rep", owid_gwp.unit(), std::move(years), std::move(values));
}

AnnualSeries build_e_rep(const AnnualSeries& energy_twh_total, const AnnualSeries& population,
                         const ReconstructionConfig& config, EnergyInterpolation method) {
    require_anchor(energy_twh_total, kEnergyAnchor1800, "build_e_rep");

    // TWh -> EJ.
    std::vector<double> ej_values;
    ej_values.reserve(energy_twh_total.size());
    for (double v : energy_twh_total.values()) {
        ej_values.push_back(twh_to_ej(v));
    }
    const AnnualSeries raw("E_Rep", UnitTag::ej(), energy_twh_total.years(),
                           std::move(ej_values));
    const int last = raw.last_year();
    const int yearly_from = std::min(last, kEnergyYearlyFrom);

    // Close the decadal/5-year gaps up to 1965; after that the data must be
    // yearly already.
    const AnnualSeries head = fill_linear(raw, YearRange(raw.first_year(), yearly_from));
    if (last > yearly_from && !raw.covers(YearRange(yearly_from, last))) {
        throw std::invalid_argument("build_e_rep: energy input must be yearly from " +
                                    std::to_string(yearly_from));
    }
    std::vector<int> modern_years(head.years());
    std::vector<double> modern_values(head.values());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw.years()[i] > yearly_from) {
            modern_years.push_back(raw.years()[i]);
            modern_values.push_back(raw.values()[i]);
        }
    }
    const AnnualSeries modern("E_Rep", UnitTag::ej(), std::move(modern_years),
                              std::move(modern_values));

    const double v1800 = modern.value_at(kEnergyAnchor1800);
    if (std::abs(v1800 - config.energy_1800_ej) / config.energy_1800_ej > 1e-3) {
        throw std::invalid_argument("build_e_rep: 1800 CE energy " + std::to_string(v1800) +
                                    " EJ does not match the configured anchor " +
                                    std::to_string(config.energy_1800_ej) + " EJ");
    }

    // Anchor 1 CE and bridge to 1800 by the chosen interpolation.
    std::vector<int> years{1};
    std::vector<double> values{config.year1_energy_ej};
    for (std::size_t i = 0; i < modern.size(); ++i) {
        if (modern.years()[i] > 1) {
            years.push_back(modern.years()[i]);
            values.push_back(modern.values()[i]);
        }
    }
    const AnnualSeries anchored("E_Rep", UnitTag::ej(), std::move(years), std::move(values));
    const YearRange bridge(1, kEnergyAnchor1800);

    const AnnualSeries filled =
        method == EnergyInterpolation::exponential_growth
            ? fill_exponential(anchored, bridge)
            : fill_proportional(anchored, population, bridge);

    // Reassemble the full 1..last series.
    std::vector<int> out_years(filled.years());
    std::vector<double> out_values(filled.values());
    for (std::size_t i = 0; i < anchored.size(); ++i) {
        if (anchored.years()[i] > kEnergyAnchor1800) {
            out_years.push_back(anchored.years()[i]);
            out_values.push_back(anchored.values()[i]);
        }
    }
    return AnnualSeries("E_Rep", UnitTag::ej(), std::move(out_years), std::move(out_values));
}

MorrisExtension build_morris_extension(const MorrisTable& table, const AnnualSeries& population,
                                       const ReconstructionConfig& config) {
    table.validate();
    const int start = table.rows.front().year;
    const int end = table.rows.back().year;
    const YearRange span(start, end);
    if (!population.covers(span)) {
        throw std::invalid_argument("build_morris_extension: population does not cover [" +
                                    std::to_string(start) + ", " + std::to_string(end) + "]");
    }

    // Linear fill of each civilization row over the sparse table years.
    const UnitTag kcal = UnitTag::kcal_per_capita_day();
    std::vector<int> row_years;
    std::vector<double> west, east, americas, hg;
    for (const MorrisTable::Row& r : table.rows) {
        row_years.push_back(r.year);
        west.push_back(r.west);
        east.push_back(r.east);
        americas.push_back(r.americas);
        hg.push_back(r.hunter_gatherer);
    }
    const AnnualSeries west_s =
        fill_linear(AnnualSeries("west", kcal, row_years, west), span);
    const AnnualSeries east_s =
        fill_linear(AnnualSeries("east", kcal, row_years, east), span);
    const AnnualSeries americas_s =
        fill_linear(AnnualSeries("americas", kcal, row_years, americas), span);
    const AnnualSeries hg_s =
        fill_linear(AnnualSeries("hunter_gatherer", kcal, row_years, hg), span);

    std::vector<int> years;
    std::vector<double> energy;
    std::vector<double> gwp;
    years.reserve(static_cast<std::size_t>(span.span()) + 1);
    for (int y = start; y <= end; ++y) {
        const double pop = population.value_at(y);
        const double group_kcal[4] = {west_s.value_at(y), east_s.value_at(y),
                                      americas_s.value_at(y), hg_s.value_at(y)};
        double ej = 0.0;
        for (int g = 0; g < 4; ++g) {
            ej += kcal_capture_to_ej_per_year(group_kcal[g], table.shares[g] * pop);
        }
        years.push_back(y);
        energy.push_back(ej);
        gwp.push_back(energy_to_gk_dollars(ej, config.gk_ratio_tusd_per_ej));
    }

    MorrisExtension out{
        AnnualSeries("E_RepMorris", UnitTag::ej(), years, std::move(energy)),
        AnnualSeries("Y_RepMorris", UnitTag::trillion_usd(1990), years, std::move(gwp))};

    // The table must reproduce the configured 1 CE anchor; a larger gap means
    // the transcription and the anchor disagree.
    if (out.energy.has_year(1)) {
        const double at_1 = out.energy.value_at(1);
        if (std::abs(at_1 - config.year1_energy_ej) / config.year1_energy_ej > 1e-3) {
            throw std::runtime_error("build_morris_extension: 1 CE energy " +
                                     std::to_string(at_1) + " EJ is more than 0.1% away from the " +
                                     std::to_string(config.year1_energy_ej) + " EJ anchor");
        }
    }
    return out;
}

AnnualSeries build_w(const AnnualSeries& gwp, int start_year, int truncate_years) {
    if (truncate_years < 0) {
        throw std::invalid_argument("build_w: negative truncation span");
    }
    AnnualSeries w = cumulative_sum(gwp, start_year).with_label("W_sum_" + gwp.label());
    if (truncate_years > 0) {
        w = w.marked_unreliable_before(start_year + truncate_years);
    }
    return w;
}

AnnualSeries project_w_lw_backward(const WLwFitParams& fit, const YearRange& range) {
    if (fit.amplitude <= 0.0) {
        throw std::invalid_argument("project_w_lw_backward: amplitude must be positive");
    }
    std::vector<int> years;
    std::vector<double> values;
    years.reserve(static_cast<std::size_t>(range.span()) + 1);
    values.reserve(static_cast<std::size_t>(range.span()) + 1);
    for (int y = range.start; y <= range.end; ++y) {
        years.push_back(y);
        values.push_back(fit.amplitude * std::exp(fit.rate * static_cast<double>(y)));
    }
    return AnnualSeries("W_LW_proj", UnitTag::trillion_usd(1990), std::move(years),
                        std::move(values));
}

AnnualSeries build_population(std::span<const AnnualSeries> sources) {
    if (sources.empty()) {
        throw std::invalid_argument("build_population: no sources");
    }
    for (const AnnualSeries& s : sources) {
        if (s.unit() != UnitTag::person()) {
            throw std::invalid_argument("build_population: '" + s.label() +
                                        "' is not person-tagged (" + s.unit().str() + ")");
        }
    }

    // Mean over whichever sources define each anchor year.
    std::map<int, std::pair<double, int>> anchors;  // year -> (sum, count)
    for (const AnnualSeries& s : sources) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto& slot = anchors[s.years()[i]];
            slot.first += s.values()[i];
            slot.second += 1;
        }
    }
    std::vector<int> years;
    std::vector<double> values;
    years.reserve(anchors.size());
    values.reserve(anchors.size());
    for (const auto& [year, acc] : anchors) {
        years.push_back(year);
        values.push_back(acc.first / static_cast<double>(acc.second));
    }
    AnnualSeries merged("Pop", UnitTag::person(), std::move(years), std::move(values));
    return fill_linear(merged, YearRange(merged.first_year(), merged.last_year()));
}

}  // namespace thermoecon
