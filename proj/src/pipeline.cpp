#include "thermoecon/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace thermoecon {

namespace {

std::string fmt(double v, int precision = 6) {
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

void require_file(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw std::runtime_error("missing input file: " + path.string());
    }
}

}  // namespace

RunConfig RunConfig::from_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config file " + path.string() + ": " + e.what());
    }

    RunConfig cfg;
    if (j.contains("data_dir")) cfg.data_dir = j.at("data_dir").get<std::string>();
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("datasets")) cfg.datasets = j.at("datasets").get<std::vector<std::string>>();
    if (j.contains("energy_method")) {
        const std::string m = j.at("energy_method").get<std::string>();
        if (m == "A") {
            cfg.energy_method = EnergyInterpolation::exponential_growth;
        } else if (m == "B") {
            cfg.energy_method = EnergyInterpolation::population_proportional;
        } else {
            throw std::runtime_error("config: energy_method must be \"A\" or \"B\", got \"" + m +
                                     "\"");
        }
    }
    if (j.contains("format")) {
        const std::string f = j.at("format").get<std::string>();
        if (f == "csv") {
            cfg.format = OutputFormat::csv;
        } else if (f == "json") {
            cfg.format = OutputFormat::json;
        } else {
            throw std::runtime_error("config: format must be \"csv\" or \"json\", got \"" + f +
                                     "\"");
        }
    }
    if (j.contains("constancy_threshold")) cfg.constancy_threshold = j.at("constancy_threshold");
    if (j.contains("outlier_cutoff")) cfg.outlier_cutoff = j.at("outlier_cutoff");
    if (j.contains("reconstruction")) {
        const nlohmann::json& r = j.at("reconstruction");
        if (r.contains("year1_energy_ej")) cfg.recon.year1_energy_ej = r.at("year1_energy_ej");
        if (r.contains("gk_ratio_tusd_per_ej"))
            cfg.recon.gk_ratio_tusd_per_ej = r.at("gk_ratio_tusd_per_ej");
        if (r.contains("energy_1800_ej")) cfg.recon.energy_1800_ej = r.at("energy_1800_ej");
        if (r.contains("truncate_w_years")) cfg.recon.truncate_w_years = r.at("truncate_w_years");
        if (r.contains("w_lw_fit")) {
            const std::string v = r.at("w_lw_fit").get<std::string>();
            if (v == "figure") {
                cfg.recon.w_lw_fit = kWLwFitFigure;
            } else if (v == "text") {
                cfg.recon.w_lw_fit = kWLwFitText;
            } else {
                throw std::runtime_error(
                    "config: w_lw_fit must be \"figure\" or \"text\", got \"" + v + "\"");
            }
        }
        if (r.contains("w_lw_fit_amplitude")) cfg.recon.w_lw_fit.amplitude = r.at("w_lw_fit_amplitude");
        if (r.contains("w_lw_fit_rate")) cfg.recon.w_lw_fit.rate = r.at("w_lw_fit_rate");
    }
    return cfg;
}

struct DatasetCatalog::Impl {
    std::filesystem::path data_dir;
    ReconstructionConfig config;
    EnergyInterpolation method;
    std::map<std::string, AnnualSeries> cache;
    std::optional<SupplementColumns> supplement;

    const SupplementColumns& get_supplement() {
        if (!supplement) {
            const auto path = data_dir / kSupplementFile;
            require_file(path);
            supplement = read_supplement(path);
        }
        return *supplement;
    }

    AnnualSeries read_single(const char* file, const std::string& column, const UnitTag& unit,
                             const std::string& label) {
        const auto path = data_dir / file;
        require_file(path);
        CsvTableSpec spec;
        spec.path = path;
        spec.value_columns = {{column, unit}};
        return read_series(spec)[0].with_label(label);
    }

    AnnualSeries read_energy_mix_total() {
        const auto path = data_dir / kOwidEnergyMixFile;
        require_file(path);
        // Column discovery: every *_twh column is one source.
        std::ifstream in(path);
        std::string header;
        std::getline(in, header);
        in.close();
        CsvTableSpec spec;
        spec.path = path;
        std::stringstream ss(header);
        std::string name;
        while (std::getline(ss, name, ',')) {
            while (!name.empty() && (name.back() == '\r' || name.back() == ' ')) {
                name.pop_back();
            }
            if (name.size() > 4 && name.rfind("_twh") == name.size() - 4) {
                spec.value_columns.push_back({name, UnitTag::twh()});
            }
        }
        if (spec.value_columns.empty()) {
            throw std::runtime_error("no *_twh source columns in " + path.string());
        }
        const std::vector<AnnualSeries> sources = read_series(spec);
        return sum_series(sources, "E_total_twh");
    }

    AnnualSeries build(const std::string& label) {
        if (label == "Pop") {
            const std::vector<AnnualSeries> sources = {
                read_single(kLwPopulationFile, "population", UnitTag::person(), "Pop_LW"),
                read_single(kHydePopulationFile, "population", UnitTag::person(), "Pop_HYDE"),
                read_single(kMcEvedyPopulationFile, "population", UnitTag::person(),
                            "Pop_McEvedy"),
            };
            return build_population(sources);
        }
        if (label == "Y_Rep") {
            const AnnualSeries owid = read_single(kOwidGwpFile, "gwp_trillion_usd",
                                                  UnitTag::trillion_usd(1990), "Y_OWID");
            const AnnualSeries fred = read_single(kFredGwpFile, "gwp_trillion_usd",
                                                  UnitTag::trillion_usd(1990), "Y_FRED");
            return build_y_rep(owid, fred);
        }
        if (label == "E_Rep") {
            return build_e_rep(read_energy_mix_total(), get("Pop"), config, method);
        }
        if (label == "E_RepMorris" || label == "Y_RepMorris") {
            const auto path = data_dir / kMorrisFile;
            require_file(path);
            const MorrisTable table = MorrisTable::from_csv(path);
            MorrisExtension ext = build_morris_extension(table, get("Pop"), config);
            // Extend past 1 CE with the composite datasets so the deep-time
            // series run all the way to the present.
            const AnnualSeries& modern_e = get("E_Rep");
            const AnnualSeries& modern_y = get("Y_Rep");
            auto splice = [](const AnnualSeries& deep, const AnnualSeries& modern,
                             const std::string& out_label) {
                std::vector<int> years(deep.years());
                std::vector<double> values(deep.values());
                for (std::size_t i = 0; i < modern.size(); ++i) {
                    if (modern.years()[i] > deep.last_year()) {
                        years.push_back(modern.years()[i]);
                        values.push_back(modern.values()[i]);
                    }
                }
                return AnnualSeries(out_label, deep.unit(), std::move(years), std::move(values));
            };
            cache.insert_or_assign("E_RepMorris", splice(ext.energy, modern_e, "E_RepMorris"));
            cache.insert_or_assign("Y_RepMorris", splice(ext.gwp, modern_y, "Y_RepMorris"));
            return cache.at(label);
        }
        if (label == "W_sum_LW") {
            const AnnualSeries y_lw = get_supplement().gwp;
            return build_w(y_lw, y_lw.first_year(), config.truncate_w_years)
                .with_label("W_sum_LW");
        }
        if (label == "W_sum_RepMorris") {
            const AnnualSeries& y = get("Y_RepMorris");
            return build_w(y, y.first_year(), 0).with_label("W_sum_RepMorris");
        }
        if (label == "W_LW_proj") {
            return project_w_lw_backward(config.w_lw_fit, YearRange(-14000, 0));
        }
        if (label == "Y_LW") return get_supplement().gwp;
        if (label == "E_LW") return get_supplement().energy;
        if (label == "W_LW") return get_supplement().wealth;
        if (label == "W_over_E") return get_supplement().wealth_over_energy;
        if (label == "CPI") {
            return read_single(kFredCpiFile, "cpi_pct", UnitTag::percent(), "CPI");
        }
        throw std::runtime_error("unknown dataset label: '" + label + "'");
    }

    const AnnualSeries& get(const std::string& label) {
        auto it = cache.find(label);
        if (it != cache.end()) {
            return it->second;
        }
        AnnualSeries built = build(label);
        auto [pos, inserted] = cache.insert_or_assign(label, std::move(built));
        return pos->second;
    }
};

DatasetCatalog::DatasetCatalog(std::filesystem::path data_dir, ReconstructionConfig config,
                               EnergyInterpolation method)
    : impl_(std::make_unique<Impl>()) {
    impl_->data_dir = std::move(data_dir);
    impl_->config = config;
    impl_->method = method;
}

DatasetCatalog::~DatasetCatalog() = default;
DatasetCatalog::DatasetCatalog(DatasetCatalog&&) noexcept = default;
DatasetCatalog& DatasetCatalog::operator=(DatasetCatalog&&) noexcept = default;

const AnnualSeries& DatasetCatalog::get(const std::string& label) {
    if (!is_known(label)) {
        throw std::runtime_error("unknown dataset label: '" + label + "'");
    }
    return impl_->get(label);
}

bool DatasetCatalog::is_known(const std::string& label) const {
    const auto& labels = known_labels();
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

const ReconstructionConfig& DatasetCatalog::config() const { return impl_->config; }
const std::filesystem::path& DatasetCatalog::data_dir() const { return impl_->data_dir; }

const std::vector<int>& DatasetCatalog::supplement_warning_years() {
    return impl_->get_supplement().crosscheck_warning_years;
}

const std::vector<std::string>& DatasetCatalog::output_labels() {
    static const std::vector<std::string> labels = {
        "Y_Rep", "E_Rep", "Y_RepMorris", "E_RepMorris",
        "W_sum_LW", "W_sum_RepMorris", "W_LW_proj", "Pop"};
    return labels;
}

const std::vector<std::string>& DatasetCatalog::known_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> all = output_labels();
        for (const char* extra : {"Y_LW", "E_LW", "W_LW", "W_over_E", "CPI"}) {
            all.emplace_back(extra);
        }
        return all;
    }();
    return labels;
}

// ---------------------------------------------------------------------------
// Reproduction claims. IDs match the acceptance suite.

ClaimResult claim_gwp_scale(DatasetCatalog& catalog) {
    const MeanRatio r = mean_ratio(catalog.get("Y_Rep"), catalog.get("Y_LW"));
    const bool ok = std::abs(r.mean - 1.44) <= 0.02 && std::abs(r.sigma - 0.06) <= 0.02;
    return {"C3", ok,
            "mean(Y_Rep/Y_LW)=" + fmt(r.mean) + " sigma=" + fmt(r.sigma) +
                " expected 1.44+/-0.02, 0.06+/-0.02"};
}

ClaimResult claim_we_flat_fit(DatasetCatalog& catalog) {
    const AnnualSeries& we = catalog.get("W_over_E");
    const LinearFit fit = fit_linear(we, YearRange(1970, 2020), 1970);
    const bool ok = std::abs(fit.slope - 1.18e-3) <= 0.2 * 1.18e-3 &&
                    std::abs(fit.intercept - 3.131) <= 0.02 * 3.131;
    return {"C4", ok,
            "W_LW/E_LW 1970-2020 fit: slope=" + fmt(fit.slope) + " intercept=" +
                fmt(fit.intercept) + " expected 1.18e-3 (+/-20%), 3.131 (+/-2%)"};
}

std::vector<ClaimResult> claim_constancy_falsified(DatasetCatalog& catalog, double threshold) {
    const YearRange window(1970, 2019);
    const ConstancyVerdict rep = test_w_over_e_constancy(catalog.get("W_sum_RepMorris"),
                                                         catalog.get("E_Rep"), window, threshold);
    const ConstancyVerdict lw = test_w_over_e_constancy(catalog.get("W_sum_LW"),
                                                        catalog.get("E_LW"), window, threshold);
    std::vector<ClaimResult> out;
    out.push_back({"C5a", rep.falsified,
                   "W_sum_RepMorris/E_Rep falsified=" + std::string(rep.falsified ? "true" : "false") +
                       " relative_slope=" + fmt(rep.relative_slope) + " threshold=" + fmt(threshold)});
    out.push_back({"C5b", rep.fit.slope > lw.fit.slope,
                   "slope RepMorris=" + fmt(rep.fit.slope) + " > slope LW=" + fmt(lw.fit.slope)});
    return out;
}

ClaimResult claim_wealth_exp_fit(DatasetCatalog& catalog) {
    const ExpFit fit = fit_exponential(catalog.get("W_LW"), YearRange(1, 1969), 0);
    const bool ok = std::abs(fit.r2 - 0.943) <= 0.01 && fit.rate >= 5.5e-4 && fit.rate <= 6.1e-4;
    return {"C6", ok,
            "W_LW 1-1969 exp fit: r2=" + fmt(fit.r2) + " rate=" + fmt(fit.rate) +
                " expected r2 0.943+/-0.01, rate in [5.5e-4, 6.1e-4]"};
}

std::vector<ClaimResult> claim_inflation(DatasetCatalog& catalog, double outlier_cutoff) {
    const InflationReport report =
        test_de_dt_inflation(catalog.get("E_Rep"), catalog.get("CPI"), outlier_cutoff);
    std::vector<ClaimResult> out;

    bool negatives = true;
    for (int y : {1980, 1981, 1982, 2009}) {
        negatives = negatives && report.de_dt.has_year(y) && report.de_dt.value_at(y) < 0.0;
    }
    out.push_back({"C7a", negatives, "dE/dt negative in 1980-1982 and 2009"});
    out.push_back({"C7b", report.zero_crossings.size() >= 4,
                   "zero crossings=" + std::to_string(report.zero_crossings.size()) +
                       " expected >= 4"});
    const std::vector<int> expected_outliers = {2009, 2012, 2015};
    std::string outlier_list;
    for (int y : report.outliers) {
        outlier_list += (outlier_list.empty() ? "" : ",") + std::to_string(y);
    }
    out.push_back({"C7c", report.outliers == expected_outliers,
                   "outliers at cutoff " + fmt(outlier_cutoff) + ": {" + outlier_list +
                       "} expected {2009,2012,2015}"});
    out.push_back({"C7d", !report.discontinuity_at_zero,
                   std::string("discontinuity verdict=") +
                       (report.discontinuity_at_zero ? "true" : "false") + " expected false"});
    return out;
}

std::vector<AnnualSeries> run_build(DatasetCatalog& catalog,
                                    const std::vector<std::string>& datasets, OutputFormat format,
                                    const std::filesystem::path& out_dir) {
    std::vector<std::string> wanted = datasets;
    if (wanted.empty() || (wanted.size() == 1 && wanted[0] == "all")) {
        wanted = DatasetCatalog::output_labels();
    }
    const auto& valid = DatasetCatalog::output_labels();
    for (const std::string& label : wanted) {
        if (std::find(valid.begin(), valid.end(), label) == valid.end()) {
            std::string list;
            for (const std::string& v : valid) {
                list += (list.empty() ? "" : ", ") + v;
            }
            throw std::runtime_error("unknown dataset '" + label + "'; valid labels: " + list +
                                     ", all");
        }
    }
    std::vector<AnnualSeries> built;
    built.reserve(wanted.size());
    for (const std::string& label : DatasetCatalog::output_labels()) {
        if (std::find(wanted.begin(), wanted.end(), label) != wanted.end()) {
            built.push_back(catalog.get(label));
        }
    }
    write_outputs(built, {}, format, out_dir);
    return built;
}

}  // namespace thermoecon
