// thermoecon command line: build the reconstructed datasets, run the
// falsification analyses, export plot-ready data.
//
// Exit codes: 0 success, 1 at least one reproduction claim failed,
// 2 input or configuration error.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thermoecon/pipeline.hpp"

namespace {

using namespace thermoecon;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitInputError = 2;

struct CommonOptions {
    std::string data_dir;
    std::string out_dir;
    std::string config_file;
    std::string method = "B";
};

RunConfig resolve_config(const CommonOptions& opts) {
    RunConfig cfg;
    if (!opts.config_file.empty()) {
        cfg = RunConfig::from_json_file(opts.config_file);
    }
    if (const char* env = std::getenv("THERMOECON_DATA_DIR"); env && *env) {
        cfg.data_dir = env;
    }
    if (!opts.data_dir.empty()) {
        cfg.data_dir = opts.data_dir;
    }
    if (!opts.out_dir.empty()) {
        cfg.out_dir = opts.out_dir;
    }
    if (opts.method == "A") {
        cfg.energy_method = EnergyInterpolation::exponential_growth;
    } else if (opts.method == "B") {
        cfg.energy_method = EnergyInterpolation::population_proportional;
    } else {
        throw std::runtime_error("--method must be A or B, got '" + opts.method + "'");
    }
    return cfg;
}

int report_claims(const std::vector<ClaimResult>& claims) {
    bool all_passed = true;
    for (const ClaimResult& c : claims) {
        std::cout << c.id << " " << (c.passed ? "PASS" : "FAIL") << " " << c.detail << "\n";
        all_passed = all_passed && c.passed;
    }
    return all_passed ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thermoecon: historical energy/GWP reconstruction and falsification toolkit"};
    app.require_subcommand(1);

    CommonOptions opts;
    app.add_option("--data-dir", opts.data_dir,
                   "Input data directory (overrides THERMOECON_DATA_DIR; default 'data')");
    app.add_option("--out-dir", opts.out_dir, "Output directory (default 'out')");
    app.add_option("--config", opts.config_file, "JSON run-config file");

    // build ------------------------------------------------------------
    auto* build = app.add_subcommand("build", "Build reconstructed datasets and write them out");
    std::vector<std::string> datasets;
    std::string build_format = "csv";
    build->add_option("--dataset", datasets,
                      "Dataset label(s) or 'all' (labels use lowercase dashes, e.g. e-rep)");
    build->add_option("--method", opts.method, "Pre-1800 energy interpolation: A or B")
        ->check(CLI::IsMember({"A", "B"}));
    build->add_option("--format", build_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // analyze ----------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "Run a falsification analysis");
    analyze->require_subcommand(1);

    auto* woe = analyze->add_subcommand("w-over-e", "W/E constancy test");
    int woe_from = 1970, woe_to = 2019;
    double woe_threshold = 0.05;
    std::string woe_num = "W_sum_RepMorris", woe_den = "E_Rep";
    woe->add_option("--from", woe_from, "Window start year");
    woe->add_option("--to", woe_to, "Window end year");
    woe->add_option("--threshold", woe_threshold, "Relative-drift falsification threshold");
    woe->add_option("--numerator", woe_num, "Cumulative-wealth series label");
    woe->add_option("--denominator", woe_den, "Energy series label");

    auto* inflation = analyze->add_subcommand("inflation", "dE/dt vs CPI discontinuity test");
    double cutoff = 10.0;
    inflation->add_option("--cutoff", cutoff, "Outlier cutoff on |dE/dt / CPI|");

    // fit ----------------------------------------------------------------
    auto* fit = app.add_subcommand("fit", "Least-squares fits");
    fit->require_subcommand(1);

    auto* fit_exp_cmd = fit->add_subcommand("exp", "Exponential fit (log-space OLS)");
    std::string exp_series = "W_LW";
    int exp_from = 1, exp_to = 1969, exp_origin = 0;
    fit_exp_cmd->add_option("--series", exp_series, "Series label");
    fit_exp_cmd->add_option("--from", exp_from, "Window start year");
    fit_exp_cmd->add_option("--to", exp_to, "Window end year");
    fit_exp_cmd->add_option("--origin", exp_origin, "x origin year");

    auto* fit_lin_cmd = fit->add_subcommand("linear", "Linear OLS fit");
    std::string lin_series = "W_over_E";
    int lin_from = 1970, lin_to = 2020, lin_origin = 1970;
    fit_lin_cmd->add_option("--series", lin_series, "Series label");
    fit_lin_cmd->add_option("--from", lin_from, "Window start year");
    fit_lin_cmd->add_option("--to", lin_to, "Window end year");
    fit_lin_cmd->add_option("--origin", lin_origin, "x origin year");

    // export -------------------------------------------------------------
    auto* export_cmd = app.add_subcommand("export", "Build everything and export one document");
    std::string export_format = "json";
    std::vector<std::string> export_datasets;
    export_cmd->add_option("--format", export_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    export_cmd->add_option("--dataset", export_datasets, "Dataset label(s), default all");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = resolve_config(opts);
        DatasetCatalog catalog(cfg.data_dir, cfg.recon, cfg.energy_method);

        if (build->parsed()) {
            // CLI labels are lowercase-dash; map them onto series labels.
            auto canonical = [](std::string s) {
                for (char& c : s) {
                    if (c == '-') c = '_';
                    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                }
                if (s == "all") return std::string("all");
                for (const std::string& label : DatasetCatalog::output_labels()) {
                    std::string folded = label;
                    for (char& c : folded) {
                        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
                    }
                    if (folded == s) return label;
                }
                return std::string(s);  // left as-is; run_build reports valid labels
            };
            std::vector<std::string> wanted;
            for (const std::string& d : datasets) {
                wanted.push_back(canonical(d));
            }
            cfg.format = build_format == "json" ? OutputFormat::json : OutputFormat::csv;
            const auto built = run_build(catalog, wanted, cfg.format, cfg.out_dir);
            for (const AnnualSeries& s : built) {
                std::cout << "wrote " << s.label() << " (" << s.size() << " years, "
                          << s.unit().str() << ")";
                if (s.unreliable_before()) {
                    std::cout << "; years before " << *s.unreliable_before()
                              << " flagged unreliable";
                }
                std::cout << "\n";
            }
            return kExitOk;
        }

        if (woe->parsed()) {
            const ConstancyVerdict v = test_w_over_e_constancy(
                catalog.get(woe_num), catalog.get(woe_den), YearRange(woe_from, woe_to),
                woe_threshold);
            std::cout << woe_num << "/" << woe_den << " " << woe_from << "-" << woe_to
                      << ": slope=" << v.fit.slope << " intercept=" << v.fit.intercept
                      << " r2=" << v.fit.r2 << " relative_slope=" << v.relative_slope
                      << " falsified=" << (v.falsified ? "true" : "false") << "\n";
            if (woe_num == "W_sum_RepMorris" && woe_den == "E_Rep" && woe_from == 1970 &&
                woe_to == 2019) {
                return report_claims(claim_constancy_falsified(catalog, woe_threshold));
            }
            return kExitOk;
        }

        if (inflation->parsed()) {
            const InflationReport report =
                test_de_dt_inflation(catalog.get("E_Rep"), catalog.get("CPI"), cutoff);
            std::cout << "window " << report.de_dt.first_year() << "-" << report.de_dt.last_year()
                      << ": zero_crossings=" << report.zero_crossings.size() << " outliers=";
            for (std::size_t i = 0; i < report.outliers.size(); ++i) {
                std::cout << (i ? "," : "") << report.outliers[i];
            }
            std::cout << " verdict=" << (report.discontinuity_at_zero ? "true" : "false") << "\n";
            return report_claims(claim_inflation(catalog, cutoff));
        }

        if (fit_exp_cmd->parsed()) {
            const ExpFit f =
                fit_exponential(catalog.get(exp_series), YearRange(exp_from, exp_to), exp_origin);
            std::cout << exp_series << " " << exp_from << "-" << exp_to
                      << ": amplitude=" << f.amplitude << " rate=" << f.rate << " r2=" << f.r2
                      << "\n";
            if (exp_series == "W_LW" && exp_from == 1 && exp_to == 1969) {
                return report_claims({claim_wealth_exp_fit(catalog)});
            }
            return kExitOk;
        }

        if (fit_lin_cmd->parsed()) {
            const LinearFit f =
                fit_linear(catalog.get(lin_series), YearRange(lin_from, lin_to), lin_origin);
            std::cout << lin_series << " " << lin_from << "-" << lin_to << " origin " << lin_origin
                      << ": slope=" << f.slope << " intercept=" << f.intercept << " r2=" << f.r2
                      << "\n";
            if (lin_series == "W_over_E" && lin_from == 1970 && lin_to == 2020 &&
                lin_origin == 1970) {
                return report_claims({claim_we_flat_fit(catalog)});
            }
            return kExitOk;
        }

        if (export_cmd->parsed()) {
            cfg.format = export_format == "csv" ? OutputFormat::csv : OutputFormat::json;
            const auto built = run_build(catalog, export_datasets, cfg.format, cfg.out_dir);
            std::cout << "exported " << built.size() << " series to " << cfg.out_dir.string()
                      << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
