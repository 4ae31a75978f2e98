#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thermoecon/analysis.hpp"
#include "thermoecon/ingest.hpp"
#include "thermoecon/reconstruction.hpp"

namespace thermoecon {

// Input files expected inside the data directory.
inline constexpr const char* kOwidGwpFile = "owid_gwp.csv";
inline constexpr const char* kFredGwpFile = "fred_gwp.csv";
inline constexpr const char* kFredCpiFile = "fred_cpi.csv";
inline constexpr const char* kOwidEnergyMixFile = "owid_energy_mix.csv";
inline constexpr const char* kSupplementFile = "lw_supplement.csv";
inline constexpr const char* kLwPopulationFile = "lw_population.csv";
inline constexpr const char* kHydePopulationFile = "hyde_population.csv";
inline constexpr const char* kMcEvedyPopulationFile = "mcevedy_population.csv";
inline constexpr const char* kMorrisFile = "morris_kcal.csv";

/// Top-level run settings; mirrors the JSON config file schema.
struct RunConfig {
    std::filesystem::path data_dir = "data";
    std::filesystem::path out_dir = "out";
    std::vector<std::string> datasets;  // empty or {"all"} = everything
    EnergyInterpolation energy_method = EnergyInterpolation::population_proportional;
    OutputFormat format = OutputFormat::csv;
    ReconstructionConfig recon;
    double constancy_threshold = 0.05;
    double outlier_cutoff = 10.0;

    static RunConfig from_json_file(const std::filesystem::path& path);
};

/// Lazily builds and caches every dataset the pipeline can produce, keyed by
/// its published label. Raw inputs are read from the data directory on first
/// use; missing files raise std::runtime_error naming the path.
class DatasetCatalog {
public:
    explicit DatasetCatalog(std::filesystem::path data_dir, ReconstructionConfig config = {},
                            EnergyInterpolation method = EnergyInterpolation::population_proportional);
    ~DatasetCatalog();
    DatasetCatalog(DatasetCatalog&&) noexcept;
    DatasetCatalog& operator=(DatasetCatalog&&) noexcept;

    /// Series by label; builds dependencies on demand.
    const AnnualSeries& get(const std::string& label);
    bool is_known(const std::string& label) const;

    const ReconstructionConfig& config() const;
    const std::filesystem::path& data_dir() const;

    /// Warnings collected while reading the supplement (W/E cross-check).
    const std::vector<int>& supplement_warning_years();

    /// The eight buildable output datasets, in publication order.
    static const std::vector<std::string>& output_labels();
    /// Output labels plus the raw supplement/input series (Y_LW, E_LW, W_LW,
    /// W_over_E, CPI) addressable in analyses.
    static const std::vector<std::string>& known_labels();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One reproduction claim evaluated against the built datasets, keyed to the
/// acceptance suite IDs printed by the CLI.
struct ClaimResult {
    std::string id;
    bool passed = false;
    std::string detail;
};

// Claim evaluators used by both the CLI and the acceptance suite. Each runs
// the underlying analysis operation and compares the published expectation.
ClaimResult claim_gwp_scale(DatasetCatalog& catalog);                        // C3
ClaimResult claim_we_flat_fit(DatasetCatalog& catalog);                      // C4
std::vector<ClaimResult> claim_constancy_falsified(DatasetCatalog& catalog,
                                                   double threshold);        // C5
ClaimResult claim_wealth_exp_fit(DatasetCatalog& catalog);                   // C6
std::vector<ClaimResult> claim_inflation(DatasetCatalog& catalog,
                                         double outlier_cutoff);             // C7

/// Builds the requested datasets (labels from output_labels(); empty or
/// "all" = every one) and writes them via write_outputs. Returns the built
/// series in output order.
std::vector<AnnualSeries> run_build(DatasetCatalog& catalog, const std::vector<std::string>& datasets,
                                    OutputFormat format, const std::filesystem::path& out_dir);

}  // namespace thermoecon
