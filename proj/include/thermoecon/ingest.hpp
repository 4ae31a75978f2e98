#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "thermoecon/annual_series.hpp"

namespace thermoecon {

enum class NaPolicy { skip_row, error };

/// How year labels in a file map onto the internal astronomical grid.
/// `astronomical` takes the integer as-is (year 0 exists, -14000 means
/// astronomical -14000). `historical_bce` treats negative integers as BCE
/// labels of the historical calendar, which has no year 0, so -1 maps to 0
/// and -14000 maps to -13999.
enum class YearConvention { astronomical, historical_bce };

struct CsvColumn {
    std::string name;
    UnitTag unit;
};

struct CsvTableSpec {
    std::filesystem::path path;
    char delimiter = ',';
    std::string year_column = "year";
    std::vector<CsvColumn> value_columns;
    NaPolicy na_policy = NaPolicy::skip_row;
    YearConvention year_convention = YearConvention::astronomical;
};

/// Parses one CSV table into one series per declared value column
/// (label = column name). Locale-independent: '.' decimal separator only.
/// Errors carry the offending line number; duplicate years name the year.
std::vector<AnnualSeries> read_series(const CsvTableSpec& spec);

/// Column-name mapping for the five-column supplement layout.
struct SupplementColumnMap {
    std::string year = "year";
    std::string gwp = "Y";
    std::string energy = "E";
    std::string wealth = "W";
    std::string wealth_over_energy = "W_over_E";
};

/// The supplement series plus cross-check results. The W_over_E column is
/// verified against W/E; years off by more than 0.5% are listed as warnings,
/// never fatal.
struct SupplementColumns {
    AnnualSeries gwp;                // label Y_LW, trillion 1990 USD
    AnnualSeries energy;             // label E_LW, EJ
    AnnualSeries wealth;             // label W_LW, trillion 1990 USD
    AnnualSeries wealth_over_energy; // label W_over_E
    std::vector<int> crosscheck_warning_years;
};

SupplementColumns read_supplement(const std::filesystem::path& path,
                                  const SupplementColumnMap& columns = {});

enum class OutputFormat { csv, json };

/// One machine-readable analysis result for the JSON report array.
struct Report {
    std::string id;
    std::string description;
    bool passed = false;
    std::map<std::string, double> metrics;  // ordered for stable output
};

/// Writes series (and reports) under `dir`.
///   csv:  one file per series named <label>.csv with header
///         "year,value,unit,label", LF endings, '.' decimal, %.17g values;
///         reports (if any) land in reports.json.
///   json: a single thermoecon.json document
///         {"series":[{label,unit,points:[[year,value],...]},...],"reports":[...]}.
/// Output bytes depend only on the inputs.
void write_outputs(std::span<const AnnualSeries> series, std::span<const Report> reports,
                   OutputFormat format, const std::filesystem::path& dir);

/// %.17g rendering used for all CSV values (round-trips IEEE doubles).
std::string format_value(double v);

}  // namespace thermoecon
