#include "thermoecon/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace thermoecon {

namespace {

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, delimiter)) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == delimiter) {
        cells.emplace_back();
    }
    return cells;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool parse_int(const std::string& text, int& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

// Locale-independent double parse ('.' decimal separator always).
bool parse_double(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

bool is_na(const std::string& cell) {
    return cell.empty() || cell == "NA" || cell == "na" || cell == "NaN" || cell == "nan";
}

[[noreturn]] void fail_line(const std::filesystem::path& path, std::size_t line_no,
                            const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<AnnualSeries> read_series(const CsvTableSpec& spec) {
    if (spec.value_columns.empty()) {
        throw std::invalid_argument("read_series: no value columns declared for " +
                                    spec.path.string());
    }
    for (const CsvColumn& col : spec.value_columns) {
        if (col.unit.str().empty()) {
            throw std::invalid_argument("read_series: missing unit tag for column '" + col.name +
                                        "'");
        }
    }
    std::ifstream in(spec.path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + spec.path.string());
    }

    std::string line;
    std::size_t line_no = 0;

    // Header.
    if (!std::getline(in, line)) {
        fail_line(spec.path, 1, "missing header row");
    }
    ++line_no;
    const std::vector<std::string> header = split(line, spec.delimiter);
    auto column_index = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (strip(header[i]) == name) {
                return i;
            }
        }
        fail_line(spec.path, 1, "column '" + name + "' not found in header");
    };
    const std::size_t year_idx = column_index(spec.year_column);
    std::vector<std::size_t> value_idx;
    value_idx.reserve(spec.value_columns.size());
    for (const CsvColumn& col : spec.value_columns) {
        value_idx.push_back(column_index(col.name));
    }

    std::vector<std::vector<int>> years(spec.value_columns.size());
    std::vector<std::vector<double>> values(spec.value_columns.size());
    std::set<int> seen_years;

    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) {
            continue;
        }
        const std::vector<std::string> cells = split(line, spec.delimiter);
        if (cells.size() < header.size()) {
            fail_line(spec.path, line_no, "expected " + std::to_string(header.size()) +
                                              " cells, got " + std::to_string(cells.size()));
        }
        int year = 0;
        if (!parse_int(strip(cells[year_idx]), year)) {
            fail_line(spec.path, line_no, "malformed year '" + strip(cells[year_idx]) + "'");
        }
        if (spec.year_convention == YearConvention::historical_bce && year < 0) {
            // Historical BCE labels skip year 0: -1 CE is astronomical 0.
            year += 1;
        }
        if (!seen_years.insert(year).second) {
            fail_line(spec.path, line_no, "duplicate year " + std::to_string(year));
        }
        for (std::size_t c = 0; c < value_idx.size(); ++c) {
            const std::string cell = strip(cells[value_idx[c]]);
            if (is_na(cell)) {
                if (spec.na_policy == NaPolicy::error) {
                    fail_line(spec.path, line_no,
                              "missing value in column '" + spec.value_columns[c].name + "'");
                }
                continue;
            }
            double v = 0.0;
            if (!parse_double(cell, v)) {
                fail_line(spec.path, line_no, "malformed value '" + cell + "' in column '" +
                                                  spec.value_columns[c].name + "'");
            }
            years[c].push_back(year);
            values[c].push_back(v);
        }
    }

    std::vector<AnnualSeries> out;
    out.reserve(spec.value_columns.size());
    for (std::size_t c = 0; c < spec.value_columns.size(); ++c) {
        // Input rows may be unsorted; the series constructor enforces strict
        // ordering afterwards.
        std::vector<std::size_t> order(years[c].size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return years[c][a] < years[c][b]; });
        std::vector<int> sorted_years;
        std::vector<double> sorted_values;
        sorted_years.reserve(order.size());
        sorted_values.reserve(order.size());
        for (std::size_t i : order) {
            sorted_years.push_back(years[c][i]);
            sorted_values.push_back(values[c][i]);
        }
        out.emplace_back(spec.value_columns[c].name, spec.value_columns[c].unit,
                         std::move(sorted_years), std::move(sorted_values));
    }
    return out;
}

SupplementColumns read_supplement(const std::filesystem::path& path,
                                  const SupplementColumnMap& columns) {
    CsvTableSpec spec;
    spec.path = path;
    spec.year_column = columns.year;
    const UnitTag usd = UnitTag::trillion_usd(1990);
    spec.value_columns = {
        {columns.gwp, usd},
        {columns.energy, UnitTag::ej()},
        {columns.wealth, usd},
        {columns.wealth_over_energy, UnitTag::make_ratio(usd, UnitTag::ej())},
    };
    std::vector<AnnualSeries> series = read_series(spec);

    SupplementColumns out{series[0].with_label("Y_LW"), series[1].with_label("E_LW"),
                          series[2].with_label("W_LW"), series[3].with_label("W_over_E"),
                          {}};

    // The W/E column is derived data; verify it against its own inputs.
    for (std::size_t i = 0; i < out.wealth_over_energy.size(); ++i) {
        const int year = out.wealth_over_energy.years()[i];
        const auto w = out.wealth.try_value_at(year);
        const auto e = out.energy.try_value_at(year);
        if (!w || !e || *e == 0.0) {
            continue;
        }
        const double expected = *w / *e;
        const double got = out.wealth_over_energy.values()[i];
        const double denom = std::max(std::abs(expected), 1e-300);
        if (std::abs(got - expected) / denom > 0.005) {
            out.crosscheck_warning_years.push_back(year);
        }
    }
    return out;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

nlohmann::json series_to_json(const AnnualSeries& s) {
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        points.push_back({s.years()[i], s.values()[i]});
    }
    nlohmann::json j{{"label", s.label()}, {"unit", s.unit().str()}, {"points", points}};
    if (s.unreliable_before()) {
        j["unreliable_before"] = *s.unreliable_before();
    }
    return j;
}

nlohmann::json report_to_json(const Report& r) {
    return nlohmann::json{{"id", r.id},
                          {"description", r.description},
                          {"passed", r.passed},
                          {"metrics", r.metrics}};
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) {
        throw std::runtime_error("cannot write output file: " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

}  // namespace

void write_outputs(std::span<const AnnualSeries> series, std::span<const Report> reports,
                   OutputFormat format, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    if (format == OutputFormat::csv) {
        for (const AnnualSeries& s : series) {
            std::string body = "year,value,unit,label\n";
            for (std::size_t i = 0; i < s.size(); ++i) {
                body += std::to_string(s.years()[i]);
                body += ',';
                body += format_value(s.values()[i]);
                body += ',';
                body += s.unit().str();
                body += ',';
                body += s.label();
                body += '\n';
            }
            write_text_file(dir / (s.label() + ".csv"), body);
        }
        if (!reports.empty()) {
            nlohmann::json j = nlohmann::json::array();
            for (const Report& r : reports) {
                j.push_back(report_to_json(r));
            }
            write_text_file(dir / "reports.json", j.dump(2) + "\n");
        }
        return;
    }

    nlohmann::json doc;
    doc["series"] = nlohmann::json::array();
    for (const AnnualSeries& s : series) {
        doc["series"].push_back(series_to_json(s));
    }
    doc["reports"] = nlohmann::json::array();
    for (const Report& r : reports) {
        doc["reports"].push_back(report_to_json(r));
    }
    write_text_file(dir / "thermoecon.json", doc.dump(2) + "\n");
}

}  // namespace thermoecon
