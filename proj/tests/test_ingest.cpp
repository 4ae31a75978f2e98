#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "thermoecon/ingest.hpp"
#include "test_util.hpp"

using namespace thermoecon;
using testutil::TempDir;
using testutil::write_file;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvTableSpec simple_spec(const std::filesystem::path& path) {
    CsvTableSpec spec;
    spec.path = path;
    spec.value_columns = {{"value", UnitTag::ej()}};
    return spec;
}

}  // namespace

TEST_CASE("read_series parses a small table") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n1,1\n2,2\n3,3\n");
    const auto series = read_series(simple_spec(path));
    REQUIRE(series.size() == 1);
    CHECK(series[0].size() == 3);
    CHECK(series[0].value_at(2) == 2.0);
    CHECK(series[0].unit() == UnitTag::ej());
    CHECK(series[0].label() == "value");
}

TEST_CASE("duplicate year is an error naming the year") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n1,1\n1,2\n");
    try {
        read_series(simple_spec(path));
        FAIL("expected throw");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("duplicate year 1") != std::string::npos);
    }
}

TEST_CASE("malformed rows carry the line number") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n1,1\nxx,2\n");
    try {
        read_series(simple_spec(path));
        FAIL("expected throw");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }
}

TEST_CASE("na policy") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n1,1\n2,\n3,3\n");
    SUBCASE("skip_row drops the missing cell") {
        const auto series = read_series(simple_spec(path));
        CHECK(series[0].years() == std::vector<int>{1, 3});
    }
    SUBCASE("error raises") {
        CsvTableSpec spec = simple_spec(path);
        spec.na_policy = NaPolicy::error;
        CHECK_THROWS_AS(read_series(spec), std::runtime_error);
    }
}

TEST_CASE("unsorted rows are sorted on read") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n3,30\n1,10\n2,20\n");
    const auto series = read_series(simple_spec(path));
    CHECK(series[0].years() == std::vector<int>{1, 2, 3});
    CHECK(series[0].values() == std::vector<double>{10.0, 20.0, 30.0});
}

TEST_CASE("missing column and missing file") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,other\n1,1\n");
    CHECK_THROWS_AS(read_series(simple_spec(path)), std::runtime_error);
    CHECK_THROWS_AS(read_series(simple_spec(dir.path() / "absent.csv")), std::runtime_error);
}

TEST_CASE("negative years round-trip in astronomical convention") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n-14000,1\n-1,2\n0,3\n1,4\n");
    const auto series = read_series(simple_spec(path));
    CHECK(series[0].years() == std::vector<int>{-14000, -1, 0, 1});
}

TEST_CASE("historical BCE labels shift by one (no year zero)") {
    TempDir dir("ingest");
    const auto path = write_file(dir.path(), "t.csv", "year,value\n-14000,1\n-1,2\n1,3\n");
    CsvTableSpec spec = simple_spec(path);
    spec.year_convention = YearConvention::historical_bce;
    const auto series = read_series(spec);
    CHECK(series[0].years() == std::vector<int>{-13999, 0, 1});
}

TEST_CASE("read_supplement") {
    TempDir dir("ingest");
    SUBCASE("consistent fixture yields no warnings") {
        const auto path = write_file(dir.path(), "s.csv",
                                     "year,Y,E,W,W_over_E\n"
                                     "1,0.1,46.17,144.6,3.1320\n"
                                     "2,0.2,50.0,155.0,3.1\n");
        const SupplementColumns cols = read_supplement(path);
        CHECK(cols.crosscheck_warning_years.empty());
        CHECK(cols.energy.value_at(1) == 46.17);
        CHECK(cols.gwp.label() == "Y_LW");
    }
    SUBCASE("a W/E column off by 10% is warned about, not fatal") {
        const auto path = write_file(dir.path(), "s.csv",
                                     "year,Y,E,W,W_over_E\n"
                                     "1,0.1,46.17,144.6,3.13\n"
                                     "2,0.2,50.0,155.0,3.41\n");
        const SupplementColumns cols = read_supplement(path);
        CHECK(cols.crosscheck_warning_years == std::vector<int>{2});
    }
    SUBCASE("extra columns are ignored") {
        const auto path = write_file(dir.path(), "s.csv",
                                     "year,Y,E,W,W_over_E,note\n"
                                     "1,0.1,46.17,144.6,3.132,x\n"
                                     "2,0.2,50.0,155.0,3.1,y\n");
        CHECK(read_supplement(path).gwp.size() == 2);
    }
}

TEST_CASE("write/read round-trip is bit-exact") {
    TempDir dir("io");
    const AnnualSeries original("Series_A", UnitTag::make_ratio(UnitTag::trillion_usd(1990),
                                                                UnitTag::ej()),
                                {-14000, -1, 0, 1, 2019},
                                {0.1234567890123456789, 3.0, 1e-300, 2.5e17, 7.0 / 3.0});
    const std::vector<AnnualSeries> series{original};
    write_outputs(series, {}, OutputFormat::csv, dir.path());

    CsvTableSpec spec;
    spec.path = dir.path() / "Series_A.csv";
    spec.value_columns = {{"value", original.unit()}};
    const auto back = read_series(spec)[0];
    REQUIRE(back.size() == original.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.years()[i] == original.years()[i]);
        CHECK(back.values()[i] == original.values()[i]);  // bit-exact
    }
    // The unit/label columns carry the tag text on every row.
    const std::string text = slurp(spec.path);
    CHECK(text.find("trillion_USD_1990/EJ,Series_A") != std::string::npos);
    CHECK(text.find("\r\n") == std::string::npos);
}

TEST_CASE("outputs are byte-stable") {
    const AnnualSeries s("S", UnitTag::ej(), {1, 2, 3}, {1.5, 2.25, 3.125});
    const Report report{"R1", "check", true, {{"metric", 0.25}}};

    const std::vector<AnnualSeries> series{s};
    const std::vector<Report> reports{report};
    TempDir a("io_a");
    TempDir b("io_b");
    write_outputs(series, reports, OutputFormat::json, a.path());
    write_outputs(series, reports, OutputFormat::json, b.path());
    CHECK(slurp(a.path() / "thermoecon.json") == slurp(b.path() / "thermoecon.json"));

    write_outputs(series, reports, OutputFormat::csv, a.path());
    write_outputs(series, reports, OutputFormat::csv, b.path());
    CHECK(slurp(a.path() / "S.csv") == slurp(b.path() / "S.csv"));
    CHECK(slurp(a.path() / "reports.json") == slurp(b.path() / "reports.json"));
}

TEST_CASE("json document shape") {
    TempDir dir("io");
    const AnnualSeries s("S", UnitTag::ej(), {1, 2}, {1.0, 2.0});
    const std::vector<AnnualSeries> series{s};
    write_outputs(series, {}, OutputFormat::json, dir.path());
    const std::string text = slurp(dir.path() / "thermoecon.json");
    CHECK(text.find("\"series\"") != std::string::npos);
    CHECK(text.find("\"reports\": []") != std::string::npos);
    CHECK(text.find("\"label\": \"S\"") != std::string::npos);
}
