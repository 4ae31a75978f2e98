#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "thermoecon/reconstruction.hpp"
#include "thermoecon/units.hpp"
#include "test_util.hpp"

using namespace thermoecon;

namespace {

AnnualSeries constant_series(const std::string& label, UnitTag unit, int start, int end,
                             double value) {
    std::vector<int> years;
    std::vector<double> values;
    for (int y = start; y <= end; ++y) {
        years.push_back(y);
        values.push_back(value);
    }
    return AnnualSeries(label, unit, std::move(years), std::move(values));
}

}  // namespace

TEST_CASE("build_y_rep composite on toy anchors") {
    // OWID: sparse anchors through 1820, a few linear anchors, decades from
    // 1960, yearly from 1990.
    std::vector<int> oy{1, 1000, 1500, 1600, 1700, 1820, 1850, 1900, 1960, 1970, 1980, 1990};
    std::vector<double> ov{1.0, 2.0, 3.0, 3.5, 4.0, 6.0, 7.0, 9.0, 20.0, 40.0, 80.0, 160.0};
    for (int y = 1991; y <= 1995; ++y) {
        oy.push_back(y);
        ov.push_back(160.0 + (y - 1990));
    }
    const AnnualSeries owid("Y_OWID", UnitTag::trillion_usd(1990), oy, ov);
    const AnnualSeries fred = constant_series("Y_FRED", UnitTag::trillion_usd(1990), 1960, 1990, 1.0);

    const AnnualSeries y = build_y_rep(owid, fred);
    CHECK(y.first_year() == 1);
    CHECK(y.last_year() == 1995);
    CHECK(y.is_consecutive());

    // Anchors pass through bit-exactly.
    for (std::size_t i = 0; i < oy.size(); ++i) {
        CHECK(y.value_at(oy[i]) == ov[i]);
    }
    // Exponential region: geometric growth between (1, 1.0) and (1000, 2.0).
    const double a = growth_factor(1.0, 2.0, 999);
    CHECK(y.value_at(500) == doctest::Approx(std::pow(a, 499.0)).epsilon(1e-12));
    // Linear region midpoint between (1850, 7.0) and (1900, 9.0).
    CHECK(y.value_at(1875) == doctest::Approx(8.0).epsilon(1e-12));
    // Composite region against constant FRED: multipliers ramp linearly
    // between the OWID anchors, so the interior is the linear blend.
    CHECK(y.value_at(1965) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(y.value_at(1975) == doctest::Approx(60.0).epsilon(1e-12));
}

TEST_CASE("build_y_rep FRED shape is inherited between anchors") {
    const std::vector<int> oy{1, 1000, 1500, 1600, 1700, 1820, 1900, 1960, 1970, 1980, 1990};
    const std::vector<double> ov{1, 1.5, 2, 2.5, 3, 4, 5, 10, 20, 40, 80};
    AnnualSeries owid("Y_OWID", UnitTag::trillion_usd(1990), oy, ov);

    std::vector<int> fy;
    std::vector<double> fv;
    for (int y = 1960; y <= 1990; ++y) {
        fy.push_back(y);
        fv.push_back(1.0 + (y == 1965 ? 0.5 : 0.0));  // a bump FRED sees
    }
    const AnnualSeries fred("Y_FRED", UnitTag::trillion_usd(1990), fy, fv);
    const AnnualSeries y = build_y_rep(owid, fred);
    // Multiplier at 1965 is the ramp between 10 and 20; FRED bump scales it.
    const double m1965 = 10.0 + 0.5 * (20.0 / 1.0 - 10.0 / 1.0);
    CHECK(y.value_at(1965) == doctest::Approx(m1965 * 1.5).epsilon(1e-12));
}

TEST_CASE("build_y_rep requires era anchors and FRED coverage") {
    const AnnualSeries fred = constant_series("Y_FRED", UnitTag::trillion_usd(1990), 1960, 1990, 1.0);
    const AnnualSeries no_1820("Y_OWID", UnitTag::trillion_usd(1990),
                               {1, 1960, 1970, 1980, 1990}, {1, 2, 3, 4, 5});
    CHECK_THROWS_AS(build_y_rep(no_1820, fred), std::invalid_argument);

    const AnnualSeries owid("Y_OWID", UnitTag::trillion_usd(1990),
                            {1, 1820, 1960, 1970, 1980, 1990}, {1, 2, 3, 4, 5, 6});
    const AnnualSeries short_fred = constant_series("Y_FRED", UnitTag::trillion_usd(1990),
                                                    1960, 1975, 1.0);
    CHECK_THROWS_AS(build_y_rep(owid, short_fred), std::invalid_argument);
}

TEST_CASE("build_e_rep on toy inputs") {
    // Decadal TWh grid 1800..1960, then 1965, then yearly to 1970; the 1800
    // total is the published anchor.
    std::vector<int> years;
    std::vector<double> twh;
    for (int y = 1800; y <= 1960; y += 10) {
        years.push_back(y);
        twh.push_back(5653.0 + 10.0 * (y - 1800));
    }
    years.push_back(1965);
    twh.push_back(7353.0);
    for (int y = 1966; y <= 1970; ++y) {
        years.push_back(y);
        twh.push_back(7353.0 + 100.0 * (y - 1965));
    }
    const AnnualSeries mix_total("E_total_twh", UnitTag::twh(), years, twh);
    const AnnualSeries pop = constant_series("Pop", UnitTag::person(), 1, 1970, 1e8);
    const ReconstructionConfig config;

    SUBCASE("method B with a constant population degenerates to a linear ramp") {
        const AnnualSeries e =
            build_e_rep(mix_total, pop, config, EnergyInterpolation::population_proportional);
        CHECK(e.value_at(1) == 5.45875);  // anchored bit-exactly
        CHECK(e.value_at(1800) == doctest::Approx(20.3508).epsilon(1e-12));
        CHECK(e.is_consecutive());
        CHECK(e.last_year() == 1970);
        const double mid_expected = 5.45875 + (20.3508 - 5.45875) * (900.0 - 1.0) / 1799.0;
        CHECK(e.value_at(900) == doctest::Approx(mid_expected).epsilon(1e-9));
    }
    SUBCASE("method A uses the constant growth factor") {
        const AnnualSeries e =
            build_e_rep(mix_total, pop, config, EnergyInterpolation::exponential_growth);
        const double a = growth_factor(5.45875, e.value_at(1800), 1799);
        CHECK(a == doctest::Approx(1.00073).epsilon(1e-5));
        CHECK(e.value_at(1000) == doctest::Approx(5.45875 * std::pow(a, 999.0)).epsilon(1e-9));
    }
    SUBCASE("decadal gaps fill linearly") {
        const AnnualSeries e =
            build_e_rep(mix_total, pop, config, EnergyInterpolation::population_proportional);
        const double v1810 = twh_to_ej(5653.0 + 100.0);
        const double v1820 = twh_to_ej(5653.0 + 200.0);
        CHECK(e.value_at(1815) == doctest::Approx((v1810 + v1820) / 2.0).epsilon(1e-12));
    }
    SUBCASE("a wrong 1800 anchor is rejected") {
        std::vector<double> bad = twh;
        bad[0] = 4000.0;
        const AnnualSeries wrong("E_total_twh", UnitTag::twh(), years, bad);
        CHECK_THROWS_AS(
            build_e_rep(wrong, pop, config, EnergyInterpolation::population_proportional),
            std::invalid_argument);
    }
}

TEST_CASE("build_morris_extension on an all-baseline table") {
    // One group at the 4000 kcal floor and 1e6 people reproduces the unit
    // conversion oracle; shares collapse everything onto hunter-gatherers.
    MorrisTable table;
    table.rows = {{-10, 4000, 4000, 4000, 4000}, {1, 4000, 4000, 4000, 4000}};
    table.shares = {0.0, 0.0, 0.0, 1.0};
    const AnnualSeries pop = constant_series("Pop", UnitTag::person(), -10, 1, 1e6);

    ReconstructionConfig config;
    const double expected = kcal_capture_to_ej_per_year(4000.0, 1e6);
    config.year1_energy_ej = expected;

    const MorrisExtension ext = build_morris_extension(table, pop, config);
    CHECK(ext.energy.value_at(1) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(ext.energy.value_at(-10) == doctest::Approx(6.1129e-3).epsilon(1e-4));
    // GK constancy by construction.
    for (std::size_t i = 0; i < ext.energy.size(); ++i) {
        CHECK(ext.gwp.values()[i] ==
              doctest::Approx(ext.energy.values()[i] * config.gk_ratio_tusd_per_ej)
                  .epsilon(1e-15));
    }
}

TEST_CASE("morris table validation") {
    MorrisTable table;
    table.rows = {{1, 4000, 4000, 4000, 3999}};
    CHECK_THROWS_AS(table.validate(), std::invalid_argument);  // below floor

    table.rows = {{1, 4100, 4100, 4100, 4000}};
    table.shares = {0.5, 0.5, 0.5, 0.5};
    CHECK_THROWS_AS(table.validate(), std::invalid_argument);  // shares don't sum to 1

    const auto shares = MorrisTable::default_shares();
    CHECK(shares[0] == doctest::Approx(34.0 / 226.0));
    CHECK(shares[3] == doctest::Approx(112.0 / 226.0));
    CHECK(shares[0] + shares[1] + shares[2] + shares[3] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("build_morris_extension rejects a table that misses the anchor") {
    MorrisTable table;
    table.rows = {{-10, 4000, 4000, 4000, 4000}, {1, 4000, 4000, 4000, 4000}};
    table.shares = {0.0, 0.0, 0.0, 1.0};
    const AnnualSeries pop = constant_series("Pop", UnitTag::person(), -10, 1, 1e6);
    ReconstructionConfig config;  // default 5.45875 EJ anchor, far from the toy value
    CHECK_THROWS_AS(build_morris_extension(table, pop, config), std::runtime_error);
}

TEST_CASE("build_w") {
    const AnnualSeries y = constant_series("Y", UnitTag::trillion_usd(1990), 1, 5, 1.0);
    SUBCASE("cumulative values with no truncation") {
        const AnnualSeries w = build_w(y, 1, 0);
        CHECK(w.values() == std::vector<double>{1, 2, 3, 4, 5});
        CHECK(!w.unreliable_before().has_value());
    }
    SUBCASE("truncation flags, values stay") {
        const AnnualSeries w = build_w(y, 1, 3);
        CHECK(w.size() == 5);
        CHECK(w.unreliable_before() == 4);
    }
    SUBCASE("negative truncation rejected") {
        CHECK_THROWS_AS(build_w(y, 1, -1), std::invalid_argument);
    }
}

TEST_CASE("project_w_lw_backward") {
    const WLwFitParams fit = kWLwFitFigure;
    const AnnualSeries w = project_w_lw_backward(fit, YearRange(-14000, 0));
    CHECK(w.value_at(0) == doctest::Approx(244.064).epsilon(1e-12));  // amplitude at x=0
    // Doubling time oracle: ln 2 / rate.
    const double doubling = std::log(2.0) / fit.rate;
    CHECK(doubling == doctest::Approx(1238.6).epsilon(1e-4));
    const int y = -7000;
    CHECK(w.value_at(y + static_cast<int>(std::round(doubling))) ==
          doctest::Approx(2.0 * w.value_at(y)).epsilon(1e-3));
    // The alternate published parameterization stays selectable.
    CHECK(kWLwFitText.amplitude == doctest::Approx(2.440));
    CHECK(kWLwFitText.rate == doctest::Approx(5.965e-4));
    CHECK_THROWS_AS(project_w_lw_backward({0.0, 1e-4}, YearRange(0, 1)), std::invalid_argument);
}

TEST_CASE("build_population") {
    SUBCASE("single source passes through with linear fill") {
        const std::vector<AnnualSeries> sources{
            AnnualSeries("a", UnitTag::person(), {0, 10}, {100.0, 200.0})};
        const AnnualSeries pop = build_population(sources);
        CHECK(pop.size() == 11);
        CHECK(pop.value_at(5) == doctest::Approx(150.0));
    }
    SUBCASE("two constant sources average") {
        const std::vector<AnnualSeries> sources{
            constant_series("a", UnitTag::person(), 0, 5, 200e6),
            constant_series("b", UnitTag::person(), 0, 5, 300e6)};
        const AnnualSeries pop = build_population(sources);
        for (double v : pop.values()) {
            CHECK(v == doctest::Approx(250e6));
        }
    }
    SUBCASE("years covered by only one source use that source") {
        const std::vector<AnnualSeries> sources{
            AnnualSeries("a", UnitTag::person(), {0, 4}, {100.0, 100.0}),
            AnnualSeries("b", UnitTag::person(), {4, 8}, {300.0, 300.0})};
        const AnnualSeries pop = build_population(sources);
        CHECK(pop.value_at(0) == 100.0);
        CHECK(pop.value_at(4) == doctest::Approx(200.0));
        CHECK(pop.value_at(8) == 300.0);
    }
    SUBCASE("errors") {
        const std::vector<AnnualSeries> none{};
        CHECK_THROWS_AS(build_population(none), std::invalid_argument);
        const std::vector<AnnualSeries> wrong_unit{
            constant_series("a", UnitTag::ej(), 0, 5, 1.0)};
        CHECK_THROWS_AS(build_population(wrong_unit), std::invalid_argument);
    }
}
