// Randomized property suite. Seeds are fixed so failures reproduce.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "thermoecon/analysis.hpp"
#include "thermoecon/ingest.hpp"
#include "thermoecon/model.hpp"
#include "thermoecon/reconstruction.hpp"
#include "test_util.hpp"

using namespace thermoecon;

namespace {

constexpr int kInstances = 200;

AnnualSeries random_series(std::mt19937_64& rng, int min_len = 2, int max_len = 60,
                           double lo = 0.1, double hi = 100.0) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> start_dist(-2000, 2000);
    std::uniform_real_distribution<double> value_dist(lo, hi);
    const int n = len_dist(rng);
    const int start = start_dist(rng);
    std::vector<int> years;
    std::vector<double> values;
    for (int i = 0; i < n; ++i) {
        years.push_back(start + i);
        values.push_back(value_dist(rng));
    }
    return AnnualSeries("rand", UnitTag::ej(), std::move(years), std::move(values));
}

}  // namespace

TEST_CASE("telescoping: cumulative_sum(diff_yoy(S)) + S(first) == S") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < kInstances; ++i) {
        const AnnualSeries s = random_series(rng);
        const AnnualSeries d = diff_yoy(s);
        const AnnualSeries c = cumulative_sum(d, d.first_year());
        for (std::size_t k = 0; k < c.size(); ++k) {
            const double reconstructed = c.values()[k] + s.values()[0];
            CHECK(reconstructed ==
                  doctest::Approx(s.value_at(c.years()[k])).epsilon(1e-9));
        }
    }
}

TEST_CASE("cumulative_sum is strictly increasing iff inputs are positive") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < kInstances; ++i) {
        const AnnualSeries s = random_series(rng, 3, 40, 0.01, 10.0);
        const AnnualSeries w = cumulative_sum(s, s.first_year());
        for (std::size_t k = 1; k < w.size(); ++k) {
            CHECK(w.values()[k] > w.values()[k - 1]);
        }
    }
}

TEST_CASE("growth_factor round-trip: n0 * a^span == ny") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> value_dist(1e-6, 1e6);
    std::uniform_int_distribution<int> span_dist(1, 5000);
    for (int i = 0; i < kInstances; ++i) {
        const double n0 = value_dist(rng);
        const double ny = value_dist(rng);
        const int span = span_dist(rng);
        const double a = growth_factor(n0, ny, span);
        CHECK(n0 * std::pow(a, span) == doctest::Approx(ny).epsilon(1e-9));
    }
}

TEST_CASE("fill anchors are reproduced bit-exactly") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> value_dist(0.5, 50.0);
    std::uniform_int_distribution<int> gap_dist(1, 40);
    for (int i = 0; i < kInstances; ++i) {
        std::vector<int> years{0};
        std::vector<double> values{value_dist(rng)};
        for (int k = 0; k < 4; ++k) {
            years.push_back(years.back() + gap_dist(rng));
            values.push_back(value_dist(rng));
        }
        const AnnualSeries anchors("a", UnitTag::ej(), years, values);
        const YearRange range(years.front(), years.back());
        for (const AnnualSeries& filled :
             {fill_exponential(anchors, range), fill_linear(anchors, range)}) {
            CHECK(filled.is_consecutive());
            for (std::size_t k = 0; k < years.size(); ++k) {
                CHECK(filled.value_at(years[k]) == values[k]);
            }
        }
    }
}

TEST_CASE("fill_exponential is monotone between monotone anchors") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> step_dist(1.01, 2.0);
    std::uniform_int_distribution<int> gap_dist(2, 30);
    for (int i = 0; i < kInstances; ++i) {
        std::vector<int> years{0};
        std::vector<double> values{1.0};
        for (int k = 0; k < 3; ++k) {
            years.push_back(years.back() + gap_dist(rng));
            values.push_back(values.back() * step_dist(rng));
        }
        const AnnualSeries filled = fill_exponential(
            AnnualSeries("a", UnitTag::ej(), years, values), YearRange(0, years.back()));
        for (std::size_t k = 1; k < filled.size(); ++k) {
            CHECK(filled.values()[k] > filled.values()[k - 1]);
        }
    }
}

TEST_CASE("ratio(S, S) is one everywhere") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < kInstances; ++i) {
        const AnnualSeries s = random_series(rng);
        for (double v : ratio(s, s).values()) {
            CHECK(v == 1.0);
        }
    }
}

TEST_CASE("EBCD homogeneity: degree +1 in energy, degree -1 in currency") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 100.0);
    for (int i = 0; i < kInstances; ++i) {
        const EbcdInputs base{dist(rng), dist(rng), dist(rng), dist(rng),
                              std::uniform_real_distribution<double>(0.0, 1.0)(rng)};
        const double lambda = ebcd_lambda(base);
        const double c = dist(rng);
        const double d = dist(rng);

        EbcdInputs energy_scaled = base;
        energy_scaled.capital_energy_j *= c;
        energy_scaled.labour_energy_j *= c;
        CHECK(ebcd_lambda(energy_scaled) == doctest::Approx(c * lambda).epsilon(1e-9));

        EbcdInputs currency_scaled = base;
        currency_scaled.capital_usd *= d;
        currency_scaled.labour_usd *= d;
        CHECK(ebcd_lambda(currency_scaled) == doctest::Approx(lambda / d).epsilon(1e-9));
    }
}

TEST_CASE("production_from_energy and lambda_from_observables invert each other") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> dist(1e-3, 1e6);
    for (int i = 0; i < kInstances; ++i) {
        const double energy = dist(rng);
        const double production = dist(rng);
        const double lambda = lambda_from_observables(energy, production);
        CHECK(production_from_energy(energy, lambda) ==
              doctest::Approx(production).epsilon(1e-12));
        // And the other way around.
        const double y = production_from_energy(energy, lambda);
        CHECK(lambda_from_observables(energy, y) == doctest::Approx(lambda).epsilon(1e-12));
    }
}

TEST_CASE("energy chain ordering: exergy <= available <= gibbs") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    std::uniform_real_distribution<double> energy(0.0, 1e6);
    for (int i = 0; i < kInstances; ++i) {
        std::vector<int> years;
        std::vector<double> g, a, e;
        for (int y = 0; y < 20; ++y) {
            years.push_back(y);
            g.push_back(energy(rng));
            a.push_back(frac(rng));
            e.push_back(frac(rng));
        }
        const auto chain = energy_chain(AnnualSeries("g", UnitTag::joule(), years, g),
                                        AnnualSeries("a", UnitTag::dimensionless(), years, a),
                                        AnnualSeries("e", UnitTag::dimensionless(), years, e));
        for (const EnergyChainYear& y : chain) {
            CHECK(y.exergy_j <= y.available_j);
            CHECK(y.available_j <= y.gibbs_j);
            CHECK(y.available_j == y.conversion_efficiency * y.gibbs_j);
            CHECK(y.exergy_j == y.work_efficiency * y.available_j);
        }
    }
}

TEST_CASE("growth_series monotonicity trichotomy") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> rate_dist(-0.9, 1.0);
    std::uniform_real_distribution<double> y0_dist(0.1, 1e4);
    for (int i = 0; i < kInstances; ++i) {
        const double rate = rate_dist(rng);
        const GrowthSpec spec{y0_dist(rng), rate};
        const AnnualSeries s = growth_series(spec, YearRange(0, 30));
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (rate > 1e-12) {
                CHECK(s.values()[k] > s.values()[k - 1]);
            } else if (rate < -1e-12) {
                CHECK(s.values()[k] < s.values()[k - 1]);
            } else {
                CHECK(s.values()[k] == doctest::Approx(s.values()[k - 1]));
            }
        }
    }
}

TEST_CASE("OLS exactness on noise-free lines and exponentials") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    std::uniform_real_distribution<double> rate_dist(-0.05, 0.05);
    std::uniform_real_distribution<double> amp_dist(0.1, 100.0);
    for (int i = 0; i < kInstances; ++i) {
        const double slope = coef(rng);
        const double intercept = coef(rng);
        std::vector<int> years;
        std::vector<double> linear, exponential;
        const double amp = amp_dist(rng);
        const double rate = rate_dist(rng);
        for (int y = 0; y <= 40; ++y) {
            years.push_back(y);
            linear.push_back(slope * y + intercept);
            exponential.push_back(amp * std::exp(rate * y));
        }
        const LinearFit lf = fit_linear(AnnualSeries("l", UnitTag::ej(), years, linear),
                                        YearRange(0, 40), 0);
        CHECK(lf.slope == doctest::Approx(slope).epsilon(1e-9));
        CHECK(lf.intercept == doctest::Approx(intercept).epsilon(1e-9));
        if (std::abs(slope) > 1e-9) {
            CHECK(lf.r2 == doctest::Approx(1.0).epsilon(1e-12));
        }
        const ExpFit ef = fit_exponential(AnnualSeries("e", UnitTag::ej(), years, exponential),
                                          YearRange(0, 40), 0);
        CHECK(ef.amplitude == doctest::Approx(amp).epsilon(1e-9));
        CHECK(ef.rate == doctest::Approx(rate).epsilon(1e-9));
    }
}

TEST_CASE("fit_exponential recovers growth_series rates") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> i_dist(-0.2, 0.3);
    std::uniform_real_distribution<double> y0_dist(0.5, 100.0);
    for (int k = 0; k < kInstances; ++k) {
        const double interest = i_dist(rng);
        const GrowthSpec spec{y0_dist(rng), interest};
        const AnnualSeries s = growth_series(spec, YearRange(0, 25));
        const ExpFit fit = fit_exponential(s, YearRange(0, 25), 0);
        CHECK(fit.rate == doctest::Approx(std::log1p(interest)).epsilon(1e-9));
    }
}

TEST_CASE("CSV write/read round-trip is bit-exact on random series") {
    std::mt19937_64 rng(13);
    testutil::TempDir dir("prop_io");
    for (int i = 0; i < 100; ++i) {
        std::uniform_real_distribution<double> value_dist(-1e6, 1e6);
        std::uniform_int_distribution<int> len_dist(1, 50);
        std::uniform_int_distribution<int> start_dist(-15000, 2100);
        const int n = len_dist(rng);
        const int start = start_dist(rng);
        std::vector<int> years;
        std::vector<double> values;
        for (int k = 0; k < n; ++k) {
            years.push_back(start + k * (1 + (k % 3)));
            values.push_back(value_dist(rng) * std::pow(10.0, (i % 40) - 20));
        }
        const AnnualSeries original("S", UnitTag::ej(), years, values);
        const std::vector<AnnualSeries> list{original};
        write_outputs(list, {}, OutputFormat::csv, dir.path());

        CsvTableSpec spec;
        spec.path = dir.path() / "S.csv";
        spec.value_columns = {{"value", UnitTag::ej()}};
        const AnnualSeries back = read_series(spec)[0];
        REQUIRE(back.size() == original.size());
        for (std::size_t k = 0; k < back.size(); ++k) {
            CHECK(back.years()[k] == original.years()[k]);
            CHECK(back.values()[k] == original.values()[k]);
        }
    }
}
