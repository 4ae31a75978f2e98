#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "thermoecon/analysis.hpp"
#include "thermoecon/annual_series.hpp"
#include "thermoecon/ingest.hpp"
#include "thermoecon/model.hpp"
#include "thermoecon/pipeline.hpp"
#include "thermoecon/reconstruction.hpp"
#include "thermoecon/units.hpp"

namespace py = pybind11;
using namespace thermoecon;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Historical energy/GWP reconstruction and falsification toolkit";

    // -- series ------------------------------------------------------------
    py::class_<YearRange>(m, "YearRange")
        .def(py::init<int, int>(), py::arg("start"), py::arg("end"))
        .def_readonly("start", &YearRange::start)
        .def_readonly("end", &YearRange::end)
        .def("span", &YearRange::span)
        .def("contains", &YearRange::contains)
        .def("__repr__", [](const YearRange& r) {
            return "YearRange(" + std::to_string(r.start) + ", " + std::to_string(r.end) + ")";
        });

    py::class_<AnnualSeries>(m, "AnnualSeries")
        .def(py::init([](const std::string& label, const std::string& unit,
                         std::vector<int> years, std::vector<double> values) {
                 return AnnualSeries(label, UnitTag::parse(unit), std::move(years),
                                     std::move(values));
             }),
             py::arg("label"), py::arg("unit"), py::arg("years"), py::arg("values"))
        .def_property_readonly("label", &AnnualSeries::label)
        .def_property_readonly("unit", [](const AnnualSeries& s) { return s.unit().str(); })
        .def_property_readonly("years", &AnnualSeries::years)
        .def_property_readonly("values", &AnnualSeries::values)
        .def_property_readonly("unreliable_before", &AnnualSeries::unreliable_before)
        .def("__len__", &AnnualSeries::size)
        .def("first_year", &AnnualSeries::first_year)
        .def("last_year", &AnnualSeries::last_year)
        .def("has_year", &AnnualSeries::has_year)
        .def("value_at", &AnnualSeries::value_at, py::arg("year"))
        .def("slice", &AnnualSeries::slice, py::arg("range"))
        .def("with_label", &AnnualSeries::with_label, py::arg("label"))
        .def("__repr__", [](const AnnualSeries& s) {
            return "AnnualSeries('" + s.label() + "', unit='" + s.unit().str() + "', " +
                   std::to_string(s.size()) + " years " + std::to_string(s.first_year()) + ".." +
                   std::to_string(s.last_year()) + ")";
        });

    m.def("growth_factor", &growth_factor, py::arg("n0"), py::arg("ny"), py::arg("span"));
    m.def("fill_exponential", &fill_exponential, py::arg("series"), py::arg("range"));
    m.def("fill_linear", &fill_linear, py::arg("series"), py::arg("range"));
    m.def("fill_proportional", &fill_proportional, py::arg("anchors"), py::arg("reference"),
          py::arg("range"));
    m.def("cumulative_sum", &cumulative_sum, py::arg("series"), py::arg("from_year"));
    m.def("diff_yoy", &diff_yoy, py::arg("series"));
    m.def("ratio", &ratio, py::arg("numerator"), py::arg("denominator"));

    // -- units ---------------------------------------------------------------
    m.def("twh_to_ej", &twh_to_ej, py::arg("twh"));
    m.def("ej_to_twh", &ej_to_twh, py::arg("ej"));
    m.def("kcal_capture_to_ej_per_year", &kcal_capture_to_ej_per_year,
          py::arg("kcal_per_cap_day"), py::arg("population"));
    m.def("energy_to_gk_dollars", &energy_to_gk_dollars, py::arg("energy_ej"),
          py::arg("tusd_per_ej"));

    // -- model ---------------------------------------------------------------
    py::class_<FirmProduction>(m, "FirmProduction")
        .def(py::init([](double lambda_j_per_usd, double production_usd) {
                 return FirmProduction{lambda_j_per_usd, production_usd};
             }),
             py::arg("lambda_j_per_usd"), py::arg("production_usd"))
        .def_readwrite("lambda_j_per_usd", &FirmProduction::lambda_j_per_usd)
        .def_readwrite("production_usd", &FirmProduction::production_usd);

    py::class_<EbcdInputs>(m, "EbcdInputs")
        .def(py::init([](double capital_energy_j, double capital_usd, double labour_energy_j,
                         double labour_usd, double capital_share) {
                 return EbcdInputs{capital_energy_j, capital_usd, labour_energy_j, labour_usd,
                                   capital_share};
             }),
             py::arg("capital_energy_j"), py::arg("capital_usd"), py::arg("labour_energy_j"),
             py::arg("labour_usd"), py::arg("capital_share") = 2.0 / 3.0)
        .def_readwrite("capital_share", &EbcdInputs::capital_share)
        .def("labour_share", &EbcdInputs::labour_share);

    py::class_<EnergyChainYear>(m, "EnergyChainYear")
        .def_readonly("year", &EnergyChainYear::year)
        .def_readonly("gibbs_j", &EnergyChainYear::gibbs_j)
        .def_readonly("conversion_efficiency", &EnergyChainYear::conversion_efficiency)
        .def_readonly("available_j", &EnergyChainYear::available_j)
        .def_readonly("work_efficiency", &EnergyChainYear::work_efficiency)
        .def_readonly("exergy_j", &EnergyChainYear::exergy_j);

    py::class_<GrowthSpec>(m, "GrowthSpec")
        .def(py::init([](double initial_value, double interest_rate) {
                 return GrowthSpec{initial_value, interest_rate};
             }),
             py::arg("initial_value"), py::arg("interest_rate"))
        .def_readwrite("initial_value", &GrowthSpec::initial_value)
        .def_readwrite("interest_rate", &GrowthSpec::interest_rate)
        .def("factor", &GrowthSpec::factor);

    m.def(
        "lambda_aggregate",
        [](const std::vector<FirmProduction>& firms, double gwp) {
            return lambda_aggregate(firms, gwp);
        },
        py::arg("firms"), py::arg("gwp"));
    m.def("ebcd_lambda", &ebcd_lambda, py::arg("inputs"));
    m.def("production_from_energy", &production_from_energy, py::arg("available_energy_j"),
          py::arg("lambda_agg"));
    m.def("lambda_from_observables", &lambda_from_observables, py::arg("available_energy_j"),
          py::arg("production_usd"));
    m.def("energy_chain", &energy_chain, py::arg("gibbs"), py::arg("conversion_efficiency"),
          py::arg("work_efficiency"));
    m.def(
        "growth_series",
        [](const GrowthSpec& spec, const YearRange& range, const std::string& label) {
            return growth_series(spec, range, UnitTag::trillion_usd(1990), label);
        },
        py::arg("spec"), py::arg("range"), py::arg("label") = "growth");
    m.def("w_ratio", &w_ratio, py::arg("cumulative_usd"), py::arg("energy_ej"));

    // -- analysis --------------------------------------------------------------
    py::class_<LinearFit>(m, "LinearFit")
        .def_readonly("slope", &LinearFit::slope)
        .def_readonly("intercept", &LinearFit::intercept)
        .def_readonly("r2", &LinearFit::r2)
        .def_readonly("x_origin", &LinearFit::x_origin)
        .def("at", &LinearFit::at, py::arg("year"));

    py::class_<ExpFit>(m, "ExpFit")
        .def_readonly("amplitude", &ExpFit::amplitude)
        .def_readonly("rate", &ExpFit::rate)
        .def_readonly("r2", &ExpFit::r2)
        .def_readonly("x_origin", &ExpFit::x_origin)
        .def("at", &ExpFit::at, py::arg("year"));

    py::class_<ConstancyVerdict>(m, "ConstancyVerdict")
        .def_readonly("fit", &ConstancyVerdict::fit)
        .def_readonly("relative_slope", &ConstancyVerdict::relative_slope)
        .def_readonly("threshold", &ConstancyVerdict::threshold)
        .def_readonly("falsified", &ConstancyVerdict::falsified);

    py::class_<InflationReport>(m, "InflationReport")
        .def_readonly("de_dt", &InflationReport::de_dt)
        .def_readonly("cpi", &InflationReport::cpi)
        .def_readonly("ratio", &InflationReport::ratio)
        .def_readonly("zero_crossings", &InflationReport::zero_crossings)
        .def_readonly("outliers", &InflationReport::outliers)
        .def_readonly("discontinuity_at_zero", &InflationReport::discontinuity_at_zero);

    py::class_<MeanRatio>(m, "MeanRatio")
        .def_readonly("mean", &MeanRatio::mean)
        .def_readonly("sigma", &MeanRatio::sigma);

    m.def("fit_linear", &fit_linear, py::arg("series"), py::arg("range"), py::arg("x_origin"));
    m.def("fit_exponential", &fit_exponential, py::arg("series"), py::arg("range"),
          py::arg("x_origin"));
    m.def("test_w_over_e_constancy", &test_w_over_e_constancy, py::arg("w"), py::arg("e"),
          py::arg("range"), py::arg("threshold") = 0.05);
    m.def(
        "test_de_dt_inflation",
        [](const AnnualSeries& energy, const AnnualSeries& cpi, double outlier_cutoff) {
            return test_de_dt_inflation(energy, cpi, outlier_cutoff);
        },
        py::arg("energy"), py::arg("cpi"), py::arg("outlier_cutoff") = 10.0);
    m.def("mean_ratio", &mean_ratio, py::arg("a"), py::arg("b"));

    // -- reconstruction -----------------------------------------------------
    py::class_<WLwFitParams>(m, "WLwFitParams")
        .def(py::init([](double amplitude, double rate) {
                 return WLwFitParams{amplitude, rate};
             }),
             py::arg("amplitude"), py::arg("rate"))
        .def_readwrite("amplitude", &WLwFitParams::amplitude)
        .def_readwrite("rate", &WLwFitParams::rate);
    m.attr("W_LW_FIT_FIGURE") = WLwFitParams(kWLwFitFigure);
    m.attr("W_LW_FIT_TEXT") = WLwFitParams(kWLwFitText);

    py::class_<ReconstructionConfig>(m, "ReconstructionConfig")
        .def(py::init<>())
        .def_readwrite("year1_energy_ej", &ReconstructionConfig::year1_energy_ej)
        .def_readwrite("gk_ratio_tusd_per_ej", &ReconstructionConfig::gk_ratio_tusd_per_ej)
        .def_readwrite("energy_1800_ej", &ReconstructionConfig::energy_1800_ej)
        .def_readwrite("w_lw_fit", &ReconstructionConfig::w_lw_fit)
        .def_readwrite("truncate_w_years", &ReconstructionConfig::truncate_w_years);

    py::enum_<EnergyInterpolation>(m, "EnergyInterpolation")
        .value("EXPONENTIAL_GROWTH", EnergyInterpolation::exponential_growth)
        .value("POPULATION_PROPORTIONAL", EnergyInterpolation::population_proportional);

    py::class_<MorrisTable>(m, "MorrisTable")
        .def_static("from_csv", &MorrisTable::from_csv, py::arg("path"))
        .def_readwrite("shares", &MorrisTable::shares)
        .def_static("default_shares", &MorrisTable::default_shares);

    py::class_<MorrisExtension>(m, "MorrisExtension")
        .def_readonly("energy", &MorrisExtension::energy)
        .def_readonly("gwp", &MorrisExtension::gwp);

    m.def("build_y_rep", &build_y_rep, py::arg("owid_gwp"), py::arg("fred_gwp"));
    m.def("build_e_rep", &build_e_rep, py::arg("energy_twh_total"), py::arg("population"),
          py::arg("config") = ReconstructionConfig{},
          py::arg("method") = EnergyInterpolation::population_proportional);
    m.def("build_morris_extension", &build_morris_extension, py::arg("table"),
          py::arg("population"), py::arg("config") = ReconstructionConfig{});
    m.def("build_w", &build_w, py::arg("gwp"), py::arg("start_year"),
          py::arg("truncate_years") = 0);
    m.def("project_w_lw_backward", &project_w_lw_backward, py::arg("fit"), py::arg("range"));
    m.def(
        "build_population",
        [](const std::vector<AnnualSeries>& sources) { return build_population(sources); },
        py::arg("sources"));

    // -- pipeline -----------------------------------------------------------
    py::class_<DatasetCatalog>(m, "DatasetCatalog")
        .def(py::init([](const std::filesystem::path& data_dir, const ReconstructionConfig& cfg,
                         EnergyInterpolation method) {
                 return DatasetCatalog(data_dir, cfg, method);
             }),
             py::arg("data_dir"), py::arg("config") = ReconstructionConfig{},
             py::arg("method") = EnergyInterpolation::population_proportional)
        .def("get", &DatasetCatalog::get, py::arg("label"),
             py::return_value_policy::reference_internal)
        .def("is_known", &DatasetCatalog::is_known, py::arg("label"))
        .def_static("output_labels", &DatasetCatalog::output_labels)
        .def_static("known_labels", &DatasetCatalog::known_labels);

    py::class_<SupplementColumns>(m, "SupplementColumns")
        .def_readonly("gwp", &SupplementColumns::gwp)
        .def_readonly("energy", &SupplementColumns::energy)
        .def_readonly("wealth", &SupplementColumns::wealth)
        .def_readonly("wealth_over_energy", &SupplementColumns::wealth_over_energy)
        .def_readonly("crosscheck_warning_years", &SupplementColumns::crosscheck_warning_years);
    m.def(
        "read_supplement",
        [](const std::filesystem::path& path) { return read_supplement(path); },
        py::arg("path"));

    m.def(
        "write_outputs",
        [](const std::vector<AnnualSeries>& series, const std::string& format,
           const std::filesystem::path& dir) {
            write_outputs(series, {},
                          format == "json" ? OutputFormat::json : OutputFormat::csv, dir);
        },
        py::arg("series"), py::arg("format"), py::arg("dir"));
}
