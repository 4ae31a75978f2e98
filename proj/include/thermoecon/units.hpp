#pragma once

#include <string>

namespace thermoecon {

/// Dimension tag carried by every series and conversion result.
///
/// Currency tags carry an explicit base year (metadata only; no deflator
/// chain is applied anywhere). Ratio tags hold one numerator and one
/// denominator atom and simplify X/X to dimensionless; nested ratios are
/// rejected.
class UnitTag {
public:
    enum class Kind {
        ej,
        twh,
        joule,
        kcal_per_capita_day,
        trillion_usd,  // carries base_year
        gk_dollar,
        usd_per_ej,
        person,
        percent,
        dimensionless,
        ratio,
    };

    UnitTag() = default;

    static UnitTag ej() { return UnitTag(Kind::ej); }
    static UnitTag twh() { return UnitTag(Kind::twh); }
    static UnitTag joule() { return UnitTag(Kind::joule); }
    static UnitTag kcal_per_capita_day() { return UnitTag(Kind::kcal_per_capita_day); }
    static UnitTag trillion_usd(int base_year);
    static UnitTag gk_dollar() { return UnitTag(Kind::gk_dollar); }
    static UnitTag usd_per_ej() { return UnitTag(Kind::usd_per_ej); }
    static UnitTag person() { return UnitTag(Kind::person); }
    static UnitTag percent() { return UnitTag(Kind::percent); }
    static UnitTag dimensionless() { return UnitTag(Kind::dimensionless); }

    /// Composes num/den, simplifying X/X to dimensionless. Throws
    /// std::invalid_argument if either side is itself a ratio (unless the
    /// two sides are equal, which simplifies first).
    static UnitTag make_ratio(const UnitTag& num, const UnitTag& den);

    Kind kind() const { return kind_; }
    /// Base year of a trillion_usd tag (0 for every other kind).
    int base_year() const { return base_year_; }
    UnitTag numerator() const;
    UnitTag denominator() const;

    /// Canonical text form, e.g. "EJ", "trillion_USD_1990", "EJ/percent".
    std::string str() const;
    /// Inverse of str(). Throws std::invalid_argument on unknown text.
    static UnitTag parse(const std::string& text);

    bool operator==(const UnitTag& other) const;
    bool operator!=(const UnitTag& other) const { return !(*this == other); }

private:
    explicit UnitTag(Kind k, int base_year = 0) : kind_(k), base_year_(base_year) {}

    Kind kind_ = Kind::dimensionless;
    int base_year_ = 0;
    // Flattened ratio components (valid only when kind_ == Kind::ratio).
    Kind num_kind_ = Kind::dimensionless;
    int num_base_year_ = 0;
    Kind den_kind_ = Kind::dimensionless;
    int den_base_year_ = 0;
};

// Conversion constants.
inline constexpr double kEjPerTwh = 0.0036;
inline constexpr double kJoulesPerKcal = 4184.0;
inline constexpr double kDaysPerYear = 365.25;

/// TWh -> EJ at 0.0036 EJ per TWh. Throws on negative input.
double twh_to_ej(double twh);
/// Exact inverse of twh_to_ej.
double ej_to_twh(double ej);

/// Per-capita daily energy capture to EJ per year:
/// kcal/cap/day * 4184 J/kcal * 365.25 day/yr * population / 1e18.
/// Throws on negative inputs.
double kcal_capture_to_ej_per_year(double kcal_per_cap_day, double population);

/// EJ to trillion dollars via a $/EJ valuation ratio. Throws unless ratio > 0.
double energy_to_gk_dollars(double energy_ej, double tusd_per_ej);

}  // namespace thermoecon
