#include "thermoecon/units.hpp"

#include <stdexcept>

namespace thermoecon {

namespace {

std::string atom_str(UnitTag::Kind kind, int base_year) {
    using Kind = UnitTag::Kind;
    switch (kind) {
        case Kind::ej: return "EJ";
        case Kind::twh: return "TWh";
        case Kind::joule: return "J";
        case Kind::kcal_per_capita_day: return "kcal/cap/day";
        case Kind::trillion_usd: return "trillion_USD_" + std::to_string(base_year);
        case Kind::gk_dollar: return "GK_USD";
        case Kind::usd_per_ej: return "USD/EJ";
        case Kind::person: return "person";
        case Kind::percent: return "percent";
        case Kind::dimensionless: return "dimensionless";
        case Kind::ratio: break;
    }
    throw std::logic_error("atom_str: not an atomic unit");
}

bool parse_atom(const std::string& text, UnitTag::Kind& kind, int& base_year) {
    using Kind = UnitTag::Kind;
    base_year = 0;
    if (text == "EJ") { kind = Kind::ej; return true; }
    if (text == "TWh") { kind = Kind::twh; return true; }
    if (text == "J") { kind = Kind::joule; return true; }
    if (text == "kcal/cap/day") { kind = Kind::kcal_per_capita_day; return true; }
    if (text == "GK_USD") { kind = Kind::gk_dollar; return true; }
    if (text == "USD/EJ") { kind = Kind::usd_per_ej; return true; }
    if (text == "person") { kind = Kind::person; return true; }
    if (text == "percent") { kind = Kind::percent; return true; }
    if (text == "dimensionless") { kind = Kind::dimensionless; return true; }
    const std::string prefix = "trillion_USD_";
    if (text.rfind(prefix, 0) == 0) {
        try {
            base_year = std::stoi(text.substr(prefix.size()));
        } catch (const std::exception&) {
            return false;
        }
        kind = Kind::trillion_usd;
        return true;
    }
    return false;
}

}  // namespace

UnitTag UnitTag::trillion_usd(int base_year) {
    if (base_year <= 0) {
        throw std::invalid_argument("trillion_usd unit requires an explicit base year");
    }
    return UnitTag(Kind::trillion_usd, base_year);
}

UnitTag UnitTag::make_ratio(const UnitTag& num, const UnitTag& den) {
    if (num == den) {
        return dimensionless();
    }
    if (den.kind_ == Kind::dimensionless) {
        return num;
    }
    if (num.kind_ == Kind::ratio || den.kind_ == Kind::ratio) {
        throw std::invalid_argument("nested ratio units are not supported: " + num.str() + " / " +
                                    den.str());
    }
    UnitTag tag(Kind::ratio);
    tag.num_kind_ = num.kind_;
    tag.num_base_year_ = num.base_year_;
    tag.den_kind_ = den.kind_;
    tag.den_base_year_ = den.base_year_;
    return tag;
}

UnitTag UnitTag::numerator() const {
    if (kind_ != Kind::ratio) {
        throw std::logic_error("numerator(): unit is not a ratio");
    }
    return UnitTag(num_kind_, num_base_year_);
}

UnitTag UnitTag::denominator() const {
    if (kind_ != Kind::ratio) {
        throw std::logic_error("denominator(): unit is not a ratio");
    }
    return UnitTag(den_kind_, den_base_year_);
}

std::string UnitTag::str() const {
    if (kind_ == Kind::ratio) {
        return atom_str(num_kind_, num_base_year_) + "/" + atom_str(den_kind_, den_base_year_);
    }
    return atom_str(kind_, base_year_);
}

UnitTag UnitTag::parse(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty unit tag");
    }
    Kind kind;
    int base_year;
    if (parse_atom(text, kind, base_year)) {
        return UnitTag(kind, base_year);
    }
    // Not an atom: try a num/den split on each '/'.
    for (std::size_t pos = text.find('/'); pos != std::string::npos; pos = text.find('/', pos + 1)) {
        Kind nk, dk;
        int nb, db;
        if (parse_atom(text.substr(0, pos), nk, nb) && parse_atom(text.substr(pos + 1), dk, db)) {
            return make_ratio(UnitTag(nk, nb), UnitTag(dk, db));
        }
    }
    throw std::invalid_argument("unknown unit tag: '" + text + "'");
}

bool UnitTag::operator==(const UnitTag& other) const {
    return kind_ == other.kind_ && base_year_ == other.base_year_ &&
           num_kind_ == other.num_kind_ && num_base_year_ == other.num_base_year_ &&
           den_kind_ == other.den_kind_ && den_base_year_ == other.den_base_year_;
}

double twh_to_ej(double twh) {
    if (twh < 0.0) {
        throw std::invalid_argument("twh_to_ej: negative energy");
    }
    return twh * kEjPerTwh;
}

double ej_to_twh(double ej) {
    if (ej < 0.0) {
        throw std::invalid_argument("ej_to_twh: negative energy");
    }
    return ej / kEjPerTwh;
}

double kcal_capture_to_ej_per_year(double kcal_per_cap_day, double population) {
    if (kcal_per_cap_day < 0.0 || population < 0.0) {
        throw std::invalid_argument("kcal_capture_to_ej_per_year: negative input");
    }
    return kcal_per_cap_day * kJoulesPerKcal * kDaysPerYear * population / 1e18;
}

double energy_to_gk_dollars(double energy_ej, double tusd_per_ej) {
    if (tusd_per_ej <= 0.0) {
        throw std::invalid_argument("energy_to_gk_dollars: ratio must be positive");
    }
    return energy_ej * tusd_per_ej;
}

}  // namespace thermoecon
