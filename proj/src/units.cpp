#include "scatlen/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace scatlen {

namespace {

struct UnitInfo {
    Unit unit;
    Dimension dim;
    double to_si; // multiply to get the family's SI base (m, J, J m^6, K)
    const char* name;
};

constexpr std::array<UnitInfo, 12> k_units = {{
    {Unit::meter, Dimension::length, 1.0, "m"},
    {Unit::nanometer, Dimension::length, 1e-9, "nm"},
    {Unit::bohr, Dimension::length, constants::a0, "a0"},
    {Unit::joule, Dimension::energy, 1.0, "J"},
    {Unit::kelvin_energy, Dimension::energy, constants::k_B, "K"},
    {Unit::hertz_energy, Dimension::energy, constants::h, "Hz"},
    {Unit::joule_m6, Dimension::c6, 1.0, "Jm6"},
    {Unit::au_c6, Dimension::c6, constants::c6_au, "au"},
    {Unit::kelvin, Dimension::temperature, 1.0, "K"},
    {Unit::millikelvin, Dimension::temperature, 1e-3, "mK"},
    {Unit::microkelvin, Dimension::temperature, 1e-6, "uK"},
    {Unit::nanokelvin, Dimension::temperature, 1e-9, "nK"},
}};

const UnitInfo& info(Unit u)
{
    for (const auto& e : k_units)
        if (e.unit == u)
            return e;
    fail_input("unknown unit tag");
}

} // namespace

Dimension dimension_of(Unit u) { return info(u).dim; }
const char* unit_name(Unit u) { return info(u).name; }

double convert(double value, Unit from, Unit to)
{
    const auto& a = info(from);
    const auto& b = info(to);
    if (a.dim != b.dim)
        fail_input(std::string("dimension mismatch: cannot convert ") + a.name + " to " + b.name);
    if (from == to)
        return value;
    return value * (a.to_si / b.to_si);
}

Isotope Isotope::from_label(std::string_view label)
{
    if (label == "Cr-52" || label == "52Cr" || label == "Cr52")
        return cr52();
    if (label == "Cr-50" || label == "50Cr" || label == "Cr50")
        return cr50();
    fail_input("unknown isotope label: " + std::string(label));
}

double parse_quantity(std::string_view text, Dimension dim)
{
    if (text.empty())
        fail_input("empty quantity");

    // split numeric prefix from the unit suffix
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.') {
            ++pos;
            continue;
        }
        if ((c == 'e' || c == 'E') && pos + 1 < text.size()) {
            const char n = text[pos + 1];
            if (std::isdigit(static_cast<unsigned char>(n)) || n == '+' || n == '-') {
                pos += 2;
                continue;
            }
        }
        break;
    }

    const std::string num(text.substr(0, pos));
    std::string_view suffix = text.substr(pos);
    if (num.empty())
        fail_input("malformed quantity: " + std::string(text));

    char* end = nullptr;
    const double value = std::strtod(num.c_str(), &end);
    if (end != num.c_str() + num.size())
        fail_input("malformed number in quantity: " + std::string(text));

    if (suffix.empty()) {
        // bare numbers are SI in the requested dimension
        return value;
    }
    for (const auto& e : k_units) {
        if (suffix == e.name && e.dim == dim)
            return value * e.to_si;
    }
    fail_input("unit '" + std::string(suffix) + "' does not belong to the expected dimension");
}

} // namespace scatlen
