#pragma once

#include <string>
#include <string_view>

#include "scatlen/error.hpp"

namespace scatlen {

// CODATA 2018 values. All internal computation is in SI; unit tags exist
// only at I/O boundaries.
namespace constants {
inline constexpr double pi      = 3.14159265358979323846;
inline constexpr double k_B     = 1.380649e-23;        // J/K, exact
inline constexpr double h       = 6.62607015e-34;      // J s, exact
inline constexpr double hbar    = 1.054571817e-34;     // J s
inline constexpr double a0      = 5.29177210903e-11;   // m
inline constexpr double u_mass  = 1.66053906660e-27;   // kg
inline constexpr double hartree = 4.3597447222071e-18; // J

// One atomic unit of a C6 dispersion coefficient, E_h * a0^6 = 9.573e-80 J m^6.
inline constexpr double c6_au = hartree * (a0 * a0) * (a0 * a0) * (a0 * a0);
} // namespace constants

// Collision partner data. Identical-particle collisions only, so the
// reduced mass is exactly half the atomic mass.
struct Isotope {
    std::string label;
    double mass_u = 0.0;

    double mass() const { return mass_u * constants::u_mass; }
    double reduced_mass() const { return 0.5 * mass(); }

    static Isotope cr52() { return {"Cr-52", 51.9405}; }
    static Isotope cr50() { return {"Cr-50", 49.9460}; }
    static Isotope from_label(std::string_view label);
};

enum class Unit {
    // length
    meter,
    nanometer,
    bohr,
    // energy (temperature- and frequency-equivalents included)
    joule,
    kelvin_energy,
    hertz_energy,
    // C6 dispersion coefficient
    joule_m6,
    au_c6,
    // temperature
    kelvin,
    millikelvin,
    microkelvin,
    nanokelvin,
};

enum class Dimension { length, energy, c6, temperature };

Dimension dimension_of(Unit u);
const char* unit_name(Unit u);

// Exact linear conversion within one dimension family. Throws an input
// error on incompatible tags.
double convert(double value, Unit from, Unit to);

// Parses suffixed quantities such as "170a0", "1050au", "42uK". A bare
// number is read as SI (m, J, J m^6, K depending on the dimension).
double parse_quantity(std::string_view text, Dimension dim);

} // namespace scatlen
