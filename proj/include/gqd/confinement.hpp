#ifndef GQD_CONFINEMENT_HPP
#define GQD_CONFINEMENT_HPP

// Scalar confinement formulas: effective-mass (Brus) gap, surface-to-volume
// ratio of a sphere and the Coulomb charging energy of a dot.

#include <cmath>

#include "gqd/constants.hpp"
#include "gqd/errors.hpp"

namespace gqd {

/// Effective masses are fractions of the electron rest mass.
struct BrusParams
{
    double e_gap_bulk = 0.0; // eV
    double m_e_eff = 1.0;
    double m_h_eff = 1.0;
    double radius = 1.0; // nm

    void validate() const
    {
        auto finite = [](double v) { return std::isfinite(v); };
        detail::require(finite(e_gap_bulk) && e_gap_bulk >= 0.0, "bulk gap must be >= 0 eV");
        detail::require(finite(m_e_eff) && m_e_eff > 0.0, "electron effective mass must be > 0");
        detail::require(finite(m_h_eff) && m_h_eff > 0.0, "hole effective mass must be > 0");
        detail::require(finite(radius) && radius > 0.0, "radius must be > 0 nm");
    }
};

/// Confinement part h^2/(8 r^2) (1/m_e + 1/m_h), in eV.
inline double brus_confinement(const BrusParams &p, const PhysicalConstants &pc = default_constants())
{
    p.validate();
    const double r = units::nm_to_m(p.radius);
    const double inv_mass = 1.0 / (p.m_e_eff * pc.m0) + 1.0 / (p.m_h_eff * pc.m0);
    return units::joule_to_ev(pc.h * pc.h / (8.0 * r * r) * inv_mass);
}

inline double brus_gap(const BrusParams &p, const PhysicalConstants &pc = default_constants())
{
    return p.e_gap_bulk + brus_confinement(p, pc);
}

/// S/V = 6/D for a sphere of diameter D (metres); result in 1/m.
inline double surface_to_volume(double diameter_m)
{
    if (!std::isfinite(diameter_m) || diameter_m <= 0.0)
        throw DomainError("diameter must be finite and > 0 m");
    return 6.0 / diameter_m;
}

/// E_C = e^2 / 2C for a capacitance in farads; result in eV.
inline double charging_energy(double capacitance_f, const PhysicalConstants &pc = default_constants())
{
    if (!std::isfinite(capacitance_f) || capacitance_f <= 0.0)
        throw DomainError("capacitance must be finite and > 0 F");
    return pc.e_charge / (2.0 * capacitance_f);
}

/// Inverse of charging_energy: capacitance (F) giving a charging energy (eV).
inline double capacitance_for_charging_energy(double e_c_ev, const PhysicalConstants &pc = default_constants())
{
    if (!std::isfinite(e_c_ev) || e_c_ev <= 0.0)
        throw DomainError("charging energy must be finite and > 0 eV");
    return pc.e_charge / (2.0 * e_c_ev);
}

} // namespace gqd

#endif
