#ifndef GQD_CONSTANTS_HPP
#define GQD_CONSTANTS_HPP

// Physical constants and the unit conversions used across the library.
//
// Internal unit system: energies in eV, lengths in nm, time in s.
// SI inputs (farads, tesla, metres) are converted at the API boundary.
//
//   symbol        value                 unit    source
//   hbar          1.054571817e-34       J s     CODATA 2018 (exact via h)
//   h             6.62607015e-34        J s     CODATA 2018 (exact)
//   e             1.602176634e-19       C       CODATA 2018 (exact)
//   m0            9.1093837015e-31      kg      CODATA 2018
//   k_B           8.617333262e-5        eV/K    CODATA 2018 (exact)
//   v_F           1.0e6                 m/s     graphene Fermi velocity (tunable)
//   t             2.8                   eV      nearest-neighbour hopping (tunable)
//   a             0.142                 nm      carbon-carbon distance (tunable)
//   c             2.99792458e8          m/s     only used by the Gaussian-literal Landau form

#include <cmath>
#include <string>

#include "gqd/errors.hpp"

namespace gqd {

namespace si {
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double h = 6.62607015e-34;
inline constexpr double e_charge = 1.602176634e-19;
inline constexpr double m0 = 9.1093837015e-31;
inline constexpr double k_boltzmann_ev = 8.617333262e-5;
inline constexpr double c_light = 2.99792458e8;
} // namespace si

namespace units {

inline constexpr double nm_per_m = 1.0e9;
inline constexpr double farad_per_af = 1.0e-18;

constexpr double ev_to_joule(double ev) noexcept { return ev * si::e_charge; }
constexpr double joule_to_ev(double j) noexcept { return j / si::e_charge; }
constexpr double nm_to_m(double nm) noexcept { return nm / nm_per_m; }
constexpr double m_to_nm(double m) noexcept { return m * nm_per_m; }

} // namespace units

/// Material and fundamental constants. The three graphene parameters are the
/// ones a constants file may override.
struct PhysicalConstants
{
    double hbar = si::hbar;                       // J s
    double hbar_ev = si::hbar / si::e_charge;     // eV s
    double h = si::h;                             // J s
    double e_charge = si::e_charge;               // C
    double v_fermi = 1.0e6;                       // m/s
    double t_hop = 2.8;                           // eV
    double a_lattice = 0.142;                     // nm
    double m0 = si::m0;                           // kg
    double k_boltzmann = si::k_boltzmann_ev;      // eV/K

    void validate() const
    {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        detail::require(positive(hbar) && positive(hbar_ev) && positive(h) && positive(e_charge) &&
                            positive(v_fermi) && positive(t_hop) && positive(a_lattice) &&
                            positive(m0) && positive(k_boltzmann),
                        "physical constants must all be finite and strictly positive");
    }
};

inline const PhysicalConstants &default_constants()
{
    static const PhysicalConstants pc{};
    return pc;
}

/// Dirac energy scale hbar*v_F/R in eV for a radius in nm.
inline double hbar_vf_over_r(double radius_nm, const PhysicalConstants &pc = default_constants())
{
    if (!std::isfinite(radius_nm) || radius_nm <= 0.0)
        throw DomainError("radius must be finite and positive, got " + std::to_string(radius_nm) + " nm");
    return pc.hbar_ev * pc.v_fermi / units::nm_to_m(radius_nm);
}

} // namespace gqd

#endif
