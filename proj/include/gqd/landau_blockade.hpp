#ifndef GQD_LANDAU_BLOCKADE_HPP
#define GQD_LANDAU_BLOCKADE_HPP

// Bulk Dirac Landau levels and a zero-temperature Coulomb-blockade staircase.

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gqd/confinement.hpp"
#include "gqd/constants.hpp"
#include "gqd/errors.hpp"

namespace gqd {

struct LandauParams
{
    double b_field = 1.0; // T
    int n = 0;
    int m = 0;
};

/// How to read the Landau formula. `SI` evaluates hbar v_F sqrt(2 e B / hbar (n + |m| + 1/2)).
/// `GaussianLiteral` keeps the extra 1/c under the root exactly as the
/// Gaussian-units formula is usually printed, evaluated with SI numbers.
enum class LandauUnits
{
    SI,
    GaussianLiteral,
};

/// Landau level energy in eV. No finite-size boundary matching is applied.
inline double landau_energy(const LandauParams &p, LandauUnits units = LandauUnits::SI,
                            const PhysicalConstants &pc = default_constants())
{
    if (!std::isfinite(p.b_field) || p.b_field <= 0.0)
        throw DomainError("landau_energy: magnetic field must be > 0 T");
    if (p.n < 0)
        throw DomainError("landau_energy: n must be >= 0");
    const double ladder = p.n + std::abs(static_cast<double>(p.m)) + 0.5;
    double inside = 2.0 * pc.e_charge * p.b_field / pc.hbar * ladder;
    if (units == LandauUnits::GaussianLiteral)
        inside /= si::c_light;
    return units::joule_to_ev(pc.hbar * pc.v_fermi * std::sqrt(inside));
}

struct IVPoint
{
    double voltage = 0.0; // V
    double current = 0.0; // plateau index (normalized step units)
};

struct IVCurve
{
    std::vector<IVPoint> points;
    double capacitance = 0.0;  // F
    double step_voltage = 0.0; // e/C, V
    double first_step = 0.0;   // e/2C, V
};

/// Plateau index n(V) = floor(C |V| / e + 1/2), odd in V.
inline double staircase_current(double capacitance_f, double voltage, const PhysicalConstants &pc = default_constants())
{
    const double steps = std::floor(capacitance_f * std::abs(voltage) / pc.e_charge + 0.5);
    return voltage < 0.0 ? -steps : steps;
}

/// Number of current steps on (0, v_max].
inline long staircase_step_count(double capacitance_f, double v_max, const PhysicalConstants &pc = default_constants())
{
    return static_cast<long>(std::floor(capacitance_f * v_max / pc.e_charge + 0.5));
}

/// Zero-temperature staircase sampled uniformly on [-v_max, v_max].
///
/// Current is in units of one plateau; multiply by a step current to get
/// amperes. The first step sits at e/2C and steps are e/C apart.
inline IVCurve staircase_iv(double capacitance_f, double v_max, int samples,
                            const PhysicalConstants &pc = default_constants())
{
    if (!std::isfinite(capacitance_f) || capacitance_f <= 0.0)
        throw DomainError("staircase_iv: capacitance must be > 0 F");
    if (!std::isfinite(v_max) || v_max <= 0.0)
        throw DomainError("staircase_iv: v_max must be > 0 V");
    if (samples < 2)
        throw DomainError("staircase_iv: need at least 2 samples");

    IVCurve iv;
    iv.capacitance = capacitance_f;
    iv.step_voltage = pc.e_charge / capacitance_f;
    iv.first_step = 0.5 * iv.step_voltage;
    iv.points.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double v = (i == samples - 1) ? v_max : -v_max + 2.0 * v_max * i / (samples - 1);
        iv.points.push_back({v, staircase_current(capacitance_f, v, pc)});
    }
    return iv;
}

/// Voltages of the current steps on (0, v_max]: (k - 1/2) e / C.
inline std::vector<double> staircase_step_voltages(double capacitance_f, double v_max,
                                                   const PhysicalConstants &pc = default_constants())
{
    std::vector<double> out;
    const long count = staircase_step_count(capacitance_f, v_max, pc);
    for (long k = 1; k <= count; ++k)
        out.push_back((static_cast<double>(k) - 0.5) * pc.e_charge / capacitance_f);
    return out;
}

inline constexpr double default_visibility_factor = 10.0;

struct BlockadeVisibility
{
    bool visible = false;
    double ratio = 0.0;           // E_C / (k_B T), +inf at T = 0
    double charging_energy = 0.0; // eV
};

/// Blockade counts as visible when E_C > factor * k_B T.
inline BlockadeVisibility blockade_visible_for_energy(double charging_energy_ev, double temperature_k,
                                                      double factor = default_visibility_factor,
                                                      const PhysicalConstants &pc = default_constants())
{
    if (!std::isfinite(charging_energy_ev) || charging_energy_ev <= 0.0)
        throw DomainError("blockade check: charging energy must be > 0 eV");
    if (!std::isfinite(temperature_k) || temperature_k < 0.0)
        throw DomainError("blockade check: temperature must be >= 0 K");
    if (!std::isfinite(factor) || factor <= 0.0)
        throw DomainError("blockade check: visibility factor must be > 0");
    const double thermal = pc.k_boltzmann * temperature_k;
    BlockadeVisibility out;
    out.charging_energy = charging_energy_ev;
    out.ratio = thermal == 0.0 ? std::numeric_limits<double>::infinity() : charging_energy_ev / thermal;
    out.visible = charging_energy_ev > factor * thermal;
    return out;
}

inline BlockadeVisibility blockade_visible(double capacitance_f, double temperature_k,
                                           double factor = default_visibility_factor,
                                           const PhysicalConstants &pc = default_constants())
{
    return blockade_visible_for_energy(charging_energy(capacitance_f, pc), temperature_k, factor, pc);
}

} // namespace gqd

#endif
