#ifndef GQD_DIRAC_DOT_HPP
#define GQD_DIRAC_DOT_HPP

// Continuum Dirac model of a circular graphene dot with infinite-mass
// confinement.
//
// Spinor ansatz per valley: chi_A(r) = J_m(k r), chi_B(r) = s J_{m+1}(k r),
// with s = +1 for conduction and -1 for valence states. The edge condition
// reduces to a transcendental equation in xi = k R:
//
//   K  (tau = +1):  J_m(xi) + J_{m+1}(xi) = 0
//   K' (tau = -1):  J_m(xi) - J_{m+1}(xi) = 0
//
// and the levels are E = +/- (hbar v_F / R) xi.
//
// A value of xi ~ 2.48 is sometimes given for the lowest m = 0 root. It
// matches neither equation (K': 1.434696, K: 3.112864) and is not used here.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include "gqd/constants.hpp"
#include "gqd/errors.hpp"
#include "gqd/special_functions.hpp"

namespace gqd {

enum class Valley : int
{
    K = +1,
    KPrime = -1,
};

constexpr int tau_of(Valley v) noexcept { return static_cast<int>(v); }

inline Valley valley_from_tau(int tau)
{
    if (tau == 1)
        return Valley::K;
    if (tau == -1)
        return Valley::KPrime;
    throw DomainError("valley index tau must be +1 or -1, got " + std::to_string(tau));
}

inline const char *valley_name(Valley v) noexcept { return v == Valley::K ? "K" : "Kprime"; }

struct DotGeometry
{
    double radius = 10.0; // nm

    void validate() const
    {
        if (!std::isfinite(radius) || radius <= 0.0)
            throw DomainError("dot radius must be finite and > 0 nm");
    }
    /// Outside [0.5, 100] nm the continuum model is of doubtful use.
    bool in_practical_range() const noexcept { return radius >= 0.5 && radius <= 100.0; }
};

struct DiracLevel
{
    Valley tau = Valley::K;
    int m = 0;
    int n = 1;
    double xi = 0.0;
    double energy = 0.0; // eV, signed
    int sign = +1;       // +1 conduction, -1 valence

    /// Total angular momentum j = m + 1/2 (metadata only).
    double total_angular_momentum() const noexcept { return m + 0.5; }
};

/// Inclusive range of angular momenta.
struct AngularRange
{
    int min = -5;
    int max = 5;
};

struct DiracSweep
{
    AngularRange m_range{};
    int n_max = 5;
    std::vector<Valley> valleys{Valley::K, Valley::KPrime};
    double scan_step = 0.05;
};

/// f(xi) = J_m(xi) + tau J_{m+1}(xi); its positive roots are the xi_{m,n}.
struct BoundaryFunction
{
    Valley tau;
    int m;

    double operator()(double xi) const
    {
        return bessel_j(m, xi) + tau_of(tau) * bessel_j(m + 1, xi);
    }
};

inline BoundaryFunction boundary_function(Valley tau, int m) { return BoundaryFunction{tau, m}; }

/// Window growth stops here; xi beyond this is far outside desk-scale use.
inline constexpr double dirac_root_cap = 2000.0;

/// First n_max strictly positive roots of the boundary function. xi = 0 is
/// never reported.
inline std::vector<double> dirac_roots(Valley tau, int m, int n_max, double scan_step = DiracSweep{}.scan_step)
{
    if (n_max < 1)
        throw DomainError("dirac_roots: n_max must be >= 1");
    if (!std::isfinite(scan_step) || scan_step <= 0.0)
        throw DomainError("dirac_roots: scan_step must be > 0");

    const auto f = boundary_function(tau, m);
    const auto wanted = static_cast<std::size_t>(n_max);
    // Roots are spaced ~pi apart; start with a window that usually suffices.
    double hi = std::numbers::pi * (n_max + std::abs(m + 0.5) / 2.0 + 2.0);
    std::vector<double> roots;
    for (;;) {
        hi = std::min(hi, dirac_root_cap);
        roots = find_roots(f, scan_step, hi, wanted, scan_step);
        if (roots.size() >= wanted || hi >= dirac_root_cap)
            break;
        hi *= 2.0;
    }
    if (roots.size() < wanted)
        throw NumericError("dirac_roots: found " + std::to_string(roots.size()) + " of " + std::to_string(n_max) +
                           " roots below xi = " + std::to_string(dirac_root_cap));
    return roots;
}

namespace detail {

inline void validate_sweep(const DiracSweep &sweep)
{
    if (sweep.m_range.min > sweep.m_range.max)
        throw DomainError("angular momentum range is empty (m-min > m-max)");
    if (sweep.n_max < 1)
        throw DomainError("n_max must be >= 1");
    if (sweep.valleys.empty())
        throw DomainError("at least one valley is required");
}

} // namespace detail

/// Both energy branches for every root, sorted by |E| then (tau, m, n, sign).
inline std::vector<DiracLevel> dirac_levels(const DotGeometry &geom, const DiracSweep &sweep = {},
                                            const PhysicalConstants &pc = default_constants())
{
    geom.validate();
    detail::validate_sweep(sweep);
    const double scale = hbar_vf_over_r(geom.radius, pc);

    std::vector<Valley> valleys = sweep.valleys;
    std::sort(valleys.begin(), valleys.end(), [](Valley a, Valley b) { return tau_of(a) < tau_of(b); });
    valleys.erase(std::unique(valleys.begin(), valleys.end()), valleys.end());

    std::vector<DiracLevel> levels;
    for (Valley tau : valleys) {
        for (int m = sweep.m_range.min; m <= sweep.m_range.max; ++m) {
            const auto roots = dirac_roots(tau, m, sweep.n_max, sweep.scan_step);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                for (int sign : {-1, +1}) {
                    levels.push_back(DiracLevel{tau, m, static_cast<int>(i) + 1, roots[i], sign * scale * roots[i], sign});
                }
            }
        }
    }
    std::sort(levels.begin(), levels.end(), [](const DiracLevel &a, const DiracLevel &b) {
        return std::make_tuple(std::abs(a.energy), tau_of(a.tau), a.m, a.n, a.sign) <
               std::make_tuple(std::abs(b.energy), tau_of(b.tau), b.m, b.n, b.sign);
    });
    return levels;
}

struct DiracGap
{
    double exact = 0.0;    // 2 min|E| over the computed levels, eV
    double estimate = 0.0; // 2 hbar v_F / R, eV
    double xi_min = 0.0;
};

inline DiracGap dirac_gap(const DotGeometry &geom, const DiracSweep &sweep = {},
                          const PhysicalConstants &pc = default_constants())
{
    const auto levels = dirac_levels(geom, sweep, pc);
    if (levels.empty())
        throw DomainError("dirac_gap: no levels computed");
    const auto &lowest = levels.front();
    return DiracGap{2.0 * std::abs(lowest.energy), 2.0 * hbar_vf_over_r(geom.radius, pc), lowest.xi};
}

struct SpinorSample
{
    double r = 0.0; // nm
    double chi_a = 0.0;
    double chi_b = 0.0;
};

struct RadialSpinor
{
    DiracLevel level;
    std::vector<SpinorSample> samples;
    double normalization = 1.0;   // factor applied to the bare Bessel functions, nm^-1
    bool boundary_checked = true; // false when chi_A(R) vanishes
    double boundary_residual = 0.0;
};

namespace detail {

// Composite Simpson estimate of int_0^R (J_m(k r)^2 + J_{m+1}(k r)^2) 2 pi r dr.
inline double spinor_norm_integral(int m, double k, double radius)
{
    constexpr int intervals = 4096;
    const double h = radius / intervals;
    auto density = [&](double r) {
        const double a = bessel_j(m, k * r);
        const double b = bessel_j(m + 1, k * r);
        return (a * a + b * b) * 2.0 * std::numbers::pi * r;
    };
    double sum = density(0.0) + density(radius);
    for (int i = 1; i < intervals; ++i)
        sum += density(i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return sum * h / 3.0;
}

} // namespace detail

inline constexpr double spinor_edge_zero_tolerance = 1e-10;

/// Samples the radial spinor of a level on a uniform grid over [0, R].
///
/// The spinor is normalized to int (|chi_A|^2 + |chi_B|^2) 2 pi r dr = 1 with
/// r in nm, using a fine quadrature independent of n_samples. The edge ratio
/// chi_B(R)/chi_A(R) must equal -tau*sign.
inline RadialSpinor radial_spinor(const DiracLevel &level, const DotGeometry &geom, int n_samples)
{
    geom.validate();
    if (n_samples < 16)
        throw DomainError("radial_spinor: need at least 16 samples");
    if (!(level.xi > 0.0) || !std::isfinite(level.xi))
        throw DomainError("radial_spinor: level has no positive root");

    const double radius = geom.radius;
    const double k = level.xi / radius;
    const double s = level.sign >= 0 ? 1.0 : -1.0;
    const double norm = 1.0 / std::sqrt(detail::spinor_norm_integral(level.m, k, radius));

    RadialSpinor out;
    out.level = level;
    out.normalization = norm;
    out.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double r = (i == n_samples - 1) ? radius : radius * i / (n_samples - 1);
        out.samples.push_back({r, norm * bessel_j(level.m, k * r), norm * s * bessel_j(level.m + 1, k * r)});
    }

    const double a_edge = bessel_j(level.m, level.xi);
    const double b_edge = s * bessel_j(level.m + 1, level.xi);
    if (std::abs(a_edge) < spinor_edge_zero_tolerance) {
        out.boundary_checked = false;
    } else {
        const double expected = -tau_of(level.tau) * s;
        out.boundary_residual = std::abs(b_edge / a_edge - expected);
    }
    return out;
}

} // namespace gqd

#endif
