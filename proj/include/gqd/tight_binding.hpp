#ifndef GQD_TIGHT_BINDING_HPP
#define GQD_TIGHT_BINDING_HPP

// Nearest-neighbour tight-binding model of a disk-shaped graphene flake.
//
// The flake is the honeycomb lattice clipped to |r| <= R. Bonds join sites
// exactly one carbon-carbon distance apart; sites left with no bond after
// clipping are removed, singly bonded edge sites are kept. Sites are ordered
// lexicographically by (x, y) rounded to 1e-6 nm.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gqd/constants.hpp"
#include "gqd/errors.hpp"
#include "gqd/symmetric_eigen.hpp"

namespace gqd {

enum class Sublattice : std::uint8_t
{
    A,
    B,
};

inline char sublattice_label(Sublattice s) noexcept { return s == Sublattice::A ? 'A' : 'B'; }

/// Where the disk center sits relative to the honeycomb.
enum class LatticeCenter
{
    Hexagon,
    Atom,
};

struct LatticeSite
{
    double x = 0.0; // nm
    double y = 0.0; // nm
    Sublattice sublattice = Sublattice::A;
};

struct Bond
{
    std::size_t i = 0;
    std::size_t j = 0; // i < j

    auto operator<=>(const Bond &) const = default;
};

struct HexLattice
{
    std::vector<LatticeSite> sites;
    std::vector<Bond> bonds;
    double radius = 0.0;    // nm
    double a_lattice = 0.0; // nm

    std::size_t n_sites() const noexcept { return sites.size(); }

    std::size_t count(Sublattice s) const noexcept
    {
        return static_cast<std::size_t>(
            std::count_if(sites.begin(), sites.end(), [s](const LatticeSite &site) { return site.sublattice == s; }));
    }

    std::vector<int> degrees() const
    {
        std::vector<int> deg(sites.size(), 0);
        for (const auto &b : bonds) {
            ++deg[b.i];
            ++deg[b.j];
        }
        return deg;
    }

    /// Continuum site-count estimate pi R^2 / a^2 (ignores the two-atom basis).
    double estimated_sites() const noexcept { return std::numbers::pi * radius * radius / (a_lattice * a_lattice); }
};

namespace detail {

inline std::int64_t rounded_coordinate(double v) { return std::llround(v * 1e6); }

} // namespace detail

inline HexLattice build_lattice(double radius_nm, LatticeCenter center = LatticeCenter::Hexagon,
                                const PhysicalConstants &pc = default_constants())
{
    const double a = pc.a_lattice;
    if (!std::isfinite(radius_nm) || radius_nm < a)
        throw DomainError("build_lattice: radius must be >= the carbon-carbon distance (" + std::to_string(a) + " nm)");

    // Hexagon centered at the origin: A sites at (0, a) + i a1 + j a2,
    // B sites at (0, -a) + i a1 + j a2.
    const double sqrt3 = std::numbers::sqrt3;
    const double a1x = sqrt3 * a;
    const double a2x = 0.5 * sqrt3 * a;
    const double a2y = 1.5 * a;
    const double shift_y = center == LatticeCenter::Atom ? -a : 0.0;
    const double limit = radius_nm * (1.0 + 1e-12);

    const int jmax = static_cast<int>(std::ceil((radius_nm + 2.0 * a) / a2y)) + 1;
    const int imax = static_cast<int>(std::ceil((radius_nm + 2.0 * a) / a1x)) + jmax + 1;

    std::vector<LatticeSite> candidates;
    for (int j = -jmax; j <= jmax; ++j) {
        for (int i = -imax; i <= imax; ++i) {
            const double cx = i * a1x + j * a2x;
            const double cy = j * a2y + shift_y;
            for (auto [dy, sub] : {std::pair{a, Sublattice::A}, std::pair{-a, Sublattice::B}}) {
                const double x = cx;
                const double y = cy + dy;
                if (std::hypot(x, y) <= limit)
                    candidates.push_back({x, y, sub});
            }
        }
    }

    auto key = [](const LatticeSite &s) {
        return std::make_pair(detail::rounded_coordinate(s.x), detail::rounded_coordinate(s.y));
    };
    std::sort(candidates.begin(), candidates.end(),
              [&](const LatticeSite &l, const LatticeSite &r) { return key(l) < key(r); });

    // Neighbour search on a square grid of cell size 1.5 a.
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> cells;
    const double cell = 1.5 * a;
    auto cell_of = [cell](double v) { return static_cast<std::int64_t>(std::floor(v / cell)); };
    for (std::size_t k = 0; k < candidates.size(); ++k)
        cells[{cell_of(candidates[k].x), cell_of(candidates[k].y)}].push_back(k);

    std::vector<Bond> bonds;
    const double bond_tol = 1e-6 * a;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const auto cx = cell_of(candidates[k].x);
        const auto cy = cell_of(candidates[k].y);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells.find({cx + dx, cy + dy});
                if (it == cells.end())
                    continue;
                for (std::size_t other : it->second) {
                    if (other <= k)
                        continue;
                    const double d = std::hypot(candidates[other].x - candidates[k].x, candidates[other].y - candidates[k].y);
                    if (std::abs(d - a) < bond_tol)
                        bonds.push_back({k, other});
                }
            }
        }
    }

    // Drop isolated sites and reindex.
    std::vector<int> deg(candidates.size(), 0);
    for (const auto &b : bonds) {
        ++deg[b.i];
        ++deg[b.j];
    }
    std::vector<std::size_t> new_index(candidates.size(), 0);
    HexLattice lat;
    lat.radius = radius_nm;
    lat.a_lattice = a;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        if (deg[k] == 0)
            continue;
        new_index[k] = lat.sites.size();
        lat.sites.push_back(candidates[k]);
    }
    if (bonds.empty())
        throw DomainError("build_lattice: radius " + std::to_string(radius_nm) + " nm contains no complete bond");
    lat.bonds.reserve(bonds.size());
    for (const auto &b : bonds)
        lat.bonds.push_back({new_index[b.i], new_index[b.j]});
    std::sort(lat.bonds.begin(), lat.bonds.end());
    return lat;
}

/// H_ij = -t for every bond, zero elsewhere (including the diagonal).
inline DenseMatrix build_hamiltonian(const HexLattice &lat, const PhysicalConstants &pc = default_constants())
{
    DenseMatrix h(lat.n_sites());
    for (const auto &b : lat.bonds) {
        h(b.i, b.j) = -pc.t_hop;
        h(b.j, b.i) = -pc.t_hop;
    }
    return h;
}

enum class SpectrumModel
{
    Dirac,
    TightBinding,
};

struct Spectrum
{
    std::vector<double> eigenvalues; // ascending, eV
    SpectrumModel model = SpectrumModel::TightBinding;
    std::size_t n_sites = 0;
    double gap = 0.0; // eV
    std::size_t homo_index = 0;
};

/// Half filling: homo = ceil(n/2) - 1. For odd n the gap straddles the
/// unpaired zero mode.
inline std::size_t half_filling_homo(std::size_t n_sites)
{
    if (n_sites < 2)
        throw DomainError("half-filling gap needs at least two levels");
    return (n_sites + 1) / 2 - 1;
}

inline Spectrum spectrum_from_eigenvalues(std::vector<double> eigenvalues, SpectrumModel model)
{
    Spectrum s;
    s.model = model;
    s.n_sites = eigenvalues.size();
    s.homo_index = half_filling_homo(s.n_sites);
    s.eigenvalues = std::move(eigenvalues);
    s.gap = s.eigenvalues[s.homo_index + 1] - s.eigenvalues[s.homo_index];
    return s;
}

inline Spectrum tb_spectrum(double radius_nm, LatticeCenter center = LatticeCenter::Hexagon,
                            const PhysicalConstants &pc = default_constants())
{
    const auto lat = build_lattice(radius_nm, center, pc);
    return spectrum_from_eigenvalues(eigenvalues_symmetric(build_hamiltonian(lat, pc)), SpectrumModel::TightBinding);
}

struct GapSample
{
    double n_sites = 0.0;
    double gap = 0.0; // eV
};

struct GapScalingFit
{
    double exponent = 0.0;  // slope of log(gap) against log(N)
    double prefactor = 0.0; // eV, gap ~ prefactor * N^exponent
    std::size_t points_used = 0;
    std::vector<std::size_t> excluded; // indices dropped for a vanishing gap
};

/// Least-squares fit of log(gap) = log(prefactor) + exponent * log(N).
/// Gaps at or below `zero_gap` are treated as zero modes and excluded.
inline GapScalingFit fit_gap_scaling(std::span<const GapSample> samples, double zero_gap = 0.0)
{
    GapScalingFit fit;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto &s = samples[k];
        if (!(s.n_sites > 0.0) || !std::isfinite(s.n_sites))
            throw DomainError("fit_gap_scaling: site counts must be positive");
        if (!(s.gap > zero_gap) || !std::isfinite(s.gap)) {
            fit.excluded.push_back(k);
            continue;
        }
        const double x = std::log(s.n_sites);
        const double y = std::log(s.gap);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.points_used;
    }
    if (fit.points_used < 3)
        throw DomainError("fit_gap_scaling: need at least 3 points with a positive gap, have " +
                          std::to_string(fit.points_used));
    const double n = static_cast<double>(fit.points_used);
    const double denom = n * sxx - sx * sx;
    if (!(std::abs(denom) > 0.0))
        throw DomainError("fit_gap_scaling: all site counts are equal");
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.prefactor = std::exp((sy - fit.exponent * sx) / n);
    return fit;
}

/// Relative threshold below which an eigenvalue counts as a zero mode.
inline constexpr double zero_mode_tolerance = 1e-8;

struct GapSizePoint
{
    double radius = 0.0; // nm
    std::size_t n_sites = 0;
    double gap = 0.0; // eV
};

struct GapScalingResult
{
    std::vector<GapSizePoint> points;
    GapScalingFit fit;
};

/// Tight-binding gap over several radii and its power-law fit in N.
inline GapScalingResult gap_scaling_fit(std::span<const double> radii, LatticeCenter center = LatticeCenter::Hexagon,
                                        const PhysicalConstants &pc = default_constants())
{
    if (radii.size() < 4)
        throw DomainError("gap_scaling_fit: need at least 4 radii, got " + std::to_string(radii.size()));
    GapScalingResult out;
    std::vector<GapSample> samples;
    for (double r : radii) {
        const auto spec = tb_spectrum(r, center, pc);
        out.points.push_back({r, spec.n_sites, spec.gap});
        samples.push_back({static_cast<double>(spec.n_sites), spec.gap});
    }
    out.fit = fit_gap_scaling(samples, zero_mode_tolerance * pc.t_hop);
    return out;
}

} // namespace gqd

#endif
