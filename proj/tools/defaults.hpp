#ifndef GQD_TOOLS_DEFAULTS_HPP
#define GQD_TOOLS_DEFAULTS_HPP

// Every subcommand default lives here.
//
//   option                 default       used by
//   --m-min / --m-max      -5 / 5        spectrum dirac
//   --n-max                5             spectrum dirac
//   --valleys              both          spectrum dirac
//   --scan-step            0.05          spectrum dirac (dimensionless xi)
//   --center               hexagon       spectrum tb, gap-vs-size, lattice
//   --radii                2,3,4,5,6     gap-vs-size (nm)
//   --samples              200           wavefunction
//   --band                 conduction    wavefunction
//   --n-max / --m-max      3 / 3         landau
//   --units                si            landau
//   --samples              401           iv-staircase
//   --visibility-factor    10            blockade-check
//   --sweep-scale          linear        brus, sv-ratio, charging-energy
//   --format               csv           all

#include <vector>

#include "gqd/dirac_dot.hpp"
#include "gqd/landau_blockade.hpp"

namespace gqd::cli::defaults {

inline constexpr int dirac_m_min = -5;
inline constexpr int dirac_m_max = 5;
inline constexpr int dirac_n_max = 5;
inline const double dirac_scan_step = DiracSweep{}.scan_step;
inline const std::vector<double> gap_radii{2.0, 3.0, 4.0, 5.0, 6.0};
inline constexpr int wavefunction_samples = 200;
inline constexpr int landau_n_max = 3;
inline constexpr int landau_m_max = 3;
inline constexpr int iv_samples = 401;
inline constexpr double visibility_factor = default_visibility_factor;

} // namespace gqd::cli::defaults

#endif
