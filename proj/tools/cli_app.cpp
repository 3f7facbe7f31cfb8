#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "defaults.hpp"
#include "gqd/config.hpp"
#include "gqd/confinement.hpp"
#include "gqd/constants.hpp"
#include "gqd/dirac_dot.hpp"
#include "gqd/errors.hpp"
#include "gqd/landau_blockade.hpp"
#include "gqd/special_functions.hpp"
#include "gqd/tight_binding.hpp"
#include "table.hpp"

namespace gqd::cli {
namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct CommonOptions
{
    std::string format = "csv";
    std::string output;
    std::string constants;
};

struct SweepSpec
{
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;
    bool log_scale = false;

    /// steps intervals, steps + 1 points, endpoints included.
    std::vector<double> points() const
    {
        std::vector<double> out;
        for (int i = 0; i <= steps; ++i) {
            const double f = static_cast<double>(i) / steps;
            double v = log_scale ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                 : start + f * (stop - start);
            if (i == steps)
                v = stop;
            out.push_back(v);
        }
        return out;
    }
};

SweepSpec parse_sweep(const std::string &text, const std::string &scale)
{
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
        throw UsageError("--sweep: expected start:stop:steps, got '" + text + "'");
    SweepSpec s;
    try {
        s.start = detail::parse_double(text.substr(0, c1), "--sweep start");
        s.stop = detail::parse_double(text.substr(c1 + 1, c2 - c1 - 1), "--sweep stop");
        const double steps = detail::parse_double(text.substr(c2 + 1), "--sweep steps");
        if (steps != std::floor(steps) || steps < 1 || steps > 1e7)
            throw UsageError("--sweep: steps must be an integer >= 1");
        s.steps = static_cast<int>(steps);
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
    if (!(s.start < s.stop))
        throw UsageError("--sweep: start must be < stop");
    s.log_scale = scale == "log";
    if (s.log_scale && !(s.start > 0.0))
        throw UsageError("--sweep: log scale needs start > 0");
    return s;
}

PhysicalConstants resolve_constants(const CommonOptions &common)
{
    std::string path = common.constants;
    if (path.empty()) {
        if (const char *env = std::getenv("GQD_CONSTANTS"); env != nullptr)
            path = env;
    }
    if (path.empty())
        return default_constants();
    return load_constants_file(path);
}

void emit(const Table &table, const CommonOptions &common, std::ostream &out)
{
    const Format fmt = common.format == "json" ? Format::Json : Format::Csv;
    if (common.output.empty()) {
        table.write(out, fmt);
        return;
    }
    std::ofstream file(common.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open output file '" + common.output + "' for writing");
    table.write(file, fmt);
    file.flush();
    if (!file)
        throw IoError("failed writing output file '" + common.output + "'");
}

void write_bonds(const HexLattice &lat, const std::string &path)
{
    Table bonds({"i", "j"});
    for (const auto &b : lat.bonds)
        bonds.add_row({static_cast<std::int64_t>(b.i), static_cast<std::int64_t>(b.j)});
    CommonOptions opts;
    opts.output = path;
    emit(bonds, opts, std::cout);
}

LatticeCenter parse_center(const std::string &s) { return s == "atom" ? LatticeCenter::Atom : LatticeCenter::Hexagon; }

Valley parse_valley(const std::string &s)
{
    if (s == "K" || s == "+1" || s == "1")
        return Valley::K;
    if (s == "Kprime" || s == "-1")
        return Valley::KPrime;
    throw UsageError("--tau: expected K, Kprime, +1 or -1, got '" + s + "'");
}

/// Evaluates `work(i)` for i in [0, count) on up to hardware_concurrency
/// threads; results stay in input order.
template <class T, class Work>
std::vector<T> ordered_parallel(std::size_t count, Work work)
{
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i] = work(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t n_threads = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<T> out;
    out.reserve(count);
    for (auto &s : slots)
        out.push_back(std::move(*s));
    return out;
}

void add_common(CLI::App *sub, CommonOptions &common)
{
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", common.output, "Write data to this file instead of standard output");
    sub->add_option("--constants", common.constants, "key=value constants file (overrides $GQD_CONSTANTS)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Electronic structure of circular graphene quantum dots and confinement calculators", "gqd"};
    app.require_subcommand(1);

    CommonOptions common;
    std::function<void()> action;

    // spectrum dirac / spectrum tb
    auto *spectrum = app.add_subcommand("spectrum", "Level spectrum of a circular dot");
    spectrum->require_subcommand(1);

    double radius_nm = 0.0;
    int m_min = defaults::dirac_m_min, m_max = defaults::dirac_m_max, n_max = defaults::dirac_n_max;
    std::string valleys = "both";
    double scan_step = defaults::dirac_scan_step;
    auto *dirac = spectrum->add_subcommand("dirac", "Continuum Dirac levels with infinite-mass edges");
    dirac->add_option("--radius-nm", radius_nm, "Dot radius (nm)")->required();
    dirac->add_option("--m-min", m_min, "Lowest angular momentum");
    dirac->add_option("--m-max", m_max, "Highest angular momentum");
    dirac->add_option("--n-max", n_max, "Radial roots per (valley, m)");
    dirac->add_option("--valleys", valleys, "both|K|Kprime")->check(CLI::IsMember({"both", "K", "Kprime"}));
    dirac->add_option("--scan-step", scan_step, "Root scan step in xi");
    add_common(dirac, common);
    dirac->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            DiracSweep sweep;
            sweep.m_range = {m_min, m_max};
            sweep.n_max = n_max;
            sweep.scan_step = scan_step;
            if (valleys == "K")
                sweep.valleys = {Valley::K};
            else if (valleys == "Kprime")
                sweep.valleys = {Valley::KPrime};
            const DotGeometry geom{radius_nm};
            geom.validate();
            if (!geom.in_practical_range())
                err << "warning: radius " << format_number(radius_nm) << " nm is outside [0.5, 100] nm\n";
            const auto levels = dirac_levels(geom, sweep, pc);
            Table t({"tau", "m", "n", "xi", "energy_ev"});
            for (const auto &l : levels)
                t.add_row({std::int64_t{tau_of(l.tau)}, std::int64_t{l.m}, std::int64_t{l.n}, l.xi, l.energy});
            emit(t, common, out);
        };
    });

    std::string center = "hexagon";
    auto *tb = spectrum->add_subcommand("tb", "Nearest-neighbour tight-binding eigenvalues");
    tb->add_option("--radius-nm", radius_nm, "Disk radius (nm)")->required();
    tb->add_option("--center", center, "atom|hexagon")->check(CLI::IsMember({"atom", "hexagon"}));
    add_common(tb, common);
    tb->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            const auto spec = tb_spectrum(radius_nm, parse_center(center), pc);
            Table t({"index", "eigenvalue_ev"});
            for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
                t.add_row({static_cast<std::int64_t>(i), spec.eigenvalues[i]});
            emit(t, common, out);
            err << "n_sites=" << spec.n_sites << " homo_index=" << spec.homo_index
                << " gap_ev=" << format_number(spec.gap) << '\n';
        };
    });

    // gap-vs-size
    std::vector<double> radii = defaults::gap_radii;
    auto *gap = app.add_subcommand("gap-vs-size", "Tight-binding half-filling gap against disk radius");
    gap->add_option("--radii", radii, "Comma-separated radii (nm)")->delimiter(',');
    gap->add_option("--center", center, "atom|hexagon")->check(CLI::IsMember({"atom", "hexagon"}));
    add_common(gap, common);
    gap->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            if (radii.empty())
                throw UsageError("--radii: at least one radius is required");
            const auto c = parse_center(center);
            const auto spectra = ordered_parallel<Spectrum>(radii.size(), [&](std::size_t i) {
                return tb_spectrum(radii[i], c, pc);
            });
            Table t({"radius_nm", "n_sites", "gap_ev"});
            std::vector<GapSample> samples;
            for (std::size_t i = 0; i < radii.size(); ++i) {
                t.add_row({radii[i], static_cast<std::int64_t>(spectra[i].n_sites), spectra[i].gap});
                samples.push_back({static_cast<double>(spectra[i].n_sites), spectra[i].gap});
            }
            emit(t, common, out);
            try {
                const auto fit = fit_gap_scaling(samples, zero_mode_tolerance * pc.t_hop);
                err << "fit: gap ~ " << format_number(fit.prefactor) << " eV * N^" << format_number(fit.exponent)
                    << " over " << fit.points_used << " points\n";
            } catch (const DomainError &e) {
                err << "fit skipped: " << e.what() << '\n';
            }
        };
    });

    // wavefunction
    std::string tau_text = "K";
    int wf_m = 0, wf_n = 1, samples = defaults::wavefunction_samples;
    std::string band = "conduction";
    auto *wf = app.add_subcommand("wavefunction", "Radial spinor components of one Dirac level");
    wf->add_option("--tau", tau_text, "K|Kprime|+1|-1");
    wf->add_option("--m", wf_m, "Angular momentum");
    wf->add_option("--n", wf_n, "Radial index (>= 1)");
    wf->add_option("--radius-nm", radius_nm, "Dot radius (nm)")->required();
    wf->add_option("--samples", samples, "Grid points on [0, R]");
    wf->add_option("--band", band, "conduction|valence")->check(CLI::IsMember({"conduction", "valence"}));
    add_common(wf, common);
    wf->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            const Valley tau = parse_valley(tau_text);
            if (wf_n < 1)
                throw DomainError("radial index n must be >= 1");
            const DotGeometry geom{radius_nm};
            geom.validate();
            const auto roots = dirac_roots(tau, wf_m, wf_n, defaults::dirac_scan_step);
            const double xi = roots.back();
            const int sign = band == "valence" ? -1 : +1;
            const DiracLevel level{tau, wf_m, wf_n, xi, sign * hbar_vf_over_r(radius_nm, pc) * xi, sign};
            const auto spinor = radial_spinor(level, geom, samples);
            Table t({"r_nm", "chi_a", "chi_b"});
            for (const auto &s : spinor.samples)
                t.add_row({s.r, s.chi_a, s.chi_b});
            emit(t, common, out);
            if (!spinor.boundary_checked)
                err << "note: chi_A(R) vanishes; edge ratio check skipped\n";
        };
    });

    // lattice
    std::string bonds_out;
    auto *lattice = app.add_subcommand("lattice", "Honeycomb disk geometry");
    lattice->add_option("--radius-nm", radius_nm, "Disk radius (nm)")->required();
    lattice->add_option("--center", center, "atom|hexagon")->check(CLI::IsMember({"atom", "hexagon"}));
    lattice->add_option("--bonds-out", bonds_out, "Write the bond list (i,j) to this file");
    add_common(lattice, common);
    lattice->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            const auto lat = build_lattice(radius_nm, parse_center(center), pc);
            Table t({"x_nm", "y_nm", "sublattice"});
            for (const auto &s : lat.sites)
                t.add_row({s.x, s.y, std::string(1, sublattice_label(s.sublattice))});
            emit(t, common, out);
            if (!bonds_out.empty())
                write_bonds(lat, bonds_out);
        };
    });

    // landau
    double b_tesla = 0.0;
    int l_n_max = defaults::landau_n_max, l_m_max = defaults::landau_m_max;
    std::string landau_units = "si";
    auto *landau = app.add_subcommand("landau", "Bulk Dirac Landau levels");
    landau->add_option("--b-tesla", b_tesla, "Magnetic field (T)")->required();
    landau->add_option("--n-max", l_n_max, "Highest n");
    landau->add_option("--m-max", l_m_max, "Highest |m|");
    landau->add_option("--units", landau_units, "si|gaussian-literal")->check(CLI::IsMember({"si", "gaussian-literal"}));
    add_common(landau, common);
    landau->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            if (l_n_max < 0 || l_m_max < 0)
                throw DomainError("--n-max and --m-max must be >= 0");
            const auto units = landau_units == "si" ? LandauUnits::SI : LandauUnits::GaussianLiteral;
            Table t({"n", "m", "energy_ev"});
            for (int n = 0; n <= l_n_max; ++n)
                for (int m = -l_m_max; m <= l_m_max; ++m)
                    t.add_row({std::int64_t{n}, std::int64_t{m}, landau_energy({b_tesla, n, m}, units, pc)});
            emit(t, common, out);
        };
    });

    // iv-staircase
    double capacitance_af = 0.0, v_max = 0.0;
    int iv_samples = defaults::iv_samples;
    std::optional<double> step_current;
    auto *iv = app.add_subcommand("iv-staircase", "Zero-temperature Coulomb staircase");
    iv->add_option("--capacitance-af", capacitance_af, "Dot capacitance (aF)")->required();
    iv->add_option("--v-max", v_max, "Bias range [-v_max, v_max] (V)")->required();
    iv->add_option("--samples", iv_samples, "Bias points");
    iv->add_option("--step-current", step_current, "Current per plateau (A); adds a current_a column");
    add_common(iv, common);
    iv->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            const auto curve = staircase_iv(capacitance_af * units::farad_per_af, v_max, iv_samples, pc);
            std::vector<std::string> headers{"voltage_v", "current_steps"};
            if (step_current)
                headers.emplace_back("current_a");
            Table t(headers);
            for (const auto &p : curve.points) {
                std::vector<Cell> row{p.voltage, p.current};
                if (step_current)
                    row.emplace_back(p.current * *step_current);
                t.add_row(std::move(row));
            }
            emit(t, common, out);
        };
    });

    // brus / sv-ratio / charging-energy: one value or a sweep of the main parameter
    std::optional<double> single;
    std::string sweep_text, sweep_scale = "linear";
    auto add_sweep = [&](CLI::App *sub) {
        sub->add_option("--sweep", sweep_text, "start:stop:steps over the main parameter");
        sub->add_option("--sweep-scale", sweep_scale, "linear|log")->check(CLI::IsMember({"linear", "log"}));
    };
    auto sweep_values = [&](const char *flag) {
        if (!sweep_text.empty() && single)
            throw UsageError(std::string("give either ") + flag + " or --sweep, not both");
        if (!sweep_text.empty())
            return parse_sweep(sweep_text, sweep_scale).points();
        if (!single)
            throw UsageError(std::string(flag) + " or --sweep is required");
        return std::vector<double>{*single};
    };

    BrusParams brus_params;
    auto *brus = app.add_subcommand("brus", "Effective-mass confinement gap of a nanocrystal");
    brus->add_option("--e-gap-ev", brus_params.e_gap_bulk, "Bulk gap (eV)")->required();
    brus->add_option("--me", brus_params.m_e_eff, "Electron effective mass (units of m0)")->required();
    brus->add_option("--mh", brus_params.m_h_eff, "Hole effective mass (units of m0)")->required();
    brus->add_option("--radius-nm", single, "Radius (nm)");
    add_sweep(brus);
    add_common(brus, common);
    brus->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            Table t({"radius_nm", "gap_ev"});
            for (double r : sweep_values("--radius-nm")) {
                auto p = brus_params;
                p.radius = r;
                t.add_row({r, brus_gap(p, pc)});
            }
            emit(t, common, out);
        };
    });

    auto *sv = app.add_subcommand("sv-ratio", "Surface-to-volume ratio 6/D of a sphere");
    sv->add_option("--diameter-m", single, "Diameter (m)");
    add_sweep(sv);
    add_common(sv, common);
    sv->callback([&] {
        action = [&] {
            Table t({"diameter_m", "sv_ratio_per_m"});
            for (double d : sweep_values("--diameter-m"))
                t.add_row({d, surface_to_volume(d)});
            emit(t, common, out);
        };
    });

    auto *ec = app.add_subcommand("charging-energy", "Coulomb charging energy e^2/2C");
    ec->add_option("--capacitance-af", single, "Capacitance (aF)");
    add_sweep(ec);
    add_common(ec, common);
    ec->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            Table t({"capacitance_af", "charging_energy_ev"});
            for (double c : sweep_values("--capacitance-af"))
                t.add_row({c, charging_energy(c * units::farad_per_af, pc)});
            emit(t, common, out);
        };
    });

    // blockade-check
    double temperature_k = 0.0, visibility = defaults::visibility_factor;
    auto *bc = app.add_subcommand("blockade-check", "Is the Coulomb blockade resolvable at temperature T?");
    bc->add_option("--capacitance-af", capacitance_af, "Capacitance (aF)")->required();
    bc->add_option("--temperature-k", temperature_k, "Temperature (K)")->required();
    bc->add_option("--visibility-factor", visibility, "Require E_C > factor * k_B T");
    add_common(bc, common);
    bc->callback([&] {
        action = [&] {
            const auto pc = resolve_constants(common);
            const auto res = blockade_visible(capacitance_af * units::farad_per_af, temperature_k, visibility, pc);
            Table t({"capacitance_af", "temperature_k", "charging_energy_ev", "ratio", "visible"});
            t.add_row({capacitance_af, temperature_k, res.charging_energy, res.ratio, res.visible});
            emit(t, common, out);
        };
    });

    // bessel (debugging aid, hidden)
    int bessel_m = 0;
    double bessel_x = 0.0;
    auto *bes = app.add_subcommand("bessel", "Evaluate J_m(x)");
    bes->group("");
    bes->add_option("--m", bessel_m, "Integer order")->required();
    bes->add_option("--x", bessel_x, "Argument (>= 0)")->required();
    add_common(bes, common);
    bes->callback([&] {
        action = [&] {
            Table t({"m", "x", "j_m"});
            t.add_row({std::int64_t{bessel_m}, bessel_x, bessel_j(bessel_m, bessel_x)});
            emit(t, common, out);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (!action)
            throw UsageError("no subcommand selected");
        action();
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const NumericError &e) {
        err << "numeric error: " << e.what() << '\n';
        return exit_domain;
    } catch (const IoError &e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_domain;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_ok;
}

} // namespace gqd::cli
