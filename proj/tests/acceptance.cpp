// Acceptance suite: one PASS/FAIL line per criterion, indented sub-checks
// beneath it. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_cases.hpp"
#include "gqd/confinement.hpp"
#include "gqd/dirac_dot.hpp"
#include "gqd/landau_blockade.hpp"
#include "gqd/special_functions.hpp"
#include "gqd/tight_binding.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

class Criterion
{
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void check(const std::string &what, bool ok, const std::string &detail = {})
    {
        lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what + (detail.empty() ? "" : ": " + detail));
        passed_ = passed_ && ok;
    }

    void note(const std::string &text) { lines_.push_back("    note " + text); }

    bool report() const
    {
        std::cout << (passed_ ? "PASS" : "FAIL") << " [" << id_ << "] " << title_ << '\n';
        for (const auto &l : lines_)
            std::cout << l << '\n';
        std::cout.flush();
        return passed_;
    }

private:
    int id_;
    std::string title_;
    std::vector<std::string> lines_;
    bool passed_ = true;
};

bool bessel_kernel()
{
    Criterion c(1, "Bessel kernel: recurrence and J0 zeros");
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (int m = 1; m <= 10; ++m) {
        for (int k = 1; k <= 60; ++k) {
            const double x = 0.5 * k;
            const double lhs = gqd::bessel_j(m - 1, x) + gqd::bessel_j(m + 1, x);
            const double rhs = 2.0 * m / x * gqd::bessel_j(m, x);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    c.check("recurrence m=1..10, x=0.5..30", worst < 1e-9, "max abs error " + fmt(worst));

    const auto zeros = gqd::find_roots([](double x) { return gqd::bessel_j(0, x); }, 0.0, 12.0, 3, 0.05);
    const auto ref_zeros = gqd::oracle::scan_roots([](long double x) { return gqd::oracle::bessel_series(0, x); }, 0.0L, 12.0L, 3);
    bool zeros_ok = zeros.size() == 3 && ref_zeros.size() == 3;
    double zero_err = 0.0;
    for (std::size_t k = 0; zeros_ok && k < 3; ++k)
        zero_err = std::max(zero_err, std::abs(zeros[k] - static_cast<double>(ref_zeros[k])));
    zeros_ok = zeros_ok && zero_err < 1e-9;
    c.check("first three J0 zeros against series oracle", zeros_ok, "max abs error " + fmt(zero_err));

    const double elapsed = seconds_since(t0);
    c.check("runtime < 1 s", elapsed < 1.0, fmt(elapsed) + " s");
    return c.report();
}

bool dirac_roots()
{
    Criterion c(2, "Dirac roots: residuals and pinned lowest roots");
    const auto t0 = Clock::now();
    const auto levels = gqd::dirac_levels(gqd::DotGeometry{10.0});
    double worst = 0.0;
    for (const auto &l : levels)
        worst = std::max(worst, std::abs(gqd::boundary_function(l.tau, l.m)(l.xi)));
    c.check("residual of " + std::to_string(levels.size()) + " levels < 1e-10", worst < 1e-10, "max " + fmt(worst));

    const double kp = gqd::dirac_roots(gqd::Valley::KPrime, 0, 1).front();
    const double k = gqd::dirac_roots(gqd::Valley::K, 0, 1).front();
    c.check("lowest root tau=-1 m=0", std::abs(kp - 1.4346956508195629) < 1e-8, fmt(kp));
    c.check("lowest root tau=+1 m=0", std::abs(k - 3.1128644954171801) < 1e-8, fmt(k));
    c.note("the quoted xi ~ 2.48 matches neither valley's equation; left unreconciled (README)");

    const double elapsed = seconds_since(t0);
    c.check("runtime < 1 s", elapsed < 1.0, fmt(elapsed) + " s");
    return c.report();
}

bool dirac_scaling()
{
    Criterion c(3, "Dirac scaling: E*R invariance and gap/estimate ratio");
    const std::vector<double> radii{2.0, 5.0, 10.0, 20.0};
    const auto ref = gqd::dirac_levels(gqd::DotGeometry{radii.front()});
    double worst = 0.0;
    bool same_labels = true;
    for (double r : radii) {
        const auto lv = gqd::dirac_levels(gqd::DotGeometry{r});
        same_labels = same_labels && lv.size() == ref.size();
        for (std::size_t i = 0; same_labels && i < lv.size(); ++i) {
            same_labels = lv[i].tau == ref[i].tau && lv[i].m == ref[i].m && lv[i].n == ref[i].n && lv[i].sign == ref[i].sign;
            const double er0 = ref[i].energy * radii.front();
            worst = std::max(worst, std::abs(lv[i].energy * r - er0) / std::abs(er0));
        }
    }
    c.check("E*R constant over R = 2, 5, 10, 20 nm", same_labels && worst < 1e-12, "max rel dev " + fmt(worst));

    std::vector<double> ratios;
    for (double r : radii) {
        const auto g = gqd::dirac_gap(gqd::DotGeometry{r});
        ratios.push_back(g.exact / g.estimate);
    }
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    const double spread = (*hi - *lo) / *lo;
    c.check("exact gap / (2 hbar v_F / R) constant", spread < 1e-9,
            "ratio " + fmt(ratios.front()) + ", rel spread " + fmt(spread));
    return c.report();
}

struct TbRun
{
    double radius;
    gqd::Spectrum spectrum;
    double seconds;
};

bool tight_binding(const std::vector<TbRun> &runs, double total_seconds)
{
    Criterion c(4, "Tight-binding correctness");
    const double t = gqd::default_constants().t_hop;

    const auto benzene = gqd::tb_spectrum(0.2);
    const std::vector<double> expected{-2 * t, -t, -t, t, t, 2 * t};
    bool benz_ok = benzene.eigenvalues.size() == expected.size();
    double benz_err = 0.0;
    for (std::size_t i = 0; benz_ok && i < expected.size(); ++i)
        benz_err = std::max(benz_err, std::abs(benzene.eigenvalues[i] - expected[i]));
    benz_ok = benz_ok && benz_err < 1e-9 * t;
    c.check("benzene disk spectrum {-2t,-t,-t,t,t,2t}", benz_ok, "max abs error " + fmt(benz_err) + " eV");

    for (const auto &run : runs) {
        const auto &ev = run.spectrum.eigenvalues;
        const std::size_t n = ev.size();
        double ph = 0.0, trace = 0.0, extreme = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ph = std::max(ph, std::abs(ev[i] + ev[n - 1 - i]));
            trace += ev[i];
            extreme = std::max(extreme, std::abs(ev[i]));
        }
        const std::string tag = "R=" + fmt(run.radius) + " nm (n=" + std::to_string(n) + ")";
        c.check(tag + " particle-hole symmetry", ph < 1e-8 * t, "max|l_i + l_n+1-i| " + fmt(ph));
        c.check(tag + " trace zero", std::abs(trace) < 1e-9 * t * static_cast<double>(n), "trace " + fmt(trace));
        c.check(tag + " |lambda| <= 3t", extreme <= 3.0 * t, "max|lambda| " + fmt(extreme));
    }
    c.check("tight-binding runtime < 300 s", total_seconds < 300.0, fmt(total_seconds) + " s for R = 2..6 nm");
    return c.report();
}

bool gap_scaling(const std::vector<TbRun> &runs)
{
    Criterion c(5, "Gap scaling law against N");
    const double t = gqd::default_constants().t_hop;

    std::vector<gqd::GapSample> samples;
    for (const auto &run : runs)
        samples.push_back({static_cast<double>(run.spectrum.n_sites), run.spectrum.gap});
    for (const auto &run : runs)
        c.note("R=" + fmt(run.radius) + " nm: N=" + std::to_string(run.spectrum.n_sites) +
               ", half-filling gap " + fmt(run.spectrum.gap) + " eV");
    try {
        const auto fit = gqd::fit_gap_scaling(samples, gqd::zero_mode_tolerance * t);
        c.check("log-log slope over " + std::to_string(runs.size()) + " radii in [-0.8, -0.3]",
                fit.exponent >= -0.8 && fit.exponent <= -0.3,
                "slope " + fmt(fit.exponent) + " from " + std::to_string(fit.points_used) + " points");
    } catch (const gqd::DomainError &e) {
        c.check("log-log slope over " + std::to_string(runs.size()) + " radii in [-0.8, -0.3]", false,
                std::string("no fit: ") + e.what());
    }

    std::vector<gqd::GapSample> synthetic;
    for (double n : {60.0, 250.0, 1000.0, 2500.0, 4300.0})
        synthetic.push_back({n, 2.0 * t / std::sqrt(n)});
    const auto fit = gqd::fit_gap_scaling(synthetic);
    c.check("synthetic 2t/sqrt(N): slope -0.5 +- 1e-9", std::abs(fit.exponent + 0.5) < 1e-9, fmt(fit.exponent));
    c.check("synthetic 2t/sqrt(N): prefactor 2t +- 1e-9", std::abs(fit.prefactor - 2.0 * t) < 1e-9,
            fmt(fit.prefactor) + " eV");
    return c.report();
}

bool cross_model(const std::vector<TbRun> &runs)
{
    Criterion c(6, "Dirac and tight-binding gaps against R");
    std::vector<double> dirac, tb;
    std::string listing;
    for (const auto &run : runs) {
        if (run.radius < 3.0)
            continue;
        dirac.push_back(gqd::dirac_gap(gqd::DotGeometry{run.radius}).exact);
        tb.push_back(run.spectrum.gap);
    }
    auto decreasing = [](const std::vector<double> &v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i] < v[i - 1]))
                return false;
        return true;
    };
    std::string dl, tl;
    for (std::size_t i = 0; i < dirac.size(); ++i) {
        dl += (i ? ", " : "") + fmt(dirac[i]);
        tl += (i ? ", " : "") + fmt(tb[i]);
    }
    c.check("Dirac gap decreasing over R = 3..6 nm", dirac.size() == 4 && decreasing(dirac), dl + " eV");
    c.check("tight-binding gap decreasing over R = 3..6 nm", tb.size() == 4 && decreasing(tb), tl + " eV");
    for (std::size_t i = 0; i < dirac.size(); ++i) {
        const double ratio = tb[i] > 0.0 ? std::max(dirac[i] / tb[i], tb[i] / dirac[i]) : INFINITY;
        c.check("R=" + fmt(3.0 + static_cast<double>(i)) + " nm within a factor of 3", ratio <= 3.0, "ratio " + fmt(ratio));
    }
    return c.report();
}

bool confinement()
{
    Criterion c(7, "Confinement calculators");
    const double sv = gqd::surface_to_volume(1e-8);
    c.check("surface_to_volume(1e-8 m) == 6e8 1/m", sv == 6e8, fmt(sv));

    gqd::BrusParams p{1.74, 0.13, 0.45, 2.0};
    const double e1 = gqd::brus_confinement(p);
    p.radius = 4.0;
    const double e2 = gqd::brus_confinement(p);
    c.check("Brus confinement r^-2 ratio", std::abs(e1 / e2 - 4.0) < 1e-12, fmt(e1 / e2));

    const double ec = gqd::charging_energy(1e-18);
    c.check("charging_energy(1 aF) = 0.0801 +- 1e-4 eV", std::abs(ec - 0.0801) < 1e-4, fmt(ec) + " eV");

    const double c_hi = gqd::capacitance_for_charging_energy(1e-3) / gqd::units::farad_per_af;
    const double c_lo = gqd::capacitance_for_charging_energy(1e-2) / gqd::units::farad_per_af;
    c.check("1 meV -> ~80.1 aF", std::abs(c_hi - 80.1) < 0.05, fmt(c_hi) + " aF");
    c.check("10 meV -> ~8.0 aF", std::abs(c_lo - 8.01) < 0.05, fmt(c_lo) + " aF");
    return c.report();
}

bool landau_blockade()
{
    Criterion c(8, "Landau levels and Coulomb blockade");
    double worst = 0.0;
    for (int n = 0; n <= 3; ++n)
        for (int m = -3; m <= 3; ++m)
            for (double b : {0.5, 1.0, 7.0}) {
                const double e1 = gqd::landau_energy({b, n, m});
                const double e4 = gqd::landau_energy({4.0 * b, n, m});
                worst = std::max(worst, std::abs(e4 / e1 - 2.0) / 2.0);
            }
    c.check("E(4B) / E(B) = 2", worst < 1e-12, "max rel error " + fmt(worst));

    const auto &pc = gqd::default_constants();
    bool steps_ok = true, count_ok = true, spacing_ok = true;
    for (double cap_af : {0.5, 1.0, 3.7, 16.0}) {
        const double cap = cap_af * gqd::units::farad_per_af;
        const double v_max = 1.3;
        const auto iv = gqd::staircase_iv(cap, v_max, 2001);
        for (const auto &pt : iv.points) {
            const double expect = std::floor(cap * std::abs(pt.voltage) / pc.e_charge + 0.5);
            steps_ok = steps_ok && pt.current == (pt.voltage < 0.0 ? -expect : expect);
        }
        const long count = gqd::staircase_step_count(cap, v_max);
        count_ok = count_ok && count == static_cast<long>(std::floor(cap * v_max / pc.e_charge + 0.5));
        count_ok = count_ok && iv.points.back().current == static_cast<double>(count);
        const auto volts = gqd::staircase_step_voltages(cap, v_max);
        spacing_ok = spacing_ok && iv.step_voltage == pc.e_charge / cap;
        for (std::size_t k = 1; k < volts.size(); ++k)
            spacing_ok = spacing_ok && std::abs((volts[k] - volts[k - 1]) - pc.e_charge / cap) <= 1e-12 * pc.e_charge / cap;
    }
    c.check("staircase current equals floor(C|V|/e + 1/2)", steps_ok);
    c.check("step count", count_ok);
    c.check("step spacing e/C", spacing_ok);

    const double ec = 5e-3;
    bool monotone = true;
    double prev_ratio = INFINITY;
    bool prev_visible = true;
    for (double t = 0.0; t <= 400.0; t += 0.05) {
        const auto v = gqd::blockade_visible_for_energy(ec, t);
        monotone = monotone && v.ratio <= prev_ratio && (prev_visible || !v.visible);
        prev_ratio = v.ratio;
        prev_visible = v.visible;
    }
    c.check("visibility monotone in T for E_C = 5 meV", monotone);
    const auto cold = gqd::blockade_visible_for_energy(ec, 0.1);
    const auto room = gqd::blockade_visible_for_energy(ec, 300.0);
    c.check("visible at 0.1 K", cold.visible, "E_C / k_B T = " + fmt(cold.ratio));
    c.check("not visible at 300 K", !room.visible, "E_C / k_B T = " + fmt(room.ratio));
    return c.report();
}

bool cli_determinism()
{
    Criterion c(9, "CLI determinism and exit codes");
    using gqd::testing::run_cli;
    for (const auto &sc : gqd::testing::subcommand_cases()) {
        auto json_args = sc.ok;
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto a = run_cli(sc.ok);
        const auto b = run_cli(sc.ok);
        const auto ja = run_cli(json_args);
        const auto jb = run_cli(json_args);
        c.check(sc.name + " byte-identical reruns", a.code == 0 && a.out == b.out && ja.out == jb.out);

        bool agree = a.code == 0 && ja.code == 0;
        double worst = 0.0;
        if (agree) {
            const auto rows = gqd::testing::split_csv(a.out);
            const auto doc = nlohmann::json::parse(ja.out);
            agree = rows.size() >= 2 && doc.size() == rows.size() - 1;
            for (std::size_t r = 1; agree && r < rows.size(); ++r)
                for (std::size_t k = 0; agree && k < rows[0].size(); ++k) {
                    const auto &v = doc[r - 1].at(rows[0][k]);
                    if (!v.is_number())
                        continue;
                    const double x = std::stod(rows[r][k]);
                    const double d = std::abs(v.get<double>() - x) / std::max(1.0, std::abs(x));
                    worst = std::max(worst, d);
                }
            agree = agree && worst <= 1e-12;
        }
        c.check(sc.name + " CSV/JSON agree", agree, "max rel diff " + fmt(worst));

        const int usage = run_cli(sc.usage_error).code;
        const int domain = run_cli(sc.domain_error).code;
        c.check(sc.name + " exit codes 0/2/1", a.code == 0 && usage == 2 && domain == 1,
                std::to_string(a.code) + "/" + std::to_string(usage) + "/" + std::to_string(domain));
    }
    return c.report();
}

} // namespace

int main()
{
    bool all = true;
    all = bessel_kernel() && all;
    all = dirac_roots() && all;
    all = dirac_scaling() && all;

    std::vector<TbRun> runs;
    const auto t0 = Clock::now();
    for (double r : {2.0, 3.0, 4.0, 5.0, 6.0}) {
        const auto ti = Clock::now();
        auto spec = gqd::tb_spectrum(r);
        runs.push_back({r, std::move(spec), seconds_since(ti)});
    }
    const double tb_seconds = seconds_since(t0);

    all = tight_binding(runs, tb_seconds) && all;
    all = gap_scaling(runs) && all;
    all = cross_model(runs) && all;
    all = confinement() && all;
    all = landau_blockade() && all;
    all = cli_determinism() && all;

    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
    return all ? 0 : 1;
}
