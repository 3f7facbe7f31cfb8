#ifndef GQD_SPECIAL_FUNCTIONS_HPP
#define GQD_SPECIAL_FUNCTIONS_HPP

// Bessel functions of the first kind J_m(x) for integer order on the real
// half-line, and a scan-and-bisect root finder for continuous functions.

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "gqd/errors.hpp"

namespace gqd {

/// Integer Bessel order. Negative orders are folded onto |m| by
/// J_{-m}(x) = (-1)^m J_m(x) before evaluation.
struct BesselOrder
{
    int m = 0;

    constexpr int magnitude() const noexcept { return m < 0 ? -m : m; }
    /// Sign picked up by the reflection J_{-m} = (-1)^m J_m.
    constexpr double reflection_sign() const noexcept { return (m < 0 && (magnitude() % 2 == 1)) ? -1.0 : 1.0; }
};

namespace detail {

// Below this argument the alternating power series is used. The sum of the
// absolute values of the series terms is I_m(x) <= I_0(8) ~ 427, so the
// cancellation error stays below ~1e-13.
inline constexpr double bessel_series_limit = 8.0;

inline double bessel_j_series(int m, double x)
{
    const double half = 0.5 * x;
    double term = 1.0;
    for (int i = 1; i <= m; ++i)
        term *= half / i;
    if (term == 0.0)
        return 0.0;
    const double q = half * half;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= -q / (static_cast<double>(k) * static_cast<double>(m + k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

// Miller's downward recurrence, normalized with J_0 + 2 sum_k J_{2k} = 1.
inline double bessel_j_miller(int m, double x)
{
    constexpr double big = 1e250;
    const double top = std::max(static_cast<double>(m), x);
    int start = static_cast<int>(top + std::sqrt(160.0 * top)) + 20;
    start += start % 2;

    const double two_over_x = 2.0 / x;
    double j_next = 0.0; // J_{k+1}
    double j_cur = 1e-30; // J_k, arbitrary seed
    double norm = 0.0;
    double result = 0.0;
    for (int k = start; k > 0; --k) {
        const double j_prev = k * two_over_x * j_cur - j_next; // J_{k-1}
        j_next = j_cur;
        j_cur = j_prev;
        if (std::abs(j_cur) > big) {
            j_cur /= big;
            j_next /= big;
            norm /= big;
            result /= big;
        }
        // j_cur now holds J_{k-1}
        if ((k - 1) % 2 == 0 && k - 1 > 0)
            norm += 2.0 * j_cur;
        if (k - 1 == m)
            result = j_cur;
    }
    norm += j_cur; // J_0
    return result / norm;
}

} // namespace detail

/// J_m(x) for integer m and x >= 0. Accurate to ~1e-13 absolute for
/// x in [0, 60] and |m| <= 40.
inline double bessel_j(BesselOrder order, double x)
{
    if (!std::isfinite(x))
        throw DomainError("bessel_j: non-finite argument");
    if (x < 0.0)
        throw DomainError("bessel_j: negative argument " + std::to_string(x) + " (real half-line only)");
    const int m = order.magnitude();
    double value;
    if (x == 0.0)
        value = (m == 0) ? 1.0 : 0.0;
    else if (x <= detail::bessel_series_limit)
        value = detail::bessel_j_series(m, x);
    else
        value = detail::bessel_j_miller(m, x);
    return order.reflection_sign() * value;
}

inline double bessel_j(int m, double x) { return bessel_j(BesselOrder{m}, x); }

/// A sign-change bracket [lo, hi] with f(lo) f(hi) < 0.
struct RootBracket
{
    double lo;
    double hi;
    double f_lo;
    double f_hi;

    bool valid() const noexcept { return lo < hi && f_lo * f_hi < 0.0; }
};

/// Root finder tolerances.
inline constexpr double root_width_tolerance = 1e-12;
inline constexpr double root_residual_tolerance = 1e-10;

/// Bisects a valid bracket down to width < root_width_tolerance (or until the
/// midpoint stops moving) and returns the midpoint.
template <class F>
double bisect(F &&f, RootBracket b)
{
    if (!b.valid())
        throw DomainError("bisect: bracket does not enclose a sign change");
    for (int iter = 0; iter < 200 && (b.hi - b.lo) >= root_width_tolerance; ++iter) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi)
            break;
        const double fm = f(mid);
        if (fm == 0.0)
            return mid;
        if ((fm < 0.0) == (b.f_lo < 0.0)) {
            b.lo = mid;
            b.f_lo = fm;
        } else {
            b.hi = mid;
            b.f_hi = fm;
        }
    }
    return 0.5 * (b.lo + b.hi);
}

/// Up to n_max ascending roots of f on [lo, hi].
///
/// Sign changes are detected on the grid lo + i*scan_step (plus hi) and
/// refined by bisection. A grid point where f is exactly zero is itself a
/// root. Brackets whose bisected midpoint leaves |f| >= 1e-10 (a jump rather
/// than a root) are dropped. Tangential double roots are not detected.
template <class F>
std::vector<double> find_roots(F &&f, double lo, double hi, std::size_t n_max, double scan_step)
{
    if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
        throw DomainError("find_roots: need finite lo < hi");
    if (!std::isfinite(scan_step) || scan_step <= 0.0)
        throw DomainError("find_roots: scan_step must be > 0");

    std::vector<double> roots;
    if (n_max == 0)
        return roots;

    auto sample = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "find_roots: function is not finite at x = " << x;
            throw NumericError(msg.str());
        }
        return v;
    };

    const auto n_steps = static_cast<std::size_t>(std::ceil((hi - lo) / scan_step));
    double x_prev = lo;
    double f_prev = sample(lo);
    if (f_prev == 0.0)
        roots.push_back(lo);

    for (std::size_t i = 1; i <= n_steps && roots.size() < n_max; ++i) {
        const double x = (i == n_steps) ? hi : std::min(hi, lo + static_cast<double>(i) * scan_step);
        if (x <= x_prev)
            continue;
        const double fx = sample(x);
        if (fx == 0.0) {
            roots.push_back(x);
        } else if (f_prev * fx < 0.0) {
            const double root = bisect(f, RootBracket{x_prev, x, f_prev, fx});
            if (std::abs(f(root)) < root_residual_tolerance)
                roots.push_back(root);
        }
        x_prev = x;
        f_prev = fx;
    }
    return roots;
}

} // namespace gqd

#endif
