#ifndef GQD_SYMMETRIC_EIGEN_HPP
#define GQD_SYMMETRIC_EIGEN_HPP

// Dense real symmetric eigensolver: Householder reduction to tridiagonal form
// followed by implicit QL iteration with Wilkinson-style shifts.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gqd/errors.hpp"

namespace gqd {

/// Row-major square matrix of doubles.
class DenseMatrix
{
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    double &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
    std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
    std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return data_; }

    double max_abs() const noexcept
    {
        double m = 0.0;
        for (double v : data_)
            m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const DenseMatrix &) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Eigenpairs in ascending eigenvalue order; vectors(:, k) belongs to values[k].
struct SymmetricEigensystem
{
    std::vector<double> values;
    DenseMatrix vectors;
};

inline constexpr int ql_iteration_cap = 60;
inline constexpr double symmetry_tolerance = 1e-12;

namespace detail {

inline void check_symmetric(const DenseMatrix &a)
{
    const std::size_t n = a.size();
    const double tol = symmetry_tolerance * std::max(1.0, a.max_abs());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!std::isfinite(a(i, j)) || !std::isfinite(a(j, i)))
                throw DomainError("eigenvalues_symmetric: matrix has non-finite entries");
            if (std::abs(a(i, j) - a(j, i)) > tol)
                throw DomainError("eigenvalues_symmetric: matrix is not symmetric at (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
        }
        if (!std::isfinite(a(i, i)))
            throw DomainError("eigenvalues_symmetric: matrix has non-finite entries");
    }
}

/// Householder reduction of the upper triangle of `a` (overwritten). On return
/// diag/offdiag hold the tridiagonal form, offdiag[i] coupling i and i+1.
/// When `q` is non-null it receives the orthogonal Q with A = Q T Q^T.
inline void tridiagonalize(DenseMatrix &a, std::vector<double> &diag, std::vector<double> &offdiag, DenseMatrix *q)
{
    const std::size_t n = a.size();
    diag.assign(n, 0.0);
    offdiag.assign(n, 0.0);
    std::vector<double> betas(n, 0.0);
    std::vector<double> p(n), w(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        // v lives in row k, columns k+1..n-1.
        double *v = &a(k, k + 1);
        const std::size_t len = n - k - 1;
        double tail = 0.0;
        for (std::size_t i = 1; i < len; ++i)
            tail += v[i] * v[i];
        diag[k] = a(k, k);
        if (tail == 0.0) {
            offdiag[k] = v[0];
            betas[k] = 0.0;
            continue;
        }
        const double x0 = v[0];
        const double norm = std::sqrt(x0 * x0 + tail);
        const double alpha = x0 >= 0.0 ? -norm : norm;
        v[0] = x0 - alpha;
        const double vtv = v[0] * v[0] + tail;
        const double beta = 2.0 / vtv;
        betas[k] = beta;
        offdiag[k] = alpha;

        // p = beta * A22 v using the upper triangle of A22.
        const std::size_t off = k + 1;
        std::fill(p.begin(), p.begin() + len, 0.0);
        for (std::size_t i = 0; i < len; ++i) {
            const double *arow = &a(off + i, off);
            const double vi = v[i];
            double acc = arow[i] * vi;
            for (std::size_t j = i + 1; j < len; ++j) {
                acc += arow[j] * v[j];
                p[j] += arow[j] * vi;
            }
            p[i] += acc;
        }
        double pv = 0.0;
        for (std::size_t i = 0; i < len; ++i) {
            p[i] *= beta;
            pv += p[i] * v[i];
        }
        const double kfac = 0.5 * beta * pv;
        for (std::size_t i = 0; i < len; ++i)
            w[i] = p[i] - kfac * v[i];

        // A22 -= v w^T + w v^T (upper triangle only).
        for (std::size_t i = 0; i < len; ++i) {
            double *arow = &a(off + i, off);
            const double vi = v[i];
            const double wi = w[i];
            for (std::size_t j = i; j < len; ++j)
                arow[j] -= vi * w[j] + wi * v[j];
        }
    }
    if (n >= 2) {
        diag[n - 2] = a(n - 2, n - 2);
        offdiag[n - 2] = a(n - 2, n - 1);
    }
    if (n >= 1)
        diag[n - 1] = a(n - 1, n - 1);

    if (q != nullptr) {
        *q = DenseMatrix::identity(n);
        std::vector<double> u(n);
        // Q = H_0 H_1 ... H_{n-3}, applied right to left.
        for (std::size_t kk = n >= 2 ? n - 2 : 0; kk-- > 0;) {
            if (betas[kk] == 0.0)
                continue;
            const double *v = &a(kk, kk + 1);
            const std::size_t off = kk + 1;
            const std::size_t len = n - off;
            std::fill(u.begin(), u.end(), 0.0);
            for (std::size_t i = 0; i < len; ++i) {
                const auto qrow = q->row(off + i);
                for (std::size_t j = 0; j < n; ++j)
                    u[j] += v[i] * qrow[j];
            }
            for (std::size_t i = 0; i < len; ++i) {
                auto qrow = q->row(off + i);
                const double s = betas[kk] * v[i];
                for (std::size_t j = 0; j < n; ++j)
                    qrow[j] -= s * u[j];
            }
        }
    }
}

/// Implicit QL on a symmetric tridiagonal matrix. `z`, when non-null, is
/// post-multiplied by the accumulated rotations.
inline void tridiagonal_ql(std::vector<double> &d, std::vector<double> &e, DenseMatrix *z)
{
    const int n = static_cast<int>(d.size());
    if (n == 0)
        return;
    e[n - 1] = 0.0;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m == l)
                break;
            if (iter++ == ql_iteration_cap)
                throw NumericError("eigenvalues_symmetric: QL iteration did not converge for eigenvalue index " +
                                   std::to_string(l));
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i;
            bool underflow = false;
            for (i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (z != nullptr) {
                    const std::size_t nn = z->size();
                    for (std::size_t k = 0; k < nn; ++k) {
                        f = (*z)(k, i + 1);
                        (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
                        (*z)(k, i) = c * (*z)(k, i) - s * f;
                    }
                }
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (true);
    }
}

} // namespace detail

/// All eigenvalues of a symmetric matrix, ascending. The rvalue overload
/// reuses the argument's storage as workspace.
inline std::vector<double> eigenvalues_symmetric(DenseMatrix &&m)
{
    detail::check_symmetric(m);
    DenseMatrix work = std::move(m);
    std::vector<double> d, e;
    detail::tridiagonalize(work, d, e, nullptr);
    detail::tridiagonal_ql(d, e, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

inline std::vector<double> eigenvalues_symmetric(const DenseMatrix &m) { return eigenvalues_symmetric(DenseMatrix(m)); }

/// Eigenvalues and orthonormal eigenvectors. O(n^3) extra work for the
/// vectors, so prefer eigenvalues_symmetric when they are not needed.
inline SymmetricEigensystem eigensystem_symmetric(const DenseMatrix &m)
{
    detail::check_symmetric(m);
    const std::size_t n = m.size();
    DenseMatrix work = m;
    DenseMatrix q;
    std::vector<double> d, e;
    detail::tridiagonalize(work, d, e, &q);
    detail::tridiagonal_ql(d, e, &q);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    SymmetricEigensystem out{std::vector<double>(n), DenseMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        for (std::size_t i = 0; i < n; ++i)
            out.vectors(i, k) = q(i, order[k]);
    }
    return out;
}

} // namespace gqd

#endif
