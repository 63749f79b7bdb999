#include "dbvp/tridiag.hpp"

#include "dbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dbvp {

std::vector<double> SymTridiag::apply(const std::vector<double>& x) const {
    const size_t n = diag.size();
    if (x.size() != n) throw InvalidInputError("SymTridiag::apply: size mismatch");
    std::vector<double> y(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        y[i] = diag[i] * x[i];
        if (i > 0) y[i] += off[i - 1] * x[i - 1];
        if (i + 1 < n) y[i] += off[i] * x[i + 1];
    }
    return y;
}

namespace {

// Number of eigenvalues of m strictly below x (Sturm sequence sign count).
int sturm_count(const SymTridiag& m, double x) {
    const size_t n = m.diag.size();
    int count = 0;
    double d = 1.0;
    for (size_t i = 0; i < n; ++i) {
        const double off2 = (i == 0) ? 0.0 : m.off[i - 1] * m.off[i - 1];
        d = m.diag[i] - x - off2 / d;
        if (d == 0.0) d = 1e-300;
        if (d < 0.0) ++count;
    }
    return count;
}

// Smallest eigenvalue with index >= k (0-based) via bisection on the count.
double bisect_eigenvalue(const SymTridiag& m, int k, double lo, double hi, double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // hit floating-point resolution
        if (sturm_count(m, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& m) {
    const size_t n = m.diag.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(m.off[i - 1]);
        if (i + 1 < n) r += std::abs(m.off[i]);
        lo = std::min(lo, m.diag[i] - r);
        hi = std::max(hi, m.diag[i] + r);
    }
    return {lo - 1.0, hi + 1.0};
}

} // namespace

std::vector<double> sturm_eigenvalues(const SymTridiag& m, double abs_tol) {
    const size_t n = m.diag.size();
    if (n == 0) throw InvalidInputError("sturm_eigenvalues: empty matrix");
    auto [lo, hi] = gershgorin_bounds(m);
    std::vector<double> ev(n);
    for (size_t k = 0; k < n; ++k)
        ev[k] = bisect_eigenvalue(m, static_cast<int>(k), lo, hi, abs_tol);
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::pair<double, double> sturm_extremal_eigenvalues(const SymTridiag& m, double abs_tol) {
    const size_t n = m.diag.size();
    if (n == 0) throw InvalidInputError("sturm_extremal_eigenvalues: empty matrix");
    auto [lo, hi] = gershgorin_bounds(m);
    const double lmin = bisect_eigenvalue(m, 0, lo, hi, abs_tol);
    const double lmax = bisect_eigenvalue(m, static_cast<int>(n) - 1, lo, hi, abs_tol);
    return {lmin, lmax};
}

std::optional<std::vector<double>> thomas_solve(const std::vector<double>& sub,
                                                const std::vector<double>& diag,
                                                const std::vector<double>& sup,
                                                const std::vector<double>& rhs) {
    const size_t n = diag.size();
    if (sub.size() + 1 != n || sup.size() + 1 != n || rhs.size() != n)
        throw InvalidInputError("thomas_solve: size mismatch");
    std::vector<double> c(n, 0.0), d(n, 0.0);
    double piv = diag[0];
    if (std::abs(piv) < 1e-300) return std::nullopt;
    if (n > 1) c[0] = sup[0] / piv;
    d[0] = rhs[0] / piv;
    for (size_t i = 1; i < n; ++i) {
        piv = diag[i] - sub[i - 1] * c[i - 1];
        if (std::abs(piv) < 1e-300) return std::nullopt;
        if (i + 1 < n) c[i] = sup[i] / piv;
        d[i] = (rhs[i] - sub[i - 1] * d[i - 1]) / piv;
    }
    for (size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

std::optional<std::vector<double>> cyclic_tridiag_solve(const std::vector<double>& sub,
                                                        const std::vector<double>& diag,
                                                        const std::vector<double>& sup,
                                                        double corner_bottom,
                                                        double corner_top,
                                                        const std::vector<double>& rhs) {
    const size_t n = diag.size();
    if (n < 3) throw InvalidInputError("cyclic_tridiag_solve: n must be >= 3");
    // Sherman-Morrison: A = B + u v^T with u = (gamma,0,...,0,corner_bottom),
    // v = (1,0,...,0,corner_top/gamma).
    const double gamma = (std::abs(diag[0]) > 1e-8) ? -diag[0] : -1.0;
    std::vector<double> d = diag;
    d[0] -= gamma;
    d[n - 1] -= corner_bottom * corner_top / gamma;
    auto y = thomas_solve(sub, d, sup, rhs);
    if (!y) return std::nullopt;
    std::vector<double> uvec(n, 0.0);
    uvec[0] = gamma;
    uvec[n - 1] = corner_bottom;
    auto z = thomas_solve(sub, d, sup, uvec);
    if (!z) return std::nullopt;
    const double vy = (*y)[0] + corner_top / gamma * (*y)[n - 1];
    const double vz = (*z)[0] + corner_top / gamma * (*z)[n - 1];
    const double denom = 1.0 + vz;
    if (std::abs(denom) < 1e-300) return std::nullopt;
    const double factor = vy / denom;
    for (size_t i = 0; i < n; ++i) (*y)[i] -= factor * (*z)[i];
    return y;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, size_t n) {
    if (a.size() != n * n) throw InvalidInputError("jacobi_eigenvalues: size mismatch");
    auto at = [&](size_t i, size_t j) -> double& { return a[i * n + j]; };
    double scale = 0.0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (std::sqrt(off) < 1e-14 * scale * static_cast<double>(n)) break;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace dbvp
