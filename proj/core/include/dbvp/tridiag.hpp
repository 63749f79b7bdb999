#pragma once

#include <optional>
#include <vector>

namespace dbvp {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    size_t size() const { return diag.size(); }
    std::vector<double> apply(const std::vector<double>& x) const;
};

/// All eigenvalues of a symmetric tridiagonal matrix, ascending, by bisection
/// on the Sturm sequence. Absolute tolerance 1e-12.
std::vector<double> sturm_eigenvalues(const SymTridiag& m, double abs_tol = 1e-12);

/// Smallest/largest eigenvalue only (same bisection, two targets).
std::pair<double, double> sturm_extremal_eigenvalues(const SymTridiag& m,
                                                     double abs_tol = 1e-12);

/// Thomas algorithm for (not necessarily symmetric) tridiagonal A x = b.
/// sub/sup have n-1 entries. Returns nullopt when a pivot underflows.
std::optional<std::vector<double>> thomas_solve(const std::vector<double>& sub,
                                                const std::vector<double>& diag,
                                                const std::vector<double>& sup,
                                                const std::vector<double>& rhs);

/// Cyclic (periodic) tridiagonal solve by Sherman-Morrison: the matrix is
/// tridiag(sub, diag, sup) plus corner entries A[0][n-1] = corner_top and
/// A[n-1][0] = corner_bottom. Handles n >= 3; callers special-case n <= 2.
std::optional<std::vector<double>> cyclic_tridiag_solve(const std::vector<double>& sub,
                                                        const std::vector<double>& diag,
                                                        const std::vector<double>& sup,
                                                        double corner_bottom,
                                                        double corner_top,
                                                        const std::vector<double>& rhs);

/// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic Jacobi
/// rotations; ascending order.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, size_t n);

} // namespace dbvp
