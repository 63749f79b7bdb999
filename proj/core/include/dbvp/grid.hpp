#pragma once

#include <span>
#include <utility>
#include <vector>

namespace dbvp {

enum class BcKind {
    DirichletZero, // x(0) = x(T+1) = 0, values indexed 0..T+1
    PeriodicType   // x(0) = x(T), values indexed 0..T
};

/// Real values on a discrete interval with an attached boundary-condition kind.
///
/// DirichletZero stores T+2 values with both ends pinned to zero exactly.
/// PeriodicType stores T+1 values with values[0] == values[T] exactly; the flux
/// condition p(0)Dx(0) = p(T)Dx(T) lives in the residual, not in storage.
class GridFunction {
public:
    GridFunction(std::vector<double> values, BcKind bc);

    /// Zero function with Dirichlet ends, horizon T.
    static GridFunction dirichlet_zero(int T);
    /// Dirichlet function from interior values x(1..T); ends padded with zeros.
    static GridFunction dirichlet(const std::vector<double>& interior);
    /// Periodic-type function from x(1..T); x(0) is set equal to x(T).
    static GridFunction periodic(const std::vector<double>& x1_to_xT);

    /// Value at grid index k (0-based public convention 0..T+1 resp. 0..T).
    double operator()(int k) const { return values_[static_cast<size_t>(k)]; }

    int horizon() const { return horizon_; }
    BcKind bc_kind() const { return bc_; }
    std::span<const double> values() const { return values_; }
    size_t size() const { return values_.size(); }

    /// Interior values x(1..T).
    std::vector<double> interior() const;

private:
    std::vector<double> values_;
    BcKind bc_;
    int horizon_;
};

/// The two norms on E of one grid function, plus the truncated-sum diagnostic.
struct NormPair {
    double energy;           // sqrt(sum_{k=1}^{T+1} (Dy(k-1))^2), full Dirichlet energy
    double euclidean;        // sqrt(sum_{k=1}^{T} y(k)^2)
    double energy_truncated; // sqrt(sum_{k=1}^{T} (Dy(k))^2), the k=1..T variant
};

/// Forward differences: out[k] = y(k+1) - y(k), length = size(y) - 1.
std::vector<double> forward_difference(const GridFunction& y);

/// Both norms of a DirichletZero function.
NormPair norms(const GridFunction& y);

/// Tightest constants (gamma, gamma1) with gamma*|y| <= ||y|| <= gamma1*|y| on E:
/// square roots of the extremal eigenvalues of the T x T matrix tridiag(-1, 2, -1).
std::pair<double, double> equivalence_constants(int T);

} // namespace dbvp
