#include "dbvp/grid.hpp"

#include "dbvp/errors.hpp"
#include "dbvp/tridiag.hpp"

#include <cmath>

namespace dbvp {

GridFunction::GridFunction(std::vector<double> values, BcKind bc)
    : values_(std::move(values)), bc_(bc) {
    if (bc_ == BcKind::DirichletZero) {
        if (values_.size() < 2)
            throw InvalidInputError("DirichletZero grid function needs at least 2 values");
        horizon_ = static_cast<int>(values_.size()) - 2;
        if (values_.front() != 0.0 || values_.back() != 0.0)
            throw InvalidInputError("DirichletZero grid function must vanish at both ends");
    } else {
        if (values_.size() < 2)
            throw InvalidInputError("PeriodicType grid function needs at least 2 values");
        horizon_ = static_cast<int>(values_.size()) - 1;
        if (values_.front() != values_.back())
            throw InvalidInputError("PeriodicType grid function must satisfy x(0) = x(T)");
    }
}

GridFunction GridFunction::dirichlet_zero(int T) {
    if (T < 1) throw InvalidInputError("horizon T must be >= 1");
    return GridFunction(std::vector<double>(static_cast<size_t>(T) + 2, 0.0),
                        BcKind::DirichletZero);
}

GridFunction GridFunction::dirichlet(const std::vector<double>& interior) {
    std::vector<double> v(interior.size() + 2, 0.0);
    for (size_t i = 0; i < interior.size(); ++i) v[i + 1] = interior[i];
    return GridFunction(std::move(v), BcKind::DirichletZero);
}

GridFunction GridFunction::periodic(const std::vector<double>& x1_to_xT) {
    if (x1_to_xT.empty()) throw InvalidInputError("periodic grid function needs T >= 1 values");
    std::vector<double> v(x1_to_xT.size() + 1);
    v[0] = x1_to_xT.back(); // x(0) = x(T)
    for (size_t i = 0; i < x1_to_xT.size(); ++i) v[i + 1] = x1_to_xT[i];
    return GridFunction(std::move(v), BcKind::PeriodicType);
}

std::vector<double> GridFunction::interior() const {
    if (bc_ == BcKind::DirichletZero)
        return std::vector<double>(values_.begin() + 1, values_.end() - 1);
    return std::vector<double>(values_.begin() + 1, values_.end());
}

std::vector<double> forward_difference(const GridFunction& y) {
    if (y.size() < 2) throw InvalidInputError("forward_difference needs at least 2 values");
    std::vector<double> d(y.size() - 1);
    for (size_t k = 0; k + 1 < y.size(); ++k)
        d[k] = y(static_cast<int>(k) + 1) - y(static_cast<int>(k));
    return d;
}

NormPair norms(const GridFunction& y) {
    if (y.bc_kind() != BcKind::DirichletZero)
        throw InvalidInputError("norms requires a DirichletZero grid function");
    const int T = y.horizon();
    double energy2 = 0.0, eucl2 = 0.0, trunc2 = 0.0;
    for (int k = 1; k <= T + 1; ++k) {
        const double d = y(k) - y(k - 1);
        energy2 += d * d;
        if (k <= T) {
            const double dk = y(k + 1) - y(k);
            trunc2 += dk * dk;
            eucl2 += y(k) * y(k);
        }
    }
    return NormPair{std::sqrt(energy2), std::sqrt(eucl2), std::sqrt(trunc2)};
}

std::pair<double, double> equivalence_constants(int T) {
    if (T < 1) throw InvalidInputError("equivalence_constants requires T >= 1");
    SymTridiag m;
    m.diag.assign(static_cast<size_t>(T), 2.0);
    m.off.assign(static_cast<size_t>(T) - 1, -1.0);
    auto [lmin, lmax] = sturm_extremal_eigenvalues(m);
    return {std::sqrt(lmin), std::sqrt(lmax)};
}

} // namespace dbvp
