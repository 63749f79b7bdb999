#pragma once

#include <functional>

namespace dbvp {

/// Adaptive composite Simpson quadrature of integrand on [a, b] to absolute
/// tolerance tol. The subdivision budget is max_intervals; exceeding it throws
/// QuadratureError carrying the best estimate so far.
double adaptive_simpson(const std::function<double(double)>& integrand,
                        double a, double b, double tol,
                        int max_intervals = 1 << 15);

} // namespace dbvp
