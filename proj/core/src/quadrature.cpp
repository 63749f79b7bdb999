#include "dbvp/quadrature.hpp"

#include "dbvp/errors.hpp"

#include <cmath>

namespace dbvp {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    int intervals_left;
    bool exhausted = false;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = st.f(lm), frm = st.f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    st.intervals_left -= 2;
    if (depth > 60 || (std::abs(delta) <= 15.0 * tol && depth > 0))
        return left + right + delta / 15.0;
    if (st.intervals_left <= 0) {
        st.exhausted = true;
        return left + right + delta / 15.0;
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& integrand,
                        double a, double b, double tol, int max_intervals) {
    if (!(tol > 0.0)) throw InvalidInputError("adaptive_simpson: tol must be positive");
    if (a == b) return 0.0;
    SimpsonState st{integrand, max_intervals};
    const double fa = integrand(a), fb = integrand(b);
    const double m = 0.5 * (a + b);
    const double fm = integrand(m);
    const double whole = simpson(fa, fm, fb, b - a);
    const double result = adapt(st, a, b, fa, fm, fb, whole, tol, 0);
    if (st.exhausted)
        throw QuadratureError("adaptive_simpson: subdivision budget exhausted", result);
    return result;
}

} // namespace dbvp
