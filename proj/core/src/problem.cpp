#include "dbvp/problem.hpp"

#include "dbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dbvp {

ParameterFunction::ParameterFunction(std::vector<double> values, double bound)
    : values_(std::move(values)), bound_(bound) {
    if (values_.empty()) throw InvalidInputError("ParameterFunction: empty value vector");
    if (!(bound_ > 0.0)) throw InvalidInputError("ParameterFunction: bound M must be positive");
    for (double v : values_)
        if (!(std::abs(v) <= bound_))
            throw InvalidInputError("ParameterFunction: sup norm exceeds the bound M");
}

ParameterFunction ParameterFunction::constant(int T, double value, double bound) {
    if (T < 1) throw InvalidInputError("ParameterFunction::constant: T must be >= 1");
    return ParameterFunction(std::vector<double>(static_cast<size_t>(T), value), bound);
}

double ParameterFunction::sup_distance(const ParameterFunction& other) const {
    if (other.values_.size() != values_.size())
        throw InvalidInputError("sup_distance: horizon mismatch");
    double d = 0.0;
    for (size_t i = 0; i < values_.size(); ++i)
        d = std::max(d, std::abs(values_[i] - other.values_[i]));
    return d;
}

double DirichletProblem::min_p() const {
    double m = p.empty() ? 0.0 : p[0];
    for (double v : p) m = std::min(m, v);
    return m;
}

void DirichletProblem::validate() const {
    if (T < 1) throw InvalidInputError("DirichletProblem: T must be >= 1");
    if (p.size() != static_cast<size_t>(T) + 1)
        throw InvalidInputError("DirichletProblem: p must have T+1 entries (k = 1..T+1)");
    if (g.size() != static_cast<size_t>(T))
        throw InvalidInputError("DirichletProblem: g must have T entries (k = 1..T)");
    if (!f.eval) throw InvalidInputError("DirichletProblem: nonlinearity has no eval");
    if (!(M_param > 0.0)) throw InvalidInputError("DirichletProblem: M must be positive");
    if (alpha && !(*alpha > 0.0))
        throw InvalidInputError("DirichletProblem: alpha must be positive when given");
}

void EmdenProblem::validate() const {
    if (T < 1) throw InvalidInputError("EmdenProblem: T must be >= 1");
    if (p.size() != static_cast<size_t>(T) + 1)
        throw InvalidInputError("EmdenProblem: p must have T+1 entries (k = 0..T)");
    if (q.size() != static_cast<size_t>(T))
        throw InvalidInputError("EmdenProblem: q must have T entries (k = 1..T)");
    if (g.size() != static_cast<size_t>(T))
        throw InvalidInputError("EmdenProblem: g must have T entries (k = 1..T)");
    if (!f.eval) throw InvalidInputError("EmdenProblem: nonlinearity has no eval");
    if (!(M_param > 0.0)) throw InvalidInputError("EmdenProblem: M must be positive");
    if (!(r > 1.0 && r < 2.0))
        throw InvalidInputError("EmdenProblem: exponent r must lie strictly in (1,2)");
}

namespace {

// Antiderivative of 1/(1+t^4); vanishes at 0.
double quartic_rational_primitive(double x) {
    const double s = std::numbers::sqrt2;
    const double num = x * x + x * s + 1.0;
    const double den = x * x - x * s + 1.0;
    return s / 8.0 * std::log(num / den) +
           s / 4.0 * (std::atan(x * s + 1.0) + std::atan(x * s - 1.0));
}

std::function<double(int)> make_q_weight(const std::vector<double>& q_weight) {
    if (q_weight.empty()) return [](int) { return 1.0; };
    if (q_weight.size() == 1) {
        const double c = q_weight[0];
        return [c](int) { return c; };
    }
    auto table = q_weight;
    return [table](int k) {
        const size_t i = static_cast<size_t>(k - 1);
        if (i >= table.size())
            throw InvalidInputError("q-weight table shorter than the grid index");
        return table[i];
    };
}

} // namespace

double example2_primitive(double y) {
    if (y >= 0.0) return -y;
    // int_0^y -(t+1)/(1+t^4) dt = -atan(y^2)/2 - int_0^y dt/(1+t^4)
    return -0.5 * std::atan(y * y) - quartic_rational_primitive(y);
}

Nonlinearity builtin_nonlinearity(const std::string& name, const BuiltinParams& params) {
    Nonlinearity nl;
    nl.name = name;
    if (name == "linear") {
        const double a = params.slope.value_or(-1.0);
        const double b = params.u_coeff.value_or(0.0);
        nl.eval = [a, b](int, double y, double u) { return a * y + b * u; };
        nl.primitive = [a, b](int, double y, double u) { return a * y * y / 2.0 + b * u * y; };
        nl.dfdy = [a](int, double, double) { return a; };
        if (a < 0.0) nl.alpha = 1.0; // any alpha works: y*f = a*y^2 + ... <= 0 needs b*u small
        return nl;
    }
    if (name == "constant_sign") {
        const double c = params.c.value_or(1.0);
        nl.eval = [c](int, double, double) { return c; };
        nl.primitive = [c](int, double y, double) { return c * y; };
        nl.dfdy = [](int, double, double) { return 0.0; };
        return nl;
    }
    if (name == "example1") {
        const int l = params.l.value_or(1);
        if (l < 1) throw InvalidInputError("example1: l must be a natural number");
        auto qw = make_q_weight(params.q_weight);
        auto rw = params.r_weight ? params.r_weight : [](double) { return 1.0; };
        const double e = 2.0 * l;
        nl.eval = [qw, rw, e](int k, double y, double u) {
            const double h = (y <= 0.0) ? std::pow(y, e) : -std::pow(y, e);
            return qw(k) * h * rw(u);
        };
        nl.primitive = [qw, rw, e](int k, double y, double u) {
            return qw(k) * rw(u) * (-std::pow(std::abs(y), e + 1.0) / (e + 1.0));
        };
        nl.dfdy = [qw, rw, e](int k, double y, double u) {
            const double hp = (y <= 0.0) ? e * std::pow(y, e - 1.0) : -e * std::pow(y, e - 1.0);
            return qw(k) * hp * rw(u);
        };
        nl.claims_a4 = true;
        return nl;
    }
    if (name == "example2") {
        auto qw = make_q_weight(params.q_weight);
        auto rw = params.r_weight ? params.r_weight : [](double) { return 1.0; };
        nl.eval = [qw, rw](int k, double y, double u) {
            const double h = (y < 0.0) ? -(y + 1.0) / (1.0 + y * y * y * y) : -1.0;
            return qw(k) * h * rw(u);
        };
        nl.primitive = [qw, rw](int k, double y, double u) {
            return qw(k) * rw(u) * example2_primitive(y);
        };
        return nl;
    }
    if (name == "table") {
        if (params.xs.size() != params.ys.size() || params.xs.size() < 2)
            throw InvalidInputError("table: xs and ys must match and have >= 2 samples");
        if (!std::is_sorted(params.xs.begin(), params.xs.end()))
            throw InvalidInputError("table: xs must be sorted ascending");
        auto xs = params.xs;
        auto ys = params.ys;
        nl.eval = [xs, ys](int, double y, double) {
            if (y <= xs.front()) return ys.front();
            if (y >= xs.back()) return ys.back();
            const auto it = std::upper_bound(xs.begin(), xs.end(), y);
            const size_t i = static_cast<size_t>(it - xs.begin());
            const double t = (y - xs[i - 1]) / (xs[i] - xs[i - 1]);
            return ys[i - 1] + t * (ys[i] - ys[i - 1]);
        };
        return nl;
    }
    throw InvalidInputError("unknown builtin nonlinearity: " + name);
}

std::vector<ParameterFunction> make_parameter_sequence(const ParameterFunction& base,
                                                       const std::vector<double>& direction,
                                                       const std::vector<double>& schedule,
                                                       int count, bool* clipped) {
    if (count <= 0) throw InvalidInputError("make_parameter_sequence: count must be positive");
    if (schedule.empty()) throw InvalidInputError("make_parameter_sequence: empty schedule");
    if (static_cast<size_t>(count) > schedule.size())
        throw InvalidInputError("make_parameter_sequence: schedule shorter than count");
    if (direction.size() != base.values().size())
        throw InvalidInputError("make_parameter_sequence: direction length mismatch");
    const double M = base.bound();
    bool any_clipped = false;
    std::vector<ParameterFunction> seq;
    seq.reserve(static_cast<size_t>(count) + 1);
    for (int n = 0; n < count; ++n) {
        std::vector<double> v(base.values());
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] += schedule[static_cast<size_t>(n)] * direction[i];
            if (v[i] > M) { v[i] = M; any_clipped = true; }
            if (v[i] < -M) { v[i] = -M; any_clipped = true; }
        }
        seq.emplace_back(std::move(v), M);
    }
    seq.push_back(base); // the limit u_bar
    if (clipped) *clipped = any_clipped;
    return seq;
}

} // namespace dbvp
