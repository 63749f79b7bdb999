#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dbvp {

/// A nonlinearity handle f(k, y, u), with an optional closed-form primitive
/// F(k, y, u) = int_0^y f(k, t, u) dt and an optional analytic y-derivative.
/// Handles must be pure and callable from multiple threads.
struct Nonlinearity {
    std::string name;
    std::function<double(int k, double y, double u)> eval;
    std::function<double(int k, double y, double u)> primitive; // may be empty
    std::function<double(int k, double y, double u)> dfdy;      // may be empty

    // Declared growth metadata (claims, validated elsewhere).
    std::optional<double> alpha;       // A2 sign-condition threshold
    std::optional<double> sublinear_r; // A8 exponent in (1,2)
    bool claims_a4 = false;            // unverifiable flag: A4 is never stated

    // Raw params document for builtin-backed handles (round-trip support).
    std::string params_doc;
};

/// Element of L_M: values on [1,T] with sup norm <= M, enforced at construction.
class ParameterFunction {
public:
    ParameterFunction(std::vector<double> values, double bound);

    /// Constant parameter function of horizon T.
    static ParameterFunction constant(int T, double value, double bound);

    double operator()(int k) const { return values_[static_cast<size_t>(k - 1)]; }
    int horizon() const { return static_cast<int>(values_.size()); }
    double bound() const { return bound_; }
    const std::vector<double>& values() const { return values_; }

    /// Sup-norm distance to another parameter function.
    double sup_distance(const ParameterFunction& other) const;

private:
    std::vector<double> values_;
    double bound_;
};

/// Dirichlet problem: D(p(k) Dx(k-1)) + f(k, x(k), u(k)) = g(k), x(0)=x(T+1)=0.
struct DirichletProblem {
    int T = 0;
    std::vector<double> p; // indexed 1..T+1, stored [0..T]
    std::vector<double> g; // indexed 1..T, stored [0..T-1]
    Nonlinearity f;
    double M_param = 1.0;
    std::optional<double> alpha; // A2 threshold when claimed

    double p_at(int k) const { return p[static_cast<size_t>(k - 1)]; } // k in 1..T+1
    double g_at(int k) const { return g[static_cast<size_t>(k - 1)]; } // k in 1..T
    double min_p() const;
    void validate() const; // throws InvalidInputError on shape problems
};

/// Emden-Fowler problem: D(p(k-1) Dx(k-1)) + q(k) x(k) + f(k, x(k), u(k)) = g(k)
/// with x(0) = x(T) and p(0) Dx(0) = p(T) Dx(T).
struct EmdenProblem {
    int T = 0;
    std::vector<double> p; // indexed 0..T, stored [0..T]
    std::vector<double> q; // indexed 1..T
    std::vector<double> g; // indexed 1..T
    Nonlinearity f;
    double M_param = 1.0;
    double r = 1.5; // A8 exponent, strictly in (1,2)

    double p_at(int k) const { return p[static_cast<size_t>(k)]; }        // k in 0..T
    double q_at(int k) const { return q[static_cast<size_t>(k - 1)]; }    // k in 1..T
    double g_at(int k) const { return g[static_cast<size_t>(k - 1)]; }    // k in 1..T
    void validate() const;
};

using Problem = std::variant<DirichletProblem, EmdenProblem>;

/// Builtin nonlinearity registry. Known names:
///   linear        f = slope*y + u_coeff*u        (defaults: slope=-1, u_coeff=0)
///   constant_sign f = c, independent of y and u  (default c = 1)
///   example1      f = q(k)*h(y)*r(u), h(y) = y^(2l) for y<=0, -y^(2l) for y>0
///   example2      f = q(k)*h(y)*r(u), h(y) = -(y+1)/(1+y^4) for y<0, -1 for y>=0,
///                 with its closed-form primitive attached
///   table         piecewise-linear interpolation of user samples (xs, ys) in y
struct BuiltinParams {
    std::optional<int> l;               // example1 half-exponent
    std::optional<double> c;            // constant_sign value
    std::optional<double> slope;        // linear
    std::optional<double> u_coeff;      // linear
    std::vector<double> q_weight;       // per-k weights (size T) or single value
    std::function<double(double)> r_weight; // weight in u, must be positive
    std::vector<double> xs, ys;         // table samples
};

Nonlinearity builtin_nonlinearity(const std::string& name, const BuiltinParams& params = {});

/// Closed-form primitive H(y) = int_0^y h(t) dt of the example2 kink. Exposed
/// because it doubles as a quadrature oracle.
double example2_primitive(double y);

/// Parameter sequence u_n = base + schedule[n] * direction, clipped to L_M with
/// a warning (returned in *clipped) when a step leaves the ball. The limit
/// (base itself) is appended as the last element.
std::vector<ParameterFunction> make_parameter_sequence(const ParameterFunction& base,
                                                       const std::vector<double>& direction,
                                                       const std::vector<double>& schedule,
                                                       int count,
                                                       bool* clipped = nullptr);

} // namespace dbvp
