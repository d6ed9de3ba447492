#include "rinar/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace rinar {

namespace {

struct Node {
    double x;    // abscissa in (0,1)
    double oma;  // 1 - x, computed without cancellation
    double w;    // dx/dt at the node
};

// tanh-sinh map on (0,1): x(t) = 1/(1+exp(-pi sinh t)).
// Both x and 1-x are produced in full relative precision, which is what lets
// integrands resolve (1-a)^beta factors arbitrarily close to the endpoint.
bool make_node(double t, Node& node) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    double u = half_pi * std::sinh(t);
    double eu = std::exp(-2.0 * std::fabs(u));
    if (eu == 0.0) return false;  // endpoint indistinguishable in double
    double near = eu / (1.0 + eu);  // distance to the closer endpoint
    double far = 1.0 / (1.0 + eu);
    node.x = u >= 0.0 ? far : near;
    node.oma = u >= 0.0 ? near : far;
    node.w = std::numbers::pi * std::cosh(t) * eu / ((1.0 + eu) * (1.0 + eu));
    return node.w > 0.0;
}

constexpr double kTMax = 6.8;

}  // namespace

QuadResult tanh_sinh_01(const Integrand01& f, const QuadratureSpec& spec) {
    QuadResult res;
    double h = 1.0;

    auto eval = [&](double t, Complex& acc) {
        Node node;
        if (!make_node(t, node)) return;
        Complex v = f(node.x, node.oma);
        if (std::isfinite(v.real()) && std::isfinite(v.imag())) {
            acc += node.w * v;
            ++res.evaluations;
        }
    };

    // Level 0: nodes at integer t.
    Complex sum(0.0, 0.0);
    eval(0.0, sum);
    for (double t = 1.0; t <= kTMax; t += 1.0) {
        eval(t, sum);
        eval(-t, sum);
    }
    Complex integral = h * sum;

    for (int level = 1; level <= spec.max_refinements; ++level) {
        h *= 0.5;
        Complex odd(0.0, 0.0);
        for (double t = h; t <= kTMax; t += 2.0 * h) {
            eval(t, odd);
            eval(-t, odd);
        }
        Complex refined = 0.5 * integral + h * odd;
        res.error = std::abs(refined - integral);
        integral = refined;
        if (level >= 3 && res.error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(integral))) {
            res.converged = true;
            break;
        }
    }
    res.value = integral;
    return res;
}

namespace {

struct SimpsonState {
    const std::function<Complex(double)>* f;
    double tol;
    int max_depth;
    long evaluations = 0;
    double err = 0.0;
    bool depth_exceeded = false;
};

Complex simpson_step(SimpsonState& st, double a, double b, Complex fa, Complex fm, Complex fb,
                     Complex whole, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    Complex flm = (*st.f)(lm);
    Complex frm = (*st.f)(rm);
    st.evaluations += 2;
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    Complex delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * st.tol * (b - a) || depth >= st.max_depth) {
        if (depth >= st.max_depth && std::abs(delta) > 15.0 * st.tol * (b - a)) {
            st.depth_exceeded = true;
        }
        st.err += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_step(st, a, m, fa, flm, fm, left, depth + 1) +
           simpson_step(st, m, b, fm, frm, fb, right, depth + 1);
}

Complex adaptive_simpson(const std::function<Complex(double)>& f, double a, double b, double tol,
                         int max_depth, QuadResult& out) {
    SimpsonState st;
    st.f = &f;
    st.tol = tol / std::max(b - a, 1e-300);
    st.max_depth = max_depth;
    Complex fa = f(a);
    Complex fb = f(b);
    Complex fm = f(0.5 * (a + b));
    st.evaluations += 3;
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Complex result = simpson_step(st, a, b, fa, fm, fb, whole, 0);
    out.evaluations += st.evaluations;
    out.error += st.err;
    if (st.depth_exceeded) out.converged = false;
    return result;
}

}  // namespace

QuadResult adaptive_substitution_01(const Integrand01& smooth_part, const QuadratureSpec& spec) {
    QuadResult res;
    res.converged = true;
    double beta = spec.beta;
    double split = spec.split;
    if (!(split > 0.0 && split < 1.0)) split = 0.9;
    int depth = spec.max_refinements + 24;
    double tol = 0.5 * std::max(spec.abs_tol, spec.rel_tol);

    // Head: the weight is evaluated directly; (1-a) is exact enough for a <= split.
    auto head = [&](double a) -> Complex {
        double oma = 1.0 - a;
        return smooth_part(a, oma) * std::pow(oma, beta);
    };
    Complex head_val = adaptive_simpson(head, 0.0, split, tol, depth, res);

    // Tail: u = (1-a)^(1+beta) removes the endpoint singularity entirely.
    double p = 1.0 + beta;
    double ucap = std::pow(1.0 - split, p);
    auto tail = [&](double u) -> Complex {
        double oma = std::pow(u, 1.0 / p);
        double a = 1.0 - oma;
        return smooth_part(a, oma) / p;
    };
    Complex tail_val = adaptive_simpson(tail, 0.0, ucap, tol, depth, res);

    res.value = head_val + tail_val;
    return res;
}

QuadResult integrate_mixture(const Integrand01& smooth_part, const QuadratureSpec& spec) {
    if (spec.method == QuadMethod::AdaptiveWithSubstitution) {
        return adaptive_substitution_01(smooth_part, spec);
    }
    return tanh_sinh_01(
        [&](double a, double oma) { return smooth_part(a, oma) * std::pow(oma, spec.beta); },
        spec);
}

}  // namespace rinar
