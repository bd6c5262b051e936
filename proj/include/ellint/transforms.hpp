#ifndef ELLINT_TRANSFORMS_HPP
#define ELLINT_TRANSFORMS_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ellint/quadrature.hpp"
#include "ellint/specfun.hpp"

// The paper's integral-transform operators as executable maps: the four
// Beltrami kernels, Landen descent, the Abel transform and Abel-equation
// solver, and the Tricomi (finite Hilbert) transform.

namespace ellint::transforms {

enum class BeltramiVariant { B, iB, LB, iLB };

struct WeightFunction {
    std::function<double(double)> eval;
    bool singular0 = false;
    bool singular1 = false;
};

// Rational kernels of the four Beltrami rotations; each carries its
// 2/pi normalization so that
//   int_0^1 K(k) f(k) dk = int_0^1 K(sqrt(1-kappa^2)) (Tf)(kappa) dkappa
// with (Tf)(kappa) = int_0^1 kernel(xi, kappa) f(xi) dxi.
inline double beltrami_kernel(BeltramiVariant variant, double k, double kappa) {
    if (!(k >= 0.0 && k < 1.0) || !(kappa > 0.0 && kappa < 1.0))
        throw std::domain_error("beltrami_kernel: moduli out of range");
    static const double two_over_pi = 2.0 / specfun::pi;
    switch (variant) {
        case BeltramiVariant::B:
            return two_over_pi / (1.0 - k * k * kappa * kappa);
        case BeltramiVariant::iB:
            return two_over_pi * std::sqrt((1.0 - k) * (1.0 + k)) /
                   (1.0 - k * k * (1.0 - kappa * kappa));
        case BeltramiVariant::LB: {
            const double opk = 1.0 + k;
            return two_over_pi * opk / (opk * opk - 4.0 * k * kappa * kappa);
        }
        case BeltramiVariant::iLB: {
            const double omk = 1.0 - k;
            return two_over_pi * omk / (omk * omk + 4.0 * k * kappa * kappa);
        }
    }
    throw std::logic_error("beltrami_kernel: unknown variant");
}

// Transformed weight (Tf)(kappa) by quadrature; the closed forms the
// paper derives for specific f are never substituted here, so both sides
// of an identity stay independent.
inline quadrature::QuadResult beltrami_transform(BeltramiVariant variant,
                                                 const WeightFunction& f, double kappa,
                                                 double tol) {
    auto integrand = [variant, &f, kappa](double xi) {
        return beltrami_kernel(variant, xi, kappa) * f.eval(xi);
    };
    auto res = quadrature::tanh_sinh_fn(integrand, 0.0, 1.0, f.singular0, f.singular1, tol);
    if (!res.converged) {
        // The B kernel steepens as k kappa -> 1; fall back on bisection.
        auto alt = quadrature::adaptive_fn(integrand, 1e-12, 1.0 - 1e-12, tol);
        alt.n_evals += res.n_evals;
        return alt;
    }
    return res;
}

// (Af)(x) = int_x^inf 2 f(r) r / sqrt(r^2 - x^2) dr.  The substitution
// r = sqrt(x^2 + s^2) removes the endpoint singularity exactly.
inline quadrature::QuadResult abel_forward(const std::function<double(double)>& f, double x,
                                           double tol) {
    if (x < 0.0) throw std::domain_error("abel_forward: x must be >= 0");
    auto g = [&f, x](double s) { return 2.0 * f(std::sqrt(x * x + s * s)); };
    return quadrature::halfline_fn(g, tol);
}

// Abel integral equation int_0^x phi(y)/sqrt(x-y) dy = f(x): returns
// int_0^x phi = (1/pi) int_0^x f(y)/sqrt(x-y) dy.
inline quadrature::QuadResult abel_solve(const std::function<double(double)>& f, double x,
                                         double tol) {
    if (!(x > 0.0)) throw std::domain_error("abel_solve: x must be > 0");
    auto g = [&f, x](double u) { return f(x - u) / std::sqrt(u); };
    auto res = quadrature::tanh_sinh_fn(g, 0.0, x, true, true, tol);
    res.value /= specfun::pi;
    res.err_est /= specfun::pi;
    return res;
}

// Tricomi (finite Hilbert) transform (Tf)(x) = PV int_-1^1 f(xi)/(pi(x-xi)) dxi.
inline quadrature::QuadResult tricomi_pv(const std::function<double(double)>& f, double x,
                                         double tol, bool singular_left = true,
                                         bool singular_right = true) {
    if (!(x > -1.0 && x < 1.0)) throw std::domain_error("tricomi_pv: x must be in (-1,1)");
    // f(xi)/(pi (x-xi)) already has the g/(c-xi) shape the PV scheme expects.
    // The kernels transformed in this catalog depend on |xi|, so the
    // pieces additionally cut at 0 where K(sqrt(1-xi^2)) is log-singular.
    auto full = [&f, x](double xi) { return f(xi) / (specfun::pi * (x - xi)); };
    return quadrature::principal_value_fn(full, -1.0, 1.0, x, singular_left, singular_right,
                                          tol, {0.0});
}

// Modulus-descending Landen step k -> (1-k')/(1+k'); iterated descent
// drives any modulus to 0.
inline double landen_descend(double k) {
    if (!(k > 0.0 && k < 1.0)) throw std::domain_error("landen_descend: k must be in (0,1)");
    const double kc = std::sqrt((1.0 - k) * (1.0 + k));
    return (1.0 - kc) / (1.0 + kc);
}

} // namespace ellint::transforms

#endif
