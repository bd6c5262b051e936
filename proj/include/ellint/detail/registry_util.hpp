#ifndef ELLINT_DETAIL_REGISTRY_UTIL_HPP
#define ELLINT_DETAIL_REGISTRY_UTIL_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "ellint/catalog.hpp"
#include "ellint/constants.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/specfun.hpp"
#include "ellint/transforms.hpp"

// Shared shorthands for the registry files.  Evaluator plans are built
// from these wrappers so every record carries its quadrature error
// estimate into the report diagnostics.

namespace ellint::catalog::detail {

struct Val {
    double v = 0.0;
    double e = 0.0;
};

template <class F>
Val ts(F&& f, double a, double b, bool sl, bool sr, double tol) {
    auto r = quadrature::tanh_sinh_fn(std::forward<F>(f), a, b, sl, sr, tol);
    return {r.value, r.converged ? r.err_est : std::max(r.err_est, 1.0)};
}

template <class F>
Val ad(F&& f, double a, double b, double tol) {
    auto r = quadrature::adaptive_fn(std::forward<F>(f), a, b, tol);
    return {r.value, r.err_est};
}

template <class F>
Val hl(F&& f, double tol) {
    auto r = quadrature::halfline_fn(std::forward<F>(f), tol);
    return {r.value, r.converged ? r.err_est : std::max(r.err_est, 1.0)};
}

// Distance-to-endpoint quadrature; integrand signature f(x, x-a, b-x).
template <class F>
Val ts2(F&& f, double a, double b, double tol) {
    auto r = quadrature::tanh_sinh_sides_fn(std::forward<F>(f), a, b, tol);
    return {r.value, r.converged ? r.err_est : std::max(r.err_est, 1.0)};
}

// atanh(x) for x in [0,1) given 1-x^2 computed without cancellation.
inline double atanh_c(double x, double one_minus_x2) {
    return std::log1p(x) - 0.5 * std::log(one_minus_x2);
}

// acos(x) / asin(x) for x near 1 given an exact 1-x^2.
inline double acos_c(double x, double one_minus_x2) {
    return std::atan2(std::sqrt(one_minus_x2), x);
}
inline double asin_c(double x, double one_minus_x2) {
    return specfun::pi / 2.0 - std::atan2(std::sqrt(one_minus_x2), x);
}

inline double K(double k) { return specfun::ellip_k(k); }
inline double E(double k) { return specfun::ellip_e(k); }
inline double Kc(double kappa) { return specfun::ellip_k_comp(kappa); } // K(sqrt(1-kappa^2))
inline double Ec(double kappa) { return specfun::ellip_e_comp(kappa); }
inline double Ksqrt(double t) { return specfun::ellip_k_sqrt(t); } // K(sqrt(t))
inline double Esqrt(double t) { return specfun::ellip_e_sqrt(t); }
// K(sqrt(t)) with 1-t supplied exactly by the caller.
inline double Ksqrt_c(double t, double one_minus_t) {
    return (one_minus_t <= 0.5) ? specfun::ellip_k_comp(std::sqrt(one_minus_t))
                                : specfun::ellip_k(std::sqrt(t));
}
// K(x) for x near 1 with 1-x carried exactly (distance-form nodes).
inline double K_ur(double x, double ur) {
    return specfun::ellip_k(
        specfun::Modulus::from_complement(std::min(1.0, std::sqrt(ur * (1.0 + x)))));
}

inline constexpr double PI = specfun::pi;

// L(beta) = G + (1/4) int_0^beta log tan((pi-a)/4) da, the independent
// right-hand side for the beta-prime family.
inline double L_beta(double beta) {
    const double g = constants::catalan();
    if (beta == 0.0) return g;
    auto r = quadrature::adaptive_fn(
        [](double a) { return std::log(std::tan((PI - a) / 4.0)); }, 0.0, beta, 1e-13);
    return g + 0.25 * r.value;
}

struct RecordBuilder {
    std::vector<IdentityRecord>& out;

    void simple(std::string id, std::string section, std::string lhs_plan, std::string rhs_plan,
                std::string lhs_top, std::string rhs_top, double tol, CostClass cost,
                std::vector<std::string> tags, std::vector<std::string> covers,
                std::function<Val()> lhs, std::function<Val()> rhs) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.section = std::move(section);
        rec.lhs_plan = std::move(lhs_plan);
        rec.rhs_plan = std::move(rhs_plan);
        rec.lhs_top_op = std::move(lhs_top);
        rec.rhs_top_op = std::move(rhs_top);
        rec.tol = tol;
        rec.cost = cost;
        rec.tags = std::move(tags);
        rec.covers = std::move(covers);
        rec.runner = [lhs = std::move(lhs), rhs = std::move(rhs)]() {
            RunOutput o;
            const Val l = lhs();
            const Val r = rhs();
            o.lhs = l.v;
            o.rhs = r.v;
            o.diag = l.e + r.e;
            return o;
        };
        out.push_back(std::move(rec));
    }

    // Function-valued identity checked over a fixed parameter grid; the
    // report carries the worst grid point.
    void grid(std::string id, std::string section, std::string lhs_plan, std::string rhs_plan,
              std::string lhs_top, std::string rhs_top, double tol, CostClass cost,
              std::vector<std::string> tags, std::vector<std::string> covers,
              std::vector<double> params, std::function<Val(double)> lhs,
              std::function<Val(double)> rhs) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.section = std::move(section);
        rec.lhs_plan = std::move(lhs_plan);
        rec.rhs_plan = std::move(rhs_plan);
        rec.lhs_top_op = std::move(lhs_top);
        rec.rhs_top_op = std::move(rhs_top);
        rec.tol = tol;
        rec.cost = cost;
        rec.tags = std::move(tags);
        rec.tags.push_back("function-valued");
        rec.covers = std::move(covers);
        rec.grid = params;
        rec.runner = [params = std::move(params), lhs = std::move(lhs),
                      rhs = std::move(rhs)]() {
            RunOutput o;
            double worst = -1.0;
            for (double p : params) {
                const Val l = lhs(p);
                const Val r = rhs(p);
                const double d = std::fabs(l.v - r.v);
                if (d > worst) {
                    worst = d;
                    o.lhs = l.v;
                    o.rhs = r.v;
                    o.diag = l.e + r.e;
                    o.note = "worst at p=" + std::to_string(p);
                }
            }
            return o;
        };
        out.push_back(std::move(rec));
    }
};

} // namespace ellint::catalog::detail

#endif
