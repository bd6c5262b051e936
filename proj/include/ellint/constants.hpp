#ifndef ELLINT_CONSTANTS_HPP
#define ELLINT_CONSTANTS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellint/specfun.hpp"

// Reference values of pi, G, zeta(3), Gamma(1/4) and Gamma(1/3), each
// reachable by at least two independent routes.  Term counts are fixed,
// with geometric tails, so evaluation counts are reproducible.

namespace ellint::constants {

struct NamedConstant {
    std::string name;
    double value = 0.0;
    std::string method;
    double est_error = 0.0;
};

enum class GMethod { bradley, ramanujan, alternating };
enum class Zeta3Method { apery_binomial, direct_em };
enum class GammaSpecial { quarter, third };

namespace detail {

// sum_n x^n / ((2n+1)) * n!/(2n+1)!!, the building block of both
// accelerated series for G.
inline double ti2_series_block(double x, int terms) {
    double ratio_num = 1.0; // x^n n! / (2n+1)!!
    double sum = 0.0;
    for (int n = 0; n < terms; ++n) {
        sum += ratio_num / (2.0 * n + 1.0);
        ratio_num *= x * (n + 1.0) / (2.0 * n + 3.0);
    }
    return sum;
}

} // namespace detail

inline NamedConstant catalan_g(GMethod method) {
    switch (method) {
        case GMethod::ramanujan: {
            // G = (pi/8) log(2+sqrt 3) + (3/8) sum (1/2)^n/(2n+1) n!/(2n+1)!!
            const double v = specfun::pi / 8.0 * std::log(2.0 + std::sqrt(3.0)) +
                             3.0 / 8.0 * detail::ti2_series_block(0.5, 60);
            return {"G", v, "ramanujan", 1e-16};
        }
        case GMethod::bradley: {
            const double s5 = std::sqrt(5.0);
            const double lead =
                specfun::pi / 8.0 *
                std::log((10.0 + std::sqrt(50.0 - 22.0 * s5)) /
                         (10.0 - std::sqrt(50.0 - 22.0 * s5)));
            const double xm = 2.0 / ((s5 - 1.0) * (s5 - 1.0));
            const double xp = 2.0 / ((s5 + 1.0) * (s5 + 1.0));
            const double v = lead + 1.25 * (detail::ti2_series_block(xm, 130) / (s5 - 1.0) -
                                            detail::ti2_series_block(xp, 130) / (s5 + 1.0));
            return {"G", v, "bradley", 2e-16};
        }
        case GMethod::alternating: {
            // Euler transform of sum (-1)^n (2n+1)^-2.
            const int N = 64;
            std::vector<double> d(N);
            for (int n = 0; n < N; ++n) d[static_cast<size_t>(n)] = 1.0 / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
            double sum = 0.0, p = 0.5;
            for (int k = 0; k < N; ++k) {
                sum += p * d[0];
                p *= -0.5;
                for (int j = 0; j < N - 1 - k; ++j)
                    d[static_cast<size_t>(j)] = d[static_cast<size_t>(j) + 1] - d[static_cast<size_t>(j)];
            }
            return {"G", sum, "alternating", 4e-16};
        }
    }
    throw std::logic_error("catalan_g: unknown method");
}

inline NamedConstant zeta3(Zeta3Method method) {
    switch (method) {
        case Zeta3Method::apery_binomial: {
            // zeta(3) = (5/2) sum (-1)^(n-1) / (n^3 C(2n,n))
            double sum = 0.0;
            double binom = 2.0; // C(2n,n) at n=1
            double sign = 1.0;
            for (int n = 1; n <= 40; ++n) {
                sum += sign / (static_cast<double>(n) * n * n * binom);
                binom *= 2.0 * (2.0 * n + 1.0) / (n + 1.0);
                sign = -sign;
            }
            return {"zeta3", 2.5 * sum, "apery_binomial", 1e-16};
        }
        case Zeta3Method::direct_em: {
            const int N = 100;
            double sum = 0.0;
            for (int n = N; n >= 1; --n) sum += 1.0 / (static_cast<double>(n) * n * n);
            const double A = N + 1.0;
            // Euler-Maclaurin tail for sum_{n>N} n^-3 expanded at N+1.
            const double tail = 1.0 / (2.0 * A * A) + 1.0 / (2.0 * A * A * A) +
                                1.0 / (4.0 * A * A * A * A) -
                                1.0 / (12.0 * std::pow(A, 6.0)) +
                                1.0 / (12.0 * std::pow(A, 8.0));
            return {"zeta3", sum + tail, "direct_em", 2e-16};
        }
    }
    throw std::logic_error("zeta3: unknown method");
}

inline NamedConstant gamma_special(GammaSpecial which) {
    switch (which) {
        case GammaSpecial::quarter: {
            // K(1/sqrt2) = Gamma(1/4)^2 / (4 sqrt(pi))
            const double K = specfun::ellip_k(1.0 / std::sqrt(2.0));
            const double v = std::sqrt(4.0 * std::sqrt(specfun::pi) * K);
            return {"gamma_quarter", v, "agm_lemniscatic", 1e-15 * v};
        }
        case GammaSpecial::third: {
            // K(sin pi/12) = 3^(1/4) Gamma(1/3)^3 / (2^(7/3) pi)
            const double K = specfun::ellip_k(std::sin(specfun::pi / 12.0));
            const double v =
                std::cbrt(std::pow(2.0, 7.0 / 3.0) * specfun::pi * K / std::pow(3.0, 0.25));
            return {"gamma_third", v, "agm_chowla_selberg", 1e-15 * v};
        }
    }
    throw std::logic_error("gamma_special: unknown which");
}

// Brent-Salamin AGM iteration for pi, kept as a cross-check on the
// platform constant.  Extended precision in the iteration keeps the
// final subtraction of t from eating the last couple of bits.
inline double pi_gauss_legendre() {
    long double a = 1.0L, b = std::sqrt(0.5L), t = 0.25L, p = 1.0L;
    for (int i = 0; i < 5; ++i) {
        const long double an = 0.5L * (a + b);
        b = std::sqrt(a * b);
        t -= p * (a - an) * (a - an);
        a = an;
        p *= 2.0L;
    }
    return static_cast<double>((a + b) * (a + b) / (4.0L * t));
}

inline NamedConstant pi_const() {
    return {"pi", specfun::pi, "platform", 1e-16};
}

// Preferred values used as right-hand sides across the catalog.
inline double catalan() {
    static const double g = catalan_g(GMethod::bradley).value;
    return g;
}
inline double apery() {
    static const double z = zeta3(Zeta3Method::apery_binomial).value;
    return z;
}
inline double gamma_quarter() {
    static const double v = gamma_special(GammaSpecial::quarter).value;
    return v;
}
inline double gamma_third() {
    static const double v = gamma_special(GammaSpecial::third).value;
    return v;
}

inline std::vector<NamedConstant> all() {
    return {pi_const(),
            catalan_g(GMethod::bradley),
            catalan_g(GMethod::ramanujan),
            catalan_g(GMethod::alternating),
            zeta3(Zeta3Method::apery_binomial),
            zeta3(Zeta3Method::direct_em),
            gamma_special(GammaSpecial::quarter),
            gamma_special(GammaSpecial::third)};
}

} // namespace ellint::constants

#endif
