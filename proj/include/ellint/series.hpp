#ifndef ELLINT_SERIES_HPP
#define ELLINT_SERIES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ellint/constants.hpp"
#include "ellint/rational.hpp"
#include "ellint/specfun.hpp"

// Moment formulas, the exact-rational KK' recurrence, hypergeometric
// closed forms for W(r)/M(r), Ramanujan-type hyperbolic series, and the
// slowly convergent Gosper splits.

namespace ellint::series {

using rational::BigRational;

// int_0^1 kappa^n K(sqrt(1-kappa^2)) dkappa = (pi/4) [Gamma((n+1)/2)/Gamma((n+2)/2)]^2
inline double k_moment(long n) {
    if (n < 0) throw std::domain_error("k_moment: n must be >= 0");
    const double lg =
        std::lgamma((n + 1.0) / 2.0) - std::lgamma((n + 2.0) / 2.0);
    return specfun::pi / 4.0 * std::exp(2.0 * lg);
}

struct MomentSequence {
    std::vector<BigRational> values; // c_n = pi^-3 int_0^1 K(sqrt t) K(sqrt(1-t)) t^n dt
    const char* base_symbol = "pi^3";
};

// c_{n+1} = [(1 + 2n(2n^2+3n+2)) c_n - 2n^3 c_{n-1}] / (2(n+1)^3),
// seeded by c_0 = 1/8 and the halving relation c_1 = 1/16.
inline MomentSequence kk_moment_rational(int n_max) {
    if (n_max < 1) throw std::domain_error("kk_moment_rational: n_max must be >= 1");
    MomentSequence seq;
    seq.values.reserve(static_cast<size_t>(n_max) + 1);
    seq.values.emplace_back(rational::BigInt(1), rational::BigInt(8));
    seq.values.emplace_back(rational::BigInt(1), rational::BigInt(16));
    for (long n = 1; n < n_max; ++n) {
        const BigRational& cn = seq.values[static_cast<size_t>(n)];
        const BigRational& cm = seq.values[static_cast<size_t>(n) - 1];
        const rational::BigInt an = 1 + 2 * n * (2 * n * n + 3 * n + 2);
        const rational::BigInt bn = 2 * n * n * n;
        const rational::BigInt dn = 2 * (n + 1) * (n + 1) * (n + 1);
        seq.values.push_back((BigRational(an, 1) * cn - BigRational(bn, 1) * cm) /
                             BigRational(dn, 1));
    }
    return seq;
}

// M(r) = r/(1+r^2) 3F2(1,1,1; 3/2,3/2; r^2/(1+r^2))
inline double m_func(double r, long max_terms = 2'000'000, double tol = 1e-16) {
    if (!(r > 0.0)) throw std::domain_error("m_func: r must be > 0");
    const double x = r * r / (1.0 + r * r);
    auto res = specfun::pfq({{1.0, 1.0, 1.0}, {1.5, 1.5}, {x, 0.0}}, max_terms, tol);
    return r / (1.0 + r * r) * res.value.real();
}

// W(r) = (pi/2)(1+r^2)^(-1/2) K(r/sqrt(1+r^2)) - M(r)
inline double w_func(double r, long max_terms = 2'000'000, double tol = 1e-16) {
    if (!(r > 0.0)) throw std::domain_error("w_func: r must be > 0");
    const double s = std::sqrt(1.0 + r * r);
    return specfun::pi / 2.0 / s * specfun::ellip_k(r / s) - m_func(r, max_terms, tol);
}

// The three-sum hyperbolic identity: for y > 0,
//   sum_n (2n+1)^-2 [ i(-1)^n/sinh((2n+1)pi y/2) + y(-1)^n/sinh((2n+1)pi/(2y))
//                     + 2(1+iy)/cosh((2n+1)pi(iy-1)/(2i(iy+1))) ] = pi^2 (1+iy)/8.
inline std::complex<double> hyperbolic_sum(double y, int max_terms = 64) {
    if (!(y > 0.0)) throw std::domain_error("hyperbolic_sum: y must be > 0");
    const std::complex<double> I(0.0, 1.0);
    const std::complex<double> arg3 =
        specfun::pi * (I * y - 1.0) / (2.0 * I * (I * y + 1.0));
    std::complex<double> sum = 0.0;
    for (int n = 0; n < max_terms; ++n) {
        const double m = 2.0 * n + 1.0;
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        std::complex<double> term =
            I * sgn / std::sinh(m * specfun::pi * y / 2.0) +
            y * sgn / std::sinh(m * specfun::pi / (2.0 * y)) +
            2.0 * (1.0 + I * y) / std::cosh(m * arg3);
        term /= m * m;
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

struct GosperSplits {
    double g_sum = 0.0;     // -> 2 pi G
    double zeta3_sum = 0.0; // -> 7 zeta(3) / 2
    long terms = 0;
};

// Single-series splits with O(1/n^2) summands; compensated summation
// plus the fitted algebraic tail.  Convergence is slow by construction
// and is not accelerated.
inline GosperSplits gosper_splits(long n_terms = 100'000) {
    GosperSplits out;
    double b = 1.0; // [2^n n! / (2n+1)!!]^2
    double sg = 0.0, cg = 0.0, sz = 0.0, cz = 0.0;
    double tg = 0.0, tz = 0.0, tg_prev = 0.0, tz_prev = 0.0;
    for (long n = 0; n < n_terms; ++n) {
        const double den = (n + 1.0) * (2.0 * n + 1.0);
        tg_prev = tg;
        tz_prev = tz;
        tg = 2.0 * (3.0 * n + 2.0) / den * b;
        tz = (4.0 * n + 3.0) / den * b;
        // Kahan steps.
        double yg = tg - cg, tgs = sg + yg;
        cg = (tgs - sg) - yg;
        sg = tgs;
        double yz = tz - cz, tzs = sz + yz;
        cz = (tzs - sz) - yz;
        sz = tzs;
        const double f = 2.0 * (n + 1.0) / (2.0 * n + 3.0);
        b *= f * f;
    }
    const long n = n_terms - 1;
    auto tail = [n](double t, double t_prev) {
        const double rho = t / t_prev;
        const double s = -std::log(rho) / std::log(static_cast<double>(n) / (n - 1.0));
        return (s > 1.05) ? t * n / (s - 1.0) : 0.0;
    };
    out.g_sum = sg + tail(tg, tg_prev);
    out.zeta3_sum = sz + tail(tz, tz_prev);
    out.terms = n_terms;
    return out;
}

// Closed form of the Mehler-Dirichlet projection
// int_0^pi K(sin(beta/2)) sin(beta) cos(n beta/2) dbeta for odd n.
inline double md_projection_expected(long n) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("md_projection_expected: n must be odd");
    const double pi2 = specfun::pi * specfun::pi;
    if (n == 1) return pi2 / 4.0;
    if (n % 4 == 1) return 0.0;
    // n = 3 mod 4: -pi^2 n / (2^((n+1)/2) (n-1)^2) [ ((n-1)/2)!! / ((n+1)/4)! ]^2
    double dfac = 1.0; // ((n-1)/2)!!
    for (long j = (n - 1) / 2; j >= 2; j -= 2) dfac *= j;
    double fac = 1.0; // ((n+1)/4)!
    for (long j = (n + 1) / 4; j >= 2; --j) fac *= j;
    const double ratio = dfac / fac;
    return -pi2 * n / (std::pow(2.0, (n + 1.0) / 2.0) * (n - 1.0) * (n - 1.0)) * ratio * ratio;
}

namespace detail {

// Levin u-transform on the last (order+1) partial sums of a series.
inline std::complex<double> levin_u(const std::vector<std::complex<double>>& terms, int order) {
    const int n0 = static_cast<int>(terms.size()) - order - 1;
    if (n0 < 1) throw std::invalid_argument("levin_u: not enough terms");
    std::vector<std::complex<double>> s(terms.size());
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < terms.size(); ++i) {
        acc += terms[i];
        s[i] = acc;
    }
    std::complex<double> num = 0.0, den = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= order; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double scale =
            std::pow((1.0 + j) / (1.0 + order), order - 1.0);
        const std::complex<double> omega =
            (1.0 + j) * terms[static_cast<size_t>(n0 + j)];
        const std::complex<double> w = sign * binom * scale / omega;
        num += w * s[static_cast<size_t>(n0 + j)];
        den += w;
        binom *= static_cast<double>(order - j) / (j + 1.0);
    }
    return num / den;
}

} // namespace detail

// K(|sin theta|) reconstructed from Tricomi's Fourier expansion
// sum_n [Gamma(n+1/2)/n!]^2 sin((4n+1) theta), accelerated with a Levin
// u-transform (the plain partial sums only converge like 1/n).
inline double tricomi_fourier_k(double theta, int n_terms = 200) {
    const std::complex<double> q = std::polar(1.0, 4.0 * theta);
    std::vector<std::complex<double>> terms;
    terms.reserve(static_cast<size_t>(n_terms));
    double a = specfun::pi; // [Gamma(n+1/2)/n!]^2 at n=0
    std::complex<double> phase = std::polar(1.0, theta);
    for (int n = 0; n < n_terms; ++n) {
        terms.push_back(a * phase);
        const double r = (n + 0.5) / (n + 1.0);
        a *= r * r;
        phase *= q;
    }
    return detail::levin_u(terms, 24).imag();
}

} // namespace ellint::series

#endif
