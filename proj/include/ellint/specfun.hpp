#ifndef ELLINT_SPECFUN_HPP
#define ELLINT_SPECFUN_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Core special functions in double precision: AGM, complete elliptic
// integrals K and E, the complex dilogarithm on the principal branch,
// Legendre chi_2, Legendre polynomials and generalized hypergeometric
// partial sums.  Everything here is pure and re-entrant.

namespace ellint::specfun {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Elliptic modulus with its complementary companion cached at
// construction.  Identities in this project integrate across k -> 1, so
// K is always evaluated through the stored complement, never through
// sqrt(1-k^2) recomputed from a rounded k.
struct Modulus {
    double k;
    double k_comp;

    static Modulus from_k(double k) {
        validate(k);
        return Modulus{k, std::sqrt((1.0 - k) * (1.0 + k))};
    }
    // Bit-exact complement: the stored k_comp is the argument itself.
    static Modulus from_complement(double kc) {
        validate(kc);
        return Modulus{std::sqrt((1.0 - kc) * (1.0 + kc)), kc};
    }

  private:
    static void validate(double v) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0)
            throw std::domain_error("Modulus: argument must lie in [0,1]");
    }
    Modulus(double k_, double kc_) : k(k_), k_comp(kc_) {}
};

// Arithmetic-geometric mean of Gauss.  Symmetric, quadratically
// convergent; terminates when the pair agrees to 2 ulp.
inline double agm(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b < 0.0)
        throw std::domain_error("agm: requires a > 0, b >= 0, finite");
    if (b == 0.0) return 0.0;
    if (a < b) std::swap(a, b);
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        if (a - b <= 2.0 * std::numeric_limits<double>::epsilon() * a) break;
        a = an;
        b = bn;
    }
    return 0.5 * (a + b);
}

// K(k) = pi / (2 agm(1, k')).  Only the stored complement matters: a k
// that rounds to 1 with k_comp > 0 is still far from the singularity.
inline double ellip_k(const Modulus& m) {
    if (m.k_comp == 0.0) throw std::domain_error("ellip_k: K(1) diverges");
    return pi / (2.0 * agm(1.0, m.k_comp));
}

// E(k) via the AGM companion sequence (A&S 17.6.3-4).
inline double ellip_e(const Modulus& m) {
    if (m.k == 0.0) return pi / 2.0;
    if (m.k == 1.0 || m.k_comp == 0.0) return 1.0;
    double a = 1.0, b = m.k_comp, c = m.k;
    double sum = 0.5 * c * c;
    double p = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        sum += p * c * c;
        p *= 2.0;
        if (c <= std::numeric_limits<double>::epsilon() * a) break;
    }
    const double kk = pi / (2.0 * a);
    return kk * (1.0 - sum);
}

// K, E and the companion sum S with E = K (1 - S) from one AGM run.
// Combinations like K - E = K S or E - (1-k^2) K = K (k^2 - S) come out
// cancellation-free at small modulus, where forming them from K and E
// separately would lose everything.
struct EllipKE {
    double K;
    double E;
    double S;
    double k_minus_e() const { return K * S; }
};

inline EllipKE ellip_ke(const Modulus& m) {
    if (m.k_comp == 0.0) throw std::domain_error("ellip_ke: K(1) diverges");
    if (m.k == 0.0) return {pi / 2.0, pi / 2.0, 0.0};
    double a = 1.0, b = m.k_comp, c = m.k;
    double sum = 0.5 * c * c;
    double p = 1.0;
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        c = 0.5 * (a - b);
        a = an;
        b = bn;
        sum += p * c * c;
        p *= 2.0;
        if (c <= std::numeric_limits<double>::epsilon() * a) break;
    }
    const double kk = pi / (2.0 * a);
    return {kk, kk * (1.0 - sum), sum};
}

// Convenience forms used all over the identity catalog.
inline double ellip_k(double k) { return ellip_k(Modulus::from_k(k)); }
inline double ellip_e(double k) { return ellip_e(Modulus::from_k(k)); }
// K(sqrt(1-kappa^2)) with the complement taken bit-exactly.
inline double ellip_k_comp(double kappa) { return ellip_k(Modulus::from_complement(kappa)); }
inline double ellip_e_comp(double kappa) { return ellip_e(Modulus::from_complement(kappa)); }
// K(sqrt(t)) and friends, stable at both ends of (0,1).
inline Modulus modulus_sqrt(double t) {
    return (t <= 0.5) ? Modulus::from_k(std::sqrt(t)) : Modulus::from_complement(std::sqrt(1.0 - t));
}
inline double ellip_k_sqrt(double t) { return ellip_k(modulus_sqrt(t)); }
inline double ellip_e_sqrt(double t) { return ellip_e(modulus_sqrt(t)); }

namespace detail {

// B_j / (j+1)! for the log-form dilogarithm series
// Li2(z) = sum_j B_j w^(j+1) / (j+1)!,  w = -log(1-z).
inline const std::vector<double>& dilog_log_coeffs() {
    static const std::vector<double> c = [] {
        // Bernoulli numbers B_0..B_40 (odd ones beyond B_1 vanish).
        std::vector<double> bern(41, 0.0);
        bern[0] = 1.0;
        bern[1] = -0.5;
        bern[2] = 1.0 / 6.0;
        bern[4] = -1.0 / 30.0;
        bern[6] = 1.0 / 42.0;
        bern[8] = -1.0 / 30.0;
        bern[10] = 5.0 / 66.0;
        bern[12] = -691.0 / 2730.0;
        bern[14] = 7.0 / 6.0;
        bern[16] = -3617.0 / 510.0;
        bern[18] = 43867.0 / 798.0;
        bern[20] = -174611.0 / 330.0;
        bern[22] = 854513.0 / 138.0;
        bern[24] = -236364091.0 / 2730.0;
        bern[26] = 8553103.0 / 6.0;
        bern[28] = -23749461029.0 / 870.0;
        bern[30] = 8615841276005.0 / 14322.0;
        bern[32] = -7709321041217.0 / 510.0;
        bern[34] = 2577687858367.0 / 6.0;
        bern[36] = -26315271553053477373.0 / 1919190.0;
        bern[38] = 2929993913841559.0 / 6.0;
        bern[40] = -261082718496449122051.0 / 13530.0;
        std::vector<double> out(41);
        double fact = 1.0; // (j+1)!
        for (int j = 0; j <= 40; ++j) {
            fact *= (j + 1);
            out[static_cast<size_t>(j)] = bern[static_cast<size_t>(j)] / fact;
        }
        return out;
    }();
    return c;
}

inline std::complex<double> dilog_direct(std::complex<double> z) {
    std::complex<double> sum = 0.0, zp = 1.0;
    for (int n = 1; n <= 80; ++n) {
        zp *= z;
        const std::complex<double> term = zp / static_cast<double>(n * n);
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

inline std::complex<double> dilog_log_form(std::complex<double> z) {
    const std::complex<double> w = -std::log(1.0 - z);
    const auto& c = dilog_log_coeffs();
    std::complex<double> wp = 1.0, sum = 0.0;
    for (size_t j = 0; j < c.size(); ++j) {
        wp *= w;
        if (c[j] != 0.0) sum += c[j] * wp;
    }
    return sum;
}

} // namespace detail

// Complex dilogarithm, principal branch with cut along (1, inf).
// |z| <= 1/2: direct series; near z = 1: reflection; the remaining
// annulus (including the whole unit circle) goes through the Bernoulli
// series in w = -log(1-z), which converges for |w| < 2 pi.
inline std::complex<double> dilog(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("dilog: non-finite argument");
    static const double zeta2 = pi * pi / 6.0;
    if (z == std::complex<double>(0.0, 0.0)) return 0.0;
    if (z == std::complex<double>(1.0, 0.0)) return zeta2;
    const double az = std::abs(z);
    if (az > 1.0) {
        const std::complex<double> lg = std::log(-z);
        return -dilog(1.0 / z) - zeta2 - 0.5 * lg * lg;
    }
    if (az <= 0.5) return detail::dilog_direct(z);
    if (std::abs(1.0 - z) <= 0.375)
        return zeta2 - std::log(z) * std::log(1.0 - z) - detail::dilog_direct(1.0 - z);
    return detail::dilog_log_form(z);
}

inline std::complex<double> dilog(double x) { return dilog(std::complex<double>(x, 0.0)); }

// Legendre chi_2(z) = (Li2(z) - Li2(-z)) / 2.
inline std::complex<double> chi2(std::complex<double> z) {
    return 0.5 * (dilog(z) - dilog(-z));
}

// Inverse tangent integral Ti2(y) = Im chi2(iy) for real y.
inline double ti2(double y) { return chi2(std::complex<double>(0.0, y)).imag(); }

inline double legendre_p(long l, double x) {
    if (l < 0) throw std::domain_error("legendre_p: negative degree");
    if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("legendre_p: x outside [-1,1]");
    if (l == 0) return 1.0;
    double p0 = 1.0, p1 = x;
    for (long n = 2; n <= l; ++n) {
        const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

struct HypergeometricParams {
    std::vector<double> upper;
    std::vector<double> lower;
    std::complex<double> z;
};

struct PfqResult {
    std::complex<double> value;
    long terms_used = 0;
    double tail_bound = 0.0;
    bool converged = false;
};

// Partial sum of pFq by the term-ratio recurrence.  At the unit circle
// with p = q+1 the series needs sum(lower) - sum(upper) > 0; slowly
// (algebraically) decaying tails get the term * n/(s-1) estimate with s
// fitted from the last two ratios.
inline PfqResult pfq(const HypergeometricParams& params, long max_terms, double tol) {
    const auto& a = params.upper;
    const auto& b = params.lower;
    if (a.size() > b.size() + 1)
        throw std::domain_error("pfq: requires p <= q+1");
    for (double bj : b)
        if (bj <= 0.0 && bj == std::floor(bj))
            throw std::domain_error("pfq: lower parameter is a non-positive integer");
    const double az = std::abs(params.z);
    if (a.size() == b.size() + 1) {
        if (az > 1.0 + 1e-14) throw std::domain_error("pfq: divergent for |z| > 1 at p = q+1");
        if (std::fabs(az - 1.0) <= 1e-14) {
            double s = 0.0;
            for (double bj : b) s += bj;
            for (double aj : a) s -= aj;
            if (!(s > 0.0))
                throw std::domain_error("pfq: unit-argument convergence condition fails");
        }
    }

    PfqResult res;
    std::complex<double> term = 1.0, sum = 1.0;
    double prev_abs = 1.0, prev_prev_abs = 1.0;
    long n = 0;
    for (n = 0; n < max_terms; ++n) {
        std::complex<double> ratio = params.z / static_cast<double>(n + 1);
        for (double aj : a) ratio *= (aj + n);
        for (double bj : b) ratio /= (bj + n);
        term *= ratio;
        sum += term;
        prev_prev_abs = prev_abs;
        prev_abs = std::abs(term);
        if (prev_abs < tol * std::abs(sum) && n > 4) {
            res.converged = true;
            ++n;
            break;
        }
    }
    res.value = sum;
    res.terms_used = n;
    if (prev_abs == 0.0) {
        res.tail_bound = 0.0;
        res.converged = true;
        return res;
    }
    const double rho = prev_abs / prev_prev_abs;
    if (rho < 0.9) {
        res.tail_bound = prev_abs * rho / (1.0 - rho);
    } else {
        // |t_n| ~ C n^-s: read s off the last two magnitudes.
        const double s = -std::log(rho) / std::log(static_cast<double>(n) / (n - 1.0));
        res.tail_bound = (s > 1.05) ? prev_abs * n / (s - 1.0)
                                    : prev_abs * static_cast<double>(n);
        if (!(s > 1.05)) res.converged = false;
    }
    if (!res.converged && res.terms_used >= max_terms) res.converged = false;
    return res;
}

} // namespace ellint::specfun

#endif
