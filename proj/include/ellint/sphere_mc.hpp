#ifndef ELLINT_SPHERE_MC_HPP
#define ELLINT_SPHERE_MC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellint/quadrature.hpp"
#include "ellint/specfun.hpp"

// Monte Carlo estimates of the S^2 x S^2 and S^3 x S^3 coupling
// integrals with exactly-integrable importance proposals on the chained
// factors, plus the deterministic unit-box forms of the same identities.
// The generator is counter-based (Philox4x32-10): the stream is a pure
// function of (key, counter), so batches parallelize and re-run
// bit-identically.

namespace ellint::sphere_mc {

namespace detail {

struct Philox4 {
    std::array<std::uint32_t, 4> v;
};

inline Philox4 philox4x32_10(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    auto mulhilo = [](std::uint32_t a, std::uint32_t b, std::uint32_t& hi) {
        const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
        hi = static_cast<std::uint32_t>(p >> 32);
        return static_cast<std::uint32_t>(p);
    };
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, hi1;
        const std::uint32_t lo0 = mulhilo(0xD2511F53u, ctr[0], hi0);
        const std::uint32_t lo1 = mulhilo(0xCD9E8D57u, ctr[2], hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
    }
    return {ctr};
}

} // namespace detail

// Keyed counter-based stream: identical (seed, counter) gives an
// identical stream on every platform.
struct RngState {
    std::uint64_t key = 0;
    std::uint64_t ctr_hi = 0; // batch / stream index
    std::uint64_t ctr_lo = 0;

    // One Philox block -> two doubles in [0,1).
    std::array<double, 2> next_u2() {
        const detail::Philox4 out = detail::philox4x32_10(
            {static_cast<std::uint32_t>(ctr_lo), static_cast<std::uint32_t>(ctr_lo >> 32),
             static_cast<std::uint32_t>(ctr_hi), static_cast<std::uint32_t>(ctr_hi >> 32)},
            {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)});
        ++ctr_lo;
        if (ctr_lo == 0) ++ctr_hi;
        auto to_u01 = [](std::uint32_t a, std::uint32_t b) {
            const std::uint64_t v = (static_cast<std::uint64_t>(a) << 32) | b;
            return static_cast<double>(v >> 11) * 0x1p-53;
        };
        return {to_u01(out.v[0], out.v[1]), to_u01(out.v[2], out.v[3])};
    }
};

using Vec4 = std::array<double, 4>;

inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

namespace detail {

inline void orthonormal_frame(const Vec4& n, int dim, std::array<Vec4, 3>& tangent) {
    // Tangent basis at n: take coordinate axes, project, Gram-Schmidt.
    const int ncomp = dim + 1;
    int filled = 0;
    for (int axis = 0; axis < ncomp && filled < dim; ++axis) {
        Vec4 e{0, 0, 0, 0};
        e[static_cast<size_t>(axis)] = 1.0;
        double proj = dot(e, n);
        for (int c = 0; c < ncomp; ++c) e[static_cast<size_t>(c)] -= proj * n[static_cast<size_t>(c)];
        for (int j = 0; j < filled; ++j) {
            const double pj = dot(e, tangent[static_cast<size_t>(j)]);
            for (int c = 0; c < ncomp; ++c) e[static_cast<size_t>(c)] -= pj * tangent[static_cast<size_t>(j)][static_cast<size_t>(c)];
        }
        const double nn = std::sqrt(dot(e, e));
        if (nn > 1e-6) {
            for (int c = 0; c < ncomp; ++c) e[static_cast<size_t>(c)] /= nn;
            tangent[static_cast<size_t>(filled++)] = e;
        }
    }
}

// psi + sin(psi) = pi * u, solved by safeguarded Newton.
inline double kepler_polar(double u) {
    double lo = 0.0, hi = specfun::pi;
    double psi = specfun::pi * u;
    for (int it = 0; it < 100; ++it) {
        const double f = psi + std::sin(psi) - specfun::pi * u;
        if (f > 0)
            hi = psi;
        else
            lo = psi;
        const double df = 1.0 + std::cos(psi);
        double step = (df > 1e-12) ? psi - f / df : 0.5 * (lo + hi);
        if (!(step > lo && step < hi)) step = 0.5 * (lo + hi);
        if (std::fabs(step - psi) < 1e-15) return step;
        psi = step;
    }
    return psi;
}

} // namespace detail

// Uniform point on S^dim (dim = 2 or 3) by normalized Gaussians;
// consumes exactly two counter blocks.
inline Vec4 sample_sphere(int dim, RngState& rng) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("sample_sphere: dim must be 2 or 3");
    const auto u01 = rng.next_u2();
    const auto u23 = rng.next_u2();
    auto box_muller = [](double u1, double u2, double& g1, double& g2) {
        const double r = std::sqrt(-2.0 * std::log1p(-u1)); // u1 in [0,1) -> 1-u1 in (0,1]
        g1 = r * std::cos(2.0 * specfun::pi * u2);
        g2 = r * std::sin(2.0 * specfun::pi * u2);
    };
    Vec4 v{0, 0, 0, 0};
    box_muller(u01[0], u01[1], v[0], v[1]);
    box_muller(u23[0], u23[1], v[2], v[3]);
    if (dim == 2) v[3] = 0.0;
    const double nn = std::sqrt(dot(v, v));
    if (nn == 0.0) return dim == 2 ? Vec4{0, 0, 1, 0} : Vec4{0, 0, 0, 1};
    for (auto& c : v) c /= nn;
    return v;
}

struct WeightedPoint {
    Vec4 point;
    double weight;
};

// S^2 proposal with surface density proportional to 1/|anchor - n|,
// drawn by the closed-form inverse CDF in mu = anchor . n.  The returned
// weight is uniform/proposal = |anchor - n|, so weight / |anchor - n|
// has unit expectation and bounded variance.
inline WeightedPoint sample_inverse_distance(const Vec4& anchor, int dim, RngState& rng) {
    if (dim != 2) throw std::invalid_argument("sample_inverse_distance: dim must be 2");
    const auto u = rng.next_u2();
    const double one_minus = 1.0 - u[0];
    const double mu = 1.0 - 2.0 * one_minus * one_minus;
    const double phi = 2.0 * specfun::pi * u[1];
    std::array<Vec4, 3> t;
    detail::orthonormal_frame(anchor, 2, t);
    const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    Vec4 p;
    for (int c = 0; c < 3; ++c)
        p[static_cast<size_t>(c)] = mu * anchor[static_cast<size_t>(c)] + s * (std::cos(phi) * t[0][static_cast<size_t>(c)] + std::sin(phi) * t[1][static_cast<size_t>(c)]);
    p[3] = 0.0;
    return {p, std::sqrt(std::max(0.0, 2.0 - 2.0 * mu))};
}

namespace detail {

// Heaviside-sqrt factor, sampled on its exact support mu < cos(beta):
// weight times factor collapses to the constant cos(beta/2).
inline Vec4 sample_heaviside(const Vec4& anchor, double beta, RngState& rng) {
    const auto u = rng.next_u2();
    const double cb = std::cos(beta);
    const double one_minus = 1.0 - u[0];
    const double mu = cb - (1.0 + cb) * one_minus * one_minus;
    const double phi = 2.0 * specfun::pi * u[1];
    std::array<Vec4, 3> t;
    orthonormal_frame(anchor, 2, t);
    const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    Vec4 p{0, 0, 0, 0};
    for (int c = 0; c < 3; ++c)
        p[static_cast<size_t>(c)] = mu * anchor[static_cast<size_t>(c)] + s * (std::cos(phi) * t[0][static_cast<size_t>(c)] + std::sin(phi) * t[1][static_cast<size_t>(c)]);
    return p;
}

// S^3 proposal with density proportional to 1/|anchor - n|^2; the polar
// marginal follows cos^2(psi/2), inverted through psi + sin(psi) = pi u.
// weight * factor = 1 exactly.
inline Vec4 sample_inverse_sq_s3(const Vec4& anchor, RngState& rng) {
    const auto ua = rng.next_u2();
    const auto ub = rng.next_u2();
    const double psi = kepler_polar(ua[0]);
    const double mu = std::cos(psi);
    std::array<Vec4, 3> t;
    orthonormal_frame(anchor, 3, t);
    const double z = 2.0 * ua[1] - 1.0;
    const double phi = 2.0 * specfun::pi * ub[0];
    const double sz = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double s = std::sin(psi);
    Vec4 p;
    for (int c = 0; c < 4; ++c)
        p[static_cast<size_t>(c)] = mu * anchor[static_cast<size_t>(c)] +
                                    s * (sz * std::cos(phi) * t[0][static_cast<size_t>(c)] +
                                         sz * std::sin(phi) * t[1][static_cast<size_t>(c)] +
                                         z * t[2][static_cast<size_t>(c)]);
    return p;
}

} // namespace detail

enum class FactorType { inverse_distance, heaviside_sqrt, scaled_inverse_sq };

struct Factor {
    FactorType type = FactorType::inverse_distance;
    int power = 1;   // 1 on S^2, 2 on S^3
    int sign = +1;   // |n_a - sign * n_b|^-power
    double beta = 0; // heaviside_sqrt only
    double k = 1.0;  // scaled_inverse_sq only
};

struct KernelSpec {
    int dimension = 2;
    std::vector<Factor> factors;
    double separation = 0.0; // angle between the fixed outer vectors
};

struct McEstimate {
    double mean = 0.0;
    double median_of_means = 0.0;
    double stderr_est = 0.0;
    long long n_samples = 0;
    std::uint64_t seed = 0;
};

namespace detail {

inline void validate(const KernelSpec& spec) {
    if (spec.dimension != 2 && spec.dimension != 3)
        throw std::invalid_argument("mc_coupling: dimension must be 2 or 3");
    if (spec.factors.size() < 2) throw std::invalid_argument("mc_coupling: need >= 2 factors");
    if (!(spec.separation >= 0.0 && spec.separation <= specfun::pi))
        throw std::invalid_argument("mc_coupling: separation out of range");
    for (const auto& f : spec.factors) {
        switch (f.type) {
            case FactorType::inverse_distance:
                if (f.power != (spec.dimension == 2 ? 1 : 2))
                    throw std::invalid_argument("mc_coupling: factor power does not match dim");
                if (f.sign != 1 && f.sign != -1)
                    throw std::invalid_argument("mc_coupling: bad sign");
                break;
            case FactorType::heaviside_sqrt:
                if (spec.dimension != 2 || !(f.beta >= 0.0 && f.beta < specfun::pi))
                    throw std::invalid_argument("mc_coupling: bad heaviside factor");
                break;
            case FactorType::scaled_inverse_sq:
                if (spec.dimension != 3 || !(f.k > 0.0 && f.k <= 1.0))
                    throw std::invalid_argument("mc_coupling: bad scaled factor");
                break;
        }
    }
}

inline Vec4 negate(const Vec4& v) { return {-v[0], -v[1], -v[2], -v[3]}; }

} // namespace detail

namespace detail {

inline double dist2(const Vec4& a, const Vec4& b) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) {
        const double d = a[static_cast<size_t>(c)] - b[static_cast<size_t>(c)];
        s += d * d;
    }
    return s;
}

// Factor value seen as a function of the downstream point x, with the
// upstream point folded into the anchor.
inline double factor_value(const Factor& f, int dim, const Vec4& anchor, const Vec4& x) {
    switch (f.type) {
        case FactorType::inverse_distance: {
            const Vec4 a = (f.sign == 1) ? anchor : negate(anchor);
            const double d2 = dist2(a, x);
            return (dim == 2) ? 1.0 / std::sqrt(d2) : 1.0 / d2;
        }
        case FactorType::heaviside_sqrt: {
            const double arg = std::cos(f.beta) - dot(anchor, x);
            return (arg > 0.0) ? 1.0 / std::sqrt(2.0 * arg) : 0.0;
        }
        case FactorType::scaled_inverse_sq: {
            const double mu = dot(anchor, x);
            return 1.0 / (1.0 + f.k * f.k - 2.0 * f.k * mu);
        }
    }
    return 0.0;
}

// Normalized proposal density (w.r.t. the surface measure) matched to a
// factor: the exactly integrable singular proposals, or uniform when
// the factor is bounded (scaled_inverse_sq with k < 1).
inline double proposal_density(const Factor& f, int dim, const Vec4& anchor, const Vec4& x) {
    const double m = (dim == 2) ? 4.0 * specfun::pi : 2.0 * specfun::pi * specfun::pi;
    switch (f.type) {
        case FactorType::inverse_distance: {
            const Vec4 a = (f.sign == 1) ? anchor : negate(anchor);
            const double d2 = dist2(a, x);
            return ((dim == 2) ? 1.0 / std::sqrt(d2) : 1.0 / d2) / m;
        }
        case FactorType::heaviside_sqrt: {
            const double arg = std::cos(f.beta) - dot(anchor, x);
            const double v = (arg > 0.0) ? 1.0 / std::sqrt(2.0 * arg) : 0.0;
            return v / (m * std::cos(f.beta / 2.0));
        }
        case FactorType::scaled_inverse_sq:
            if (f.k == 1.0) return (1.0 / dist2(anchor, x)) / m;
            return 1.0 / m; // bounded factor: uniform proposal
    }
    return 0.0;
}

inline Vec4 proposal_sample(const Factor& f, int dim, const Vec4& anchor, RngState& rng) {
    switch (f.type) {
        case FactorType::inverse_distance: {
            const Vec4 a = (f.sign == 1) ? anchor : negate(anchor);
            return (dim == 2) ? sample_inverse_distance(a, 2, rng).point
                              : sample_inverse_sq_s3(a, rng);
        }
        case FactorType::heaviside_sqrt:
            return sample_heaviside(anchor, f.beta, rng);
        case FactorType::scaled_inverse_sq:
            if (f.k == 1.0) return sample_inverse_sq_s3(anchor, rng);
            return sample_sphere(3, rng);
    }
    return anchor;
}

// fmid/mq_mid (or flast/mq_fl) in the limit where that factor blows up;
// only the exactly-proposed singular factors can reach this branch.
inline double singular_ratio(const Factor& f) {
    return (f.type == FactorType::heaviside_sqrt) ? std::cos(f.beta / 2.0) : 1.0;
}

} // namespace detail

// One chained sample.  The first chain factor is drawn from its exact
// proposal (the weight cancels the factor up to a known constant).  The
// middle point comes from a balanced mixture of the proposal matched to
// the middle factor and the one matched to the final factor, so the
// final factor's singularity is covered too and the estimator keeps a
// finite variance; both factors are then evaluated against the mixture
// density.  A draw landing outside a Heaviside support contributes zero
// weight rather than being redrawn, which keeps the estimate unbiased.
inline double mc_sample_value(const KernelSpec& spec, const Vec4& n_hat, const Vec4& n_prime,
                              RngState& rng) {
    const int dim = spec.dimension;
    const double m = (dim == 2) ? 4.0 * specfun::pi : 2.0 * specfun::pi * specfun::pi;
    const Factor& f0 = spec.factors.front();
    double value = (f0.type == FactorType::heaviside_sqrt) ? std::cos(f0.beta / 2.0) : 1.0;
    const Vec4 p1 = detail::proposal_sample(f0, dim, n_hat, rng);

    if (spec.factors.size() == 2) {
        return value * detail::factor_value(spec.factors[1], dim, p1, n_prime);
    }

    const Factor& fm = spec.factors[1];
    const Factor& fl = spec.factors[2];
    const double coin = rng.next_u2()[0];
    Vec4 p2;
    if (coin < 0.5) {
        p2 = detail::proposal_sample(fm, dim, p1, rng);
    } else {
        // The final-factor proposal is anchored at (sign * n_prime);
        // proposal_sample folds the sign itself.
        p2 = detail::proposal_sample(fl, dim, n_prime, rng);
    }
    const double mq_mid = m * detail::proposal_density(fm, dim, p1, p2);
    const double mq_fl = m * detail::proposal_density(fl, dim, n_prime, p2);
    const double fmid = detail::factor_value(fm, dim, p1, p2);
    const double flast = detail::factor_value(fl, dim, n_prime, p2);
    const double v = value * 2.0 * fmid * flast / (mq_mid + mq_fl);
    if (std::isfinite(v)) return v;
    // Coincident-point limits: the matching mixture component absorbs
    // the blow-up, leaving twice the other factor.
    if (!(flast < 1e140)) return value * 2.0 * fmid * detail::singular_ratio(fl);
    if (!(fmid < 1e140)) return value * 2.0 * flast * detail::singular_ratio(fm);
    return 0.0;
}

inline McEstimate mc_coupling_with_frame(const KernelSpec& spec, long long n, std::uint64_t seed,
                                         const Vec4& n_hat, const Vec4& n_prime) {
    detail::validate(spec);
    if (n < 10'000) throw std::invalid_argument("mc_coupling: need n >= 10^4");
    constexpr int batches = 32;
    const long long per = n / batches;
    std::vector<double> means(batches);
    double grand = 0.0;
    for (int b = 0; b < batches; ++b) {
        RngState rng{seed, static_cast<std::uint64_t>(b), 0};
        double acc = 0.0, comp = 0.0;
        for (long long i = 0; i < per; ++i) {
            const double v = mc_sample_value(spec, n_hat, n_prime, rng);
            const double y = v - comp;
            const double t = acc + y;
            comp = (t - acc) - y;
            acc = t;
        }
        means[static_cast<size_t>(b)] = acc / static_cast<double>(per);
        grand += means[static_cast<size_t>(b)];
    }
    grand /= batches;
    std::vector<double> sorted = means;
    std::sort(sorted.begin(), sorted.end());
    const double mom = 0.5 * (sorted[batches / 2 - 1] + sorted[batches / 2]);
    double var = 0.0;
    for (double m : means) var += (m - grand) * (m - grand);
    var /= (batches - 1);
    McEstimate est;
    est.mean = grand;
    est.median_of_means = mom;
    est.stderr_est = std::sqrt(var / batches);
    est.n_samples = per * batches;
    est.seed = seed;
    return est;
}

inline McEstimate mc_coupling(const KernelSpec& spec, long long n, std::uint64_t seed) {
    const double th = spec.separation;
    Vec4 n_hat, n_prime;
    if (spec.dimension == 2) {
        n_hat = {0, 0, 1, 0};
        n_prime = {std::sin(th), 0, std::cos(th), 0};
    } else {
        n_hat = {0, 0, 0, 1};
        n_prime = {0, 0, std::sin(th), std::cos(th)};
    }
    return mc_coupling_with_frame(spec, n, seed, n_hat, n_prime);
}

// Registered kernels for the identities verified by sampling.
inline KernelSpec kernel_by_id(const std::string& id) {
    using FT = FactorType;
    if (id == "eq_a")
        return {2,
                {{FT::inverse_distance, 1, +1, 0, 1},
                 {FT::inverse_distance, 1, +1, 0, 1},
                 {FT::inverse_distance, 1, +1, 0, 1}},
                0.0};
    if (id == "eq_b")
        return {2,
                {{FT::inverse_distance, 1, +1, 0, 1},
                 {FT::inverse_distance, 1, +1, 0, 1},
                 {FT::inverse_distance, 1, -1, 0, 1}},
                0.0};
    if (id.rfind("eq_beta:", 0) == 0 || id.rfind("eq_beta_prime:", 0) == 0) {
        const bool primed = id.rfind("eq_beta_prime:", 0) == 0;
        const double beta = std::stod(id.substr(id.find(':') + 1));
        return {2,
                {{FT::inverse_distance, 1, +1, 0, 1},
                 {FT::heaviside_sqrt, 1, +1, beta, 1},
                 {FT::inverse_distance, 1, primed ? -1 : +1, 0, 1}},
                0.0};
    }
    if (id == "eq_G_S3")
        return {3,
                {{FT::inverse_distance, 2, +1, 0, 1},
                 {FT::inverse_distance, 2, +1, 0, 1},
                 {FT::inverse_distance, 2, +1, 0, 1}},
                specfun::pi / 2.0};
    if (id.rfind("eq_ImLi2:", 0) == 0) {
        // eq_ImLi2:<k>:<theta>
        const auto p1 = id.find(':');
        const auto p2 = id.find(':', p1 + 1);
        const double k = std::stod(id.substr(p1 + 1, p2 - p1 - 1));
        const double th = std::stod(id.substr(p2 + 1));
        return {3,
                {{FT::inverse_distance, 2, +1, 0, 1},
                 {FT::scaled_inverse_sq, 2, +1, 0, k},
                 {FT::inverse_distance, 2, +1, 0, 1}},
                th};
    }
    throw std::invalid_argument("kernel_by_id: unknown kernel id " + id);
}

// Deterministic unit-box reparameterizations of the sphere couplings.
inline quadrature::QuadResult box_integral(const std::string& id, double tol) {
    const double inv8pi = 1.0 / (8.0 * specfun::pi);
    std::function<double(double, double, double)> f;
    if (id == "a_uvw") {
        f = [inv8pi](double u, double v, double w) {
            return inv8pi / (std::sqrt(u * (1 - u) * (1 - u + u * w)) *
                             std::sqrt(v * w * (1 - v)));
        };
    } else if (id == "b_uvw") {
        f = [inv8pi](double u, double v, double w) {
            return inv8pi / (std::sqrt(u * (1 - u) * (1 - u + u * w)) *
                             std::sqrt(1 - v * w) * std::sqrt(w * (1 - v)));
        };
    } else if (id.rfind("beta_qrs:", 0) == 0) {
        const double beta = std::stod(id.substr(id.find(':') + 1));
        const double t2 = std::tan(beta / 2) * std::tan(beta / 2);
        f = [inv8pi, t2](double q, double r, double s) {
            return inv8pi / (std::sqrt((1 - r) * (1 - s) * r * s * (1 - q)) *
                             std::sqrt(q + t2));
        };
    } else if (id.rfind("beta_prime_qrs:", 0) == 0) {
        const double beta = std::stod(id.substr(id.find(':') + 1));
        const double t2 = std::tan(beta / 2) * std::tan(beta / 2);
        const double sec2 = 1.0 / (std::cos(beta / 2) * std::cos(beta / 2));
        f = [inv8pi, t2, sec2](double q, double r, double s) {
            return inv8pi / (std::sqrt((1 - r) * (1 - s) * r * s * (1 - q)) *
                             std::sqrt(sec2 - s * (q * r + t2)));
        };
    } else {
        throw std::invalid_argument("box_integral: unknown id " + id);
    }
    return quadrature::cubature_nd(f, 3, tol);
}

} // namespace ellint::sphere_mc

#endif
