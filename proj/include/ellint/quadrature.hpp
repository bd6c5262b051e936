#ifndef ELLINT_QUADRATURE_HPP
#define ELLINT_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Deterministic quadrature: tanh-sinh with cached per-level abscissas,
// Gauss-Legendre 7/15 adaptive bisection, Cauchy principal values by
// singularity subtraction, tensor-product cubature on the unit box, and
// half-line integrals via the t/(1-t) substitution.

namespace ellint::quadrature {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    long long n_evals = 0;
    bool converged = false;
};

struct IntegrandSpec {
    std::function<double(double)> f;
    double a = 0.0;
    double b = 1.0;
    bool singular_left = false;
    bool singular_right = false;
};

namespace detail {

// One tanh-sinh abscissa on the positive half-axis.  `offset` is the
// distance 1 - tanh((pi/2) sinh t) to the mapped endpoint; keeping the
// offset rather than the abscissa avoids cancellation next to singular
// endpoints.
struct TsNode {
    double offset;
    double weight;
};

inline std::vector<TsNode> make_ts_nodes(double h) {
    std::vector<TsNode> nodes;
    nodes.reserve(static_cast<size_t>(8.0 / h) + 8);
    for (int j = 0;; ++j) {
        const double u = j * h;
        const double g = 1.5707963267948966 * std::sinh(u);
        const double e2g = std::exp(-2.0 * g);
        const double offset = 2.0 * e2g / (1.0 + e2g);
        if (offset < 1e-300) break;
        const double sech = 2.0 * std::exp(-g) / (1.0 + e2g);
        const double w = 1.5707963267948966 * std::cosh(u) * sech * sech;
        nodes.push_back({offset, w});
        if (j > 4'000'000) throw std::logic_error("tanh-sinh node table runaway");
    }
    return nodes;
}

// Per-level cache, level L has step h = 2^-L.  Built once, immutable.
inline const std::vector<TsNode>& ts_level(int level) {
    static const std::vector<std::vector<TsNode>> cache = [] {
        std::vector<std::vector<TsNode>> c;
        for (int l = 0; l <= 12; ++l) c.push_back(make_ts_nodes(std::ldexp(1.0, -l)));
        return c;
    }();
    if (level < 0 || level > 12) throw std::invalid_argument("tanh-sinh level out of range");
    return cache[static_cast<size_t>(level)];
}

// Legendre P_n and its derivative, used only to seed Gauss nodes.
inline std::pair<double, double> legendre_pd(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int l = 2; l <= n; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

inline GaussRule make_gauss(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 60; ++it) {
            auto [p, dp] = legendre_pd(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        auto [p, dp] = legendre_pd(n, x);
        (void)p;
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

inline const GaussRule& gauss7() {
    static const GaussRule r = make_gauss(7);
    return r;
}
inline const GaussRule& gauss15() {
    static const GaussRule r = make_gauss(15);
    return r;
}

} // namespace detail

class evaluation_error : public std::runtime_error {
  public:
    explicit evaluation_error(const std::string& what) : std::runtime_error(what) {}
};

// Level-doubling double-exponential rule on a finite interval.  Endpoint
// singularities flagged in the spec are clipped to zero when the rounded
// abscissa lands outside the open interval or the integrand overflows
// there; a non-finite value anywhere else is a hard error.
template <class F>
QuadResult tanh_sinh_fn(F&& f, double a, double b, bool singular_left, bool singular_right,
                        double tol, int max_level = 12) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("tanh_sinh: bad interval");
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    QuadResult res;
    double prev = std::numeric_limits<double>::quiet_NaN();

    auto eval = [&](double x, bool near_left, bool near_right) -> double {
        const double v = f(x);
        ++res.n_evals;
        if (std::isfinite(v)) return v;
        if ((near_left && singular_left) || (near_right && singular_right)) return 0.0;
        throw evaluation_error("tanh_sinh: non-finite integrand at x=" + std::to_string(x));
    };

    for (int level = 2; level <= max_level; ++level) {
        const auto& nodes = detail::ts_level(level);
        const double h = std::ldexp(1.0, -level);
        double sum = nodes[0].weight * eval(c, false, false);
        for (size_t j = 1; j < nodes.size(); ++j) {
            const double off = d * nodes[j].offset;
            const double xr = b - off;
            const double xl = a + off;
            if (xr < b) sum += nodes[j].weight * eval(xr, false, true);
            if (xl > a) sum += nodes[j].weight * eval(xl, true, false);
        }
        const double value = sum * h * d;
        if (level > 2) {
            const double err = std::fabs(value - prev);
            res.err_est = err;
            if (err <= tol || err <= 4e-16 * std::fabs(value)) {
                res.value = value;
                res.converged = true;
                return res;
            }
        }
        prev = value;
        res.value = value;
    }
    res.converged = false;
    return res;
}

inline QuadResult tanh_sinh(const IntegrandSpec& spec, double tol, int max_level = 12) {
    return tanh_sinh_fn(spec.f, spec.a, spec.b, spec.singular_left, spec.singular_right, tol,
                        max_level);
}

// Distance-to-endpoint variant: the integrand receives (x, x-a, b-x)
// with the endpoint distances carried at full precision even where
// x itself rounds onto the endpoint.  Integrands with algebraic
// singularities at endpoints away from zero must build their singular
// factors from these distances, or the abscissa rounding noise floors
// the achievable accuracy near 1e-8.
template <class F>
QuadResult tanh_sinh_sides_fn(F&& f, double a, double b, double tol, int max_level = 12) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("tanh_sinh_sides: bad interval");
    const double c = 0.5 * (a + b);
    const double d = 0.5 * (b - a);
    QuadResult res;
    double prev = std::numeric_limits<double>::quiet_NaN();
    auto eval = [&](double x, double ul, double ur) -> double {
        const double v = f(x, ul, ur);
        ++res.n_evals;
        return std::isfinite(v) ? v : 0.0;
    };
    for (int level = 2; level <= max_level; ++level) {
        const auto& nodes = detail::ts_level(level);
        const double h = std::ldexp(1.0, -level);
        double sum = nodes[0].weight * eval(c, d, d);
        for (size_t j = 1; j < nodes.size(); ++j) {
            const double off = d * nodes[j].offset;
            sum += nodes[j].weight * eval(b - off, (b - a) - off, off);
            sum += nodes[j].weight * eval(a + off, off, (b - a) - off);
        }
        const double value = sum * h * d;
        if (level > 2) {
            const double err = std::fabs(value - prev);
            res.err_est = err;
            if (err <= tol || err <= 4e-16 * std::fabs(value)) {
                res.value = value;
                res.converged = true;
                return res;
            }
        }
        prev = value;
        res.value = value;
    }
    res.converged = false;
    return res;
}

// Adaptive bisection with an embedded Gauss 7/15 pair per panel.  The
// evaluation budget bounds runtime when the requested tolerance sits
// below the integrand's noise floor.
template <class F>
QuadResult adaptive_fn(F&& f, double a, double b, double tol, int max_depth = 48,
                       long long max_evals = 4'000'000) {
    if (!(a < b)) throw std::invalid_argument("adaptive: bad interval");
    const auto& g7 = detail::gauss7();
    const auto& g15 = detail::gauss15();
    QuadResult res;
    res.converged = true;
    const double total = b - a;

    struct Panel {
        double a, b;
        int depth;
    };
    std::vector<Panel> stack{{a, b, 0}};
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double c = 0.5 * (p.a + p.b);
        const double r = 0.5 * (p.b - p.a);
        double i7 = 0.0, i15 = 0.0;
        for (int i = 0; i < 7; ++i) i7 += g7.w[i] * f(c + r * g7.x[i]);
        for (int i = 0; i < 15; ++i) i15 += g15.w[i] * f(c + r * g15.x[i]);
        res.n_evals += 22;
        i7 *= r;
        i15 *= r;
        const double err = std::fabs(i15 - i7);
        const double budget = tol * ((p.b - p.a) / total);
        const bool out_of_budget = p.depth >= max_depth || res.n_evals >= max_evals;
        if (err <= budget || err <= 1e-16 * std::fabs(i15) || out_of_budget) {
            if (out_of_budget && err > budget) res.converged = false;
            res.value += i15;
            res.err_est += err;
        } else {
            stack.push_back({p.a, c, p.depth + 1});
            stack.push_back({c, p.b, p.depth + 1});
        }
    }
    return res;
}

inline QuadResult adaptive(const IntegrandSpec& spec, double tol, int max_depth = 48) {
    return adaptive_fn(spec.f, spec.a, spec.b, tol, max_depth);
}

// Cauchy principal value of f(x) = g(x)/(c-x) with g Hoelder at c.
// Singularity subtraction: PV = int (g(x)-g(c))/(c-x) dx + g(c) log((c-a)/(b-c)).
// g(c) is recovered from f by Richardson extrapolation of (c-x) f(x).
// `splits` marks interior points where the integrand is singular or has
// a kink (the Tricomi couplings in this catalog are functions of |x|);
// each resulting piece goes through tanh-sinh with the cut ends flagged.
template <class F>
QuadResult principal_value_fn(F&& f, double a, double b, double c, bool singular_left,
                              bool singular_right, double tol,
                              const std::vector<double>& splits = {}) {
    if (!(a < c && c < b)) throw std::invalid_argument("principal_value: c must be interior");
    const double h = std::min(c - a, b - c) / 64.0;
    auto gpair = [&](double hh) {
        return 0.5 * ((c - (c - hh)) * f(c - hh) + (c - (c + hh)) * f(c + hh));
    };
    const double gc = (4.0 * gpair(h / 2) - gpair(h)) / 3.0;

    std::vector<double> cuts{a, c, b};
    for (double s : splits)
        if (s > a && s < b && s != c) cuts.push_back(s);
    std::sort(cuts.begin(), cuts.end());

    auto sub = [&](double x) { return f(x) - gc / (c - x); };
    QuadResult res;
    res.converged = true;
    const double piece_tol = tol / static_cast<double>(cuts.size() - 1);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const bool sl = (cuts[i] == a) ? singular_left : true;
        const bool sr = (cuts[i + 1] == b) ? singular_right : true;
        QuadResult piece = tanh_sinh_fn(sub, cuts[i], cuts[i + 1], sl, sr, piece_tol);
        res.value += piece.value;
        res.err_est += piece.err_est;
        res.n_evals += piece.n_evals;
        res.converged = res.converged && piece.converged;
    }
    res.value += gc * std::log((c - a) / (b - c));
    res.n_evals += 4;
    return res;
}

inline QuadResult principal_value(const IntegrandSpec& spec, double c, double tol) {
    return principal_value_fn(spec.f, spec.a, spec.b, c, spec.singular_left, spec.singular_right,
                              tol);
}

namespace detail {

// Mapped tanh-sinh grid on (0,1) at step h; weights carry the h factor.
inline std::vector<std::pair<double, double>> axis_grid(double h) {
    const auto nodes = make_ts_nodes(h);
    std::vector<std::pair<double, double>> g;
    g.reserve(2 * nodes.size());
    for (size_t j = nodes.size(); j-- > 1;) {
        const double x = 0.5 * nodes[j].offset;
        if (x > 0.0) g.emplace_back(x, nodes[j].weight * 0.5 * h);
    }
    g.emplace_back(0.5, nodes[0].weight * 0.5 * h);
    for (size_t j = 1; j < nodes.size(); ++j) {
        const double x = 1.0 - 0.5 * nodes[j].offset;
        if (x < 1.0) g.emplace_back(x, nodes[j].weight * 0.5 * h);
    }
    return g;
}

} // namespace detail

// Tensor-product tanh-sinh over the unit square/cube with a level shared
// across axes.  Face singularities are integrable by precondition, so a
// non-finite integrand value is counted as zero.
template <class F>
QuadResult cubature_nd_fn(F&& f, int dim, double tol, int max_level = -1) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("cubature_nd: dim must be 2 or 3");
    if (max_level < 0) max_level = (dim == 3) ? 3 : 5;
    QuadResult res;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int level = 0; level <= max_level; ++level) {
        const double h = 0.8 * std::ldexp(1.0, -level);
        const auto grid = detail::axis_grid(h);
        double sum = 0.0;
        if (dim == 2) {
            for (const auto& [x, wx] : grid) {
                double row = 0.0;
                for (const auto& [y, wy] : grid) {
                    const double v = f(x, y, 0.0);
                    row += std::isfinite(v) ? wy * v : 0.0;
                }
                sum += wx * row;
            }
            res.n_evals += static_cast<long long>(grid.size()) * grid.size();
        } else {
            for (const auto& [x, wx] : grid) {
                double plane = 0.0;
                for (const auto& [y, wy] : grid) {
                    double row = 0.0;
                    for (const auto& [z, wz] : grid) {
                        const double v = f(x, y, z);
                        row += std::isfinite(v) ? wz * v : 0.0;
                    }
                    plane += wy * row;
                }
                sum += wx * plane;
            }
            res.n_evals +=
                static_cast<long long>(grid.size()) * grid.size() * grid.size();
        }
        if (level > 0) {
            const double err = std::fabs(sum - prev);
            res.err_est = err;
            res.value = sum;
            if (err <= tol) {
                res.converged = true;
                return res;
            }
        }
        prev = sum;
        res.value = sum;
    }
    res.converged = false;
    return res;
}

inline QuadResult cubature_nd(const std::function<double(double, double, double)>& f, int dim,
                              double tol, int max_level = -1) {
    return cubature_nd_fn(f, dim, tol, max_level);
}

// int_0^inf f via r = t/(1-t).  Requires decay at least r^(-1-eps); the
// far tail where intermediate arithmetic overflows contributes zero.
template <class F>
QuadResult halfline_fn(F&& f, double tol, int max_level = 12) {
    auto g = [&](double t) {
        const double om = 1.0 - t;
        return f(t / om) / (om * om);
    };
    return tanh_sinh_fn(g, 0.0, 1.0, true, true, tol, max_level);
}

inline QuadResult halfline(const std::function<double(double)>& f, double tol,
                           int max_level = 12) {
    return halfline_fn(f, tol, max_level);
}

} // namespace ellint::quadrature

#endif
