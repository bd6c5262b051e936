#ifndef ELLINT_DETAIL_REGISTRY_S4_HPP
#define ELLINT_DETAIL_REGISTRY_S4_HPP

#include "ellint/detail/registry_util.hpp"
#include "ellint/series.hpp"

// Section 4: moment expansions, the exact KK' recurrence, hypergeometric
// closed forms and the Ramanujan-type hyperbolic series.

namespace ellint::catalog::detail {

// 3F2(1,1,1; 3/2,3/2; x) continued through the M(r) integral
// representation: F(x) = (1+r^2) int_0^1 xi K(xi)/(1+r^2 xi^2) dxi with
// r^2 = x/(1-x).  Valid wherever the denominator stays off the
// integration path, which covers the |x| > 1 and unit-circle arguments
// the direct series cannot reach.
inline std::complex<double> f3_211(std::complex<double> x, double tol = 1e-11) {
    const std::complex<double> r2 = x / (1.0 - x);
    auto re = quadrature::tanh_sinh_fn(
        [r2](double xi) {
            return (xi * K(xi) / (1.0 + r2 * xi * xi)).real();
        }, 0.0, 1.0, false, true, tol);
    auto im = quadrature::tanh_sinh_fn(
        [r2](double xi) {
            return (xi * K(xi) / (1.0 + r2 * xi * xi)).imag();
        }, 0.0, 1.0, false, true, tol);
    return (1.0 + r2) * std::complex<double>(re.value, im.value);
}

inline void register_s4(std::vector<IdentityRecord>& out) {
    RecordBuilder b{out};
    const double G = constants::catalan();
    const double Z3 = constants::apery();

    b.grid("eq_k_moment", "s4", "log-Gamma closed form of int x^n K(sqrt(1-x^2)) dx",
           "tanh_sinh: the defining moment integral", "lgamma", "tanh_sinh", 1e-12,
           CostClass::fast, {"moments"}, {"eq:K_moments"}, {0, 1, 2, 7, 16},
           [](double p) { return Val{series::k_moment(static_cast<long>(p)), 1e-16}; },
           [](double p) {
               return ts([p](double x) { return std::pow(x, p) * Kc(x); }, 0, 1, true, false,
                         1e-13);
           });

    b.grid("eq_kk_recurrence", "s4", "BigRational recurrence: pi^3 c_n",
           "tanh_sinh: int K(sqrt t) K(sqrt(1-t)) t^n dt", "kk_moment_rational", "tanh_sinh",
           1e-7, CostClass::fast, {"moments", "KK"}, {"eq:KK_recurrence", "eq:K_sqr_star"},
           {0, 1, 2, 3, 4, 5, 6, 7, 8},
           [](double p) {
               static const auto seq = series::kk_moment_rational(8);
               return Val{seq.values[static_cast<size_t>(p)].to_double() * PI * PI * PI, 1e-16};
           },
           [](double p) {
               return ts([p](double t) {
                   return Ksqrt(t) * specfun::ellip_k_comp(std::sqrt(t)) * std::pow(t, p);
               }, 0, 1, true, true, 1e-9);
           });

    b.grid("eq_M_3F2", "s4", "pfq: M(r) = r/(1+r^2) 3F2(1,1,1;3/2,3/2;r^2/(1+r^2))",
           "tanh_sinh: int r xi K(xi)/(1+r^2 xi^2) dxi", "pfq", "tanh_sinh", 1e-10,
           CostClass::fast, {"M"}, {"eq:M_3F2", "eq:GB_5"}, {0.5, 1.0, 2.0, 5.0},
           [](double r) { return Val{series::m_func(r), 1e-13}; },
           [](double r) {
               return ts([r](double xi) {
                   return r * xi * K(xi) / (1.0 + r * r * xi * xi);
               }, 0, 1, false, true, 1e-12);
           });

    b.grid("eq_W_3F2", "s4", "pfq: W(r) closed form via K and 3F2",
           "tanh_sinh: int r K(xi)/(r^2+xi^2) dxi", "pfq", "tanh_sinh", 1e-10, CostClass::fast,
           {"W"}, {"eq:W_3F2", "eq:GB_1"}, {0.5, 1.0, 2.0},
           [](double r) { return Val{series::w_func(r), 1e-13}; },
           [](double r) {
               return ts([r](double xi) { return r * K(xi) / (r * r + xi * xi); }, 0, 1, false,
                         true, 1e-12);
           });

    b.simple("eq_W_limit", "s4", "tanh_sinh: r W(r) at r = 2000", "2G (Bradley)", "tanh_sinh",
             "constants.catalan", 1e-6, CostClass::fast, {"G", "W"}, {"eq:GB_G"},
             [] {
                 const double r = 2000.0;
                 auto v = ts([r](double xi) {
                     return r * r * K(xi) / (r * r + xi * xi);
                 }, 0, 1, false, true, 1e-10);
                 return v;
             },
             [G] { return Val{2.0 * G, 1e-15}; });

    b.grid("eq_sum_rule_pfq", "s4", "pfq: W(r) + M(r) by the hypergeometric closed forms",
           "(pi/2)(1+r^2)^{-1/2} K(r/sqrt(1+r^2))", "pfq", "agm", 1e-9, CostClass::fast,
           {"W", "M"}, {"eq:sum_rule", "eq:3F2_sum_rule"}, {0.5, 1.0, 2.0},
           [](double r) { return Val{series::w_func(r) + series::m_func(r), 1e-12}; },
           [](double r) {
               const double s = std::sqrt(1.0 + r * r);
               return Val{PI / 2.0 / s * K(r / s), 1e-15};
           });

    b.simple("eq_b_sigma", "s4", "pfq: (pi/4) 3F2(1/2,1/2,1/2;1,3/2;1), 1e5 terms",
             "G (Bradley)", "pfq", "constants.catalan", 1e-5, CostClass::fast, {"G"},
             {"eq:b_series_exp"},
             [] {
                 auto r = specfun::pfq({{0.5, 0.5, 0.5}, {1.0, 1.5}, {1.0, 0.0}}, 100000, 0.0);
                 return Val{PI / 4.0 * r.value.real(), PI / 4.0 * r.tail_bound};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_G_K_mix_sigma", "s4", "pfq: -4F3(1/2,1,1,1;3/2,3/2,3/2;1)",
             "(2 pi G - 7 zeta3)/2", "pfq", "constants.catalan", 1e-5, CostClass::fast,
             {"G", "zeta3"}, {"eq:G_K_mix'"},
             [] {
                 auto r = specfun::pfq({{0.5, 1.0, 1.0, 1.0}, {1.5, 1.5, 1.5}, {1.0, 0.0}},
                                       200000, 1e-16);
                 return Val{-r.value.real(), r.tail_bound};
             },
             [G, Z3] { return Val{(2.0 * PI * G - 7.0 * Z3) / 2.0, 1e-15}; });

    b.simple("eq_gosper_g", "s4", "gosper_splits: single series for 2 pi G at 1e5 terms",
             "2 pi G", "gosper_splits", "constants.catalan", 1e-6, CostClass::fast, {"G"},
             {"eq:G_K_mix''"},
             [] { return Val{series::gosper_splits(100000).g_sum, 1e-9}; },
             [G] { return Val{2.0 * PI * G, 1e-15}; });

    b.simple("eq_gosper_zeta3", "s4", "gosper_splits: single series for 7 zeta3/2 at 1e5 terms",
             "7 zeta3/2", "gosper_splits", "constants.zeta3", 1e-6, CostClass::fast, {"zeta3"},
             {"eq:G_K_mix''"},
             [] { return Val{series::gosper_splits(100000).zeta3_sum, 1e-9}; },
             [Z3] { return Val{7.0 * Z3 / 2.0, 1e-15}; });

    b.simple("eq_K_tan_pi8_sigma", "s4", "pfq: 3F2(1/2,1,1;3/2,3/2;-1)",
             "pi^2/8 - log^2(sqrt2-1)/2", "pfq", "closed_form", 1e-5, CostClass::fast,
             {"pi2_8"}, {"eq:K_tan_pi8'"},
             [] {
                 auto r = specfun::pfq({{0.5, 1.0, 1.0}, {1.5, 1.5}, {-1.0, 0.0}}, 1000000,
                                       1e-16);
                 return Val{r.value.real(), std::fabs(r.tail_bound)};
             },
             [] {
                 const double l = std::log(std::sqrt(2.0) - 1.0);
                 return Val{PI * PI / 8.0 - 0.5 * l * l, 0.0};
             });

    b.simple("eq_K_5_2_sigma", "s4", "pfq: (1/2) 3F2(1/2,1,1;3/2,3/2;-1/4)",
             "pi^2/12 - log^2(sqrt5-2)/6", "pfq", "closed_form", 1e-10, CostClass::fast,
             {"pi2_8"}, {"eq:K_5_2'"},
             [] {
                 auto r = specfun::pfq({{0.5, 1.0, 1.0}, {1.5, 1.5}, {-0.25, 0.0}}, 100000,
                                       1e-16);
                 return Val{0.5 * r.value.real(), r.tail_bound};
             },
             [] {
                 const double l = std::log(std::sqrt(5.0) - 2.0);
                 return Val{PI * PI / 12.0 - l * l / 6.0, 0.0};
             });

    b.simple("eq_Li2_limit_pi_sigma", "s4", "pfq: (1/4) 2F1(1/2,1/2;2;1)", "1/pi", "pfq",
             "constants.pi", 1e-5, CostClass::fast, {"pi"}, {"eq:Li2_limit_pi'"},
             [] {
                 auto r = specfun::pfq({{0.5, 0.5}, {2.0}, {1.0, 0.0}}, 100000, 0.0);
                 return Val{0.25 * r.value.real(), 0.25 * r.tail_bound};
             },
             [] { return Val{1.0 / PI, 0.0}; });

    b.simple("eq_G_Ti_b_sigma", "s4", "constants: Ramanujan series for G",
             "constants: Bradley series for G", "constants.ramanujan", "constants.catalan",
             1e-12, CostClass::fast, {"G"}, {"eq:G_Ti_b'"},
             [] {
                 return Val{constants::catalan_g(constants::GMethod::ramanujan).value, 1e-16};
             },
             [G] { return Val{G, 1e-16}; });

    b.simple("eq_G_Ti_c_sigma", "s4", "constants: Bradley acceleration series for G",
             "constants: Euler-transformed alternating series", "constants.bradley",
             "constants.alternating", 1e-12, CostClass::fast, {"G"}, {"eq:G_Ti_c'"},
             [] { return Val{constants::catalan_g(constants::GMethod::bradley).value, 1e-16}; },
             [] {
                 return Val{constants::catalan_g(constants::GMethod::alternating).value,
                            1e-16};
             });

    // Functional equation for W as a 3F2 identity, real and imaginary
    // parts, with the out-of-disk arguments reached through the M(r)
    // integral continuation.
    {
        auto run_3f2 = [](double th) {
            using C = std::complex<double>;
            const C I(0, 1);
            const double s = std::sin(th), c = std::cos(th);
            auto direct = specfun::pfq(
                {{1.0, 1.0, 1.0}, {1.5, 1.5}, {-s * s / (c * c), 0.0}}, 200000, 1e-16);
            const C f1 = direct.value;
            const C f2 = f3_211(C(-c * c / (s * s), 0.0));
            const C f3 = f3_211(1.0 / (1.0 - std::exp(4.0 * I * th)));
            return I * s / (c * c) * f1 + c / (s * s) * f2 + (I / s + 1.0 / c) * f3;
        };
        b.simple("eq_3F2_sum_rule_re", "s4",
                 "pfq+continuation: Re of the three-term 3F2 combination at theta=0.3",
                 "(pi/2) K(sin theta)", "pfq", "agm", 1e-8, CostClass::fast, {"W"},
                 {"eq:3F2_sum_rule"},
                 [run_3f2] { return Val{run_3f2(0.3).real(), 1e-11}; },
                 [] { return Val{PI / 2.0 * K(std::sin(0.3)), 1e-15}; });
        b.simple("eq_3F2_sum_rule_im", "s4",
                 "pfq+continuation: Im of the three-term 3F2 combination at theta=0.3",
                 "(pi/2) K(cos theta)", "pfq", "agm", 1e-8, CostClass::fast, {"W"},
                 {"eq:3F2_sum_rule"},
                 [run_3f2] { return Val{run_3f2(0.3).imag(), 1e-11}; },
                 [] { return Val{PI / 2.0 * K(std::cos(0.3)), 1e-15}; });
    }

    b.simple("eq_3F2_pi4", "s4", "pfq+continuation: 3F2(..;-1) + 3F2(..;1/2)",
             "sqrt(pi) Gamma(1/4)^2/(8 sqrt 2)", "pfq", "constants.gamma", 1e-6,
             CostClass::fast, {"gamma"}, {"eq:3F2_sum_rule_pi4"},
             [] {
                 const double fm1 = f3_211(std::complex<double>(-1.0, 0.0)).real();
                 auto fh = specfun::pfq({{1.0, 1.0, 1.0}, {1.5, 1.5}, {0.5, 0.0}}, 100000,
                                        1e-16);
                 return Val{fm1 + fh.value.real(), 1e-10};
             },
             [] {
                 const double gq = constants::gamma_quarter();
                 return Val{std::sqrt(PI) * gq * gq / (8.0 * std::sqrt(2.0)), 1e-14};
             });

    b.simple("eq_3F2_pi12", "s4",
             "pfq+continuation: Chowla-Selberg combination at theta = pi/12",
             "3^{1/4} Gamma(1/3)^3 / 2^{17/6}", "pfq", "constants.gamma", 1e-8,
             CostClass::fast, {"gamma"}, {"eq:3F2_sum_rule_pi12"},
             [] {
                 using C = std::complex<double>;
                 const double s3 = std::sqrt(3.0);
                 const double fp = f3_211(C(-(2.0 + s3) * (2.0 + s3), 0.0)).real();
                 const double fm = f3_211(C(-(2.0 - s3) * (2.0 - s3), 0.0)).real();
                 const C fc = f3_211(C(0.5, 0.5 * s3));
                 const C w = (C(1.0, 1.0) * C(s3, -1.0)) * fc;
                 return Val{(5.0 + 3.0 * s3) / 2.0 * fp - s3 * (5.0 - 3.0 * s3) / 2.0 * fm +
                                w.real(),
                            1e-10};
             },
             [] {
                 const double gt = constants::gamma_third();
                 return Val{std::pow(3.0, 0.25) * gt * gt * gt / std::pow(2.0, 17.0 / 6.0),
                            1e-14};
             });

    b.simple("eq_3F2_5pi12", "s4",
             "pfq+continuation: imaginary-difference combination at theta = 5 pi/12",
             "Im[(1+i)(sqrt3-i) 3F2(...|1/2+i sqrt3/2)]", "pfq", "pfq_dual", 1e-8,
             CostClass::fast, {"gamma"}, {"eq:3F2_sum_rule_5pi12"},
             [] {
                 const double s3 = std::sqrt(3.0);
                 const double fp =
                     f3_211(std::complex<double>(-(2.0 + s3) * (2.0 + s3), 0.0)).real();
                 const double fm =
                     f3_211(std::complex<double>(-(2.0 - s3) * (2.0 - s3), 0.0)).real();
                 return Val{s3 * (5.0 + 3.0 * s3) / 2.0 * fp + (5.0 - 3.0 * s3) / 2.0 * fm,
                            1e-10};
             },
             [] {
                 using C = std::complex<double>;
                 const double s3 = std::sqrt(3.0);
                 const C fc = f3_211(C(0.5, 0.5 * s3));
                 const C w = (C(1.0, 1.0) * C(s3, -1.0)) * fc;
                 return Val{w.imag(), 1e-10};
             });

    // Ramanujan-type hyperbolic series, exactly as displayed.
    b.simple("eq_sum_rule_r1", "s4",
             "hyperbolic series: sum (2n+1)^-2 [(-1)^n/sinh + 2/cosh]((2n+1)pi/2)", "pi^2/8",
             "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast, {"pi2_8"},
             {"eq:3F2_sum_rule_R_1", "eq:3F2_sum_rule_R"},
             [] {
                 double sum = 0.0;
                 for (int n = 0; n < 40; ++n) {
                     const double m = 2.0 * n + 1.0;
                     const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
                     const double t = (sgn / std::sinh(m * PI / 2.0) +
                                       2.0 / std::cosh(m * PI / 2.0)) /
                                      (m * m);
                     sum += t;
                     if (std::fabs(t) < 1e-18) break;
                 }
                 return Val{sum, 1e-17};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    {
        auto r2_sum = [] {
            using C = std::complex<double>;
            const C I(0, 1);
            const double s3 = std::sqrt(3.0);
            C sum = 0.0;
            for (int n = 0; n < 64; ++n) {
                const double m = 2.0 * n + 1.0;
                const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
                const C t = (s3 * sgn / std::sinh(m * PI / (2.0 * s3)) +
                             I * sgn / std::sinh(m * s3 * PI / 2.0) +
                             2.0 * (1.0 + I * s3) / std::cos(m * (1.0 + I * s3) * PI / 4.0)) /
                            (m * m);
                sum += t;
                if (std::abs(t) < 1e-18) break;
            }
            return sum;
        };
        b.simple("eq_sum_rule_r2_re", "s4", "hyperbolic series at y = sqrt 3, real part",
                 "pi^2/8", "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast, {"pi2_8"},
                 {"eq:3F2_sum_rule_R_2"}, [r2_sum] { return Val{r2_sum().real(), 1e-16}; },
                 [] { return Val{PI * PI / 8.0, 0.0}; });
        b.simple("eq_sum_rule_r2_im", "s4", "hyperbolic series at y = sqrt 3, imaginary part",
                 "pi^2 sqrt3/8", "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast,
                 {"pi2_8"}, {"eq:3F2_sum_rule_R_2"},
                 [r2_sum] { return Val{r2_sum().imag(), 1e-16}; },
                 [] { return Val{PI * PI * std::sqrt(3.0) / 8.0, 0.0}; });
    }
    {
        auto r3_sum = [] {
            using C = std::complex<double>;
            const C I(0, 1);
            const double s3 = std::sqrt(3.0);
            C sum = 0.0;
            for (int n = 0; n < 64; ++n) {
                const double m = 2.0 * n + 1.0;
                const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
                const C t = (sgn / (s3 * std::sinh(m * s3 * PI / 2.0)) +
                             I * sgn / std::sinh(m * PI / (2.0 * s3)) +
                             2.0 * (1.0 + I / s3) / std::cos(m * (1.0 - I * s3) * PI / 4.0)) /
                            (m * m);
                sum += t;
                if (std::abs(t) < 1e-18) break;
            }
            return sum;
        };
        b.simple("eq_sum_rule_r3_re", "s4", "hyperbolic series at y = 1/sqrt 3, real part",
                 "pi^2/8", "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast, {"pi2_8"},
                 {"eq:3F2_sum_rule_R_3"}, [r3_sum] { return Val{r3_sum().real(), 1e-16}; },
                 [] { return Val{PI * PI / 8.0, 0.0}; });
        b.simple("eq_sum_rule_r3_im", "s4",
                 "hyperbolic series at y = 1/sqrt 3, imaginary part", "pi^2/(8 sqrt3)",
                 "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast, {"pi2_8"},
                 {"eq:3F2_sum_rule_R_3"}, [r3_sum] { return Val{r3_sum().imag(), 1e-16}; },
                 [] { return Val{PI * PI / (8.0 * std::sqrt(3.0)), 0.0}; });
    }

    b.grid("eq_hyperbolic_y", "s4", "hyperbolic_sum: generic-y three-sum total (real part)",
           "pi^2/8", "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast, {"pi2_8"},
           {"eq:3F2_sum_rule_R"}, {0.7, 1.3, 2.5},
           [](double y) { return Val{series::hyperbolic_sum(y).real(), 1e-16}; },
           [](double) { return Val{PI * PI / 8.0, 0.0}; });

    b.grid("eq_hyperbolic_y_im", "s4", "hyperbolic_sum: generic-y three-sum total (imag part)",
           "pi^2 y/8", "hyperbolic_sum", "constants.pi", 1e-12, CostClass::fast, {"pi2_8"},
           {"eq:3F2_sum_rule_R"}, {0.7, 1.3, 2.5},
           [](double y) { return Val{series::hyperbolic_sum(y).imag(), 1e-16}; },
           [](double y) { return Val{PI * PI * y / 8.0, 0.0}; });

    // Complex extension, sampled at z = i.
    {
        auto cplx_sum = [] {
            using C = std::complex<double>;
            const C I(0, 1), z = I;
            C sum = 0.0;
            const C a1 = PI * (z + 1.0) / (2.0 * I);
            const C a2 = PI * (z - 1.0) / (2.0 * I * z);
            const C a3 = PI * (z - 1.0) / (2.0 * I * (z + 1.0));
            for (int n = 0; n < 64; ++n) {
                const double m = 2.0 * n + 1.0;
                const C t = (1.0 / std::cosh(m * a1) - z / std::cosh(m * a2)) /
                                ((m * m) * (1.0 + z)) +
                            2.0 / ((m * m) * std::cosh(m * a3));
                sum += t;
                if (std::abs(t) < 1e-18) break;
            }
            return sum;
        };
        b.simple("eq_3F2_cplx_re", "s4", "complex hyperbolic extension at z = i, real part",
                 "pi^2/8", "hyperbolic_sum", "constants.pi", 1e-10, CostClass::fast, {"pi2_8"},
                 {"eq:3F2_sum_rule_cplx"}, [cplx_sum] { return Val{cplx_sum().real(), 1e-16}; },
                 [] { return Val{PI * PI / 8.0, 0.0}; });
        b.simple("eq_3F2_cplx_im", "s4", "complex hyperbolic extension at z = i, imag part",
                 "0", "hyperbolic_sum", "constants.pi", 1e-10, CostClass::fast, {"pi2_8"},
                 {"eq:3F2_sum_rule_cplx"}, [cplx_sum] { return Val{cplx_sum().imag(), 1e-16}; },
                 [] { return Val{0.0, 0.0}; });
    }

    b.grid("eq_K_sqr_minus_pi4_sigma", "s4",
           "pfq: 7F6 moment term of [K(sqrt(1-x^2))]^2 x^{2n+1}",
           "tanh_sinh: the same moment by quadrature", "pfq", "tanh_sinh", 1e-6,
           CostClass::fast, {"KK"}, {"eq:K_sqr_minus_pi4'"}, {0, 1, 2},
           [](double p) {
               const double n = p;
               // 2^{4n+1} (n!)^4 (n+1) / ((2n+1)!!)^4 * 7F6(...|1)
               double pref = 2.0 * (n + 1.0);
               for (int j = 1; j <= static_cast<int>(n); ++j)
                   pref *= 16.0 * std::pow(j / (2.0 * j + 1.0), 4.0);
               auto r = specfun::pfq({{0.5, 0.5, 0.5, 0.5, n + 1.0, n + 1.0, (n + 3.0) / 2.0},
                                      {1.0, (n + 1.0) / 2.0, n + 1.5, n + 1.5, n + 1.5,
                                       n + 1.5},
                                      {1.0, 0.0}},
                                     200000, 1e-16);
               return Val{pref * r.value.real(), pref * r.tail_bound};
           },
           [](double p) {
               return ts([p](double x) {
                   const double kk = Kc(x);
                   return kk * kk * std::pow(x, 2.0 * p + 1.0);
               }, 0, 1, true, false, 1e-10);
           });

    b.grid("eq_KKlogt_sigma", "s4", "pfq: 4F3 moment term of K(x) K(sqrt(1-x^2)) x^{2n+1}",
           "tanh_sinh: the same moment by quadrature", "pfq", "tanh_sinh", 1e-6,
           CostClass::fast, {"KK"}, {"eq:KKlogt_zeta3'"}, {1, 2, 3},
           [](double p) {
               const double n = p;
               double pref = PI / 2.0; // pi 2^{2n-1} (n!)^2/((2n+1)!!)^2
               for (int j = 1; j <= static_cast<int>(n); ++j)
                   pref *= 4.0 * std::pow(j / (2.0 * j + 1.0), 2.0);
               auto r = specfun::pfq(
                   {{0.5, 0.5, n + 1.0, n + 1.0}, {1.0, n + 1.5, n + 1.5}, {1.0, 0.0}},
                   1000000, 1e-16);
               return Val{pref * r.value.real(), pref * r.tail_bound};
           },
           [](double p) {
               return ts([p](double x) {
                   return K(x) * Kc(x) * std::pow(x, 2.0 * p + 1.0);
               }, 0, 1, true, true, 1e-10);
           });

    b.simple("eq_KKlog_moment", "s4",
             "tanh_sinh: (2/pi) int K(x) K(sqrt(1-x^2)) x log(1/(1-x^2)) dx",
             "pi^2/2 log2 - 7 zeta3/4", "tanh_sinh", "constants.zeta3", 1e-7, CostClass::fast,
             {"KK", "zeta3"}, {"eq:KKlogt_zeta3'", "eq:KKlogt_zeta3"},
             [] {
                 auto v = ts([](double x) {
                     return K(x) * Kc(x) * x * (-std::log1p(-x * x));
                 }, 0, 1, true, true, 1e-10);
                 return Val{2.0 * v.v / PI, v.e};
             },
             [Z3] { return Val{PI * PI / 2.0 * std::log(2.0) - 7.0 * Z3 / 4.0, 1e-15}; });

    b.grid("eq_tricomi_fourier", "s4", "levin-accelerated Tricomi Fourier expansion of K",
           "AGM: K(sin theta)", "levin_series", "agm", 1e-5, CostClass::fast, {"K"},
           {"eq:Tricomi_Fourier"}, {0.3, 1.0},
           [](double th) { return Val{series::tricomi_fourier_k(th, 200), 1e-8}; },
           [](double th) { return Val{K(std::sin(th)), 1e-15}; });
}

} // namespace ellint::catalog::detail

#endif
