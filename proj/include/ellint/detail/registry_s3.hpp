#ifndef ELLINT_DETAIL_REGISTRY_S3_HPP
#define ELLINT_DETAIL_REGISTRY_S3_HPP

#include <memory>
#include <unordered_map>

#include "ellint/detail/registry_util.hpp"
#include "ellint/transforms.hpp"

// Section 3: the four Beltrami rotations, their descendants, and the
// W/M duality relations.

namespace ellint::catalog::detail {

inline void register_s3(std::vector<IdentityRecord>& out) {
    RecordBuilder b{out};
    const double G = constants::catalan();
    const double Z3 = constants::apery();

    // Reproduction of K(k) by all four kernels; grid packs variant*10+i
    // over k in {0.3, 0.6, 0.9}.
    b.grid("eq_beltrami_repro", "s3", "tanh_sinh: int_0^1 kernel(var;k,x) K(sqrt(1-x^2)) dx",
           "AGM: K(k)", "beltrami_kernel", "agm", 1e-10, CostClass::fast, {"K"},
           {"eq:Beltrami", "eq:iB", "eq:LB", "eq:iLB"},
           {0, 1, 2, 10, 11, 12, 20, 21, 22, 30, 31, 32},
           [](double p) {
               static const double ks[3] = {0.3, 0.6, 0.9};
               const auto var = static_cast<transforms::BeltramiVariant>(static_cast<int>(p) / 10);
               const double k = ks[static_cast<int>(p) % 10];
               return ts([var, k](double x) {
                   return transforms::beltrami_kernel(var, k, x) * Kc(x);
               }, 0, 1, true, false, 1e-12);
           },
           [](double p) {
               static const double ks[3] = {0.3, 0.6, 0.9};
               return Val{K(ks[static_cast<int>(p) % 10]), 1e-15};
           });

    b.simple("eq_a_B", "s3", "tanh_sinh: type-B transformed weight of 1/(1+k)", "pi^2/8",
             "tanh_sinh", "constants.pi", 1e-8, CostClass::fast, {"pi2_8"}, {"eq:a_B"},
             [] {
                 return ts([](double x) {
                     const double br = (1.0 - x) * std::log1p(-x) + (1.0 + x) * std::log1p(x) -
                                       std::log(4.0);
                     return Kc(x) * br / (PI * (x * x - 1.0));
                 }, 0, 1, true, true, 1e-11);
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_b_B", "s3", "tanh_sinh: type-B transformed weight with Li2(+-x)",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast,
             {"G", "dilog"}, {"eq:b_B"},
             [] {
                 return ts([](double x) {
                     const double li_p = specfun::dilog(std::complex<double>(x, 0)).real();
                     const double li_m = specfun::dilog(std::complex<double>(-x, 0)).real();
                     const double br =
                         PI * PI - 3.0 * (1.0 + x) * li_p - 3.0 * (1.0 - x) * li_m;
                     return Kc(x) * br / (3.0 * PI * PI * (1.0 - x) * (1.0 + x));
                 }, 0, 1, true, true, 1e-11);
             },
             [G] { return Val{G, 1e-15}; });

    b.grid("eq_beta_prime_B", "s3",
           "tanh_sinh: (1/pi) int K(sqrt(1-x^2)) atanh(x cos(b/2)/sqrt(1-x^2 sin^2(b/2)))/(x sqrt(..)) dx",
           "G + (1/4) int_0^b log tan((pi-a)/4) da", "tanh_sinh", "constants.catalan+adaptive",
           1e-8, CostClass::fast, {"G"}, {"eq:beta'_B"}, {0.0, PI / 4, PI / 2, 2 * PI / 3, 2.7},
           [](double beta) {
               const double c = std::cos(beta / 2), s2 = std::sin(beta / 2) * std::sin(beta / 2);
               auto v = ts2([c, s2](double x, double, double ur) {
                   const double w2 = 1.0 - x * x * s2;
                   const double w = std::sqrt(w2);
                   const double omx2 = ur * (1.0 + x);
                   const double ath = std::log1p(x * c / w) - 0.5 * std::log(omx2 / w2);
                   return Kc(x) * ath / (x * w);
               }, 0, 1, 1e-11);
               return Val{v.v / PI, v.e};
           },
           [](double beta) { return Val{L_beta(beta), 1e-13}; });

    b.grid("eq_beta_prime_prime_B", "s3",
           "tanh_sinh: -(sin(b/2)/(2 pi)) int K(sqrt(1-x^2)) [1 - u atanh u]/(1-x^2 sin^2(b/2)) dx",
           "(1/4) log tan((pi-b)/4)", "tanh_sinh", "closed_form", 1e-8, CostClass::fast,
           {"logtan"}, {"eq:beta''_B"}, {0.4, 0.9, 1.6, 2.4},
           [](double beta) {
               const double c = std::cos(beta / 2), s = std::sin(beta / 2);
               auto v = ts2([c, s](double x, double, double ur) {
                   const double d = 1.0 - x * x * s * s;
                   const double u = x * c / std::sqrt(d);
                   const double omu2 = ur * (1.0 + x) / d;
                   return Kc(x) * (1.0 - u * atanh_c(u, omu2)) / d;
               }, 0, 1, 1e-11);
               return Val{-s / (2.0 * PI) * v.v, v.e};
           },
           [](double beta) { return Val{0.25 * std::log(std::tan((PI - beta) / 4.0)), 0.0}; });

    b.grid("eq_Li2int_B", "s3", "tanh_sinh: type-B transform of Li2int on the z = it slice",
           "2 Ti2(t)/t", "tanh_sinh", "dilog", 1e-8, CostClass::fast, {"dilog"},
           {"eq:Li2int_B"}, {0.25, 0.5, 0.75, 1.0},
           [](double t) {
               const double a = 1.0 - t * t, bb = 1.0 + t * t;
               return ts([a, bb, t](double x) {
                   const double sx = std::sqrt(a * a * x * x + 4.0 * t * t);
                   const double br = -0.5 * (std::log1p(-x) + std::log1p(x)) +
                                     std::log((sx + bb * x) / (sx + a * x));
                   return 4.0 * Kc(x) * br / (PI * x * sx);
               }, 0, 1, true, true, 1e-11);
           },
           [](double t) { return Val{2.0 * specfun::ti2(t) / t, 1e-14}; });

    b.simple("eq_Li2_limit_pi", "s3",
             "tanh_sinh: int_0^1 K(sqrt(1-x^2)) log(1/(1-x^2))/x^2 dx", "pi", "tanh_sinh",
             "constants.pi", 1e-8, CostClass::fast, {"pi"}, {"eq:Li2_limit_pi"},
             [] {
                 return ts([](double x) {
                     return Kc(x) * (-std::log1p(-x * x)) / (x * x);
                 }, 0, 1, true, true, 1e-11);
             },
             [] { return Val{PI, 0.0}; });

    b.simple("eq_G_Klog_B", "s3",
             "tanh_sinh: pi/4 - log2/2 - (1/2pi) int K(sqrt(1-x^2)) log(1-x)log(1+x)/x^2 dx",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast, {"G"},
             {"eq:G_Klog_B"},
             [] {
                 auto v = ts([](double x) {
                     return Kc(x) * std::log1p(-x) * std::log1p(x) / (x * x);
                 }, 0, 1, true, true, 1e-11);
                 return Val{PI / 4.0 - 0.5 * std::log(2.0) - v.v / (2.0 * PI), v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.grid("eq_K_arcsin_B", "s3",
           "tanh_sinh: (4/pi) int K(sqrt(1-u^2)) asin(u x)/(u sqrt(1-u^2 x^2)) du", "pi asin x",
           "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"K"}, {"eq:K_arcsin_B"},
           {0.2, 0.5, 0.8, 0.95, 1.0},
           [](double x) {
               const double omx2 = (1.0 - x) * (1.0 + x);
               auto v = ts2([x, omx2](double u, double, double ur) {
                   const double omux2 = ur * (1.0 + u) * x * x + omx2;
                   return Kc(u) * asin_c(u * x, omux2) / (u * std::sqrt(omux2));
               }, 0, 1, 1e-11);
               return Val{4.0 / PI * v.v, v.e};
           },
           [](double x) { return Val{PI * std::asin(x), 0.0}; });

    b.grid("eq_K_arsinh_iB", "s3",
           "tanh_sinh: (4/pi) int K(sqrt(1-u^2)) asinh(u x)/(u sqrt(1+u^2 x^2)) du",
           "pi asinh x", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"K"},
           {"eq:K_arcsin*_B", "eq:K_arsinh_iB"}, {0.5, 1.0, 3.0},
           [](double x) {
               auto v = ts([x](double u) {
                   return Kc(u) * std::asinh(u * x) / (u * std::sqrt(1.0 + u * u * x * x));
               }, 0, 1, true, false, 1e-11);
               return Val{4.0 / PI * v.v, v.e};
           },
           [](double x) { return Val{PI * std::asinh(x), 0.0}; });

    b.grid("eq_K_arsinh_B", "s3", "tanh_sinh: type-B transform with arcsin bracket",
           "pi asinh x", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"K"},
           {"eq:K_arsinh_B"}, {0.5, 1.0, 2.0},
           [](double x) {
               const double w = x / std::sqrt(1.0 + x * x);
               auto v = ts([x, w](double u) {
                   const double d = std::sqrt(1.0 + (1.0 - u * u) * x * x);
                   const double br = std::asin(w) - u / d * std::asin(u * w);
                   return Kc(u) * br / ((1.0 - u) * (1.0 + u));
               }, 0, 1, true, true, 1e-11);
               return Val{4.0 / PI * v.v, v.e};
           },
           [](double x) { return Val{PI * std::asinh(x), 0.0}; });

    b.grid("eq_K_arcsin_iB", "s3", "tanh_sinh: type-iB transform with atanh bracket",
           "pi asin x", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"K"},
           {"eq:K_arcsin_iB", "eq:K_arsinh*_B"}, {0.2, 0.5, 0.8},
           [](double x) {
               auto v = ts([x](double u) {
                   const double d = std::sqrt(1.0 - (1.0 - u * u) * x * x);
                   const double br = std::atanh(x) - u / d * std::atanh(u * x / d);
                   return Kc(u) * br / ((1.0 - u) * (1.0 + u));
               }, 0, 1, true, true, 1e-11);
               return Val{4.0 / PI * v.v, v.e};
           },
           [](double x) { return Val{PI * std::asin(x), 0.0}; });

    b.grid("eq_K_arcsin_iB_deriv", "s3", "tanh_sinh: derivative form of the iB arcsine identity",
           "pi/sqrt(1-x^2)", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"K"},
           {"eq:K_arcsin_iB_deriv"}, {0.2, 0.5, 0.8},
           [](double x) {
               auto v = ts([x](double u) {
                   const double d2 = 1.0 - (1.0 - u * u) * x * x;
                   const double d = std::sqrt(d2);
                   return Kc(u) * (1.0 - u * x / d * std::atanh(u * x / d)) / d2;
               }, 0, 1, true, true, 1e-11);
               return Val{4.0 / PI * v.v, v.e};
           },
           [](double x) { return Val{PI / std::sqrt((1.0 - x) * (1.0 + x)), 0.0}; });

    b.grid("eq_K_arsinh_iB_deriv", "s3", "tanh_sinh: derivative form of the iB arsinh identity",
           "pi/sqrt(1+x^2)", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"K"},
           {"eq:K_arsinh_iB_deriv"}, {0.5, 1.0, 3.0},
           [](double x) {
               auto v = ts([x](double u) {
                   const double d2 = 1.0 + u * u * x * x;
                   const double d = std::sqrt(d2);
                   return Kc(u) * (1.0 - u * x / d * std::atanh(u * x / d)) / d2;
               }, 0, 1, true, false, 1e-11);
               return Val{4.0 / PI * v.v, v.e};
           },
           [](double x) { return Val{PI / std::sqrt(1.0 + x * x), 0.0}; });

    b.grid("eq_K_reprod_B", "s3", "tanh_sinh: type-B transformed K-reproducing kernel",
           "pi K(r)/8 - pi^2/(16(1+r))", "tanh_sinh", "agm", 1e-8, CostClass::fast, {"K"},
           {"eq:K_reprod_B"}, {0.2, 0.5, 0.8},
           [](double r) {
               const double sr = std::sqrt(r), ath = std::atanh(std::sqrt(r));
               auto v = ts([r, sr, ath](double x) {
                   const double den = 4.0 * r + (1.0 - r) * (1.0 - r) * x * x;
                   const double num = x * (1.0 + r) * sr * ath -
                                      r * std::sqrt((1.0 - x) * (1.0 + x)) * std::asin(x);
                   return 2.0 * Kc(x) * num / (PI * (1.0 + r) * x * den);
               }, 0, 1, true, true, 1e-11);
               return v;
           },
           [](double r) {
               return Val{PI * K(r) / 8.0 - PI * PI / (16.0 * (1.0 + r)), 1e-15};
           });

    b.grid("eq_Abel1_B", "s3", "tanh_sinh: type-iB transform of the Abel1 weight",
           "arcsin branch formula", "tanh_sinh", "closed_form", 1e-8, CostClass::fast,
           {"abel"}, {"eq:Abel1_B"}, {0.3, 0.7, 1.0},
           [](double a) {
               auto v = ts2([a](double x, double, double ur) {
                   const double omx2 = ur * (1.0 + x);
                   const double d = std::sqrt((1.0 - a) * (1.0 + a) + a * a * x * x);
                   const double br =
                       std::log1p(a) - x * atanh_c(x, omx2) -
                       x / d * (0.5 * std::log(omx2) + std::log((a * x + d) / (x + d)));
                   return Kc(x) * br / omx2;
               }, 0, 1, 1e-11);
               return Val{2.0 / PI * v.v, v.e};
           },
           [](double a) {
               if (a <= 1.0) {
                   const double as = std::asin(a);
                   return Val{as / 2.0 * (PI - as), 0.0};
               }
               const double l = std::log(std::sqrt(a * a - 1.0) + a);
               return Val{PI * PI / 8.0 + l * l / 2.0, 0.0};
           });

    // Abel2_B needs the cancellation-free bracket: the two O(1/delta)
    // arctangent terms are combined exactly before dividing by 1-x^2.
    b.grid("eq_Abel2_B", "s3", "tanh_sinh: type-iB transform of the Abel2 weight (stable form)",
           "pi/8 [(1+2a^2) asinh a - a sqrt(1+a^2)]", "tanh_sinh", "closed_form", 1e-8,
           CostClass::fast, {"abel"}, {"eq:Abel2_B"}, {0.5, 1.0, 2.0},
           [](double a) {
               const double ata = std::atan(a);
               auto v = ts2([a, ata](double x, double, double ur) {
                   const double delta = ur * (1.0 + x);
                   const double D = std::sqrt(1.0 + delta * a * a);
                   // atan(a) - atan(a x / D) through exact differences.
                   const double w = a * (1.0 + a * a) / ((D + x) * (D + a * a * x));
                   const double dd = w * delta;
                   const double ratio = (std::fabs(dd) > 1e-8) ? std::atan(dd) / dd
                                                               : 1.0 - dd * dd / 3.0;
                   const double A = ata * (1.0 - x * x * a * a) / (1.0 + x * D) +
                                    x * D * w * ratio;
                   const double br = A - (1.0 - a * a) * ata / 2.0 - a / 2.0;
                   return Kc(x) * br / delta;
               }, 0, 1, 1e-11);
               return Val{2.0 / PI * v.v, v.e};
           },
           [](double a) {
               return Val{PI / 8.0 * ((1.0 + 2.0 * a * a) * std::asinh(a) -
                                      a * std::sqrt(1.0 + a * a)),
                          0.0};
           });

    b.simple("eq_a_iB", "s3", "tanh_sinh: (1/pi) int_0^{pi/2} K(sin t)(pi sin t - 2t)/cos t dt",
             "pi^2/8", "tanh_sinh", "constants.pi", 1e-8, CostClass::fast, {"pi2_8"},
             {"eq:a_iB"},
             [] {
                 auto v = ts([](double t) {
                     const double kk =
                         specfun::ellip_k(specfun::Modulus::from_complement(std::cos(t)));
                     return kk * (PI * std::sin(t) - 2.0 * t) / std::cos(t);
                 }, 0, PI / 2, false, true, 1e-11);
                 return Val{v.v / PI, v.e};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_a_LB", "s3", "tanh_sinh: (1/pi) int K(sqrt(1-x^2)) asin(x)/(x sqrt(1-x^2)) dx",
             "pi^2/8", "tanh_sinh", "constants.pi", 1e-8, CostClass::fast, {"pi2_8"},
             {"eq:a_LB"},
             [] {
                 auto v = ts2([](double x, double, double ur) {
                     const double omx2 = ur * (1.0 + x);
                     return Kc(x) * asin_c(x, omx2) / (x * std::sqrt(omx2));
                 }, 0, 1, 1e-11);
                 return Val{v.v / PI, v.e};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_a_iLB", "s3", "tanh_sinh: -(1/pi) int K(sqrt(1-x^2)) log x/(1-x^2) dx",
             "pi^2/8", "tanh_sinh", "constants.pi", 1e-8, CostClass::fast, {"pi2_8"},
             {"eq:a_iLB"},
             [] {
                 auto v = ts([](double x) {
                     return -Kc(x) * std::log(x) / ((1.0 - x) * (1.0 + x));
                 }, 0, 1, true, true, 1e-11);
                 return Val{v.v / PI, v.e};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.grid("eq_beta_prime_iB", "s3", "tanh_sinh: type-iB reduced weight (exact bracket)",
           "G + (1/4) int_0^b log tan((pi-a)/4) da", "tanh_sinh", "constants.catalan+adaptive",
           1e-8, CostClass::fast, {"G"}, {"eq:beta'_iB"}, {0.0, PI / 3, 2 * PI / 3, 2.7},
           [](double beta) {
               const double c2 = std::cos(beta / 2) * std::cos(beta / 2);
               const double s2 = std::sin(beta / 2) * std::sin(beta / 2);
               auto v = ts([c2, s2](double x) {
                   const double d = std::sqrt(c2 + x * x * s2);
                   // (1 - x/d)/(1-x^2) = c2 / (d (d + x))
                   return Kc(x) * c2 / (d * (d + x));
               }, 0, 1, true, false, 1e-11);
               return Val{v.v / 2.0, v.e};
           },
           [](double beta) { return Val{L_beta(beta), 1e-13}; });

    b.simple("eq_2G3_iB", "s3", "tanh_sinh: (1/2) int K(sqrt(1-x^2)) dx/(sqrt(1+3x^2)(sqrt(1+3x^2)+2x))",
             "2G/3", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast, {"G"},
             {"eq:beta'_iB_2pi3"},
             [] {
                 auto v = ts([](double x) {
                     const double d = std::sqrt(1.0 + 3.0 * x * x);
                     return Kc(x) / (d * (d + 2.0 * x));
                 }, 0, 1, true, false, 1e-11);
                 return Val{v.v / 2.0, v.e};
             },
             [G] { return Val{2.0 * G / 3.0, 1e-15}; });

    b.simple("eq_2G5_iB", "s3", "tanh_sinh: golden-ratio iB pair (exact difference)", "2G/5",
             "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast, {"G"},
             {"eq:beta'_iB_2pi5"},
             [] {
                 const double s5 = std::sqrt(5.0);
                 auto v = ts([s5](double x) {
                     const double dp = 1.0 + (5.0 + 2.0 * s5) * x * x;
                     const double dm = 1.0 + (5.0 - 2.0 * s5) * x * x;
                     const double t1 = (s5 + 1.0) * x / std::sqrt(dp);
                     const double t2 = (s5 - 1.0) * x / std::sqrt(dm);
                     // t1 - t2 = 4 sqrt5 x^2 (1-x^2) / (dp dm (t1+t2)) exactly.
                     return Kc(x) * 4.0 * s5 * x * x / (dp * dm * (t1 + t2));
                 }, 0, 1, true, false, 1e-11);
                 return Val{v.v / 2.0, v.e};
             },
             [G] { return Val{2.0 * G / 5.0, 1e-15}; });

    b.simple("eq_zeta3_iB", "s3",
             "tanh_sinh: (1/2) int K(sqrt(1-x^2))[pi - 2x K(sqrt(1-x^2))]/(1-x^2) dx",
             "7 zeta3/4", "tanh_sinh", "constants.zeta3", 1e-8, CostClass::fast, {"zeta3"},
             {"eq:zeta3_iB_int"},
             [] {
                 auto v = ts([](double x) {
                     const double kk = Kc(x);
                     return kk * (PI - 2.0 * x * kk) / ((1.0 - x) * (1.0 + x));
                 }, 0, 1, true, true, 1e-11);
                 return Val{v.v / 2.0, v.e};
             },
             [Z3] { return Val{7.0 * Z3 / 4.0, 1e-15}; });

    b.simple("eq_pi_iB", "s3",
             "tanh_sinh: int K(sqrt(1-x^2)) (1 - x acos(x)/sqrt(1-x^2))/(1-x^2) dx", "pi/2",
             "tanh_sinh", "constants.pi", 1e-8, CostClass::fast, {"pi"},
             {"eq:pi_iB_int", "eq:pi_Li2_deriv_iB"},
             [] {
                 auto v = ts([](double x) {
                     const double omx2 = (1.0 - x) * (1.0 + x);
                     return Kc(x) * (1.0 - x * std::acos(x) / std::sqrt(omx2)) / omx2;
                 }, 0, 1, true, true, 1e-11);
                 return v;
             },
             [] { return Val{PI / 2.0, 0.0}; });

    b.grid("eq_beta_iB_deriv", "s3",
           "tanh_sinh: -(sin b/8) int x K(sqrt(1-x^2)) [cos^2(b/2)+x^2 sin^2(b/2)]^{-3/2} dx",
           "(1/4) log tan((pi-b)/4)", "tanh_sinh", "closed_form", 1e-8, CostClass::fast,
           {"logtan"}, {"eq:beta_iB_deriv"}, {0.4, 0.9, 1.6, 2.4},
           [](double beta) {
               const double c2 = std::cos(beta / 2) * std::cos(beta / 2);
               const double s2 = std::sin(beta / 2) * std::sin(beta / 2);
               auto v = ts([c2, s2](double x) {
                   const double d = c2 + x * x * s2;
                   return x * Kc(x) / (d * std::sqrt(d));
               }, 0, 1, true, false, 1e-11);
               return Val{-std::sin(beta) / 8.0 * v.v, v.e};
           },
           [](double beta) { return Val{0.25 * std::log(std::tan((PI - beta) / 4.0)), 0.0}; });

    b.grid("eq_Li2int_iB", "s3", "tanh_sinh: type-iB transform of Li2int (real z, split at kink)",
           "Li2(z) - Li2(-z)", "tanh_sinh", "dilog", 1e-8, CostClass::fast, {"dilog"},
           {"eq:Li2int_iB"}, {0.3, 0.6, 0.9},
           [](double z) {
               const double p = (1.0 + z * z), q = (1.0 - z * z);
               const double x0 = q / p;
               auto f = [p, q, z](double x) {
                   const double Y = p * p * x * x - q * q;
                   double term;
                   if (Y >= 0.0) {
                       const double sy = std::sqrt(Y);
                       term = (sy == 0.0) ? 2.0 * z / p
                                          : 2.0 * z * x / sy * std::atanh(sy / (p * x));
                   } else {
                       const double sy = std::sqrt(-Y);
                       term = 2.0 * z * x / sy * std::atan(sy / (p * x));
                   }
                   return Kc(x) * (2.0 * std::atanh(-z) + term) / ((1.0 - x) * (1.0 + x));
               };
               auto one = ts(f, 0, x0, true, true, 1e-11);
               auto two = ts(f, x0, 1, true, true, 1e-11);
               return Val{-2.0 / PI * (one.v + two.v), one.e + two.e};
           },
           [](double z) {
               return Val{2.0 * specfun::chi2(std::complex<double>(z, 0)).real(), 1e-14};
           });

    b.simple("eq_G_odd_a", "s3", "tanh_sinh: (1/2) int_0^1 K(sqrt(1-x^2))/(1+x) dx",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:G_odd"},
             [] {
                 auto v = ts([](double x) { return Kc(x) / (1.0 + x); }, 0, 1, true, false,
                             1e-12);
                 return Val{v.v / 2.0, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_G_odd_b", "s3",
             "tanh_sinh: (1/pi) int K(sqrt(1-x^2)) [x acos x/sqrt(1-x^2) - log(2x)] dx",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast, {"G"},
             {"eq:G_odd"},
             [] {
                 auto v = ts([](double x) {
                     const double omx2 = (1.0 - x) * (1.0 + x);
                     return Kc(x) *
                            (x * std::acos(x) / std::sqrt(omx2) - std::log(2.0 * x));
                 }, 0, 1, true, true, 1e-11);
                 return Val{v.v / PI, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_a_B_transform", "s3",
             "beltrami_transform: type B on f=1/(1+k), paired against K(sqrt(1-x^2))",
             "pi^2/8", "beltrami_transform", "constants.pi", 1e-9, CostClass::slow, {"pi2_8"},
             {"eq:a_B"},
             [] {
                 auto psi = [](double kappa) {
                     return transforms::beltrami_transform(
                                transforms::BeltramiVariant::B,
                                {[](double k) { return 1.0 / (1.0 + k); }, false, false},
                                kappa, 1e-12)
                         .value;
                 };
                 auto r = quadrature::tanh_sinh_fn(
                     [&psi](double x) { return Kc(x) * psi(x); }, 0, 1, true, false, 1e-9, 7);
                 return Val{r.value, std::max(r.err_est, 1e-9)};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    // Duality: W and M defined by quadrature, against the GB family.
    auto W_quad = [](double r) {
        return ts([r](double xi) { return r * K(xi) / (r * r + xi * xi); }, 0, 1, false, true,
                  1e-12);
    };
    auto M_quad = [](double r) {
        return ts([r](double xi) { return r * xi * K(xi) / (1.0 + r * r * xi * xi); }, 0, 1,
                  false, true, 1e-12);
    };
    auto K_unit = [](double r) { return K(1.0 / std::sqrt(1.0 + r * r)); };

    b.grid("eq_GB_1", "s3", "tanh_sinh: W(r) = int r K(xi)/(r^2+xi^2) dxi",
           "tanh_sinh: int K(sqrt(1-x^2))/(sqrt(1+r^2)+x r) dx", "tanh_sinh",
           "tanh_sinh_dual", 1e-9, CostClass::fast, {"W"}, {"eq:GB_1"}, {0.5, 1.0, 2.0, 5.0},
           W_quad,
           [](double r) {
               const double s = std::sqrt(1.0 + r * r);
               return ts([r, s](double x) { return Kc(x) / (s + x * r); }, 0, 1, true, false,
                         1e-12);
           });

    b.grid("eq_GB_2", "s3", "tanh_sinh: W(r) via arccos/log weight over 1+r^2-x^2",
           "tanh_sinh: W(r) by definition", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"W"}, {"eq:GB_2"}, {0.5, 1.0, 2.0},
           [K_unit](double r) {
               const double s = std::sqrt(1.0 + r * r);
               auto v = ts2([r, s](double x, double, double ur) {
                   const double omx2 = ur * (1.0 + x);
                   return (x * r * acos_c(x, omx2) / std::sqrt(omx2) - s * std::log(x)) *
                          Kc(x) / (r * r + omx2);
               }, 0, 1, 1e-11);
               const double tail = std::log1p(r / s) / s * K_unit(r);
               return Val{2.0 / PI * v.v - tail, v.e};
           },
           W_quad);

    b.grid("eq_GB_3", "s3", "tanh_sinh: W(r) via arcsin/log weight over r^2+x^2",
           "tanh_sinh: W(r) by definition", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"W"}, {"eq:GB_3"}, {0.5, 1.0, 2.0},
           [K_unit](double r) {
               const double s = std::sqrt(1.0 + r * r);
               auto v = ts2([r, s](double x, double, double ur) {
                   const double omx2 = ur * (1.0 + x);
                   return (x * s * asin_c(x, omx2) / std::sqrt(omx2) +
                           r * 0.5 * std::log(omx2)) *
                          Kc(x) / (r * r + x * x);
               }, 0, 1, 1e-11);
               const double tail = std::log1p(r / s) / s * K_unit(r);
               return Val{2.0 / PI * v.v + tail, v.e};
           },
           W_quad);

    b.grid("eq_GB_4", "s3", "tanh_sinh: W(r) via log(sqrt(1-x^2)/x) weight",
           "tanh_sinh: W(r) by definition", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"W"}, {"eq:GB_4"}, {0.5, 1.0, 2.0},
           [K_unit](double r) {
               const double s = std::sqrt(1.0 + r * r);
               auto v = ts([r](double x) {
                   return r * (0.5 * (std::log1p(-x) + std::log1p(x)) - std::log(x)) * Kc(x) /
                          (r * r + x * x);
               }, 0, 1, true, true, 1e-11);
               const double tail = std::log(r / s) / s * K_unit(r);
               return Val{2.0 / PI * v.v + tail, v.e};
           },
           W_quad);

    b.grid("eq_GB_5", "s3", "tanh_sinh: M(r) via -log sqrt(1-x^2) weight",
           "tanh_sinh: M(r) by definition", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"M"}, {"eq:GB_5"}, {0.5, 1.0, 2.0},
           [K_unit](double r) {
               const double s = std::sqrt(1.0 + r * r);
               auto v = ts([r](double x) {
                   return -r * 0.5 * (std::log1p(-x) + std::log1p(x)) * Kc(x) /
                          (r * r + x * x);
               }, 0, 1, true, true, 1e-11);
               const double tail = std::log(s) / s * K_unit(r);
               return Val{2.0 / PI * v.v + tail, v.e};
           },
           M_quad);

    b.grid("eq_GB_6", "s3", "tanh_sinh: M(r) via -arccos weight over 1+r^2-x^2",
           "tanh_sinh: M(r) by definition", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"M"}, {"eq:GB_6"}, {0.5, 1.0, 2.0},
           [K_unit](double r) {
               const double s = std::sqrt(1.0 + r * r);
               auto v = ts2([r](double x, double, double ur) {
                   const double omx2 = ur * (1.0 + x);
                   return -x * r * acos_c(x, omx2) / std::sqrt(omx2) * Kc(x) /
                          (r * r + omx2);
               }, 0, 1, 1e-11);
               const double tail = std::log(r + s) / s * K_unit(r);
               return Val{2.0 / PI * v.v + tail, v.e};
           },
           M_quad);

    b.simple("eq_GB_G_a", "s3",
             "tanh_sinh: (1/pi) int K(sqrt(1-x^2)) [x asin x/sqrt(1-x^2) + log sqrt(4-4x^2)] dx",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:GB_G"},
             [] {
                 auto v = ts2([](double x, double, double ur) {
                     const double omx2 = ur * (1.0 + x);
                     return Kc(x) * (x * asin_c(x, omx2) / std::sqrt(omx2) +
                                     std::log(2.0) + 0.5 * std::log(omx2));
                 }, 0, 1, 1e-12);
                 return Val{v.v / PI, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_GB_G_b", "s3", "tanh_sinh: (1/pi) int K(sqrt(1-x^2)) log(sqrt(1-x^2)/x) dx",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:GB_G"},
             [] {
                 auto v = ts([](double x) {
                     return Kc(x) *
                            (0.5 * (std::log1p(-x) + std::log1p(x)) - std::log(x));
                 }, 0, 1, true, true, 1e-12);
                 return Val{v.v / PI, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.grid("eq_f_eq_W", "s3", "tanh_sinh: W(r) + sqrt(1+r^2)-type integral",
           "tanh_sinh: 4R^3 K(eta)/(R^4-eta^2) integral, R = r+sqrt(1+r^2)", "tanh_sinh",
           "tanh_sinh_dual", 1e-9, CostClass::fast, {"W"}, {"eq:f_eq_W", "eq:f_eq_W'"},
           {0.5, 1.0, 2.0},
           [](double r) {
               const double s = std::sqrt(1.0 + r * r);
               auto one = ts([r](double xi) { return r * K(xi) / (r * r + xi * xi); }, 0, 1,
                             false, true, 1e-12);
               auto two = ts([r, s](double xi) { return s * K(xi) / (1.0 + r * r - xi * xi); },
                             0, 1, false, true, 1e-12);
               return Val{one.v + two.v, one.e + two.e};
           },
           [](double r) {
               const double R = r + std::sqrt(1.0 + r * r);
               const double R2 = R * R;
               return ts([R, R2](double eta) {
                   return 4.0 * R * R2 * K(eta) / (R2 * R2 - eta * eta);
               }, 0, 1, false, true, 1e-12);
           });

    b.grid("eq_log_combo", "s3", "tanh_sinh: difference kernel against K log x",
           "(pi/2) log(r/sqrt(1+r^2)) K(1/sqrt(1+r^2))/sqrt(1+r^2)", "tanh_sinh", "agm", 1e-8,
           CostClass::fast, {"W"}, {"eq:log_combo"}, {0.5, 1.0, 2.0},
           [](double r) {
               const double s = std::sqrt(1.0 + r * r);
               return ts([r, s](double x) {
                   return (r / (r * r + x * x) - s / (1.0 + r * r - x * x)) * Kc(x) *
                          std::log(x);
               }, 0, 1, true, true, 1e-11);
           },
           [K_unit](double r) {
               const double s = std::sqrt(1.0 + r * r);
               return Val{PI / 2.0 * std::log(r / s) / s * K_unit(r), 1e-15};
           });

    b.grid("eq_sum_rule", "s3", "tanh_sinh: W(r) + M(r) by definition",
           "(pi/2)(1+r^2)^{-1/2} K(r/sqrt(1+r^2))", "tanh_sinh", "agm", 1e-10,
           CostClass::fast, {"W", "M"}, {"eq:sum_rule"}, {0.5, 1.0, 2.0},
           [W_quad, M_quad](double r) {
               auto w = W_quad(r);
               auto m = M_quad(r);
               return Val{w.v + m.v, w.e + m.e};
           },
           [](double r) {
               const double s = std::sqrt(1.0 + r * r);
               return Val{PI / 2.0 / s * K(r / s), 1e-15};
           });

    b.grid("eq_sum_rule_mid", "s3", "tanh_sinh: (2/pi) int r log(r/x) K(sqrt(1-x^2))/(r^2+x^2) dx",
           "(pi/2)(1+r^2)^{-1/2} K(r/sqrt(1+r^2))", "tanh_sinh", "agm", 1e-9, CostClass::fast,
           {"W", "M"}, {"eq:sum_rule"}, {0.5, 1.0, 2.0},
           [](double r) {
               auto v = ts([r](double x) {
                   return r * std::log(r / x) * Kc(x) / (r * r + x * x);
               }, 0, 1, true, true, 1e-12);
               return Val{2.0 / PI * v.v, v.e};
           },
           [](double r) {
               const double s = std::sqrt(1.0 + r * r);
               return Val{PI / 2.0 / s * K(r / s), 1e-15};
           });

    b.grid("eq_3artanh", "s3", "tanh_sinh: three-atanh Abel consequence of the sum rule",
           "tanh_sinh: right-hand atanh integral", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"W"}, {"eq:3artanh", "eq:K_tanh_addition"}, {0.5, 1.0, 2.0},
           [](double x) {
               const double s2 = 1.0 + x * x;
               auto one = ts2([x, s2](double u, double, double ur) {
                   const double d2 = 1.0 + x * x * u * u;
                   const double d = std::sqrt(d2);
                   const double om = x * x * ur * (1.0 + u) / s2;
                   return atanh_c(d / std::sqrt(s2), om) * Kc(u) / d;
               }, 0, 1, 1e-11);
               auto two = ts2([x, s2](double u, double, double ur) {
                   const double d2 = x * x + u * u;
                   const double d = std::sqrt(d2);
                   const double om = ur * (1.0 + u) / s2;
                   return atanh_c(d / std::sqrt(s2), om) * Kc(u) / d;
               }, 0, 1, 1e-11);
               return Val{one.v + two.v, one.e + two.e};
           },
           [](double x) {
               return ts([x](double u) {
                   const double d2 = x * x + u * u;
                   const double d = std::sqrt(d2);
                   return atanh_c(x / d, u * u / d2) * Kc(u) / d;
               }, 0, 1, true, false, 1e-11);
           });

    b.grid("eq_2artanh", "s3", "tanh_sinh: two-atanh reciprocal form",
           "tanh_sinh: right-hand atanh integral", "tanh_sinh", "tanh_sinh_dual", 1e-8,
           CostClass::fast, {"W"}, {"eq:2artanh"}, {0.5, 1.0, 2.0},
           [](double x) {
               return ts([x](double u) {
                   const double d2 = 1.0 + x * x * u * u;
                   const double d = std::sqrt(d2);
                   return atanh_c(1.0 / d, x * x * u * u / d2) * Kc(u) / d;
               }, 0, 1, true, false, 1e-11);
           },
           [](double x) {
               return ts([x](double u) {
                   const double d2 = x * x + u * u;
                   const double d = std::sqrt(d2);
                   return atanh_c(x / d, u * u / d2) * Kc(u) / d;
               }, 0, 1, true, false, 1e-11);
           });

    // K(sqrt(l)) K(sqrt(1-l)) by four independent integral routes.
    auto kkprod = [](double l) {
        return Val{specfun::ellip_k(std::sqrt(l)) * specfun::ellip_k_comp(std::sqrt(l)),
                   1e-15};
    };
    b.grid("eq_KK_various_r1", "s3", "tanh_sinh: int over ((1-l)/(1+l),1) with double sqrt",
           "AGM: K(sqrt l) K(sqrt(1-l))", "tanh_sinh", "agm", 1e-8, CostClass::fast, {"KK"},
           {"eq:KK'_various"}, {0.2, 0.5, 0.8},
           [](double l) {
               const double lo = (1.0 - l) / (1.0 + l);
               const double p = (1.0 + l) * (1.0 + l);
               return ts2([p, lo](double k, double ul, double ur) {
                   return K_ur(k, ur) / (std::sqrt(ur * (1.0 + k)) *
                                         std::sqrt(p * ul * (k + lo)));
               }, lo, 1, 1e-11);
           },
           kkprod);
    b.grid("eq_KK_various_r2", "s3", "tanh_sinh: sum of two rational-sqrt K integrals",
           "AGM: K(sqrt l) K(sqrt(1-l))", "tanh_sinh", "agm", 1e-8, CostClass::fast, {"KK"},
           {"eq:KK'_various"}, {0.2, 0.5, 0.8},
           [](double l) {
               const double q = (1.0 - l) * (1.0 - l);
               auto one = ts([l, q](double k) {
                   return K(k) / std::sqrt(4.0 * l + q * k * k);
               }, 0, 1, false, true, 1e-11);
               auto two = ts([l, q](double k) {
                   return K(k) / std::sqrt(q + 4.0 * l * k * k);
               }, 0, 1, false, true, 1e-11);
               return Val{one.v + two.v, one.e + two.e};
           },
           kkprod);
    b.grid("eq_KK_various_r3", "s3", "tanh_sinh: (2/pi) atanh route (modulus form)",
           "AGM: K(sqrt l) K(sqrt(1-l))", "tanh_sinh", "agm", 1e-8, CostClass::fast, {"KK"},
           {"eq:KK'_various"}, {0.2, 0.5, 0.8},
           [](double l) {
               const double q = (1.0 - l) * (1.0 - l), sl = 2.0 * std::sqrt(l);
               auto v = ts([q, sl](double x) {
                   const double d2 = sl * sl + q * x * x;
                   const double d = std::sqrt(d2);
                   return atanh_c(sl / d, q * x * x / d2) * Kc(x) / d;
               }, 0, 1, true, false, 1e-11);
               return Val{2.0 / PI * v.v, v.e};
           },
           kkprod);
    b.grid("eq_KK_various_r4", "s3", "tanh_sinh: (2/pi) atanh route (complement form)",
           "AGM: K(sqrt l) K(sqrt(1-l))", "tanh_sinh", "agm", 1e-8, CostClass::fast, {"KK"},
           {"eq:KK'_various"}, {0.2, 0.5, 0.8},
           [](double l) {
               const double q = 1.0 - l;
               auto v = ts([l, q](double x) {
                   const double d2 = q * q + 4.0 * l * x * x;
                   const double d = std::sqrt(d2);
                   return atanh_c(q / d, 4.0 * l * x * x / d2) * Kc(x) / d;
               }, 0, 1, true, false, 1e-11);
               return Val{2.0 / PI * v.v, v.e};
           },
           kkprod);
}

} // namespace ellint::catalog::detail

#endif
