#ifndef ELLINT_DETAIL_REGISTRY_S1_HPP
#define ELLINT_DETAIL_REGISTRY_S1_HPP

#include "ellint/detail/registry_util.hpp"

// Section 1: couplings on S^2 x S^2, their 1D reductions, the azimuthal
// family, and the Tricomi pairing chain.

namespace ellint::catalog::detail {

inline void register_s1(std::vector<IdentityRecord>& out) {
    RecordBuilder b{out};
    const double G = constants::catalan();
    const double Z3 = constants::apery();

    b.simple("eq_a", "s1", "tanh_sinh: int_0^1 K(k)/(1+k) dk", "pi^2/8", "tanh_sinh",
             "constants.pi", 1e-10, CostClass::fast, {"pi2_8"}, {"eq:a"},
             [] { return ts([](double k) { return K(k) / (1.0 + k); }, 0, 1, false, true, 1e-12); },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_a_star", "s1", "tanh_sinh: int_0^1 log t/(t^2-1) dt", "pi^2/8", "tanh_sinh",
             "constants.pi", 1e-10, CostClass::fast, {"pi2_8"}, {"eq:a_star"},
             [] {
                 return ts([](double t) { return std::log(t) / (t * t - 1.0); }, 0, 1, true, true,
                           1e-12);
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_a_star_logsin", "s1", "tanh_sinh: -int_0^{pi/2} log(sin t)/cos t dt", "pi^2/8",
             "tanh_sinh", "constants.pi", 1e-10, CostClass::fast, {"pi2_8"}, {"eq:a_star"},
             [] {
                 return ts([](double t) { return -std::log(std::sin(t)) / std::cos(t); }, 0,
                           PI / 2, true, true, 1e-12);
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_b", "s1", "tanh_sinh: (1/pi) int_0^1 K(k) log(1/k)/(1-k) dk", "G (Bradley)",
             "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"}, {"eq:b"},
             [] {
                 auto v = ts([](double k) {
                     return K(k) * (-std::log1p(k - 1.0)) / (1.0 - k);
                 }, 0, 1, true, true, 1e-12);
                 v.v /= PI;
                 v.e /= PI;
                 return v;
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_b_landen", "s1",
             "tanh_sinh: (1/2pi) int_0^1 K'(xi) 2 atanh(xi)/xi dxi", "G (Bradley)", "tanh_sinh",
             "constants.catalan", 1e-9, CostClass::fast, {"G"}, {"eq:b"},
             [] {
                 auto v = ts([](double x) { return Kc(x) * 2.0 * std::atanh(x) / x; }, 0, 1, true,
                             true, 1e-12);
                 v.v /= 2.0 * PI;
                 v.e /= 2.0 * PI;
                 return v;
             },
             [G] { return Val{G, 1e-15}; });

    b.grid("eq_beta", "s1", "tanh_sinh: (pi/8) int_0^1 dq/(sqrt(1-q) sqrt(q+tan^2(b/2)))",
           "pi(pi-b)/8", "tanh_sinh", "closed_form", 1e-9, CostClass::fast, {"pi2_8"},
           {"eq:beta"}, {0.0, PI / 6, PI / 3, 2 * PI / 3, 5 * PI / 6},
           [](double beta) {
               const double t2 = std::tan(beta / 2) * std::tan(beta / 2);
               auto v = ts2([t2](double, double ul, double ur) {
                   return 1.0 / (std::sqrt(ur) * std::sqrt(ul + t2));
               }, 0, 1, 1e-12);
               v.v *= PI / 8.0;
               v.e *= PI / 8.0;
               return v;
           },
           [](double beta) { return Val{PI * (PI - beta) / 8.0, 0.0}; });

    // L(beta) by three independent 1D reductions against G + the
    // log-tan integral.
    b.grid("eq_beta_prime_K", "s1",
           "tanh_sinh: cos(b/2)/2 int_0^1 K(sqrt(k^2 cos^2(b/2)+sin^2(b/2))) dk",
           "G + (1/4) int_0^b log tan((pi-a)/4) da", "tanh_sinh", "constants.catalan+adaptive",
           1e-9, CostClass::fast, {"G"}, {"eq:beta'"}, {0.0, PI / 4, PI / 3, 2 * PI / 3, 2.7},
           [](double beta) {
               const double c = std::cos(beta / 2);
               auto v = ts([c](double k) {
                   return specfun::ellip_k_comp(c * std::sqrt((1.0 - k) * (1.0 + k)));
               }, 0, 1, false, true, 1e-12);
               v.v *= c / 2.0;
               v.e *= c / 2.0;
               return v;
           },
           [](double beta) { return Val{L_beta(beta), 1e-13}; });

    b.grid("eq_beta_prime_logt", "s1",
           "tanh_sinh: -cos(b/2) int_0^1 (1+t^2) log t/(1+2t^2 cos b+t^4) dt",
           "G + (1/4) int_0^b log tan((pi-a)/4) da", "tanh_sinh", "constants.catalan+adaptive",
           1e-9, CostClass::fast, {"G"}, {"eq:beta'"}, {0.0, PI / 4, PI / 3, 2 * PI / 3, 2.7},
           [](double beta) {
               const double cb = std::cos(beta);
               auto v = ts([cb](double t) {
                   const double t2 = t * t;
                   return (1.0 + t2) * std::log(t) / (1.0 + 2.0 * t2 * cb + t2 * t2);
               }, 0, 1, true, false, 1e-12);
               const double c = std::cos(beta / 2);
               return Val{-c * v.v, c * v.e};
           },
           [](double beta) { return Val{L_beta(beta), 1e-13}; });

    b.grid("eq_beta_prime_theta", "s1",
           "adaptive: cos(b/2)/2 int_0^{pi/2} t dt/(sin t sqrt(1-cos^2 t sin^2(b/2)))",
           "G + (1/4) int_0^b log tan((pi-a)/4) da", "adaptive", "constants.catalan+adaptive",
           1e-9, CostClass::fast, {"G"}, {"eq:G_elem"}, {0.0, PI / 4, PI / 3, 2 * PI / 3, 2.7},
           [](double beta) {
               const double s2 = std::sin(beta / 2) * std::sin(beta / 2);
               auto v = ad([s2](double t) {
                   const double c = std::cos(t);
                   return t / (std::sin(t) * std::sqrt(1.0 - c * c * s2));
               }, 1e-12, PI / 2, 1e-12);
               const double c = std::cos(beta / 2);
               return Val{c / 2.0 * v.v, v.e};
           },
           [](double beta) { return Val{L_beta(beta), 1e-13}; });

    b.simple("eq_L0", "s1", "tanh_sinh: (1/2) int_0^1 K(k) dk", "G (Bradley)", "tanh_sinh",
             "constants.catalan", 1e-9, CostClass::fast, {"G"}, {"eq:beta'"},
             [] {
                 auto v = ts([](double k) { return K(k); }, 0, 1, false, true, 1e-12);
                 return Val{v.v / 2.0, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_L_2pi3", "s1", "tanh_sinh: (3/8) int_0^1 K(sqrt(k^2+3)/2) dk", "G (Bradley)",
             "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:beta'", "eq:L_2pi3"},
             [] {
                 auto v = ts([](double k) {
                     return specfun::ellip_k_comp(0.5 * std::sqrt((1.0 - k) * (1.0 + k)));
                 }, 0, 1, false, true, 1e-12);
                 return Val{3.0 / 8.0 * v.v, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_L_2pi5", "s1", "tanh_sinh: golden-ratio pair of K integrals", "G (Bradley)",
             "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:beta'", "eq:L_2pi5"},
             [] {
                 const double s5 = std::sqrt(5.0);
                 auto one = ts([s5](double k) {
                     return specfun::ellip_k_comp((s5 + 1.0) / 4.0 *
                                                  std::sqrt((1.0 - k) * (1.0 + k)));
                 }, 0, 1, false, true, 1e-12);
                 auto two = ts([s5](double k) {
                     return specfun::ellip_k_comp((s5 - 1.0) / 4.0 *
                                                  std::sqrt((1.0 - k) * (1.0 + k)));
                 }, 0, 1, false, false, 1e-12);
                 return Val{5.0 / 16.0 * ((s5 + 1.0) * one.v - (s5 - 1.0) * two.v),
                            one.e + two.e};
             },
             [G] { return Val{G, 1e-15}; });

    // K(sqrt(k^2 cos^2 phi + sin^2 phi)) as a single quadrature (grid
    // indexes fixed (k, phi) pairs).
    b.grid("eq_K_Pyth", "s1", "AGM K of combined modulus",
           "tanh_sinh: int_0^{pi/2} dt/(sqrt(1-k^2 cos^2 t) sqrt(1-sin^2 t sin^2 phi))", "agm",
           "tanh_sinh", 1e-10, CostClass::fast, {"K"}, {"eq:K_Pyth"}, {0, 1, 2, 3, 4},
           [](double p) {
               static const double ks[5] = {0.3, 0.7, 0.9, 0.5, 0.2};
               static const double ph[5] = {0.4, 0.2, 1.2, 0.9, 1.4};
               const int i = static_cast<int>(p);
               const double k = ks[i], phi = ph[i];
               return Val{specfun::ellip_k_comp(std::cos(phi) *
                                                std::sqrt((1.0 - k) * (1.0 + k))),
                          1e-15};
           },
           [](double p) {
               static const double ks[5] = {0.3, 0.7, 0.9, 0.5, 0.2};
               static const double ph[5] = {0.4, 0.2, 1.2, 0.9, 1.4};
               const int i = static_cast<int>(p);
               const double k = ks[i], s2 = std::sin(ph[i]) * std::sin(ph[i]);
               return ts([k, s2](double t) {
                   const double c = std::cos(t), s = std::sin(t);
                   return 1.0 / (std::sqrt(1.0 - k * k * c * c) * std::sqrt(1.0 - s * s * s2));
               }, 0, PI / 2, false, true, 1e-12);
           });

    b.simple("eq_unity_int", "s1", "tanh_sinh: int_0^1 K(k) k dk", "1", "tanh_sinh",
             "closed_form", 1e-10, CostClass::fast, {"unity"}, {"eq:unity_int"},
             [] { return ts([](double k) { return K(k) * k; }, 0, 1, false, true, 1e-12); },
             [] { return Val{1.0, 0.0}; });

    b.simple("eq_unity_int_elem", "s1",
             "tanh_sinh: (1/pi) int_0^pi sin(a/2) log cot((pi-a)/4) da", "1", "tanh_sinh",
             "closed_form", 1e-10, CostClass::fast, {"unity"}, {"eq:unity_int"},
             [] {
                 auto v = ts([](double a) {
                     return std::sin(a / 2) * std::log(1.0 / std::tan((PI - a) / 4.0));
                 }, 0, PI, false, true, 1e-12);
                 return Val{v.v / PI, v.e};
             },
             [] { return Val{1.0, 0.0}; });

    b.simple("eq_G_elem", "s1", "adaptive: (1/2) int_0^{pi/2} t/sin t dt", "G (Bradley)",
             "adaptive", "constants.catalan", 1e-10, CostClass::fast, {"G"}, {"eq:G_elem'"},
             [] {
                 auto v = ad([](double t) { return t / std::sin(t); }, 1e-300, PI / 2, 1e-13);
                 return Val{v.v / 2.0, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_pipibeta_int", "s1", "tanh_sinh: (1/4) int_0^1 2 atanh(sqrt q)/q dq", "pi^2/8",
             "tanh_sinh", "constants.pi", 1e-9, CostClass::fast, {"pi2_8"},
             {"eq:pipibeta_int"},
             [] {
                 auto v = ts([](double q) { return 2.0 * std::atanh(std::sqrt(q)) / q; }, 0, 1,
                             true, true, 1e-12);
                 return Val{v.v / 4.0, v.e};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_pipibeta_cq", "s1", "pfq: (sqrt2 pi/3) 3F2(1/2,1/2,1; 5/4,7/4; 1)",
             "(2-sqrt2) pi", "pfq", "closed_form", 1e-5, CostClass::fast, {"pi"},
             {"eq:pipibeta_int_cos_quarter_beta"},
             [] {
                 auto r = specfun::pfq({{0.5, 0.5, 1.0}, {1.25, 1.75}, {1.0, 0.0}}, 300000, 1e-16);
                 return Val{std::sqrt(2.0) * PI / 3.0 * r.value.real(),
                            std::sqrt(2.0) * PI / 3.0 * r.tail_bound};
             },
             [] { return Val{(2.0 - std::sqrt(2.0)) * PI, 0.0}; });

    b.simple("eq_pipibeta_ch", "s1",
             "tanh_sinh: (pi/4) int_0^1 [K(sqrt u)-E(sqrt u)] u^{-3/2} du", "pi/2", "tanh_sinh",
             "constants.pi", 1e-9, CostClass::fast, {"pi"},
             {"eq:pipibeta_int_cos_half_beta"},
             [] {
                 auto v = ts([](double u) {
                     return specfun::ellip_ke(specfun::modulus_sqrt(u)).k_minus_e() /
                            (u * std::sqrt(u));
                 }, 0, 1, true, true, 1e-12);
                 return Val{PI / 4.0 * v.v, v.e};
             },
             [] { return Val{PI / 2.0, 0.0}; });

    b.simple("eq_L_beta_int_t", "s1", "tanh_sinh: int_0^1 -2 atanh(t) log t / t dt", "7 zeta3/4",
             "tanh_sinh", "constants.zeta3", 1e-9, CostClass::fast, {"zeta3"},
             {"eq:L_beta_int"},
             [] {
                 return ts([](double t) { return -2.0 * std::atanh(t) * std::log(t) / t; }, 0, 1,
                           true, true, 1e-12);
             },
             [Z3] { return Val{7.0 * Z3 / 4.0, 1e-15}; });

    b.simple("eq_L_beta_int_theta", "s1",
             "adaptive: int_0^{pi/2} (t/sin t)((pi/2-t)/cos t) dt", "7 zeta3/4", "adaptive",
             "constants.zeta3", 1e-9, CostClass::fast, {"zeta3"}, {"eq:L_beta_int"},
             [] {
                 return ad([](double t) {
                     return t / std::sin(t) * (PI / 2 - t) / std::cos(t);
                 }, 1e-300, PI / 2 - 1e-14, 1e-12);
             },
             [Z3] { return Val{7.0 * Z3 / 4.0, 1e-15}; });

    // beta'** carries a manifestly complex integrand; the real part is
    // the identity, the imaginary residual is recorded via eq_..._im.
    b.simple("eq_L_beta_cq_re", "s1",
             "tanh_sinh: Re e^{i pi/4} int_0^1 [(t+i) atan - (t-i) atanh] log t/(2 t^{3/2}) dt",
             "2 sqrt2 log 2", "tanh_sinh", "closed_form", 1e-6, CostClass::fast, {"log2"},
             {"eq:L_beta_int_cos_quarter_beta"},
             [] {
                 using C = std::complex<double>;
                 const C I(0, 1), rot = std::polar(1.0, PI / 4.0);
                 auto re = ts([I, rot](double t) {
                     const double st = std::sqrt(t);
                     const C w = (t + I) * std::atan((1.0 + I) * st / (t - I)) -
                                 (t - I) * std::atanh((1.0 + I) * st / (t + I));
                     return (rot * w).real() * std::log(t) / (2.0 * t * st);
                 }, 0, 1, true, false, 1e-10);
                 return re;
             },
             [] { return Val{2.0 * std::sqrt(2.0) * std::log(2.0), 0.0}; });

    b.simple("eq_L_beta_cq_im", "s1", "imaginary residual of the eq_L_beta_cq integrand", "0",
             "tanh_sinh", "closed_form", 1e-6, CostClass::fast, {"log2"},
             {"eq:L_beta_int_cos_quarter_beta"},
             [] {
                 using C = std::complex<double>;
                 const C I(0, 1), rot = std::polar(1.0, PI / 4.0);
                 return ts([I, rot](double t) {
                     const double st = std::sqrt(t);
                     const C w = (t + I) * std::atan((1.0 + I) * st / (t - I)) -
                                 (t - I) * std::atanh((1.0 + I) * st / (t + I));
                     return (rot * w).imag() * std::log(t) / (2.0 * t * st);
                 }, 0, 1, true, false, 1e-10);
             },
             [] { return Val{0.0, 0.0}; });

    b.simple("eq_L_beta_ch", "s1",
             "tanh_sinh: int_0^{pi/2} [E(cos t)/sin t - sin t K(cos t)] t/cos^2 t dt", "pi/2",
             "tanh_sinh", "constants.pi", 1e-9, CostClass::fast, {"pi"},
             {"eq:L_beta_int_cos_half_beta"},
             [] {
                 return ts2([](double t, double ul, double ur) {
                     const double s = std::sin(t);
                     const auto m = (ur < ul) ? specfun::Modulus::from_k(std::sin(ur))
                                              : specfun::Modulus::from_complement(std::sin(ul));
                     const auto ke = specfun::ellip_ke(m);
                     const double c2 = m.k * m.k;
                     // E/s - s K = K (cos^2 t - S)/(s cos^2 t)
                     return ke.K * (c2 - ke.S) * t / (s * c2);
                 }, 0, PI / 2, 1e-12);
             },
             [] { return Val{PI / 2.0, 0.0}; });

    b.simple("eq_b_star", "s1", "quadrature combination: KK terms plus Landen-form G integral",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast, {"G"},
             {"eq:b_star"},
             [] {
                 auto t1 = ts2([](double k, double, double ur) {
                     const double kk = K_ur(k, ur);
                     return kk * kk / std::sqrt(ur * (1.0 + k));
                 }, 0, 1, 1e-11);
                 auto t2 = ts([](double k) { return K(k) * Kc(k); }, 0, 1, true, true, 1e-11);
                 auto t3 = ts([](double x) { return Kc(x) * 2.0 * std::atanh(x) / x; }, 0, 1,
                              true, true, 1e-11);
                 return Val{(t1.v - 2.0 * t2.v + t3.v) / (2.0 * PI), t1.e + t2.e + t3.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_KKKK", "s1", "tanh_sinh: int_0^1 K^2/sqrt(1-k^2) dk",
             "tanh_sinh: 2 int_0^1 K(k) K(sqrt(1-k^2)) dk", "tanh_sinh", "tanh_sinh_dual",
             1e-8, CostClass::fast, {"KK"}, {"eq:KKKK"},
             [] {
                 return ts2([](double k, double, double ur) {
                     const double kk = K_ur(k, ur);
                     return kk * kk / std::sqrt(ur * (1.0 + k));
                 }, 0, 1, 1e-11);
             },
             [] {
                 auto v = ts([](double k) { return K(k) * Kc(k); }, 0, 1, true, true, 1e-11);
                 return Val{2.0 * v.v, 2.0 * v.e};
             });

    b.simple("eq_KKKK_4F3", "s1", "tanh_sinh: int_0^1 K^2/sqrt(1-k^2) dk",
             "pfq: (pi^3/4) 4F3(1/2*4; 1,1,1; 1)", "tanh_sinh", "pfq", 1e-6, CostClass::fast,
             {"KK"}, {"eq:KKKK"},
             [] {
                 return ts2([](double k, double, double ur) {
                     const double kk = K_ur(k, ur);
                     return kk * kk / std::sqrt(ur * (1.0 + k));
                 }, 0, 1, 1e-11);
             },
             [] {
                 auto r = specfun::pfq({{0.5, 0.5, 0.5, 0.5}, {1.0, 1.0, 1.0}, {1.0, 0.0}},
                                       300000, 1e-16);
                 const double s = PI * PI * PI / 4.0;
                 return Val{s * r.value.real(), s * r.tail_bound};
             });

    b.simple("eq_K_sqr_minus_pi4", "s1", "tanh_sinh: int_0^1 (K^2 - pi^2/4)/k dk",
             "pi^2/2 log 2 - 7 zeta3/4", "tanh_sinh", "constants.zeta3", 1e-8, CostClass::fast,
             {"zeta3"}, {"eq:K_sqr_minus_pi4"},
             [] {
                 return ts([](double k) {
                     const double kk = K(k);
                     return (kk * kk - PI * PI / 4.0) / k;
                 }, 0, 1, true, true, 1e-11);
             },
             [Z3] { return Val{PI * PI / 2.0 * std::log(2.0) - 7.0 * Z3 / 4.0, 1e-15}; });

    b.simple("eq_K_sqr_log", "s1",
             "tanh_sinh: int_0^1 K^2 log(k/sqrt(1-k^2))/sqrt(1-k^2) dk",
             "tanh_sinh: (pi/2) int_0^1 K^2 k/sqrt(1-k^2) dk", "tanh_sinh", "tanh_sinh_dual",
             1e-7, CostClass::fast, {"KK"}, {"eq:K_sqr_log"},
             [] {
                 return ts2([](double k, double, double ur) {
                     const double omk2 = ur * (1.0 + k);
                     const double kk = K_ur(k, ur);
                     return kk * kk * 0.5 * std::log(k * k / omk2) / std::sqrt(omk2);
                 }, 0, 1, 1e-10);
             },
             [] {
                 auto v = ts2([](double k, double, double ur) {
                     const double kk = K_ur(k, ur);
                     return kk * kk * k / std::sqrt(ur * (1.0 + k));
                 }, 0, 1, 1e-10);
                 return Val{PI / 2.0 * v.v, v.e};
             });

    b.simple("eq_K_sqr_log_7F6", "s1", "tanh_sinh: int_0^1 [K(sqrt(1-x^2))]^2 dx",
             "pfq: (pi^4/16) 7F6(1/2*6,5/4; 1/4,1*5; 1)", "tanh_sinh", "pfq", 1e-6,
             CostClass::fast, {"KK"}, {"eq:K_sqr_log", "eq:7F6_KK"},
             [] { return ts([](double x) { return Kc(x) * Kc(x); }, 0, 1, true, false, 1e-10); },
             [] {
                 auto r = specfun::pfq({{0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 1.25},
                                        {0.25, 1.0, 1.0, 1.0, 1.0, 1.0},
                                        {1.0, 0.0}},
                                       300000, 1e-16);
                 const double s = std::pow(PI, 4.0) / 16.0;
                 return Val{s * r.value.real(), s * r.tail_bound};
             });

    b.simple("eq_low_deg", "s1", "tanh_sinh: int_0^1 (K - pi/2)/k dk", "-2G + pi log 2",
             "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"}, {"eq:low_deg"},
             [] {
                 return ts([](double k) { return (K(k) - PI / 2.0) / k; }, 0, 1, true, true,
                           1e-12);
             },
             [G] { return Val{-2.0 * G + PI * std::log(2.0), 1e-15}; });

    b.simple("eq_KE_pi_G_zeta3", "s1", "tanh_sinh: int_0^1 (K/k)(1 - 2E/pi) dk",
             "pi/4 - 2G + 7 zeta3/(2 pi)", "tanh_sinh", "constants.catalan", 1e-8,
             CostClass::fast, {"G", "zeta3"}, {"eq:KE_pi_G_zeta3"},
             [] {
                 return ts([](double k) {
                     const auto ke = specfun::ellip_ke(specfun::Modulus::from_k(k));
                     return ke.K / k * (1.0 - 2.0 * ke.E / PI);
                 }, 0, 1, true, true, 1e-11);
             },
             [G, Z3] { return Val{PI / 4.0 - 2.0 * G + 7.0 * Z3 / (2.0 * PI), 1e-15}; });

    b.simple("eq_KEK_pi8", "s1", "tanh_sinh: int_0^1 (K/k)(E - K) dk", "-pi^2/8", "tanh_sinh",
             "constants.pi", 1e-9, CostClass::fast, {"pi2_8"}, {"eq:KEK_pi8"},
             [] {
                 return ts([](double k) {
                     const auto ke = specfun::ellip_ke(specfun::Modulus::from_k(k));
                     return -ke.K * ke.k_minus_e() / k;
                 }, 0, 1, true, true, 1e-12);
             },
             [] { return Val{-PI * PI / 8.0, 0.0}; });

    // Tricomi pairing chain: five expressions, compared pairwise.
    auto chain_a = [] {
        auto t1 = ts([](double x) { return Kc(x) * Kc(x); }, 0, 1, true, false, 1e-11);
        auto t2 = ts([](double k) { return K(k) * K(k); }, 0, 1, false, true, 1e-11);
        return Val{t1.v - t2.v, t1.e + t2.e};
    };
    auto chain_b = [] {
        auto v = ts([](double x) { return K(x) * Kc(x) * 2.0 * std::atanh(x); }, 0, 1, true,
                    true, 1e-11);
        return Val{2.0 / PI * v.v, v.e};
    };
    b.simple("eq_K_sqr_log_chain_ab", "s1", "difference of squared-K integrals",
             "(2/pi) int K K' 2atanh(xi) dxi", "tanh_sinh", "tanh_sinh_dual", 1e-7,
             CostClass::fast, {"KK"}, {"eq:K_sqr_log_chain"}, chain_a, chain_b);
    b.simple("eq_K_sqr_log_chain_bc", "s1", "(2/pi) int K K' 2atanh(xi) dxi",
             "(2/pi) int K K' log(1/k) dk", "tanh_sinh", "tanh_sinh_dual", 1e-7,
             CostClass::fast, {"KK"}, {"eq:K_sqr_log_chain"}, chain_b,
             [] {
                 auto v = ts([](double k) { return K(k) * Kc(k) * std::log(1.0 / k); }, 0, 1,
                             true, true, 1e-11);
                 return Val{2.0 / PI * v.v, v.e};
             });
    b.simple("eq_K_sqr_log_chain_ad", "s1", "difference of squared-K integrals",
             "(1/pi) int (K^2 - K'^2) log k /sqrt(1-k^2) dk", "tanh_sinh", "tanh_sinh_dual",
             1e-7, CostClass::fast, {"KK"}, {"eq:K_sqr_log_chain", "eq:K_sqr_star"}, chain_a,
             [] {
                 auto v = ts2([](double k, double, double ur) {
                     const double a = K_ur(k, ur), c = Kc(k);
                     return (a * a - c * c) * std::log(k) / std::sqrt(ur * (1.0 + k));
                 }, 0, 1, 1e-11);
                 return Val{v.v / PI, v.e};
             });
    b.simple("eq_K_sqr_log_chain_ae", "s1", "difference of squared-K integrals",
             "(1/pi) int K K' 2 asin(k)/sqrt(1-k^2) dk", "tanh_sinh", "tanh_sinh_dual", 1e-7,
             CostClass::fast, {"KK"}, {"eq:K_sqr_log_chain", "eq:TP3"}, chain_a,
             [] {
                 auto v = ts2([](double k, double, double ur) {
                     const double omk2 = ur * (1.0 + k);
                     return K_ur(k, ur) * Kc(k) * 2.0 * asin_c(k, omk2) / std::sqrt(omk2);
                 }, 0, 1, 1e-11);
                 return Val{v.v / PI, v.e};
             });

    b.grid("eq_K_sqr_star", "s1", "AGM: [K(sqrt t)]^2",
           "tanh_sinh: (2/pi) int_0^1 K(sqrt u) K(sqrt(1-u))/(1-u t) du", "agm", "tanh_sinh",
           1e-8, CostClass::fast, {"KK"}, {"eq:K_sqr_star"}, {0.1, 0.3, 0.5, 0.7, 0.9},
           [](double t) {
               const double kk = Ksqrt(t);
               return Val{kk * kk, 1e-15};
           },
           [](double t) {
               auto v = ts([t](double u) {
                   return Ksqrt(u) * specfun::ellip_k_comp(std::sqrt(u)) / (1.0 - u * t);
               }, 0, 1, true, true, 1e-11);
               return Val{2.0 / PI * v.v, v.e};
           });

    b.grid("eq_BT", "s1", "principal_value: PV int K(sqrt(1-x^2))/(pi(k-x)) dx", "AGM: K(k)",
           "principal_value", "agm", 1e-6, CostClass::fast, {"K"}, {"eq:BT", "eq:BT0"},
           {0.2, 0.5, 0.8},
           [](double k) {
               auto r = transforms::tricomi_pv(
                   [](double xi) { return Kc(std::fabs(xi)); }, k, 1e-9);
               return Val{r.value, r.err_est};
           },
           [](double k) { return Val{K(k), 1e-15}; });

    b.simple("eq_tricomi_parseval", "s1",
             "nested PV: <f, Tg> + <g, Tf> for f=sqrt(1-x^2), g=x sqrt(1-x^2)", "0",
             "principal_value", "closed_form", 1e-8, CostClass::slow, {"tricomi"},
             {"eq:Tricomi_Parseval1"},
             [] {
                 auto f = [](double x) { return std::sqrt((1.0 - x) * (1.0 + x)); };
                 auto g = [](double x) { return x * std::sqrt((1.0 - x) * (1.0 + x)); };
                 auto tf = [&](double x) { return transforms::tricomi_pv(f, x, 1e-10).value; };
                 auto tg = [&](double x) { return transforms::tricomi_pv(g, x, 1e-10).value; };
                 auto one = ad([&](double x) { return f(x) * tg(x); }, -1, 1, 1e-9);
                 auto two = ad([&](double x) { return g(x) * tf(x); }, -1, 1, 1e-9);
                 return Val{one.v + two.v, one.e + two.e};
             },
             [] { return Val{0.0, 0.0}; });

    b.grid("eq_TP3_arccos", "s1",
           "principal_value: sqrt(1-x^2) T[log((1+xi)/2)/sqrt(1-xi^2)](x)", "-arccos x",
           "principal_value", "closed_form", 1e-6, CostClass::fast, {"tricomi"}, {"eq:TP3"},
           {-0.5, 0.2, 0.6},
           [](double x) {
               auto r = transforms::tricomi_pv(
                   [](double xi) {
                       return std::log((1.0 + xi) / 2.0) / std::sqrt((1.0 - xi) * (1.0 + xi));
                   }, x, 1e-9);
               return Val{std::sqrt((1.0 - x) * (1.0 + x)) * r.value, r.err_est};
           },
           [](double x) { return Val{-std::acos(x), 0.0}; });

    // 2D simplex reductions of the decoupled sphere couplings.
    auto simplex = [](auto weight, auto kfun, double scale) {
        auto r = quadrature::cubature_nd(
            [weight, kfun](double x, double y, double) {
                const double t1 = PI * x;
                const double t2 = (PI - t1) * y;
                return kfun(t1) * kfun(t2) * weight(t1, t2) * PI * (PI - t1);
            },
            2, 1e-8);
        return Val{scale * r.value, r.err_est};
    };
    auto k_half = [](double t) {
        return specfun::ellip_k(specfun::Modulus::from_complement(std::cos(t / 2)));
    };
    auto k_quarter = [](double t) {
        const double s = std::sin(t / 2);
        // s rounding onto 1 puts the modulus on the K(1) pole; the face
        // is integrable, so hand cubature an inf to zero out.
        if (s >= 1.0) return std::numeric_limits<double>::infinity();
        return specfun::ellip_k(
                   specfun::Modulus::from_complement(std::sqrt((1.0 - s) / (1.0 + s)))) /
               std::sqrt(1.0 + s);
    };
    b.simple("eq_pipibeta_simplex", "s1",
             "cubature_2d: simplex int K K cos((t1-t2)/2)/(2 pi)", "pi^3/16", "cubature_nd",
             "constants.pi", 1e-6, CostClass::slow, {"pi"}, {"eq:pipibeta_int'"},
             [simplex, k_half] {
                 return simplex(
                     [](double t1, double t2) { return std::cos((t1 - t2) / 2); }, k_half,
                     1.0 / (2.0 * PI));
             },
             [] { return Val{std::pow(PI, 3.0) / 16.0, 0.0}; });
    b.simple("eq_L_beta_simplex", "s1", "cubature_2d: simplex int K K sin((t1+t2)/2)/(2 pi)",
             "7 zeta3/4", "cubature_nd", "constants.zeta3", 1e-6, CostClass::slow, {"zeta3"},
             {"eq:L_beta_int'"},
             [simplex, k_half] {
                 return simplex(
                     [](double t1, double t2) { return std::sin((t1 + t2) / 2); }, k_half,
                     1.0 / (2.0 * PI));
             },
             [Z3] { return Val{7.0 * Z3 / 4.0, 1e-15}; });
    b.simple("eq_pipibeta_cq_simplex", "s1",
             "cubature_2d: simplex quarter-modulus K K cos((t1-t2)/2)/(2 pi)", "(2-sqrt2) pi",
             "cubature_nd", "closed_form", 1e-6, CostClass::slow, {"pi"},
             {"eq:pipibeta_int_cos_quarter_beta'"},
             [simplex, k_quarter] {
                 return simplex(
                     [](double t1, double t2) { return std::cos((t1 - t2) / 2); }, k_quarter,
                     1.0 / (2.0 * PI));
             },
             [] { return Val{(2.0 - std::sqrt(2.0)) * PI, 0.0}; });
    b.simple("eq_L_beta_cq_simplex", "s1",
             "cubature_2d: simplex quarter-modulus K K sin((t1+t2)/2)/(2 pi)", "2 sqrt2 log 2",
             "cubature_nd", "closed_form", 1e-6, CostClass::slow, {"log2"},
             {"eq:L_beta_int_cos_quarter_beta'"},
             [simplex, k_quarter] {
                 return simplex(
                     [](double t1, double t2) { return std::sin((t1 + t2) / 2); }, k_quarter,
                     1.0 / (2.0 * PI));
             },
             [] { return Val{2.0 * std::sqrt(2.0) * std::log(2.0), 0.0}; });
}

} // namespace ellint::catalog::detail

#endif
