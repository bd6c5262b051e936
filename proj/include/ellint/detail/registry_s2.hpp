#ifndef ELLINT_DETAIL_REGISTRY_S2_HPP
#define ELLINT_DETAIL_REGISTRY_S2_HPP

#include "ellint/detail/registry_util.hpp"
#include "ellint/series.hpp"
#include "ellint/transforms.hpp"

// Section 2: couplings on S^3 x S^3, the dilogarithm relations, the
// Mehler-Dirichlet projections and the Abel-transform corollary.

namespace ellint::catalog::detail {

inline void register_s2(std::vector<IdentityRecord>& out) {
    RecordBuilder b{out};
    const double G = constants::catalan();
    const double Z3 = constants::apery();

    b.simple("eq_G_S3", "s2", "tanh_sinh: (1/4pi) int_0^pi (pi-psi) 2 atanh(sin psi) dpsi",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:G_S3"},
             [] {
                 auto one = ts2([](double p, double, double ur) {
                     const double su = std::sin(ur); // = cos p near pi/2
                     return (PI - p) * 2.0 * atanh_c(std::sin(p), su * su);
                 }, 0, PI / 2, 1e-12);
                 auto two = ts2([](double, double ul, double ur) {
                     const double su = std::sin(ul);
                     return ur * 2.0 * atanh_c(std::cos(ul), su * su);
                 }, PI / 2, PI, 1e-12);
                 return Val{(one.v + two.v) / (4.0 * PI), one.e + two.e};
             },
             [G] { return Val{G, 1e-15}; });

    // Im Li2(k e^{i Theta})/(k sin Theta) against the reduced 1D form.
    b.grid("eq_ImLi2", "s2",
           "tanh_sinh: (1/(2 pi k sin T)) int_0^pi atan(...) log-ratio dpsi",
           "dilog: Im Li2(k e^{iT})/(k sin T)", "tanh_sinh", "dilog", 1e-8, CostClass::fast,
           {"dilog"}, {"eq:ImLi2"}, {0, 1, 2, 3, 4},
           [](double p) {
               static const double kk[5] = {0.5, 1.0, 0.3, 0.8, 0.6};
               static const double th[5] = {PI / 2, PI / 2, PI / 4, 2 * PI / 3, 1.0};
               const int i = static_cast<int>(p);
               const double k = kk[i], T = th[i];
               auto base = [k, T](double psi, double dist) {
                   const double num = std::atan2(k * std::sin(psi), 1.0 - k * std::cos(psi));
                   const double lr = 2.0 * (std::log(std::sin((psi + T) / 2)) -
                                            std::log(std::sin(dist / 2)));
                   return num * lr;
               };
               auto one = ts2([base](double psi, double, double ur) { return base(psi, ur); },
                              0, T, 1e-11);
               auto two = ts2([base](double psi, double ul, double) { return base(psi, ul); },
                              T, PI, 1e-11);
               return Val{(one.v + two.v) / (2.0 * PI * k * std::sin(T)), one.e + two.e};
           },
           [](double p) {
               static const double kk[5] = {0.5, 1.0, 0.3, 0.8, 0.6};
               static const double th[5] = {PI / 2, PI / 2, PI / 4, 2 * PI / 3, 1.0};
               const int i = static_cast<int>(p);
               const double k = kk[i], T = th[i];
               const auto li = specfun::dilog(std::polar(k, T));
               return Val{li.imag() / (k * std::sin(T)), 1e-14};
           });

    b.grid("eq_Li2int", "s2", "tanh_sinh: int_0^1 z K(sqrt(1-t))/sqrt((1-z^2)^2+4z^2 t) dt",
           "dilog: Li2(z) - Li2(-z)", "tanh_sinh", "dilog", 1e-8, CostClass::fast, {"dilog"},
           {"eq:Li2int"}, {0.2, 0.5, 0.8, 0.95, 1.0},
           [](double z) {
               const double a = (1.0 - z * z) * (1.0 - z * z);
               return ts([a, z](double t) {
                   return z * specfun::ellip_k_comp(std::sqrt(t)) /
                          std::sqrt(a + 4.0 * z * z * t);
               }, 0, 1, true, false, 1e-11);
           },
           [](double z) {
               return Val{2.0 * specfun::chi2(std::complex<double>(z, 0)).real(), 1e-14};
           });

    b.grid("eq_Li2int_im", "s2",
           "tanh_sinh: int_0^1 y K(sqrt(1-t))/sqrt((1+y^2)^2-4y^2 t) dt (z = iy slice)",
           "dilog: 2 Ti2(y)", "tanh_sinh", "dilog", 1e-8, CostClass::fast, {"dilog"},
           {"eq:Li2int", "eq:Li2int_star"}, {0.25, 0.5, 0.75, 1.0},
           [](double y) {
               const double a = (1.0 - y * y) * (1.0 - y * y);
               return ts2([a, y](double t, double, double ur) {
                   return y * specfun::ellip_k_comp(std::sqrt(t)) /
                          std::sqrt(a + 4.0 * y * y * ur);
               }, 0, 1, 1e-11);
           },
           [](double y) { return Val{2.0 * specfun::ti2(y), 1e-14}; });

    b.grid("eq_Li2int_prime", "s2",
           "tanh_sinh: int_0^1 (1-z^4) K(sqrt(1-t)) ((1-z^2)^2+4z^2 t)^{-3/2} dt",
           "2 atanh(z)/z", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"dilog"},
           {"eq:Li2int'"}, {0.2, 0.5, 0.8},
           [](double z) {
               const double a = (1.0 - z * z) * (1.0 - z * z);
               return ts([a, z](double t) {
                   const double d = a + 4.0 * z * z * t;
                   return (1.0 - z * z) * (1.0 + z * z) * specfun::ellip_k_comp(std::sqrt(t)) /
                          (d * std::sqrt(d));
               }, 0, 1, true, false, 1e-11);
           },
           [](double z) { return Val{2.0 * std::atanh(z) / z, 1e-15}; });

    b.grid("eq_Li2int_S", "s2",
           "tanh_sinh: (1/2) int_0^1 K(sqrt(1-t)) log(1 + 2z^2/(sqrt(X)+1-z^2)) dt",
           "z(Li2(z)-Li2(-z)) - (1+z)log(1+z) - (1-z)log(1-z)", "tanh_sinh", "dilog", 1e-8,
           CostClass::fast, {"dilog"}, {"eq:Li2int_S"}, {0.3, 0.6, 0.9},
           [](double z) {
               const double a = (1.0 - z * z) * (1.0 - z * z);
               auto v = ts([a, z](double t) {
                   const double sx = std::sqrt(a + 4.0 * z * z * t);
                   return specfun::ellip_k_comp(std::sqrt(t)) *
                          std::log1p(2.0 * z * z / (sx + 1.0 - z * z));
               }, 0, 1, true, false, 1e-11);
               return Val{v.v / 2.0, v.e};
           },
           [](double z) {
               const double c = 2.0 * specfun::chi2(std::complex<double>(z, 0)).real();
               return Val{z * c - (1.0 + z) * std::log1p(z) - (1.0 - z) * std::log1p(-z),
                          1e-14};
           });

    b.simple("eq_G_Klog", "s2",
             "tanh_sinh: pi/4 - log2/2 - (1/4) int_0^1 K(sqrt(1-t)) log(sqrt(1-t)/(1+sqrt(1-t))) dt",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast, {"G"},
             {"eq:G_Klog"},
             [] {
                 auto v = ts([](double t) {
                     const double s = std::sqrt(1.0 - t);
                     return specfun::ellip_k_comp(std::sqrt(t)) *
                            (0.5 * std::log1p(-t) - std::log1p(s));
                 }, 0, 1, true, true, 1e-11);
                 return Val{PI / 4.0 - 0.5 * std::log(2.0) - 0.25 * v.v, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_G_KK", "s2", "cubature_2d: double integral of K K kernel over the quarter square",
             "G (Bradley)", "cubature_nd", "constants.catalan", 1e-6, CostClass::slow, {"G"},
             {"eq:G_KK"},
             [] {
                 auto r = quadrature::cubature_nd(
                     [](double x, double y, double) {
                         const double th = PI / 2 * x, ph = PI / 2 * y;
                         const double st = std::sin(th), ct = std::cos(th);
                         const double sp = std::sin(ph), cp = std::cos(ph);
                         const double den = st * st * st * st + 4.0 * ct * ct * cp * cp;
                         const double Kth = specfun::ellip_k(specfun::Modulus::from_complement(ct));
                         const double Kph = specfun::ellip_k(specfun::Modulus::from_complement(cp));
                         return st * (1.0 - ct * ct * ct * ct) * sp * cp * Kth * Kph /
                                (den * std::sqrt(den)) * (PI * PI / 4.0);
                     },
                     2, 1e-8);
                 return Val{r.value / PI, r.err_est};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_G_K", "s2", "cubature_2d: double integral of single-K kernel", "G (Bradley)",
             "cubature_nd", "constants.catalan", 1e-6, CostClass::slow, {"G"}, {"eq:G_K"},
             [] {
                 auto r = quadrature::cubature_nd(
                     [](double x, double y, double) {
                         const double th = PI / 2 * x, ph = PI / 2 * y;
                         const double st = std::sin(th), ct = std::cos(th);
                         const double sp = std::sin(ph), cp = std::cos(ph);
                         const double den = st * st * st * st + 4.0 * ct * ct * cp * cp;
                         const double Kph = specfun::ellip_k(specfun::Modulus::from_complement(cp));
                         return ct * (1.0 - ct * ct * ct * ct) * sp * cp * Kph /
                                (den * std::sqrt(den)) * (PI * PI / 4.0);
                     },
                     2, 1e-8);
                 return Val{r.value / 2.0, r.err_est};
             },
             [G] { return Val{G, 1e-15}; });

    b.grid("eq_chi2_1", "s2", "tanh_sinh: chi2 functional-equation pair of K integrals",
           "pi^2/4 + log z log((1+z)/(1-z))", "tanh_sinh", "closed_form", 1e-8,
           CostClass::fast, {"dilog"}, {"eq:chi2_1"}, {0.1, 0.3, 0.5, 0.7, 0.9},
           [](double z) {
               const double z2 = z * z;
               auto one = ts([z2](double t) {
                   return (1.0 - z2) * specfun::ellip_k_comp(std::sqrt(t)) /
                          (2.0 * std::sqrt(4.0 * z2 + t * (1.0 - z2) * (1.0 - z2)));
               }, 0, 1, true, false, 1e-11);
               auto two = ts([z2, z](double t) {
                   return z * specfun::ellip_k_comp(std::sqrt(t)) /
                          std::sqrt((1.0 - z2) * (1.0 - z2) + 4.0 * z2 * t);
               }, 0, 1, true, false, 1e-11);
               return Val{one.v + two.v, one.e + two.e};
           },
           [](double z) {
               return Val{PI * PI / 4.0 + std::log(z) * 2.0 * std::atanh(z), 1e-15};
           });

    b.grid("eq_chi2_2_re", "s2", "tanh_sinh: int_{sin^2 t}^1 K(sqrt(1-u))/sqrt(u-sin^2 t) du",
           "pi^2/2 - pi t", "tanh_sinh", "closed_form", 1e-9, CostClass::fast, {"dilog"},
           {"eq:chi2_2"}, {0.3, 0.6, 0.9, 1.2, 1.5},
           [](double th) {
               const double s2 = std::sin(th) * std::sin(th);
               return ts2([](double u, double ul, double) {
                   return specfun::ellip_k_comp(std::sqrt(u)) / std::sqrt(ul);
               }, s2, 1, 1e-12);
           },
           [](double th) { return Val{PI * PI / 2.0 - PI * th, 0.0}; });

    b.grid("eq_Im_ext", "s2", "tanh_sinh: imaginary-part extension pair of K integrals",
           "2 t log tan(t/2)", "tanh_sinh", "closed_form", 1e-9, CostClass::fast, {"dilog"},
           {"eq:Im_ext", "eq:chi2_2"}, {0.3, 0.6, 0.9, 1.2, 1.5},
           [](double th) {
               const double s = std::sin(th);
               auto one = ts2([](double t, double, double ur) {
                   return specfun::ellip_k_comp(std::sqrt(t)) / std::sqrt(ur);
               }, 0, s * s, 1e-12);
               auto two = ts([s](double t) {
                   return specfun::ellip_k_comp(std::sqrt(t)) * s / std::sqrt(1.0 - t * s * s);
               }, 0, 1, true, false, 1e-12);
               return Val{-one.v + two.v, one.e + two.e};
           },
           [](double th) { return Val{2.0 * th * std::log(std::tan(th / 2)), 0.0}; });

    b.grid("eq_K_arcsin", "s2", "tanh_sinh: int_0^{x^2} K(sqrt t)/sqrt(x^2-t) dt", "pi asin x",
           "tanh_sinh", "closed_form", 1e-9, CostClass::fast, {"K"}, {"eq:K_arcsin"},
           {0.2, 0.45, 0.7, 0.9, 1.0},
           [](double x) {
               const double omb = (1.0 - x) * (1.0 + x);
               return ts2([omb](double t, double, double ur) {
                   return Ksqrt_c(t, omb + ur) / std::sqrt(ur);
               }, 0, x * x, 1e-12);
           },
           [](double x) { return Val{PI * std::asin(x), 0.0}; });

    b.grid("eq_K_arsinh", "s2",
           "tanh_sinh: int_0^{x^2} K(sqrt(t/(1+t)))/(sqrt(1+t) sqrt(x^2-t)) dt", "pi asinh x",
           "tanh_sinh", "closed_form", 1e-9, CostClass::fast, {"K"}, {"eq:K_arsinh"},
           {0.5, 1.0, 2.0, 5.0, 10.0},
           [](double x) {
               return ts2([](double t, double, double ur) {
                   const double s = std::sqrt(1.0 + t);
                   return specfun::ellip_k_comp(1.0 / s) / (s * std::sqrt(ur));
               }, 0, x * x, 1e-12);
           },
           [](double x) { return Val{PI * std::asinh(x), 0.0}; });

    b.simple("eq_K_tan_pi8", "s2", "tanh_sinh: int_0^1 K(sqrt(1-t))/(2 sqrt(1+t)) dt",
             "pi^2/8 - log^2(sqrt2-1)/2", "tanh_sinh", "closed_form", 1e-9, CostClass::fast,
             {"pi2_8"}, {"eq:K_tan_pi8"},
             [] {
                 auto v = ts([](double t) {
                     return specfun::ellip_k_comp(std::sqrt(t)) / (2.0 * std::sqrt(1.0 + t));
                 }, 0, 1, true, false, 1e-12);
                 return v;
             },
             [] {
                 const double l = std::log(std::sqrt(2.0) - 1.0);
                 return Val{PI * PI / 8.0 - 0.5 * l * l, 0.0};
             });

    b.simple("eq_K_gr", "s2", "tanh_sinh: int_0^1 K(sqrt(1-t))/sqrt(1+4t) dt",
             "pi^2/6 - (3/2) log^2((sqrt5-1)/2)", "tanh_sinh", "closed_form", 1e-9,
             CostClass::fast, {"pi2_8"}, {"eq:K_gr"},
             [] {
                 return ts([](double t) {
                     return specfun::ellip_k_comp(std::sqrt(t)) / std::sqrt(1.0 + 4.0 * t);
                 }, 0, 1, true, false, 1e-12);
             },
             [] {
                 const double l = std::log((std::sqrt(5.0) - 1.0) / 2.0);
                 return Val{PI * PI / 6.0 - 1.5 * l * l, 0.0};
             });

    b.simple("eq_K_5_2", "s2", "tanh_sinh: int_0^1 K(sqrt(1-t))/(2 sqrt(4+t)) dt",
             "pi^2/12 - log^2(sqrt5-2)/6", "tanh_sinh", "closed_form", 1e-9, CostClass::fast,
             {"pi2_8"}, {"eq:K_5_2"},
             [] {
                 return ts([](double t) {
                     return specfun::ellip_k_comp(std::sqrt(t)) / (2.0 * std::sqrt(4.0 + t));
                 }, 0, 1, true, false, 1e-12);
             },
             [] {
                 const double l = std::log(std::sqrt(5.0) - 2.0);
                 return Val{PI * PI / 12.0 - l * l / 6.0, 0.0};
             });

    b.simple("eq_Kt2_7Zeta3", "s2", "tanh_sinh: int_0^1 [K(sqrt(1-t))]^2 dt", "7 zeta3/2",
             "tanh_sinh", "constants.zeta3", 1e-9, CostClass::fast, {"zeta3"},
             {"eq:Kt2_7Zeta3"},
             [] {
                 return ts([](double t) {
                     const double kk = specfun::ellip_k_comp(std::sqrt(t));
                     return kk * kk;
                 }, 0, 1, true, false, 1e-12);
             },
             [Z3] { return Val{7.0 * Z3 / 2.0, 1e-15}; });

    b.simple("eq_KKlogt_zeta3", "s2", "tanh_sinh: int_0^1 K(sqrt t) K(sqrt(1-t)) log t dt",
             "-pi (pi^2/2 log 2 - 7 zeta3/4)", "tanh_sinh", "constants.zeta3", 1e-7,
             CostClass::fast, {"zeta3"}, {"eq:KKlogt_zeta3"},
             [] {
                 return ts([](double t) {
                     return Ksqrt(t) * specfun::ellip_k_comp(std::sqrt(t)) * std::log(t);
                 }, 0, 1, true, true, 1e-10);
             },
             [Z3] {
                 return Val{-PI * (PI * PI / 2.0 * std::log(2.0) - 7.0 * Z3 / 4.0), 1e-15};
             });

    b.simple("eq_G_K_mix", "s2", "tanh_sinh: 7 zeta3/(2 pi) - (1/pi) int_0^1 K log(1/k)/(1+k) dk",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:G_K_mix"},
             [Z3] {
                 auto v = ts([](double k) { return K(k) * -std::log(k) / (1.0 + k); }, 0, 1,
                             true, true, 1e-12);
                 return Val{7.0 * Z3 / (2.0 * PI) - v.v / PI, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_logtan_G_zeta3", "s2", "adaptive: int_0^{pi/2} 2 t log tan(t/2) dt",
             "-2 pi G + 7 zeta3/2", "adaptive", "constants.catalan", 1e-9, CostClass::fast,
             {"G", "zeta3"}, {"eq:logtan_G_zeta3"},
             [] {
                 return ad([](double t) { return 2.0 * t * std::log(std::tan(t / 2)); },
                           1e-300, PI / 2, 1e-12);
             },
             [G, Z3] { return Val{-2.0 * PI * G + 7.0 * Z3 / 2.0, 1e-15}; });

    b.simple("eq_G_Ti_a", "s2", "tanh_sinh: three-term inverse-tangent-integral route",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-10, CostClass::fast, {"G"},
             {"eq:G_Ti_a"},
             [] {
                 auto v = ts([](double t) {
                     return specfun::ellip_k_comp(std::sqrt(t)) *
                            (2.0 / std::sqrt(25.0 - 16.0 * t) +
                             3.0 / (4.0 * std::sqrt(25.0 - 9.0 * t)) +
                             3.0 / std::sqrt(625.0 - 576.0 * t));
                 }, 0, 1, true, false, 1e-12);
                 return Val{PI / 6.0 * std::log(2.0) + v.v / 3.0, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_G_Ti_b", "s2", "tanh_sinh: pi/8 log(2+sqrt3) + (3/8) int K(sqrt(1-t))/sqrt(4-t)",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:G_Ti_b"},
             [] {
                 auto v = ts([](double t) {
                     return specfun::ellip_k_comp(std::sqrt(t)) / std::sqrt(4.0 - t);
                 }, 0, 1, true, false, 1e-12);
                 return Val{PI / 8.0 * std::log(2.0 + std::sqrt(3.0)) + 3.0 / 8.0 * v.v, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_G_Ti_c", "s2", "tanh_sinh: golden-ratio pair route to G", "G (Bradley)",
             "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"}, {"eq:G_Ti_c"},
             [] {
                 const double s5 = std::sqrt(5.0);
                 auto v = ts([s5](double t) {
                     return specfun::ellip_k_comp(std::sqrt(t)) *
                            (1.0 / std::sqrt(6.0 - 2.0 * s5 - t) -
                             1.0 / std::sqrt(6.0 + 2.0 * s5 - t));
                 }, 0, 1, true, false, 1e-12);
                 const double lead =
                     PI / 8.0 *
                     std::log((10.0 + std::sqrt(50.0 - 22.0 * s5)) /
                              (10.0 - std::sqrt(50.0 - 22.0 * s5)));
                 return Val{lead + 5.0 / 8.0 * v.v, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.grid("eq_MD_proj", "s2", "tanh_sinh: int_0^pi K(sin(b/2)) sin b cos(n b/2) db",
           "Mehler-Dirichlet closed form", "tanh_sinh", "closed_form", 1e-8, CostClass::fast,
           {"MD"}, {"eq:MD_proj"}, {1, 3, 5, 7, 9},
           [](double p) {
               const double n = p;
               return ts([n](double beta) {
                   const double kk = specfun::ellip_k(
                       specfun::Modulus::from_complement(std::cos(beta / 2)));
                   return kk * std::sin(beta) * std::cos(n * beta / 2);
               }, 0, PI, false, true, 1e-11);
           },
           [](double p) {
               return Val{series::md_projection_expected(static_cast<long>(p)), 0.0};
           });

    b.grid("eq_K_reprod", "s2", "tanh_sinh: K-reproducing kernel integral",
           "pi K(|r|)/8 - pi^2/(16(1+r))", "tanh_sinh", "agm", 1e-9, CostClass::fast, {"K"},
           {"eq:K_reprod"}, {-0.7, -0.3, 0.2, 0.5, 0.8},
           [](double r) {
               auto v = ts([r](double k) {
                   const double den = 1.0 - 2.0 * r * (1.0 - 2.0 * k * k) + r * r;
                   return K(k) * r * k * std::sqrt((1.0 - k) * (1.0 + k)) / den;
               }, 0, 1, false, true, 1e-12);
               return Val{v.v / (1.0 + r), v.e};
           },
           [](double r) {
               return Val{PI * K(std::fabs(r)) / 8.0 - PI * PI / (16.0 * (1.0 + r)), 1e-15};
           });

    b.simple("eq_G_log2_log", "s2",
             "tanh_sinh: pi/2 log 2 + (1/pi) int_0^1 K(sqrt(1-x^2)) log sqrt(1-x^2) dx",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:G_log2_log", "eq:low_deg_B"},
             [] {
                 auto v = ts([](double x) {
                     return Kc(x) * 0.5 * (std::log1p(-x) + std::log1p(x));
                 }, 0, 1, true, true, 1e-12);
                 return Val{PI / 2.0 * std::log(2.0) + v.v / PI, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_7Apery_Li2", "s2",
             "tanh_sinh: 7 zeta3/(2 pi) - (1/(2 pi^2)) int K(sin t) 2 Im Li2(e^{2it})/cos t dt",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-8, CostClass::fast,
             {"G", "dilog"}, {"eq:7Apery_Li2"},
             [Z3] {
                 auto v = ts([](double t) {
                     const double kk =
                         specfun::ellip_k(specfun::Modulus::from_complement(std::cos(t)));
                     const double cl2 =
                         specfun::dilog(std::polar(1.0, 2.0 * t)).imag();
                     return kk * 2.0 * cl2 / std::cos(t);
                 }, 0, PI / 2, true, true, 1e-11);
                 return Val{7.0 * Z3 / (2.0 * PI) - v.v / (2.0 * PI * PI), v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_Abel_Tr", "s2", "nested: halfline of x (Af)(x) K(x/sqrt(1+x^2))/sqrt(1+x^2)",
             "halfline: pi int f(r) r asinh(r) dr", "abel_forward", "halfline", 1e-6,
             CostClass::slow, {"abel"}, {"eq:Abel_Tr"},
             [] {
                 auto f = [](double r) {
                     const double d = 1.0 + r * r;
                     return 1.0 / (d * d);
                 };
                 return hl([f](double x) {
                     const double s = std::sqrt(1.0 + x * x);
                     const double af = transforms::abel_forward(f, x, 1e-10).value;
                     return x * af / s * specfun::ellip_k_comp(1.0 / s);
                 }, 1e-8);
             },
             [] {
                 auto v = hl([](double r) {
                     const double d = 1.0 + r * r;
                     return r * std::asinh(r) / (d * d);
                 }, 1e-12);
                 return Val{PI * v.v, v.e};
             });

    b.grid("eq_Abel1", "s2", "tanh_sinh: int_0^1 K/(1-k^2) a^2(1-k^2)/(sqrt d (sqrt d + k)) dk",
           "arcsin/log^2 branch formula", "tanh_sinh", "closed_form", 1e-9, CostClass::fast,
           {"abel"}, {"eq:Abel1"}, {0.3, 0.7, 1.0, 1.5, 3.0},
           [](double a) {
               return ts([a](double k) {
                   const double omk2 = (1.0 - k) * (1.0 + k);
                   const double d = k * k + a * a * omk2;
                   const double sd = std::sqrt(d);
                   // 1 - k/sqrt(d) = a^2 (1-k^2)/(sqrt d (sqrt d + k))
                   return K(k) * a * a / (sd * (sd + k));
               }, 0, 1, false, true, 1e-12);
           },
           [](double a) {
               if (a <= 1.0) {
                   const double as = std::asin(a);
                   return Val{as / 2.0 * (PI - as), 0.0};
               }
               const double l = std::log(std::sqrt(a * a - 1.0) + a);
               return Val{PI * PI / 8.0 + l * l / 2.0, 0.0};
           });

    b.grid("eq_Abel2", "s2",
           "tanh_sinh: int_0^{a/sqrt(1+a^2)} k K sqrt(a^2-(1+a^2)k^2)/(1-k^2)^2 dk",
           "pi/8 [(1+2a^2) asinh a - a sqrt(1+a^2)]", "tanh_sinh", "closed_form", 1e-9,
           CostClass::fast, {"abel"}, {"eq:Abel2"}, {0.5, 1.0, 2.0, 4.0, 8.0},
           [](double a) {
               const double up = a / std::sqrt(1.0 + a * a);
               return ts2([a, up](double k, double, double ur) {
                   const double omk2 = (1.0 - k) * (1.0 + k);
                   const double w = (1.0 + a * a) * ur * (up + k);
                   return k * K(k) * std::sqrt(w) / (omk2 * omk2);
               }, 0, up, 1e-12);
           },
           [](double a) {
               return Val{PI / 8.0 * ((1.0 + 2.0 * a * a) * std::asinh(a) -
                                      a * std::sqrt(1.0 + a * a)),
                          0.0};
           });

    b.grid("eq_Abel3", "s2",
           "tanh_sinh: int k K (a^2-(1+a^2)k^2)^{3/2}/(1-k^2)^3 dk",
           "3 pi/128 [(8a^4+8a^2+3) asinh a - 3a(1+2a^2) sqrt(1+a^2)]", "tanh_sinh",
           "closed_form", 1e-9, CostClass::fast, {"abel"}, {"eq:Abel3"}, {0.5, 1.0, 2.0, 4.0},
           [](double a) {
               const double up = a / std::sqrt(1.0 + a * a);
               return ts2([a, up](double k, double, double ur) {
                   const double omk2 = (1.0 - k) * (1.0 + k);
                   const double w = (1.0 + a * a) * ur * (up + k);
                   return k * K(k) * w * std::sqrt(w) / (omk2 * omk2 * omk2);
               }, 0, up, 1e-12);
           },
           [](double a) {
               const double s = std::sqrt(1.0 + a * a);
               return Val{3.0 * PI / 128.0 *
                              ((8.0 * a * a * a * a + 8.0 * a * a + 3.0) * std::asinh(a) -
                               3.0 * a * (1.0 + 2.0 * a * a) * s),
                          0.0};
           });

    b.grid("eq_Abel4", "s2", "tanh_sinh: mixed sqrt/log Abel-table integral",
           "pi [2/9 - sqrt(1+a^2)(8+5a^2)/36 + a(3+2a^2)/12 asinh a]", "tanh_sinh",
           "closed_form", 1e-9, CostClass::fast, {"abel"}, {"eq:Abel4"}, {0.5, 1.0, 2.0, 4.0},
           [](double a) {
               const double up = a / std::sqrt(1.0 + a * a);
               return ts2([a, up](double k, double, double ur) {
                   const double omk2 = (1.0 - k) * (1.0 + k);
                   const double w = std::sqrt((1.0 + a * a) * ur * (up + k));
                   const double lg = std::log((w + a * std::sqrt(omk2)) / k);
                   return k * K(k) / (omk2 * omk2) *
                          (a * w - k * k / std::sqrt(omk2) * lg);
               }, 0, up, 1e-12);
           },
           [](double a) {
               const double s = std::sqrt(1.0 + a * a);
               return Val{PI * (2.0 / 9.0 - s * (8.0 + 5.0 * a * a) / 36.0 +
                                a * (3.0 + 2.0 * a * a) / 12.0 * std::asinh(a)),
                          0.0};
           });

    b.simple("eq_G_tanh", "s2", "tanh_sinh: (1/pi) int_0^1 k atanh(sqrt(1-k^2)) K/(1-k^2) dk",
             "G (Bradley)", "tanh_sinh", "constants.catalan", 1e-9, CostClass::fast, {"G"},
             {"eq:G_tanh", "eq:G_cosh"},
             [] {
                 auto v = ts2([](double k, double, double ur) {
                     const double omk2 = ur * (1.0 + k);
                     const double ath = std::log1p(std::sqrt(omk2)) - std::log(k);
                     return k * ath * K_ur(k, ur) / omk2;
                 }, 0, 1, 1e-12);
                 return Val{v.v / PI, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_pi8_arccos", "s2", "tanh_sinh: (1/pi) int_0^1 acos(k) K/(1-k^2) dk", "pi^2/8",
             "tanh_sinh", "constants.pi", 1e-9, CostClass::fast, {"pi2_8"},
             {"eq:pi8_arccos", "eq:a_LB"},
             [] {
                 auto v = ts2([](double k, double, double ur) {
                     const double omk2 = ur * (1.0 + k);
                     return acos_c(k, omk2) * K_ur(k, ur) / omk2;
                 }, 0, 1, 1e-12);
                 return Val{v.v / PI, v.e};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_G_cosh", "s2", "halfline: (1/2) int_0^inf y/cosh y dy", "G (Bradley)",
             "halfline", "constants.catalan", 1e-10, CostClass::fast, {"G"}, {"eq:G_cosh"},
             [] {
                 auto v = hl([](double y) { return y / std::cosh(y); }, 1e-12);
                 return Val{v.v / 2.0, v.e};
             },
             [G] { return Val{G, 1e-15}; });

    b.simple("eq_pi8_y_sinhy", "s2", "halfline: (1/2) int_0^inf asinh(r)/(r sqrt(1+r^2)) dr",
             "pi^2/8", "halfline", "constants.pi", 1e-10, CostClass::fast, {"pi2_8"},
             {"eq:pi8_y_sinhy"},
             [] {
                 auto v = hl([](double r) {
                     return std::asinh(r) / (r * std::sqrt(1.0 + r * r));
                 }, 1e-12);
                 return Val{v.v / 2.0, v.e};
             },
             [] { return Val{PI * PI / 8.0, 0.0}; });

    b.simple("eq_pi8_arctan_inf", "s2",
             "halfline: int_0^inf atan(1/x) K(x/sqrt(1+x^2))/sqrt(1+x^2) dx", "pi^3/8",
             "halfline", "constants.pi", 1e-8, CostClass::fast, {"pi2_8"},
             {"eq:pi8_arctan_inf_int"},
             [] {
                 return hl([](double x) {
                     const double s = std::sqrt(1.0 + x * x);
                     return std::atan(1.0 / x) * specfun::ellip_k_comp(1.0 / s) / s;
                 }, 1e-11);
             },
             [] { return Val{PI * PI * PI / 8.0, 0.0}; });

    b.grid("eq_Abel_Li2_re", "s2", "tanh_sinh: Abel route to the dilogarithm combination",
           "Re[t/2 (i pi/2 - log tan((pi-2t)/4)) - i(Li2(ie^{-it})-Li2(-ie^{-it}))/2]",
           "tanh_sinh", "dilog", 1e-8, CostClass::fast, {"dilog", "abel"}, {"eq:Abel_Li2"},
           {0.2, 0.5, 0.8, 1.1, 1.4},
           [](double th) {
               const double s2 = std::sin(th) * std::sin(th);
               const double sec2 = 1.0 / (std::cos(th) * std::cos(th));
               auto v = ts2([s2, sec2](double k, double, double ur) {
                   const double omk2 = ur * (1.0 + k);
                   const double w = 1.0 - k * k * s2;
                   const double arg = std::sqrt(omk2 / w);
                   const double ath =
                       std::log1p(arg) - std::log(k) - 0.5 * std::log((1.0 - s2) / w);
                   return k * ath / (omk2 * std::sqrt(k * k + omk2 * sec2)) * K_ur(k, ur);
               }, 0, 1, 1e-11);
               return Val{v.v / PI, v.e};
           },
           [](double th) {
               using C = std::complex<double>;
               const C I(0, 1);
               const C li = specfun::dilog(I * std::exp(-I * th)) -
                            specfun::dilog(-I * std::exp(-I * th));
               const C rhs = th / 2.0 * (I * PI / 2.0 - std::log(std::tan((PI - 2 * th) / 4))) -
                             I * li / 2.0;
               return Val{rhs.real(), 1e-14};
           });

    b.grid("eq_Abel_Li2_im", "s2", "imaginary part of the Abel_Li2 right-hand side", "0",
           "dilog", "closed_form", 1e-10, CostClass::fast, {"dilog"}, {"eq:Abel_Li2"},
           {0.2, 0.5, 0.8, 1.1, 1.4},
           [](double th) {
               using C = std::complex<double>;
               const C I(0, 1);
               const C li = specfun::dilog(I * std::exp(-I * th)) -
                            specfun::dilog(-I * std::exp(-I * th));
               const C rhs = th / 2.0 * (I * PI / 2.0 - std::log(std::tan((PI - 2 * th) / 4))) -
                             I * li / 2.0;
               return Val{rhs.imag(), 1e-14};
           },
           [](double) { return Val{0.0, 0.0}; });

    b.grid("eq_Abel_Li2_int", "s2", "tanh_sinh: three-term atanh combination against K",
           "t^2/4", "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"abel"},
           {"eq:Abel_Li2_int"}, {0.2, 0.5, 0.8, 1.1, 1.4},
           [](double th) {
               const double s2 = std::sin(th) * std::sin(th);
               const double lc = std::log(std::cos(th));
               auto v = ts2([s2, lc](double k, double, double ur) {
                   const double omk2 = ur * (1.0 + k);
                   const double w = 1.0 - k * k * s2;
                   const double t1 = (std::log1p(std::sqrt(omk2)) - std::log(k)) / k;
                   const double t2 = lc / (k * std::sqrt(omk2));
                   const double arg = std::sqrt(omk2 / w);
                   const double t3 =
                       (std::log1p(arg) - std::log(k) - 0.5 * std::log((1.0 - s2) / w)) /
                       (k * std::sqrt(w));
                   return (t1 - t2 - t3) * K_ur(k, ur);
               }, 0, 1, 1e-11);
               return Val{v.v / PI, v.e};
           },
           [](double th) { return Val{th * th / 4.0, 0.0}; });

    b.grid("eq_Abel_Li2_prime", "s2",
           "tanh_sinh: int K(sqrt(1-x^2))/(c^2+x^2 s^2) [1 - u atanh u] dx", "t/sin(2t)",
           "tanh_sinh", "closed_form", 1e-8, CostClass::fast, {"abel"}, {"eq:Abel_Li2'"},
           {0.3, 0.7, 1.1},
           [](double th) {
               const double c2 = std::cos(th) * std::cos(th);
               const double s2 = std::sin(th) * std::sin(th);
               auto v = ts([c2, s2](double x) {
                   const double d = c2 + x * x * s2;
                   const double u = x / std::sqrt(d);
                   return Kc(x) / d * (1.0 - u * std::atanh(u));
               }, 0, 1, true, true, 1e-11);
               return Val{v.v / PI, v.e};
           },
           [](double th) { return Val{th / std::sin(2.0 * th), 0.0}; });

    // Abel integral-equation pairs (solver route and direct route).
    b.grid("eq_arcsin_Abel_eq", "s2", "abel_solve: f(y) = pi asin(sqrt y)",
           "2[E(sqrt u) - (1-u) K(sqrt u)]", "abel_solve", "agm", 1e-9, CostClass::fast,
           {"abel"}, {"eq:arcsin_Abel_eq", "eq:Abel_int_eq'"}, {0.1, 0.3, 0.5, 0.7, 0.9},
           [](double u) {
               auto r = transforms::abel_solve(
                   [](double y) { return PI * std::asin(std::sqrt(y)); }, u, 1e-12);
               return Val{r.value, r.err_est};
           },
           [](double u) {
               const auto ke = specfun::ellip_ke(specfun::modulus_sqrt(u));
               return Val{2.0 * ke.K * (u - ke.S), 1e-15};
           });

    b.grid("eq_arcsin_Abel_left", "s2", "tanh_sinh: int_0^u K(sqrt t) dt",
           "2[E(sqrt u) - (1-u) K(sqrt u)]", "tanh_sinh", "agm", 1e-9, CostClass::fast,
           {"abel"}, {"eq:arcsin_Abel_eq"}, {0.1, 0.3, 0.5, 0.7, 0.9},
           [](double u) { return ts([](double t) { return Ksqrt(t); }, 0, u, false, true, 1e-12); },
           [](double u) {
               const auto ke = specfun::ellip_ke(specfun::modulus_sqrt(u));
               return Val{2.0 * ke.K * (u - ke.S), 1e-15};
           });

    b.grid("eq_arsinh_Abel_eq", "s2", "abel_solve: f(y) = pi asinh(sqrt y)",
           "2 sqrt(1+x) [K - E](sqrt(x/(1+x)))", "abel_solve", "agm", 1e-9, CostClass::fast,
           {"abel"}, {"eq:arsinh_Abel_eq", "eq:Abel_int_eq'"}, {0.3, 0.7, 1.0, 2.0, 4.0},
           [](double x) {
               auto r = transforms::abel_solve(
                   [](double y) { return PI * std::asinh(std::sqrt(y)); }, x, 1e-12);
               return Val{r.value, r.err_est};
           },
           [](double x) {
               const auto ke =
                   specfun::ellip_ke(specfun::Modulus::from_complement(1.0 / std::sqrt(1.0 + x)));
               return Val{2.0 * std::sqrt(1.0 + x) * ke.k_minus_e(), 1e-15};
           });

    b.grid("eq_arsinh_Abel_left", "s2", "tanh_sinh: int_0^x K(sqrt(t/(1+t)))/sqrt(1+t) dt",
           "2 sqrt(1+x) [K - E](sqrt(x/(1+x)))", "tanh_sinh", "agm", 1e-9, CostClass::fast,
           {"abel"}, {"eq:arsinh_Abel_eq"}, {0.3, 0.7, 1.0, 2.0, 4.0},
           [](double x) {
               return ts([](double t) {
                   const double s = std::sqrt(1.0 + t);
                   return specfun::ellip_k_comp(1.0 / s) / s;
               }, 0, x, false, false, 1e-12);
           },
           [](double x) {
               const auto ke =
                   specfun::ellip_ke(specfun::Modulus::from_complement(1.0 / std::sqrt(1.0 + x)));
               return Val{2.0 * std::sqrt(1.0 + x) * ke.k_minus_e(), 1e-15};
           });

    b.grid("eq_E_arcsin", "s2", "tanh_sinh: int_0^u [E(sqrt t)-(1-t)K(sqrt t)]/sqrt(u-t) dt",
           "pi/4 [sqrt(u(1-u)) - (1-2u) asin sqrt u]", "tanh_sinh", "closed_form", 1e-9,
           CostClass::fast, {"abel"}, {"eq:E_arcsin"}, {0.1, 0.3, 0.5, 0.7, 0.9},
           [](double u) {
               return ts2([](double t, double, double ur) {
                   const auto ke = specfun::ellip_ke(specfun::modulus_sqrt(t));
                   return ke.K * (t - ke.S) / std::sqrt(ur);
               }, 0, u, 1e-12);
           },
           [](double u) {
               return Val{PI / 4.0 * (std::sqrt(u * (1.0 - u)) -
                                      (1.0 - 2.0 * u) * std::asin(std::sqrt(u))),
                          0.0};
           });

    b.grid("eq_E_arsinh", "s2",
           "tanh_sinh: int_0^x sqrt(1+t) [K-E](sqrt(t/(1+t)))/sqrt(x-t) dt",
           "pi/4 [(1+2x) asinh sqrt x - sqrt(x(1+x))]", "tanh_sinh", "closed_form", 1e-9,
           CostClass::fast, {"abel"}, {"eq:E_arsinh"}, {0.3, 0.7, 1.0, 2.0, 4.0},
           [](double x) {
               return ts2([](double t, double, double ur) {
                   const auto ke = specfun::ellip_ke(
                       specfun::Modulus::from_complement(1.0 / std::sqrt(1.0 + t)));
                   return std::sqrt(1.0 + t) * ke.k_minus_e() / std::sqrt(ur);
               }, 0, x, 1e-12);
           },
           [](double x) {
               return Val{PI / 4.0 * ((1.0 + 2.0 * x) * std::asinh(std::sqrt(x)) -
                                      std::sqrt(x * (1.0 + x))),
                          0.0};
           });
}

} // namespace ellint::catalog::detail

#endif
