#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "ellint/constants.hpp"
#include "ellint/specfun.hpp"

using namespace ellint;
using Catch::Approx;
using specfun::pi;

TEST_CASE("agm fixed points and domain", "[specfun]") {
    CHECK(specfun::agm(1.0, 1.0) == 1.0);
    CHECK(specfun::agm(1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(specfun::agm(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(specfun::agm(1.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(specfun::agm(1.0, std::nan("")), std::domain_error);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double a = u(rng), b = u(rng);
        CHECK(specfun::agm(a, b) == Approx(specfun::agm(b, a)).epsilon(1e-15));
    }
}

TEST_CASE("agm lemniscatic value against the Gamma(1/4) closed form", "[specfun]") {
    // agm(1, 1/sqrt2) = 2 pi^(3/2) / Gamma(1/4)^2, Gamma from libm lgamma.
    const double g4 = std::exp(std::lgamma(0.25));
    const double expect = 2.0 * std::pow(pi, 1.5) / (g4 * g4);
    const double got = specfun::agm(1.0, 1.0 / std::sqrt(2.0));
    CHECK(got == Approx(expect).epsilon(1e-15));
    CHECK(got == Approx(0.847213084793979).margin(1e-15));
}

TEST_CASE("Modulus invariants", "[specfun]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double k = u(rng);
        const auto m = specfun::Modulus::from_k(k);
        CHECK(m.k * m.k + m.k_comp * m.k_comp ==
              Approx(1.0).margin(4 * std::numeric_limits<double>::epsilon()));
        const auto mc = specfun::Modulus::from_complement(m.k_comp);
        CHECK(mc.k_comp == m.k_comp); // bit-identical complement
    }
    CHECK_THROWS_AS(specfun::Modulus::from_k(1.5), std::domain_error);
    CHECK_THROWS_AS(specfun::Modulus::from_k(-0.1), std::domain_error);
}

TEST_CASE("complete elliptic integral K special values", "[specfun]") {
    CHECK(specfun::ellip_k(0.0) == Approx(pi / 2).epsilon(1e-16));
    const double g4 = std::exp(std::lgamma(0.25));
    CHECK(specfun::ellip_k(1.0 / std::sqrt(2.0)) ==
          Approx(g4 * g4 / (4.0 * std::sqrt(pi))).epsilon(1e-15));
    CHECK(specfun::ellip_k(1.0 / std::sqrt(2.0)) ==
          Approx(1.854074677301372).margin(2e-15));
    const double g3 = std::exp(std::lgamma(1.0 / 3.0));
    CHECK(specfun::ellip_k(std::sin(pi / 12)) ==
          Approx(std::pow(3.0, 0.25) * g3 * g3 * g3 / (std::pow(2.0, 7.0 / 3.0) * pi))
              .epsilon(1e-15));
    CHECK(specfun::ellip_k(std::sin(pi / 12)) == Approx(1.598142002112540).margin(2e-15));
    CHECK_THROWS_AS(specfun::ellip_k(1.0), std::domain_error);
}

TEST_CASE("complete elliptic integral E and the Legendre relation", "[specfun]") {
    CHECK(specfun::ellip_e(0.0) == Approx(pi / 2).epsilon(1e-16));
    CHECK(specfun::ellip_e(1.0) == 1.0);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 60; ++i) {
        const double k = (i == 0) ? 0.3 : u(rng);
        const auto m = specfun::Modulus::from_k(k);
        const auto mc = specfun::Modulus::from_complement(k);
        const double lhs = specfun::ellip_e(m) * specfun::ellip_k(mc) +
                           specfun::ellip_e(mc) * specfun::ellip_k(m) -
                           specfun::ellip_k(m) * specfun::ellip_k(mc);
        CHECK(lhs == Approx(pi / 2).margin(1e-13));
    }
}

TEST_CASE("Landen invariance", "[specfun]") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(1e-4, 1.0 - 1e-4);
    for (int i = 0; i < 100; ++i) {
        const double xi = u(rng);
        const double lhs = specfun::ellip_k_comp(xi);
        const double rhs = 2.0 / (1.0 + xi) * specfun::ellip_k((1.0 - xi) / (1.0 + xi));
        CHECK(lhs == Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("ellip_ke companion combinations are cancellation-free", "[specfun]") {
    // K - E ~ (pi/4) k^2 at small k; the companion form keeps full
    // relative accuracy where direct subtraction loses everything.
    const auto ke = specfun::ellip_ke(specfun::Modulus::from_k(1e-7));
    CHECK(ke.k_minus_e() == Approx(pi / 4 * 1e-14).epsilon(1e-6));
    const auto ke2 = specfun::ellip_ke(specfun::Modulus::from_k(0.5));
    CHECK(ke2.K == Approx(specfun::ellip_k(0.5)).epsilon(1e-15));
    CHECK(ke2.E == Approx(specfun::ellip_e(0.5)).epsilon(1e-15));
}

TEST_CASE("dilog special values and identities", "[specfun]") {
    using C = std::complex<double>;
    CHECK(std::abs(specfun::dilog(C(0, 0))) == 0.0);
    CHECK(specfun::dilog(C(1, 0)).real() == Approx(pi * pi / 6).epsilon(1e-15));

    const double G = constants::catalan();
    const C d = specfun::dilog(C(0, 1)) - specfun::dilog(C(0, -1));
    CHECK(d.imag() == Approx(2 * G).epsilon(1e-15));
    CHECK(d.real() == Approx(0.0).margin(1e-16));
    CHECK(specfun::dilog(C(0, 1)).real() == Approx(-pi * pi / 48).epsilon(1e-14));

    // Reflection over the unit disk.
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int n = 0;
    while (n < 200) {
        C z(u(rng), u(rng));
        if (std::abs(z) >= 0.999 || std::abs(z) < 1e-3 || std::abs(z - 1.0) < 1e-3) continue;
        ++n;
        const C lhs = specfun::dilog(z) + specfun::dilog(1.0 - z);
        const C rhs = pi * pi / 6.0 - std::log(z) * std::log(1.0 - z);
        CHECK(std::abs(lhs - rhs) < 1e-13);
    }
    // Inversion for |z| > 1.
    for (int i = 0; i < 50; ++i) {
        C z(u(rng) * 4, u(rng) * 4);
        if (std::abs(z) <= 1.1 || std::fabs(z.imag()) < 1e-3) continue;
        const C lhs = specfun::dilog(z) + specfun::dilog(1.0 / z);
        const C lg = std::log(-z);
        CHECK(std::abs(lhs + pi * pi / 6.0 + 0.5 * lg * lg) < 1e-13);
    }
    // On the unit circle: Re Li2(e^{i t}) = pi^2/6 - t(2 pi - t)/4.
    for (double t : {0.05, 0.7, pi / 3, 2.0, 3.0}) {
        const C v = specfun::dilog(std::polar(1.0, t));
        CHECK(v.real() == Approx(pi * pi / 6 - t * (2 * pi - t) / 4).margin(1e-14));
    }
}

TEST_CASE("chi2 values and functional equation", "[specfun]") {
    using C = std::complex<double>;
    CHECK(std::abs(specfun::chi2(C(0, 0))) == 0.0);
    CHECK(specfun::chi2(C(1, 0)).real() == Approx(pi * pi / 8).epsilon(1e-15));
    const double z = 0.3;
    const double lhs = specfun::chi2(C((1 - z) / (1 + z), 0)).real() +
                       specfun::chi2(C(z, 0)).real();
    const double rhs = pi * pi / 8 + std::log(z) / 2 * std::log((1 + z) / (1 - z));
    CHECK(lhs == Approx(rhs).margin(1e-14));
}

TEST_CASE("legendre_p recurrence", "[specfun]") {
    CHECK(specfun::legendre_p(0, 0.123) == 1.0);
    CHECK(specfun::legendre_p(1, 0.7) == Approx(0.7).epsilon(1e-16));
    CHECK(specfun::legendre_p(2, 0.5) == Approx(-0.125).epsilon(1e-15));
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        CHECK(std::fabs(specfun::legendre_p(i % 40, u(rng))) <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(specfun::legendre_p(3, 1.5), std::domain_error);
}

TEST_CASE("pfq examples", "[specfun]") {
    const double G = constants::catalan();
    // 2F1(1/2,1/2;2;1) = 4/pi, O(1/n^2) terms.
    auto r1 = specfun::pfq({{0.5, 0.5}, {2.0}, {1.0, 0.0}}, 200000, 0.0);
    CHECK(r1.value.real() == Approx(4.0 / pi).margin(5e-6));
    CHECK(r1.tail_bound < 5e-6);
    // 3F2(1/2,1/2,1/2;1,3/2;1) = 4G/pi.
    auto r2 = specfun::pfq({{0.5, 0.5, 0.5}, {1.0, 1.5}, {1.0, 0.0}}, 100000, 0.0);
    CHECK(r2.value.real() == Approx(4.0 * G / pi).margin(1e-5));
    // 3F2(1/2,1,1;3/2,3/2;-1) = pi^2/8 - log^2(sqrt2-1)/2,
    // alternating with O(1/n) terms.
    auto r3 = specfun::pfq({{0.5, 1.0, 1.0}, {1.5, 1.5}, {-1.0, 0.0}}, 1000000, 1e-16);
    const double l = std::log(std::sqrt(2.0) - 1.0);
    CHECK(r3.value.real() == Approx(pi * pi / 8 - 0.5 * l * l).margin(1e-5));
}

TEST_CASE("pfq degenerates to exp at p=q=0", "[specfun]") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 20; ++i) {
        std::complex<double> z(u(rng), u(rng));
        if (std::abs(z) > 1.0) continue;
        auto r = specfun::pfq({{}, {}, z}, 1000, 1e-17);
        CHECK(std::abs(r.value - std::exp(z)) < 1e-14 * std::abs(std::exp(z)) + 1e-15);
        CHECK(r.converged);
    }
}

TEST_CASE("pfq error paths", "[specfun]") {
    // Unit-argument divergence: sum(lower) - sum(upper) <= 0.
    CHECK_THROWS_AS(specfun::pfq({{1.0, 2.0}, {1.0}, {1.0, 0.0}}, 100, 1e-10),
                    std::domain_error);
    // p > q+1.
    CHECK_THROWS_AS(specfun::pfq({{1.0, 1.0, 1.0}, {2.0}, {0.5, 0.0}}, 100, 1e-10),
                    std::domain_error);
    // Non-positive-integer lower parameter.
    CHECK_THROWS_AS(specfun::pfq({{1.0}, {-2.0}, {0.5, 0.0}}, 100, 1e-10), std::domain_error);
    // |z| > 1 at p = q+1.
    CHECK_THROWS_AS(specfun::pfq({{1.0, 1.0}, {1.5}, {1.5, 0.0}}, 100, 1e-10),
                    std::domain_error);
}
