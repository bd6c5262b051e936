#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ellint/constants.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/specfun.hpp"
#include "ellint/transforms.hpp"

using namespace ellint;
using Catch::Approx;
using specfun::pi;
using transforms::BeltramiVariant;

TEST_CASE("Beltrami kernels at k = 0 and domain checks", "[transforms]") {
    for (auto v : {BeltramiVariant::B, BeltramiVariant::iB, BeltramiVariant::LB,
                   BeltramiVariant::iLB}) {
        CHECK(transforms::beltrami_kernel(v, 0.0, 0.5) == Approx(2.0 / pi).epsilon(1e-15));
        CHECK_THROWS_AS(transforms::beltrami_kernel(v, 1.0, 0.5), std::domain_error);
        CHECK_THROWS_AS(transforms::beltrami_kernel(v, 0.5, 0.0), std::domain_error);
        CHECK_THROWS_AS(transforms::beltrami_kernel(v, 0.5, 1.0), std::domain_error);
    }
}

TEST_CASE("Beltrami kernels reproduce K on random moduli", "[transforms]") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (auto v : {BeltramiVariant::B, BeltramiVariant::iB, BeltramiVariant::LB,
                   BeltramiVariant::iLB}) {
        for (int i = 0; i < 20; ++i) {
            const double k = u(rng);
            auto r = quadrature::tanh_sinh_fn(
                [v, k](double x) {
                    return transforms::beltrami_kernel(v, k, x) * specfun::ellip_k_comp(x);
                },
                0, 1, true, false, 1e-12);
            CHECK(r.value == Approx(specfun::ellip_k(k)).margin(1e-10));
        }
    }
}

TEST_CASE("beltrami_transform reproduces identities", "[transforms][slow]") {
    // f = 1 under one type-iB round against K(sqrt(1-x^2)) gives
    // int_0^1 K(k) dk = 2G.
    auto psi = [](double kappa) {
        return transforms::beltrami_transform(BeltramiVariant::iB,
                                              {[](double) { return 1.0; }, false, false},
                                              kappa, 1e-12)
            .value;
    };
    auto r = quadrature::tanh_sinh_fn(
        [&psi](double x) { return specfun::ellip_k_comp(x) * psi(x); }, 0, 1, true, false,
        1e-10, 8);
    CHECK(r.value == Approx(2.0 * constants::catalan()).margin(1e-9));

    // f = 1/(1+k) under type B gives pi^2/8.
    auto psi_b = [](double kappa) {
        return transforms::beltrami_transform(
                   BeltramiVariant::B, {[](double k) { return 1.0 / (1.0 + k); }, false, false},
                   kappa, 1e-12)
            .value;
    };
    auto rb = quadrature::tanh_sinh_fn(
        [&psi_b](double x) { return specfun::ellip_k_comp(x) * psi_b(x); }, 0, 1, true, false,
        1e-10, 8);
    CHECK(rb.value == Approx(pi * pi / 8).margin(1e-9));

    // f = 0 transforms to 0.
    auto z = transforms::beltrami_transform(BeltramiVariant::LB,
                                            {[](double) { return 0.0; }, false, false}, 0.3,
                                            1e-12);
    CHECK(z.value == 0.0);
}

TEST_CASE("abel_forward closed forms", "[transforms]") {
    auto r1 = transforms::abel_forward(
        [](double r) {
            const double d = 1.0 + r * r;
            return 1.0 / (d * d);
        },
        0.0, 1e-12);
    CHECK(r1.value == Approx(1.0).margin(1e-11));

    // f = 1/(1+r^2): (Af)(x) = pi/sqrt(1+x^2) by the u = r^2 substitution.
    auto r2 = transforms::abel_forward([](double r) { return 1.0 / (1.0 + r * r); }, 1.0,
                                       1e-12);
    CHECK(r2.value == Approx(pi / std::sqrt(2.0)).margin(1e-11));

    auto r3 = transforms::abel_forward([](double r) { return std::exp(-r * r); }, 0.0, 1e-12);
    CHECK(r3.value == Approx(1.0).margin(1e-11));
}

TEST_CASE("abel_solve against AGM targets", "[transforms]") {
    // f(y) = pi arcsin(sqrt y): int_0^x phi = 2[E(sqrt x) - (1-x) K(sqrt x)].
    auto r = transforms::abel_solve([](double y) { return pi * std::asin(std::sqrt(y)); },
                                    0.5, 1e-12);
    const double k = std::sqrt(0.5);
    CHECK(r.value ==
          Approx(2.0 * (specfun::ellip_e(k) - 0.5 * specfun::ellip_k(k))).margin(1e-11));

    auto z = transforms::abel_solve([](double) { return 0.0; }, 0.7, 1e-12);
    CHECK(z.value == 0.0);

    // f(y) = pi asinh(sqrt y) at x = 1: 2 sqrt2 [K - E](1/sqrt2).
    auto r2 = transforms::abel_solve([](double y) { return pi * std::asinh(std::sqrt(y)); },
                                     1.0, 1e-12);
    const auto ke = specfun::ellip_ke(specfun::Modulus::from_k(1.0 / std::sqrt(2.0)));
    CHECK(r2.value == Approx(2.0 * std::sqrt(2.0) * ke.k_minus_e()).margin(1e-11));
}

TEST_CASE("Abel round trip on monomials", "[transforms]") {
    // For phi = y^m: f(x) = int_0^x phi/sqrt(x-y) dy = B(m+1,1/2) x^{m+1/2};
    // the solver must recover int_0^x phi = x^{m+1}/(m+1).
    for (int m = 0; m <= 3; ++m) {
        const double beta_m = std::exp(std::lgamma(m + 1.0) + std::lgamma(0.5) -
                                       std::lgamma(m + 1.5));
        for (double x : {0.3, 0.8, 1.7}) {
            auto r = transforms::abel_solve(
                [m, beta_m](double y) { return beta_m * std::pow(y, m + 0.5); }, x, 1e-12);
            CHECK(r.value == Approx(std::pow(x, m + 1.0) / (m + 1.0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("tricomi_pv examples", "[transforms]") {
    // K(sqrt(1-xi^2)) maps to K(x).
    for (double x : {0.2, 0.7}) {
        auto r = transforms::tricomi_pv(
            [](double xi) { return specfun::ellip_k_comp(std::fabs(xi)); }, x, 1e-9);
        CHECK(r.value == Approx(specfun::ellip_k(x)).margin(1e-7));
    }
    // Even input transforms to zero at x = 0.
    auto r0 = transforms::tricomi_pv([](double xi) { return 1.0 / (2.0 + xi * xi); }, 0.0,
                                     1e-11);
    CHECK(r0.value == Approx(0.0).margin(1e-11));
    // sqrt(1-x^2) f = log((1+x)/2) pairs with -arccos x.
    auto r1 = transforms::tricomi_pv(
        [](double xi) {
            return std::log((1.0 + xi) / 2.0) / std::sqrt((1.0 - xi) * (1.0 + xi));
        },
        0.2, 1e-9);
    CHECK(std::sqrt(1.0 - 0.04) * r1.value == Approx(-std::acos(0.2)).margin(1e-7));
    CHECK_THROWS_AS(transforms::tricomi_pv([](double) { return 1.0; }, 1.5, 1e-9),
                    std::domain_error);
}

TEST_CASE("landen_descend", "[transforms]") {
    // Leading order k^2/4.
    const double k = 1e-3;
    CHECK(transforms::landen_descend(k) == Approx(k * k / 4).epsilon(1e-5));
    // Exact algebra at k = 1/sqrt2.
    CHECK(transforms::landen_descend(1.0 / std::sqrt(2.0)) ==
          Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(transforms::landen_descend(0.0), std::domain_error);
    CHECK_THROWS_AS(transforms::landen_descend(1.0), std::domain_error);

    // Repeated descent drives K to K(0) = pi/2 through the product of
    // 2/(1+k') factors.
    std::mt19937 rng(47);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        double k0 = u(rng);
        double factor = 1.0, kn = k0;
        for (int it = 0; it < 40 && kn > 1e-12; ++it) {
            const double kc = std::sqrt((1.0 - kn) * (1.0 + kn));
            factor *= 2.0 / (1.0 + kc); // K(k) = (2/(1+k')) K(landen(k))
            kn = transforms::landen_descend(kn);
        }
        const double approx_k = factor * pi / 2.0 * (1.0 + kn * kn / 4.0);
        CHECK(approx_k == Approx(specfun::ellip_k(k0)).epsilon(1e-14));
    }
}

TEST_CASE("sesqui-Beltrami sum rule on random r", "[transforms]") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 10; ++i) {
        const double r = u(rng);
        auto w = quadrature::tanh_sinh_fn(
            [r](double xi) { return r * specfun::ellip_k(xi) / (r * r + xi * xi); }, 0, 1,
            false, true, 1e-12);
        auto m = quadrature::tanh_sinh_fn(
            [r](double xi) {
                return r * xi * specfun::ellip_k(xi) / (1.0 + r * r * xi * xi);
            },
            0, 1, false, true, 1e-12);
        const double s = std::sqrt(1.0 + r * r);
        CHECK(w.value + m.value == Approx(pi / 2.0 / s * specfun::ellip_k(r / s)).margin(1e-10));
    }
}

TEST_CASE("W functional equation at r = 1", "[transforms]") {
    const double r = 1.0;
    const double s = std::sqrt(2.0);
    auto one = quadrature::tanh_sinh_fn(
        [](double xi) { return specfun::ellip_k(xi) / (1.0 + xi * xi); }, 0, 1, false, true,
        1e-12);
    auto two = quadrature::tanh_sinh_fn(
        [s](double xi) { return s * specfun::ellip_k(xi) / (2.0 - xi * xi); }, 0, 1, false,
        true, 1e-12);
    const double R = r + s;
    auto rhs = quadrature::tanh_sinh_fn(
        [R](double eta) {
            return 4.0 * R * R * R * specfun::ellip_k(eta) / (R * R * R * R - eta * eta);
        },
        0, 1, false, true, 1e-12);
    CHECK(one.value + two.value == Approx(rhs.value).margin(1e-9));
}
