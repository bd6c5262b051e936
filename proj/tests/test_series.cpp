#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ellint/constants.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/rational.hpp"
#include "ellint/series.hpp"
#include "ellint/specfun.hpp"

using namespace ellint;
using Catch::Approx;
using specfun::pi;

TEST_CASE("BigRational invariants", "[series]") {
    using rational::BigRational;
    using rational::BigInt;
    BigRational half(BigInt(2), BigInt(4));
    CHECK(half.num() == 1);
    CHECK(half.den() == 2);
    BigRational neg(BigInt(3), BigInt(-6));
    CHECK(neg.num() == -1);
    CHECK(neg.den() == 2);
    CHECK((half + neg).num() == 0);
    CHECK((half + neg).den() == 1);
    CHECK((half * BigRational(BigInt(4), BigInt(3))).str() == "2/3");
    CHECK(half.to_double() == 0.5);
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("k_moment closed form matches quadrature", "[series]") {
    CHECK(series::k_moment(0) == Approx(pi * pi / 4).epsilon(1e-15));
    CHECK(series::k_moment(1) == Approx(1.0).epsilon(1e-14));
    CHECK(series::k_moment(2) == Approx(pi * pi / 16).epsilon(1e-14));
    for (long n = 0; n <= 20; ++n) {
        auto r = quadrature::tanh_sinh_fn(
            [n](double x) { return std::pow(x, static_cast<double>(n)) *
                                   specfun::ellip_k_comp(x); },
            0, 1, true, false, 1e-13);
        CHECK(series::k_moment(n) == Approx(r.value).margin(1e-12));
    }
}

TEST_CASE("KK' moment recurrence is exact and matches quadrature", "[series]") {
    const auto seq = series::kk_moment_rational(8);
    REQUIRE(seq.values.size() == 9);
    CHECK(seq.values[0].str() == "1/8");
    CHECK(seq.values[1].str() == "1/16");
    CHECK(seq.values[2].str() == "11/256");
    for (size_t n = 1; n < seq.values.size(); ++n) {
        CHECK(seq.values[n] < seq.values[n - 1]);
        CHECK(rational::BigRational(0) < seq.values[n]);
    }
    const double pi3 = pi * pi * pi;
    for (long n = 0; n <= 8; ++n) {
        auto r = quadrature::tanh_sinh_fn(
            [n](double t) {
                return specfun::ellip_k_sqrt(t) * specfun::ellip_k_comp(std::sqrt(t)) *
                       std::pow(t, static_cast<double>(n));
            },
            0, 1, true, true, 1e-10);
        CHECK(seq.values[static_cast<size_t>(n)].to_double() * pi3 ==
              Approx(r.value).margin(1e-7));
    }
}

TEST_CASE("W and M closed forms", "[series]") {
    // M(r)/r -> int_0^1 xi K dxi = 1 as r -> 0.
    CHECK(series::m_func(1e-3) / 1e-3 == Approx(1.0).margin(1e-5));
    // M(1) = (1/2) 3F2(1,1,1;3/2,3/2;1/2).
    auto f = specfun::pfq({{1.0, 1.0, 1.0}, {1.5, 1.5}, {0.5, 0.0}}, 100000, 1e-16);
    CHECK(series::m_func(1.0) == Approx(0.5 * f.value.real()).epsilon(1e-12));
    // W(r) + M(r) sum rule at r = 1 hits (pi/(2 sqrt2)) K(1/sqrt2).
    CHECK(series::w_func(1.0) + series::m_func(1.0) ==
          Approx(pi / (2.0 * std::sqrt(2.0)) * specfun::ellip_k(1.0 / std::sqrt(2.0)))
              .margin(1e-12));
    // r W(r) -> 2G as r -> infinity (1/r^2 correction).
    const double r = 300.0;
    auto w = quadrature::tanh_sinh_fn(
        [r](double xi) { return r * r * specfun::ellip_k(xi) / (r * r + xi * xi); }, 0, 1,
        false, true, 1e-12);
    CHECK(w.value == Approx(2.0 * constants::catalan()).margin(3.0 / (r * r)));

    std::mt19937 rng(61);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 10; ++i) {
        const double rr = u(rng);
        const double s = std::sqrt(1.0 + rr * rr);
        CHECK(series::w_func(rr) + series::m_func(rr) ==
              Approx(pi / 2.0 / s * specfun::ellip_k(rr / s)).margin(1e-10));
    }
}

TEST_CASE("hyperbolic sums hit pi^2(1+iy)/8 in under 30 terms", "[series]") {
    auto v1 = series::hyperbolic_sum(1.0, 30);
    CHECK(v1.real() == Approx(pi * pi / 8).margin(1e-12));
    CHECK(v1.imag() == Approx(pi * pi / 8).margin(1e-12));
    auto v2 = series::hyperbolic_sum(std::sqrt(3.0), 30);
    CHECK(v2.real() == Approx(pi * pi / 8).margin(1e-12));
    CHECK(v2.imag() == Approx(pi * pi * std::sqrt(3.0) / 8).margin(1e-12));
    auto v3 = series::hyperbolic_sum(1.0 / std::sqrt(3.0), 30);
    CHECK(v3.real() == Approx(pi * pi / 8).margin(1e-12));
    CHECK(v3.imag() == Approx(pi * pi / (8 * std::sqrt(3.0))).margin(1e-12));
    CHECK_THROWS_AS(series::hyperbolic_sum(-1.0), std::domain_error);
}

TEST_CASE("gosper splits", "[series]") {
    // n = 0 term of the 2 pi G series is 4.
    CHECK(series::gosper_splits(1).g_sum == 4.0);
    const auto gs = series::gosper_splits(100000);
    CHECK(gs.g_sum / (2.0 * pi) == Approx(constants::catalan()).margin(1e-6));
    CHECK(gs.zeta3_sum * 2.0 / 7.0 == Approx(constants::apery()).margin(1e-6));
}

TEST_CASE("Mehler-Dirichlet projection closed form", "[series]") {
    CHECK(series::md_projection_expected(1) == Approx(pi * pi / 4).epsilon(1e-15));
    CHECK(series::md_projection_expected(3) == Approx(-3 * pi * pi / 16).epsilon(1e-15));
    CHECK(series::md_projection_expected(5) == 0.0);
    CHECK(series::md_projection_expected(7) == Approx(-7 * pi * pi / 256).epsilon(1e-15));
    CHECK(series::md_projection_expected(9) == 0.0);
    CHECK_THROWS_AS(series::md_projection_expected(2), std::domain_error);
    CHECK_THROWS_AS(series::md_projection_expected(-1), std::domain_error);
}

TEST_CASE("Tricomi Fourier expansion reconstructs K", "[series]") {
    for (double th : {0.3, 1.0}) {
        CHECK(series::tricomi_fourier_k(th, 200) ==
              Approx(specfun::ellip_k(std::sin(th))).margin(1e-5));
    }
}
