#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "ellint/constants.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/specfun.hpp"
#include "ellint/sphere_mc.hpp"
#include "ellint/transforms.hpp"

using namespace ellint;
using Catch::Approx;
using specfun::pi;
namespace q = quadrature;

TEST_CASE("tanh_sinh endpoint singularity benchmarks", "[quadrature]") {
    auto r = q::tanh_sinh_fn([](double t) { return 1.0 / std::sqrt(t); }, 0, 1, true, false,
                             1e-14);
    CHECK(r.converged);
    CHECK(r.value == Approx(2.0).margin(1e-14));
    CHECK(r.err_est <= 1e-14);
    CHECK(r.n_evals > 0);

    for (double a = 0.1; a < 0.95; a += 0.1) {
        auto ra = q::tanh_sinh_fn([a](double t) { return std::pow(t, -a); }, 0, 1, true, false,
                                  1e-14);
        CHECK(ra.value == Approx(1.0 / (1.0 - a)).margin(1e-13));
    }

    auto r2 = q::tanh_sinh_fn([](double t) { return std::log(t) / (t * t - 1.0); }, 0, 1, true,
                              true, 1e-13);
    CHECK(r2.value == Approx(pi * pi / 8).margin(1e-13));

    auto r3 = q::tanh_sinh_fn([](double k) { return specfun::ellip_k(k) * k; }, 0, 1, false,
                              true, 1e-13);
    CHECK(r3.value == Approx(1.0).margin(1e-12));
}

TEST_CASE("tanh_sinh rejects non-finite interior values", "[quadrature]") {
    auto f = [](double x) { return 1.0 / (x - 0.5); };
    CHECK_THROWS_AS(q::tanh_sinh_fn(f, 0, 1, false, false, 1e-10), q::evaluation_error);
}

TEST_CASE("adaptive quadrature", "[quadrature]") {
    auto r1 = q::adaptive_fn([](double t) { return std::sin(t); }, 0, pi / 2, 1e-13);
    CHECK(r1.value == Approx(1.0).margin(1e-13));
    CHECK(r1.converged);

    const double G = constants::catalan();
    auto r2 = q::adaptive_fn([](double t) { return t / std::sin(t); }, 1e-300, pi / 2, 1e-13);
    CHECK(r2.value == Approx(2.0 * G).margin(1e-12));

    const double Z3 = constants::apery();
    auto r3 = q::adaptive_fn([](double t) { return 2.0 * t * std::log(std::tan(t / 2)); },
                             1e-300, pi / 2, 1e-12);
    CHECK(r3.value == Approx(-2.0 * pi * G + 3.5 * Z3).margin(1e-10));

    // Depth exhaustion leaves the best value with converged = false.
    auto r4 = q::adaptive_fn([](double t) { return 1.0 / std::sqrt(std::fabs(t - 0.3)); },
                             1e-12, 1, 1e-13, 3);
    CHECK_FALSE(r4.converged);
}

TEST_CASE("quadrature linearity", "[quadrature]") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 10; ++i) {
        const double al = u(rng), be = u(rng);
        auto f = [](double x) { return std::sin(3 * x) + x * x; };
        auto g = [](double x) { return std::exp(-x) * std::cos(x); };
        auto rf = q::tanh_sinh_fn(f, 0, 1, false, false, 1e-13);
        auto rg = q::tanh_sinh_fn(g, 0, 1, false, false, 1e-13);
        auto rc = q::tanh_sinh_fn([&](double x) { return al * f(x) + be * g(x); }, 0, 1, false,
                                  false, 1e-13);
        CHECK(rc.value == Approx(al * rf.value + be * rg.value)
                              .margin(1e-12 + rf.err_est + rg.err_est + rc.err_est));
    }
}

TEST_CASE("principal value basics", "[quadrature]") {
    auto odd = q::principal_value_fn([](double x) { return 1.0 / (0.0 - x); }, -1, 1, 0.0,
                                     false, false, 1e-12);
    CHECK(odd.value == Approx(0.0).margin(1e-12));

    auto cf = q::principal_value_fn([](double x) { return 1.0 / (0.3 - x); }, -1, 1, 0.3,
                                    false, false, 1e-12);
    CHECK(cf.value == Approx(std::log(1.3 / 0.7)).margin(1e-12));

    CHECK_THROWS_AS(q::principal_value_fn([](double x) { return 1.0 / (2.0 - x); }, -1, 1, 2.0,
                                          false, false, 1e-10),
                    std::invalid_argument);

    // Tricomi transform of K(sqrt(1-xi^2)) reproduces K.
    auto bt = transforms::tricomi_pv(
        [](double xi) { return specfun::ellip_k_comp(std::fabs(xi)); }, 0.5, 1e-9);
    CHECK(bt.value == Approx(1.685750354812596).margin(1e-9));
    CHECK(bt.value == Approx(specfun::ellip_k(0.5)).margin(1e-9));
}

TEST_CASE("halfline integrals", "[quadrature]") {
    auto r1 = q::halfline_fn([](double r) { return std::exp(-r); }, 1e-13);
    CHECK(r1.value == Approx(1.0).margin(1e-13));

    const double G = constants::catalan();
    auto r2 = q::halfline_fn([](double r) { return std::asinh(r) / (1.0 + r * r); }, 1e-13);
    CHECK(r2.value == Approx(2.0 * G).margin(1e-12));

    auto r3 = q::halfline_fn(
        [](double r) { return std::asinh(r) / (r * std::sqrt(1.0 + r * r)); }, 1e-13);
    CHECK(r3.value == Approx(pi * pi / 4).margin(1e-12));
}

TEST_CASE("cubature basics", "[quadrature]") {
    auto unit = q::cubature_nd([](double, double, double) { return 1.0; }, 3, 1e-9);
    CHECK(unit.value == Approx(1.0).margin(1e-9));
    auto unit2 = q::cubature_nd([](double, double, double) { return 1.0; }, 2, 1e-10);
    CHECK(unit2.value == Approx(1.0).margin(1e-10));
    CHECK_THROWS_AS(q::cubature_nd([](double, double, double) { return 1.0; }, 4, 1e-6),
                    std::invalid_argument);
}

TEST_CASE("box-to-box pair for 4 pi^2 G agrees", "[quadrature][slow]") {
    // The two triple-box parameterizations linked by the algebraic
    // box-to-box map evaluate to the same number.
    auto one = sphere_mc::box_integral("b_uvw", 1e-7);
    auto two = sphere_mc::box_integral("beta_prime_qrs:0", 1e-7);
    CHECK(std::fabs(one.value - two.value) < 1e-6);
    CHECK(one.value == Approx(constants::catalan()).margin(1e-5));
}

TEST_CASE("Tricomi Parseval pairing on polynomial test pairs", "[quadrature][slow]") {
    // <f, Tg> + <g, Tf> = 0 for f,g = low-degree polynomials times
    // sqrt(1-x^2).
    auto w = [](double x) { return std::sqrt((1.0 - x) * (1.0 + x)); };
    for (int deg = 0; deg < 3; ++deg) {
        auto f = [&, deg](double x) { return std::pow(x, deg) * w(x); };
        auto g = [&, deg](double x) { return std::pow(x, deg + 1) * w(x); };
        auto tf = [&](double x) { return transforms::tricomi_pv(f, x, 1e-10).value; };
        auto tg = [&](double x) { return transforms::tricomi_pv(g, x, 1e-10).value; };
        auto one = q::adaptive_fn([&](double x) { return f(x) * tg(x); }, -1, 1, 1e-9);
        auto two = q::adaptive_fn([&](double x) { return g(x) * tf(x); }, -1, 1, 1e-9);
        CHECK(one.value + two.value == Approx(0.0).margin(1e-8));
    }
}
