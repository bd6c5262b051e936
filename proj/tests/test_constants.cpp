#include <catch_amalgamated.hpp>

#include <cmath>

#include "ellint/constants.hpp"
#include "ellint/quadrature.hpp"
#include "ellint/specfun.hpp"

using namespace ellint;
using Catch::Approx;
using specfun::pi;

TEST_CASE("Catalan constant by three independent routes", "[constants]") {
    const double b = constants::catalan_g(constants::GMethod::bradley).value;
    const double r = constants::catalan_g(constants::GMethod::ramanujan).value;
    const double a = constants::catalan_g(constants::GMethod::alternating).value;
    CHECK(std::fabs(b - r) <= 1e-15 * std::fabs(b));
    CHECK(std::fabs(b - a) <= 1e-15 * std::fabs(b));
    CHECK(std::fabs(r - a) <= 1e-15 * std::fabs(r));
    CHECK(b == Approx(0.915965594177219).margin(1e-15));
}

TEST_CASE("Apery constant by two independent routes", "[constants]") {
    const double ap = constants::zeta3(constants::Zeta3Method::apery_binomial).value;
    const double em = constants::zeta3(constants::Zeta3Method::direct_em).value;
    CHECK(std::fabs(ap - em) <= 1e-15 * std::fabs(ap));
    CHECK(ap == Approx(1.202056903159594).margin(1e-15));
}

TEST_CASE("Gamma special values", "[constants]") {
    CHECK(constants::gamma_quarter() == Approx(3.625609908221908).margin(4e-15));
    CHECK(constants::gamma_third() == Approx(2.678938534707747).margin(4e-15));
    // Reflection: Gamma(1/4) Gamma(3/4) = pi / sin(pi/4) = pi sqrt(2).
    const double g34 = pi / std::sin(pi / 4) / constants::gamma_quarter();
    CHECK(constants::gamma_quarter() * g34 == Approx(pi * std::sqrt(2.0)).margin(1e-13));
    // Against libm lgamma.
    CHECK(constants::gamma_quarter() ==
          Approx(std::exp(std::lgamma(0.25))).epsilon(1e-15));
    CHECK(constants::gamma_third() ==
          Approx(std::exp(std::lgamma(1.0 / 3.0))).epsilon(1e-15));
}

TEST_CASE("platform pi validated against the AGM iteration", "[constants]") {
    const double agm_pi = constants::pi_gauss_legendre();
    CHECK(std::fabs(agm_pi - pi) <=
          std::nextafter(pi, 4.0) - pi); // within 1 ulp
}

TEST_CASE("G reproduced by quadrature routes", "[constants]") {
    const double G = constants::catalan();
    // 2G = int_0^1 K(k) dk
    auto r = quadrature::tanh_sinh_fn([](double k) { return specfun::ellip_k(k); }, 0, 1,
                                      false, true, 1e-13);
    CHECK(2.0 * G - r.value == Approx(0.0).margin(1e-12));

    // Three-term inverse-tangent-integral route.
    auto ti = quadrature::tanh_sinh_fn(
        [](double t) {
            return specfun::ellip_k_comp(std::sqrt(t)) *
                   (2.0 / std::sqrt(25.0 - 16.0 * t) + 3.0 / (4.0 * std::sqrt(25.0 - 9.0 * t)) +
                    3.0 / std::sqrt(625.0 - 576.0 * t));
        },
        0, 1, true, false, 1e-12);
    CHECK(pi / 6 * std::log(2.0) + ti.value / 3.0 == Approx(G).margin(1e-10));
}

TEST_CASE("zeta3 reproduced by the squared-K integral", "[constants]") {
    const double Z3 = constants::apery();
    auto r = quadrature::tanh_sinh_fn(
        [](double t) {
            const double k = specfun::ellip_k_comp(std::sqrt(t));
            return k * k;
        },
        0, 1, true, false, 1e-12);
    CHECK(2.0 / 7.0 * r.value - Z3 == Approx(0.0).margin(1e-9));
}

TEST_CASE("constants table is complete", "[constants]") {
    const auto all = constants::all();
    CHECK(all.size() == 8);
    for (const auto& c : all) {
        CHECK(c.est_error <= 1e-15 * std::max(1.0, std::fabs(c.value)));
        CHECK(!c.name.empty());
        CHECK(!c.method.empty());
    }
}
