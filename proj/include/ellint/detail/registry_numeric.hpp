#ifndef ELLINT_DETAIL_REGISTRY_NUMERIC_HPP
#define ELLINT_DETAIL_REGISTRY_NUMERIC_HPP

#include "ellint/detail/registry_util.hpp"
#include "ellint/sphere_mc.hpp"

// Statistical (Monte Carlo) and 3D unit-box records.

namespace ellint::catalog::detail {

inline void register_numeric(std::vector<IdentityRecord>& out) {
    const double G = constants::catalan();

    auto mc_record = [&out](std::string id, std::string kernel, double target,
                            std::uint64_t seed, std::vector<std::string> covers,
                            std::string rhs_plan) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.section = "s2";
        rec.lhs_plan = "mc_coupling: " + kernel + ", 1e6 samples, seed " + std::to_string(seed);
        rec.rhs_plan = std::move(rhs_plan);
        rec.lhs_top_op = "mc_coupling";
        rec.rhs_top_op = "constants";
        rec.tol = 0.0; // statistical: pass within 4 sigma
        rec.cost = CostClass::mc;
        rec.tags = {"mc"};
        rec.covers = std::move(covers);
        rec.runner = [kernel, target, seed]() {
            const auto est =
                sphere_mc::mc_coupling(sphere_mc::kernel_by_id(kernel), 1'000'000, seed);
            RunOutput o;
            o.lhs = est.median_of_means;
            o.rhs = target;
            o.mc_sigma = est.stderr_est;
            o.note = "mean=" + std::to_string(est.mean) +
                     " n=" + std::to_string(est.n_samples);
            return o;
        };
        out.push_back(std::move(rec));
    };

    mc_record("mc_eq_a", "eq_a", PI * PI / 8.0, 1, {"eq:a"}, "pi^2/8");
    mc_record("mc_eq_b", "eq_b", G, 1, {"eq:b"}, "G (Bradley)");
    mc_record("mc_eq_G_S3", "eq_G_S3", G, 1, {"eq:G_S3"}, "G (Bradley)");
    mc_record("mc_eq_ImLi2", "eq_ImLi2:0.5:1.5707963267948966",
              specfun::dilog(std::complex<double>(0.0, 0.5)).imag() / 0.5, 1, {"eq:ImLi2"},
              "2 Im Li2(i/2) via dilog");
    mc_record("mc_eq_beta_pi3", "eq_beta:1.0471975511965976", PI * (PI - PI / 3.0) / 8.0, 1,
              {"eq:beta"}, "pi(pi - pi/3)/8");

    auto box_record = [&out](std::string id, std::string box_id, double target,
                             std::vector<std::string> covers, std::string rhs_plan) {
        IdentityRecord rec;
        rec.id = std::move(id);
        rec.section = "s1";
        rec.lhs_plan = "box_integral: " + box_id;
        rec.rhs_plan = std::move(rhs_plan);
        rec.lhs_top_op = "cubature_nd";
        rec.rhs_top_op = "constants";
        rec.tol = 1e-5;
        rec.cost = CostClass::slow;
        rec.tags = {"box"};
        rec.covers = std::move(covers);
        rec.runner = [box_id, target]() {
            const auto r = sphere_mc::box_integral(box_id, 1e-6);
            RunOutput o;
            o.lhs = r.value;
            o.rhs = target;
            o.diag = r.err_est;
            return o;
        };
        out.push_back(std::move(rec));
    };

    box_record("box_eq_a", "a_uvw", PI * PI / 8.0, {"eq:a", "eq:box_forms"}, "pi^2/8");
    box_record("box_eq_b", "b_uvw", G, {"eq:b", "eq:box_forms"}, "G (Bradley)");
    box_record("box_eq_beta", "beta_qrs:2.0943951023931953", PI * PI / 24.0,
               {"eq:beta", "eq:box_forms"}, "pi(pi - 2pi/3)/8 = pi^2/24");
    box_record("box_eq_beta_prime", "beta_prime_qrs:0", G, {"eq:beta'", "eq:box_forms"},
               "G (Bradley)");

    // The two quadruple-integral representations of 4 pi^2 G, reduced by
    // the exact t-integration to a pair of 3D boxes linked by the
    // box-to-box map.
    {
        IdentityRecord rec;
        rec.id = "eq_qrs_uvw_pair";
        rec.section = "s1";
        rec.lhs_plan = "box_integral: b_uvw";
        rec.rhs_plan = "box_integral: beta_prime_qrs:0";
        rec.lhs_top_op = "cubature_nd";
        rec.rhs_top_op = "cubature_nd_dual";
        rec.tol = 1e-6;
        rec.cost = CostClass::slow;
        rec.tags = {"box"};
        rec.covers = {"eq:qrs_uvw"};
        rec.runner = []() {
            const auto one = sphere_mc::box_integral("b_uvw", 1e-7);
            const auto two = sphere_mc::box_integral("beta_prime_qrs:0", 1e-7);
            RunOutput o;
            o.lhs = one.value;
            o.rhs = two.value;
            o.diag = one.err_est + two.err_est;
            return o;
        };
        out.push_back(std::move(rec));
    }
}

} // namespace ellint::catalog::detail

#endif
