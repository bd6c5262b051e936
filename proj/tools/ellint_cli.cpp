// Command-line front end: verification runs over the identity catalog,
// reference-constant printing, and Monte Carlo experiments.
//
//   ellint verify --id eq_a
//   ellint verify --all --filter cost:fast
//   ellint constants
//   ellint mc --kernel eq_a --samples 1000000 --seed 42
//   ellint list --format json
//
// Exit codes: 0 all requested checks pass, 1 any identity failed,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "ellint/catalog.hpp"
#include "ellint/constants.hpp"
#include "ellint/manifest.hpp"
#include "ellint/sphere_mc.hpp"

namespace {

using nlohmann::ordered_json;

// Shortest round-trip decimal, so repeated runs are byte-identical and
// reports diff cleanly.
std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

ordered_json report_json(const ellint::catalog::VerificationReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["lhs_value"] = r.lhs_value;
    j["rhs_value"] = r.rhs_value;
    j["abs_diff"] = r.abs_diff;
    j["rel_diff"] = r.rel_diff;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    j["diagnostics"] = r.diagnostics;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

struct OutStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    explicit OutStream(const std::string& path) {
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            os = &file;
        }
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple-elliptic-integral identity verifier"};
    app.require_subcommand(1);

    std::string id, filter, out_path, format = "json", kernel;
    double tol_override = 0.0;
    bool all = false;
    long long samples = 1'000'000;
    std::uint64_t seed = 42;
    int parallelism = 1;
    if (const char* env = std::getenv("ELLIPTIC_VERIFY_THREADS")) {
        parallelism = std::max(1, std::atoi(env));
    }

    auto* verify = app.add_subcommand("verify", "evaluate catalog identities");
    verify->add_option("--id", id, "single identity id");
    verify->add_flag("--all", all, "run every registered identity");
    verify->add_option("--filter", filter, "tag:<t> | section:<s> | cost:<c> | id:<id>");
    verify->add_option("--tol", tol_override, "tolerance override");
    verify->add_option("--parallelism", parallelism, "worker threads");
    verify->add_option("--format", format, "json|table");
    verify->add_option("--out", out_path, "write output to file");

    auto* consts = app.add_subcommand("constants", "print reference constants");
    consts->add_option("--format", format, "json|table");
    consts->add_option("--out", out_path, "write output to file");

    auto* mc = app.add_subcommand("mc", "Monte Carlo sphere-coupling estimate");
    mc->add_option("--kernel", kernel, "kernel id, e.g. eq_a, eq_b, eq_G_S3")->required();
    mc->add_option("--samples", samples, "sample count (>= 10^4)");
    mc->add_option("--seed", seed, "RNG key");
    mc->add_option("--out", out_path, "write output to file");

    auto* list = app.add_subcommand("list", "list catalog records");
    list->add_option("--filter", filter, "tag:<t> | section:<s> | cost:<c> | id:<id>");
    list->add_option("--format", format, "json|table");
    list->add_option("--out", out_path, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        OutStream out(out_path);
        if (verify->parsed()) {
            std::vector<ellint::catalog::VerificationReport> reports;
            if (!id.empty()) {
                reports.push_back(ellint::catalog::evaluate(id, tol_override));
            } else if (all || !filter.empty()) {
                auto [reps, summary] = ellint::catalog::run_suite(filter, parallelism);
                reports = std::move(reps);
                (void)summary;
            } else {
                std::cerr << "verify: need --id, --all or --filter\n";
                return 2;
            }
            long passed = 0;
            for (const auto& r : reports) {
                if (r.pass) ++passed;
                if (format == "table") {
                    *out.os << (r.pass ? "PASS " : "FAIL ") << r.id << "  lhs=" << fmt(r.lhs_value)
                            << " rhs=" << fmt(r.rhs_value) << " abs_diff=" << fmt(r.abs_diff)
                            << " tol=" << fmt(r.tol) << "\n";
                } else {
                    *out.os << report_json(r).dump() << "\n";
                }
            }
            std::cerr << "verified " << passed << "/" << reports.size() << " identities\n";
            return passed == static_cast<long>(reports.size()) ? 0 : 1;
        }
        if (consts->parsed()) {
            if (format == "json") {
                for (const auto& c : ellint::constants::all()) {
                    ordered_json j;
                    j["name"] = c.name;
                    j["value"] = c.value;
                    j["method"] = c.method;
                    j["est_error"] = c.est_error;
                    *out.os << j.dump() << "\n";
                }
            } else {
                for (const auto& c : ellint::constants::all())
                    *out.os << c.name << " " << fmt(c.value) << " " << c.method << " "
                            << fmt(c.est_error) << "\n";
            }
            return 0;
        }
        if (mc->parsed()) {
            if (samples < 10'000) {
                std::cerr << "mc: --samples must be >= 10^4\n";
                return 2;
            }
            const auto spec = ellint::sphere_mc::kernel_by_id(kernel);
            const auto est = ellint::sphere_mc::mc_coupling(spec, samples, seed);
            ordered_json j;
            j["kernel"] = kernel;
            j["mean"] = est.mean;
            j["median_of_means"] = est.median_of_means;
            j["stderr"] = est.stderr_est;
            j["n_samples"] = est.n_samples;
            j["seed"] = est.seed;
            *out.os << j.dump() << "\n";
            return 0;
        }
        if (list->parsed()) {
            if (format == "json") {
                // Full manifest when unfiltered, the matching subset otherwise.
                ordered_json arr = ordered_json::array();
                for (const auto& j : ellint::catalog::manifest()) {
                    const auto& rec = ellint::catalog::find(j["id"].get<std::string>());
                    if (ellint::catalog::matches(rec, filter)) arr.push_back(j);
                }
                *out.os << arr.dump(2) << "\n";
            } else {
                for (const auto* rec : ellint::catalog::list(filter))
                    *out.os << rec->id << " " << rec->section << " "
                            << ellint::catalog::cost_name(rec->cost) << " tol=" << fmt(rec->tol)
                            << "\n";
            }
            return 0;
        }
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
