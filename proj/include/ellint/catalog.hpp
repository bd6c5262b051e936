#ifndef ELLINT_CATALOG_HPP
#define ELLINT_CATALOG_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

// Machine-readable registry of the verified identities: each record
// binds an independent left- and right-hand evaluator, a tolerance and
// the paper metadata, and the runner produces one report per record.

namespace ellint::catalog {

enum class CostClass { fast, slow, mc };

inline const char* cost_name(CostClass c) {
    switch (c) {
        case CostClass::fast: return "fast";
        case CostClass::slow: return "slow";
        case CostClass::mc: return "mc";
    }
    return "?";
}

// What one evaluation of a record produced.  Function-valued identities
// run a whole parameter grid and report the worst point.
struct RunOutput {
    double lhs = 0.0;
    double rhs = 0.0;
    double diag = 0.0;   // quadrature err_est or MC stderr at the worst point
    double mc_sigma = 0.0; // > 0 marks a statistical record: pass within 4 sigma
    std::string note;
};

struct IdentityRecord {
    std::string id;
    std::string section;  // paper anchor: s1, s2, s3, s4, appendix
    std::string lhs_plan; // human-readable evaluator plan
    std::string rhs_plan;
    std::string lhs_top_op; // top-level operation, for the independence audit
    std::string rhs_top_op;
    double tol = 1e-9;
    CostClass cost = CostClass::fast;
    std::vector<std::string> tags;
    std::vector<double> grid;          // parameter grid for function-valued records
    std::vector<std::string> covers;   // paper equation anchors this record verifies
    std::function<RunOutput()> runner;
};

struct VerificationReport {
    std::string id;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    double tol = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    double diagnostics = 0.0;
    std::string note;
};

namespace detail {
void register_s1(std::vector<IdentityRecord>& out);
void register_s2(std::vector<IdentityRecord>& out);
void register_s3(std::vector<IdentityRecord>& out);
void register_s4(std::vector<IdentityRecord>& out);
void register_numeric(std::vector<IdentityRecord>& out);
} // namespace detail

inline const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> recs = [] {
        std::vector<IdentityRecord> r;
        detail::register_s1(r);
        detail::register_s2(r);
        detail::register_s3(r);
        detail::register_s4(r);
        detail::register_numeric(r);
        std::sort(r.begin(), r.end(),
                  [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
        for (size_t i = 1; i < r.size(); ++i)
            if (r[i].id == r[i - 1].id)
                throw std::logic_error("catalog: duplicate id " + r[i].id);
        return r;
    }();
    return recs;
}

// Filter grammar: "" (all), "tag:G", "section:s3", "cost:fast", "id:eq_a".
inline bool matches(const IdentityRecord& rec, const std::string& filter) {
    if (filter.empty()) return true;
    const auto colon = filter.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad filter: " + filter);
    const std::string kind = filter.substr(0, colon);
    const std::string val = filter.substr(colon + 1);
    if (kind == "tag")
        return std::find(rec.tags.begin(), rec.tags.end(), val) != rec.tags.end();
    if (kind == "section") return rec.section == val;
    if (kind == "cost") return cost_name(rec.cost) == val;
    if (kind == "id") return rec.id == val;
    throw std::invalid_argument("bad filter kind: " + kind);
}

inline std::vector<const IdentityRecord*> list(const std::string& filter = "") {
    std::vector<const IdentityRecord*> out;
    for (const auto& r : registry())
        if (matches(r, filter)) out.push_back(&r);
    return out;
}

inline const IdentityRecord& find(const std::string& id) {
    for (const auto& r : registry())
        if (r.id == id) return r;
    throw std::out_of_range("catalog: unknown id " + id);
}

inline VerificationReport evaluate(const IdentityRecord& rec, double tol_override = 0.0) {
    VerificationReport rep;
    rep.id = rec.id;
    const auto t0 = std::chrono::steady_clock::now();
    RunOutput out;
    try {
        out = rec.runner();
    } catch (const std::exception& e) {
        rep.tol = (tol_override > 0.0) ? tol_override : rec.tol;
        rep.pass = false;
        rep.note = std::string("evaluation error: ") + e.what();
        rep.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return rep;
    }
    rep.lhs_value = out.lhs;
    rep.rhs_value = out.rhs;
    rep.abs_diff = std::fabs(out.lhs - out.rhs);
    rep.rel_diff = rep.abs_diff / std::max(1.0, std::fabs(out.rhs));
    // Statistical records pass within 4 sigma; the reported tol keeps
    // the pass <=> abs_diff <= tol * max(1,|rhs|) invariant.
    rep.tol = (out.mc_sigma > 0.0)
                  ? 4.0 * out.mc_sigma / std::max(1.0, std::fabs(out.rhs))
                  : ((tol_override > 0.0) ? tol_override : rec.tol);
    rep.pass = rep.abs_diff <= rep.tol * std::max(1.0, std::fabs(rep.rhs_value));
    rep.diagnostics = (out.mc_sigma > 0.0) ? out.mc_sigma : out.diag;
    rep.note = out.note;
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline VerificationReport evaluate(const std::string& id, double tol_override = 0.0) {
    return evaluate(find(id), tol_override);
}

struct SuiteSummary {
    long total = 0;
    long passed = 0;
    double runtime_ms = 0.0;
};

inline std::pair<std::vector<VerificationReport>, SuiteSummary>
run_suite(const std::string& filter = "", int parallelism = 1) {
    const auto selected = list(filter);
    std::vector<VerificationReport> reports(selected.size());
    if (parallelism < 1) parallelism = 1;
    if (parallelism == 1) {
        for (size_t i = 0; i < selected.size(); ++i) reports[i] = evaluate(*selected[i]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < parallelism; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= selected.size()) return;
                    reports[i] = evaluate(*selected[i]);
                }
            });
        for (auto& th : pool) th.join();
    }
    SuiteSummary s;
    s.total = static_cast<long>(reports.size());
    for (const auto& r : reports) {
        if (r.pass) ++s.passed;
        s.runtime_ms += r.runtime_ms;
    }
    return {std::move(reports), s};
}

} // namespace ellint::catalog

#include "ellint/detail/registry_s1.hpp"
#include "ellint/detail/registry_s2.hpp"
#include "ellint/detail/registry_s3.hpp"
#include "ellint/detail/registry_s4.hpp"
#include "ellint/detail/registry_numeric.hpp"

#endif
