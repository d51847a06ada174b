// Acceptance battery: one line per criterion, exact arithmetic throughout.
// Exit status 0 iff every criterion passes within its time budget.

#include <chrono>
#include <cstdio>
#include <functional>

#include "pierce/io.hpp"
#include "pierce/suite.hpp"

using namespace pierce;

namespace {

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int failures = 0;

void criterion(const std::string& name, double limit_s,
               const std::function<std::vector<Check>(const SuiteOptions&)>& battery,
               const SuiteOptions& opts) {
    Clock c;
    bool ok = true;
    std::string why;
    try {
        auto checks = battery(opts);
        for (const auto& ch : checks)
            if (ch.status == "fail") {
                ok = false;
                why += ch.name + " ";
                for (const auto& [k, v] : ch.data) why += k + "=" + v + " ";
            }
    } catch (const std::exception& e) {
        ok = false;
        why = e.what();
    }
    double t = c.secs();
    bool in_time = t < limit_s;
    if (!ok || !in_time) ++failures;
    std::printf("[%s] %-38s %7.2fs (limit %.0fs)%s%s\n", ok && in_time ? "PASS" : "FAIL",
                name.c_str(), t, limit_s, why.empty() ? "" : "  -- ", why.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    SuiteOptions opts;  // cutoff 5, bar cap 200000, resolution cap 20000
    Clock total;

    {
        Clock warm;
        corpus::context_corpus();  // shared fixtures, built once
        std::printf("[....] %-38s %7.2fs\n", "fixture-setup (shared)", warm.secs());
    }

    criterion("1-ring-axioms-and-pierce", 5, battery_axioms_pierce, opts);
    criterion("2-fundamental-sequence", 30, battery_fundamental, opts);
    criterion("3-alpha-grade-biconditional", 60, battery_alpha_grade, opts);
    criterion("4-stable-end-grade-theorem", 120, battery_grade_theorem, opts);
    criterion("5-hh-method-agreement", 120, battery_hh_agreement, opts);
    criterion("6-morita-invariance", 120, battery_morita_invariance, opts);
    criterion("7-chi-cup-and-window", 180, battery_chi, opts);
    criterion("8-rigidity-transfer", 60, battery_rigidity, opts);
    criterion("9-skew-degeneration", 120, battery_degeneration, opts);
    criterion("10-invariant-ring-battery", 60, battery_invariant_ring, opts);

    {
        Clock c;
        Report r1 = run_suite(opts);
        Report r2 = run_suite(opts);
        r1.wall_ms = 0;
        r2.wall_ms = 0;
        bool same = report_to_json(r1) == report_to_json(r2);
        bool in_time = total.secs() < 600;
        if (!same || !in_time) ++failures;
        std::printf("[%s] %-38s %7.2fs (suite twice; total %.2fs < 600s)\n",
                    same && in_time ? "PASS" : "FAIL", "11-suite-determinism", c.secs(),
                    total.secs());
    }

    std::printf("%s: %d criterion(s) failed, total %.2fs\n", failures == 0 ? "OK" : "FAILED",
                failures, total.secs());
    return failures == 0 ? 0 : 1;
}
