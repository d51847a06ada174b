#pragma once

#include <string>
#include <vector>

namespace pierce {

/// One named check in a report. Status is one of
/// pass | fail | inapplicable | inconclusive.
struct Check {
    std::string name;
    std::string status;
    std::vector<std::pair<std::string, std::string>> data;

    static Check make(std::string name, bool ok) {
        return Check{std::move(name), ok ? "pass" : "fail", {}};
    }
    Check& with(const std::string& k, const std::string& v) {
        data.push_back({k, v});
        return *this;
    }
    Check& with(const std::string& k, long v) { return with(k, std::to_string(v)); }
};

struct Report {
    std::string command;
    long cutoff = 0;
    std::vector<Check> checks;
    long wall_ms = 0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

// Frozen registry of check names; downstream tooling keys on these strings.
namespace checkname {
inline constexpr const char* axioms = "axioms-validate";
inline constexpr const char* pierce_closure = "pierce-closure";
inline constexpr const char* fund_exact = "fund-seq-exact";
inline constexpr const char* fund_annihilation = "fund-seq-e-annihilation";
inline constexpr const char* fund_omega_tor2 = "fund-seq-omega-tor2";
inline constexpr const char* prop_1_9 = "prop-1.9-package";
inline constexpr const char* prop_2_9 = "prop-2.9-alpha-grade";
inline constexpr const char* lem_2_11 = "lem-2.11-ext-shift";
inline constexpr const char* lem_2_12 = "lem-2.12-tor";
inline constexpr const char* thm_2_13 = "thm-2.13-grade";
inline constexpr const char* cor_2_14 = "cor-2.14-gldim";
inline constexpr const char* prop_2_16 = "prop-2.16-wedderburn";
inline constexpr const char* hh_agreement = "hh-method-agreement";
inline constexpr const char* prop_5_1 = "prop-5.1-morita-invariance";
inline constexpr const char* thm_4_7 = "thm-4.7-cup-compatibility";
inline constexpr const char* thm_5_5 = "thm-5.5-chi-window";
inline constexpr const char* lem_5_3 = "lem-5.3-relative-homology";
inline constexpr const char* cor_5_6 = "cor-5.6-centres";
inline constexpr const char* rigidity = "cor-5.7-rigidity";
inline constexpr const char* skew_invariants = "sg-structure";
inline constexpr const char* prop_6_15 = "prop-6.15-separability";
inline constexpr const char* lem_6_10 = "lem-6.10-centre-SG";
inline constexpr const char* thm_6_17 = "thm-6.17-degeneration";
inline constexpr const char* prop_7_1 = "prop-7.1-annihilation";
inline constexpr const char* cor_7_2 = "cor-7.2-grade-depth";
inline constexpr const char* lem_7_3 = "lem-7.3-ext-vanishing";
inline constexpr const char* thm_7_5 = "thm-7.5-invariant-hh";
inline constexpr const char* thm_7_5_ext = "thm-7.5-ext-R";
inline constexpr const char* cor_6_18 = "cor-6.18-hh-R-SG";
inline constexpr const char* determinism = "suite-determinism";
}  // namespace checkname

}  // namespace pierce
