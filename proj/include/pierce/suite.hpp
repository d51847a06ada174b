#pragma once

#include "pierce/corpus.hpp"
#include "pierce/report.hpp"

namespace pierce {

struct SuiteOptions {
    long cutoff = 5;
    BarOptions bar;
    ResolutionLimits res;
};

// One function per acceptance battery block; each returns its checks.
std::vector<Check> battery_axioms_pierce(const SuiteOptions& o);      // ring axioms + closure
std::vector<Check> battery_fundamental(const SuiteOptions& o);        // exactness of the 4-term sequence
std::vector<Check> battery_alpha_grade(const SuiteOptions& o);        // alpha biconditional
std::vector<Check> battery_grade_theorem(const SuiteOptions& o);      // stable-End grade identity
std::vector<Check> battery_hh_agreement(const SuiteOptions& o);       // bar vs enveloping-Ext
std::vector<Check> battery_morita_invariance(const SuiteOptions& o);  // HH of M2(A) vs A
std::vector<Check> battery_chi(const SuiteOptions& o);                // cup compatibility + window
std::vector<Check> battery_rigidity(const SuiteOptions& o);           // HH^2 transfer
std::vector<Check> battery_degeneration(const SuiteOptions& o);       // skew group coefficients
std::vector<Check> battery_invariant_ring(const SuiteOptions& o);     // Noether different battery

Report run_suite(const SuiteOptions& o = {});

}  // namespace pierce
