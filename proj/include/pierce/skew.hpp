#pragma once

#include "pierce/hochschild.hpp"

namespace pierce {

/// Finite group as a multiplication table (entries are element indices).
struct FiniteGroup {
    long order = 0;
    std::vector<std::vector<long>> table;  // table[g][h] = g*h
    long identity = 0;
    std::vector<long> inverse;

    long mul(long g, long h) const { return table[g][h]; }
};
FiniteGroup make_group(std::vector<std::vector<long>> table);
FiniteGroup cyclic_group(long n);

/// Action of a finite group on an algebra S by algebra automorphisms.
struct GroupAction {
    FiniteGroup G;
    AlgP S;
    std::vector<Mat> mats;  // per element
};
ValidationReport validate_action(const GroupAction& act);

/// Skew group algebra SG on basis (s_i, g) -> g*dim(S)+i, with
/// (s g)(s' g') = s g(s') gg'. Carries the embedding of S, the element
/// f = sum_g g, and the invariant ring R = S^G.
struct SkewGroupData {
    GroupAction action;
    AlgP SG;
    Mat embed_S;              // dim SG x dim S
    std::vector<Vec> group_elements;  // embedded g's
    Vec f;                    // sum of group elements
    Subspace R_space;         // invariants, as a subspace of S
    EmbeddedAlgebra R;        // invariant ring as an algebra embedded in S
};
SkewGroupData build_skew_group(const GroupAction& act);

struct TraceReport {
    Mat trace;            // dim S x dim S, s -> sum_g g(s)
    bool image_in_R = false;
    bool surjective_onto_R = false;
    bool order_invertible = false;  // |G| invertible in the ground field
};
TraceReport trace_and_invariants(const SkewGroupData& sg);

struct OuterReport {
    bool outer = false;
    long witness_g = -1;  // a non-identity g with nonzero centralizer twist
    Vec witness_s;        // s' with s s' = s' g(s) for all s
    bool crosscheck_ok = false;  // (SG)^S == embedded S, computed independently
};
OuterReport infinitesimally_outer(const SkewGroupData& sg);

struct CentreSGReport {
    bool applicable = false;  // requires infinitesimally outer
    long dim_centre_SG = -1;
    long dim_centre_S_fixed = -1;
    bool match = false;
    bool equals_R = false;  // for commutative S
};
CentreSGReport centre_of_SG_check(const SkewGroupData& sg);

/// Noether different theta(S/R) for commutative S over a unital subalgebra
/// R: image of the S-invariants of S (x)_R S under multiplication.
struct NoetherDifferent {
    TensorSpace SxS;      // S (x)_R S with outer (S,S) actions
    Subspace invariants;  // (S (x)_R S)^S, in tensor coordinates
    Mat mu;               // multiplication S (x)_R S -> S
    Subspace theta;       // ideal in S
};
NoetherDifferent noether_different(const AlgP& S, const EmbeddedAlgebra& R);

struct SeparabilityReport {
    bool separable = false;
    Vec splitting;            // bimodule section of mu, in hom coordinates (empty if none)
    bool theta_check_ok = false;  // separable <=> theta == Z(S), for commutative S
};
SeparabilityReport separability_check(const AlgP& S, const EmbeddedAlgebra& R);

/// The Morita context End_SG(fS + SG) with e the projection onto fS, so
/// eCe is the invariant ring R. fS is realized on the underlying space of S.
struct SGContext {
    MoritaContext ctx;
    RightModule fS;             // right SG-module on the space of S
    bool corner_is_R = false;   // End_SG(fS) = R via r -> left multiplication
    QuotientAlgebra SGbar;      // SG / (f)
    GradeBound grade_SGbar;     // over SG
    bool defect_matches = false;        // dim Cbar == dim SGbar
    bool defect_p_matches = false;      // dim Cbar' == dim R - rank(tr)
};
SGContext sg_context_and_defect(const SkewGroupData& sg, long cutoff);

struct DegenerationReport {
    bool applicable = false;  // |G| invertible
    std::vector<long> lhs;    // dim HH^i(SG, M)
    std::vector<long> rhs;    // dim HH^i(S, M)^G
    long checked_to = -1;
    bool equal = false;
    bool action_commutes = true;  // G-action on cochains commutes with d
};
DegenerationReport verify_degeneration(const SkewGroupData& sg, const Bimodule& coeff_SG,
                                       long cutoff, BarOptions opt = {});

struct InvariantComparisonReport {
    // hypothesis flags
    bool commutative = false, order_invertible = false, outer = false;
    // (a) theta(S/R) annihilates SGbar
    bool annihilation = false;
    // (b) grade_SG(SGbar) >= depth(theta, S)
    GradeBound grade_SGbar, depth_theta;
    std::string grade_vs_depth;  // pass | fail | inconclusive
    // (c) Ext^i_{S^ev}(S, Sg) = 0 for g != identity, i < depth
    std::string ext_sg_vanishing;  // pass | fail | inapplicable | inconclusive
    // (d) dim HH^i(S)^G == dim HH^i(R) for i <= depth - 2
    std::string hh_invariants;     // pass | fail | inapplicable
    std::vector<long> hhS_fixed, hhR;
    // (e) Ext^j_R(S,S) = 0 for 1 <= j <= grade - 2
    std::string ext_R_vanishing;
};
InvariantComparisonReport verify_invariant_comparison(const SkewGroupData& sg, long cutoff,
                                                      BarOptions opt = {});

/// G-action on Hochschild cochains of S with values in an SG-bimodule
/// restricted to S: (g.phi)(a_1..a_n) = theta_g(phi(g^{-1}a_1,..,g^{-1}a_n))
/// where theta_g is conjugation by the embedded group element (or the plain
/// automorphism when the coefficients are S itself).
std::vector<long> hh_fixed_dims(const SkewGroupData& sg, const Bimodule& coeff_over_S,
                                const std::vector<Mat>& value_action, long nmax, BarOptions opt,
                                bool* commutes = nullptr);

}  // namespace pierce
