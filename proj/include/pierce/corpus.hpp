#pragma once

#include "pierce/skew.hpp"

namespace pierce::corpus {

// dim <= 9 test algebras over Q
AlgP rationals();     // Q
AlgP dual_numbers();  // Q[x]/(x^2), basis {1, x}
AlgP qx3();           // Q[x]/(x^3), basis {1, x, x^2}
AlgP qu2();           // Q[u]/(u^2), basis {1, u}
AlgP ut2();           // upper triangular 2x2, basis {E11, E12, E22}
AlgP m2q();           // M_2(Q), basis {E11, E12, E21, E22}
AlgP q2();            // Q x Q
AlgP q3();            // Q x Q x Q
AlgP qsqrt2();        // {1, s} with s^2 = 2
AlgP a2path();        // path algebra of 1 -> 2, basis {e1, e2, a}

struct Named {
    std::string name;
    AlgP alg;
};
std::vector<Named> base_algebras();

// distinguished modules
RightModule simple_module(const AlgP& A, long which);  // see corpus.cpp
RightModule dual_simple();                             // over dual_numbers
RightModule qx3_simple();
RightModule qx3_middle();   // Q[x]/(x^2) as a module over Q[x]/(x^3)
RightModule ut2_proj_simple();   // span{E22}
RightModule ut2_other_simple();  // top of the other projective
RightModule m2q_rows();          // the 2-dimensional simple

// group actions
GroupAction z2_on_qx3();     // x -> -x
GroupAction z3_on_q3();      // cyclic shift
GroupAction z2_on_qsqrt2();  // s -> -s
GroupAction trivial_on(const AlgP& S);
GroupAction trivial_z2_f2();  // Z/2 acting trivially on F_2

struct NamedContext {
    std::string name;
    MoritaContext ctx;
};
/// The designated (C, e) corpus: matrix, triangular, path, tensor and
/// Auslander contexts plus the two skew-group contexts.
std::vector<NamedContext> context_corpus();

struct GeneratorPair {
    std::string name;
    AlgP A;
    RightModule M;
};
/// Generator pairs (A, M) with M = A + X; at least eight of them.
std::vector<GeneratorPair> generator_pairs();

SkewGroupData fixture_sg_qx3();  // Q[x]/(x^3) x| Z/2
SkewGroupData fixture_sg_q3();   // Q^3 x| Z/3

}  // namespace pierce::corpus
