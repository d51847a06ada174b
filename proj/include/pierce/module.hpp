#pragma once

#include "pierce/algebra.hpp"

namespace pierce {

// Right actions use column vectors: rho(x) v = v * x. Consequently rho is an
// anti-homomorphism and the structure-constant identity reads
//
//   rho(b_i) rho(b_j) = sum_k c[j][i][k] rho(b_k)          (RIGHT_ACTION_ORDER)
//
// Left actions are genuine homomorphisms: lam(b_i) lam(b_j) = sum_k c[i][j][k] lam(b_k).

/// Unital right module given by action matrices per algebra basis element.
struct RightModule {
    AlgP A;
    long dim = 0;
    std::vector<Mat> rho;
    /// Optional algebra elements generating A as a unital algebra; submodule
    /// saturation may restrict itself to these (empty = all basis elements).
    std::vector<Vec> satgens;

    Mat act(const Vec& x) const;  // rho(x)
};

/// Bimodule: left action lam over L, right action rho over R; either side
/// may be absent (null algebra).
struct Bimodule {
    AlgP L, R;
    long dim = 0;
    std::vector<Mat> lam, rho;

    RightModule right_part() const;
    Mat act_left(const Vec& x) const;
    Mat act_right(const Vec& x) const;
};

RightModule regular_module(const AlgP& A);
Bimodule regular_bimodule(const AlgP& A);
RightModule zero_module(const AlgP& A);
RightModule direct_sum(const RightModule& a, const RightModule& b);

ValidationReport validate_right_module(const RightModule& m);
ValidationReport validate_bimodule(const Bimodule& m);

/// Left L-module as a right module over L^op (op must be opposite_algebra(L)).
RightModule left_as_right(const Bimodule& m, const AlgP& op);

/// Bimodule as a right module over the enveloping/tensor algebra
/// L^op (x) R (index (i,j) -> i*dim(R)+j), with one-sided saturation
/// generators installed.
RightModule bimodule_as_right_over(const Bimodule& m, const AlgP& env);

/// Basis of Hom_A(M, N) in canonical order (matrices dim(N) x dim(M)).
std::vector<Mat> hom_space(const RightModule& M, const RightModule& N);

/// M (x)_A N for M with right A-action and N with left A-action; outer
/// actions descend to the quotient. Pure tensor (u,w) -> u*dim(N)+w.
struct TensorSpace {
    long dim = 0;
    long full_dim = 0;
    Mat projection;  // dim x full_dim
    Mat section;     // full_dim x dim
    Bimodule outer;  // (L of M, R of N) actions on the quotient
};
TensorSpace tensor_over(const Bimodule& M, const Bimodule& N);

/// Induce a map defined on the full tensor space down to the quotient,
/// verifying it kills the relation subspace: returns map * section.
Mat descend_to_tensor(const TensorSpace& t, const Mat& on_full);

/// Trace ideal tau_M(A): span of images of all A-linear maps M -> A.
Subspace trace_ideal(const RightModule& M);
bool is_generator(const RightModule& M);

struct ProjectivityWitness {
    bool projective = false;
    Mat splitting;  // (dim M * dim A) x dim M when projective
};
/// Decides splitting of the free cover A^(dim M) -> M, e_j b -> m_j * b.
ProjectivityWitness is_projective(const RightModule& M);

/// End_A(M) as an algebra under composition, with its hom basis.
struct EndAlgebra {
    AlgP alg;
    std::vector<Mat> maps;
    Vec coords_of(const Mat& endo) const;  // solve in the hom basis
};
EndAlgebra end_algebra(const RightModule& M);

/// Dual module M* = Hom_A(M, A) as a left A-module, with its basis of maps.
struct DualModule {
    Bimodule mod;            // L = A
    std::vector<Mat> maps;   // each dim(A) x dim(M)
};
DualModule dual_module(const RightModule& M);

/// Norm map f : M (x)_A M* -> End_A(M), m (x) l -> (m' -> m * l(m')),
/// with the stable endomorphism ring End/im(f) and the kernel dimension.
struct NormStableEnd {
    EndAlgebra end;
    DualModule dual;
    TensorSpace mmstar;
    Mat norm;              // dim End x mmstar.dim
    Subspace norm_image;   // inside End coordinates (a two-sided ideal)
    QuotientAlgebra stable;
    long omega_dim = 0;
};
NormStableEnd norm_and_stable_end(const RightModule& M);

/// Submodule on an invariant subspace, with translated action.
RightModule submodule(const RightModule& M, const Subspace& s);
RightModule quotient_module(const RightModule& M, const Subspace& s);
Bimodule sub_bimodule(const Bimodule& M, const Subspace& s);
Bimodule quotient_bimodule(const Bimodule& M, const Subspace& s);

/// The subspace V of C as a right module over an embedded corner algebra
/// (action through right multiplication in C by the corner basis).
RightModule corner_right_module(const AlgP& C, const Subspace& V, const EmbeddedAlgebra& corner);
/// Same with a left corner action; either corner may be null.
Bimodule corner_bimodule(const AlgP& C, const Subspace& V, const EmbeddedAlgebra* left,
                         const EmbeddedAlgebra* right);

}  // namespace pierce
