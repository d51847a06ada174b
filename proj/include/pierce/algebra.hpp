#pragma once

#include <memory>
#include <string>

#include "pierce/linsolve.hpp"

namespace pierce {

/// Finite-dimensional associative unital algebra given by structure
/// constants: b_i * b_j = sum_k c[i][j][k] b_k.
class Algebra {
  public:
    using ProdEntry = std::vector<std::pair<long, Scalar>>;  // sorted by k

    Algebra(FieldSpec field, long dim, std::vector<std::string> labels,
            std::vector<ProdEntry> products, Vec unit);

    FieldSpec field() const { return field_; }
    long dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }

    /// b_i * b_j as a coefficient vector entry list.
    const ProdEntry& basis_product(long i, long j) const { return prod_[i * dim_ + j]; }

    Vec multiply(const Vec& x, const Vec& y) const;
    Mat left_mult(const Vec& x) const;   // L_x: v -> x v
    Mat right_mult(const Vec& x) const;  // R_x: v -> v x
    bool is_idempotent(const Vec& x) const;
    bool is_commutative() const;

    std::string str_element(const Vec& x) const;

  private:
    FieldSpec field_;
    long dim_;
    std::vector<std::string> labels_;
    std::vector<ProdEntry> prod_;
    Vec unit_;
};

using AlgP = std::shared_ptr<const Algebra>;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks associativity on all basis triples and both unit laws. In
/// non-strict mode stops at the first violation.
ValidationReport validate_algebra(const Algebra& a, bool strict = true);

/// An algebra element checked to satisfy x*x = x at construction.
struct Idempotent {
    Vec v;
};
Idempotent make_idempotent(const Algebra& a, const Vec& v);

/// One Pierce summand pCq: canonical basis, inclusion into the ambient
/// algebra (columns) and the compression projection.
struct PierceSummand {
    Subspace space;
    Mat inclusion;   // dim(C) x k
    Mat projection;  // k x dim(C), x -> coords of p x q
};

/// An algebra living on a distinguished subspace of an ambient algebra.
struct EmbeddedAlgebra {
    AlgP alg;
    Mat inclusion;   // ambient x k
    Mat projection;  // k x ambient (compression, only meaningful on the subspace)
};

struct PierceData {
    Vec e, e_comp;
    PierceSummand B, M, N, A;  // e'Ce', e'Ce, eCe', eCe in this order
    EmbeddedAlgebra corner_A;  // eCe with unit e
    EmbeddedAlgebra corner_B;  // e'Ce' with unit e'
};

PierceData pierce_decompose(const AlgP& c, const Idempotent& e);

AlgP opposite_algebra(const Algebra& a);
AlgP tensor_algebra(const Algebra& a, const Algebra& b);  // index i*dim(b)+j
AlgP enveloping_algebra(const Algebra& a);                // a^op (x) a

/// Basis of {z : zx = xz for all x}.
Subspace centre(const Algebra& a);

/// Jacobson radical via the trace form, valid in characteristic zero or
/// p > dim; nullopt when the criterion does not apply.
std::optional<Subspace> jacobson_radical(const Algebra& a);

/// Smallest two-sided ideal containing the generators (saturation).
Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens);

struct QuotientAlgebra {
    AlgP alg;
    Mat projection;  // q x dim(a)
    Mat section;     // dim(a) x q, representatives (greedy standard complement)
};

/// Quotient by a verified two-sided ideal; dim 0 is legal.
QuotientAlgebra quotient_algebra(const AlgP& a, const Subspace& ideal);

/// The subalgebra spanned by a multiplicatively closed subspace containing
/// the given unit, with translated structure constants.
EmbeddedAlgebra subalgebra_on_subspace(const AlgP& a, const Subspace& span, const Vec& unit,
                                       std::vector<std::string> labels = {});

}  // namespace pierce
