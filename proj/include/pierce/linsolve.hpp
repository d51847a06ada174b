#pragma once

#include <optional>

#include "pierce/matrix.hpp"

namespace pierce {

struct RrefResult {
    Mat rref;                      // same shape, fully reduced
    std::vector<long> pivot_cols;  // increasing
    long rank = 0;
};

/// Unique reduced row echelon form (pivoting is internal; the result is the
/// canonical RREF of the row space, so it is representation-independent).
RrefResult rref(const Mat& m);

long rank_of(const Mat& m);

/// Basis of the right null space {x : m x = 0}, returned as columns in
/// canonical (RREF-of-rows) form. Column count == cols(m) - rank(m).
Mat kernel_basis(const Mat& m);

/// Exact solution of m x = b with free variables set to zero, or nullopt
/// when the system is inconsistent. Shape mismatch is a usage error.
std::optional<Vec> solve_linear(const Mat& m, const Vec& b);

/// Solve m X = B columnwise; nullopt if any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& b);

/// A linear subspace of K^n held as a canonical RREF row basis.
class Subspace {
  public:
    Subspace() = default;
    Subspace(long ambient, const FieldSpec& f);
    static Subspace row_span(const Mat& vectors);
    static Subspace from_vectors(long ambient, const FieldSpec& f, const std::vector<Vec>& vs);

    long ambient() const { return ambient_; }
    long dim() const { return (long)rows_.size(); }
    FieldSpec field() const { return field_; }

    Mat basis_matrix() const;              // dim x ambient
    Vec basis_vector(long i) const;
    const std::vector<long>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains_subspace(const Subspace& o) const;
    bool equals(const Subspace& o) const;

    /// Coordinates of v in the basis rows (nullopt if v is outside).
    std::optional<Vec> coords(const Vec& v) const;
    Vec from_coords(const Vec& c) const;

    /// Insert a vector; returns true if the dimension grew.
    bool insert(const Vec& v);

  private:
    long ambient_ = 0;
    FieldSpec field_;
    std::vector<Vec> rows_;      // dense rows, RREF
    std::vector<long> pivots_;   // increasing, parallel to rows_
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Indices of standard basis vectors extending s to all of K^n, chosen by
/// greedy scan in index order.
std::vector<long> greedy_standard_complement(const Subspace& s);

/// Rescale a rational vector to coprime integers with a positive leading
/// entry (no-op over F_p beyond leading-entry normalization).
Vec make_primitive(const Vec& v);

/// K^n modulo a subspace: projection onto greedy-complement coordinates and
/// the representative section (projection * section = identity).
struct LinearQuotient {
    long dim = 0;
    Mat projection;  // dim x n
    Mat section;     // n x dim
};
LinearQuotient quotient_of_space(const Subspace& sub);

}  // namespace pierce
