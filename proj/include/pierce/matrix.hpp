#pragma once

#include <vector>

#include "pierce/scalar.hpp"

namespace pierce {

using Vec = std::vector<Scalar>;

Vec vec_zero(long n, const FieldSpec& f);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

/// Exact matrix over Q or F_p.
///
/// Storage is dense (row-major) or sparse coordinate triples, chosen by
/// density on compact(); results of all operations are independent of the
/// representation. Sparse form holds no explicit zeros and no duplicates.
class Mat {
  public:
    struct Triple {
        long r, c;
        Scalar v;
    };

    Mat() = default;
    Mat(long rows, long cols, const FieldSpec& f);

    static Mat identity(long n, const FieldSpec& f);
    static Mat from_triples(long rows, long cols, const FieldSpec& f,
                            std::vector<Triple> triples);
    static Mat from_cols(long rows, const FieldSpec& f, const std::vector<Vec>& cols);
    static Mat from_rows(long cols, const FieldSpec& f, const std::vector<Vec>& rows);
    static Mat col_vector(const Vec& v, const FieldSpec& f);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    FieldSpec field() const { return field_; }
    bool is_sparse() const { return sparse_; }
    long nnz() const;

    Scalar at(long r, long c) const;
    void set(long r, long c, const Scalar& v);
    void add_at(long r, long c, const Scalar& v) { set(r, c, at(r, c) + v); }

    /// Re-choose the representation: sparse iff density <= threshold().
    void compact();
    void to_dense();

    /// Density cut-over for compact(); default 0.25.
    static double threshold();
    static void set_threshold(double t);

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool is_zero() const { return nnz() == 0; }

    Vec apply(const Vec& v) const;  // matrix * column vector
    Vec col(long j) const;
    Vec row(long i) const;
    Mat cols_subset(const std::vector<long>& idx) const;

    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);

    /// Visit nonzero entries in row-major order.
    template <class F>
    void for_nonzero(F&& fn) const {
        if (sparse_) {
            for (const auto& t : trip_) fn(t.r, t.c, t.v);
        } else {
            for (long i = 0; i < rows_; ++i)
                for (long j = 0; j < cols_; ++j) {
                    const Scalar& v = dense_[i * cols_ + j];
                    if (!v.is_zero()) fn(i, j, v);
                }
        }
    }

    std::string str() const;

  private:
    friend Mat kron(const Mat& a, const Mat& b);
    long rows_ = 0, cols_ = 0;
    FieldSpec field_;
    bool sparse_ = false;
    std::vector<Scalar> dense_;
    std::vector<Triple> trip_;  // sorted row-major, no zeros
};

/// Kronecker product with index convention (i,j) -> i * cols(b) + j.
Mat kron(const Mat& a, const Mat& b);

/// Row-major flattening of a matrix into a vector, and back.
Vec flatten(const Mat& m);
Mat unflatten(long rows, long cols, const FieldSpec& f, const Vec& v);

}  // namespace pierce
