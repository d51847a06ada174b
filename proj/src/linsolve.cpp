#include "pierce/linsolve.hpp"

#include <algorithm>
#include <map>

namespace pierce {

namespace {

// Sparse row: sorted (col, value) pairs, no zeros.
using SRow = std::vector<std::pair<long, Scalar>>;

SRow srow_of(const Mat& m, long i) {
    SRow r;
    m.for_nonzero([&](long rr, long c, const Scalar& v) {
        if (rr == i) r.push_back({c, v});
    });
    return r;
}

// r -= c * p
void axpy(SRow& r, const Scalar& c, const SRow& p) {
    SRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.push_back({p[j].first, -(c * p[j].second)});
            ++j;
        } else {
            Scalar v = r[i].second - c * p[j].second;
            if (!v.is_zero()) out.push_back({r[i].first, v});
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

void scale_row(SRow& r, const Scalar& c) {
    for (auto& [col, v] : r) v *= c;
}

struct Echelon {
    std::map<long, SRow> pivot_rows;  // pivot col -> normalized row
    long rank() const { return (long)pivot_rows.size(); }

    // Reduce r against all current pivots (leading-term driven).
    void reduce(SRow& r) const {
        size_t i = 0;
        while (i < r.size()) {
            auto it = pivot_rows.find(r[i].first);
            if (it == pivot_rows.end()) {
                ++i;
                continue;
            }
            Scalar c = r[i].second;
            axpy(r, c, it->second);
            // entries before position i are untouched (pivot rows start at
            // their pivot column), so rescan from i
        }
    }

    // Insert row (after reduction); returns pivot col or -1 if row vanished.
    long insert(SRow r, bool full_reduce) {
        reduce(r);
        if (r.empty()) return -1;
        long pc = r[0].first;
        Scalar inv = r[0].second.inverse();
        scale_row(r, inv);
        if (full_reduce) {
            for (auto& [col, prow] : pivot_rows) {
                auto it = std::lower_bound(
                    prow.begin(), prow.end(), pc,
                    [](const std::pair<long, Scalar>& a, long k) { return a.first < k; });
                if (it != prow.end() && it->first == pc) {
                    Scalar c = it->second;
                    axpy(prow, c, r);
                }
            }
        }
        pivot_rows.emplace(pc, std::move(r));
        return pc;
    }
};

Echelon echelonize(const Mat& m, bool full_reduce) {
    std::vector<SRow> rows(m.rows());
    m.for_nonzero([&](long r, long c, const Scalar& v) { rows[r].push_back({c, v}); });
    Echelon e;
    for (auto& r : rows) e.insert(std::move(r), full_reduce);
    return e;
}

}  // namespace

RrefResult rref(const Mat& m) {
    Echelon e = echelonize(m, true);
    RrefResult res;
    res.rank = e.rank();
    std::vector<Mat::Triple> ts;
    long i = 0;
    for (auto& [pc, row] : e.pivot_rows) {
        res.pivot_cols.push_back(pc);
        for (auto& [c, v] : row) ts.push_back({i, c, v});
        ++i;
    }
    res.rref = Mat::from_triples(m.rows(), m.cols(), m.field(), std::move(ts));
    return res;
}

long rank_of(const Mat& m) {
    // eliminate along the short side
    if (m.rows() > m.cols()) return echelonize(m.transpose(), false).rank();
    return echelonize(m, false).rank();
}

Mat kernel_basis(const Mat& m) {
    // Row-eliminate the transpose with an identity tracker: rows of the
    // transpose are columns of m; vanishing rows yield column dependencies,
    // i.e. kernel vectors. The result is canonicalized to RREF rows.
    long n = m.cols();
    std::vector<SRow> rows(n);
    std::vector<SRow> track(n);
    m.for_nonzero([&](long r, long c, const Scalar& v) { rows[c].push_back({r, v}); });
    for (long j = 0; j < n; ++j) track[j].push_back({j, Scalar::one(m.field())});

    std::map<long, std::pair<SRow, SRow>> pivots;  // pivot row-index -> (row, tracker)
    Subspace ker(n, m.field());
    for (long j = 0; j < n; ++j) {
        SRow r = std::move(rows[j]);
        SRow t = std::move(track[j]);
        size_t i = 0;
        while (i < r.size()) {
            auto it = pivots.find(r[i].first);
            if (it == pivots.end()) {
                ++i;
                continue;
            }
            Scalar c = r[i].second;
            axpy(r, c, it->second.first);
            axpy(t, c, it->second.second);
        }
        if (r.empty()) {
            Vec v = vec_zero(n, m.field());
            for (auto& [c, x] : t) v[c] = x;
            ker.insert(v);
        } else {
            Scalar inv = r[0].second.inverse();
            scale_row(r, inv);
            scale_row(t, inv);
            long pc = r[0].first;
            pivots.emplace(pc, std::make_pair(std::move(r), std::move(t)));
        }
    }
    return ker.basis_matrix().transpose();
}

std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
    if ((long)b.size() != m.rows()) throw UsageError("solve_linear: rhs length mismatch");
    Mat aug = Mat::hstack(m, Mat::col_vector(b, m.field()));
    RrefResult r = rref(aug);
    long n = m.cols();
    Vec x = vec_zero(n, m.field());
    for (long i = 0; i < r.rank; ++i) {
        long pc = r.pivot_cols[i];
        if (pc == n) return std::nullopt;  // pivot in the augmented column
        x[pc] = r.rref.at(i, n);
    }
    return x;
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
    if (b.rows() != m.rows()) throw UsageError("solve_matrix: rhs shape mismatch");
    Mat aug = Mat::hstack(m, b);
    RrefResult r = rref(aug);
    long n = m.cols();
    std::vector<Mat::Triple> ts;
    for (long i = 0; i < r.rank; ++i) {
        long pc = r.pivot_cols[i];
        if (pc >= n) return std::nullopt;
    }
    for (long i = 0; i < r.rank; ++i) {
        long pc = r.pivot_cols[i];
        for (long j = 0; j < b.cols(); ++j) {
            Scalar v = r.rref.at(i, n + j);
            if (!v.is_zero()) ts.push_back({pc, j, v});
        }
    }
    return Mat::from_triples(n, b.cols(), m.field(), std::move(ts));
}

Subspace::Subspace(long ambient, const FieldSpec& f) : ambient_(ambient), field_(f) {}

Subspace Subspace::row_span(const Mat& vectors) {
    Subspace s(vectors.cols(), vectors.field());
    for (long i = 0; i < vectors.rows(); ++i) s.insert(vectors.row(i));
    return s;
}

Subspace Subspace::from_vectors(long ambient, const FieldSpec& f, const std::vector<Vec>& vs) {
    Subspace s(ambient, f);
    for (const auto& v : vs) s.insert(v);
    return s;
}

Mat Subspace::basis_matrix() const {
    if (rows_.empty()) return Mat(0, ambient_, field_);
    return Mat::from_rows(ambient_, field_, rows_);
}

Vec Subspace::basis_vector(long i) const { return rows_.at(i); }

Vec Subspace::reduce(const Vec& v) const {
    if ((long)v.size() != ambient_) throw UsageError("subspace: ambient mismatch");
    Vec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (c.is_zero()) continue;
        Scalar cc = c;
        for (long j = 0; j < ambient_; ++j)
            if (!rows_[i][j].is_zero()) r[j] -= cc * rows_[i][j];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains_subspace(const Subspace& o) const {
    for (const auto& r : o.rows_)
        if (!contains(r)) return false;
    return true;
}

bool Subspace::equals(const Subspace& o) const {
    return dim() == o.dim() && contains_subspace(o);
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
    Vec r = v;
    Vec c = vec_zero(dim(), field_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& x = r[pivots_[i]];
        if (x.is_zero()) continue;
        c[i] = x;
        Scalar xx = x;
        for (long j = 0; j < ambient_; ++j)
            if (!rows_[i][j].is_zero()) r[j] -= xx * rows_[i][j];
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return c;
}

Vec Subspace::from_coords(const Vec& c) const {
    if ((long)c.size() != dim()) throw UsageError("subspace: coord length mismatch");
    Vec v = vec_zero(ambient_, field_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (long j = 0; j < ambient_; ++j)
            if (!rows_[i][j].is_zero()) v[j] += c[i] * rows_[i][j];
    }
    return v;
}

bool Subspace::insert(const Vec& v) {
    Vec r = reduce(v);
    long pc = -1;
    for (long j = 0; j < ambient_; ++j)
        if (!r[j].is_zero()) {
            pc = j;
            break;
        }
    if (pc < 0) return false;
    Scalar inv = r[pc].inverse();
    for (auto& x : r) x *= inv;
    // clear the new pivot column in existing rows to stay in RREF
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = rows_[i][pc];
        if (c.is_zero()) continue;
        for (long j = 0; j < ambient_; ++j)
            if (!r[j].is_zero()) rows_[i][j] -= c * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
    long idx = pos - pivots_.begin();
    pivots_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (long i = 0; i < b.dim(); ++i) s.insert(b.basis_vector(i));
    return s;
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw UsageError("intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient(), a.field());
    // x in both spans: solve  coeffsA * A = coeffsB * B, i.e. kernel of
    // [A^T | -B^T].
    Mat at = a.basis_matrix().transpose();
    Mat bt = b.basis_matrix().transpose().scaled(-Scalar::one(a.field()));
    Mat k = kernel_basis(Mat::hstack(at, bt));
    Subspace res(a.ambient(), a.field());
    for (long j = 0; j < k.cols(); ++j) {
        Vec full = k.col(j);
        Vec coeff(full.begin(), full.begin() + a.dim());
        res.insert(a.from_coords(coeff));
    }
    return res;
}

std::vector<long> greedy_standard_complement(const Subspace& s) {
    Subspace cur = s;
    std::vector<long> idx;
    for (long j = 0; j < s.ambient() && cur.dim() < s.ambient(); ++j) {
        Vec e = vec_zero(s.ambient(), s.field());
        e[j] = Scalar::one(s.field());
        if (cur.insert(e)) idx.push_back(j);
    }
    return idx;
}

LinearQuotient quotient_of_space(const Subspace& sub) {
    long n = sub.ambient();
    FieldSpec f = sub.field();
    std::vector<long> compl_idx = greedy_standard_complement(sub);
    long q = (long)compl_idx.size();
    LinearQuotient lq;
    lq.dim = q;
    lq.section = Mat(n, q, f);
    for (long i = 0; i < q; ++i) lq.section.set(compl_idx[i], i, Scalar::one(f));
    lq.section.compact();
    // coordinates: invert [sub basis | representatives]
    std::vector<Vec> cols;
    for (long i = 0; i < sub.dim(); ++i) cols.push_back(sub.basis_vector(i));
    for (long j : compl_idx) {
        Vec e = vec_zero(n, f);
        e[j] = Scalar::one(f);
        cols.push_back(e);
    }
    Mat full = Mat::from_cols(n, f, cols);
    Mat inv = *solve_matrix(full, Mat::identity(n, f));
    lq.projection = Mat(q, n, f);
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < n; ++j) {
            Scalar v = inv.at(sub.dim() + i, j);
            if (!v.is_zero()) lq.projection.set(i, j, v);
        }
    lq.projection.compact();
    return lq;
}

}  // namespace pierce
