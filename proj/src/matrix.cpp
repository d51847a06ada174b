#include "pierce/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace pierce {

Vec vec_zero(long n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw UsageError("vector length mismatch");
    Vec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

namespace {
std::atomic<double> g_threshold{0.25};
}

double Mat::threshold() { return g_threshold.load(); }
void Mat::set_threshold(double t) { g_threshold.store(t); }

Mat::Mat(long rows, long cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), sparse_(true) {}

Mat Mat::identity(long n, const FieldSpec& f) {
    Mat m(n, n, f);
    for (long i = 0; i < n; ++i) m.trip_.push_back({i, i, Scalar::one(f)});
    m.compact();
    return m;
}

Mat Mat::from_triples(long rows, long cols, const FieldSpec& f, std::vector<Triple> ts) {
    Mat m(rows, cols, f);
    std::sort(ts.begin(), ts.end(), [](const Triple& a, const Triple& b) {
        return a.r != b.r ? a.r < b.r : a.c < b.c;
    });
    for (auto& t : ts) {
        if (t.r < 0 || t.r >= rows || t.c < 0 || t.c >= cols)
            throw UsageError("triple out of range");
        if (!m.trip_.empty() && m.trip_.back().r == t.r && m.trip_.back().c == t.c)
            m.trip_.back().v += t.v;
        else
            m.trip_.push_back(std::move(t));
    }
    std::erase_if(m.trip_, [](const Triple& t) { return t.v.is_zero(); });
    m.compact();
    return m;
}

Mat Mat::from_cols(long rows, const FieldSpec& f, const std::vector<Vec>& cols) {
    Mat m(rows, (long)cols.size(), f);
    m.sparse_ = false;
    m.dense_.assign(rows * cols.size(), Scalar::zero(f));
    for (long j = 0; j < (long)cols.size(); ++j) {
        if ((long)cols[j].size() != rows) throw UsageError("column length mismatch");
        for (long i = 0; i < rows; ++i) m.dense_[i * m.cols_ + j] = cols[j][i];
    }
    m.compact();
    return m;
}

Mat Mat::from_rows(long cols, const FieldSpec& f, const std::vector<Vec>& rows) {
    Mat m((long)rows.size(), cols, f);
    m.sparse_ = false;
    m.dense_.assign(rows.size() * cols, Scalar::zero(f));
    for (long i = 0; i < (long)rows.size(); ++i) {
        if ((long)rows[i].size() != cols) throw UsageError("row length mismatch");
        for (long j = 0; j < cols; ++j) m.dense_[i * cols + j] = rows[i][j];
    }
    m.compact();
    return m;
}

Mat Mat::col_vector(const Vec& v, const FieldSpec& f) {
    return from_cols((long)v.size(), f, {v});
}

long Mat::nnz() const {
    if (sparse_) return (long)trip_.size();
    long n = 0;
    for (const auto& v : dense_)
        if (!v.is_zero()) ++n;
    return n;
}

Scalar Mat::at(long r, long c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw UsageError("matrix index out of range");
    if (!sparse_) return dense_[r * cols_ + c];
    auto it = std::lower_bound(trip_.begin(), trip_.end(), std::pair<long, long>{r, c},
                               [](const Triple& t, const std::pair<long, long>& k) {
                                   return t.r != k.first ? t.r < k.first : t.c < k.second;
                               });
    if (it != trip_.end() && it->r == r && it->c == c) return it->v;
    return Scalar::zero(field_);
}

void Mat::set(long r, long c, const Scalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw UsageError("matrix index out of range");
    if (!sparse_) {
        dense_[r * cols_ + c] = v;
        return;
    }
    auto it = std::lower_bound(trip_.begin(), trip_.end(), std::pair<long, long>{r, c},
                               [](const Triple& t, const std::pair<long, long>& k) {
                                   return t.r != k.first ? t.r < k.first : t.c < k.second;
                               });
    if (it != trip_.end() && it->r == r && it->c == c) {
        if (v.is_zero())
            trip_.erase(it);
        else
            it->v = v;
    } else if (!v.is_zero()) {
        trip_.insert(it, {r, c, v});
    }
}

void Mat::compact() {
    long cells = rows_ * cols_;
    if (cells == 0) return;
    double density = (double)nnz() / (double)cells;
    bool want_sparse = density <= threshold();
    if (want_sparse == sparse_) return;
    if (want_sparse) {
        trip_.clear();
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                if (!dense_[i * cols_ + j].is_zero())
                    trip_.push_back({i, j, dense_[i * cols_ + j]});
        dense_.clear();
        sparse_ = true;
    } else {
        to_dense();
    }
}

void Mat::to_dense() {
    if (!sparse_) return;
    dense_.assign(rows_ * cols_, Scalar::zero(field_));
    for (const auto& t : trip_) dense_[t.r * cols_ + t.c] = t.v;
    trip_.clear();
    sparse_ = false;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix shape mismatch in +");
    std::vector<Triple> ts;
    for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r, c, v}); });
    o.for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r, c, v}); });
    return from_triples(rows_, cols_, field_, std::move(ts));
}

Mat Mat::operator-(const Mat& o) const { return *this + o.scaled(-Scalar::one(field_)); }

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix shape mismatch in *");
    // accumulate rows of the result from sparse rows of *this
    std::vector<std::vector<std::pair<long, Scalar>>> orows(o.rows_);
    o.for_nonzero([&](long r, long c, const Scalar& v) { orows[r].push_back({c, v}); });
    Mat res(rows_, o.cols_, field_);
    res.sparse_ = false;
    res.dense_.assign(rows_ * o.cols_, Scalar::zero(field_));
    for_nonzero([&](long r, long k, const Scalar& v) {
        for (const auto& [c, w] : orows[k]) res.dense_[r * o.cols_ + c] += v * w;
    });
    res.compact();
    return res;
}

Mat Mat::scaled(const Scalar& c) const {
    std::vector<Triple> ts;
    for_nonzero([&](long r, long cc, const Scalar& v) { ts.push_back({r, cc, v * c}); });
    return from_triples(rows_, cols_, field_, std::move(ts));
}

Mat Mat::transpose() const {
    std::vector<Triple> ts;
    for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({c, r, v}); });
    return from_triples(cols_, rows_, field_, std::move(ts));
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    return (*this - o).nnz() == 0;
}

Vec Mat::apply(const Vec& v) const {
    if ((long)v.size() != cols_) throw UsageError("matrix/vector shape mismatch");
    Vec r = vec_zero(rows_, field_);
    for_nonzero([&](long i, long j, const Scalar& x) {
        if (!v[j].is_zero()) r[i] += x * v[j];
    });
    return r;
}

Vec Mat::col(long j) const {
    Vec r = vec_zero(rows_, field_);
    for_nonzero([&](long i, long c, const Scalar& x) {
        if (c == j) r[i] = x;
    });
    return r;
}

Vec Mat::row(long i) const {
    Vec r = vec_zero(cols_, field_);
    for_nonzero([&](long rr, long c, const Scalar& x) {
        if (rr == i) r[c] = x;
    });
    return r;
}

Mat Mat::cols_subset(const std::vector<long>& idx) const {
    std::vector<long> pos(cols_, -1);
    for (long j = 0; j < (long)idx.size(); ++j) pos[idx[j]] = j;
    std::vector<Triple> ts;
    for_nonzero([&](long r, long c, const Scalar& v) {
        if (pos[c] >= 0) ts.push_back({r, pos[c], v});
    });
    return from_triples(rows_, (long)idx.size(), field_, std::move(ts));
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_) throw UsageError("hstack row mismatch");
    std::vector<Triple> ts;
    a.for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r, c, v}); });
    b.for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r, c + a.cols_, v}); });
    return from_triples(a.rows_, a.cols_ + b.cols_, a.field_, std::move(ts));
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols_ != b.cols_) throw UsageError("vstack col mismatch");
    std::vector<Triple> ts;
    a.for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r, c, v}); });
    b.for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r + a.rows_, c, v}); });
    return from_triples(a.rows_ + b.rows_, a.cols_, a.field_, std::move(ts));
}

Mat kron(const Mat& a, const Mat& b) {
    std::vector<Mat::Triple> ts;
    a.for_nonzero([&](long i, long j, const Scalar& u) {
        b.for_nonzero([&](long k, long l, const Scalar& v) {
            ts.push_back({i * b.rows() + k, j * b.cols() + l, u * v});
        });
    });
    return Mat::from_triples(a.rows() * b.rows(), a.cols() * b.cols(), a.field(), std::move(ts));
}

Vec flatten(const Mat& m) {
    Vec v = vec_zero(m.rows() * m.cols(), m.field());
    m.for_nonzero([&](long r, long c, const Scalar& x) { v[r * m.cols() + c] = x; });
    return v;
}

Mat unflatten(long rows, long cols, const FieldSpec& f, const Vec& v) {
    std::vector<Mat::Triple> ts;
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (!v[i * cols + j].is_zero()) ts.push_back({i, j, v[i * cols + j]});
    return Mat::from_triples(rows, cols, f, std::move(ts));
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (long j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

}  // namespace pierce
