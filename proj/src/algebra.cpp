#include "pierce/algebra.hpp"

#include <sstream>

namespace pierce {

Algebra::Algebra(FieldSpec field, long dim, std::vector<std::string> labels,
                 std::vector<ProdEntry> products, Vec unit)
    : field_(field), dim_(dim), labels_(std::move(labels)), prod_(std::move(products)),
      unit_(std::move(unit)) {
    if ((long)prod_.size() != dim_ * dim_) throw UsageError("algebra: product table size mismatch");
    if ((long)unit_.size() != dim_) throw UsageError("algebra: unit length mismatch");
    if (labels_.empty()) {
        for (long i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if ((long)labels_.size() != dim_) throw UsageError("algebra: label count mismatch");
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    if ((long)x.size() != dim_ || (long)y.size() != dim_)
        throw UsageError("algebra: element length mismatch");
    Vec r = vec_zero(dim_, field_);
    for (long i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : basis_product(i, j)) r[k] += c * v;
        }
    }
    return r;
}

Mat Algebra::left_mult(const Vec& x) const {
    std::vector<Mat::Triple> ts;
    for (long i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (long j = 0; j < dim_; ++j)
            for (const auto& [k, v] : basis_product(i, j)) ts.push_back({k, j, x[i] * v});
    }
    return Mat::from_triples(dim_, dim_, field_, std::move(ts));
}

Mat Algebra::right_mult(const Vec& x) const {
    std::vector<Mat::Triple> ts;
    for (long j = 0; j < dim_; ++j) {
        if (x[j].is_zero()) continue;
        for (long i = 0; i < dim_; ++i)
            for (const auto& [k, v] : basis_product(i, j)) ts.push_back({k, i, x[j] * v});
    }
    return Mat::from_triples(dim_, dim_, field_, std::move(ts));
}

bool Algebra::is_idempotent(const Vec& x) const {
    return vec_is_zero(vec_sub(multiply(x, x), x));
}

bool Algebra::is_commutative() const {
    for (long i = 0; i < dim_; ++i)
        for (long j = i + 1; j < dim_; ++j) {
            Vec e_i = vec_zero(dim_, field_), e_j = vec_zero(dim_, field_);
            e_i[i] = Scalar::one(field_);
            e_j[j] = Scalar::one(field_);
            if (!vec_is_zero(vec_sub(multiply(e_i, e_j), multiply(e_j, e_i)))) return false;
        }
    return true;
}

std::string Algebra::str_element(const Vec& x) const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        os << (first ? "" : " + ") << x[i].str() << "*" << labels_[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ValidationReport validate_algebra(const Algebra& a, bool strict) {
    ValidationReport rep;
    long d = a.dim();
    FieldSpec f = a.field();
    auto basis = [&](long i) {
        Vec v = vec_zero(d, f);
        v[i] = Scalar::one(f);
        return v;
    };
    for (long i = 0; i < d; ++i) {
        Vec bi = basis(i);
        if (!vec_is_zero(vec_sub(a.multiply(a.unit(), bi), bi))) {
            rep.ok = false;
            rep.violations.push_back("unit*b" + std::to_string(i) + " != b" + std::to_string(i));
            if (!strict) return rep;
        }
        if (!vec_is_zero(vec_sub(a.multiply(bi, a.unit()), bi))) {
            rep.ok = false;
            rep.violations.push_back("b" + std::to_string(i) + "*unit != b" + std::to_string(i));
            if (!strict) return rep;
        }
    }
    for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
            // (b_i b_j) precomputed; compare (b_i b_j) b_k with b_i (b_j b_k)
            Vec bij = vec_zero(d, f);
            for (const auto& [k, v] : a.basis_product(i, j)) bij[k] = v;
            for (long k = 0; k < d; ++k) {
                Vec bk = basis(k);
                Vec lhs = a.multiply(bij, bk);
                Vec bjk = vec_zero(d, f);
                for (const auto& [m, v] : a.basis_product(j, k)) bjk[m] = v;
                Vec bi = basis(i);
                Vec rhs = a.multiply(bi, bjk);
                if (!vec_is_zero(vec_sub(lhs, rhs))) {
                    rep.ok = false;
                    rep.violations.push_back("associativity fails at (" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k) + ")");
                    if (!strict) return rep;
                }
            }
        }
    }
    return rep;
}

Idempotent make_idempotent(const Algebra& a, const Vec& v) {
    if (!a.is_idempotent(v)) throw ValidationError("element is not idempotent");
    return Idempotent{v};
}

namespace {

PierceSummand summand_of(const Algebra& c, const Vec& p, const Vec& q) {
    long d = c.dim();
    Mat proj = c.left_mult(p) * c.right_mult(q);  // x -> p x q
    Subspace sp(d, c.field());
    for (long j = 0; j < d; ++j) sp.insert(proj.col(j));
    Mat incl = sp.basis_matrix().transpose();
    // projection: coords of p x q in the summand basis
    std::vector<Vec> rows;
    Mat proj_coord(sp.dim(), d, c.field());
    for (long j = 0; j < d; ++j) {
        auto co = sp.coords(proj.col(j));
        for (long i = 0; i < sp.dim(); ++i) proj_coord.set(i, j, (*co)[i]);
    }
    proj_coord.compact();
    return PierceSummand{std::move(sp), std::move(incl), std::move(proj_coord)};
}

}  // namespace

EmbeddedAlgebra subalgebra_on_subspace(const AlgP& a, const Subspace& span, const Vec& unit,
                                       std::vector<std::string> labels) {
    long k = span.dim();
    if (!span.contains(unit)) throw ValidationError("subalgebra: unit not inside the subspace");
    std::vector<Algebra::ProdEntry> prods(k * k);
    for (long i = 0; i < k; ++i) {
        Vec bi = span.basis_vector(i);
        for (long j = 0; j < k; ++j) {
            Vec p = a->multiply(bi, span.basis_vector(j));
            auto co = span.coords(p);
            if (!co) throw ValidationError("subalgebra: subspace not closed under multiplication");
            Algebra::ProdEntry e;
            for (long m = 0; m < k; ++m)
                if (!(*co)[m].is_zero()) e.push_back({m, (*co)[m]});
            prods[i * k + j] = std::move(e);
        }
    }
    Vec u = *span.coords(unit);
    auto alg = std::make_shared<Algebra>(a->field(), k, std::move(labels), std::move(prods),
                                         std::move(u));
    Mat incl = span.basis_matrix().transpose();
    Mat proj(k, a->dim(), a->field());
    for (long j = 0; j < a->dim(); ++j) {
        Vec ej = vec_zero(a->dim(), a->field());
        ej[j] = Scalar::one(a->field());
        Vec red = vec_sub(ej, span.reduce(ej));  // the part of e_j inside the span
        auto co = span.coords(red);
        for (long i = 0; i < k; ++i) proj.set(i, j, (*co)[i]);
    }
    proj.compact();
    return EmbeddedAlgebra{alg, std::move(incl), std::move(proj)};
}

PierceData pierce_decompose(const AlgP& c, const Idempotent& e) {
    const Vec& ev = e.v;
    Vec ec = vec_sub(c->unit(), ev);
    PierceData pd;
    pd.e = ev;
    pd.e_comp = ec;
    pd.B = summand_of(*c, ec, ec);
    pd.M = summand_of(*c, ec, ev);
    pd.N = summand_of(*c, ev, ec);
    pd.A = summand_of(*c, ev, ev);
    long total = pd.B.space.dim() + pd.M.space.dim() + pd.N.space.dim() + pd.A.space.dim();
    if (total != c->dim())
        throw ValidationError("Pierce summand dimensions do not add up to dim C");
    pd.corner_A = subalgebra_on_subspace(c, pd.A.space, ev);
    pd.corner_B = subalgebra_on_subspace(c, pd.B.space, ec);
    return pd;
}

AlgP opposite_algebra(const Algebra& a) {
    long d = a.dim();
    std::vector<Algebra::ProdEntry> prods(d * d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) prods[i * d + j] = a.basis_product(j, i);
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(l + "^op");
    return std::make_shared<Algebra>(a.field(), d, std::move(labels), std::move(prods), a.unit());
}

AlgP tensor_algebra(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field())) throw UsageError("tensor: field mismatch");
    long da = a.dim(), db = b.dim(), d = da * db;
    std::vector<Algebra::ProdEntry> prods(d * d);
    for (long i = 0; i < da; ++i)
        for (long ii = 0; ii < db; ++ii)
            for (long j = 0; j < da; ++j)
                for (long jj = 0; jj < db; ++jj) {
                    Algebra::ProdEntry entry;
                    for (const auto& [k, v] : a.basis_product(i, j))
                        for (const auto& [kk, vv] : b.basis_product(ii, jj))
                            entry.push_back({k * db + kk, v * vv});
                    std::sort(entry.begin(), entry.end(),
                              [](auto& x, auto& y) { return x.first < y.first; });
                    prods[(i * db + ii) * d + (j * db + jj)] = std::move(entry);
                }
    std::vector<std::string> labels;
    for (long i = 0; i < da; ++i)
        for (long ii = 0; ii < db; ++ii)
            labels.push_back(a.labels()[i] + "(x)" + b.labels()[ii]);
    Vec unit = vec_zero(d, a.field());
    for (long i = 0; i < da; ++i)
        for (long ii = 0; ii < db; ++ii) unit[i * db + ii] = a.unit()[i] * b.unit()[ii];
    return std::make_shared<Algebra>(a.field(), d, std::move(labels), std::move(prods),
                                     std::move(unit));
}

AlgP enveloping_algebra(const Algebra& a) {
    return tensor_algebra(*opposite_algebra(a), a);
}

Subspace centre(const Algebra& a) {
    long d = a.dim();
    std::vector<Mat> comms;
    Mat stacked(0, d, a.field());
    for (long i = 0; i < d; ++i) {
        Vec bi = vec_zero(d, a.field());
        bi[i] = Scalar::one(a.field());
        stacked = Mat::vstack(stacked, a.left_mult(bi) - a.right_mult(bi));
    }
    Mat k = kernel_basis(stacked);
    Subspace s(d, a.field());
    for (long j = 0; j < k.cols(); ++j) s.insert(k.col(j));
    return s;
}

std::optional<Subspace> jacobson_radical(const Algebra& a) {
    if (!a.field().is_rational() && a.field().p <= a.dim()) return std::nullopt;
    long d = a.dim();
    FieldSpec f = a.field();
    std::vector<Mat> lmat;
    for (long i = 0; i < d; ++i) {
        Vec bi = vec_zero(d, f);
        bi[i] = Scalar::one(f);
        lmat.push_back(a.left_mult(bi));
    }
    Mat gram(d, d, f);
    gram.to_dense();
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            Mat p = lmat[i] * lmat[j];
            Scalar tr = Scalar::zero(f);
            for (long k = 0; k < d; ++k) tr += p.at(k, k);
            gram.set(i, j, tr);
        }
    gram.compact();
    Mat k = kernel_basis(gram);
    Subspace rad(d, f);
    for (long j = 0; j < k.cols(); ++j) rad.insert(k.col(j));
    // sanity: the radical is a two-sided ideal
    std::vector<Vec> gens;
    for (long i = 0; i < rad.dim(); ++i) gens.push_back(rad.basis_vector(i));
    if (!two_sided_ideal(a, gens).equals(rad)) return std::nullopt;
    return rad;
}

Subspace two_sided_ideal(const Algebra& a, const std::vector<Vec>& gens) {
    long d = a.dim();
    Subspace s(d, a.field());
    std::vector<Vec> queue;
    for (const auto& g : gens)
        if (s.insert(g)) queue.push_back(g);
    std::vector<Mat> lmats, rmats;
    for (long i = 0; i < d; ++i) {
        Vec bi = vec_zero(d, a.field());
        bi[i] = Scalar::one(a.field());
        lmats.push_back(a.left_mult(bi));
        rmats.push_back(a.right_mult(bi));
    }
    while (!queue.empty()) {
        Vec v = std::move(queue.back());
        queue.pop_back();
        for (long i = 0; i < d; ++i) {
            Vec l = lmats[i].apply(v);
            if (s.insert(l)) queue.push_back(l);
            Vec r = rmats[i].apply(v);
            if (s.insert(r)) queue.push_back(r);
        }
    }
    return s;
}

QuotientAlgebra quotient_algebra(const AlgP& a, const Subspace& ideal) {
    long d = a->dim();
    FieldSpec f = a->field();
    // verify the subspace is a two-sided ideal
    for (long t = 0; t < ideal.dim(); ++t) {
        Vec v = ideal.basis_vector(t);
        for (long i = 0; i < d; ++i) {
            Vec bi = vec_zero(d, f);
            bi[i] = Scalar::one(f);
            if (!ideal.contains(a->multiply(bi, v)) || !ideal.contains(a->multiply(v, bi)))
                throw ValidationError("quotient: subspace is not a two-sided ideal");
        }
    }
    LinearQuotient lq = quotient_of_space(ideal);
    long q = lq.dim;
    Mat proj = lq.projection;
    Mat section = lq.section;

    std::vector<Algebra::ProdEntry> prods(q * q);
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j) {
            Vec p = a->multiply(section.col(i), section.col(j));
            Vec co = proj.apply(p);
            Algebra::ProdEntry e;
            for (long m = 0; m < q; ++m)
                if (!co[m].is_zero()) e.push_back({m, co[m]});
            prods[i * q + j] = std::move(e);
        }
    Vec u = proj.apply(a->unit());
    std::vector<std::string> labels;
    for (long i = 0; i < q; ++i) labels.push_back("q" + std::to_string(i));
    auto alg = std::make_shared<Algebra>(f, q, std::move(labels), std::move(prods), std::move(u));
    return QuotientAlgebra{alg, std::move(proj), std::move(section)};
}

}  // namespace pierce
