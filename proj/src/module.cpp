#include "pierce/module.hpp"

namespace pierce {

namespace {

Vec basis_vec(long d, long i, const FieldSpec& f) {
    Vec v = vec_zero(d, f);
    v[i] = Scalar::one(f);
    return v;
}

Mat combine(const std::vector<Mat>& mats, const Vec& x) {
    if (mats.empty()) throw UsageError("module: no action matrices");
    long m = mats[0].rows();
    FieldSpec f = mats[0].field();
    std::vector<Mat::Triple> ts;
    for (size_t i = 0; i < mats.size(); ++i) {
        if (x[i].is_zero()) continue;
        mats[i].for_nonzero([&](long r, long c, const Scalar& v) { ts.push_back({r, c, x[i] * v}); });
    }
    return Mat::from_triples(m, m, f, std::move(ts));
}

}  // namespace

Mat RightModule::act(const Vec& x) const { return combine(rho, x); }
Mat Bimodule::act_left(const Vec& x) const { return combine(lam, x); }
Mat Bimodule::act_right(const Vec& x) const { return combine(rho, x); }

RightModule Bimodule::right_part() const {
    if (!R) throw UsageError("bimodule has no right action");
    return RightModule{R, dim, rho, {}};
}

RightModule regular_module(const AlgP& A) {
    RightModule m{A, A->dim(), {}, {}};
    for (long i = 0; i < A->dim(); ++i)
        m.rho.push_back(A->right_mult(basis_vec(A->dim(), i, A->field())));
    return m;
}

Bimodule regular_bimodule(const AlgP& A) {
    Bimodule m{A, A, A->dim(), {}, {}};
    for (long i = 0; i < A->dim(); ++i) {
        Vec b = basis_vec(A->dim(), i, A->field());
        m.lam.push_back(A->left_mult(b));
        m.rho.push_back(A->right_mult(b));
    }
    return m;
}

RightModule zero_module(const AlgP& A) {
    RightModule m{A, 0, {}, {}};
    for (long i = 0; i < A->dim(); ++i) m.rho.push_back(Mat(0, 0, A->field()));
    return m;
}

RightModule direct_sum(const RightModule& a, const RightModule& b) {
    if (a.A != b.A) throw UsageError("direct_sum: different parent algebras");
    RightModule m{a.A, a.dim + b.dim, {}, a.satgens};
    for (long i = 0; i < a.A->dim(); ++i) {
        Mat s(a.dim + b.dim, a.dim + b.dim, a.A->field());
        a.rho[i].for_nonzero([&](long r, long c, const Scalar& v) { s.set(r, c, v); });
        b.rho[i].for_nonzero([&](long r, long c, const Scalar& v) { s.set(r + a.dim, c + a.dim, v); });
        s.compact();
        m.rho.push_back(std::move(s));
    }
    return m;
}

ValidationReport validate_right_module(const RightModule& m) {
    ValidationReport rep;
    const Algebra& A = *m.A;
    long d = A.dim();
    if ((long)m.rho.size() != d) {
        rep.ok = false;
        rep.violations.push_back("action matrix count != dim A");
        return rep;
    }
    if (!(m.act(A.unit()) == Mat::identity(m.dim, A.field()))) {
        rep.ok = false;
        rep.violations.push_back("rho(unit) != identity");
    }
    // RIGHT_ACTION_ORDER: rho_i rho_j = sum_k c[j][i][k] rho_k
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            Mat lhs = m.rho[i] * m.rho[j];
            Mat rhs(m.dim, m.dim, A.field());
            for (const auto& [k, v] : A.basis_product(j, i)) rhs = rhs + m.rho[k].scaled(v);
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.violations.push_back("right action violates structure constants at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
                return rep;
            }
        }
    return rep;
}

ValidationReport validate_bimodule(const Bimodule& m) {
    ValidationReport rep;
    if (m.R) {
        auto r = validate_right_module(m.right_part());
        if (!r.ok) return r;
    }
    if (m.L) {
        const Algebra& L = *m.L;
        if (!(m.act_left(L.unit()) == Mat::identity(m.dim, L.field()))) {
            rep.ok = false;
            rep.violations.push_back("lam(unit) != identity");
            return rep;
        }
        for (long i = 0; i < L.dim(); ++i)
            for (long j = 0; j < L.dim(); ++j) {
                Mat lhs = m.lam[i] * m.lam[j];
                Mat rhs(m.dim, m.dim, L.field());
                for (const auto& [k, v] : L.basis_product(i, j)) rhs = rhs + m.lam[k].scaled(v);
                if (!(lhs == rhs)) {
                    rep.ok = false;
                    rep.violations.push_back("left action violates structure constants");
                    return rep;
                }
            }
    }
    if (m.L && m.R) {
        for (const auto& l : m.lam)
            for (const auto& r : m.rho)
                if (!(l * r == r * l)) {
                    rep.ok = false;
                    rep.violations.push_back("left and right actions do not commute");
                    return rep;
                }
    }
    return rep;
}

RightModule left_as_right(const Bimodule& m, const AlgP& op) {
    if (!m.L) throw UsageError("left_as_right: no left action");
    // v * x := x v over the opposite ring
    return RightModule{op, m.dim, m.lam, {}};
}

RightModule bimodule_as_right_over(const Bimodule& m, const AlgP& env) {
    if (!m.L || !m.R) throw UsageError("bimodule_as_right_over: need both actions");
    long dl = m.L->dim(), dr = m.R->dim();
    if (env->dim() != dl * dr) throw UsageError("enveloping dimension mismatch");
    RightModule res{env, m.dim, {}, {}};
    for (long i = 0; i < dl; ++i)
        for (long j = 0; j < dr; ++j) res.rho.push_back(m.lam[i] * m.rho[j]);
    // one-sided generators b_i^op (x) 1 and 1 (x) b_j
    const Vec& ul = m.L->unit();
    const Vec& ur = m.R->unit();
    FieldSpec f = env->field();
    for (long i = 0; i < dl; ++i) {
        Vec g = vec_zero(dl * dr, f);
        for (long j = 0; j < dr; ++j) g[i * dr + j] = ur[j];
        res.satgens.push_back(std::move(g));
    }
    for (long j = 0; j < dr; ++j) {
        Vec g = vec_zero(dl * dr, f);
        for (long i = 0; i < dl; ++i) g[i * dr + j] = ul[i];
        res.satgens.push_back(std::move(g));
    }
    return res;
}

std::vector<Mat> hom_space(const RightModule& M, const RightModule& N) {
    if (M.A != N.A) throw UsageError("hom_space: different parent algebras");
    const Algebra& A = *M.A;
    FieldSpec f = A.field();
    long mm = M.dim, nn = N.dim;
    if (mm == 0 || nn == 0) return {};
    // unknowns F (nn x mm) flattened row-major; equations F rho^M_i = rho^N_i F
    std::vector<Mat::Triple> ts;
    long row = 0;
    for (long i = 0; i < A.dim(); ++i) {
        // (F rho^M_i)_{pq} = sum_s F_{ps} rho^M_{sq};  (rho^N_i F)_{pq} = sum_s rho^N_{ps} F_{sq}
        for (long p = 0; p < nn; ++p)
            for (long q = 0; q < mm; ++q) {
                long r = row + p * mm + q;
                M.rho[i].for_nonzero([&](long s, long qq, const Scalar& v) {
                    if (qq == q) ts.push_back({r, p * mm + s, v});
                });
                N.rho[i].for_nonzero([&](long pp, long s, const Scalar& v) {
                    if (pp == p) ts.push_back({r, s * mm + q, -v});
                });
            }
        row += nn * mm;
    }
    Mat sys = Mat::from_triples(row, nn * mm, f, std::move(ts));
    Mat ker = kernel_basis(sys);
    std::vector<Mat> basis;
    for (long j = 0; j < ker.cols(); ++j) basis.push_back(unflatten(nn, mm, f, ker.col(j)));
    return basis;
}

TensorSpace tensor_over(const Bimodule& M, const Bimodule& N) {
    if (!M.R || !N.L || M.R != N.L) throw UsageError("tensor_over: middle algebra mismatch");
    const Algebra& A = *M.R;
    FieldSpec f = A.field();
    long full = M.dim * N.dim;
    TensorSpace t;
    t.full_dim = full;
    if (full == 0) {
        t.dim = 0;
        t.projection = Mat(0, 0, f);
        t.section = Mat(0, 0, f);
        t.outer = Bimodule{M.L, N.R, 0, {}, {}};
        if (M.L)
            for (long i = 0; i < M.L->dim(); ++i) t.outer.lam.push_back(Mat(0, 0, f));
        if (N.R)
            for (long i = 0; i < N.R->dim(); ++i) t.outer.rho.push_back(Mat(0, 0, f));
        return t;
    }
    Mat idm = Mat::identity(M.dim, f), idn = Mat::identity(N.dim, f);
    Subspace rel(full, f);
    for (long i = 0; i < A.dim(); ++i) {
        Mat k = kron(M.rho[i], idn) - kron(idm, N.lam[i]);
        for (long j = 0; j < full; ++j) rel.insert(k.col(j));
    }
    LinearQuotient lq = quotient_of_space(rel);
    t.dim = lq.dim;
    t.projection = lq.projection;
    t.section = lq.section;
    t.outer = Bimodule{M.L, N.R, t.dim, {}, {}};
    auto descends = [&](const Mat& onfull) {
        for (long j = 0; j < rel.dim(); ++j)
            if (!rel.contains(onfull.apply(rel.basis_vector(j))))
                throw ValidationError("tensor_over: outer action does not preserve relations");
    };
    if (M.L)
        for (long i = 0; i < M.L->dim(); ++i) {
            Mat k = kron(M.lam[i], idn);
            descends(k);
            t.outer.lam.push_back(t.projection * k * t.section);
        }
    if (N.R)
        for (long i = 0; i < N.R->dim(); ++i) {
            Mat k = kron(idm, N.rho[i]);
            descends(k);
            t.outer.rho.push_back(t.projection * k * t.section);
        }
    return t;
}

Mat descend_to_tensor(const TensorSpace& t, const Mat& on_full) {
    // well-definedness: on_full must kill ker(projection); equivalently
    // on_full = (on_full * section) * projection
    Mat reduced = on_full * t.section;
    if (!(reduced * t.projection == on_full))
        throw ValidationError("map does not descend to the tensor product");
    return reduced;
}

Subspace trace_ideal(const RightModule& M) {
    const AlgP& A = M.A;
    auto maps = hom_space(M, regular_module(A));
    Subspace s(A->dim(), A->field());
    for (const auto& F : maps)
        for (long j = 0; j < M.dim; ++j) s.insert(F.col(j));
    // two-sidedness re-verified
    for (long t = 0; t < s.dim(); ++t) {
        Vec v = s.basis_vector(t);
        for (long i = 0; i < A->dim(); ++i) {
            Vec b = basis_vec(A->dim(), i, A->field());
            if (!s.contains(A->multiply(b, v)) || !s.contains(A->multiply(v, b)))
                throw ValidationError("trace ideal is not two-sided");
        }
    }
    return s;
}

bool is_generator(const RightModule& M) { return trace_ideal(M).dim() == M.A->dim(); }

ProjectivityWitness is_projective(const RightModule& M) {
    const Algebra& A = *M.A;
    FieldSpec f = A.field();
    long d = A.dim(), mm = M.dim;
    if (mm == 0) return {true, Mat(0, 0, f)};
    long fd = mm * d;  // free module A^mm, coordinates (copy j, basis s) -> j*d+s
    // cover P: free -> M, column (j,s) = m_j * b_s
    Mat P(mm, fd, f);
    for (long j = 0; j < mm; ++j)
        for (long s = 0; s < d; ++s) {
            Vec col = M.rho[s].col(j);
            for (long r = 0; r < mm; ++r)
                if (!col[r].is_zero()) P.set(r, j * d + s, col[r]);
        }
    P.compact();
    // free action matrices: block diagonal right regular action
    auto reg = regular_module(M.A);
    // unknown S: fd x mm with S rho^M_i = rhoF_i S and P S = I
    std::vector<Mat::Triple> ts;
    Vec rhs;
    long row = 0;
    for (long i = 0; i < d; ++i) {
        for (long p = 0; p < fd; ++p)
            for (long q = 0; q < mm; ++q) {
                long r = row + p * mm + q;
                M.rho[i].for_nonzero([&](long s, long qq, const Scalar& v) {
                    if (qq == q) ts.push_back({r, p * mm + s, v});
                });
                // rhoF_i is block diagonal with blocks reg.rho[i]
                long blk = p / d, pin = p % d;
                reg.rho[i].for_nonzero([&](long pp, long s, const Scalar& v) {
                    if (pp == pin) ts.push_back({r, (blk * d + s) * mm + q, -v});
                });
            }
        row += fd * mm;
    }
    long homrows = row;
    for (long p = 0; p < mm; ++p)
        for (long q = 0; q < mm; ++q) {
            long r = row + p * mm + q;
            P.for_nonzero([&](long pp, long s, const Scalar& v) {
                if (pp == p) ts.push_back({r, s * mm + q, v});
            });
        }
    row += mm * mm;
    Mat sys = Mat::from_triples(row, fd * mm, f, std::move(ts));
    Vec b = vec_zero(row, f);
    for (long p = 0; p < mm; ++p) b[homrows + p * mm + p] = Scalar::one(f);
    auto sol = solve_linear(sys, b);
    if (!sol) return {false, Mat(0, 0, f)};
    return {true, unflatten(fd, mm, f, *sol)};
}

EndAlgebra end_algebra(const RightModule& M) {
    EndAlgebra e;
    e.maps = hom_space(M, M);
    long k = (long)e.maps.size();
    FieldSpec f = M.A->field();
    std::vector<Vec> cols;
    for (const auto& F : e.maps) cols.push_back(flatten(F));
    Mat H = Mat::from_cols(M.dim * M.dim, f, cols);
    // products and unit, in one batched solve
    std::vector<Vec> prods;
    for (long s = 0; s < k; ++s)
        for (long t = 0; t < k; ++t) prods.push_back(flatten(e.maps[s] * e.maps[t]));
    prods.push_back(flatten(Mat::identity(M.dim, f)));
    Mat rhs = Mat::from_cols(M.dim * M.dim, f, prods);
    auto sol = solve_matrix(H, rhs);
    if (!sol) throw ValidationError("end_algebra: composition left the hom space");
    std::vector<Algebra::ProdEntry> table(k * k);
    for (long s = 0; s < k; ++s)
        for (long t = 0; t < k; ++t) {
            Algebra::ProdEntry entry;
            for (long m = 0; m < k; ++m) {
                Scalar v = sol->at(m, s * k + t);
                if (!v.is_zero()) entry.push_back({m, v});
            }
            table[s * k + t] = std::move(entry);
        }
    Vec unit = sol->col(k * k);
    std::vector<std::string> labels;
    for (long i = 0; i < k; ++i) labels.push_back("f" + std::to_string(i));
    e.alg = std::make_shared<Algebra>(f, k, std::move(labels), std::move(table), std::move(unit));
    return e;
}

Vec EndAlgebra::coords_of(const Mat& endo) const {
    FieldSpec f = endo.field();
    std::vector<Vec> cols;
    for (const auto& F : maps) cols.push_back(flatten(F));
    Mat H = Mat::from_cols(endo.rows() * endo.cols(), f, cols);
    auto sol = solve_linear(H, flatten(endo));
    if (!sol) throw UsageError("endomorphism outside the hom space");
    return *sol;
}

DualModule dual_module(const RightModule& M) {
    const AlgP& A = M.A;
    FieldSpec f = A->field();
    DualModule d;
    d.maps = hom_space(M, regular_module(A));
    long k = (long)d.maps.size();
    d.mod = Bimodule{A, nullptr, k, {}, {}};
    if (k == 0) {
        for (long i = 0; i < A->dim(); ++i) d.mod.lam.push_back(Mat(0, 0, f));
        return d;
    }
    std::vector<Vec> cols;
    for (const auto& F : d.maps) cols.push_back(flatten(F));
    Mat H = Mat::from_cols(A->dim() * M.dim, f, cols);
    for (long i = 0; i < A->dim(); ++i) {
        Vec b = basis_vec(A->dim(), i, f);
        Mat L = A->left_mult(b);
        std::vector<Vec> imgs;
        for (const auto& F : d.maps) imgs.push_back(flatten(L * F));
        auto sol = solve_matrix(H, Mat::from_cols(A->dim() * M.dim, f, imgs));
        if (!sol) throw ValidationError("dual_module: action left the hom space");
        d.mod.lam.push_back(*sol);
    }
    return d;
}

NormStableEnd norm_and_stable_end(const RightModule& M) {
    NormStableEnd r;
    const AlgP& A = M.A;
    FieldSpec f = A->field();
    r.end = end_algebra(M);
    r.dual = dual_module(M);
    long ke = (long)r.end.maps.size(), kd = (long)r.dual.maps.size();
    Bimodule Mb{nullptr, A, M.dim, {}, M.rho};
    r.mmstar = tensor_over(Mb, r.dual.mod);
    // norm on pure tensors: (u,t) -> endo m' -> m_u * (dual_t m')
    Mat norm_full(ke, r.mmstar.full_dim, f);
    for (long u = 0; u < M.dim; ++u)
        for (long t = 0; t < kd; ++t) {
            Mat G(M.dim, M.dim, f);
            for (long k = 0; k < A->dim(); ++k) {
                Vec mu = M.rho[k].col(u);  // m_u * b_k
                for (long c = 0; c < M.dim; ++c) {
                    Scalar w = r.dual.maps[t].at(k, c);
                    if (w.is_zero()) continue;
                    for (long rr = 0; rr < M.dim; ++rr)
                        if (!mu[rr].is_zero()) G.add_at(rr, c, mu[rr] * w);
                }
            }
            G.compact();
            Vec co = r.end.coords_of(G);
            for (long i = 0; i < ke; ++i)
                if (!co[i].is_zero()) norm_full.set(i, u * kd + t, co[i]);
        }
    norm_full.compact();
    r.norm = descend_to_tensor(r.mmstar, norm_full);
    Subspace img(ke, f);
    for (long j = 0; j < r.norm.cols(); ++j) img.insert(r.norm.col(j));
    // the image is a two-sided ideal of End (verified by quotient_algebra)
    r.norm_image = img;
    r.stable = quotient_algebra(r.end.alg, img);
    r.omega_dim = r.mmstar.dim - rank_of(r.norm);
    // exact sequence bookkeeping: 0 -> Omega -> M(x)M* -> End -> stable End -> 0
    long alt = r.omega_dim - r.mmstar.dim + ke - r.stable.alg->dim();
    if (alt != 0) throw ValidationError("norm sequence dimension bookkeeping failed");
    return r;
}

RightModule submodule(const RightModule& M, const Subspace& s) {
    FieldSpec f = M.A->field();
    Mat incl = s.basis_matrix().transpose();
    RightModule r{M.A, s.dim(), {}, M.satgens};
    for (long i = 0; i < M.A->dim(); ++i) {
        Mat img = M.rho[i] * incl;
        Mat co(s.dim(), s.dim(), f);
        for (long j = 0; j < img.cols(); ++j) {
            auto c = s.coords(img.col(j));
            if (!c) throw ValidationError("submodule: subspace not invariant");
            for (long p = 0; p < s.dim(); ++p)
                if (!(*c)[p].is_zero()) co.set(p, j, (*c)[p]);
        }
        co.compact();
        r.rho.push_back(std::move(co));
    }
    return r;
}

RightModule quotient_module(const RightModule& M, const Subspace& s) {
    LinearQuotient lq = quotient_of_space(s);
    RightModule r{M.A, lq.dim, {}, M.satgens};
    for (long i = 0; i < M.A->dim(); ++i) {
        for (long j = 0; j < s.dim(); ++j)
            if (!s.contains(M.rho[i].apply(s.basis_vector(j))))
                throw ValidationError("quotient_module: subspace not invariant");
        r.rho.push_back(lq.projection * M.rho[i] * lq.section);
    }
    return r;
}

Bimodule sub_bimodule(const Bimodule& M, const Subspace& s) {
    Bimodule r{M.L, M.R, s.dim(), {}, {}};
    Mat incl = s.basis_matrix().transpose();
    auto conv = [&](const Mat& act) {
        Mat img = act * incl;
        Mat co(s.dim(), s.dim(), incl.field());
        for (long j = 0; j < img.cols(); ++j) {
            auto c = s.coords(img.col(j));
            if (!c) throw ValidationError("sub_bimodule: subspace not invariant");
            for (long p = 0; p < s.dim(); ++p)
                if (!(*c)[p].is_zero()) co.set(p, j, (*c)[p]);
        }
        co.compact();
        return co;
    };
    for (const auto& a : M.lam) r.lam.push_back(conv(a));
    for (const auto& a : M.rho) r.rho.push_back(conv(a));
    return r;
}

Bimodule quotient_bimodule(const Bimodule& M, const Subspace& s) {
    LinearQuotient lq = quotient_of_space(s);
    auto check = [&](const Mat& act) {
        for (long j = 0; j < s.dim(); ++j)
            if (!s.contains(act.apply(s.basis_vector(j))))
                throw ValidationError("quotient_bimodule: subspace not invariant");
    };
    Bimodule r{M.L, M.R, lq.dim, {}, {}};
    for (const auto& a : M.lam) {
        check(a);
        r.lam.push_back(lq.projection * a * lq.section);
    }
    for (const auto& a : M.rho) {
        check(a);
        r.rho.push_back(lq.projection * a * lq.section);
    }
    return r;
}

RightModule corner_right_module(const AlgP& C, const Subspace& V, const EmbeddedAlgebra& corner) {
    Bimodule b = corner_bimodule(C, V, nullptr, &corner);
    return RightModule{corner.alg, b.dim, b.rho, {}};
}

Bimodule corner_bimodule(const AlgP& C, const Subspace& V, const EmbeddedAlgebra* left,
                         const EmbeddedAlgebra* right) {
    FieldSpec f = C->field();
    Mat incl = V.basis_matrix().transpose();
    Bimodule r{left ? left->alg : nullptr, right ? right->alg : nullptr, V.dim(), {}, {}};
    auto conv = [&](const Mat& mult) {
        Mat img = mult * incl;
        Mat co(V.dim(), V.dim(), f);
        for (long j = 0; j < img.cols(); ++j) {
            auto c = V.coords(img.col(j));
            if (!c) throw ValidationError("corner module: subspace not invariant");
            for (long p = 0; p < V.dim(); ++p)
                if (!(*c)[p].is_zero()) co.set(p, j, (*c)[p]);
        }
        co.compact();
        return co;
    };
    if (left)
        for (long t = 0; t < left->alg->dim(); ++t)
            r.lam.push_back(conv(C->left_mult(left->inclusion.col(t))));
    if (right)
        for (long t = 0; t < right->alg->dim(); ++t)
            r.rho.push_back(conv(C->right_mult(right->inclusion.col(t))));
    return r;
}

}  // namespace pierce
