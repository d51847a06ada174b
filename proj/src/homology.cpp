#include "pierce/homology.hpp"

namespace pierce {

bool ChainComplex::check_dd() const {
    for (size_t n = 0; n + 1 < d.size(); ++n) {
        const Mat& first = cochain ? d[n] : d[n + 1];
        const Mat& second = cochain ? d[n + 1] : d[n];
        if (first.cols() == 0 || second.rows() == 0) continue;
        if (!(second * first).is_zero()) return false;
    }
    return true;
}

std::vector<long> ChainComplex::homology_dims() const {
    std::vector<long> h;
    std::vector<long> rk(d.size(), 0);
    for (size_t n = 0; n < d.size(); ++n) rk[n] = d[n].rows() * d[n].cols() == 0 ? 0 : rank_of(d[n]);
    for (size_t n = 0; n < dims.size(); ++n) {
        long out = 0, in = 0;
        if (cochain) {
            out = n < d.size() ? rk[n] : 0;            // d_n out of degree n
            in = n >= 1 && n - 1 < d.size() ? rk[n - 1] : 0;
        } else {
            out = n < d.size() ? rk[n] : 0;            // d_n: C_n -> C_{n-1}
            in = n + 1 < d.size() ? rk[n + 1] : 0;
        }
        h.push_back(dims[n] - out - in);
    }
    return h;
}

namespace {

// Deterministic small mixing coefficients for generic generator picks.
struct Mixer {
    unsigned long long s = 0x9E3779B97F4A7C15ull;
    long next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        long v = (long)((s >> 33) % 7);  // {0..6} -> {-3..3}\{0}
        return v < 3 ? v - 3 : v - 2;
    }
};

Vec basis_vec(long d, long i, const FieldSpec& f) {
    Vec v = vec_zero(d, f);
    v[i] = Scalar::one(f);
    return v;
}

// Near-minimal generating set of the submodule W (a subspace closed under
// the module action), picked deterministically: generic combinations of the
// current residual basis, saturated under the given action matrices.
std::vector<Vec> pick_generators(const Subspace& W, const std::vector<Mat>& satacts,
                                 const FieldSpec& f) {
    std::vector<Vec> gens;
    Subspace S(W.ambient(), f);
    Mixer mix;
    while (S.dim() < W.dim()) {
        // residuals of W's basis against the generated submodule
        std::vector<Vec> res;
        for (long i = 0; i < W.dim(); ++i) {
            Vec r = S.reduce(W.basis_vector(i));
            if (!vec_is_zero(r)) res.push_back(std::move(r));
        }
        Vec cand = vec_zero(W.ambient(), f);
        for (const auto& r : res) {
            Scalar c(mix.next(), f);
            for (long j = 0; j < W.ambient(); ++j)
                if (!r[j].is_zero()) cand[j] += c * r[j];
        }
        if (vec_is_zero(S.reduce(cand))) cand = res.front();
        gens.push_back(cand);
        // saturate
        std::vector<Vec> queue;
        if (S.insert(cand)) queue.push_back(cand);
        while (!queue.empty()) {
            Vec v = std::move(queue.back());
            queue.pop_back();
            for (const auto& m : satacts) {
                Vec u = m.apply(v);
                if (S.insert(u)) queue.push_back(u);
            }
        }
    }
    return gens;
}

// Block-diagonal right regular action of x on A^k.
Mat free_action(const Algebra& A, long k, const Vec& x) {
    Mat r = A.right_mult(x);
    Mat m(k * A.dim(), k * A.dim(), A.field());
    std::vector<Mat::Triple> ts;
    r.for_nonzero([&](long i, long j, const Scalar& v) {
        for (long b = 0; b < k; ++b) ts.push_back({b * A.dim() + i, b * A.dim() + j, v});
    });
    return Mat::from_triples(k * A.dim(), k * A.dim(), A.field(), std::move(ts));
}

}  // namespace

Resolution free_resolution(const RightModule& M, long length, ResolutionLimits lim) {
    const Algebra& A = *M.A;
    long d = A.dim();
    FieldSpec f = A.field();
    Resolution res;
    res.A = M.A;
    res.module_dim = M.dim;

    std::vector<Vec> satgens = M.satgens;
    if (satgens.empty())
        for (long i = 0; i < d; ++i) satgens.push_back(basis_vec(d, i, f));

    // stage state: W inside an ambient space with right-action matrices
    Subspace W(M.dim, f);
    for (long i = 0; i < M.dim; ++i) W.insert(basis_vec(M.dim, i, f));
    std::vector<Mat> satacts;
    for (const auto& g : satgens) satacts.push_back(M.act(g));
    std::vector<Mat> basisacts = M.rho;

    long total = 0;
    for (long n = 0; n <= length; ++n) {
        std::vector<Vec> gens = pick_generators(W, satacts, f);
        long k = (long)gens.size();
        total += k * d;
        if (total > lim.max_total_dim)
            throw ResourceLimit("free resolution exceeds the total dimension cap at step " +
                                std::to_string(n));
        res.ranks.push_back(k);
        long prev_dim = W.ambient();
        Mat D(prev_dim, k * d, f);
        D.to_dense();
        for (long j = 0; j < k; ++j)
            for (long s = 0; s < d; ++s) {
                Vec col = basisacts[s].apply(gens[j]);
                for (long r = 0; r < prev_dim; ++r)
                    if (!col[r].is_zero()) D.set(r, j * d + s, col[r]);
            }
        D.compact();
        res.diff.push_back(D);
        if (n == length) break;
        // next kernel
        Mat ker = kernel_basis(res.diff.back());
        Subspace Wn(k * d, f);
        for (long j = 0; j < ker.cols(); ++j) Wn.insert(ker.col(j));
        W = std::move(Wn);
        satacts.clear();
        for (const auto& g : satgens) satacts.push_back(free_action(A, k, g));
        basisacts.clear();
        for (long s = 0; s < d; ++s) basisacts.push_back(free_action(A, k, basis_vec(d, s, f)));
        // exactness bookkeeping: dim ker(D_n) must equal what the next cover spans
        if (W.dim() != k * d - rank_of(res.diff.back()))
            throw ValidationError("resolution: rank bookkeeping failed");
    }
    return res;
}

namespace {

// columns of diff at the generator positions: G_j = diff * (e_j (x) unit)
std::vector<Vec> generator_columns(const Mat& diff, const Algebra& A, long k) {
    std::vector<Vec> cols;
    long d = A.dim();
    for (long j = 0; j < k; ++j) {
        Vec g = vec_zero(diff.rows(), A.field());
        for (long s = 0; s < d; ++s) {
            if (A.unit()[s].is_zero()) continue;
            Vec c = diff.col(j * d + s);
            for (long r = 0; r < diff.rows(); ++r)
                if (!c[r].is_zero()) g[r] += A.unit()[s] * c[r];
        }
        cols.push_back(std::move(g));
    }
    return cols;
}

}  // namespace

ExtTable ext_dims(const RightModule& M, const RightModule& N, long n_max, ResolutionLimits lim) {
    if (M.A != N.A) throw UsageError("ext_dims: different parent algebras");
    const Algebra& A = *M.A;
    long d = A.dim();
    FieldSpec f = A.field();
    ExtTable table;
    if (M.dim == 0 || N.dim == 0) {
        table.dims.assign(n_max + 1, 0);
        return table;
    }
    Resolution res = free_resolution(M, n_max + 1, lim);
    // delta_n : N^{k_n} -> N^{k_{n+1}}, from the generator images under diff[n+1]
    std::vector<Mat> delta;
    for (long n = 0; n + 1 < (long)res.ranks.size(); ++n) {
        long kn = res.ranks[n], kn1 = res.ranks[n + 1];
        auto G = generator_columns(res.diff[n + 1], A, kn1);
        Mat dl(kn1 * N.dim, kn * N.dim, f);
        dl.to_dense();
        for (long jp = 0; jp < kn1; ++jp)
            for (long j = 0; j < kn; ++j)
                for (long s = 0; s < d; ++s) {
                    const Scalar& c = G[jp][j * d + s];
                    if (c.is_zero()) continue;
                    N.rho[s].for_nonzero([&](long r, long q, const Scalar& v) {
                        dl.set(jp * N.dim + r, j * N.dim + q,
                               dl.at(jp * N.dim + r, j * N.dim + q) + c * v);
                    });
                }
        dl.compact();
        delta.push_back(std::move(dl));
    }
    std::vector<long> rk;
    for (const auto& m : delta) rk.push_back(m.rows() * m.cols() == 0 ? 0 : rank_of(m));
    for (long n = 0; n <= n_max; ++n) {
        long dimc = res.ranks[n] * N.dim;
        long out = n < (long)rk.size() ? rk[n] : 0;
        long in = n >= 1 ? rk[n - 1] : 0;
        table.dims.push_back(dimc - out - in);
    }
    return table;
}

ExtTable tor_dims(const RightModule& M, const Bimodule& N_left, long n_max, ResolutionLimits lim) {
    if (!N_left.L || M.A != N_left.L) throw UsageError("tor_dims: middle algebra mismatch");
    const Algebra& A = *M.A;
    long d = A.dim();
    FieldSpec f = A.field();
    ExtTable table;
    if (M.dim == 0 || N_left.dim == 0) {
        table.dims.assign(n_max + 1, 0);
        return table;
    }
    Resolution res = free_resolution(M, n_max + 1, lim);
    long nd = N_left.dim;
    // boundary: N^{k_{n+1}} -> N^{k_n}
    std::vector<Mat> bnd;
    for (long n = 0; n + 1 < (long)res.ranks.size(); ++n) {
        long kn = res.ranks[n], kn1 = res.ranks[n + 1];
        auto G = generator_columns(res.diff[n + 1], A, kn1);
        Mat dl(kn * nd, kn1 * nd, f);
        dl.to_dense();
        for (long jp = 0; jp < kn1; ++jp)
            for (long j = 0; j < kn; ++j)
                for (long s = 0; s < d; ++s) {
                    const Scalar& c = G[jp][j * d + s];
                    if (c.is_zero()) continue;
                    N_left.lam[s].for_nonzero([&](long r, long q, const Scalar& v) {
                        dl.set(j * nd + r, jp * nd + q, dl.at(j * nd + r, jp * nd + q) + c * v);
                    });
                }
        dl.compact();
        bnd.push_back(std::move(dl));
    }
    std::vector<long> rk;
    for (const auto& m : bnd) rk.push_back(m.rows() * m.cols() == 0 ? 0 : rank_of(m));
    for (long n = 0; n <= n_max; ++n) {
        long dimc = res.ranks[n] * nd;
        long out = n >= 1 ? rk[n - 1] : 0;  // boundary out of degree n
        long in = n < (long)rk.size() ? rk[n] : 0;
        table.dims.push_back(dimc - out - in);
    }
    return table;
}

GradeBound grade_of(const RightModule& M, long cutoff, ResolutionLimits lim) {
    if (M.dim == 0) return GradeBound::infinite(cutoff);
    ExtTable t = ext_dims(M, regular_module(M.A), cutoff, lim);
    for (long i = 0; i <= cutoff; ++i)
        if (t.dims[i] != 0) return GradeBound::exact(i, cutoff);
    return GradeBound::beyond(cutoff);
}

GradeBound depth_on_ideal(const AlgP& S, const Subspace& I, long cutoff, ResolutionLimits lim) {
    if (!S->is_commutative()) throw UsageError("depth_on_ideal: algebra is not commutative");
    if (I.dim() == S->dim()) return GradeBound::infinite(cutoff);
    RightModule m = quotient_module(regular_module(S), I);
    return grade_of(m, cutoff, lim);
}

std::vector<Mat> bar_boundaries(const Bimodule& X, const Bimodule& Y, long jmax, long dim_cap) {
    if (!X.R || !Y.L || X.R != Y.L) throw UsageError("two_sided_bar: middle algebra mismatch");
    const Algebra& A = *X.R;
    long d = A.dim();
    FieldSpec f = A.field();
    long xd = X.dim, yd = Y.dim;

    auto tdim = [&](long j) {
        long n = xd * yd;
        for (long t = 0; t < j; ++t) n *= d;
        return n;
    };
    for (long j = 0; j <= jmax; ++j)
        if (tdim(j) > dim_cap)
            throw ResourceLimit("two-sided bar complex exceeds cap at degree " + std::to_string(j));

    // index in T_j: ((x * d^j + multi) * yd + y), multi big-endian
    auto powd = [&](long e) {
        long p = 1;
        for (long t = 0; t < e; ++t) p *= d;
        return p;
    };
    // boundary matrices T_j -> T_{j-1}
    std::vector<Mat> bnd(jmax + 1);  // bnd[j], j >= 1
    for (long j = 1; j <= jmax; ++j) {
        long src = tdim(j), dst = tdim(j - 1);
        std::vector<Mat::Triple> ts;
        long pj = powd(j), pj1 = powd(j - 1);
        for (long x = 0; x < xd; ++x)
            for (long multi = 0; multi < pj; ++multi)
                for (long y = 0; y < yd; ++y) {
                    long srcidx = (x * pj + multi) * yd + y;
                    std::vector<long> a(j);
                    long mm = multi;
                    for (long t = j - 1; t >= 0; --t) {
                        a[t] = mm % d;
                        mm /= d;
                    }
                    // term 0: x.a1 (x) a2.. (x) y
                    {
                        Vec xa = X.rho[a[0]].col(x);
                        long rest = 0;
                        for (long t = 1; t < j; ++t) rest = rest * d + a[t];
                        for (long r = 0; r < xd; ++r)
                            if (!xa[r].is_zero())
                                ts.push_back({(r * pj1 + rest) * yd + y, srcidx, xa[r]});
                    }
                    // middle terms
                    Scalar sgn = -Scalar::one(f);
                    for (long t = 0; t + 1 < j; ++t) {
                        for (const auto& [k, v] : A.basis_product(a[t], a[t + 1])) {
                            long rest = 0;
                            for (long u = 0; u < j; ++u) {
                                if (u == t) rest = rest * d + k;
                                else if (u == t + 1) continue;
                                else rest = rest * d + a[u];
                            }
                            ts.push_back({(x * pj1 + rest) * yd + y, srcidx, sgn * v});
                        }
                        sgn = -sgn;
                    }
                    // last term: (-1)^j  x (x) a1..a_{j-1} (x) a_j y
                    {
                        Scalar last = (j % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                        Vec ay = Y.lam[a[j - 1]].col(y);
                        long rest = 0;
                        for (long t = 0; t + 1 < j; ++t) rest = rest * d + a[t];
                        for (long r = 0; r < yd; ++r)
                            if (!ay[r].is_zero())
                                ts.push_back({(x * pj1 + rest) * yd + r, srcidx, last * ay[r]});
                    }
                }
        bnd[j] = Mat::from_triples(dst, src, f, std::move(ts));
    }
    return bnd;
}

GradeBound projective_dimension(const RightModule& M, long cutoff, ResolutionLimits lim) {
    if (M.dim == 0) return GradeBound::exact(0, cutoff);
    if (is_projective(M).projective) return GradeBound::exact(0, cutoff);
    const Algebra& A = *M.A;
    long d = A.dim();
    FieldSpec f = A.field();
    Resolution res = free_resolution(M, cutoff, lim);
    for (long n = 1; n <= cutoff; ++n) {
        // syzygy: kernel of diff[n-1] inside the free module A^{ranks[n-1]}
        Mat ker = kernel_basis(res.diff[n - 1]);
        if (ker.cols() == 0) return GradeBound::exact(n, cutoff);  // previous cover was injective
        Subspace W(res.ranks[n - 1] * d, f);
        for (long j = 0; j < ker.cols(); ++j) W.insert(ker.col(j));
        RightModule freemod{M.A, res.ranks[n - 1] * d, {}, M.satgens};
        for (long s = 0; s < d; ++s) {
            Vec bs = vec_zero(d, f);
            bs[s] = Scalar::one(f);
            Mat r = A.right_mult(bs);
            std::vector<Mat::Triple> ts;
            r.for_nonzero([&](long i, long j, const Scalar& v) {
                for (long b = 0; b < res.ranks[n - 1]; ++b)
                    ts.push_back({b * d + i, b * d + j, v});
            });
            freemod.rho.push_back(
                Mat::from_triples(freemod.dim, freemod.dim, f, std::move(ts)));
        }
        RightModule syz = submodule(freemod, W);
        if (is_projective(syz).projective) return GradeBound::exact(n, cutoff);
    }
    return GradeBound::beyond(cutoff);
}

std::optional<GradeBound> global_dimension(const AlgP& A, long cutoff, ResolutionLimits lim) {
    auto rad = jacobson_radical(*A);
    if (!rad) return std::nullopt;
    RightModule top = quotient_module(regular_module(A), *rad);
    return projective_dimension(top, cutoff, lim);
}

BarHomology two_sided_bar_homology(const Bimodule& X, const Bimodule& Y, long jmax, long dim_cap) {
    const Algebra& A = *X.R;
    long d = A.dim();
    FieldSpec f = A.field();
    long xd = X.dim, yd = Y.dim;
    auto tdim = [&](long j) {
        long n = xd * yd;
        for (long t = 0; t < j; ++t) n *= d;
        return n;
    };
    auto powd = [&](long e) {
        long p = 1;
        for (long t = 0; t < e; ++t) p *= d;
        return p;
    };
    std::vector<Mat> bnd = bar_boundaries(X, Y, jmax + 1, dim_cap);

    BarHomology bh;
    for (long j = 0; j <= jmax; ++j) {
        // cycles
        Subspace Z(tdim(j), f);
        if (j == 0) {
            for (long i = 0; i < tdim(0); ++i) Z.insert(basis_vec(tdim(0), i, f));
        } else {
            Mat k = kernel_basis(bnd[j]);
            for (long c = 0; c < k.cols(); ++c) Z.insert(k.col(c));
        }
        Subspace B(tdim(j), f);
        for (long c = 0; c < bnd[j + 1].cols(); ++c) B.insert(bnd[j + 1].col(c));
        // complement of B inside Z
        std::vector<Vec> hbasis;
        Subspace acc = B;
        for (long i = 0; i < Z.dim(); ++i) {
            Vec v = Z.basis_vector(i);
            if (acc.insert(v)) hbasis.push_back(v);
        }
        BarHomology::Space sp;
        sp.hbasis = hbasis;
        long hk = (long)hbasis.size();
        bh.hdims.push_back(hk);
        // induced outer actions: act on representatives, express mod B
        std::vector<Vec> cols;
        for (const auto& h : hbasis) cols.push_back(h);
        for (long i = 0; i < B.dim(); ++i) cols.push_back(B.basis_vector(i));
        Mat CB = hk + B.dim() > 0 ? Mat::from_cols(tdim(j), f, cols) : Mat(tdim(j), 0, f);
        auto express = [&](const Mat& act) {
            Mat res(hk, hk, f);
            if (hk == 0) return res;
            std::vector<Vec> imgs;
            for (const auto& h : hbasis) imgs.push_back(act.apply(h));
            auto sol = solve_matrix(CB, Mat::from_cols(tdim(j), f, imgs));
            if (!sol) throw ValidationError("bar homology: outer action left the cycle space");
            for (long r = 0; r < hk; ++r)
                for (long c = 0; c < hk; ++c) res.set(r, c, sol->at(r, c));
            res.compact();
            return res;
        };
        long pj = powd(j);
        if (X.L)
            for (long t = 0; t < X.L->dim(); ++t)
                sp.lam.push_back(express(kron(X.lam[t], Mat::identity(pj * yd, f))));
        if (Y.R)
            for (long t = 0; t < Y.R->dim(); ++t)
                sp.rho.push_back(express(kron(Mat::identity(xd * pj, f), Y.rho[t])));
        bh.spaces.push_back(std::move(sp));
    }
    return bh;
}

}  // namespace pierce
