#include "pierce/hochschild.hpp"

namespace pierce {

namespace {

long powl(long b, long e) {
    long p = 1;
    for (long t = 0; t < e; ++t) p *= b;
    return p;
}

}  // namespace

long BarTruncation::hh_dim(long n) const {
    if (n > feasible) throw UsageError("hh_dim: degree beyond the feasible truncation");
    long out = delta_rank[n];
    long in = n >= 1 ? delta_rank[n - 1] : 0;
    return cdim[n] - out - in;
}

BarTruncation bar_truncation(const AlgP& A, const Bimodule& coeff, long nmax, BarOptions opt) {
    if (coeff.L != A || coeff.R != A) throw UsageError("bar_truncation: coefficients not over A");
    BarTruncation bt;
    bt.A = A;
    bt.coeff = coeff;
    bt.nmax = nmax;
    long d = A->dim(), m = coeff.dim;
    FieldSpec f = A->field();

    long feas = -1;
    for (long n = 0; n <= nmax; ++n) {
        if (powl(d, n + 1) * m > opt.cap) break;
        feas = n;
    }
    if (feas < 0)
        throw ResourceLimit("bar truncation infeasible already at degree 0 (cap " +
                            std::to_string(opt.cap) + ")");
    bt.feasible = feas;
    for (long n = 0; n <= feas + 1; ++n) bt.cdim.push_back(powl(d, n) * m);

    for (long n = 0; n <= feas; ++n) {
        long src = bt.cdim[n], dst = bt.cdim[n + 1];
        long tuples = powl(d, n + 1);
        std::vector<Mat::Triple> ts;
        std::vector<long> a(n + 1);
        for (long tup = 0; tup < tuples; ++tup) {
            long mm = tup;
            for (long t = n; t >= 0; --t) {
                a[t] = mm % d;
                mm /= d;
            }
            long base_row = tup * m;
            // term 0: a_1 . phi(a_2..a_{n+1})
            {
                long sub = tup % powl(d, n);  // drop the leading slot
                coeff.lam[a[0]].for_nonzero([&](long r, long s, const Scalar& v) {
                    ts.push_back({base_row + r, sub * m + s, v});
                });
            }
            // middle terms: (-1)^t phi(.., a_t a_{t+1}, ..)
            Scalar sgn = -Scalar::one(f);
            for (long t = 0; t < n; ++t) {
                for (const auto& [k, v] : A->basis_product(a[t], a[t + 1])) {
                    long sub = 0;
                    for (long u = 0; u <= n; ++u) {
                        if (u == t) sub = sub * d + k;
                        else if (u == t + 1) continue;
                        else sub = sub * d + a[u];
                    }
                    for (long r = 0; r < m; ++r) ts.push_back({base_row + r, sub * m + r, sgn * v});
                }
                sgn = -sgn;
            }
            // last term: (-1)^{n+1} phi(a_1..a_n) . a_{n+1}
            {
                Scalar last = (n + 1) % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
                long sub = tup / d;  // drop the trailing slot
                coeff.rho[a[n]].for_nonzero([&](long r, long s, const Scalar& v) {
                    ts.push_back({base_row + r, sub * m + s, last * v});
                });
            }
        }
        bt.delta.push_back(Mat::from_triples(dst, src, f, std::move(ts)));
    }
    for (const auto& dmat : bt.delta)
        bt.delta_rank.push_back(dmat.rows() * dmat.cols() == 0 ? 0 : rank_of(dmat));
    return bt;
}

HHTable hh_via_bar(const AlgP& A, const Bimodule& coeff, long nmax, BarOptions opt, bool strict) {
    BarTruncation bt = bar_truncation(A, coeff, nmax, opt);
    if (strict && bt.feasible < nmax)
        throw ResourceLimit("bar method infeasible at degree " + std::to_string(bt.feasible + 1) +
                            " (cap " + std::to_string(opt.cap) + ")");
    HHTable t;
    t.method = "bar";
    t.feasible = bt.feasible;
    for (long n = 0; n <= bt.feasible; ++n) t.dims.push_back(bt.hh_dim(n));
    return t;
}

HHTable hh_via_ext(const AlgP& A, const Bimodule& coeff, long nmax, ResolutionLimits lim) {
    AlgP env = enveloping_algebra(*A);
    RightModule Amod = bimodule_as_right_over(regular_bimodule(A), env);
    RightModule Cmod = bimodule_as_right_over(coeff, env);
    ExtTable e = ext_dims(Amod, Cmod, nmax, lim);
    HHTable t;
    t.method = "ext";
    t.feasible = nmax;
    t.dims = e.dims;
    return t;
}

Vec cup_product(const Algebra& A, long m, const Vec& phi, long n, const Vec& psi) {
    long d = A.dim();
    FieldSpec f = A.field();
    if ((long)phi.size() != powl(d, m) * d || (long)psi.size() != powl(d, n) * d)
        throw UsageError("cup_product: cochain sizes do not match the degrees");
    long out_tuples = powl(d, m + n);
    Vec out = vec_zero(out_tuples * d, f);
    long pn = powl(d, n);
    for (long tup = 0; tup < out_tuples; ++tup) {
        long left = tup / pn, right = tup % pn;
        Vec v1 = vec_zero(d, f), v2 = vec_zero(d, f);
        for (long s = 0; s < d; ++s) {
            v1[s] = phi[left * d + s];
            v2[s] = psi[right * d + s];
        }
        Vec prod = A.multiply(v1, v2);
        for (long s = 0; s < d; ++s) out[tup * d + s] = prod[s];
    }
    return out;
}

bool is_coboundary(const BarTruncation& bt, long n, const Vec& z) {
    if (n == 0) return vec_is_zero(z);
    return solve_linear(bt.delta[n - 1], z).has_value();
}

ChiData chi_comparison(const MoritaContext& ctx, long nmax, BarOptions opt) {
    ChiData cd;
    cd.barC = bar_truncation(ctx.C, regular_bimodule(ctx.C), nmax, opt);
    cd.barA = bar_truncation(ctx.A, regular_bimodule(ctx.A), nmax, opt);
    cd.feasible = std::min(cd.barC.feasible, cd.barA.feasible);
    FieldSpec f = ctx.C->field();
    long dc = ctx.C->dim(), da = ctx.A->dim();
    const Mat& incl = ctx.pd.A.inclusion;   // dc x da
    const Mat& compress = ctx.pd.A.projection;  // da x dc, x -> coords(e x e)
    // sparse columns of the corner inclusion
    std::vector<std::vector<std::pair<long, Scalar>>> icols(da);
    incl.for_nonzero([&](long r, long c, const Scalar& v) { icols[c].push_back({r, v}); });

    for (long n = 0; n <= cd.feasible; ++n) {
        long rows = powl(da, n) * da, cols = powl(dc, n) * dc;
        std::vector<Mat::Triple> ts;
        std::vector<long> it(n);
        long atuples = powl(da, n);
        for (long tup = 0; tup < atuples; ++tup) {
            long mm = tup;
            for (long t = n - 1; t >= 0; --t) {
                it[t] = mm % da;
                mm /= da;
            }
            // expand the product of inclusion columns over all C-basis tuples
            std::vector<std::pair<long, Scalar>> terms{{0, Scalar::one(f)}};
            for (long t = 0; t < n; ++t) {
                std::vector<std::pair<long, Scalar>> next;
                for (const auto& [jtup, coefv] : terms)
                    for (const auto& [j, w] : icols[it[t]]) next.push_back({jtup * dc + j, coefv * w});
                terms = std::move(next);
            }
            for (const auto& [jtup, coefv] : terms)
                compress.for_nonzero([&](long r, long s, const Scalar& v) {
                    ts.push_back({tup * da + r, jtup * dc + s, coefv * v});
                });
        }
        cd.chi.push_back(Mat::from_triples(rows, cols, f, std::move(ts)));
    }
    cd.chain_map = true;
    for (long n = 0; n + 1 <= cd.feasible; ++n)
        if (!(cd.chi[n + 1] * cd.barC.delta[n] == cd.barA.delta[n] * cd.chi[n]))
            cd.chain_map = false;
    return cd;
}

InducedMap induced_on_hh(const BarTruncation& src, const BarTruncation& dst, const Mat& map_n,
                         long n) {
    InducedMap im;
    im.dim_src = src.hh_dim(n);
    im.dim_dst = dst.hh_dim(n);
    // rank of the induced map on cohomology without materializing kernels:
    // with D = delta_src^n, B = im-basis matrix delta_dst^{n-1},
    //   rank(chi restricted to ker D, modulo im B)
    //     = rank [[D, 0], [chi, B]] - rank D - rank B.
    const Mat& D = src.delta[n];
    long rank_D = src.delta_rank[n];
    long rank_B = n >= 1 ? dst.delta_rank[n - 1] : 0;
    Mat top = n >= 1 ? Mat::hstack(D, Mat(D.rows(), dst.delta[n - 1].cols(), D.field()))
                     : D;
    Mat bottom = n >= 1 ? Mat::hstack(map_n, dst.delta[n - 1]) : map_n;
    long big = rank_of(Mat::vstack(top, bottom));
    im.rank = big - rank_D - rank_B;
    im.injective = im.rank == im.dim_src;
    im.surjective = im.rank == im.dim_dst;
    im.bijective = im.injective && im.surjective;
    return im;
}

MHHReport verify_MHH(const MoritaContext& ctx, long cutoff, BarOptions opt, const ChiData* pre) {
    MHHReport r;
    Defects df = compute_defects(ctx);
    r.g = grade_of(defect_right_module(ctx, df), cutoff);
    if (!r.g.resolved() && !r.g.is_infinite()) {
        r.inconclusive = true;
        return r;
    }
    ChiData cd = pre ? *pre : chi_comparison(ctx, cutoff, opt);
    r.feasible = cd.feasible;
    if (!cd.chain_map) throw ValidationError("chi is not a chain map");
    for (long n = 0; n <= cd.feasible; ++n)
        r.chi_maps.push_back(induced_on_hh(cd.barC, cd.barA, cd.chi[n], n));

    // an infinite grade plays as "greater than anything we can check"
    long g_eff = r.g.resolved() ? r.g.value : cd.feasible + 2;
    r.full_coverage = r.g.resolved() ? cd.feasible >= std::min(r.g.value, cutoff) : true;

    r.chi_iso_below = true;
    for (long j = 0; j <= std::min(g_eff - 2, cd.feasible); ++j)
        if (!r.chi_maps[j].bijective) r.chi_iso_below = false;
    r.chi_inj_at_gm1 = true;
    if (g_eff - 1 >= 0 && g_eff - 1 <= cd.feasible)
        r.chi_inj_at_gm1 = r.chi_maps[g_eff - 1].injective;

    // relative dims from the long exact sequence:
    // dim HH^i(C/A) = dim ker(chi^i) + dim coker(chi^{i-1})
    for (long i = 0; i <= cd.feasible; ++i) {
        long kerd = r.chi_maps[i].dim_src - r.chi_maps[i].rank;
        long cok = i >= 1 ? r.chi_maps[i - 1].dim_dst - r.chi_maps[i - 1].rank : 0;
        r.rel_dims.push_back(kerd + cok);
    }
    r.rel_vanishing = true;
    for (long i = 0; i < std::min(g_eff, cd.feasible + 1); ++i)
        if (r.rel_dims[i] != 0) r.rel_vanishing = false;

    // homology identification of the relative complex:
    // H_0 = Cbar, H_1 = Omega, H_j = Tor_{j-1}^A(Ce, eC) = Tor_{j-1}^A(M, N)
    FundamentalSequence fs = fundamental_sequence(ctx, df);
    long jt = std::max<long>(1, std::min<long>(cutoff - 1, 3));
    BarHomology bh = two_sided_bar_homology(ctx.Ce, ctx.eC, jt);
    RightModule ce_r = ctx.Ce.right_part();
    ExtTable tor_ce = tor_dims(ce_r, ctx.eC, jt);
    ExtTable tor_mn = tor_dims(ctx.M_right(), ctx.N, jt);
    r.homology_id_match = fs.exact && fs.e_annihilates && fs.omega_dim == fs.tor2_dim;
    for (long j = 1; j <= jt; ++j) {
        if (bh.hdims[j] != tor_ce.dims[j]) r.homology_id_match = false;
        if (tor_ce.dims[j] != tor_mn.dims[j]) r.homology_id_match = false;
    }
    if (bh.hdims[0] != ctx.CeeC.dim) r.homology_id_match = false;
    return r;
}

std::vector<long> relative_bar_homology_dims(const MoritaContext& ctx, long jmax, long dim_cap) {
    FieldSpec f = ctx.C->field();
    Bimodule creg = regular_bimodule(ctx.C);
    std::vector<Mat> bnd = bar_boundaries(creg, creg, jmax + 1, dim_cap);
    long dc = ctx.C->dim();
    // subcomplex term: Ce (x) A^(x)j (x) eC inside C^(x)(j+2)
    Mat ce_cols(0, 0, f), ec_cols(0, 0, f);
    {
        Mat re = ctx.C->right_mult(ctx.e), le = ctx.C->left_mult(ctx.e);
        Subspace ce(dc, f), ec(dc, f);
        for (long j = 0; j < dc; ++j) {
            ce.insert(re.col(j));
            ec.insert(le.col(j));
        }
        ce_cols = ce.basis_matrix().transpose();
        ec_cols = ec.basis_matrix().transpose();
    }
    const Mat& ia = ctx.pd.A.inclusion;
    std::vector<long> hdims;
    std::vector<Mat> qbnd(jmax + 2);
    std::vector<LinearQuotient> quot(jmax + 2);
    for (long j = 0; j <= jmax + 1; ++j) {
        Mat sub = ce_cols;
        for (long t = 0; t < j; ++t) sub = kron(sub, ia);
        sub = kron(sub, ec_cols);
        Subspace s(sub.rows(), f);
        for (long c = 0; c < sub.cols(); ++c) s.insert(sub.col(c));
        quot[j] = quotient_of_space(s);
    }
    for (long j = 1; j <= jmax + 1; ++j)
        qbnd[j] = quot[j - 1].projection * bnd[j] * quot[j].section;
    ChainComplex cc;
    cc.cochain = false;
    for (long j = 0; j <= jmax + 1; ++j) cc.dims.push_back(quot[j].dim);
    cc.d.push_back(Mat(0, 0, f));
    for (long j = 1; j <= jmax + 1; ++j) cc.d.push_back(qbnd[j]);
    if (!cc.check_dd()) throw ValidationError("relative bar: boundary does not square to zero");
    auto h = cc.homology_dims();
    h.resize(jmax + 1);
    return h;
}

}  // namespace pierce
