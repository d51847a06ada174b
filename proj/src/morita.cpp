#include "pierce/morita.hpp"

namespace pierce {

namespace {

Vec basis_vec(long d, long i, const FieldSpec& f) {
    Vec v = vec_zero(d, f);
    v[i] = Scalar::one(f);
    return v;
}

// pairing induced by multiplication in C on a tensor of two corner
// subspaces, landing in a target summand (coords through its projection)
Mat pairing_through_mult(const AlgP& C, const TensorSpace& t, const Subspace& left,
                         const Subspace& right, const Mat& target_proj) {
    FieldSpec f = C->field();
    long lm = left.dim(), rm = right.dim();
    Mat full(target_proj.rows(), lm * rm, f);
    full.to_dense();
    for (long u = 0; u < lm; ++u) {
        Vec lu = left.basis_vector(u);
        for (long w = 0; w < rm; ++w) {
            Vec prod = C->multiply(lu, right.basis_vector(w));
            Vec co = target_proj.apply(prod);
            for (long r = 0; r < (long)co.size(); ++r)
                if (!co[r].is_zero()) full.set(r, u * rm + w, co[r]);
        }
    }
    full.compact();
    return descend_to_tensor(t, full);
}

void assert_intertwines(const Mat& map, const std::vector<Mat>& src, const std::vector<Mat>& dst,
                        const char* what) {
    for (size_t i = 0; i < src.size(); ++i)
        if (!(map * src[i] == dst[i] * map))
            throw ValidationError(std::string(what) + ": not a bimodule map");
}

}  // namespace

MoritaContext build_context(const AlgP& C, const Idempotent& e) {
    MoritaContext ctx;
    ctx.C = C;
    ctx.e = e.v;
    ctx.e_comp = vec_sub(C->unit(), e.v);
    ctx.pd = pierce_decompose(C, e);
    ctx.A = ctx.pd.corner_A.alg;
    ctx.B = ctx.pd.corner_B.alg;
    ctx.M = corner_bimodule(C, ctx.pd.M.space, &ctx.pd.corner_B, &ctx.pd.corner_A);
    ctx.N = corner_bimodule(C, ctx.pd.N.space, &ctx.pd.corner_A, &ctx.pd.corner_B);

    ctx.MN = tensor_over(ctx.M, ctx.N);
    ctx.NM = tensor_over(ctx.N, ctx.M);
    ctx.f = pairing_through_mult(C, ctx.MN, ctx.pd.M.space, ctx.pd.N.space, ctx.pd.B.projection);
    ctx.g = pairing_through_mult(C, ctx.NM, ctx.pd.N.space, ctx.pd.M.space, ctx.pd.A.projection);
    {
        Bimodule Breg = regular_bimodule(ctx.B);
        assert_intertwines(ctx.f, ctx.MN.outer.lam, Breg.lam, "f left");
        assert_intertwines(ctx.f, ctx.MN.outer.rho, Breg.rho, "f right");
        Bimodule Areg = regular_bimodule(ctx.A);
        assert_intertwines(ctx.g, ctx.NM.outer.lam, Areg.lam, "g left");
        assert_intertwines(ctx.g, ctx.NM.outer.rho, Areg.rho, "g right");
    }

    // Ce and eC with their corner actions
    Subspace ce(C->dim(), C->field()), ec(C->dim(), C->field());
    Mat re = C->right_mult(e.v), le = C->left_mult(e.v);
    for (long j = 0; j < C->dim(); ++j) {
        ce.insert(re.col(j));
        ec.insert(le.col(j));
    }
    EmbeddedAlgebra whole{C, Mat::identity(C->dim(), C->field()),
                          Mat::identity(C->dim(), C->field())};
    ctx.Ce = corner_bimodule(C, ce, &whole, &ctx.pd.corner_A);
    ctx.eC = corner_bimodule(C, ec, &ctx.pd.corner_A, &whole);
    ctx.CeeC = tensor_over(ctx.Ce, ctx.eC);
    ctx.mu = pairing_through_mult(C, ctx.CeeC, ce, ec, Mat::identity(C->dim(), C->field()));
    {
        Bimodule Creg = regular_bimodule(C);
        assert_intertwines(ctx.mu, ctx.CeeC.outer.lam, Creg.lam, "mu left");
        assert_intertwines(ctx.mu, ctx.CeeC.outer.rho, Creg.rho, "mu right");
    }
    return ctx;
}

Defects compute_defects(const MoritaContext& ctx) {
    Defects df;
    df.ideal_e = two_sided_ideal(*ctx.C, {ctx.e});
    df.ideal_ecomp = two_sided_ideal(*ctx.C, {ctx.e_comp});
    df.Cbar = quotient_algebra(ctx.C, df.ideal_e);
    df.Cbar_p = quotient_algebra(ctx.C, df.ideal_ecomp);
    df.coker_f_matches = df.Cbar.alg->dim() == ctx.B->dim() - rank_of(ctx.f);
    df.coker_g_matches = df.Cbar_p.alg->dim() == ctx.A->dim() - rank_of(ctx.g);
    return df;
}

RightModule defect_right_module(const MoritaContext& ctx, const Defects& df) {
    return quotient_module(regular_module(ctx.C), df.ideal_e);
}

Bimodule defect_bimodule(const MoritaContext& ctx, const Defects& df) {
    return quotient_bimodule(regular_bimodule(ctx.C), df.ideal_e);
}

FundamentalSequence fundamental_sequence(const MoritaContext& ctx, const Defects& df,
                                         bool with_tor_crosscheck) {
    FundamentalSequence fs;
    FieldSpec f = ctx.C->field();
    Mat ker = kernel_basis(ctx.mu);
    fs.omega_space = Subspace(ctx.CeeC.dim, f);
    for (long j = 0; j < ker.cols(); ++j) fs.omega_space.insert(ker.col(j));
    fs.omega_dim = fs.omega_space.dim();
    fs.omega = sub_bimodule(ctx.CeeC.outer, fs.omega_space);

    // exactness: im(mu) = CeC and the quotient projection is onto Cbar
    Subspace img(ctx.C->dim(), f);
    for (long j = 0; j < ctx.mu.cols(); ++j) img.insert(ctx.mu.col(j));
    fs.exact = img.equals(df.ideal_e) &&
               rank_of(df.Cbar.projection) == df.Cbar.alg->dim() &&
               (df.Cbar.projection * ctx.mu).is_zero();

    fs.e_annihilates = fs.omega.act_left(ctx.e).is_zero() && fs.omega.act_right(ctx.e).is_zero();

    if (with_tor_crosscheck) {
        RightModule cbar_r = defect_right_module(ctx, df);
        Bimodule cbar_b = defect_bimodule(ctx, df);
        fs.tor2_dim = tor_dims(cbar_r, cbar_b, 2).dims[2];
    }
    return fs;
}

AuslanderBuild auslander_context(const AlgP& A, const RightModule& M) {
    AuslanderBuild ab;
    ab.summand = direct_sum(M, regular_module(A));
    ab.end = end_algebra(ab.summand);
    FieldSpec f = A->field();
    long mm = M.dim, d = A->dim();
    // idempotent: projection onto the regular summand
    Mat proj(ab.summand.dim, ab.summand.dim, f);
    for (long i = 0; i < d; ++i) proj.set(mm + i, mm + i, Scalar::one(f));
    proj.compact();
    Vec e = ab.end.coords_of(proj);
    ab.ctx = build_context(ab.end.alg, make_idempotent(*ab.end.alg, e));

    // corner diagnostics
    long dual_dim = (long)hom_space(M, regular_module(A)).size();
    long endM_dim = (long)hom_space(M, M).size();
    ab.corner_dims_ok = ab.ctx.pd.A.space.dim() == d && ab.ctx.pd.N.space.dim() == dual_dim &&
                        ab.ctx.pd.M.space.dim() == mm && ab.ctx.pd.B.space.dim() == endM_dim;
    // a -> (0 on M) + (left multiplication on A) is an algebra map onto eCe
    bool iso = true;
    std::vector<Vec> images;
    for (long i = 0; i < d; ++i) {
        Vec bi = basis_vec(d, i, f);
        Mat endo(ab.summand.dim, ab.summand.dim, f);
        Mat L = A->left_mult(bi);
        L.for_nonzero([&](long r, long c, const Scalar& v) { endo.set(mm + r, mm + c, v); });
        endo.compact();
        images.push_back(ab.end.coords_of(endo));
        if (!ab.ctx.pd.A.space.contains(images.back())) iso = false;
    }
    Subspace span(ab.end.alg->dim(), f);
    for (const auto& v : images) span.insert(v);
    if (span.dim() != d || span.dim() != ab.ctx.pd.A.space.dim()) iso = false;
    if (iso) {
        for (long i = 0; i < d && iso; ++i)
            for (long j = 0; j < d && iso; ++j) {
                Vec bi = basis_vec(d, i, f), bj = basis_vec(d, j, f);
                Vec prod_in_A = A->multiply(bi, bj);
                Vec expect = vec_zero(ab.end.alg->dim(), f);
                for (long k = 0; k < d; ++k)
                    if (!prod_in_A[k].is_zero())
                        expect = vec_add(expect, vec_scale(prod_in_A[k], images[k]));
                if (!vec_is_zero(vec_sub(ab.end.alg->multiply(images[i], images[j]), expect)))
                    iso = false;
            }
    }
    ab.corner_A_iso = iso;
    return ab;
}

AlphaReport alpha_map_check(const MoritaContext& ctx, const Defects& df) {
    AlphaReport ar;
    FieldSpec f = ctx.C->field();
    long dc = ctx.C->dim();
    RightModule ce_right{ctx.A, ctx.Ce.dim, ctx.Ce.rho, {}};
    EndAlgebra endce = end_algebra(ce_right);
    long de = endce.alg->dim();
    ar.alpha = Mat(de, dc, f);
    std::vector<Vec> alpha_cols;
    for (long i = 0; i < dc; ++i) {
        Vec co = endce.coords_of(ctx.Ce.lam[i]);
        alpha_cols.push_back(co);
        for (long r = 0; r < de; ++r)
            if (!co[r].is_zero()) ar.alpha.set(r, i, co[r]);
    }
    ar.alpha.compact();
    ar.ring_hom = true;
    for (long i = 0; i < dc && ar.ring_hom; ++i)
        for (long j = 0; j < dc && ar.ring_hom; ++j) {
            Vec bi = basis_vec(dc, i, f), bj = basis_vec(dc, j, f);
            Vec pr = ctx.C->multiply(bi, bj);
            Vec lhs = ar.alpha.apply(pr);
            Vec rhs = endce.alg->multiply(alpha_cols[i], alpha_cols[j]);
            if (!vec_is_zero(vec_sub(lhs, rhs))) ar.ring_hom = false;
        }
    long rk = rank_of(ar.alpha);
    ar.injective = rk == dc;
    ar.bijective = ar.injective && de == dc;

    ExtTable t = ext_dims(defect_right_module(ctx, df), regular_module(ctx.C), 1);
    ar.ext0 = t.dims[0];
    ar.ext1 = t.dims[1];
    ar.matches_ext0 = ar.injective == (ar.ext0 == 0);
    ar.matches_ext1 = ar.bijective == (ar.ext0 == 0 && ar.ext1 == 0);
    return ar;
}

namespace {

// Wedderburn projectivity of P over R: P finite projective and
// R -> End_{End_R(P)}(Hom_R(P, R)) an isomorphism.
bool wedderburn_projective(const AlgP& R, const RightModule& P, bool projective) {
    if (!projective) return false;
    FieldSpec f = R->field();
    auto H = hom_space(P, regular_module(R));
    long kh = (long)H.size();
    EndAlgebra EP = end_algebra(P);
    long ke = EP.alg->dim();
    if (kh == 0) return R->dim() == 0;
    std::vector<Vec> hcols;
    for (const auto& F : H) hcols.push_back(flatten(F));
    Mat Hmat = Mat::from_cols(R->dim() * P.dim, f, hcols);
    // right action of End_R(P) on Hom_R(P,R): phi . T = phi o T
    RightModule Hmod{EP.alg, kh, {}, {}};
    for (long t = 0; t < ke; ++t) {
        std::vector<Vec> imgs;
        for (const auto& F : H) imgs.push_back(flatten(F * EP.maps[t]));
        auto sol = solve_matrix(Hmat, Mat::from_cols(R->dim() * P.dim, f, imgs));
        if (!sol) throw ValidationError("wedderburn: composition left the hom space");
        Hmod.rho.push_back(*sol);
    }
    EndAlgebra E2 = end_algebra(Hmod);
    // R -> End(Hmod): r acts by postcomposition with left multiplication
    Mat map(E2.alg->dim(), R->dim(), f);
    for (long i = 0; i < R->dim(); ++i) {
        Vec bi = vec_zero(R->dim(), f);
        bi[i] = Scalar::one(f);
        Mat L = R->left_mult(bi);
        std::vector<Vec> imgs;
        for (const auto& F : H) imgs.push_back(flatten(L * F));
        auto sol = solve_matrix(Hmat, Mat::from_cols(R->dim() * P.dim, f, imgs));
        if (!sol) throw ValidationError("wedderburn: left action left the hom space");
        // sol is kh x kh acting on H-coordinates; express in E2 basis
        Vec co = E2.coords_of(*sol);
        for (long r = 0; r < (long)co.size(); ++r)
            if (!co[r].is_zero()) map.set(r, i, co[r]);
    }
    map.compact();
    return rank_of(map) == R->dim() && R->dim() == E2.alg->dim();
}

}  // namespace

ContextReport classify_context(const MoritaContext& ctx, long cutoff) {
    if (cutoff < 2) throw UsageError("classify_context: cutoff must be >= 2");
    ContextReport r;
    r.cutoff = cutoff;
    r.dimC = ctx.C->dim();
    r.dimA = ctx.A->dim();
    r.dimB = ctx.B->dim();
    r.dimM = ctx.M.dim;
    r.dimN = ctx.N.dim;
    Defects df = compute_defects(ctx);
    if (!df.coker_f_matches || !df.coker_g_matches)
        throw ValidationError("defect/cokernel dimension cross-check failed");
    r.dim_defect = df.Cbar.alg->dim();
    r.dim_defect_p = df.Cbar_p.alg->dim();
    FundamentalSequence fs = fundamental_sequence(ctx, df);
    r.omega_dim = fs.omega_dim;
    r.fundamental_exact = fs.exact && fs.e_annihilates && fs.omega_dim == fs.tor2_dim;

    r.grade_defect = grade_of(defect_right_module(ctx, df), cutoff);
    AlgP op = opposite_algebra(*ctx.C);
    Bimodule cb = defect_bimodule(ctx, df);
    r.lgrade_defect = grade_of(RightModule{op, cb.dim, cb.lam, {}}, cutoff);
    r.grade_defect_p = grade_of(quotient_module(regular_module(ctx.C), df.ideal_ecomp), cutoff);

    r.morita_idempotent = r.dim_defect == 0;
    r.morita_equivalence = r.dim_defect == 0 && r.dim_defect_p == 0;
    r.auslander = r.grade_defect.at_least(2);
    r.wedderburn = r.dim_defect_p == 0 && r.auslander;

    RightModule Nright = ctx.N_right();
    auto pw = is_projective(Nright);
    r.N_projective_over_B = pw.projective;
    r.N_wedderburn_projective = wedderburn_projective(ctx.B, Nright, pw.projective);
    r.M_generator_over_A = is_generator(ctx.M_right());

    bool via_e = r.auslander && r.M_generator_over_A;
    bool via_ep = r.grade_defect_p.at_least(2) && r.N_wedderburn_projective;
    r.prop_wed_consistent = (r.wedderburn == via_e) && (r.wedderburn == via_ep);
    if (r.grade_defect_p.at_least(2)) {
        // with (C,e') an Auslander context, Cbar is B modulo the trace ideal of N
        long tr = trace_ideal(Nright).dim();
        r.prop_wed_consistent =
            r.prop_wed_consistent && (r.dim_defect == ctx.B->dim() - tr);
    }
    return r;
}

GradeTheoremReport verify_grade_theorem(const AlgP& A, const RightModule& M, long cutoff) {
    if (!is_generator(M)) throw UsageError("verify_grade_theorem: module is not a generator");
    GradeTheoremReport r;
    r.cutoff = cutoff;
    NormStableEnd nse = norm_and_stable_end(M);
    r.stable_end_dim = nse.stable.alg->dim();
    RightModule st = quotient_module(regular_module(nse.end.alg), nse.norm_image);
    r.stable_end_grade = grade_of(st, cutoff);

    ExtTable t = ext_dims(M, M, cutoff);
    long first = -1;
    for (long i = 1; i <= cutoff; ++i)
        if (t.dims[i] != 0) {
            first = i;
            break;
        }
    if (first >= 0 && first + 1 <= cutoff)
        r.ext_side = GradeBound::exact(first + 1, cutoff);
    else if (first >= 0)
        r.ext_side = GradeBound::beyond(cutoff);  // 1 + first lands above the cutoff
    else
        r.ext_side = GradeBound::beyond(cutoff);

    if (r.stable_end_grade.resolved() && r.ext_side.resolved())
        r.sides_agree = r.stable_end_grade.value == r.ext_side.value;
    else
        r.sides_agree = !r.stable_end_grade.resolved() && !r.ext_side.resolved();

    if (r.stable_end_grade.resolved()) {
        long g = r.stable_end_grade.value;
        r.dim_equality_applicable = true;
        ExtTable stext = ext_dims(st, regular_module(nse.end.alg), g);
        r.dim_equality = stext.dims[g] == t.dims[g - 1];
    }
    return r;
}

}  // namespace pierce
