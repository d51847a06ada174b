#include "pierce/suite.hpp"

#include <chrono>

namespace pierce {

namespace {

std::string dims_str(const std::vector<long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

}  // namespace

std::vector<Check> battery_axioms_pierce(const SuiteOptions& o) {
    (void)o;
    std::vector<Check> out;
    bool axioms = true;
    std::string bad;
    for (const auto& [name, alg] : corpus::base_algebras()) {
        auto rep = validate_algebra(*alg);
        if (!rep.ok) {
            axioms = false;
            bad = name;
        }
    }
    for (auto* sgp : {&corpus::fixture_sg_qx3, &corpus::fixture_sg_q3}) {
        auto sg = (*sgp)();
        auto rep = validate_algebra(*sg.SG);
        if (!rep.ok) {
            axioms = false;
            bad = "skew";
        }
    }
    out.push_back(Check::make(checkname::axioms, axioms).with("corpus_size", 12));

    bool closure = true;
    for (const auto& nc : corpus::context_corpus()) {
        const auto& pd = nc.ctx.pd;
        const Algebra& C = *nc.ctx.C;
        struct Piece {
            const PierceSummand* s;
            const Vec* p;
            const Vec* q;
        };
        Piece pieces[4] = {{&pd.B, &pd.e_comp, &pd.e_comp},
                           {&pd.M, &pd.e_comp, &pd.e},
                           {&pd.N, &pd.e, &pd.e_comp},
                           {&pd.A, &pd.e, &pd.e}};
        for (const auto& x : pieces)
            for (const auto& y : pieces) {
                bool compose = vec_is_zero(vec_sub(C.multiply(*x.q, *x.q), *x.q)) &&
                               (*x.q == *y.p);  // q idempotent and q == p'
                for (long i = 0; i < x.s->space.dim(); ++i)
                    for (long j = 0; j < y.s->space.dim(); ++j) {
                        Vec prod =
                            C.multiply(x.s->space.basis_vector(i), y.s->space.basis_vector(j));
                        if (compose) {
                            // target is p C q'
                            if (x.p == &pd.e_comp && y.q == &pd.e_comp) {
                                if (!pd.B.space.contains(prod)) closure = false;
                            } else if (x.p == &pd.e_comp && y.q == &pd.e) {
                                if (!pd.M.space.contains(prod)) closure = false;
                            } else if (x.p == &pd.e && y.q == &pd.e_comp) {
                                if (!pd.N.space.contains(prod)) closure = false;
                            } else {
                                if (!pd.A.space.contains(prod)) closure = false;
                            }
                        } else if (!vec_is_zero(prod)) {
                            closure = false;
                        }
                    }
            }
    }
    out.push_back(
        Check::make(checkname::pierce_closure, closure).with("contexts", (long)corpus::context_corpus().size()));
    return out;
}

std::vector<Check> battery_fundamental(const SuiteOptions& o) {
    (void)o;
    std::vector<Check> out;
    bool exact = true, annih = true, omega = true;
    for (const auto& nc : corpus::context_corpus()) {
        Defects df = compute_defects(nc.ctx);
        if (!df.coker_f_matches || !df.coker_g_matches) exact = false;
        FundamentalSequence fs = fundamental_sequence(nc.ctx, df);
        if (!fs.exact) exact = false;
        if (!fs.e_annihilates) annih = false;
        if (fs.omega_dim != fs.tor2_dim) omega = false;
    }
    out.push_back(Check::make(checkname::fund_exact, exact));
    out.push_back(Check::make(checkname::fund_annihilation, annih));
    out.push_back(Check::make(checkname::fund_omega_tor2, omega));
    return out;
}

std::vector<Check> battery_alpha_grade(const SuiteOptions& o) {
    (void)o;
    std::vector<Check> out;
    bool ok = true;
    std::string detail;
    for (const auto& nc : corpus::context_corpus()) {
        Defects df = compute_defects(nc.ctx);
        AlphaReport ar = alpha_map_check(nc.ctx, df);
        if (!(ar.ring_hom && ar.matches_ext0 && ar.matches_ext1)) {
            ok = false;
            detail = nc.name;
        }
    }
    Check c = Check::make(checkname::prop_2_9, ok);
    if (!detail.empty()) c.with("first_failure", detail);
    out.push_back(c);
    return out;
}

std::vector<Check> battery_grade_theorem(const SuiteOptions& o) {
    std::vector<Check> out;
    bool ok = true;
    long count = 0;
    std::string detail;
    long dual_g = -1;
    for (const auto& gp : corpus::generator_pairs()) {
        GradeTheoremReport r = verify_grade_theorem(gp.A, gp.M, o.cutoff);
        ++count;
        bool this_ok = r.sides_agree && (!r.dim_equality_applicable || r.dim_equality);
        if (r.stable_end_grade.resolved() && r.stable_end_grade.value < 2) this_ok = false;
        if (!this_ok) {
            ok = false;
            detail = gp.name + " stEnd-grade=" + r.stable_end_grade.str() +
                     " ext-side=" + r.ext_side.str();
        }
        if (gp.name == "dual,A+S")
            dual_g = r.stable_end_grade.resolved() ? r.stable_end_grade.value : -1;
    }
    if (dual_g != 2) {
        ok = false;
        detail += " dual,A+S expected grade 2 got " + std::to_string(dual_g);
    }
    Check c = Check::make(checkname::thm_2_13, ok).with("pairs", count);
    if (!detail.empty()) c.with("detail", detail);
    out.push_back(c);
    return out;
}

std::vector<Check> battery_hh_agreement(const SuiteOptions& o) {
    std::vector<Check> out;
    bool ok = true;
    std::string detail;
    auto check_algebra = [&](const std::string& name, const AlgP& A) {
        Bimodule reg = regular_bimodule(A);
        HHTable ext = hh_via_ext(A, reg, 4, o.res);
        HHTable bar = hh_via_bar(A, reg, 4, o.bar);
        long upto = std::min(ext.feasible, bar.feasible);
        for (long i = 0; i <= upto; ++i)
            if (ext.dims[i] != bar.dims[i]) {
                ok = false;
                detail = name + " degree " + std::to_string(i) + ": ext=" + dims_str(ext.dims) +
                         " bar=" + dims_str(bar.dims);
            }
        if (A->dim() <= 6 && bar.feasible < 4) {
            ok = false;
            detail = name + " bar infeasible below degree 4";
        }
        return ext.dims;
    };
    for (const auto& [name, alg] : corpus::base_algebras()) check_algebra(name, alg);
    auto m2 = check_algebra("M2Q", corpus::m2q());
    auto du = check_algebra("dual", corpus::dual_numbers());
    check_algebra("SG(Qx3,Z2)", corpus::fixture_sg_qx3().SG);
    check_algebra("SG(Q3,Z3)", corpus::fixture_sg_q3().SG);
    if (m2 != std::vector<long>{1, 0, 0, 0, 0}) {
        ok = false;
        detail += " M2Q dims " + dims_str(m2);
    }
    if (du != std::vector<long>{2, 1, 1, 1, 1}) {
        ok = false;
        detail += " dual dims " + dims_str(du);
    }
    Check c = Check::make(checkname::hh_agreement, ok);
    c.with("m2q", dims_str(m2)).with("dual", dims_str(du));
    if (!detail.empty()) c.with("detail", detail);
    out.push_back(c);
    return out;
}

std::vector<Check> battery_morita_invariance(const SuiteOptions& o) {
    std::vector<Check> out;
    bool ok = true;
    std::string detail;
    for (const auto& [name, base] :
         {std::pair<std::string, AlgP>{"Q", corpus::rationals()},
          std::pair<std::string, AlgP>{"dual", corpus::dual_numbers()}}) {
        AlgP m2a = tensor_algebra(*corpus::m2q(), *base);
        HHTable hh_big = hh_via_ext(m2a, regular_bimodule(m2a), 3, o.res);
        HHTable hh_base = hh_via_ext(base, regular_bimodule(base), 3, o.res);
        if (hh_big.dims != hh_base.dims) {
            ok = false;
            detail = "M2(" + name + ") dims " + dims_str(hh_big.dims) + " vs " +
                     dims_str(hh_base.dims);
        }
        Vec e = vec_zero(m2a->dim(), m2a->field());
        e[0] = Scalar::one(m2a->field());  // E11 (x) 1
        MoritaContext ctx = build_context(m2a, make_idempotent(*m2a, e));
        ChiData cd = chi_comparison(ctx, 3, o.bar);
        if (!cd.chain_map || cd.feasible < 3) {
            ok = false;
            detail += " chi infeasible for M2(" + name + ")";
            continue;
        }
        for (long n = 0; n <= 3; ++n) {
            InducedMap im = induced_on_hh(cd.barC, cd.barA, cd.chi[n], n);
            if (!im.bijective) {
                ok = false;
                detail += " chi^" + std::to_string(n) + " not bijective for M2(" + name + ")";
            }
        }
    }
    Check c = Check::make(checkname::prop_5_1, ok);
    if (!detail.empty()) c.with("detail", detail);
    out.push_back(c);
    return out;
}

std::vector<Check> battery_chi(const SuiteOptions& o) {
    std::vector<Check> out;
    bool cup_ok = true, window_ok = true, rel_ok = true, hom_ok = true, centres_ok = true;
    std::string detail;
    for (const auto& nc : corpus::context_corpus()) {
        const MoritaContext& ctx = nc.ctx;
        ChiData cd = chi_comparison(ctx, o.cutoff, o.bar);
        if (!cd.chain_map) {
            cup_ok = false;
            detail += nc.name + ": chi not a chain map;";
            continue;
        }
        // cup compatibility on sampled cocycle pairs, lowest total degree
        // first; kernels are only materialized in cheap degrees
        long sampled = 0;
        std::vector<Mat> zs(cd.feasible + 1);
        std::vector<bool> have(cd.feasible + 1, false);
        auto cocycles = [&](long m) -> const Mat& {
            if (!have[m]) {
                if (m <= 1 || cd.barC.cdim[m] <= 2048)
                    zs[m] = kernel_basis(cd.barC.delta[m]);
                else
                    zs[m] = Mat(cd.barC.cdim[m], 0, ctx.C->field());
                have[m] = true;
            }
            return zs[m];
        };
        for (long total = 0; total <= cd.feasible && sampled < 10; ++total)
            for (long m = 0; m <= total && sampled < 10; ++m) {
                long n = total - m;
                const Mat& Zm = cocycles(m);
                const Mat& Zn = cocycles(n);
                for (long i = 0; i < Zm.cols() && sampled < 10; ++i)
                    for (long j = 0; j < Zn.cols() && sampled < 10; ++j) {
                        Vec phi = Zm.col(i), psi = Zn.col(j);
                        Vec cup_c = cup_product(*ctx.C, m, phi, n, psi);
                        Vec lhs = cd.chi[m + n].apply(cup_c);
                        Vec rhs = cup_product(*ctx.A, m, cd.chi[m].apply(phi), n,
                                              cd.chi[n].apply(psi));
                        Vec diff = vec_sub(lhs, rhs);
                        if (!is_coboundary(cd.barA, m + n, diff)) {
                            cup_ok = false;
                            detail += nc.name + ": cup mismatch at (" + std::to_string(m) + "," +
                                      std::to_string(n) + ");";
                        }
                        ++sampled;
                    }
            }
        if (sampled < 10) {
            cup_ok = false;
            detail += nc.name + ": fewer than 10 cocycle pairs available;";
        }
        // degree-0 naturality: compression of the centre
        {
            Subspace zc = centre(*ctx.C);
            for (long i = 0; i < zc.dim(); ++i) {
                Vec z = zc.basis_vector(i);
                Vec lhs = cd.chi[0].apply(z);  // C^0 = C, target A-coordinates
                Vec rhs = ctx.pd.A.projection.apply(z);
                if (!vec_is_zero(vec_sub(lhs, rhs))) centres_ok = false;
            }
        }
        MHHReport mr = verify_MHH(ctx, o.cutoff, o.bar, &cd);
        if (mr.inconclusive) continue;  // grade unresolved: no assertion
        if (!mr.chi_iso_below || !mr.chi_inj_at_gm1) {
            window_ok = false;
            detail += nc.name + ": chi window fails (g=" + mr.g.str() + ");";
        }
        if (!mr.rel_vanishing) {
            rel_ok = false;
            detail += nc.name + ": relative HH does not vanish below g;";
        }
        if (!mr.homology_id_match) {
            hom_ok = false;
            detail += nc.name + ": relative homology identification fails;";
        }
        // centres of Auslander contexts coincide
        if (mr.g.at_least(2)) {
            InducedMap im0 = mr.chi_maps[0];
            if (!im0.bijective) centres_ok = false;
        }
    }
    out.push_back(Check::make(checkname::thm_4_7, cup_ok));
    Check w = Check::make(checkname::thm_5_5, window_ok && rel_ok);
    if (!detail.empty()) w.with("detail", detail);
    out.push_back(w);
    out.push_back(Check::make(checkname::lem_5_3, hom_ok));
    out.push_back(Check::make(checkname::cor_5_6, centres_ok));
    return out;
}

std::vector<Check> battery_rigidity(const SuiteOptions& o) {
    std::vector<Check> out;
    AlgP A = corpus::ut2();
    RightModule M = corpus::ut2_proj_simple();
    ExtTable e = ext_dims(M, M, 1, o.res);
    HHTable hha = hh_via_ext(A, regular_bimodule(A), 2, o.res);
    bool hyp = e.dims[1] == 0 && hha.dims[2] == 0;
    AuslanderBuild ab = auslander_context(A, M);
    HHTable hhc = hh_via_ext(ab.end.alg, regular_bimodule(ab.end.alg), 2, o.res);
    bool ok = hyp && hhc.dims[2] == 0;
    out.push_back(Check::make(checkname::rigidity, ok)
                      .with("ext1", e.dims[1])
                      .with("hh2_A", hha.dims[2])
                      .with("hh2_C", hhc.dims[2]));
    return out;
}

std::vector<Check> battery_degeneration(const SuiteOptions& o) {
    std::vector<Check> out;
    bool ok = true;
    std::string detail;
    for (auto* fx : {&corpus::fixture_sg_qx3, &corpus::fixture_sg_q3}) {
        SkewGroupData sg = (*fx)();
        DegenerationReport r = verify_degeneration(sg, regular_bimodule(sg.SG), 3, o.bar);
        if (!r.applicable || !r.equal || !r.action_commutes || r.checked_to < 3) {
            ok = false;
            detail += "lhs=" + dims_str(r.lhs) + " rhs=" + dims_str(r.rhs) + ";";
        }
    }
    Check c = Check::make(checkname::thm_6_17, ok);
    if (!detail.empty()) c.with("detail", detail);
    out.push_back(c);
    return out;
}

std::vector<Check> battery_invariant_ring(const SuiteOptions& o) {
    std::vector<Check> out;
    bool annih = true, grade_depth = true, extsg = true, hhinv = true, extr = true;
    for (auto* fx : {&corpus::fixture_sg_qx3, &corpus::fixture_sg_q3}) {
        SkewGroupData sg = (*fx)();
        InvariantComparisonReport r = verify_invariant_comparison(sg, 4, o.bar);
        if (!r.annihilation) annih = false;
        if (r.grade_vs_depth == "fail") grade_depth = false;
        if (r.ext_sg_vanishing == "fail") extsg = false;
        if (r.hh_invariants == "fail") hhinv = false;
        if (r.ext_R_vanishing == "fail") extr = false;
    }
    out.push_back(Check::make(checkname::prop_7_1, annih));
    out.push_back(Check::make(checkname::cor_7_2, grade_depth));
    out.push_back(Check::make(checkname::lem_7_3, extsg));
    out.push_back(Check::make(checkname::thm_7_5_ext, extr));
    out.push_back(Check::make(checkname::thm_7_5, hhinv));

    // structural skew-group checks across the action fixtures
    {
        bool structure = true, outer_class = true, centre_ok = true, sep_ok = true;
        SkewGroupData s1 = corpus::fixture_sg_qx3();
        SkewGroupData s2 = corpus::fixture_sg_q3();
        SkewGroupData s3 = build_skew_group(corpus::z2_on_qsqrt2());
        TraceReport t1 = trace_and_invariants(s1);
        TraceReport t2 = trace_and_invariants(s2);
        if (!t1.image_in_R || !t1.surjective_onto_R || !t1.order_invertible) structure = false;
        if (!t2.image_in_R || !t2.surjective_onto_R || !t2.order_invertible) structure = false;
        TraceReport t4 = trace_and_invariants(build_skew_group(corpus::trivial_z2_f2()));
        if (t4.order_invertible || t4.surjective_onto_R) structure = false;

        OuterReport o1 = infinitesimally_outer(s1);
        OuterReport o2 = infinitesimally_outer(s2);
        OuterReport o3 = infinitesimally_outer(s3);
        if (o1.outer) outer_class = false;  // x^2 twists through the sign
        if (!o2.outer || !o3.outer) outer_class = false;
        if (!o1.crosscheck_ok || !o2.crosscheck_ok || !o3.crosscheck_ok) outer_class = false;

        CentreSGReport c2 = centre_of_SG_check(s2);
        CentreSGReport c3 = centre_of_SG_check(s3);
        CentreSGReport c1 = centre_of_SG_check(s1);
        centre_ok = c2.applicable && c2.match && c2.equals_R && c3.applicable && c3.match &&
                    c3.equals_R && !c1.applicable;

        // separability against defect vanishing
        SGContext sc1 = sg_context_and_defect(s1, 2);
        SGContext sc2 = sg_context_and_defect(s2, 2);
        SeparabilityReport r1 = separability_check(s1.action.S, s1.R);
        SeparabilityReport r2 = separability_check(s2.action.S, s2.R);
        if (r1.separable || !r1.theta_check_ok) sep_ok = false;  // Qx3 over its invariants: not separable
        if (!r2.separable || !r2.theta_check_ok) sep_ok = false;
        if (sc1.SGbar.alg->dim() == 0) sep_ok = false;  // would contradict non-separability
        if (sc2.SGbar.alg->dim() != 0) sep_ok = false;

        out.push_back(Check::make(checkname::skew_invariants, structure));
        out.push_back(Check::make(checkname::lem_6_10, centre_ok));
        out.push_back(Check::make(checkname::prop_6_15, sep_ok && outer_class));
    }

    // the Q^3 x| Z/3 fixture: everything collapses to a Morita equivalence
    SkewGroupData sg = corpus::fixture_sg_q3();
    SGContext sc = sg_context_and_defect(sg, o.cutoff);
    ContextReport cr = classify_context(sc.ctx, o.cutoff);
    bool collapse = sc.SGbar.alg->dim() == 0 && cr.morita_equivalence && sc.corner_is_R &&
                    sc.defect_matches && sc.defect_p_matches;
    HHTable hr = hh_via_ext(sg.R.alg, regular_bimodule(sg.R.alg), 3, o.res);
    HHTable hsg = hh_via_ext(sg.SG, regular_bimodule(sg.SG), 3, o.res);
    bool dims_ok = collapse && hr.dims == std::vector<long>{1, 0, 0, 0} &&
                   hsg.dims == std::vector<long>{1, 0, 0, 0};
    out.push_back(Check::make(checkname::cor_6_18, dims_ok)
                      .with("hhR", dims_str(hr.dims))
                      .with("hhSG", dims_str(hsg.dims)));
    return out;
}

Report run_suite(const SuiteOptions& o) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "suite";
    rep.cutoff = o.cutoff;
    for (auto* b : {&battery_axioms_pierce, &battery_fundamental, &battery_alpha_grade,
                    &battery_grade_theorem, &battery_hh_agreement, &battery_morita_invariance,
                    &battery_chi, &battery_rigidity, &battery_degeneration,
                    &battery_invariant_ring}) {
        auto cs = (*b)(o);
        rep.checks.insert(rep.checks.end(), cs.begin(), cs.end());
    }
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

}  // namespace pierce
