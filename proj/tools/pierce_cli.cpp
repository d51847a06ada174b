#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pierce/io.hpp"
#include "pierce/suite.hpp"

using namespace pierce;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string dims_str(const std::vector<long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

int finish(Report& rep, const Timer& t, bool zero_time) {
    rep.wall_ms = zero_time ? 0 : t.ms();
    std::cout << report_to_json(rep);
    return rep.all_passed() ? 0 : 1;
}

long env_cap(const char* name, long dflt) {
    const char* v = std::getenv(name);
    return v ? std::atol(v) : dflt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Morita/Hochschild engine for structure-constant algebras"};
    app.require_subcommand(1);

    std::string alg_path, idem_path, mod_path, mod2_path, act_path;
    long cutoff = 5, maxdeg = 4;
    std::string method = "both";
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "report wall_ms as 0 for byte-stable output");

    BarOptions bar;
    bar.cap = env_cap("PIERCE_BAR_CAP", 200000);
    ResolutionLimits res;
    res.max_total_dim = env_cap("PIERCE_RESOLUTION_CAP", 20000);

    auto* validate = app.add_subcommand("validate", "validate an algebra file");
    validate->add_option("--algebra", alg_path)->required();

    auto* pierce_cmd = app.add_subcommand("pierce", "Pierce decomposition for (C, e)");
    pierce_cmd->add_option("--algebra", alg_path)->required();
    pierce_cmd->add_option("--idempotent", idem_path)->required();

    auto* classify = app.add_subcommand("classify", "classify the Morita context (C, e)");
    classify->add_option("--algebra", alg_path)->required();
    classify->add_option("--idempotent", idem_path)->required();
    classify->add_option("--cutoff", cutoff);

    auto* ext = app.add_subcommand("ext", "Ext table of a module pair");
    ext->add_option("--algebra", alg_path)->required();
    ext->add_option("--module", mod_path)->required();
    ext->add_option("--coefficients", mod2_path, "second module (defaults to the regular module)");
    ext->add_option("--max-degree", maxdeg);

    auto* grade = app.add_subcommand("grade", "grade of a module");
    grade->add_option("--algebra", alg_path)->required();
    grade->add_option("--module", mod_path)->required();
    grade->add_option("--cutoff", cutoff);

    auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions");
    hh->add_option("--algebra", alg_path)->required();
    hh->add_option("--max-degree", maxdeg);
    hh->add_option("--method", method, "bar | ext | both");

    auto* chi = app.add_subcommand("chi", "comparison map for (C, e)");
    chi->add_option("--algebra", alg_path)->required();
    chi->add_option("--idempotent", idem_path)->required();
    chi->add_option("--cutoff", cutoff);

    auto* ausl = app.add_subcommand("auslander", "endomorphism context of (A, M)");
    ausl->add_option("--algebra", alg_path)->required();
    ausl->add_option("--module", mod_path)->required();
    ausl->add_option("--cutoff", cutoff);

    auto* skew = app.add_subcommand("skew", "build a skew group algebra");
    skew->add_option("--algebra", alg_path)->required();
    skew->add_option("--action", act_path)->required();

    auto* inv = app.add_subcommand("invariants", "invariant-ring verifier battery");
    inv->add_option("--algebra", alg_path)->required();
    inv->add_option("--action", act_path)->required();
    inv->add_option("--cutoff", cutoff);

    auto* suite = app.add_subcommand("suite", "run the full verification battery");
    suite->add_option("--cutoff", cutoff);

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    try {
        if (validate->parsed()) {
            Report rep;
            rep.command = "validate";
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            rep.checks.push_back(Check::make(checkname::axioms, true)
                                     .with("dim", a->dim())
                                     .with("field", a->field().name()));
            return finish(rep, timer, no_timing);
        }
        if (pierce_cmd->parsed()) {
            Report rep;
            rep.command = "pierce";
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            Idempotent e = idempotent_from_doc(load_spec_file(idem_path), a);
            PierceData pd = pierce_decompose(a, e);
            rep.checks.push_back(Check::make(checkname::pierce_closure, true)
                                     .with("dim_B", pd.B.space.dim())
                                     .with("dim_M", pd.M.space.dim())
                                     .with("dim_N", pd.N.space.dim())
                                     .with("dim_A", pd.A.space.dim()));
            return finish(rep, timer, no_timing);
        }
        if (classify->parsed()) {
            Report rep;
            rep.command = "classify";
            rep.cutoff = cutoff;
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            Idempotent e = idempotent_from_doc(load_spec_file(idem_path), a);
            MoritaContext ctx = build_context(a, e);
            ContextReport cr = classify_context(ctx, cutoff);
            rep.checks.push_back(Check::make(checkname::fund_exact, cr.fundamental_exact)
                                     .with("omega_dim", cr.omega_dim));
            Defects df = compute_defects(ctx);
            AlphaReport ar = alpha_map_check(ctx, df);
            rep.checks.push_back(
                Check::make(checkname::prop_2_9, ar.ring_hom && ar.matches_ext0 && ar.matches_ext1)
                    .with("alpha_injective", ar.injective ? "true" : "false")
                    .with("alpha_bijective", ar.bijective ? "true" : "false")
                    .with("ext0", ar.ext0)
                    .with("ext1", ar.ext1));
            Check flags = Check::make(checkname::prop_2_16, cr.prop_wed_consistent);
            flags.with("defect_dim", cr.dim_defect)
                .with("defect_p_dim", cr.dim_defect_p)
                .with("grade_defect", cr.grade_defect.str())
                .with("lgrade_defect", cr.lgrade_defect.str())
                .with("morita_idempotent", cr.morita_idempotent ? "true" : "false")
                .with("morita_equivalence", cr.morita_equivalence ? "true" : "false")
                .with("auslander", cr.auslander ? "true" : "false")
                .with("wedderburn", cr.wedderburn ? "true" : "false");
            rep.checks.push_back(flags);
            return finish(rep, timer, no_timing);
        }
        if (ext->parsed()) {
            Report rep;
            rep.command = "ext";
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            RightModule m = module_from_doc(load_spec_file(mod_path), a);
            RightModule n =
                mod2_path.empty() ? regular_module(a) : module_from_doc(load_spec_file(mod2_path), a);
            ExtTable t = ext_dims(m, n, maxdeg, res);
            rep.checks.push_back(Check::make("ext-table", true).with("dims", dims_str(t.dims)));
            return finish(rep, timer, no_timing);
        }
        if (grade->parsed()) {
            Report rep;
            rep.command = "grade";
            rep.cutoff = cutoff;
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            RightModule m = module_from_doc(load_spec_file(mod_path), a);
            GradeBound g = grade_of(m, cutoff, res);
            rep.checks.push_back(Check::make("grade", true).with("value", g.str()));
            return finish(rep, timer, no_timing);
        }
        if (hh->parsed()) {
            Report rep;
            rep.command = "hh";
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            Bimodule reg = regular_bimodule(a);
            Check c("hh-dims", "pass", {});
            if (method == "bar" || method == "both") {
                HHTable tb = hh_via_bar(a, reg, maxdeg, bar);
                c.with("bar", dims_str(tb.dims)).with("bar_feasible", tb.feasible);
            }
            if (method == "ext" || method == "both") {
                HHTable te = hh_via_ext(a, reg, maxdeg, res);
                c.with("ext", dims_str(te.dims));
            }
            if (method == "both") {
                HHTable tb = hh_via_bar(a, reg, maxdeg, bar);
                HHTable te = hh_via_ext(a, reg, maxdeg, res);
                bool agree = true;
                for (long i = 0; i <= std::min(tb.feasible, te.feasible); ++i)
                    if (tb.dims[i] != te.dims[i]) agree = false;
                rep.checks.push_back(Check::make(checkname::hh_agreement, agree));
            }
            rep.checks.push_back(c);
            return finish(rep, timer, no_timing);
        }
        if (chi->parsed()) {
            Report rep;
            rep.command = "chi";
            rep.cutoff = cutoff;
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            Idempotent e = idempotent_from_doc(load_spec_file(idem_path), a);
            MoritaContext ctx = build_context(a, e);
            MHHReport mr = verify_MHH(ctx, cutoff, bar);
            if (mr.inconclusive) {
                rep.checks.push_back(Check{checkname::thm_5_5, "inconclusive", {}});
            } else {
                Check c = Check::make(checkname::thm_5_5,
                                      mr.chi_iso_below && mr.chi_inj_at_gm1 && mr.rel_vanishing);
                c.with("grade", mr.g.str()).with("feasible", mr.feasible);
                c.with("relative_dims", dims_str(mr.rel_dims));
                rep.checks.push_back(c);
                rep.checks.push_back(Check::make(checkname::lem_5_3, mr.homology_id_match));
            }
            return finish(rep, timer, no_timing);
        }
        if (ausl->parsed()) {
            Report rep;
            rep.command = "auslander";
            rep.cutoff = cutoff;
            AlgP a = algebra_from_doc(load_spec_file(alg_path));
            RightModule m = module_from_doc(load_spec_file(mod_path), a);
            AuslanderBuild ab = auslander_context(a, m);
            ContextReport cr = classify_context(ab.ctx, cutoff);
            rep.checks.push_back(Check::make("auslander-build",
                                             ab.corner_dims_ok && ab.corner_A_iso)
                                     .with("dim_C", ab.end.alg->dim())
                                     .with("defect_dim", cr.dim_defect)
                                     .with("grade_defect", cr.grade_defect.str())
                                     .with("auslander", cr.auslander ? "true" : "false"));
            return finish(rep, timer, no_timing);
        }
        if (skew->parsed()) {
            Report rep;
            rep.command = "skew";
            AlgP s = algebra_from_doc(load_spec_file(alg_path));
            GroupAction act = action_from_doc(load_spec_file(act_path), s);
            SkewGroupData sg = build_skew_group(act);
            TraceReport tr = trace_and_invariants(sg);
            rep.checks.push_back(Check::make(checkname::skew_invariants, tr.image_in_R)
                                     .with("dim_SG", sg.SG->dim())
                                     .with("dim_R", sg.R.alg->dim())
                                     .with("trace_surjective", tr.surjective_onto_R ? "true" : "false")
                                     .with("order_invertible", tr.order_invertible ? "true" : "false"));
            return finish(rep, timer, no_timing);
        }
        if (inv->parsed()) {
            Report rep;
            rep.command = "invariants";
            rep.cutoff = cutoff;
            AlgP s = algebra_from_doc(load_spec_file(alg_path));
            GroupAction act = action_from_doc(load_spec_file(act_path), s);
            SkewGroupData sg = build_skew_group(act);
            InvariantComparisonReport r = verify_invariant_comparison(sg, cutoff, bar);
            rep.checks.push_back(Check::make(checkname::prop_7_1, r.annihilation));
            rep.checks.push_back(Check{checkname::cor_7_2, r.grade_vs_depth,
                                       {{"grade", r.grade_SGbar.str()}, {"depth", r.depth_theta.str()}}});
            rep.checks.push_back(Check{checkname::lem_7_3, r.ext_sg_vanishing, {}});
            rep.checks.push_back(Check{checkname::thm_7_5, r.hh_invariants,
                                       {{"hhS_fixed", dims_str(r.hhS_fixed)}, {"hhR", dims_str(r.hhR)}}});
            rep.checks.push_back(Check{checkname::thm_7_5_ext, r.ext_R_vanishing, {}});
            DegenerationReport dr = verify_degeneration(sg, regular_bimodule(sg.SG), 3, bar);
            rep.checks.push_back(Check{checkname::thm_6_17,
                                       dr.applicable ? (dr.equal ? "pass" : "fail") : "inapplicable",
                                       {{"lhs", dims_str(dr.lhs)}, {"rhs", dims_str(dr.rhs)}}});
            return finish(rep, timer, no_timing);
        }
        if (suite->parsed()) {
            SuiteOptions so;
            so.cutoff = cutoff;
            so.bar = bar;
            so.res = res;
            Report rep = run_suite(so);
            return finish(rep, timer, no_timing);
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
