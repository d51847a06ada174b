#include "pierce/corpus.hpp"

namespace pierce::corpus {

namespace {

const FieldSpec Q{};

Scalar q(long n) { return Scalar(n, Q); }

using Triple = std::tuple<long, long, long, long>;  // i, j, k, value

AlgP make(long dim, std::vector<std::string> labels, const std::vector<Triple>& triples,
          std::vector<long> unit) {
    std::vector<Algebra::ProdEntry> prods(dim * dim);
    for (const auto& [i, j, k, v] : triples) prods[i * dim + j].push_back({k, q(v)});
    Vec u = vec_zero(dim, Q);
    for (long i = 0; i < dim; ++i) u[i] = q(unit[i]);
    auto a = std::make_shared<Algebra>(Q, dim, std::move(labels), std::move(prods), std::move(u));
    auto rep = validate_algebra(*a);
    if (!rep.ok) throw ValidationError("corpus algebra failed validation");
    return a;
}

RightModule module_of(const AlgP& A, const std::vector<Mat>& rho) {
    RightModule m{A, rho.empty() ? 0 : rho[0].rows(), rho, {}};
    auto rep = validate_right_module(m);
    if (!rep.ok) throw ValidationError("corpus module failed validation");
    return m;
}

Mat scalar_mat(long dim, long v) { return Mat::identity(dim, Q).scaled(q(v)); }

}  // namespace

AlgP rationals() {
    static AlgP a = make(1, {"1"}, {{0, 0, 0, 1}}, {1});
    return a;
}

AlgP dual_numbers() {
    static AlgP a = make(2, {"1", "x"},
                         {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}},  // x^2 = 0
                         {1, 0});
    return a;
}

AlgP qu2() {
    static AlgP a = make(2, {"1", "u"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}, {1, 0});
    return a;
}

AlgP qx3() {
    static AlgP a = make(3, {"1", "x", "x2"},
                         {{0, 0, 0, 1},
                          {0, 1, 1, 1},
                          {1, 0, 1, 1},
                          {0, 2, 2, 1},
                          {2, 0, 2, 1},
                          {1, 1, 2, 1}},
                         {1, 0, 0});
    return a;
}

AlgP ut2() {
    // basis E11, E12, E22
    static AlgP a = make(3, {"E11", "E12", "E22"},
                         {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}},
                         {1, 0, 1});
    return a;
}

AlgP m2q() {
    // basis E11, E12, E21, E22; Eij Ekl = delta_jk Eil
    std::vector<Triple> t;
    auto idx = [](long i, long j) { return i * 2 + j; };
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            for (long k = 0; k < 2; ++k)
                for (long l = 0; l < 2; ++l)
                    if (j == k) t.push_back({idx(i, j), idx(k, l), idx(i, l), 1});
    static AlgP a = make(4, {"E11", "E12", "E21", "E22"}, t, {1, 0, 0, 1});
    return a;
}

AlgP q2() {
    static AlgP a = make(2, {"e1", "e2"}, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1});
    return a;
}

AlgP q3() {
    static AlgP a = make(3, {"e1", "e2", "e3"}, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}},
                         {1, 1, 1});
    return a;
}

AlgP qsqrt2() {
    static AlgP a = make(2, {"1", "s"},
                         {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 2}},  // s^2 = 2
                         {1, 0});
    return a;
}

AlgP a2path() {
    // e1, e2 orthogonal idempotents, arrow a with e2 a = a = a e1
    static AlgP a = make(3, {"e1", "e2", "a"},
                         {{0, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 2, 1}},
                         {1, 1, 0});
    return a;
}

std::vector<Named> base_algebras() {
    return {{"Q", rationals()}, {"dual", dual_numbers()}, {"Qx3", qx3()},
            {"Qu2", qu2()},     {"UT2", ut2()},           {"M2Q", m2q()},
            {"Q2", q2()},       {"Q3", q3()},             {"Qsqrt2", qsqrt2()},
            {"A2path", a2path()}};
}

RightModule dual_simple() {
    auto A = dual_numbers();
    return module_of(A, {scalar_mat(1, 1), scalar_mat(1, 0)});
}

RightModule qx3_simple() {
    auto A = qx3();
    return module_of(A, {scalar_mat(1, 1), scalar_mat(1, 0), scalar_mat(1, 0)});
}

RightModule qx3_middle() {
    auto A = qx3();
    // Q[x]/(x^2) with x acting as the nilpotent shift
    Mat one = Mat::identity(2, Q);
    Mat x(2, 2, Q);
    x.set(1, 0, q(1));
    Mat x2(2, 2, Q);
    return module_of(A, {one, x, x2});
}

RightModule ut2_proj_simple() {
    auto A = ut2();
    return module_of(A, {scalar_mat(1, 0), scalar_mat(1, 0), scalar_mat(1, 1)});
}

RightModule ut2_other_simple() {
    auto A = ut2();
    return module_of(A, {scalar_mat(1, 1), scalar_mat(1, 0), scalar_mat(1, 0)});
}

RightModule m2q_rows() {
    auto A = m2q();
    // the simple right module: row vectors; v.Eij sends coordinate i to j
    auto e = [](long r, long c) {
        Mat m(2, 2, Q);
        m.set(r, c, Scalar(1, Q));
        return m;
    };
    return module_of(A, {e(0, 0), e(1, 0), e(0, 1), e(1, 1)});
}

GroupAction z2_on_qx3() {
    Mat g(3, 3, Q);
    g.set(0, 0, q(1));
    g.set(1, 1, q(-1));
    g.set(2, 2, q(1));
    return GroupAction{cyclic_group(2), qx3(), {Mat::identity(3, Q), g}};
}

GroupAction z3_on_q3() {
    Mat g(3, 3, Q);
    g.set(1, 0, q(1));
    g.set(2, 1, q(1));
    g.set(0, 2, q(1));
    return GroupAction{cyclic_group(3), q3(), {Mat::identity(3, Q), g, g * g}};
}

GroupAction z2_on_qsqrt2() {
    Mat g(2, 2, Q);
    g.set(0, 0, q(1));
    g.set(1, 1, q(-1));
    return GroupAction{cyclic_group(2), qsqrt2(), {Mat::identity(2, Q), g}};
}

GroupAction trivial_on(const AlgP& S) {
    return GroupAction{cyclic_group(1), S, {Mat::identity(S->dim(), S->field())}};
}

GroupAction trivial_z2_f2() {
    FieldSpec f2{2};
    std::vector<Algebra::ProdEntry> prods{{{0, Scalar::one(f2)}}};
    auto S = std::make_shared<Algebra>(f2, 1, std::vector<std::string>{"1"}, prods,
                                       Vec{Scalar::one(f2)});
    return GroupAction{cyclic_group(2), S, {Mat::identity(1, f2), Mat::identity(1, f2)}};
}

SkewGroupData fixture_sg_qx3() {
    static SkewGroupData sg = build_skew_group(z2_on_qx3());
    return sg;
}
SkewGroupData fixture_sg_q3() {
    static SkewGroupData sg = build_skew_group(z3_on_q3());
    return sg;
}

namespace {

Vec unit_idem(const AlgP& A, std::initializer_list<long> coeffs) {
    Vec v = vec_zero(A->dim(), Q);
    long i = 0;
    for (long c : coeffs) v[i++] = q(c);
    return v;
}

}  // namespace

namespace {

std::vector<NamedContext> build_context_corpus();

}  // namespace

std::vector<NamedContext> context_corpus() {
    static std::vector<NamedContext> cached = build_context_corpus();
    return cached;
}

namespace {

std::vector<NamedContext> build_context_corpus() {
    std::vector<NamedContext> out;
    auto add = [&](const std::string& name, const AlgP& C, const Vec& e) {
        out.push_back({name, build_context(C, make_idempotent(*C, e))});
    };
    add("M2Q,e11", m2q(), unit_idem(m2q(), {1, 0, 0, 0}));
    add("UT2,e11", ut2(), unit_idem(ut2(), {1, 0, 0}));
    add("UT2,e22", ut2(), unit_idem(ut2(), {0, 0, 1}));
    add("A2path,e1", a2path(), unit_idem(a2path(), {1, 0, 0}));
    add("dual,unit", dual_numbers(), unit_idem(dual_numbers(), {1, 0}));
    add("Q2,e1", q2(), unit_idem(q2(), {1, 0}));
    {
        auto ab = auslander_context(dual_numbers(), dual_simple());
        out.push_back({"Ausl(dual,S)", ab.ctx});
    }
    {
        auto ab = auslander_context(dual_numbers(),
                                    direct_sum(regular_module(dual_numbers()), dual_simple()));
        out.push_back({"Ausl(dual,A+S)", ab.ctx});
    }
    {
        auto ab = auslander_context(qx3(), direct_sum(regular_module(qx3()), qx3_simple()));
        out.push_back({"Ausl(Qx3,A+S)", ab.ctx});
    }
    {
        AlgP m2dual = tensor_algebra(*m2q(), *dual_numbers());
        Vec e = vec_zero(8, Q);
        e[0] = q(1);  // E11 (x) 1
        add("M2(dual),e11", m2dual, e);
    }
    {
        SGContext s1 = sg_context_and_defect(fixture_sg_qx3(), 2);
        out.push_back({"SG(Qx3,Z2)", s1.ctx});
        SGContext s2 = sg_context_and_defect(fixture_sg_q3(), 2);
        out.push_back({"SG(Q3,Z3)", s2.ctx});
    }
    return out;
}

}  // namespace

std::vector<GeneratorPair> generator_pairs() {
    std::vector<GeneratorPair> out;
    auto reg = [&](const AlgP& A) { return regular_module(A); };
    out.push_back({"dual,A", dual_numbers(), reg(dual_numbers())});
    out.push_back({"dual,A+S", dual_numbers(), direct_sum(reg(dual_numbers()), dual_simple())});
    out.push_back({"Qx3,A", qx3(), reg(qx3())});
    out.push_back({"Qx3,A+S", qx3(), direct_sum(reg(qx3()), qx3_simple())});
    out.push_back({"Qx3,A+mid", qx3(), direct_sum(reg(qx3()), qx3_middle())});
    out.push_back({"UT2,A+S2", ut2(), direct_sum(reg(ut2()), ut2_proj_simple())});
    out.push_back({"UT2,A+S1", ut2(), direct_sum(reg(ut2()), ut2_other_simple())});
    out.push_back({"M2Q,A+rows", m2q(), direct_sum(reg(m2q()), m2q_rows())});
    out.push_back({"Q2,A", q2(), reg(q2())});
    return out;
}

}  // namespace pierce::corpus
