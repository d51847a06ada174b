#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pierce/corpus.hpp"

using namespace pierce;

namespace {

const FieldSpec Q{};
Scalar q(long n) { return Scalar(n, Q); }

Vec bv(long d, long i) {
    Vec v = vec_zero(d, Q);
    v[i] = q(1);
    return v;
}

// Independent oracle for the dual numbers: the hand-built periodic free
// resolution ... -> A -x-> A -x-> A -> S -> 0. Applying Hom(-, S) or (-(x)S)
// gives zero differentials, so Ext^i(S,S) = Tor_i(S,S) = 1 in every degree.
long dual_periodic_oracle() { return 1; }

}  // namespace

TEST_CASE("free resolutions") {
    auto A = corpus::dual_numbers();
    RightModule reg = regular_module(A);
    Resolution r = free_resolution(reg, 3);
    CHECK(r.ranks[0] == 1);
    for (size_t i = 1; i < r.ranks.size(); ++i) CHECK(r.ranks[i] == 0);

    RightModule s = corpus::dual_simple();
    Resolution rs = free_resolution(s, 4);
    CHECK(rs.ranks == std::vector<long>{1, 1, 1, 1, 1});
    // the differential in each positive degree is multiplication by x
    for (long n = 1; n <= 4; ++n) {
        CHECK(rank_of(rs.diff[n]) == 1);
        // d o d = 0
        if (n >= 2) CHECK((rs.diff[n - 1] * rs.diff[n]).is_zero());
    }

    Resolution rz = free_resolution(zero_module(A), 3);
    for (long k : rz.ranks) CHECK(k == 0);

    ResolutionLimits tight;
    tight.max_total_dim = 1;
    CHECK_THROWS_AS(free_resolution(s, 4, tight), ResourceLimit);
}

TEST_CASE("ext tables") {
    auto A = corpus::dual_numbers();
    RightModule reg = regular_module(A);
    RightModule s = corpus::dual_simple();
    // Ext^0(A, N) = dim N and Ext^i(A, N) = 0 for i >= 1
    ExtTable t0 = ext_dims(reg, s, 3);
    CHECK(t0.dims == std::vector<long>{1, 0, 0, 0});
    ExtTable t1 = ext_dims(reg, reg, 3);
    CHECK(t1.dims == std::vector<long>{2, 0, 0, 0});
    // the periodic oracle for the simple module
    ExtTable t2 = ext_dims(s, s, 5);
    for (long i = 0; i <= 5; ++i) CHECK(t2.dims[i] == dual_periodic_oracle());
    // Ext^0 always equals the hom-space dimension
    for (const auto& m : {reg, s}) {
        ExtTable t = ext_dims(m, s, 0);
        CHECK(t.dims[0] == (long)hom_space(m, s).size());
    }
    // stability under a larger cutoff
    ExtTable t3 = ext_dims(s, s, 2);
    ExtTable t4 = ext_dims(s, s, 4);
    for (long i = 0; i <= 2; ++i) CHECK(t3.dims[i] == t4.dims[i]);
}

TEST_CASE("ext dims are independent of the module presentation") {
    // permute the basis of the middle module over Q[x]/(x^3) and recompute
    auto A = corpus::qx3();
    RightModule m = corpus::qx3_middle();
    Mat P(2, 2, Q);
    P.set(0, 1, q(1));
    P.set(1, 0, q(1));
    RightModule mp{A, 2, {}, {}};
    for (const auto& r : m.rho) mp.rho.push_back(P * r * P);  // P is its own inverse
    REQUIRE(validate_right_module(mp).ok);
    ExtTable a = ext_dims(m, m, 4);
    ExtTable b = ext_dims(mp, mp, 4);
    CHECK(a.dims == b.dims);
}

TEST_CASE("tor tables") {
    auto A = corpus::dual_numbers();
    RightModule s = corpus::dual_simple();
    Bimodule sleft{A, nullptr, 1, s.rho, {}};
    ExtTable t = tor_dims(s, sleft, 4);
    for (long i = 0; i <= 4; ++i) CHECK(t.dims[i] == dual_periodic_oracle());
    // Tor_0 = dim of the tensor product
    Bimodule sr{nullptr, A, 1, {}, s.rho};
    CHECK(t.dims[0] == tensor_over(sr, sleft).dim);
    // flat/free case
    Bimodule regl{A, nullptr, 2, regular_module(A).rho, {}};
    ExtTable tf = tor_dims(regular_module(A), regl, 3);
    CHECK(tf.dims == std::vector<long>{2, 0, 0, 0});
}

TEST_CASE("two-sided bar homology computes Tor with its bimodule structure") {
    auto A = corpus::dual_numbers();
    RightModule s = corpus::dual_simple();
    Bimodule sr{A, A, 1, s.rho, s.rho};
    BarHomology bh = two_sided_bar_homology(sr, sr, 3);
    Bimodule sleft{A, nullptr, 1, s.rho, {}};
    ExtTable t = tor_dims(s, sleft, 3);
    CHECK(bh.hdims == std::vector<long>(t.dims.begin(), t.dims.end()));
    // outer actions restrict to homology
    for (const auto& sp : bh.spaces) {
        CHECK((long)sp.lam.size() == A->dim());
        CHECK((long)sp.rho.size() == A->dim());
    }
}

TEST_CASE("grade computations") {
    auto A = corpus::dual_numbers();
    RightModule s = corpus::dual_simple();
    GradeBound g = grade_of(s, 5);
    CHECK(g.resolved());
    CHECK(g.value == 0);  // the socle maps into A
    GradeBound gz = grade_of(zero_module(A), 5);
    CHECK(gz.is_infinite());
    // over the triangular algebra, the quotient by (E22) has positive grade
    auto U = corpus::ut2();
    Subspace ie = two_sided_ideal(*U, {bv(3, 2)});
    RightModule ubar = quotient_module(regular_module(U), ie);
    GradeBound gu = grade_of(ubar, 5);
    CHECK(gu.at_least(1));
    // instance of the grade lemma: Ext^i_U(X, U) = 0 for i < grade(Ubar)
    // for any Ubar-module X (here X = Ubar itself, by construction)
    if (gu.resolved()) {
        ExtTable t = ext_dims(ubar, regular_module(U), gu.value);
        for (long i = 0; i < gu.value; ++i) CHECK(t.dims[i] == 0);
    }
}

TEST_CASE("depth on ideals") {
    auto S = corpus::dual_numbers();
    Subspace whole = two_sided_ideal(*S, {S->unit()});
    CHECK(depth_on_ideal(S, whole, 4).is_infinite());
    Subspace zero(2, Q);
    GradeBound d0 = depth_on_ideal(S, zero, 4);
    CHECK(d0.resolved());
    CHECK(d0.value == 0);
    Subspace socle(2, Q);
    socle.insert(bv(2, 1));
    GradeBound ds = depth_on_ideal(S, socle, 4);
    CHECK(ds.resolved());
    CHECK(ds.value == 0);
    CHECK_THROWS_AS(depth_on_ideal(corpus::ut2(), Subspace(3, Q), 3), UsageError);
}

TEST_CASE("chain complex checks") {
    auto A = corpus::dual_numbers();
    RightModule s = corpus::dual_simple();
    Resolution rs = free_resolution(s, 3);
    ChainComplex cc;
    cc.cochain = false;
    cc.dims.push_back(s.dim);
    for (long k : rs.ranks) cc.dims.push_back(k * A->dim());
    cc.d.push_back(Mat(0, 0, Q));
    for (const auto& d : rs.diff) cc.d.push_back(d);
    CHECK(cc.check_dd());
    auto h = cc.homology_dims();
    // a resolution is exact away from the resolved module
    for (size_t i = 2; i + 1 < h.size(); ++i) CHECK(h[i] == 0);
}
