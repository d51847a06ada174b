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

}  // namespace

TEST_CASE("corpus algebras validate") {
    for (const auto& [name, alg] : corpus::base_algebras()) {
        CAPTURE(name);
        auto rep = validate_algebra(*alg);
        CHECK(rep.ok);
    }
}

TEST_CASE("a broken associativity triple is reported") {
    // b1*b1 = b2, b1*b2 = b1 makes (b1 b1) b1 = b1 b1 = b2 but b1 (b1 b1) = b1 b2 = b1
    std::vector<Algebra::ProdEntry> prods(9);
    auto set = [&](long i, long j, long k) { prods[i * 3 + j] = {{k, q(1)}}; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 1);
    set(0, 2, 2);
    set(2, 0, 2);
    set(1, 1, 2);
    set(1, 2, 1);  // breaks associativity of (1,1,2) etc.
    set(2, 1, 2);
    Algebra a(Q, 3, {}, prods, bv(3, 0));
    auto rep = validate_algebra(a);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.violations.empty());
    CHECK(rep.violations.front().find("associativity") != std::string::npos);
    // non-strict mode stops at the first violation
    auto lazy = validate_algebra(a, false);
    CHECK(lazy.violations.size() == 1);
}

TEST_CASE("multiplication in M2(Q)") {
    auto A = corpus::m2q();
    // E12 * E21 = E11
    Vec p = A->multiply(bv(4, 1), bv(4, 2));
    CHECK(p == bv(4, 0));
    // unit acts as identity
    Vec x = {q(3), q(-1), q(2), q(7)};
    CHECK(A->multiply(A->unit(), x) == x);
    CHECK(A->multiply(x, A->unit()) == x);
    // left/right multiplication matrices agree with multiply
    CHECK(A->left_mult(x).apply(bv(4, 2)) == A->multiply(x, bv(4, 2)));
    CHECK(A->right_mult(x).apply(bv(4, 2)) == A->multiply(bv(4, 2), x));
}

TEST_CASE("dual numbers square to zero") {
    auto A = corpus::dual_numbers();
    CHECK(vec_is_zero(A->multiply(bv(2, 1), bv(2, 1))));
}

TEST_CASE("pierce decomposition of M2(Q) at E11") {
    auto C = corpus::m2q();
    auto e = make_idempotent(*C, bv(4, 0));
    PierceData pd = pierce_decompose(C, e);
    CHECK(pd.A.space.dim() == 1);
    CHECK(pd.B.space.dim() == 1);
    CHECK(pd.M.space.dim() == 1);
    CHECK(pd.N.space.dim() == 1);
    CHECK(pd.corner_A.alg->dim() == 1);
    auto rep = validate_algebra(*pd.corner_A.alg);
    CHECK(rep.ok);
}

TEST_CASE("pierce decomposition with e = unit") {
    auto C = corpus::qx3();
    auto e = make_idempotent(*C, C->unit());
    PierceData pd = pierce_decompose(C, e);
    CHECK(pd.A.space.dim() == 3);
    CHECK(pd.B.space.dim() == 0);
    CHECK(pd.M.space.dim() == 0);
    CHECK(pd.N.space.dim() == 0);
}

TEST_CASE("pierce decomposition of upper triangular 2x2 at E22") {
    auto C = corpus::ut2();
    auto e = make_idempotent(*C, bv(3, 2));
    PierceData pd = pierce_decompose(C, e);
    // A = eCe = span{E22}, B = span{E11}, M = e'Ce = span{E12}, N = 0
    CHECK(pd.A.space.dim() == 1);
    CHECK(pd.B.space.dim() == 1);
    CHECK(pd.M.space.dim() == 1);
    CHECK(pd.M.space.contains(bv(3, 1)));
    CHECK(pd.N.space.dim() == 0);
}

TEST_CASE("non-idempotent is rejected") {
    auto C = corpus::ut2();
    CHECK_THROWS_AS(make_idempotent(*C, bv(3, 1)), ValidationError);
}

TEST_CASE("derived algebras") {
    auto A = corpus::ut2();
    AlgP op = opposite_algebra(*A);
    CHECK(validate_algebra(*op).ok);
    // opposite of opposite is the original, bit-exactly
    AlgP opop = opposite_algebra(*op);
    for (long i = 0; i < A->dim(); ++i)
        for (long j = 0; j < A->dim(); ++j)
            CHECK(A->basis_product(i, j) == opop->basis_product(i, j));
    // opposite of a commutative algebra has equal structure constants
    auto D = corpus::dual_numbers();
    AlgP dop = opposite_algebra(*D);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) CHECK(D->basis_product(i, j) == dop->basis_product(i, j));

    AlgP env = enveloping_algebra(*D);
    CHECK(env->dim() == 4);
    CHECK(validate_algebra(*env).ok);
    AlgP envq = enveloping_algebra(*corpus::rationals());
    CHECK(envq->dim() == 1);

    AlgP t = tensor_algebra(*corpus::m2q(), *D);
    CHECK(t->dim() == 8);
    CHECK(validate_algebra(*t).ok);
}

TEST_CASE("centre computations") {
    CHECK(centre(*corpus::dual_numbers()).dim() == 2);  // commutative
    CHECK(centre(*corpus::m2q()).dim() == 1);
    CHECK(centre(*corpus::ut2()).dim() == 1);
    // every centre vector commutes with every basis element (oracle re-check)
    auto A = corpus::ut2();
    Subspace z = centre(*A);
    for (long t = 0; t < z.dim(); ++t)
        for (long i = 0; i < A->dim(); ++i) {
            Vec zi = z.basis_vector(t);
            CHECK(A->multiply(zi, bv(3, i)) == A->multiply(bv(3, i), zi));
        }
}

TEST_CASE("two-sided ideals by saturation") {
    auto A = corpus::ut2();
    CHECK(two_sided_ideal(*A, {A->unit()}).dim() == 3);
    CHECK(two_sided_ideal(*A, {}).dim() == 0);
    // gens = {E11}: span{E11, E12}
    Subspace s = two_sided_ideal(*A, {bv(3, 0)});
    CHECK(s.dim() == 2);
    CHECK(s.contains(bv(3, 0)));
    CHECK(s.contains(bv(3, 1)));
    CHECK_FALSE(s.contains(bv(3, 2)));
}

TEST_CASE("quotient algebras") {
    auto A = corpus::dual_numbers();
    // by the zero ideal: the algebra itself
    QuotientAlgebra q0 = quotient_algebra(A, Subspace(2, Q));
    CHECK(q0.alg->dim() == 2);
    CHECK(validate_algebra(*q0.alg).ok);
    // by the whole algebra: the zero algebra is legal
    QuotientAlgebra q1 = quotient_algebra(A, two_sided_ideal(*A, {A->unit()}));
    CHECK(q1.alg->dim() == 0);
    // dual numbers mod nilpotents is Q
    Subspace nil(2, Q);
    nil.insert(bv(2, 1));
    QuotientAlgebra q2 = quotient_algebra(A, nil);
    CHECK(q2.alg->dim() == 1);
    CHECK(q2.alg->unit() == Vec{q(1)});
    // the projection is an algebra map
    Vec x = {q(2), q(5)};
    Vec y = {q(-1), q(3)};
    CHECK(q2.projection.apply(A->multiply(x, y)) ==
          q2.alg->multiply(q2.projection.apply(x), q2.projection.apply(y)));
    // a non-ideal subspace is rejected
    auto U = corpus::ut2();
    Subspace notideal(3, Q);
    notideal.insert(bv(3, 0));  // E11 alone is not an ideal
    CHECK_THROWS_AS(quotient_algebra(U, notideal), ValidationError);
    // quotient by the ideal generated by an idempotent kills the idempotent
    Subspace ie = two_sided_ideal(*U, {bv(3, 2)});
    QuotientAlgebra q3 = quotient_algebra(U, ie);
    CHECK(vec_is_zero(q3.projection.apply(bv(3, 2))));
}

TEST_CASE("pierce multiplication pattern on all corpus contexts") {
    // products of summands land where the 2x2 pattern says
    auto C = corpus::ut2();
    auto e = make_idempotent(*C, bv(3, 2));
    PierceData pd = pierce_decompose(C, e);
    // (e'Ce)(eCe') subset of e'Ce'
    for (long i = 0; i < pd.M.space.dim(); ++i)
        for (long j = 0; j < pd.N.space.dim(); ++j)
            CHECK(pd.B.space.contains(
                C->multiply(pd.M.space.basis_vector(i), pd.N.space.basis_vector(j))));
    // (eCe)(e'Ce') = 0
    for (long i = 0; i < pd.A.space.dim(); ++i)
        for (long j = 0; j < pd.B.space.dim(); ++j)
            CHECK(vec_is_zero(
                C->multiply(pd.A.space.basis_vector(i), pd.B.space.basis_vector(j))));
}
