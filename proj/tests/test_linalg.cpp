#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pierce/linsolve.hpp"

using namespace pierce;

namespace {

const FieldSpec Q{};

Scalar q(long n, long d = 1) { return Scalar::rational(mpq_class(n, d)); }

Mat mat(long r, long c, std::initializer_list<long> vals) {
    Mat m(r, c, Q);
    m.to_dense();
    auto it = vals.begin();
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m.set(i, j, q(*it++));
    m.compact();
    return m;
}

// independent dense reference row-reduction (first-nonzero pivoting)
std::pair<std::vector<std::vector<mpq_class>>, long> reference_rref(
    std::vector<std::vector<mpq_class>> rows, long cols) {
    long rank = 0;
    for (long c = 0; c < cols && rank < (long)rows.size(); ++c) {
        long pr = -1;
        for (long r = rank; r < (long)rows.size(); ++r)
            if (rows[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        mpq_class inv = 1 / rows[rank][c];
        for (long j = 0; j < cols; ++j) rows[rank][j] *= inv;
        for (long r = 0; r < (long)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            mpq_class f = rows[r][c];
            for (long j = 0; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return {rows, rank};
}

struct Rng {
    unsigned long long s = 12345;
    long next(long m) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return (long)((s >> 33) % m);
    }
};

}  // namespace

TEST_CASE("scalar arithmetic over Q and Fp") {
    CHECK(q(1, 3) + q(2, 5) == q(11, 15));
    CHECK((q(2) / q(-4)).str() == "-1/2");
    CHECK_THROWS_AS(q(1) / q(0), UsageError);
    FieldSpec f5{5};
    Scalar a = Scalar::parse("1/3", f5);
    CHECK(a == Scalar::residue(2, 5));
    CHECK_THROWS_AS(Scalar::parse("1/3", FieldSpec{3}), UsageError);
    CHECK(Scalar::residue(3, 5).inverse() == Scalar::residue(2, 5));
    CHECK_THROWS_AS(q(1) + Scalar::residue(1, 5), UsageError);
}

TEST_CASE("rref basic contracts") {
    Mat id2 = Mat::identity(2, Q);
    auto r = rref(id2);
    CHECK(r.rank == 2);
    CHECK(r.rref == id2);

    Mat z(3, 4, Q);
    auto rz = rref(z);
    CHECK(rz.rank == 0);
    CHECK(rz.rref == z);

    Mat m = mat(2, 2, {1, 2, 2, 4});
    auto rm = rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.rref == mat(2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref matches dense reference on random matrices") {
    Rng rng;
    for (int trial = 0; trial < 25; ++trial) {
        long r = 1 + rng.next(6), c = 1 + rng.next(6);
        std::vector<std::vector<mpq_class>> rows(r, std::vector<mpq_class>(c));
        Mat m(r, c, Q);
        m.to_dense();
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) {
                long v = rng.next(7) - 3;
                rows[i][j] = v;
                m.set(i, j, q(v));
            }
        m.compact();
        auto [ref, refrank] = reference_rref(rows, c);
        auto got = rref(m);
        CHECK(got.rank == refrank);
        for (long i = 0; i < refrank; ++i)
            for (long j = 0; j < c; ++j)
                CHECK(got.rref.at(i, j).rational_value() == ref[i][j]);
        CHECK(rank_of(m) == rank_of(m.transpose()));
        CHECK(rref(got.rref).rref == got.rref);
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(Mat::identity(3, Q)).cols() == 0);
    CHECK(kernel_basis(Mat(2, 3, Q)).cols() == 3);

    Mat m = mat(1, 2, {1, 2});
    Mat k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK((m * k).is_zero());
    // spans (-2, 1)
    CHECK(k.at(0, 0) * q(1) == k.at(1, 0) * q(-2));

    Rng rng{777};
    for (int trial = 0; trial < 20; ++trial) {
        long r = 1 + rng.next(5), c = 1 + rng.next(5);
        Mat a(r, c, Q);
        a.to_dense();
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j) a.set(i, j, q(rng.next(5) - 2));
        a.compact();
        Mat k2 = kernel_basis(a);
        CHECK(k2.cols() == c - rank_of(a));  // rank-nullity
        CHECK((a * k2).is_zero());
        if (k2.cols() > 0) CHECK(rank_of(k2) == k2.cols());
    }
}

TEST_CASE("solve_linear") {
    Mat id = Mat::identity(3, Q);
    Vec b = {q(1), q(2), q(3)};
    auto x = solve_linear(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    Mat m = mat(1, 2, {1, 1});
    auto y = solve_linear(m, {q(3)});
    REQUIRE(y);
    CHECK((*y)[0] == q(3));  // free variable set to zero
    CHECK((*y)[1] == q(0));
    CHECK(m.apply(*y)[0] == q(3));

    CHECK_FALSE(solve_linear(mat(1, 1, {0}), {q(1)}).has_value());
    CHECK_THROWS_AS(solve_linear(m, {q(1), q(2)}), UsageError);
}

TEST_CASE("results are representation independent") {
    Mat sp = Mat::from_triples(40, 40, Q, {{0, 0, q(1)}, {3, 7, q(2)}, {20, 1, q(-5)}});
    CHECK(sp.is_sparse());
    Mat dn = sp;
    dn.to_dense();
    CHECK_FALSE(dn.is_sparse());
    CHECK(rref(sp).rref == rref(dn).rref);
    CHECK(kernel_basis(sp) == kernel_basis(dn));
    CHECK(rank_of(sp) == rank_of(dn));
}

TEST_CASE("subspace operations") {
    Subspace s(3, Q);
    CHECK(s.insert({q(1), q(1), q(0)}));
    CHECK_FALSE(s.insert({q(2), q(2), q(0)}));
    auto compl_idx = greedy_standard_complement(s);
    CHECK(compl_idx == std::vector<long>{0, 2});

    Subspace t(3, Q);
    t.insert({q(0), q(1), q(1)});
    Subspace u = subspace_sum(s, t);
    CHECK(u.dim() == 2);
    Subspace w = subspace_intersect(u, Subspace::from_vectors(3, Q, {{q(1), q(0), q(-1)}}));
    CHECK(w.dim() == 1);
    CHECK(w.contains({q(1), q(0), q(-1)}));

    auto lq = quotient_of_space(s);
    CHECK(lq.dim == 2);
    CHECK(lq.projection * lq.section == Mat::identity(2, Q));
}

TEST_CASE("linear algebra over F5") {
    FieldSpec f5{5};
    Mat m(2, 2, f5);
    m.set(0, 0, Scalar::residue(2, 5));
    m.set(0, 1, Scalar::residue(1, 5));
    m.set(1, 0, Scalar::residue(4, 5));
    m.set(1, 1, Scalar::residue(2, 5));
    CHECK(rank_of(m) == 1);  // second row is twice the first
    Mat k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());
}
