#include <doctest.h>

#include "logpois/errors.hpp"
#include "logpois/qimatrix.hpp"
#include "logpois/roots.hpp"
#include "testutil.hpp"

using namespace logpois;
using namespace testutil;

TEST_CASE("inverse and rank") {
    QiMatrix m = QiMatrix::parse("[[1/2,1],[0,1/3]]");
    QiMatrix inv = m.inverse();
    CHECK(m * inv == QiMatrix::identity(2));
    CHECK(m.rank() == 2);
    QiMatrix s = QiMatrix::parse("[[1,2],[2,4]]");
    CHECK(s.rank() == 1);
    CHECK_THROWS_AS(s.inverse(), math_error);
}

TEST_CASE("kernel basis spans the nullspace") {
    QiMatrix m = QiMatrix::parse("[[1,2,3],[2,4,6]]");
    auto basis = m.kernel_basis();
    CHECK(basis.size() == 2);
    for (auto &v : basis) CHECK((m * v).is_zero());
}

TEST_CASE("solve picks the pivot-minimal solution") {
    QiMatrix m = QiMatrix::parse("[[1,1,0]]");
    QiMatrix b(1, 1);
    b.at(0, 0) = Scalar(5);
    auto x = m.solve(b);
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == Scalar(5));
    CHECK(x->at(1, 0).is_zero());
    CHECK(x->at(2, 0).is_zero());

    // permuted elimination order picks a different representative
    std::vector<int> order{1, 0, 2};
    auto y = m.solve(b, &order);
    REQUIRE(y.has_value());
    CHECK(y->at(1, 0) == Scalar(5));
    CHECK((m * *y) == b);
}

TEST_CASE("solve detects inconsistency") {
    QiMatrix m = QiMatrix::parse("[[1,1],[1,1]]");
    QiMatrix b(2, 1);
    b.at(0, 0) = Scalar(1);
    CHECK(!m.solve(b).has_value());
}

TEST_CASE("characteristic polynomial") {
    QiMatrix m = QiMatrix::parse("[[1,1],[0,1]]");
    auto c = m.char_poly(); // (t-1)^2 = 1 - 2t + t^2
    CHECK(c[0] == Scalar(1));
    CHECK(c[1] == Scalar(-2));
    CHECK(c[2] == Scalar(1));
}

TEST_CASE("gaussian rational roots of characteristic polynomials") {
    auto roots = gaussian_rational_roots(
        QiMatrix::parse("[[1/2,1],[0,1/3]]").char_poly());
    REQUIRE(roots.has_value());
    CHECK(roots->size() == 2);
    CHECK((*roots)[0] == Scalar::rational(1, 3));
    CHECK((*roots)[1] == Scalar::rational(1, 2));

    // rotation matrix has eigenvalues +-i
    auto ri = gaussian_rational_roots(
        QiMatrix::parse("[[0,-1],[1,0]]").char_poly());
    REQUIRE(ri.has_value());
    CHECK((*ri)[0] == -Scalar::imaginary_unit());
    CHECK((*ri)[1] == Scalar::imaginary_unit());

    // t^2 - 2 has no root in Q(i)
    auto bad = gaussian_rational_roots(
        QiMatrix::parse("[[0,2],[1,0]]").char_poly());
    CHECK(!bad.has_value());
}

TEST_CASE("roots with multiplicity and zero roots") {
    QiMatrix m = QiMatrix::parse("[[0,1,0],[0,0,0],[0,0,1/2]]");
    auto roots = gaussian_rational_roots(m.char_poly());
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 3);
    CHECK((*roots)[0].is_zero());
    CHECK((*roots)[1].is_zero());
    CHECK((*roots)[2] == Scalar::rational(1, 2));
}

TEST_CASE("random conjugation preserves the spectrum") {
    for (int trial = 0; trial < 10; trial++) {
        QiMatrix a(3, 3);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++)
                a.at(i, j) = i == j ? rand_rational(2, 2) : Scalar(0);
        QiMatrix g(3, 3);
        do {
            for (int i = 0; i < 3; i++)
                for (int j = 0; j < 3; j++) g.at(i, j) = rand_rational(2, 1);
        } while (g.rank() < 3);
        auto r1 = gaussian_rational_roots(a.char_poly());
        auto r2 = gaussian_rational_roots((g * a * g.inverse()).char_poly());
        REQUIRE(r1.has_value());
        REQUIRE(r2.has_value());
        CHECK(*r1 == *r2);
    }
}
