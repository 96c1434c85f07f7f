#include <doctest.h>

#include "logpois/connection.hpp"
#include "logpois/errors.hpp"
#include "testutil.hpp"

using namespace logpois;
using namespace testutil;

namespace {

/* g K g^{-1} for a matrix of polyvectors, test-side oracle */
std::vector<Polyvector> conjugate(const std::vector<Polyvector> &K,
                                  const PolyMatrix &g) {
    PolyMatrix ginv = g.series_inverse();
    int e = g.rows;
    std::vector<Polyvector> out(K.size(), Polyvector(K[0].ring(), K[0].grade()));
    for (int i = 0; i < e; i++)
        for (int j = 0; j < e; j++) {
            Polyvector acc(K[0].ring(), K[0].grade());
            for (int c = 0; c < e; c++)
                for (int d = 0; d < e; d++)
                    acc = acc + K[c * e + d] * (g.at(i, c) * ginv.at(d, j));
            out[i * e + j] = acc;
        }
    return out;
}

ResidueTuple worked_residues(const RingSpec &) {
    ResidueTuple A(2, QiMatrix(2, 2));
    A[0].at(0, 0) = Scalar::rational(1, 2);
    return A;
}

} // namespace

TEST_CASE("euler-poisson principal part on the worked C^2 instance") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ResidueTuple A = worked_residues(ring);
    ConnMatrix theta0 = ep_principal(C, A);
    // entry (1,1) = 1/2 X_1 = 1/2 z2 d2
    CHECK(theta0.at(0, 0) == LogVecField::parse(ring, "(1/2)*L2"));
    CHECK(theta0.at(0, 1).is_zero());
    CHECK(theta0.at(1, 0).is_zero());
    CHECK(theta0.at(1, 1).is_zero());

    ResidueTuple zero(2, QiMatrix(2, 2));
    CHECK(ep_principal(C, zero).is_zero());
}

TEST_CASE("ep_principal requires H3") {
    RingSpec ring(2, {0}, 6, 1);
    Polyvector sigma(ring, 2);
    sigma.add_term({0, 1}, LaurentPoly(ring, Scalar(1)));
    LogChart C{PoissonStructure{sigma}};
    ResidueTuple A(1, QiMatrix::identity(2));
    CHECK_THROWS_AS(ep_principal(C, A), math_error);
}

TEST_CASE("commuting residues give flat principal parts") {
    LogChart C{c2_log_canonical(6)};
    ConnMatrix theta0 = ep_principal(C, worked_residues(C.ring()));
    CHECK(curvature_is_zero(poisson_curvature(C, theta0)));
}

TEST_CASE("noncommuting residues: curvature equals the commutator term") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ResidueTuple A(2, QiMatrix(2, 2));
    A[0].at(0, 1) = Scalar(1); // E12
    A[1].at(1, 0) = Scalar(1); // E21
    ConnMatrix theta0 = ep_principal(C, A);
    auto K = poisson_curvature(C, theta0);
    CHECK(!curvature_is_zero(K));
    Polyvector X1 = log_hamiltonian(C, 0).field;
    Polyvector X2 = log_hamiltonian(C, 1).field;
    Polyvector wedge12 = X1.wedge(X2);
    QiMatrix comm = A[0].commutator(A[1]);
    for (int i = 0; i < 2; i++)
        for (int j = 0; j < 2; j++)
            CHECK(K[i * 2 + j] == wedge12 * comm.at(i, j));
}

TEST_CASE("EP flatness is equivalent to commutativity on random pairs") {
    LogChart C{c2_log_canonical(6)};
    for (int t = 0; t < 30; t++) {
        int e = rand_int(2, 3);
        ResidueTuple A(2, QiMatrix(e, e));
        for (int m = 0; m < 2; m++)
            for (int i = 0; i < e; i++)
                for (int j = 0; j < e; j++)
                    A[m].at(i, j) = rand_rational(2, 2);
        bool commute = A[0].commutator(A[1]).is_zero();
        CHECK(curvature_is_zero(poisson_curvature(C, ep_principal(C, A))) ==
              commute);
    }
}

TEST_CASE("gauge by the identity is the identity") {
    LogChart C{c2_log_canonical(6)};
    ConnMatrix theta0 = ep_principal(C, worked_residues(C.ring()));
    GaugeMatrix id{PolyMatrix::identity(C.ring(), 2)};
    CHECK(gauge_transform(C, theta0, id) == theta0);
}

TEST_CASE("worked gauge produces the nilpotent perturbation") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ConnMatrix theta0 = ep_principal(C, worked_residues(ring));
    PolyMatrix g = PolyMatrix::identity(ring, 2);
    g.at(0, 1) = LaurentPoly::coordinate(ring, 0); // I + z1 E12
    ConnMatrix theta = gauge_transform(C, theta0, GaugeMatrix{g});
    ConnMatrix expect = theta0;
    expect.at(0, 1) = LogVecField::parse(ring, "(1/2*z1)*L2");
    CHECK(theta == expect);
}

TEST_CASE("constant centralizer gauges fix the normal form") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ConnMatrix theta0 = ep_principal(C, worked_residues(ring));
    QiMatrix c(2, 2); // diagonal commutes with diag(1/2, 0)
    c.at(0, 0) = Scalar(3);
    c.at(1, 1) = Scalar::rational(-2, 5);
    GaugeMatrix g{PolyMatrix::constant(ring, c)};
    CHECK(gauge_transform(C, theta0, g) == theta0);
}

TEST_CASE("gauge covariance of the curvature") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    for (int t = 0; t < 6; t++) {
        ConnMatrix theta(ring, 2);
        for (int i = 0; i < 2; i++)
            for (int j = 0; j < 2; j++) {
                LogVecField f(ring);
                for (int k = 0; k < 2; k++) f.comp[k] = rand_poly(ring, 2, 2);
                theta.at(i, j) = f;
            }
        PolyMatrix g = PolyMatrix::identity(ring, 2);
        g.at(0, 1) = rand_poly(ring, 2, 2);
        g.at(1, 0) = rand_poly(ring, 1, 1);
        g.at(0, 0) = g.at(0, 0) + rand_poly(ring, 2, 1);
        if (g.constant_part().rank() != 2) continue;
        auto lhs = poisson_curvature(C, gauge_transform(C, theta, GaugeMatrix{g}));
        auto rhs = conjugate(poisson_curvature(C, theta), g);
        for (size_t idx = 0; idx < lhs.size(); idx++)
            CHECK(lhs[idx] == rhs[idx]);
    }
}

TEST_CASE("gauge action composes") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ConnMatrix theta = ep_principal(C, worked_residues(ring));
    PolyMatrix g1 = PolyMatrix::identity(ring, 2);
    g1.at(0, 1) = rand_poly(ring, 2, 2);
    PolyMatrix g2 = PolyMatrix::identity(ring, 2);
    g2.at(1, 0) = rand_poly(ring, 2, 2);
    ConnMatrix lhs = gauge_transform(C, theta, GaugeMatrix{g2 * g1});
    ConnMatrix rhs =
        gauge_transform(C, gauge_transform(C, theta, GaugeMatrix{g1}),
                        GaugeMatrix{g2});
    CHECK(lhs == rhs);
}

TEST_CASE("series inverse really inverts modulo the truncation") {
    RingSpec ring = full_log_ring(3, 6);
    for (int t = 0; t < 10; t++) {
        PolyMatrix g = PolyMatrix::identity(ring, 3);
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++)
                g.at(i, j) = g.at(i, j) + rand_poly(ring, 3, 2) *
                                              LaurentPoly::coordinate(ring, 0);
        PolyMatrix ginv = g.series_inverse();
        CHECK(g * ginv == PolyMatrix::identity(ring, 3));
    }
}

TEST_CASE("extract_principal inverts ep_principal") {
    LogChart C{c2_log_canonical(6)};
    ResidueTuple A = worked_residues(C.ring());
    auto [A2, V] = extract_principal(C, ep_principal(C, A));
    CHECK(A2 == A);
    CHECK(V.is_zero());
}

TEST_CASE("extract_principal on the gauged worked instance") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ConnMatrix theta0 = ep_principal(C, worked_residues(ring));
    PolyMatrix g = PolyMatrix::identity(ring, 2);
    g.at(0, 1) = LaurentPoly::coordinate(ring, 0);
    ConnMatrix theta = gauge_transform(C, theta0, GaugeMatrix{g});
    auto [A, V] = extract_principal(C, theta);
    CHECK(A == worked_residues(ring));
    ConnMatrix expectV(ring, 2);
    expectV.at(0, 1) = LogVecField::parse(ring, "(1/2*z1)*L2");
    CHECK(V == expectV);
}

TEST_CASE("pure holomorphic connections extract zero residues") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    ConnMatrix theta(ring, 2);
    // entries with no euler-constant part
    theta.at(0, 0) = LogVecField::parse(ring, "(1*z1)*L1");
    theta.at(1, 0) = LogVecField::parse(ring, "(2*z2^2)*L2");
    auto [A, V] = extract_principal(C, theta);
    for (auto &m : A) CHECK(m.is_zero());
    CHECK(V == theta);
}

TEST_CASE("degenerate generator span is reported") {
    RingSpec ring = full_log_ring(2, 6);
    LogChart C{PoissonStructure{Polyvector(ring, 2)}}; // sigma = 0
    ConnMatrix theta(ring, 1);
    CHECK_THROWS_AS(extract_principal(C, theta), math_error);
}

TEST_CASE("horizontal defect") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    // Theta = 0, Casimir column: everything vanishes
    ConnMatrix zero(ring, 2);
    std::vector<LaurentPoly> casimir{LaurentPoly(ring, Scalar(2)),
                                     LaurentPoly(ring, Scalar(-1))};
    for (auto &d : horizontal_defect(C, zero, casimir)) CHECK(d.is_zero());

    // Theta0 = (1/2) E11 X1, Y = (0, c): the kernel direction
    ConnMatrix theta0 = ep_principal(C, worked_residues(ring));
    std::vector<LaurentPoly> Y{LaurentPoly(ring),
                               LaurentPoly(ring, Scalar(5))};
    for (auto &d : horizontal_defect(C, theta0, Y)) CHECK(d.is_zero());

    // nilpotent Theta = E12 X1, Y = (z2, 1): delta(z2) + X1 in the top slot
    ConnMatrix nil(ring, 2);
    nil.at(0, 1) = LogVecField::parse(ring, "(1)*L2"); // X1
    std::vector<LaurentPoly> Y2{LaurentPoly::coordinate(ring, 1),
                                LaurentPoly(ring, Scalar(1))};
    auto d = horizontal_defect(C, nil, Y2);
    CHECK(d[0] == Polyvector::parse(ring, 1, "(-1*z1*z2)*d1+(1*z2)*d2"));
    CHECK(d[1].is_zero());
}

TEST_CASE("gauge with singular constant term is rejected") {
    RingSpec ring = full_log_ring(2, 6);
    PolyMatrix g(ring, 2, 2);
    g.at(0, 0) = LaurentPoly::coordinate(ring, 0); // z1, singular at 0
    g.at(1, 1) = LaurentPoly(ring, Scalar(1));
    CHECK_THROWS_AS(GaugeMatrix{g}, math_error);
}

TEST_CASE("log field text round trip") {
    RingSpec ring = full_log_ring(3, 6);
    LogVecField f(ring);
    f.comp[0] = LaurentPoly::parse(ring, "1/2*z2");
    f.comp[2] = LaurentPoly::parse(ring, "-1+2*z1*z3");
    CHECK(LogVecField::parse(ring, f.str()) == f);
    CHECK(LogVecField(ring).str() == "0");
}
