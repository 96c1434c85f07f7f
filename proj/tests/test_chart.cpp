#include <doctest.h>

#include "logpois/chart.hpp"
#include "logpois/errors.hpp"
#include "testutil.hpp"

using namespace logpois;
using namespace testutil;

namespace {
Polyvector V1(const RingSpec &ring, const std::string &s) {
    return Polyvector::parse(ring, 1, s);
}
} // namespace

TEST_CASE("log hamiltonians of the C^2 structure") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    LogHamiltonian X1 = log_hamiltonian(C, 0);
    CHECK(X1.field == V1(ring, "(1*z2)*d2"));
    CHECK(X1.cls == HolomorphyClass::holomorphic);
    LogHamiltonian X2 = log_hamiltonian(C, 1);
    CHECK(X2.field == V1(ring, "(-1*z1)*d1"));
}

TEST_CASE("a non-tangent structure fails H3 with a pole witness") {
    RingSpec ring(2, {0}, 6, 1); // z1 log, constant bivector
    Polyvector sigma(ring, 2);
    sigma.add_term({0, 1}, LaurentPoly(ring, Scalar(1)));
    LogChart C{PoissonStructure{sigma}};
    LogHamiltonian X1 = log_hamiltonian(C, 0);
    CHECK(X1.field == V1(ring, "(1*z1^-1)*d2"));
    CHECK(X1.cls == HolomorphyClass::genuine_pole);
    H3Result res = check_H3(C);
    CHECK(!res.ok);
    CHECK(res.li == 0);
}

TEST_CASE("H3 passes for log-canonical charts") {
    LogChart C{c2_log_canonical(6)};
    CHECK(check_H3(C).ok);
    for (int t = 0; t < 10; t++) {
        int n = rand_int(2, 4);
        RingSpec ring = full_log_ring(n, 5);
        LogChart Cn{log_canonical_structure(ring, rand_antisymmetric(n))};
        CHECK(check_H3(Cn).ok);
    }
}

TEST_CASE("poisson fields: delta of every log hamiltonian vanishes") {
    for (int t = 0; t < 10; t++) {
        int n = rand_int(2, 4);
        RingSpec ring = full_log_ring(n, 5);
        LogChart C{log_canonical_structure(ring, rand_antisymmetric(n))};
        for (int li = 0; li < C.r(); li++)
            CHECK(lichnerowicz(C.P, log_hamiltonian(C, li).field).is_zero());
    }
}

TEST_CASE("poincare primitive of d(z1 z2)") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    LogForm eta = LogForm::parse(ring, 1, "(1*z1*z2)*L1+(1*z1*z2)*L2");
    LaurentPoly f = log_poincare_primitive(C, eta);
    CHECK(f == LaurentPoly::parse(f.ring(), "1*z1*z2"));
}

TEST_CASE("poincare primitive of z1 dz1") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    LogForm eta = LogForm::parse(ring, 1, "(1*z1^2)*L1"); // z1 dz1
    LaurentPoly f = log_poincare_primitive(C, eta);
    CHECK(f == LaurentPoly::parse(f.ring(), "1/2*z1^2"));
}

TEST_CASE("nonzero residue is rejected with the right witness") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    LogForm eta = LogForm::parse(ring, 1, "(1*z2)*L1"); // z2 dz1/z1
    try {
        log_poincare_primitive(C, eta);
        FAIL("expected a residue error");
    } catch (const math_error &err) {
        CHECK(err.hypothesis == "residue-free");
        CHECK(err.witness == "1*z2");
    }
}

TEST_CASE("non-closed forms are rejected") {
    LogChart C{c2_log_canonical(6)};
    const RingSpec &ring = C.ring();
    LogForm eta = LogForm::parse(ring, 1, "(1*z1*z2^2)*L1"); // z2^2 dz1
    try {
        log_poincare_primitive(C, eta);
        FAIL("expected a closedness error");
    } catch (const math_error &err) {
        CHECK(err.hypothesis == "closedness");
    }
}

TEST_CASE("primitive round trip on random exact forms") {
    int n = 3;
    RingSpec ring = full_log_ring(n, 8);
    LogChart C{log_canonical_structure(ring, rand_antisymmetric(n))};
    for (int t = 0; t < 100; t++) {
        LaurentPoly f = rand_poly(ring, 8, 5, true);
        f = f - LaurentPoly(ring, f.constant_term());
        LogForm eta = LogForm::differential(f);
        LaurentPoly g = log_poincare_primitive(C, eta);
        CHECK(g.coerce(ring) == f);
        CHECK(LogForm::differential(g).coerce(ring) == eta);
    }
}

TEST_CASE("primitive preserves the vanishing order") {
    RingSpec ring = full_log_ring(2, 8);
    LogChart C{c2_log_canonical(8)};
    LaurentPoly f = LaurentPoly::parse(ring, "1*z1^2*z2^2+1*z1^4");
    LogForm eta = LogForm::differential(f);
    LaurentPoly g = log_poincare_primitive(C, eta);
    CHECK(g.lowest_degree() >= 4);
}

TEST_CASE("delta on log monomials matches the weight formula") {
    LogChart C{c2_log_canonical(6)};
    CHECK(delta_monomial_check(C, {2, 1}).ok);
    CHECK(delta_monomial_check(C, {0, 0}).ok);
    for (int t = 0; t < 20; t++) {
        int n = rand_int(2, 4);
        RingSpec ring = full_log_ring(n, 7);
        LogChart Cn{log_canonical_structure(ring, rand_antisymmetric(n))};
        MultiIndex alpha(n);
        for (int k = 0; k < n; k++) alpha[k] = rand_int(0, 2);
        CHECK(delta_monomial_check(Cn, alpha).ok);
    }
}

TEST_CASE("delta monomial identity over all small multi-indices") {
    for (int n = 2; n <= 4; n++) {
        RingSpec ring = full_log_ring(n, 7);
        LogChart C{log_canonical_structure(ring, rand_antisymmetric(n))};
        // enumerate |alpha| <= 6 over the first two slots to keep it quick
        for (int a = 0; a <= 6; a++)
            for (int b = 0; a + b <= 6; b++) {
                MultiIndex alpha(n, 0);
                alpha[0] = a;
                alpha[1] = b;
                CHECK(delta_monomial_check(C, alpha).ok);
            }
    }
}
