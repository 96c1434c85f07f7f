#include "logpois/poisson.hpp"
#include "logpois/errors.hpp"

namespace logpois {

LaurentPoly PoissonStructure::bracket(const LaurentPoly &f,
                                      const LaurentPoly &g) const {
    LaurentPoly out(ring());
    for (auto &[idx, s] : sigma.components()) {
        int a = idx[0], b = idx[1];
        out = out + s * (f.derivative(a) * g.derivative(b) -
                         f.derivative(b) * g.derivative(a));
    }
    return out;
}

Polyvector anchor(const PoissonStructure &P, const LogForm &alpha) {
    if (alpha.grade() != 1) throw input_error("anchor expects a 1-form");
    const RingSpec &ring = P.ring();
    RingSpec work = ring.with_pole_bound(ring.pole_bound + 1);
    Polyvector out(work, 1);
    for (auto &[idx, s] : P.sigma.components()) {
        int a = idx[0], b = idx[1];
        // alpha(d_a) = a-th coefficient over z_a on log slots
        for (int swap = 0; swap < 2; swap++) {
            int u = swap ? b : a, v = swap ? a : b;
            LaurentPoly au = alpha.component({u}).coerce(work);
            if (au.is_zero()) continue;
            if (ring.log_at(u)) {
                MultiIndex sh(ring.n, 0);
                sh[u] = -1;
                au = au.shift(sh);
            }
            LaurentPoly c = s.coerce(work) * au;
            if (swap) c = -c;
            if (!c.is_zero()) out.add_term({v}, c);
        }
    }
    return out.coerce(ring);
}

Polyvector lichnerowicz(const PoissonStructure &P, const Polyvector &x) {
    const RingSpec &ring = P.ring();
    if (x.grade() == 0) {
        LaurentPoly f = x.component({});
        Polyvector out(ring, 1);
        for (auto &[idx, s] : P.sigma.components()) {
            int a = idx[0], b = idx[1];
            LaurentPoly da = f.derivative(a), db = f.derivative(b);
            if (!db.is_zero()) out.add_term({a}, -(s * db));
            if (!da.is_zero()) out.add_term({b}, s * da);
        }
        return out;
    }
    // grade 1: [sigma, v] in the Chevalley-Eilenberg normalization of the
    // cotangent algebroid, which is -L_v(sigma). This sign is what makes
    // the curvature gauge-covariant under Theta' = (delta g)g^-1 + g Theta g^-1.
    if (x.grade() == 1) return -P.sigma.lie_derivative_along(x);
    throw input_error("lichnerowicz implemented for grades 0 and 1");
}

LaurentPoly jacobiator(const PoissonStructure &P, int i, int j, int k) {
    if (i == j || j == k || i == k)
        throw input_error("jacobiator needs distinct indices");
    const RingSpec &ring = P.ring();
    auto z = [&](int a) { return LaurentPoly::coordinate(ring, a); };
    return P.bracket(P.bracket(z(i), z(j)), z(k)) +
           P.bracket(P.bracket(z(j), z(k)), z(i)) +
           P.bracket(P.bracket(z(k), z(i)), z(j));
}

JacobiResult check_jacobi(const PoissonStructure &P) {
    const int n = P.ring().n;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            for (int k = j + 1; k < n; k++) {
                LaurentPoly w = jacobiator(P, i, j, k);
                if (!w.is_zero()) return {false, i, j, k, w};
            }
    return {};
}

LogForm koszul_bracket(const PoissonStructure &P, const LogForm &alpha,
                       const LogForm &beta) {
    if (alpha.grade() != 1 || beta.grade() != 1)
        throw input_error("koszul bracket expects 1-forms");
    const RingSpec &ring = P.ring();
    RingSpec work = ring.with_pole_bound(ring.pole_bound + 2);
    PoissonStructure Pw{P.sigma.coerce(work)};
    LogForm a = alpha.coerce(work), b = beta.coerce(work);
    Polyvector xa = anchor(Pw, a), xb = anchor(Pw, b);
    LaurentPoly pairing = b.contract(xa).component({});
    LogForm out = b.lie_derivative_along(xa) - a.lie_derivative_along(xb) -
                  LogForm::differential(pairing);
    return out.coerce(ring);
}

int poisson_rank_at(const PoissonStructure &P, const std::vector<Scalar> &point) {
    const int n = P.ring().n;
    if ((int)point.size() != n)
        throw input_error("rank evaluation point has wrong dimension");
    QiMatrix m(n, n);
    for (auto &[idx, s] : P.sigma.components()) {
        Scalar v = s.eval(point);
        m.at(idx[0], idx[1]) = v;
        m.at(idx[1], idx[0]) = -v;
    }
    return m.rank();
}

std::optional<QiMatrix> log_canonical_coefficients(const PoissonStructure &P) {
    const RingSpec &ring = P.ring();
    QiMatrix c(ring.n, ring.n);
    for (auto &[idx, s] : P.sigma.components()) {
        int a = idx[0], b = idx[1];
        MultiIndex m(ring.n, 0);
        m[a] = 1;
        m[b] = 1;
        if (s != LaurentPoly::monomial(ring, m, s.coeff(m)))
            return std::nullopt;
        c.at(a, b) = s.coeff(m);
        c.at(b, a) = -s.coeff(m);
    }
    return c;
}

PoissonStructure log_canonical_structure(const RingSpec &ring, const QiMatrix &c) {
    if (c.rows() != ring.n || c.cols() != ring.n)
        throw input_error("coefficient matrix has wrong shape");
    Polyvector sigma(ring, 2);
    for (int a = 0; a < ring.n; a++)
        for (int b = a + 1; b < ring.n; b++) {
            if (c.at(a, b).is_zero()) continue;
            if (c.at(a, b) != -c.at(b, a))
                throw input_error("coefficient matrix is not antisymmetric");
            MultiIndex m(ring.n, 0);
            m[a] = 1;
            m[b] = 1;
            sigma.add_term({a, b}, LaurentPoly::monomial(ring, m, c.at(a, b)));
        }
    return {sigma};
}

} // namespace logpois
