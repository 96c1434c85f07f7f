#include "logpois/chart.hpp"
#include "logpois/errors.hpp"

namespace logpois {

LogChart::LogChart(PoissonStructure P_, std::vector<std::string> labels_)
    : P(std::move(P_)), labels(std::move(labels_)) {
    if (labels.empty())
        for (int k = 0; k < ring().n; k++)
            labels.push_back("z" + std::to_string(k + 1));
    if ((int)labels.size() != ring().n)
        throw input_error("label count does not match the chart dimension");
}

LogHamiltonian log_hamiltonian(const LogChart &C, int li) {
    const RingSpec &ring = C.ring();
    int k = C.log_coord(li);
    Polyvector X = anchor(C.P, LogForm::frame_generator(ring, k));
    // the log frame tolerates z_j^-1 only in the d_j slot itself (z_j d_j)
    HolomorphyClass worst = HolomorphyClass::holomorphic;
    for (auto &[idx, f] : X.components()) {
        std::vector<int> allowance(ring.n, 0);
        if (ring.log_at(idx[0])) allowance[idx[0]] = -1;
        HolomorphyClass c = f.classify(allowance);
        if (c == HolomorphyClass::genuine_pole) return {X, c};
        if (c == HolomorphyClass::logarithmic_only) worst = c;
    }
    return {X, worst};
}

H3Result check_H3(const LogChart &C) {
    const RingSpec &ring = C.ring();
    for (int li = 0; li < C.r(); li++) {
        LogHamiltonian X = log_hamiltonian(C, li);
        bool tangent = true;
        for (auto &[idx, f] : X.field.components()) {
            if (!f.is_holomorphic()) { tangent = false; break; }
            int j = idx[0];
            if (ring.log_at(j) && !f.divisible_by_coordinate(j)) {
                tangent = false;
                break;
            }
        }
        if (!tangent) return {false, li, X.field};
    }
    return {};
}

LaurentPoly log_poincare_primitive(const LogChart &C, const LogForm &eta) {
    if (eta.grade() != 1)
        throw input_error("primitive defined for 1-forms");
    const RingSpec &ring = eta.ring();

    if (eta.classify() != HolomorphyClass::holomorphic)
        throw math_error("log-lattice",
                         "form coefficients must be holomorphic in the log frame",
                         eta.str());
    for (int li = 0; li < C.r(); li++) {
        int k = C.log_coord(li);
        LaurentPoly res = eta.residue(k);
        if (!res.is_zero())
            throw math_error("residue-free",
                             "nonzero residue along {z" + std::to_string(k + 1) +
                                 "=0}",
                             res.str());
    }
    LogForm deta = eta.exterior_derivative();
    if (!deta.is_zero())
        throw math_error("closedness", "the form is not closed", deta.str());

    // residue-free: the dz_k/z_k coefficient is divisible by z_k, so eta
    // is an honest holomorphic form sum_k c_k dz_k; Euler integration of
    // g = sum_k z_k c_k gives the primitive, one degree above eta.
    RingSpec up = ring.with_trunc(ring.trunc + 1);
    LaurentPoly g(up);
    for (int k = 0; k < ring.n; k++) {
        LaurentPoly a = eta.component({k}).coerce(up);
        if (a.is_zero()) continue;
        // on log slots the coefficient is already a_k = z_k c_k
        if (!ring.log_at(k)) a = a * LaurentPoly::coordinate(up, k);
        g = g + a;
    }
    LaurentPoly f(up);
    for (auto &[m, c] : g.terms()) {
        int d = total_degree(m);
        if (d == 0)
            throw math_error("closedness",
                             "degree-0 obstruction in Euler integration",
                             g.str());
        f = f + LaurentPoly::monomial(up, m, c / Scalar(d));
    }
    // exactness re-verified on the result
    LogForm df = LogForm::differential(f);
    LogForm eta_up = eta.coerce(up);
    if (df != eta_up)
        throw math_error("closedness", "the form is not exact",
                         (df - eta_up).str());
    return f;
}

DeltaMonomialResult delta_monomial_check(const LogChart &C, const MultiIndex &alpha) {
    const RingSpec &ring = C.ring();
    if ((int)alpha.size() != C.r())
        throw input_error("multi-index length must equal the log count");
    if (!log_canonical_coefficients(C.P))
        throw input_error("delta_monomial_check requires a log-canonical structure");
    MultiIndex full(ring.n, 0);
    for (int li = 0; li < C.r(); li++) {
        if (alpha[li] < 0)
            throw input_error("multi-index must be non-negative");
        full[C.log_coord(li)] = alpha[li];
    }
    LaurentPoly za = LaurentPoly::monomial(ring, full, Scalar(1));
    Polyvector lhs = lichnerowicz(C.P, Polyvector::function(za));
    Polyvector rhs(ring, 1);
    for (int li = 0; li < C.r(); li++) {
        if (alpha[li] == 0) continue;
        rhs = rhs + log_hamiltonian(C, li).field * Scalar(alpha[li]);
    }
    rhs = rhs * za;
    return {lhs == rhs, lhs, rhs};
}

} // namespace logpois
