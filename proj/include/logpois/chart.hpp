#ifndef LOGPOIS_CHART_HPP
#define LOGPOIS_CHART_HPP

#include "logpois/poisson.hpp"

namespace logpois {

/* An adapted chart: coordinates z_1..z_n with the divisor given by the
 * product of the ring's log coordinates, plus a Poisson bivector. */
struct LogChart {
    PoissonStructure P;
    std::vector<std::string> labels; // defaults z1..zn

    LogChart() = default;
    explicit LogChart(PoissonStructure P_, std::vector<std::string> labels_ = {});

    const RingSpec &ring() const { return P.ring(); }
    int n() const { return ring().n; }
    int r() const { return ring().r(); }
    /* coordinate index of the li-th log coordinate, li = 0..r-1 */
    int log_coord(int li) const { return ring().log_indices().at(li); }
};

/* X_i = sigma#(dz_i/z_i) for the li-th log coordinate, with its
 * holomorphy class in the log-frame allowance */
struct LogHamiltonian {
    Polyvector field;
    HolomorphyClass cls;
};
LogHamiltonian log_hamiltonian(const LogChart &C, int li);

/* Divisor branches are Poisson hypersurfaces: every X_i holomorphic and
 * tangent to every branch. */
struct H3Result {
    bool ok = true;
    int li = -1; // failing log slot
    Polyvector witness;
};
H3Result check_H3(const LogChart &C);

/* Holomorphic primitive of a closed residue-free log 1-form, by
 * term-wise Euler integration (monomial of total degree d carries the
 * weight 1/d); the integration constant is fixed to zero. The result
 * lives one truncation degree above eta so that d(f) = eta exactly. */
LaurentPoly log_poincare_primitive(const LogChart &C, const LogForm &eta);

/* delta(z^alpha) = z^alpha sum_i alpha_i X_i for alpha supported on the
 * log coordinates of a log-canonical structure */
struct DeltaMonomialResult {
    bool ok = true;
    Polyvector lhs, rhs;
};
DeltaMonomialResult delta_monomial_check(const LogChart &C, const MultiIndex &alpha);

} // namespace logpois

#endif
