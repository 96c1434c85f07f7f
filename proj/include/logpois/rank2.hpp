#ifndef LOGPOIS_RANK2_HPP
#define LOGPOIS_RANK2_HPP

#include "logpois/connection.hpp"

#include <array>
#include <optional>

namespace logpois {

/* sl2 triple of vector fields on a common chart */
struct PoissonTriple {
    Polyvector u, v, w;
};

/* the three Maurer-Cartan identities, in the Lie-derivative convention
 *   L_u(sigma) = -2 u^v,  L_v(sigma) = u^w,  L_w(sigma) = -2 v^w */
struct MCViolation {
    std::string equation; // "u", "v" or "w"
    Polyvector witness;   // the residual
};
struct MCResult {
    bool flat = true;
    std::vector<MCViolation> violations;
};
MCResult mc_check(const PoissonStructure &P, const PoissonTriple &t);

/* trace-free connection matrix of the triple in coefficient-action
 * orientation [[v,u],[w,-v]]; its Poisson curvature vanishes exactly
 * when mc_check passes (asserted) */
ConnMatrix triple_to_theta(const LogChart &C, const PoissonTriple &t);

/* Poisson-field criterion for v with separated components (v^k depends
 * only on z_k): per-pair coefficient identities, cross-checked against
 * the Lichnerowicz differential on every call */
struct CriterionResult {
    bool ok = true;
    std::vector<std::pair<int, int>> fails;
};
CriterionResult coord_criterion_check(const PoissonStructure &P,
                                      const Polyvector &v);

/* L_u(sigma) = u^v test for constant u and diagonal linear v against a
 * diagonal quadratic structure: c_i(c_ij - b_j) = 0, c_j(c_ij + b_i) = 0 */
struct LuUwFailure {
    int i, j;
    int which; // 1 or 2, the failing displayed condition
};
struct LuUwResult {
    bool ok = true;
    std::vector<LuUwFailure> fails;
};
LuUwResult lu_uw_check(const PoissonStructure &P, const Polyvector &u,
                       const Polyvector &v);

/* the diagonal quadratic family on C^4 parametrized by a sum-zero tuple */
struct L1111Params {
    std::array<Scalar, 4> a;
    explicit L1111Params(std::array<Scalar, 4> a_);
};
/* c01 = a3-a2, c02 = a1-a3, c03 = a2-a1,
 * c12 = a3-a0, c13 = a0-a2, c23 = a1-a0 */
QiMatrix l1111_coefficients(const L1111Params &p);
LogChart l1111_structure(const L1111Params &p, int trunc,
                         std::vector<int> log_coords = {1, 2, 3},
                         int pole_bound = 1);

/* anchor-computed log Hamiltonians against the closed row formula
 * X_i = sum_j c_ij z_j d_j */
struct XiCheckResult {
    bool ok = true;
    int li = -1;
    Polyvector anchored, closed_form;
};
XiCheckResult xi_closed_check(const LogChart &C);

/* bounded-degree ansatz search for w completing (u, v) to a flat
 * triple: exact linear solve, no solution -> nullopt */
std::optional<Polyvector> search_w(const PoissonStructure &P,
                                   const Polyvector &u, const Polyvector &v,
                                   int max_deg);

} // namespace logpois

#endif
