#ifndef LOGPOIS_POISSON_HPP
#define LOGPOIS_POISSON_HPP

#include "logpois/logform.hpp"
#include "logpois/polyvector.hpp"
#include "logpois/qimatrix.hpp"

#include <optional>

namespace logpois {

/* Bivector candidate for a Poisson structure. Validity (the Jacobi
 * identity) is established by check_jacobi, never assumed. */
struct PoissonStructure {
    Polyvector sigma; // grade 2

    const RingSpec &ring() const { return sigma.ring(); }
    /* {f, g} = sigma(df, dg), expanded directly from components */
    LaurentPoly bracket(const LaurentPoly &f, const LaurentPoly &g) const;
};

/* sigma#(alpha) = sigma(alpha, .) for a grade-1 log form */
Polyvector anchor(const PoissonStructure &P, const LogForm &alpha);

/* Poisson differential: grade 0 -> Hamiltonian field (direct formula,
 * kept independent of anchor), grade 1 -> [sigma, v] = -L_v(sigma). */
Polyvector lichnerowicz(const PoissonStructure &P, const Polyvector &x);

/* cyclic sum {{z_i,z_j},z_k} + {{z_j,z_k},z_i} + {{z_k,z_i},z_j} */
LaurentPoly jacobiator(const PoissonStructure &P, int i, int j, int k);

struct JacobiResult {
    bool poisson = true;
    int i = -1, j = -1, k = -1;
    LaurentPoly witness;
};
JacobiResult check_jacobi(const PoissonStructure &P);

/* [alpha,beta]_sigma = L_{sigma#alpha}beta - L_{sigma#beta}alpha
 *                      - d(sigma(alpha,beta)) */
LogForm koszul_bracket(const PoissonStructure &P, const LogForm &alpha,
                       const LogForm &beta);

/* exact rank of the antisymmetric matrix sigma(point); always even */
int poisson_rank_at(const PoissonStructure &P, const std::vector<Scalar> &point);

/* if sigma = sum_{a<b} c_ab z_a z_b d_a^d_b with constant c, return the
 * antisymmetric coefficient matrix */
std::optional<QiMatrix> log_canonical_coefficients(const PoissonStructure &P);

/* log-canonical structure from an antisymmetric coefficient matrix */
PoissonStructure log_canonical_structure(const RingSpec &ring, const QiMatrix &c);

} // namespace logpois

#endif
