#ifndef LOGPOIS_PPD_HPP
#define LOGPOIS_PPD_HPP

#include "logpois/connection.hpp"
#include "logpois/spectral.hpp"

namespace logpois {

/* one division certificate: the weight covector attached to a spectral
 * block pair actually hit by the defect at a monomial */
struct DenomRecord {
    MultiIndex alpha;           // full exponent vector, |alpha| = degree
    int kappa, kappa_prime;     // row / column block indices
    std::vector<Scalar> weight; // alpha_log + lambda_k' - lambda_k
};

struct DegreeRecord {
    int degree = 0;
    int defect_terms = 0; // nonzero (entry, slot, monomial) coefficients
    std::vector<DenomRecord> denominators;
    PolyMatrix correction; // K^(N)
};

struct NormalizationCertificate {
    int truncation = 0;
    /* the first-order operator derived from the gauge identity */
    std::string operator_form = "delta(K)+[K,Theta0]=-R";
    std::vector<DegreeRecord> degrees;
};

struct NormalizationResult {
    PolyMatrix gauge; // H with gauge_transform(Theta, H) = normal_form
    ConnMatrix normal_form;
    ResidueTuple residues;
    SpectralData spectrum;
    NormalizationCertificate certificate;
};

/* R = (delta H)H^-1 + H Theta H^-1 - Theta0 */
ConnMatrix defect(const LogChart &C, const ConnMatrix &Theta,
                  const GaugeMatrix &H, const ConnMatrix &Theta0);

/* Exact degree-N solve of delta(K) + K Theta0 - Theta0 K = -R_N, one
 * finite linear system over Q(i) per monomial; pivot-minimal solution.
 * order_seed permutes the elimination order of the unknowns (0 keeps
 * the canonical order). */
PolyMatrix homological_solve(const LogChart &C, const ConnMatrix &Theta0,
                             const ResidueTuple &A, const SpectralData &S,
                             const ConnMatrix &R_N, int N,
                             std::vector<DenomRecord> *denominators = nullptr,
                             unsigned order_seed = 0);

/* given_residues skips the constant-term extraction (needed when the
 * log Hamiltonian constants are linearly dependent and the split is
 * supplied by the caller) */
NormalizationResult normalize(const LogChart &C, const ConnMatrix &Theta,
                              int T, unsigned order_seed = 0,
                              const ResidueTuple *given_residues = nullptr);

struct UniquenessResult {
    bool ok = true;
    std::string failure;
    PolyMatrix G; // H2 H1^-1
};
UniquenessResult verify_uniqueness(const LogChart &C, const ConnMatrix &Theta,
                                   const GaugeMatrix &H1, const GaugeMatrix &H2,
                                   const ResidueTuple &A, int T);

/* exact kernel of the degree-N homological operator, one element per
 * (monomial, matrix) kernel direction */
struct StabilizerElement {
    MultiIndex alpha;
    QiMatrix k;
};
std::vector<StabilizerElement> stabilizer_kernel(const LogChart &C,
                                                 const ResidueTuple &A,
                                                 const SpectralData &S, int N);

/* constant euler-frame coefficients of delta(z_k)/z_k for every k;
 * rows indexed by k, columns by the euler slot */
QiMatrix weight_matrix(const LogChart &C);

/* delta(z_k)/z_k holomorphic in the euler frame for every coordinate;
 * the chart class on which degree-by-degree elimination is valid */
void check_degree_filtration(const LogChart &C);

} // namespace logpois

#endif
