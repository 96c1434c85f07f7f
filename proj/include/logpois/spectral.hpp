#ifndef LOGPOIS_SPECTRAL_HPP
#define LOGPOIS_SPECTRAL_HPP

#include "logpois/connection.hpp"

#include <optional>

namespace logpois {

/* Joint generalized eigenspace decomposition of a commuting tuple. */
struct SpectralBlock {
    std::vector<Scalar> lambda;  // one eigenvalue per tuple member
    std::vector<QiMatrix> basis; // e-columns spanning the block
    int nilpotency_bound = 1;
};

struct SpectralData {
    int e = 0;
    std::vector<SpectralBlock> blocks;

    /* change of basis: columns are the block bases in order */
    QiMatrix basis_matrix() const;
    /* projector onto block k along the others */
    QiMatrix projector(int k) const;
    int block_of_basis_column(int col) const; // block index per column
};

struct CommuteResult {
    bool ok = true;
    int i = -1, j = -1;
    QiMatrix witness;
};
CommuteResult check_commuting(const ResidueTuple &A);

/* Exact decomposition; throws math_error("rational-spectrum", ...) when
 * some eigenvalue lies outside Q(i). */
SpectralData joint_spectrum(const ResidueTuple &A);

enum class NonresonanceMode { as_stated, symmetric };

struct ResonanceWitness {
    int kappa = -1, kappa_prime = -1;
    std::vector<Scalar> alpha; // the integer difference vector
};
/* lambda_k - lambda_k' must avoid Z_{>=0}^r \ {0} over ordered pairs;
 * both modes run the same complete ordered-pair test (the readings
 * coincide), the mode is only echoed in reports */
std::optional<ResonanceWitness> check_nonresonance(const SpectralData &S,
                                                   NonresonanceMode mode);

struct CentralizerResult {
    bool ok = true;
    int i = -1; // failing tuple member
};
CentralizerResult centralizer_check(const QiMatrix &G, const ResidueTuple &A);
/* series-valued version, tested coefficient-wise */
CentralizerResult centralizer_check(const PolyMatrix &G, const ResidueTuple &A);

std::string lambda_str(const std::vector<Scalar> &lambda);

} // namespace logpois

#endif
