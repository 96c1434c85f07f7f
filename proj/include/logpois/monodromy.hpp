#ifndef LOGPOIS_MONODROMY_HPP
#define LOGPOIS_MONODROMY_HPP

#include "logpois/connection.hpp"

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace logpois {

/* Exact residues in, double-precision matrices out: this is the only
 * floating-point boundary of the engine. */
using ComplexMatrixF = Eigen::MatrixXcd;

ComplexMatrixF to_complex(const QiMatrix &m);

/* m -> exp(-2 pi i sum_i m_i A_i); requires a commuting tuple */
ComplexMatrixF meridional_character(const ResidueTuple &A,
                                    const std::vector<long> &m);

struct WordLetter {
    enum Kind { leaf, meridian } kind;
    std::string generator;  // leaf letters
    bool inverse = false;   // leaf letters
    std::vector<long> m;    // meridian letters
};
using TwistedWord = std::vector<WordLetter>;

/* left-to-right product of letter images; meridian letters evaluate
 * through the character of the residue tuple */
ComplexMatrixF twisted_rep_eval(const std::map<std::string, ComplexMatrixF> &rho,
                                const ResidueTuple &A, const TwistedWord &w);

/* classical RK4 transport of y' = -i a y over one positive meridian
 * turn; the numeric oracle for the character's sign convention */
std::complex<double> transport_1d(const Scalar &a, long steps);

std::string complex_str(const std::complex<double> &z); // 15 significant digits
std::string complex_matrix_str(const ComplexMatrixF &m);

TwistedWord parse_word(const std::string &text);

} // namespace logpois

#endif
