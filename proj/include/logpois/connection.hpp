#ifndef LOGPOIS_CONNECTION_HPP
#define LOGPOIS_CONNECTION_HPP

#include "logpois/chart.hpp"
#include "logpois/qimatrix.hpp"

namespace logpois {

/* Vector field stored in the log frame { z_i d_i (log i), d_j (else) }
 * with holomorphic coefficients, so membership in the fields tangent to
 * the divisor is a representation invariant. */
struct LogVecField {
    RingSpec ring;
    std::vector<LaurentPoly> comp; // size n

    LogVecField() = default;
    explicit LogVecField(const RingSpec &r)
        : ring(r), comp(r.n, LaurentPoly(r)) {}

    bool is_zero() const;
    LogVecField operator+(const LogVecField &o) const;
    LogVecField operator-(const LogVecField &o) const;
    LogVecField operator-() const;
    LogVecField operator*(const Scalar &c) const;
    LogVecField operator*(const LaurentPoly &f) const;
    bool operator==(const LogVecField &o) const;

    Polyvector to_polyvector() const;
    /* exact division on log slots; throws when not tangent */
    static LogVecField from_polyvector(const Polyvector &v);

    /* coefficient of z^alpha in the euler-frame slot z_k d_k; the
     * grading used by the normal-form solver */
    Scalar euler_coeff_at(int k, const MultiIndex &alpha) const;
    /* constant part of the euler-frame coefficients, as a column vector */
    QiMatrix euler_constant() const;

    LogVecField homogeneous_part(int degree) const; // euler-frame degree
    int lowest_euler_degree() const;                // trunc+1 when zero

    LogVecField coerce(const RingSpec &target) const;
    std::string str() const;
    static LogVecField parse(const RingSpec &ring, const std::string &text);
};

/* e x e matrix of holomorphic functions (gauges and their factors) */
struct PolyMatrix {
    RingSpec ring;
    int rows = 0, cols = 0;
    std::vector<LaurentPoly> a;

    PolyMatrix() = default;
    PolyMatrix(const RingSpec &r, int rows_, int cols_)
        : ring(r), rows(rows_), cols(cols_), a(rows_ * cols_, LaurentPoly(r)) {}
    static PolyMatrix identity(const RingSpec &r, int e);
    static PolyMatrix constant(const RingSpec &r, const QiMatrix &m);

    LaurentPoly &at(int i, int j) { return a[i * cols + j]; }
    const LaurentPoly &at(int i, int j) const { return a[i * cols + j]; }
    bool operator==(const PolyMatrix &o) const;
    bool is_zero() const;

    PolyMatrix operator+(const PolyMatrix &o) const;
    PolyMatrix operator-(const PolyMatrix &o) const;
    PolyMatrix operator*(const PolyMatrix &o) const;
    PolyMatrix operator*(const Scalar &c) const;

    QiMatrix constant_part() const;
    /* truncated series inverse; requires invertible constant part */
    PolyMatrix series_inverse() const;

    PolyMatrix coerce(const RingSpec &target) const;
    std::string str() const;
    static PolyMatrix parse(const RingSpec &ring, const std::string &text);
};

/* Connection matrix: e x e matrix of log vector fields */
struct ConnMatrix {
    RingSpec ring;
    int e = 0;
    std::vector<LogVecField> a;

    ConnMatrix() = default;
    ConnMatrix(const RingSpec &r, int e_)
        : ring(r), e(e_), a(e_ * e_, LogVecField(r)) {}

    LogVecField &at(int i, int j) { return a[i * e + j]; }
    const LogVecField &at(int i, int j) const { return a[i * e + j]; }
    bool operator==(const ConnMatrix &o) const;
    bool is_zero() const;

    ConnMatrix operator+(const ConnMatrix &o) const;
    ConnMatrix operator-(const ConnMatrix &o) const;

    ConnMatrix homogeneous_part(int degree) const;
    int lowest_euler_degree() const;
    ConnMatrix coerce(const RingSpec &target) const;
    std::string str() const;
};

using ResidueTuple = std::vector<QiMatrix>; // one e x e matrix per log slot

/* holomorphic gauge with invertible constant term */
struct GaugeMatrix {
    PolyMatrix g;
    explicit GaugeMatrix(PolyMatrix m);
    int e() const { return g.rows; }
};

/* Theta_0 = sum_i A_i X_i over the chart's log Hamiltonians */
ConnMatrix ep_principal(const LogChart &C, const ResidueTuple &A);

/* K = delta(Theta) + Theta ^ Theta, entrywise grade-2 polyvectors */
std::vector<Polyvector> poisson_curvature(const LogChart &C,
                                          const ConnMatrix &Theta);
bool curvature_is_zero(const std::vector<Polyvector> &K);

/* Theta' = (delta g) g^{-1} + g Theta g^{-1} */
ConnMatrix gauge_transform(const LogChart &C, const ConnMatrix &Theta,
                           const GaugeMatrix &g);

/* split Theta = sum_i A_i X_i + V; the residues solve the constant-term
 * system in the euler frame, V's constant part is orthogonal (hermitian
 * pairing) to the span of the X_i constants */
std::pair<ResidueTuple, ConnMatrix> extract_principal(const LogChart &C,
                                                      const ConnMatrix &Theta);

/* delta(Y) + Theta Y for a coefficient column Y */
std::vector<Polyvector> horizontal_defect(const LogChart &C,
                                          const ConnMatrix &Theta,
                                          const std::vector<LaurentPoly> &Y);

/* matrix of Hamiltonian fields delta(g), entrywise */
ConnMatrix delta_matrix(const LogChart &C, const PolyMatrix &g);

std::string residue_tuple_str(const ResidueTuple &A);

} // namespace logpois

#endif
