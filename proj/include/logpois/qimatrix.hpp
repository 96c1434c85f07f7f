#ifndef LOGPOIS_QIMATRIX_HPP
#define LOGPOIS_QIMATRIX_HPP

#include "logpois/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace logpois {

/* Dense exact matrix over Q(i). Small sizes only; plain Gaussian
 * elimination with first-nonzero pivoting is exact and sufficient. */
class QiMatrix {
public:
    QiMatrix() = default;
    QiMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static QiMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar &at(int i, int j) { return a_[i * cols_ + j]; }
    const Scalar &at(int i, int j) const { return a_[i * cols_ + j]; }

    bool operator==(const QiMatrix &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const QiMatrix &o) const { return !(*this == o); }
    bool is_zero() const;

    QiMatrix operator+(const QiMatrix &o) const;
    QiMatrix operator-(const QiMatrix &o) const;
    QiMatrix operator*(const QiMatrix &o) const;
    QiMatrix operator*(const Scalar &c) const;
    QiMatrix operator-() const;
    QiMatrix transpose() const;
    QiMatrix conj_transpose() const;
    QiMatrix commutator(const QiMatrix &o) const; // [this, o]

    int rank() const;
    QiMatrix inverse() const; // throws math_error when singular
    /* basis of the right kernel, one column per basis vector */
    std::vector<QiMatrix> kernel_basis() const;

    /* Solve A x = b. column_order permutes the elimination order of the
     * unknowns; free unknowns are set to zero (pivot-minimal solution).
     * Returns nullopt when inconsistent. */
    std::optional<QiMatrix>
    solve(const QiMatrix &b, const std::vector<int> *column_order = nullptr) const;

    /* monic characteristic polynomial, coefficients c[0] + c[1] t + ...
     * + c[n] t^n with c[n] = 1 (Faddeev-LeVerrier) */
    std::vector<Scalar> char_poly() const;

    Scalar trace() const;

    std::string str() const; // [[a,b],[c,d]]
    static QiMatrix parse(const std::string &text);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

} // namespace logpois

#endif
