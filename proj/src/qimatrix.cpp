#include "logpois/qimatrix.hpp"
#include "logpois/errors.hpp"

#include <numeric>
#include <sstream>

namespace logpois {

QiMatrix QiMatrix::identity(int n) {
    QiMatrix m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = Scalar(1);
    return m;
}

bool QiMatrix::is_zero() const {
    for (auto &x : a_)
        if (!x.is_zero()) return false;
    return true;
}

QiMatrix QiMatrix::operator+(const QiMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw input_error("matrix shape mismatch in add");
    QiMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); i++) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

QiMatrix QiMatrix::operator-(const QiMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw input_error("matrix shape mismatch in sub");
    QiMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); i++) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

QiMatrix QiMatrix::operator*(const QiMatrix &o) const {
    if (cols_ != o.rows_) throw input_error("matrix shape mismatch in mul");
    QiMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; i++)
        for (int k = 0; k < cols_; k++) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; j++)
                m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

QiMatrix QiMatrix::operator*(const Scalar &c) const {
    QiMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); i++) m.a_[i] = a_[i] * c;
    return m;
}

QiMatrix QiMatrix::operator-() const {
    QiMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); i++) m.a_[i] = -a_[i];
    return m;
}

QiMatrix QiMatrix::transpose() const {
    QiMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) m.at(j, i) = at(i, j);
    return m;
}

QiMatrix QiMatrix::conj_transpose() const {
    QiMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) m.at(j, i) = at(i, j).conj();
    return m;
}

QiMatrix QiMatrix::commutator(const QiMatrix &o) const {
    return *this * o - o * *this;
}

Scalar QiMatrix::trace() const {
    Scalar t(0);
    for (int i = 0; i < rows_ && i < cols_; i++) t += at(i, i);
    return t;
}

namespace {

/* row echelon reduction in place; returns pivot (row, col) pairs.
 * col_order remaps which original column is eliminated at step k. */
std::vector<std::pair<int, int>>
echelon(QiMatrix &m, const std::vector<int> &col_order) {
    std::vector<std::pair<int, int>> pivots;
    int row = 0;
    for (int oc = 0; oc < (int)col_order.size() && row < m.rows(); oc++) {
        int col = col_order[oc];
        int p = -1;
        for (int i = row; i < m.rows(); i++)
            if (!m.at(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); j++) std::swap(m.at(p, j), m.at(row, j));
        Scalar inv = Scalar(1) / m.at(row, col);
        for (int j = 0; j < m.cols(); j++) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); i++) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = 0; j < m.cols(); j++)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.emplace_back(row, col);
        row++;
    }
    return pivots;
}

std::vector<int> default_order(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

int QiMatrix::rank() const {
    QiMatrix m = *this;
    return (int)echelon(m, default_order(cols_)).size();
}

QiMatrix QiMatrix::inverse() const {
    if (rows_ != cols_) throw input_error("inverse of non-square matrix");
    QiMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; i++) {
        for (int j = 0; j < cols_; j++) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar(1);
    }
    auto pivots = echelon(aug, default_order(cols_));
    if ((int)pivots.size() != rows_)
        throw math_error("invertibility", "matrix is singular over Q(i)", str());
    QiMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; i++)
        for (int j = 0; j < cols_; j++) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<QiMatrix> QiMatrix::kernel_basis() const {
    QiMatrix m = *this;
    auto pivots = echelon(m, default_order(cols_));
    std::vector<char> is_pivot(cols_, 0);
    for (auto &[r, c] : pivots) is_pivot[c] = 1;
    std::vector<QiMatrix> basis;
    for (int free = 0; free < cols_; free++) {
        if (is_pivot[free]) continue;
        QiMatrix v(cols_, 1);
        v.at(free, 0) = Scalar(1);
        for (auto &[r, c] : pivots) v.at(c, 0) = -m.at(r, free);
        basis.push_back(v);
    }
    return basis;
}

std::optional<QiMatrix>
QiMatrix::solve(const QiMatrix &b, const std::vector<int> *column_order) const {
    if (b.rows() != rows_) throw input_error("solve: rhs shape mismatch");
    std::vector<int> order =
        column_order ? *column_order : default_order(cols_);
    if ((int)order.size() != cols_)
        throw input_error("solve: bad column order");
    QiMatrix aug(rows_, cols_ + b.cols());
    for (int i = 0; i < rows_; i++) {
        for (int j = 0; j < cols_; j++) aug.at(i, j) = at(i, j);
        for (int j = 0; j < b.cols(); j++) aug.at(i, cols_ + j) = b.at(i, j);
    }
    auto pivots = echelon(aug, order);
    // inconsistent when a zero row of A maps to a nonzero rhs
    for (int i = (int)pivots.size(); i < rows_; i++)
        for (int j = 0; j < b.cols(); j++)
            if (!aug.at(i, cols_ + j).is_zero()) return std::nullopt;
    QiMatrix x(cols_, b.cols());
    for (auto &[r, c] : pivots)
        for (int j = 0; j < b.cols(); j++) x.at(c, j) = aug.at(r, cols_ + j);
    return x;
}

std::vector<Scalar> QiMatrix::char_poly() const {
    if (rows_ != cols_) throw input_error("char_poly of non-square matrix");
    int n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    QiMatrix M = *this;
    for (int k = 1; k <= n; k++) {
        if (k > 1) {
            QiMatrix shifted = M;
            for (int i = 0; i < n; i++)
                shifted.at(i, i) += c[n - k + 1];
            M = *this * shifted;
        }
        c[n - k] = -(M.trace() / Scalar(k));
    }
    return c;
}

std::string QiMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; i++) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < cols_; j++) {
            if (j) os << ",";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

QiMatrix QiMatrix::parse(const std::string &text) {
    std::string t;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) t += ch;
    if (t.size() < 4 || t.front() != '[' || t.back() != ']')
        throw input_error("malformed matrix '" + text + "'");
    std::vector<std::vector<Scalar>> rows;
    size_t pos = 1;
    while (pos < t.size() - 1) {
        if (t[pos] == ',') { pos++; continue; }
        if (t[pos] != '[') throw input_error("malformed matrix row in '" + text + "'");
        size_t close = t.find(']', pos);
        if (close == std::string::npos)
            throw input_error("unbalanced '[' in matrix '" + text + "'");
        std::string row = t.substr(pos + 1, close - pos - 1);
        std::vector<Scalar> vals;
        size_t start = 0;
        while (start <= row.size()) {
            size_t comma = row.find(',', start);
            std::string cell = comma == std::string::npos
                                   ? row.substr(start)
                                   : row.substr(start, comma - start);
            if (!cell.empty()) vals.push_back(Scalar::parse(cell));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(vals));
        pos = close + 1;
    }
    if (rows.empty()) throw input_error("empty matrix '" + text + "'");
    size_t cols = rows[0].size();
    for (auto &r : rows)
        if (r.size() != cols)
            throw input_error("ragged matrix '" + text + "'");
    QiMatrix m((int)rows.size(), (int)cols);
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace logpois
