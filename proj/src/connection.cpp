#include "logpois/connection.hpp"
#include "logpois/errors.hpp"

#include <sstream>

namespace logpois {

/* ---- LogVecField ---- */

bool LogVecField::is_zero() const {
    for (auto &f : comp)
        if (!f.is_zero()) return false;
    return true;
}

LogVecField LogVecField::operator+(const LogVecField &o) const {
    if (ring != o.ring) throw input_error("log field ring mismatch");
    LogVecField out(ring);
    for (int k = 0; k < ring.n; k++) out.comp[k] = comp[k] + o.comp[k];
    return out;
}

LogVecField LogVecField::operator-(const LogVecField &o) const {
    return *this + (-o);
}

LogVecField LogVecField::operator-() const {
    LogVecField out(ring);
    for (int k = 0; k < ring.n; k++) out.comp[k] = -comp[k];
    return out;
}

LogVecField LogVecField::operator*(const Scalar &c) const {
    LogVecField out(ring);
    for (int k = 0; k < ring.n; k++) out.comp[k] = comp[k] * c;
    return out;
}

LogVecField LogVecField::operator*(const LaurentPoly &f) const {
    LogVecField out(ring);
    for (int k = 0; k < ring.n; k++) out.comp[k] = comp[k] * f;
    return out;
}

bool LogVecField::operator==(const LogVecField &o) const {
    return ring == o.ring && comp == o.comp;
}

Polyvector LogVecField::to_polyvector() const {
    Polyvector v(ring, 1);
    for (int k = 0; k < ring.n; k++) {
        if (comp[k].is_zero()) continue;
        LaurentPoly c = comp[k];
        if (ring.log_at(k)) c = c * LaurentPoly::coordinate(ring, k);
        v.add_term({k}, c);
    }
    return v;
}

LogVecField LogVecField::from_polyvector(const Polyvector &v) {
    if (v.grade() != 1)
        throw input_error("log frame conversion expects a grade-1 field");
    const RingSpec &ring = v.ring();
    LogVecField out(ring);
    for (int k = 0; k < ring.n; k++) {
        LaurentPoly c = v.component({k});
        if (c.is_zero()) continue;
        if (ring.log_at(k)) {
            if (!c.divisible_by_coordinate(k))
                throw math_error(
                    "divisor-tangency",
                    "field is not tangent to the branch {z" +
                        std::to_string(k + 1) + "=0}",
                    v.str());
            c = c.divide_by_coordinate(k);
        }
        if (!c.is_holomorphic())
            throw math_error("divisor-tangency",
                             "log-frame coefficient has a genuine pole", v.str());
        out.comp[k] = c;
    }
    return out;
}

Scalar LogVecField::euler_coeff_at(int k, const MultiIndex &alpha) const {
    if (ring.log_at(k)) return comp[k].coeff(alpha);
    MultiIndex m = alpha;
    m[k] += 1;
    return comp[k].coeff(m);
}

QiMatrix LogVecField::euler_constant() const {
    QiMatrix v(ring.n, 1);
    for (int k = 0; k < ring.n; k++) {
        if (ring.log_at(k)) {
            v.at(k, 0) = comp[k].constant_term();
        } else {
            MultiIndex m(ring.n, 0);
            m[k] = 1;
            v.at(k, 0) = comp[k].coeff(m);
        }
    }
    return v;
}

LogVecField LogVecField::homogeneous_part(int degree) const {
    LogVecField out(ring);
    for (int k = 0; k < ring.n; k++) {
        // euler degree d = log-frame coefficient degree d on log slots,
        // d+1 on plain slots (coefficient carries the extra z_k)
        int shift = ring.log_at(k) ? 0 : 1;
        out.comp[k] = comp[k].homogeneous_part(degree + shift);
    }
    return out;
}

int LogVecField::lowest_euler_degree() const {
    int best = ring.trunc + 1;
    for (int k = 0; k < ring.n; k++) {
        if (comp[k].is_zero()) continue;
        int shift = ring.log_at(k) ? 0 : 1;
        best = std::min(best, comp[k].lowest_degree() - shift);
    }
    return best;
}

LogVecField LogVecField::coerce(const RingSpec &target) const {
    LogVecField out(target);
    for (int k = 0; k < ring.n; k++) out.comp[k] = comp[k].coerce(target);
    return out;
}

std::string LogVecField::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < ring.n; k++) {
        if (comp[k].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        os << "(" << comp[k].str() << ")*L" << (k + 1);
    }
    return first ? "0" : os.str();
}

LogVecField LogVecField::parse(const RingSpec &ring, const std::string &text) {
    LogForm tmp = LogForm::parse(ring, 1, text); // same slot syntax
    LogVecField out(ring);
    for (auto &[idx, f] : tmp.components()) {
        if (!f.is_holomorphic())
            throw input_error("log field coefficients must be holomorphic: '" +
                              text + "'");
        out.comp[idx[0]] = f;
    }
    return out;
}

/* ---- PolyMatrix ---- */

PolyMatrix PolyMatrix::identity(const RingSpec &r, int e) {
    PolyMatrix m(r, e, e);
    for (int i = 0; i < e; i++) m.at(i, i) = LaurentPoly(r, Scalar(1));
    return m;
}

PolyMatrix PolyMatrix::constant(const RingSpec &r, const QiMatrix &q) {
    PolyMatrix m(r, q.rows(), q.cols());
    for (int i = 0; i < q.rows(); i++)
        for (int j = 0; j < q.cols(); j++)
            m.at(i, j) = LaurentPoly(r, q.at(i, j));
    return m;
}

bool PolyMatrix::operator==(const PolyMatrix &o) const {
    return ring == o.ring && rows == o.rows && cols == o.cols && a == o.a;
}

bool PolyMatrix::is_zero() const {
    for (auto &f : a)
        if (!f.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix &o) const {
    if (rows != o.rows || cols != o.cols)
        throw input_error("poly matrix shape mismatch");
    PolyMatrix m(ring, rows, cols);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i] + o.a[i];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix &o) const {
    if (rows != o.rows || cols != o.cols)
        throw input_error("poly matrix shape mismatch");
    PolyMatrix m(ring, rows, cols);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i] - o.a[i];
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix &o) const {
    if (cols != o.rows) throw input_error("poly matrix shape mismatch in mul");
    PolyMatrix m(ring, rows, o.cols);
    for (int i = 0; i < rows; i++)
        for (int k = 0; k < cols; k++) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols; j++)
                m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
        }
    return m;
}

PolyMatrix PolyMatrix::operator*(const Scalar &c) const {
    PolyMatrix m(ring, rows, cols);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i] * c;
    return m;
}

QiMatrix PolyMatrix::constant_part() const {
    QiMatrix m(rows, cols);
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++) m.at(i, j) = at(i, j).constant_term();
    return m;
}

PolyMatrix PolyMatrix::series_inverse() const {
    if (rows != cols) throw input_error("series inverse of non-square matrix");
    QiMatrix g0 = constant_part();
    QiMatrix g0inv = g0.inverse(); // throws when singular
    PolyMatrix reduced = PolyMatrix::constant(ring, g0inv) * *this;
    PolyMatrix N = reduced - PolyMatrix::identity(ring, rows);
    // (I + N)^{-1} = sum (-N)^k, N has positive lowest degree
    PolyMatrix acc = PolyMatrix::identity(ring, rows);
    PolyMatrix power = PolyMatrix::identity(ring, rows);
    for (int k = 1; k <= ring.trunc; k++) {
        power = power * N;
        if (power.is_zero()) break;
        acc = k % 2 ? acc - power : acc + power;
    }
    return acc * PolyMatrix::constant(ring, g0inv);
}

PolyMatrix PolyMatrix::coerce(const RingSpec &target) const {
    PolyMatrix m(target, rows, cols);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i].coerce(target);
    return m;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; i++) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < cols; j++) {
            if (j) os << ",";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

PolyMatrix PolyMatrix::parse(const RingSpec &ring, const std::string &text) {
    std::string t;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) t += ch;
    if (t.size() < 4 || t.front() != '[' || t.back() != ']')
        throw input_error("malformed polynomial matrix '" + text + "'");
    std::vector<std::vector<LaurentPoly>> rows;
    size_t pos = 1;
    while (pos < t.size() - 1) {
        if (t[pos] == ',') { pos++; continue; }
        if (t[pos] != '[')
            throw input_error("malformed matrix row in '" + text + "'");
        size_t close = t.find(']', pos);
        if (close == std::string::npos)
            throw input_error("unbalanced '[' in '" + text + "'");
        std::string row = t.substr(pos + 1, close - pos - 1);
        std::vector<LaurentPoly> vals;
        size_t start = 0, depth = 0;
        std::string cell;
        for (size_t i = 0; i <= row.size(); i++) {
            if (i == row.size() || (row[i] == ',' && depth == 0)) {
                cell = row.substr(start, i - start);
                if (!cell.empty()) vals.push_back(LaurentPoly::parse(ring, cell));
                start = i + 1;
            } else if (row[i] == '(') {
                depth++;
            } else if (row[i] == ')') {
                depth--;
            }
        }
        rows.push_back(std::move(vals));
        pos = close + 1;
    }
    if (rows.empty()) throw input_error("empty matrix '" + text + "'");
    size_t cols = rows[0].size();
    for (auto &r : rows)
        if (r.size() != cols) throw input_error("ragged matrix '" + text + "'");
    PolyMatrix m(ring, (int)rows.size(), (int)cols);
    for (int i = 0; i < m.rows; i++)
        for (int j = 0; j < m.cols; j++) m.at(i, j) = rows[i][j];
    return m;
}

/* ---- ConnMatrix ---- */

bool ConnMatrix::operator==(const ConnMatrix &o) const {
    return ring == o.ring && e == o.e && a == o.a;
}

bool ConnMatrix::is_zero() const {
    for (auto &f : a)
        if (!f.is_zero()) return false;
    return true;
}

ConnMatrix ConnMatrix::operator+(const ConnMatrix &o) const {
    if (e != o.e) throw input_error("connection matrix rank mismatch");
    ConnMatrix m(ring, e);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i] + o.a[i];
    return m;
}

ConnMatrix ConnMatrix::operator-(const ConnMatrix &o) const {
    if (e != o.e) throw input_error("connection matrix rank mismatch");
    ConnMatrix m(ring, e);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i] - o.a[i];
    return m;
}

ConnMatrix ConnMatrix::homogeneous_part(int degree) const {
    ConnMatrix m(ring, e);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i].homogeneous_part(degree);
    return m;
}

int ConnMatrix::lowest_euler_degree() const {
    int best = ring.trunc + 1;
    for (auto &f : a) best = std::min(best, f.lowest_euler_degree());
    return best;
}

ConnMatrix ConnMatrix::coerce(const RingSpec &target) const {
    ConnMatrix m(target, e);
    for (size_t i = 0; i < a.size(); i++) m.a[i] = a[i].coerce(target);
    return m;
}

std::string ConnMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < e; i++) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < e; j++) {
            if (j) os << ",";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

/* ---- operations ---- */

GaugeMatrix::GaugeMatrix(PolyMatrix m) : g(std::move(m)) {
    if (g.rows != g.cols) throw input_error("gauge matrix must be square");
    for (auto &f : g.a)
        if (!f.is_holomorphic())
            throw input_error("gauge matrix entries must be holomorphic");
    if (g.constant_part().rank() != g.rows)
        throw math_error("gauge-invertibility",
                         "gauge constant term is singular over Q(i)",
                         g.constant_part().str());
}

ConnMatrix ep_principal(const LogChart &C, const ResidueTuple &A) {
    const RingSpec &ring = C.ring();
    if ((int)A.size() != C.r())
        throw input_error("residue tuple length must equal the log count");
    H3Result h3 = check_H3(C);
    if (!h3.ok)
        throw math_error("poisson-hypersurface",
                         "log Hamiltonian X" + std::to_string(h3.li + 1) +
                             " is not tangent to the divisor",
                         h3.witness.str());
    int e = A.empty() ? 0 : A[0].rows();
    for (auto &m : A)
        if (m.rows() != e || m.cols() != e)
            throw input_error("residue matrices must share one square shape");
    ConnMatrix out(ring, e);
    for (int li = 0; li < C.r(); li++) {
        LogVecField X =
            LogVecField::from_polyvector(log_hamiltonian(C, li).field);
        for (int i = 0; i < e; i++)
            for (int j = 0; j < e; j++) {
                if (A[li].at(i, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + X * A[li].at(i, j);
            }
    }
    return out;
}

ConnMatrix delta_matrix(const LogChart &C, const PolyMatrix &g) {
    // the coordinate-frame intermediate carries one degree more than the
    // log-frame result, so give it headroom before coercing back
    RingSpec up = g.ring.with_trunc(g.ring.trunc + 1);
    ConnMatrix out(g.ring, g.rows);
    PoissonStructure P{C.P.sigma.coerce(up)};
    for (int i = 0; i < g.rows; i++)
        for (int j = 0; j < g.cols; j++) {
            Polyvector h =
                lichnerowicz(P, Polyvector::function(g.at(i, j).coerce(up)));
            out.at(i, j) = LogVecField::from_polyvector(h).coerce(g.ring);
        }
    return out;
}

std::vector<Polyvector> poisson_curvature(const LogChart &C,
                                          const ConnMatrix &Theta) {
    const RingSpec &ring = Theta.ring;
    PoissonStructure P{C.P.sigma.coerce(ring)};
    int e = Theta.e;
    std::vector<Polyvector> K(e * e, Polyvector(ring, 2));
    for (int i = 0; i < e; i++)
        for (int j = 0; j < e; j++) {
            Polyvector acc =
                lichnerowicz(P, Theta.at(i, j).to_polyvector());
            for (int c = 0; c < e; c++)
                acc = acc + Theta.at(i, c).to_polyvector().wedge(
                                Theta.at(c, j).to_polyvector());
            K[i * e + j] = acc;
        }
    return K;
}

bool curvature_is_zero(const std::vector<Polyvector> &K) {
    for (auto &k : K)
        if (!k.is_zero()) return false;
    return true;
}

ConnMatrix gauge_transform(const LogChart &C, const ConnMatrix &Theta,
                           const GaugeMatrix &gauge) {
    if (gauge.e() != Theta.e)
        throw input_error("gauge rank does not match the connection");
    const PolyMatrix &g = gauge.g;
    if (g.ring != Theta.ring)
        throw input_error("gauge and connection live in different rings");
    PolyMatrix ginv = g.series_inverse();
    ConnMatrix dg = delta_matrix(C, g);
    int e = Theta.e;
    ConnMatrix out(Theta.ring, e);
    // (delta g) g^{-1} + g Theta g^{-1}
    for (int i = 0; i < e; i++)
        for (int j = 0; j < e; j++) {
            LogVecField acc(Theta.ring);
            for (int c = 0; c < e; c++)
                acc = acc + dg.at(i, c) * ginv.at(c, j);
            for (int c = 0; c < e; c++)
                for (int d = 0; d < e; d++) {
                    LaurentPoly w = g.at(i, c) * ginv.at(d, j);
                    if (!w.is_zero()) acc = acc + Theta.at(c, d) * w;
                }
            out.at(i, j) = acc;
        }
    return out;
}

std::pair<ResidueTuple, ConnMatrix> extract_principal(const LogChart &C,
                                                      const ConnMatrix &Theta) {
    const RingSpec &ring = Theta.ring;
    int r = C.r(), e = Theta.e, n = ring.n;
    // columns: euler constants of the log Hamiltonians
    QiMatrix M(n, r);
    std::vector<LogVecField> X;
    for (int li = 0; li < r; li++) {
        X.push_back(LogVecField::from_polyvector(
            log_hamiltonian(C, li).field.coerce(ring)));
        QiMatrix col = X.back().euler_constant();
        for (int k = 0; k < n; k++) M.at(k, li) = col.at(k, 0);
    }
    if (M.rank() != r)
        throw math_error("generator-independence",
                         "log Hamiltonian constants are linearly dependent; "
                         "supply the principal split explicitly",
                         M.str());
    QiMatrix Mh = M.conj_transpose();
    QiMatrix gram_inv = (Mh * M).inverse();
    ResidueTuple A(r, QiMatrix(e, e));
    for (int i = 0; i < e; i++)
        for (int j = 0; j < e; j++) {
            QiMatrix c = Theta.at(i, j).euler_constant();
            QiMatrix coeffs = gram_inv * (Mh * c);
            for (int li = 0; li < r; li++) A[li].at(i, j) = coeffs.at(li, 0);
        }
    ConnMatrix V = Theta;
    for (int li = 0; li < r; li++)
        for (int i = 0; i < e; i++)
            for (int j = 0; j < e; j++) {
                if (A[li].at(i, j).is_zero()) continue;
                V.at(i, j) = V.at(i, j) - X[li] * A[li].at(i, j);
            }
    return {A, V};
}

std::vector<Polyvector> horizontal_defect(const LogChart &C,
                                          const ConnMatrix &Theta,
                                          const std::vector<LaurentPoly> &Y) {
    if ((int)Y.size() != Theta.e)
        throw input_error("section column length must equal the rank");
    const RingSpec &ring = Theta.ring;
    PoissonStructure P{C.P.sigma.coerce(ring)};
    std::vector<Polyvector> out;
    for (int i = 0; i < Theta.e; i++) {
        Polyvector acc = lichnerowicz(P, Polyvector::function(Y[i]));
        for (int j = 0; j < Theta.e; j++)
            acc = acc + (Theta.at(i, j) * Y[j]).to_polyvector();
        out.push_back(acc);
    }
    return out;
}

std::string residue_tuple_str(const ResidueTuple &A) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < A.size(); i++) {
        if (i) os << ";";
        os << A[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace logpois
