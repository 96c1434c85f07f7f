#include "logpois/spectral.hpp"
#include "logpois/errors.hpp"
#include "logpois/roots.hpp"

#include <algorithm>
#include <sstream>

namespace logpois {

QiMatrix SpectralData::basis_matrix() const {
    QiMatrix S(e, e);
    int col = 0;
    for (auto &b : blocks)
        for (auto &v : b.basis) {
            for (int i = 0; i < e; i++) S.at(i, col) = v.at(i, 0);
            col++;
        }
    if (col != e) throw input_error("spectral basis does not span");
    return S;
}

QiMatrix SpectralData::projector(int k) const {
    QiMatrix S = basis_matrix();
    QiMatrix Sinv = S.inverse();
    QiMatrix D(e, e);
    int col = 0;
    for (int b = 0; b < (int)blocks.size(); b++)
        for (size_t j = 0; j < blocks[b].basis.size(); j++, col++)
            if (b == k) D.at(col, col) = Scalar(1);
    return S * D * Sinv;
}

int SpectralData::block_of_basis_column(int col) const {
    int c = 0;
    for (int b = 0; b < (int)blocks.size(); b++) {
        c += (int)blocks[b].basis.size();
        if (col < c) return b;
    }
    throw input_error("basis column out of range");
}

CommuteResult check_commuting(const ResidueTuple &A) {
    for (size_t i = 0; i < A.size(); i++)
        for (size_t j = i + 1; j < A.size(); j++) {
            QiMatrix c = A[i].commutator(A[j]);
            if (!c.is_zero()) return {false, (int)i, (int)j, c};
        }
    return {};
}

namespace {

/* restriction of A to the column span of B (full column rank): the
 * unique R with A B = B R */
QiMatrix restrict_to(const QiMatrix &A, const QiMatrix &B) {
    auto R = B.solve(A * B);
    if (!R)
        throw input_error("subspace is not invariant"); // commuting guard
    return *R;
}

QiMatrix columns(const std::vector<QiMatrix> &cols, int e) {
    QiMatrix B(e, (int)cols.size());
    for (int j = 0; j < (int)cols.size(); j++)
        for (int i = 0; i < e; i++) B.at(i, j) = cols[j].at(i, 0);
    return B;
}

} // namespace

SpectralData joint_spectrum(const ResidueTuple &A) {
    CommuteResult comm = check_commuting(A);
    if (!comm.ok)
        throw math_error("commuting-residues",
                         "residue matrices " + std::to_string(comm.i + 1) +
                             " and " + std::to_string(comm.j + 1) +
                             " do not commute",
                         comm.witness.str());
    if (A.empty()) throw input_error("empty residue tuple");
    int e = A[0].rows();

    struct Part {
        std::vector<Scalar> lambda;
        QiMatrix basis; // e x d, full column rank
    };
    std::vector<Part> parts{{{}, QiMatrix::identity(e)}};
    for (const QiMatrix &Ai : A) {
        std::vector<Part> next;
        for (const Part &p : parts) {
            int d = p.basis.cols();
            QiMatrix R = restrict_to(Ai, p.basis);
            auto roots = gaussian_rational_roots(R.char_poly());
            if (!roots)
                throw math_error(
                    "rational-spectrum",
                    "an eigenvalue lies outside Q(i); supply data with "
                    "Gaussian-rational spectrum",
                    Ai.str());
            std::vector<Scalar> distinct;
            for (const Scalar &r : *roots)
                if (distinct.empty() || !(distinct.back() == r))
                    distinct.push_back(r);
            for (const Scalar &lam : distinct) {
                // generalized eigenspace of R inside the part
                QiMatrix shifted = R;
                for (int i = 0; i < d; i++) shifted.at(i, i) -= lam;
                QiMatrix power = QiMatrix::identity(d);
                for (int k = 0; k < d; k++) power = power * shifted;
                std::vector<QiMatrix> ker = power.kernel_basis();
                if (ker.empty()) continue;
                Part q;
                q.lambda = p.lambda;
                q.lambda.push_back(lam);
                q.basis = p.basis * columns(ker, d);
                next.push_back(std::move(q));
            }
        }
        parts = std::move(next);
    }

    // canonical block order: lexicographic on the eigenvalue tuples
    std::sort(parts.begin(), parts.end(), [](const Part &a, const Part &b) {
        return std::lexicographical_compare(a.lambda.begin(), a.lambda.end(),
                                            b.lambda.begin(), b.lambda.end());
    });

    SpectralData S;
    S.e = e;
    int total = 0;
    for (const Part &p : parts) {
        SpectralBlock blk;
        blk.lambda = p.lambda;
        for (int j = 0; j < p.basis.cols(); j++) {
            QiMatrix v(e, 1);
            for (int i = 0; i < e; i++) v.at(i, 0) = p.basis.at(i, j);
            blk.basis.push_back(v);
        }
        // nilpotency index of (A_i - lambda_i) on the block
        int bound = 1;
        for (size_t i = 0; i < A.size(); i++) {
            QiMatrix shifted = A[i];
            for (int k = 0; k < e; k++) shifted.at(k, k) -= blk.lambda[i];
            QiMatrix cur = p.basis;
            int idx = 0;
            while (!cur.is_zero()) {
                cur = shifted * cur;
                idx++;
                if (idx > e + 1) throw input_error("nilpotency runaway");
            }
            bound = std::max(bound, idx);
        }
        blk.nilpotency_bound = bound;
        total += (int)blk.basis.size();
        S.blocks.push_back(std::move(blk));
    }
    if (total != e)
        throw input_error("joint decomposition does not span"); // cannot happen
    return S;
}

std::optional<ResonanceWitness> check_nonresonance(const SpectralData &S,
                                                   NonresonanceMode) {
    int r = S.blocks.empty() ? 0 : (int)S.blocks[0].lambda.size();
    for (int k = 0; k < (int)S.blocks.size(); k++)
        for (int kp = 0; kp < (int)S.blocks.size(); kp++) {
            if (k == kp) continue;
            std::vector<Scalar> diff(r);
            bool nonneg_int = true, nonzero = false;
            for (int i = 0; i < r; i++) {
                diff[i] = S.blocks[k].lambda[i] - S.blocks[kp].lambda[i];
                nonneg_int = nonneg_int && diff[i].is_nonneg_integer();
                nonzero = nonzero || !diff[i].is_zero();
            }
            if (nonneg_int && nonzero) return ResonanceWitness{k, kp, diff};
        }
    return std::nullopt;
}

CentralizerResult centralizer_check(const QiMatrix &G, const ResidueTuple &A) {
    for (size_t i = 0; i < A.size(); i++)
        if (!(G * A[i] - A[i] * G).is_zero()) return {false, (int)i};
    return {};
}

CentralizerResult centralizer_check(const PolyMatrix &G, const ResidueTuple &A) {
    for (size_t i = 0; i < A.size(); i++) {
        PolyMatrix Ac = PolyMatrix::constant(G.ring, A[i]);
        if (!(G * Ac - Ac * G).is_zero()) return {false, (int)i};
    }
    return {};
}

std::string lambda_str(const std::vector<Scalar> &lambda) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < lambda.size(); i++) {
        if (i) os << ",";
        os << lambda[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace logpois
