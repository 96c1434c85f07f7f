#include "logpois/ppd.hpp"
#include "logpois/errors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace logpois {

namespace {

std::string alpha_str(const MultiIndex &m) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < m.size(); i++) {
        if (i) os << ",";
        os << m[i];
    }
    os << ")";
    return os.str();
}

LogVecField hamiltonian_of_coordinate(const LogChart &C, const RingSpec &ring,
                                      int k) {
    PoissonStructure P{C.P.sigma.coerce(ring)};
    Polyvector X =
        lichnerowicz(P, Polyvector::function(LaurentPoly::coordinate(ring, k)));
    return LogVecField::from_polyvector(X);
}

} // namespace

void check_degree_filtration(const LogChart &C) {
    const RingSpec &ring = C.ring();
    for (int k = 0; k < ring.n; k++) {
        LogVecField X;
        try {
            X = hamiltonian_of_coordinate(C, ring, k);
        } catch (const math_error &e) {
            throw math_error("degree-filtration",
                             "delta(z" + std::to_string(k + 1) +
                                 ") is not divisor-tangent on this chart",
                             e.witness);
        }
        if (!X.is_zero() && X.lowest_euler_degree() < 1)
            throw math_error("degree-filtration",
                             "delta does not preserve the total-degree "
                             "filtration: delta(z" +
                                 std::to_string(k + 1) +
                                 ") drops below degree one",
                             X.str());
    }
}

QiMatrix weight_matrix(const LogChart &C) {
    const RingSpec &ring = C.ring();
    QiMatrix w(ring.n, ring.n);
    for (int k = 0; k < ring.n; k++) {
        LogVecField X = hamiltonian_of_coordinate(C, ring, k);
        MultiIndex ek(ring.n, 0);
        ek[k] = 1;
        // constant euler part of delta(z_k)/z_k
        for (int j = 0; j < ring.n; j++) w.at(k, j) = X.euler_coeff_at(j, ek);
    }
    return w;
}

ConnMatrix defect(const LogChart &C, const ConnMatrix &Theta,
                  const GaugeMatrix &H, const ConnMatrix &Theta0) {
    return gauge_transform(C, Theta, H) - Theta0;
}

namespace {

void enumerate_monomials(int n, int degree, MultiIndex &cur, int pos,
                         std::vector<MultiIndex> &out) {
    if (pos == n - 1) {
        cur[pos] = degree;
        out.push_back(cur);
        return;
    }
    for (int d = 0; d <= degree; d++) {
        cur[pos] = d;
        enumerate_monomials(n, degree - d, cur, pos + 1, out);
    }
}

std::vector<MultiIndex> monomials_of_degree(int n, int degree) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n, 0);
    enumerate_monomials(n, degree, cur, 0, out);
    return out;
}

/* operator matrix on flattened k (row-major k_{ab} at a*e+b) for one
 * monomial alpha: equations stacked per euler slot j */
QiMatrix operator_matrix(const MultiIndex &alpha, const QiMatrix &w0,
                         const ResidueTuple &A,
                         const std::vector<int> &log_coords, int e) {
    int n = w0.rows();
    QiMatrix M(n * e * e, e * e);
    for (int j = 0; j < n; j++) {
        Scalar s(0);
        for (int k = 0; k < n; k++)
            if (alpha[k] != 0) s += Scalar(alpha[k]) * w0.at(k, j);
        for (int a = 0; a < e; a++)
            for (int b = 0; b < e; b++) {
                int row = j * e * e + a * e + b;
                M.at(row, a * e + b) += s;
                for (size_t li = 0; li < A.size(); li++) {
                    const Scalar &c = w0.at(log_coords[li], j);
                    if (c.is_zero()) continue;
                    // + c * (k A_i)_{ab}: unknown k_{ad}
                    for (int d = 0; d < e; d++)
                        M.at(row, a * e + d) += c * A[li].at(d, b);
                    // - c * (A_i k)_{ab}: unknown k_{cb}
                    for (int cidx = 0; cidx < e; cidx++)
                        M.at(row, cidx * e + b) -= c * A[li].at(a, cidx);
                }
            }
    }
    return M;
}

} // namespace

PolyMatrix homological_solve(const LogChart &C, const ConnMatrix &Theta0,
                             const ResidueTuple &A, const SpectralData &S,
                             const ConnMatrix &R_N, int N,
                             std::vector<DenomRecord> *denominators,
                             unsigned order_seed) {
    const RingSpec &ring = R_N.ring;
    int e = R_N.e, n = ring.n;
    if (!R_N.is_zero() && (R_N.lowest_euler_degree() < N ||
                           R_N.homogeneous_part(N) != R_N))
        throw input_error("defect is not homogeneous of the stated degree");

    QiMatrix w0 = weight_matrix(C);
    std::vector<int> log_coords = ring.log_indices();

    // group the defect into per-monomial right-hand sides
    std::map<MultiIndex, QiMatrix> rhs; // alpha -> (n*e*e) x 1
    for (int a = 0; a < e; a++)
        for (int b = 0; b < e; b++)
            for (int j = 0; j < n; j++) {
                const LaurentPoly &f = R_N.at(a, b).comp[j];
                for (auto &[m, cval] : f.terms()) {
                    MultiIndex alpha = m;
                    if (!ring.log_at(j)) alpha[j] -= 1;
                    auto it = rhs.find(alpha);
                    if (it == rhs.end())
                        it = rhs.emplace(alpha, QiMatrix(n * e * e, 1)).first;
                    it->second.at(j * e * e + a * e + b, 0) += cval;
                }
            }

    std::vector<int> order(e * e);
    for (int i = 0; i < e * e; i++) order[i] = i;
    if (order_seed != 0) {
        std::mt19937 gen(order_seed);
        std::shuffle(order.begin(), order.end(), gen);
    }

    std::vector<QiMatrix> proj;
    for (int k = 0; k < (int)S.blocks.size(); k++) proj.push_back(S.projector(k));

    int r = (int)A.size();
    PolyMatrix K(ring, e, e);
    for (auto &[alpha, b] : rhs) {
        bool reachable = true;
        for (int k = 0; k < n; k++) reachable = reachable && alpha[k] >= 0;

        // spectral attribution: weight covectors of the block pairs the
        // defect actually touches at this monomial
        std::vector<DenomRecord> local;
        if (reachable) {
            for (int kap = 0; kap < (int)S.blocks.size(); kap++)
                for (int kp = 0; kp < (int)S.blocks.size(); kp++) {
                    bool hit = false;
                    for (int j = 0; j < n && !hit; j++) {
                        QiMatrix rho(e, e);
                        for (int a = 0; a < e; a++)
                            for (int bb = 0; bb < e; bb++)
                                rho.at(a, bb) = b.at(j * e * e + a * e + bb, 0);
                        if (rho.is_zero()) continue;
                        QiMatrix blk = proj[kap] * rho * proj[kp];
                        hit = !blk.is_zero();
                    }
                    if (!hit) continue;
                    DenomRecord rec;
                    rec.alpha = alpha;
                    rec.kappa = kap;
                    rec.kappa_prime = kp;
                    for (int li = 0; li < r; li++)
                        rec.weight.push_back(Scalar(alpha[log_coords[li]]) +
                                             S.blocks[kp].lambda[li] -
                                             S.blocks[kap].lambda[li]);
                    local.push_back(std::move(rec));
                }
        }

        std::optional<QiMatrix> sol;
        if (reachable) {
            QiMatrix M = operator_matrix(alpha, w0, A, log_coords, e);
            sol = M.solve(-b, &order);
        }
        if (!sol) {
            // a vanishing weight covector on a touched off-diagonal block
            // is a resonance hit; anything else is a flatness obstruction
            for (const DenomRecord &rec : local) {
                if (rec.kappa == rec.kappa_prime) continue;
                bool zero = true;
                for (const Scalar &x : rec.weight) zero = zero && x.is_zero();
                if (zero)
                    throw math_error(
                        "non-resonance",
                        "resonant denominator at degree " + std::to_string(N) +
                            ", monomial " + alpha_str(rec.alpha) + ", blocks " +
                            lambda_str(S.blocks[rec.kappa].lambda) + " vs " +
                            lambda_str(S.blocks[rec.kappa_prime].lambda),
                        alpha_str(rec.alpha));
            }
            throw math_error("flatness",
                             "homological equation inconsistent at degree " +
                                 std::to_string(N) + ", monomial " +
                                 alpha_str(alpha),
                             alpha_str(alpha));
        }
        for (int a = 0; a < e; a++)
            for (int bb = 0; bb < e; bb++) {
                const Scalar &v = sol->at(a * e + bb, 0);
                if (v.is_zero()) continue;
                K.at(a, bb) =
                    K.at(a, bb) + LaurentPoly::monomial(ring, alpha, v);
            }
        if (denominators)
            denominators->insert(denominators->end(), local.begin(),
                                 local.end());
    }
    if (denominators) {
        std::sort(denominators->begin(), denominators->end(),
                  [](const DenomRecord &x, const DenomRecord &y) {
                      if (x.alpha != y.alpha) return x.alpha < y.alpha;
                      if (x.kappa != y.kappa) return x.kappa < y.kappa;
                      return x.kappa_prime < y.kappa_prime;
                  });
    }
    return K;
}

NormalizationResult normalize(const LogChart &C, const ConnMatrix &Theta_in,
                              int T, unsigned order_seed,
                              const ResidueTuple *given_residues) {
    RingSpec ring = Theta_in.ring.with_trunc(T);
    ConnMatrix Theta = Theta_in.coerce(ring);
    LogChart Cw{PoissonStructure{C.P.sigma.coerce(ring)}, C.labels};

    check_degree_filtration(Cw);

    // flatness precondition: coefficients of the curvature must vanish
    // through total degree T-1 (top truncation degrees excepted)
    auto K = poisson_curvature(Cw, Theta);
    for (auto &entry : K)
        for (auto &[idx, f] : entry.components())
            if (f.truncate_at(T - 1) != LaurentPoly(ring))
                throw math_error("flatness",
                                 "the connection is not Poisson-flat",
                                 f.truncate_at(T - 1).str());

    ResidueTuple A;
    if (given_residues) {
        A = *given_residues;
        if ((int)A.size() != Cw.r())
            throw input_error("supplied residue tuple has the wrong length");
    } else {
        A = extract_principal(Cw, Theta).first;
    }
    CommuteResult comm = check_commuting(A);
    if (!comm.ok)
        throw math_error("commuting-residues",
                         "extracted residues " + std::to_string(comm.i + 1) +
                             " and " + std::to_string(comm.j + 1) +
                             " do not commute",
                         comm.witness.str());
    SpectralData S = joint_spectrum(A);
    if (auto w = check_nonresonance(S, NonresonanceMode::symmetric))
        throw math_error(
            "non-resonance",
            "residue spectrum is resonant: the eigenvalue difference " +
                lambda_str(w->alpha) + " between blocks " +
                lambda_str(S.blocks[w->kappa].lambda) + " and " +
                lambda_str(S.blocks[w->kappa_prime].lambda) +
                " is a nonzero non-negative integer vector",
            lambda_str(w->alpha));

    ConnMatrix Theta0 = ep_principal(Cw, A);
    NormalizationResult res;
    res.residues = A;
    res.spectrum = S;
    res.normal_form = Theta0;
    res.certificate.truncation = T;

    PolyMatrix H = PolyMatrix::identity(ring, Theta.e);
    for (int N = 1; N <= T; N++) {
        ConnMatrix R = defect(Cw, Theta, GaugeMatrix{H}, Theta0);
        if (R.is_zero()) break;
        if (R.lowest_euler_degree() < N)
            throw math_error("induction-invariant",
                             "defect carries terms below the current degree " +
                                 std::to_string(N),
                             R.str());
        ConnMatrix R_N = R.homogeneous_part(N);
        DegreeRecord rec;
        rec.degree = N;
        for (auto &f : R_N.a)
            for (auto &c : f.comp) rec.defect_terms += (int)c.terms().size();
        rec.correction = homological_solve(Cw, Theta0, A, S, R_N, N,
                                           &rec.denominators, order_seed);
        H = (PolyMatrix::identity(ring, Theta.e) + rec.correction) * H;
        res.certificate.degrees.push_back(std::move(rec));
    }
    ConnMatrix R_final = defect(Cw, Theta, GaugeMatrix{H}, Theta0);
    if (!R_final.is_zero())
        throw math_error("flatness",
                         "normalization left a nonzero defect within the "
                         "truncation order",
                         R_final.str());
    res.gauge = H;
    return res;
}

UniquenessResult verify_uniqueness(const LogChart &C, const ConnMatrix &Theta,
                                   const GaugeMatrix &H1, const GaugeMatrix &H2,
                                   const ResidueTuple &A, int T) {
    RingSpec ring = Theta.ring.with_trunc(T);
    ConnMatrix Th = Theta.coerce(ring);
    LogChart Cw{PoissonStructure{C.P.sigma.coerce(ring)}, C.labels};
    ConnMatrix Theta0 = ep_principal(Cw, A);
    GaugeMatrix G1{H1.g.coerce(ring)}, G2{H2.g.coerce(ring)};
    if (gauge_transform(Cw, Th, G1) != Theta0)
        throw math_error("gauge-normalizes",
                         "the first gauge does not send the connection to "
                         "the stated normal form");
    if (gauge_transform(Cw, Th, G2) != Theta0)
        throw math_error("gauge-normalizes",
                         "the second gauge does not send the connection to "
                         "the stated normal form");
    UniquenessResult out;
    out.G = G2.g * G1.g.series_inverse();
    PoissonStructure P{Cw.P.sigma};
    for (int i = 0; i < out.G.rows; i++)
        for (int j = 0; j < out.G.cols; j++) {
            if (!lichnerowicz(P, Polyvector::function(out.G.at(i, j))).is_zero()) {
                out.ok = false;
                out.failure = "entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") of H2 H1^-1 is not "
                              "Casimir";
                return out;
            }
        }
    CentralizerResult cz = centralizer_check(out.G, A);
    if (!cz.ok) {
        out.ok = false;
        out.failure = "H2 H1^-1 does not commute with residue " +
                      std::to_string(cz.i + 1);
    }
    return out;
}

std::vector<StabilizerElement> stabilizer_kernel(const LogChart &C,
                                                 const ResidueTuple &A,
                                                 const SpectralData &S, int N) {
    const RingSpec &ring = C.ring();
    int e = S.e;
    QiMatrix w0 = weight_matrix(C);
    std::vector<int> log_coords = ring.log_indices();
    std::vector<StabilizerElement> out;
    for (const MultiIndex &alpha : monomials_of_degree(ring.n, N)) {
        QiMatrix M = operator_matrix(alpha, w0, A, log_coords, e);
        for (const QiMatrix &v : M.kernel_basis()) {
            QiMatrix k(e, e);
            for (int a = 0; a < e; a++)
                for (int b = 0; b < e; b++) k.at(a, b) = v.at(a * e + b, 0);
            out.push_back({alpha, k});
        }
    }
    return out;
}

} // namespace logpois
