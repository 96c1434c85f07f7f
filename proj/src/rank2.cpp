#include "logpois/rank2.hpp"
#include "logpois/errors.hpp"

#include <functional>
#include <tuple>

namespace logpois {

MCResult mc_check(const PoissonStructure &P, const PoissonTriple &t) {
    MCResult res;
    auto lie = [&](const Polyvector &x) {
        return P.sigma.lie_derivative_along(x);
    };
    Polyvector ru = lie(t.u) + t.u.wedge(t.v) * Scalar(2);
    Polyvector rv = lie(t.v) - t.u.wedge(t.w);
    Polyvector rw = lie(t.w) + t.v.wedge(t.w) * Scalar(2);
    if (!ru.is_zero()) res.violations.push_back({"u", ru});
    if (!rv.is_zero()) res.violations.push_back({"v", rv});
    if (!rw.is_zero()) res.violations.push_back({"w", rw});
    res.flat = res.violations.empty();
    return res;
}

ConnMatrix triple_to_theta(const LogChart &C, const PoissonTriple &t) {
    const RingSpec &ring = t.u.ring();
    ConnMatrix theta(ring, 2);
    theta.at(0, 0) = LogVecField::from_polyvector(t.v);
    theta.at(0, 1) = LogVecField::from_polyvector(t.u);
    theta.at(1, 0) = LogVecField::from_polyvector(t.w);
    theta.at(1, 1) = LogVecField::from_polyvector(-t.v);
    bool flat_mc = mc_check(C.P, t).flat;
    bool flat_curv = curvature_is_zero(poisson_curvature(C, theta));
    if (flat_mc != flat_curv)
        throw std::logic_error("sl2 system and curvature disagree");
    return theta;
}

namespace {

/* component k of v depends only on z_k */
bool separated(const Polyvector &v) {
    const RingSpec &ring = v.ring();
    for (auto &[idx, f] : v.components())
        for (auto &[m, c] : f.terms())
            for (int k = 0; k < ring.n; k++)
                if (k != idx[0] && m[k] != 0) return false;
    return true;
}

} // namespace

CriterionResult coord_criterion_check(const PoissonStructure &P,
                                      const Polyvector &v) {
    if (v.grade() != 1) throw input_error("criterion expects a vector field");
    if (!separated(v))
        throw input_error("criterion requires v^k depending only on z_k");
    const RingSpec &ring = P.ring();
    CriterionResult res;
    for (int i = 0; i < ring.n; i++)
        for (int j = i + 1; j < ring.n; j++) {
            LaurentPoly sij = P.sigma.component({i, j});
            LaurentPoly lhs(ring);
            for (int k = 0; k < ring.n; k++)
                lhs = lhs + v.component({k}) * sij.derivative(k);
            LaurentPoly rhs = (v.component({i}).derivative(i) +
                               v.component({j}).derivative(j)) *
                              sij;
            if (lhs != rhs) res.fails.emplace_back(i, j);
        }
    res.ok = res.fails.empty();
    bool poisson = P.sigma.lie_derivative_along(v).is_zero();
    if (poisson != res.ok)
        throw std::logic_error("criterion and Lie derivative disagree");
    return res;
}

LuUwResult lu_uw_check(const PoissonStructure &P, const Polyvector &u,
                       const Polyvector &v) {
    const RingSpec &ring = P.ring();
    auto c = log_canonical_coefficients(P);
    if (!c)
        throw input_error("lu_uw_check requires a diagonal quadratic structure");
    // u constant, v diagonal linear
    std::vector<Scalar> cu(ring.n), bv(ring.n);
    for (int k = 0; k < ring.n; k++) {
        LaurentPoly uk = u.component({k});
        if (!uk.is_constant())
            throw input_error("u must be a constant vector field");
        cu[k] = uk.constant_term();
        LaurentPoly vk = v.component({k});
        MultiIndex ek(ring.n, 0);
        ek[k] = 1;
        LaurentPoly lin = LaurentPoly::monomial(ring, ek, vk.coeff(ek));
        if (vk != lin)
            throw input_error("v must be a diagonal linear vector field");
        bv[k] = vk.coeff(ek);
    }
    LuUwResult res;
    for (int i = 0; i < ring.n; i++)
        for (int j = i + 1; j < ring.n; j++) {
            Scalar cij = c->at(i, j);
            if (!(cu[i] * (cij - bv[j])).is_zero())
                res.fails.push_back({i, j, 1});
            if (!(cu[j] * (cij + bv[i])).is_zero())
                res.fails.push_back({i, j, 2});
        }
    res.ok = res.fails.empty();
    bool direct = (P.sigma.lie_derivative_along(u) - u.wedge(v)).is_zero();
    if (direct != res.ok)
        throw std::logic_error("lu_uw conditions and Lie derivative disagree");
    return res;
}

L1111Params::L1111Params(std::array<Scalar, 4> a_) : a(std::move(a_)) {
    Scalar sum(0);
    for (const Scalar &x : a) sum += x;
    if (!sum.is_zero())
        throw input_error("family parameters must sum to zero");
    for (const Scalar &x : a)
        if (!x.is_real())
            throw input_error("family parameters must be real rationals");
}

QiMatrix l1111_coefficients(const L1111Params &p) {
    const auto &a = p.a;
    QiMatrix c(4, 4);
    auto set = [&](int i, int j, Scalar v) {
        c.at(i, j) = v;
        c.at(j, i) = -v;
    };
    set(0, 1, a[3] - a[2]);
    set(0, 2, a[1] - a[3]);
    set(0, 3, a[2] - a[1]);
    set(1, 2, a[3] - a[0]);
    set(1, 3, a[0] - a[2]);
    set(2, 3, a[1] - a[0]);
    return c;
}

LogChart l1111_structure(const L1111Params &p, int trunc,
                         std::vector<int> log_coords, int pole_bound) {
    RingSpec ring(4, std::move(log_coords), trunc, pole_bound);
    return LogChart{log_canonical_structure(ring, l1111_coefficients(p))};
}

XiCheckResult xi_closed_check(const LogChart &C) {
    const RingSpec &ring = C.ring();
    auto c = log_canonical_coefficients(C.P);
    if (!c)
        throw input_error("closed formula applies to log-canonical structures");
    for (int li = 0; li < C.r(); li++) {
        int i = C.log_coord(li);
        Polyvector closed(ring, 1);
        for (int j = 0; j < ring.n; j++) {
            if (c->at(i, j).is_zero()) continue;
            MultiIndex ej(ring.n, 0);
            ej[j] = 1;
            closed.add_term({j},
                            LaurentPoly::monomial(ring, ej, c->at(i, j)));
        }
        Polyvector anchored = log_hamiltonian(C, li).field;
        if (anchored != closed) return {false, li, anchored, closed};
    }
    return {};
}

std::optional<Polyvector> search_w(const PoissonStructure &P,
                                   const Polyvector &u, const Polyvector &v,
                                   int max_deg) {
    const RingSpec &ring = P.ring();
    // unknown basis: (component k, monomial of degree <= max_deg)
    std::vector<MultiIndex> monomials;
    std::function<void(MultiIndex &, int, int)> rec = [&](MultiIndex &cur,
                                                          int pos, int left) {
        if (pos == ring.n - 1) {
            cur[pos] = left;
            monomials.push_back(cur);
            return;
        }
        for (int q = 0; q <= left; q++) {
            cur[pos] = q;
            rec(cur, pos + 1, left - q);
        }
    };
    for (int d = 0; d <= max_deg; d++) {
        MultiIndex cur(ring.n, 0);
        rec(cur, 0, d);
    }
    std::vector<std::pair<int, MultiIndex>> unknowns;
    for (int k = 0; k < ring.n; k++)
        for (const MultiIndex &m : monomials) unknowns.emplace_back(k, m);

    // residuals are grade-2 polyvectors; index their coefficients
    auto flatten = [&](const Polyvector &p1, const Polyvector &p2,
                       std::map<std::tuple<int, std::vector<int>, MultiIndex>,
                                Scalar> &out) {
        const Polyvector *ps[2] = {&p1, &p2};
        for (int which = 0; which < 2; which++)
            for (auto &[idx, f] : ps[which]->components())
                for (auto &[m, cval] : f.terms())
                    out[{which, idx, m}] = cval;
    };

    // equations: L_w sigma + 2 v^w = 0 and u^w = L_v sigma
    Polyvector target = P.sigma.lie_derivative_along(v);
    std::map<std::tuple<int, std::vector<int>, MultiIndex>, Scalar> rhs_map;
    flatten(Polyvector(ring, 2), target, rhs_map);

    // assemble columns
    std::vector<std::map<std::tuple<int, std::vector<int>, MultiIndex>, Scalar>>
        cols;
    for (auto &[k, m] : unknowns) {
        Polyvector wk(ring, 1);
        wk.add_term({k}, LaurentPoly::monomial(ring, m, Scalar(1)));
        Polyvector r1 =
            P.sigma.lie_derivative_along(wk) + v.wedge(wk) * Scalar(2);
        Polyvector r2 = u.wedge(wk);
        cols.emplace_back();
        flatten(r1, r2, cols.back());
    }
    // collect the full row index set
    std::map<std::tuple<int, std::vector<int>, MultiIndex>, int> row_of;
    auto touch = [&](const auto &mp) {
        for (auto &[key, val] : mp)
            if (!row_of.count(key)) {
                int next = (int)row_of.size();
                row_of[key] = next;
            }
    };
    touch(rhs_map);
    for (auto &c : cols) touch(c);

    QiMatrix M((int)row_of.size(), (int)unknowns.size());
    QiMatrix b((int)row_of.size(), 1);
    for (auto &[key, row] : row_of) {
        auto it = rhs_map.find(key);
        if (it != rhs_map.end()) b.at(row, 0) = it->second;
    }
    for (int col = 0; col < (int)cols.size(); col++)
        for (auto &[key, val] : cols[col]) M.at(row_of[key], col) = val;

    auto sol = M.solve(b);
    if (!sol) return std::nullopt;
    Polyvector w(ring, 1);
    for (int col = 0; col < (int)unknowns.size(); col++) {
        const Scalar &cval = sol->at(col, 0);
        if (cval.is_zero()) continue;
        w.add_term({unknowns[col].first},
                   LaurentPoly::monomial(ring, unknowns[col].second, cval));
    }
    return w;
}

} // namespace logpois
