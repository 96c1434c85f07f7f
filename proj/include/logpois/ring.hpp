#ifndef LOGPOIS_RING_HPP
#define LOGPOIS_RING_HPP

#include <numeric>
#include <vector>

namespace logpois {

/* Exponent vector of one monomial. Lexicographic vector order is the
 * canonical term order used everywhere (reports are byte-exact). */
using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex &m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

/* Ambient ring parameters shared by all values of one computation:
 * n coordinates, a marked subset of "log" coordinates (the branches of
 * the divisor), a total-degree truncation bound and the admissible pole
 * depth on log coordinates. */
struct RingSpec {
    int n = 0;
    std::vector<char> is_log; // size n
    int trunc = 0;
    int pole_bound = 1;

    RingSpec() = default;
    RingSpec(int n_, std::vector<int> log_indices, int trunc_, int pole_bound_ = 1)
        : n(n_), is_log(n_, 0), trunc(trunc_), pole_bound(pole_bound_) {
        for (int k : log_indices) is_log.at(k) = 1;
    }

    int r() const {
        int c = 0;
        for (char b : is_log) c += b != 0;
        return c;
    }
    std::vector<int> log_indices() const {
        std::vector<int> out;
        for (int k = 0; k < n; k++)
            if (is_log[k]) out.push_back(k);
        return out;
    }
    bool log_at(int k) const { return is_log[k] != 0; }

    bool operator==(const RingSpec &o) const {
        return n == o.n && is_log == o.is_log && trunc == o.trunc &&
               pole_bound == o.pole_bound;
    }
    bool operator!=(const RingSpec &o) const { return !(*this == o); }

    /* same variables and divisor, possibly different trunc/pole budget */
    bool same_chart(const RingSpec &o) const {
        return n == o.n && is_log == o.is_log;
    }

    RingSpec with_trunc(int t) const {
        RingSpec s = *this;
        s.trunc = t;
        return s;
    }
    RingSpec with_pole_bound(int k) const {
        RingSpec s = *this;
        s.pole_bound = k;
        return s;
    }
};

} // namespace logpois

#endif
