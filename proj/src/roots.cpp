#include "logpois/roots.hpp"
#include "logpois/errors.hpp"

#include <algorithm>

namespace logpois {

namespace {

struct Gi { // Gaussian integer
    mpz_class a, b;
    bool is_zero() const { return a == 0 && b == 0; }
    Gi operator*(const Gi &o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a};
    }
    Gi operator+(const Gi &o) const { return {a + o.a, b + o.b}; }
    Gi operator-(const Gi &o) const { return {a - o.a, b - o.b}; }
    mpz_class norm() const { return a * a + b * b; }
};

// exact division in Z[i]; nullopt when not divisible
std::optional<Gi> divide(const Gi &x, const Gi &d) {
    mpz_class n = d.norm();
    if (n == 0) return std::nullopt;
    mpz_class ra = x.a * d.a + x.b * d.b;
    mpz_class rb = x.b * d.a - x.a * d.b;
    if (ra % n != 0 || rb % n != 0) return std::nullopt;
    return Gi{ra / n, rb / n};
}

std::vector<std::pair<mpz_class, int>> factor_int(mpz_class n) {
    std::vector<std::pair<mpz_class, int>> out;
    for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        int e = 0;
        while (n % p == 0) { n /= p; e++; }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/* Gaussian prime(s) lying over a rational prime p. */
std::vector<Gi> gaussian_primes_over(const mpz_class &p) {
    if (p == 2) return {Gi{1, 1}};
    if (p % 4 == 3) return {Gi{p, 0}};
    for (mpz_class x = 1; x * x <= p; x++) {
        mpz_class y2 = p - x * x;
        mpz_class y = sqrt(y2);
        if (y * y == y2) return {Gi{x, y}, Gi{x, -y}};
    }
    throw input_error("failed to split prime over Z[i]"); // unreachable
}

/* All divisors of v in Z[i] up to unit, times the four units. */
std::vector<Gi> gaussian_divisors(const Gi &v) {
    std::vector<std::pair<Gi, int>> primes;
    Gi rest = v;
    for (auto &[p, e] : factor_int(v.norm())) {
        for (const Gi &pi : gaussian_primes_over(p)) {
            int mult = 0;
            while (true) {
                auto q = divide(rest, pi);
                if (!q) break;
                rest = *q;
                mult++;
            }
            if (mult) primes.emplace_back(pi, mult);
        }
    }
    std::vector<Gi> divisors{Gi{1, 0}};
    for (auto &[p, e] : primes) {
        std::vector<Gi> next;
        for (const Gi &d : divisors) {
            Gi acc = d;
            next.push_back(acc);
            for (int k = 1; k <= e; k++) {
                acc = acc * p;
                next.push_back(acc);
            }
        }
        divisors = std::move(next);
    }
    std::vector<Gi> all;
    static const Gi units[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const Gi &d : divisors)
        for (const Gi &u : units) all.push_back(d * u);
    return all;
}

Gi eval(const std::vector<Gi> &coeffs, const Gi &x) {
    Gi acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// divide monic poly by (t - root); root must be exact
std::vector<Gi> deflate(const std::vector<Gi> &coeffs, const Gi &root) {
    int deg = (int)coeffs.size() - 1;
    std::vector<Gi> q(deg);
    Gi carry = coeffs[deg];
    for (int k = deg - 1; k >= 0; k--) {
        q[k] = carry;
        carry = coeffs[k] + carry * root;
    }
    return q;
}

} // namespace

std::optional<std::vector<Scalar>>
gaussian_rational_roots(const std::vector<Scalar> &coeffs) {
    int deg = (int)coeffs.size() - 1;
    if (deg < 0 || !coeffs[deg].is_one())
        throw input_error("gaussian_rational_roots requires a monic polynomial");
    // substitute t = s/d so the polynomial becomes monic over Z[i]
    mpz_class d = 1;
    for (const Scalar &c : coeffs) {
        d = lcm(d, c.re().get_den());
        d = lcm(d, c.im().get_den());
    }
    std::vector<Gi> zi(deg + 1);
    mpz_class scale = 1; // d^(deg-k)
    for (int k = deg; k >= 0; k--) {
        mpq_class ra = coeffs[k].re() * scale;
        mpq_class ib = coeffs[k].im() * scale;
        zi[k] = Gi{ra.get_num() / ra.get_den(), ib.get_num() / ib.get_den()};
        scale *= d;
    }
    std::vector<Scalar> roots;
    std::vector<Gi> p = zi;
    while ((int)p.size() > 1) {
        // strip zero roots first
        if (p[0].is_zero()) {
            roots.emplace_back(0);
            p.erase(p.begin());
            continue;
        }
        bool found = false;
        for (const Gi &cand : gaussian_divisors(p[0])) {
            if (eval(p, cand).is_zero()) {
                mpq_class re(cand.a, d), im(cand.b, d);
                re.canonicalize();
                im.canonicalize();
                roots.emplace_back(re, im);
                p = deflate(p, cand);
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt; // irreducible factor outside Q(i)
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace logpois
