#include "logpois/laurent.hpp"
#include "logpois/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logpois {

const char *holomorphy_name(HolomorphyClass c) {
    switch (c) {
    case HolomorphyClass::holomorphic: return "holomorphic";
    case HolomorphyClass::logarithmic_only: return "logarithmic_only";
    default: return "genuine_pole";
    }
}

LaurentPoly::LaurentPoly(RingSpec ring, const Scalar &constant)
    : ring_(std::move(ring)) {
    if (!constant.is_zero() && ring_.trunc >= 0)
        terms_.emplace(MultiIndex(ring_.n, 0), constant);
}

LaurentPoly LaurentPoly::monomial(const RingSpec &ring, const MultiIndex &m,
                                  const Scalar &coeff) {
    LaurentPoly p(ring);
    if ((int)m.size() != ring.n)
        throw input_error("monomial exponent vector has wrong length");
    p.insert_term(m, coeff);
    return p;
}

LaurentPoly LaurentPoly::coordinate(const RingSpec &ring, int k) {
    MultiIndex m(ring.n, 0);
    m.at(k) = 1;
    return monomial(ring, m, Scalar(1));
}

void LaurentPoly::insert_term(const MultiIndex &m, const Scalar &c) {
    if (c.is_zero()) return;
    if (total_degree(m) > ring_.trunc) return; // truncated-ring semantics
    for (int k = 0; k < ring_.n; k++) {
        if (m[k] >= 0) continue;
        if (!ring_.log_at(k) || m[k] < -ring_.pole_bound)
            throw math_error("pole-budget",
                             "exponent " + std::to_string(m[k]) +
                                 " on coordinate z" + std::to_string(k + 1) +
                                 " exceeds the admissible pole depth");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly &o, const char *op) const {
    if (ring_ != o.ring_)
        throw input_error(std::string("incompatible ring parameters in ") + op);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           *std::min_element(terms_.begin()->first.begin(),
                             terms_.begin()->first.end()) == 0;
}

Scalar LaurentPoly::constant_term() const {
    return coeff(MultiIndex(ring_.n, 0));
}

Scalar LaurentPoly::coeff(const MultiIndex &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int LaurentPoly::lowest_degree() const {
    int best = ring_.trunc + 1;
    for (auto &[m, c] : terms_) best = std::min(best, total_degree(m));
    return best;
}

int LaurentPoly::highest_degree() const {
    int best = ring_.trunc;
    bool first = true;
    for (auto &[m, c] : terms_) {
        int d = total_degree(m);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly &o) const {
    check_compatible(o, "add");
    LaurentPoly out = *this;
    for (auto &[m, c] : o.terms_) out.insert_term(m, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly &o) const {
    check_compatible(o, "sub");
    LaurentPoly out = *this;
    for (auto &[m, c] : o.terms_) out.insert_term(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(ring_);
    for (auto &[m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly &o) const {
    check_compatible(o, "mul");
    LaurentPoly out(ring_);
    MultiIndex m(ring_.n);
    for (auto &[ma, ca] : terms_) {
        for (auto &[mb, cb] : o.terms_) {
            for (int k = 0; k < ring_.n; k++) m[k] = ma[k] + mb[k];
            out.insert_term(m, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const Scalar &c) const {
    LaurentPoly out(ring_);
    if (c.is_zero()) return out;
    for (auto &[m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

LaurentPoly LaurentPoly::shift(const MultiIndex &s) const {
    LaurentPoly out(ring_);
    MultiIndex m(ring_.n);
    for (auto &[ma, ca] : terms_) {
        for (int k = 0; k < ring_.n; k++) m[k] = ma[k] + s[k];
        out.insert_term(m, ca);
    }
    return out;
}

LaurentPoly LaurentPoly::derivative(int k) const {
    LaurentPoly out(ring_);
    for (auto &[m, c] : terms_) {
        if (m[k] == 0) continue;
        MultiIndex d = m;
        d[k] -= 1;
        out.insert_term(d, c * Scalar(m[k]));
    }
    return out;
}

bool LaurentPoly::divisible_by_coordinate(int k) const {
    for (auto &[m, c] : terms_)
        if (m[k] < 1) return false;
    return true;
}

LaurentPoly LaurentPoly::divide_by_coordinate(int k) const {
    if (!divisible_by_coordinate(k))
        throw math_error("divisor-tangency",
                         "coefficient not divisible by z" + std::to_string(k + 1),
                         str());
    MultiIndex s(ring_.n, 0);
    s[k] = -1;
    return shift(s);
}

LaurentPoly LaurentPoly::restrict_coordinate_zero(int k) const {
    LaurentPoly out(ring_);
    for (auto &[m, c] : terms_) {
        if (m[k] < 0)
            throw math_error("pole-budget",
                             "restriction of a pole to {z" +
                                 std::to_string(k + 1) + "=0}");
        if (m[k] == 0) out.terms_.emplace(m, c);
    }
    return out;
}

LaurentPoly LaurentPoly::homogeneous_part(int degree) const {
    LaurentPoly out(ring_);
    for (auto &[m, c] : terms_)
        if (total_degree(m) == degree) out.terms_.emplace(m, c);
    return out;
}

LaurentPoly LaurentPoly::truncate_at(int degree) const {
    LaurentPoly out(ring_);
    for (auto &[m, c] : terms_)
        if (total_degree(m) <= degree) out.terms_.emplace(m, c);
    return out;
}

LaurentPoly LaurentPoly::coerce(const RingSpec &target) const {
    if (!ring_.same_chart(target))
        throw input_error("coercion across different charts");
    LaurentPoly out(target);
    for (auto &[m, c] : terms_) out.insert_term(m, c);
    return out;
}

HolomorphyClass LaurentPoly::classify(const std::vector<int> &allowance) const {
    bool holo = true;
    for (auto &[m, c] : terms_) {
        for (int k = 0; k < ring_.n; k++) {
            if (m[k] >= 0) continue;
            holo = false;
            int allowed = k < (int)allowance.size() ? allowance[k] : 0;
            if (m[k] < allowed) return HolomorphyClass::genuine_pole;
        }
    }
    return holo ? HolomorphyClass::holomorphic
                : HolomorphyClass::logarithmic_only;
}

bool LaurentPoly::is_holomorphic() const {
    return classify(std::vector<int>(ring_.n, 0)) == HolomorphyClass::holomorphic;
}

Scalar LaurentPoly::eval(const std::vector<Scalar> &point) const {
    if ((int)point.size() != ring_.n)
        throw input_error("evaluation point has wrong dimension");
    Scalar out(0);
    for (auto &[m, c] : terms_) {
        Scalar t = c;
        for (int k = 0; k < ring_.n; k++) {
            if (m[k] == 0) continue;
            if (point[k].is_zero() && m[k] < 0)
                throw math_error("pole-budget", "evaluation at a pole of z" +
                                                    std::to_string(k + 1));
            Scalar p(1);
            for (int j = 0; j < std::abs(m[k]); j++) p *= point[k];
            t = m[k] > 0 ? t * p : t / p;
        }
        out += t;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[m, c] : terms_) {
        std::string cs;
        bool fold_minus = false;
        if (c.is_real()) {
            if (c.re() < 0) {
                fold_minus = true;
                cs = rational_str(mpq_class(-c.re()));
            } else {
                cs = rational_str(c.re());
            }
        } else {
            cs = "(" + c.str() + ")";
        }
        if (!first)
            os << (fold_minus ? "-" : "+");
        else if (fold_minus)
            os << "-";
        first = false;
        os << cs;
        for (int k = 0; k < ring_.n; k++) {
            if (m[k] == 0) continue;
            os << "*z" << (k + 1);
            if (m[k] != 1) os << "^" << m[k];
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string &t;
    size_t pos = 0;
    bool done() const { return pos >= t.size(); }
    char peek() const { return t[pos]; }
};

Scalar take_coeff(Cursor &c) {
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        sign = c.peek() == '-' ? -1 : 1;
        c.pos++;
    }
    if (!c.done() && c.peek() == '(') {
        size_t close = c.t.find(')', c.pos);
        if (close == std::string::npos)
            throw input_error("unbalanced '(' in polynomial '" + c.t + "'");
        Scalar s = Scalar::parse(c.t.substr(c.pos + 1, close - c.pos - 1));
        c.pos = close + 1;
        return sign < 0 ? -s : s;
    }
    size_t end = c.pos;
    while (end < c.t.size() &&
           (std::isdigit((unsigned char)c.t[end]) || c.t[end] == '/'))
        end++;
    // no digits: a lone sign attached to a bare monomial
    if (end == c.pos) return Scalar(sign);
    if (end < c.t.size() && (c.t[end] == '.' || c.t[end] == 'e'))
        throw input_error("floating-point literal rejected: '" + c.t + "'");
    std::string lit = c.t.substr(c.pos, end - c.pos);
    c.pos = end;
    Scalar s = Scalar::parse(lit);
    return sign < 0 ? -s : s;
}

int take_int(Cursor &c) {
    size_t end = c.pos;
    if (end < c.t.size() && c.t[end] == '-') end++;
    while (end < c.t.size() && std::isdigit((unsigned char)c.t[end])) end++;
    if (end == c.pos) throw input_error("expected integer in '" + c.t + "'");
    int v = std::stoi(c.t.substr(c.pos, end - c.pos));
    c.pos = end;
    return v;
}

} // namespace

LaurentPoly LaurentPoly::parse(const RingSpec &ring, const std::string &text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) t += ch;
    if (t.empty()) throw input_error("empty polynomial literal");
    if (t == "0") return LaurentPoly(ring);
    Cursor c{t};
    LaurentPoly out(ring);
    while (!c.done()) {
        Scalar coeff = take_coeff(c);
        MultiIndex m(ring.n, 0);
        bool want_var = !c.done() && c.peek() == '*';
        while (want_var) {
            c.pos++; // '*'
            if (c.done() || c.peek() != 'z')
                throw input_error("expected coordinate after '*' in '" + t + "'");
            c.pos++;
            int idx = take_int(c);
            if (idx < 1 || idx > ring.n)
                throw input_error("coordinate z" + std::to_string(idx) +
                                  " out of range in '" + t + "'");
            int e = 1;
            if (!c.done() && c.peek() == '^') {
                c.pos++;
                e = take_int(c);
            }
            m[idx - 1] += e;
            want_var = !c.done() && c.peek() == '*';
        }
        // bare monomial without explicit coefficient: "z1^2"
        if (!c.done() && c.peek() == 'z') {
            c.pos++;
            int idx = take_int(c);
            if (idx < 1 || idx > ring.n)
                throw input_error("coordinate z" + std::to_string(idx) +
                                  " out of range in '" + t + "'");
            int e = 1;
            if (!c.done() && c.peek() == '^') {
                c.pos++;
                e = take_int(c);
            }
            m[idx - 1] += e;
            while (!c.done() && c.peek() == '*') {
                c.pos++;
                if (c.done() || c.peek() != 'z')
                    throw input_error("expected coordinate after '*' in '" + t + "'");
                c.pos++;
                int idx2 = take_int(c);
                if (idx2 < 1 || idx2 > ring.n)
                    throw input_error("coordinate out of range in '" + t + "'");
                int e2 = 1;
                if (!c.done() && c.peek() == '^') {
                    c.pos++;
                    e2 = take_int(c);
                }
                m[idx2 - 1] += e2;
            }
        }
        out.insert_term(m, coeff);
        if (!c.done() && c.peek() != '+' && c.peek() != '-')
            throw input_error("unexpected character '" + std::string(1, c.peek()) +
                              "' in polynomial '" + t + "'");
    }
    return out;
}

} // namespace logpois
