#include "logpois/polyvector.hpp"
#include "logpois/errors.hpp"

#include <algorithm>
#include <sstream>

namespace logpois {

namespace {

/* sort indices, return permutation sign; 0 when a repeat occurs */
int sort_sign(std::vector<int> &idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); i++)
        for (size_t j = i; j > 0 && idx[j] < idx[j - 1]; j--) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    for (size_t i = 1; i < idx.size(); i++)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

} // namespace

Polyvector Polyvector::function(const LaurentPoly &f) {
    Polyvector p(f.ring(), 0);
    if (!f.is_zero()) p.comps_.emplace(std::vector<int>{}, f);
    return p;
}

Polyvector Polyvector::basis_field(const RingSpec &ring, int k) {
    Polyvector p(ring, 1);
    p.comps_.emplace(std::vector<int>{k}, LaurentPoly(ring, Scalar(1)));
    return p;
}

bool Polyvector::is_zero() const {
    for (auto &[i, f] : comps_)
        if (!f.is_zero()) return false;
    return true;
}

void Polyvector::add_term(std::vector<int> indices, const LaurentPoly &coeff) {
    if ((int)indices.size() != grade_)
        throw input_error("polyvector term has wrong grade");
    for (int k : indices)
        if (k < 0 || k >= ring_.n)
            throw input_error("polyvector index out of range");
    int sign = sort_sign(indices);
    if (sign == 0 || coeff.is_zero()) return;
    LaurentPoly add = sign == 1 ? coeff : -coeff;
    auto it = comps_.find(indices);
    if (it == comps_.end()) {
        comps_.emplace(std::move(indices), add);
    } else {
        it->second = it->second + add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

LaurentPoly Polyvector::component(const std::vector<int> &idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? LaurentPoly(ring_) : it->second;
}

void Polyvector::prune() {
    for (auto it = comps_.begin(); it != comps_.end();)
        it = it->second.is_zero() ? comps_.erase(it) : std::next(it);
}

Polyvector Polyvector::operator+(const Polyvector &o) const {
    if (ring_ != o.ring_ || grade_ != o.grade_)
        throw input_error("polyvector mismatch in add");
    Polyvector out = *this;
    for (auto &[i, f] : o.comps_) {
        auto it = out.comps_.find(i);
        if (it == out.comps_.end())
            out.comps_.emplace(i, f);
        else
            it->second = it->second + f;
    }
    out.prune();
    return out;
}

Polyvector Polyvector::operator-(const Polyvector &o) const { return *this + (-o); }

Polyvector Polyvector::operator-() const {
    Polyvector out(ring_, grade_);
    for (auto &[i, f] : comps_) out.comps_.emplace(i, -f);
    return out;
}

Polyvector Polyvector::operator*(const Scalar &c) const {
    Polyvector out(ring_, grade_);
    if (c.is_zero()) return out;
    for (auto &[i, f] : comps_) out.comps_.emplace(i, f * c);
    return out;
}

Polyvector Polyvector::operator*(const LaurentPoly &f) const {
    Polyvector out(ring_, grade_);
    for (auto &[i, g] : comps_) {
        LaurentPoly p = g * f;
        if (!p.is_zero()) out.comps_.emplace(i, p);
    }
    return out;
}

bool Polyvector::operator==(const Polyvector &o) const {
    return ring_ == o.ring_ && grade_ == o.grade_ && comps_ == o.comps_;
}

Polyvector Polyvector::wedge(const Polyvector &o) const {
    if (ring_ != o.ring_) throw input_error("polyvector mismatch in wedge");
    Polyvector out(ring_, grade_ + o.grade_);
    if (grade_ + o.grade_ > ring_.n) return out; // zero, not an error
    for (auto &[ia, fa] : comps_)
        for (auto &[ib, fb] : o.comps_) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add_term(std::move(idx), fa * fb);
        }
    return out;
}

LaurentPoly Polyvector::apply(const LaurentPoly &f) const {
    if (grade_ != 1) throw input_error("apply requires a grade-1 field");
    LaurentPoly out(ring_);
    for (auto &[i, g] : comps_) out = out + g * f.derivative(i[0]);
    return out;
}

Polyvector Polyvector::lie_bracket(const Polyvector &w) const {
    if (grade_ != 1 || w.grade_ != 1)
        throw input_error("lie_bracket requires grade-1 fields");
    Polyvector out(ring_, 1);
    for (int k = 0; k < ring_.n; k++) {
        LaurentPoly c = apply(w.component({k})) - w.apply(component({k}));
        if (!c.is_zero()) out.add_term({k}, c);
    }
    return out;
}

Polyvector Polyvector::lie_derivative_along(const Polyvector &v) const {
    if (v.grade() != 1)
        throw input_error("lie derivative direction must be grade 1");
    // L_v(f dI) = v(f) dI - sum over slots: f (d_a v^k) with a replaced by k
    Polyvector out(ring_, grade_);
    for (auto &[idx, f] : comps_) {
        out.add_term(idx, v.apply(f));
        for (size_t slot = 0; slot < idx.size(); slot++) {
            int a = idx[slot];
            for (int k = 0; k < ring_.n; k++) {
                LaurentPoly dv = v.component({k}).derivative(a);
                if (dv.is_zero()) continue;
                std::vector<int> jdx = idx;
                jdx[slot] = k;
                out.add_term(std::move(jdx), -(f * dv));
            }
        }
    }
    return out;
}

Polyvector Polyvector::coerce(const RingSpec &target) const {
    Polyvector out(target, grade_);
    for (auto &[i, f] : comps_) {
        LaurentPoly g = f.coerce(target);
        if (!g.is_zero()) out.comps_.emplace(i, g);
    }
    return out;
}

std::string Polyvector::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[idx, f] : comps_) {
        if (!first) os << "+";
        first = false;
        os << "(" << f.str() << ")";
        for (size_t j = 0; j < idx.size(); j++)
            os << (j ? "^" : "*") << "d" << (idx[j] + 1);
    }
    return os.str();
}

Polyvector Polyvector::parse(const RingSpec &ring, int grade,
                             const std::string &text) {
    std::string t;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) t += ch;
    Polyvector out(ring, grade);
    if (t.empty() || t == "0") return out;
    size_t pos = 0;
    while (pos < t.size()) {
        if (t[pos] == '+') pos++;
        bool neg = false;
        if (pos < t.size() && t[pos] == '-' && pos + 1 < t.size() && t[pos + 1] == '(') {
            neg = true;
            pos++;
        }
        if (pos >= t.size() || t[pos] != '(')
            throw input_error("expected '(poly)*d...' term in '" + text + "'");
        size_t depth = 0, end = pos;
        for (; end < t.size(); end++) {
            if (t[end] == '(') depth++;
            if (t[end] == ')' && --depth == 0) break;
        }
        if (depth != 0) throw input_error("unbalanced '(' in '" + text + "'");
        LaurentPoly f = LaurentPoly::parse(ring, t.substr(pos + 1, end - pos - 1));
        pos = end + 1;
        std::vector<int> idx;
        while (pos < t.size() && (t[pos] == '*' || t[pos] == '^')) {
            pos++;
            if (pos >= t.size() || t[pos] != 'd')
                throw input_error("expected frame slot 'd<k>' in '" + text + "'");
            pos++;
            size_t start = pos;
            while (pos < t.size() && isdigit((unsigned char)t[pos])) pos++;
            int k = std::stoi(t.substr(start, pos - start));
            if (k < 1 || k > ring.n)
                throw input_error("frame slot out of range in '" + text + "'");
            idx.push_back(k - 1);
        }
        if ((int)idx.size() != grade)
            throw input_error("term grade mismatch in '" + text + "'");
        out.add_term(std::move(idx), neg ? -f : f);
    }
    return out;
}

} // namespace logpois
