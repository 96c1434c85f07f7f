#include "logpois/logform.hpp"
#include "logpois/errors.hpp"

#include <sstream>

namespace logpois {

namespace {

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

LogForm LogForm::frame_generator(const RingSpec &ring, int k) {
    LogForm f(ring, 1);
    f.comps_.emplace(std::vector<int>{k}, LaurentPoly(ring, Scalar(1)));
    return f;
}

LogForm LogForm::differential(const LaurentPoly &f) {
    // df = sum_k (d_k f) dz_k;  dz_k = z_k * (dz_k/z_k) on log slots
    const RingSpec &ring = f.ring();
    LogForm out(ring, 1);
    for (int k = 0; k < ring.n; k++) {
        LaurentPoly c = f.derivative(k);
        if (c.is_zero()) continue;
        if (ring.log_at(k)) c = c * LaurentPoly::coordinate(ring, k);
        out.add_term({k}, c);
    }
    return out;
}

bool LogForm::is_zero() const {
    for (auto &[i, f] : comps_)
        if (!f.is_zero()) return false;
    return true;
}

void LogForm::add_term(std::vector<int> slots, const LaurentPoly &coeff) {
    if ((int)slots.size() != grade_)
        throw input_error("log form term has wrong grade");
    int sign = sort_sign(slots);
    if (sign == 0 || coeff.is_zero()) return;
    LaurentPoly add = sign == 1 ? coeff : -coeff;
    auto it = comps_.find(slots);
    if (it == comps_.end()) {
        comps_.emplace(std::move(slots), add);
    } else {
        it->second = it->second + add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

LaurentPoly LogForm::component(const std::vector<int> &idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? LaurentPoly(ring_) : it->second;
}

LogForm LogForm::operator+(const LogForm &o) const {
    if (ring_ != o.ring_ || grade_ != o.grade_)
        throw input_error("log form mismatch in add");
    LogForm out = *this;
    for (auto &[i, f] : o.comps_) {
        auto it = out.comps_.find(i);
        if (it == out.comps_.end()) {
            out.comps_.emplace(i, f);
        } else {
            it->second = it->second + f;
            if (it->second.is_zero()) out.comps_.erase(it);
        }
    }
    return out;
}

LogForm LogForm::operator-(const LogForm &o) const { return *this + (-o); }

LogForm LogForm::operator-() const {
    LogForm out(ring_, grade_);
    for (auto &[i, f] : comps_) out.comps_.emplace(i, -f);
    return out;
}

LogForm LogForm::operator*(const Scalar &c) const {
    LogForm out(ring_, grade_);
    if (c.is_zero()) return out;
    for (auto &[i, f] : comps_) out.comps_.emplace(i, f * c);
    return out;
}

LogForm LogForm::operator*(const LaurentPoly &g) const {
    LogForm out(ring_, grade_);
    for (auto &[i, f] : comps_) {
        LaurentPoly p = f * g;
        if (!p.is_zero()) out.comps_.emplace(i, p);
    }
    return out;
}

bool LogForm::operator==(const LogForm &o) const {
    return ring_ == o.ring_ && grade_ == o.grade_ && comps_ == o.comps_;
}

LogForm LogForm::exterior_derivative() const {
    // d(a theta^I) = da ^ theta^I, and d of every frame generator is 0
    LogForm out(ring_, grade_ + 1);
    for (auto &[idx, a] : comps_) {
        for (int k = 0; k < ring_.n; k++) {
            LaurentPoly c = a.derivative(k);
            if (c.is_zero()) continue;
            if (ring_.log_at(k)) c = c * LaurentPoly::coordinate(ring_, k);
            std::vector<int> jdx{k};
            jdx.insert(jdx.end(), idx.begin(), idx.end());
            out.add_term(std::move(jdx), c);
        }
    }
    return out;
}

LogForm LogForm::contract(const Polyvector &v) const {
    if (v.grade() != 1) throw input_error("contract expects a grade-1 field");
    // theta^k(v) = v^k / z_k on log slots, v^k otherwise
    LogForm out(ring_, grade_ - 1);
    if (grade_ == 0) throw input_error("cannot contract a function");
    for (auto &[idx, a] : comps_) {
        for (size_t t = 0; t < idx.size(); t++) {
            int k = idx[t];
            LaurentPoly vk = v.component({k});
            if (vk.is_zero()) continue;
            if (ring_.log_at(k)) {
                MultiIndex s(ring_.n, 0);
                s[k] = -1;
                vk = vk.shift(s);
            }
            std::vector<int> rest;
            for (size_t u = 0; u < idx.size(); u++)
                if (u != t) rest.push_back(idx[u]);
            LaurentPoly c = a * vk;
            if (t % 2 == 1) c = -c;
            out.add_term(std::move(rest), c);
        }
    }
    return out;
}

LogForm LogForm::lie_derivative_along(const Polyvector &v) const {
    LogForm term1 = exterior_derivative().contract(v);
    if (grade_ == 0) return term1;
    LogForm inner = contract(v);
    if (grade_ == 1) {
        // i_v of a 1-form is a function; d of it re-enters as a 1-form
        LaurentPoly f = inner.component({});
        return term1 + LogForm::differential(f);
    }
    return term1 + inner.exterior_derivative();
}

LaurentPoly LogForm::residue(int k) const {
    if (grade_ != 1) throw input_error("residue defined for 1-forms");
    if (!ring_.log_at(k))
        throw input_error("residue along a non-log coordinate");
    return component({k}).restrict_coordinate_zero(k);
}

LogForm LogForm::coerce(const RingSpec &target) const {
    LogForm out(target, grade_);
    for (auto &[i, f] : comps_) {
        LaurentPoly g = f.coerce(target);
        if (!g.is_zero()) out.comps_.emplace(i, g);
    }
    return out;
}

HolomorphyClass LogForm::classify() const {
    HolomorphyClass worst = HolomorphyClass::holomorphic;
    std::vector<int> no_allowance(ring_.n, 0);
    for (auto &[i, f] : comps_) {
        HolomorphyClass c = f.classify(no_allowance);
        if (c == HolomorphyClass::genuine_pole) return c;
        if (c == HolomorphyClass::logarithmic_only) worst = c;
    }
    return worst;
}

std::string LogForm::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[idx, f] : comps_) {
        if (!first) os << "+";
        first = false;
        os << "(" << f.str() << ")";
        for (size_t j = 0; j < idx.size(); j++)
            os << (j ? "^" : "*") << "L" << (idx[j] + 1);
    }
    return os.str();
}

LogForm LogForm::parse(const RingSpec &ring, int grade, const std::string &text) {
    std::string t;
    for (char ch : text)
        if (!isspace((unsigned char)ch)) t += ch;
    LogForm out(ring, grade);
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
            throw input_error("expected '(poly)*L...' term in '" + text + "'");
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
            if (pos >= t.size() || t[pos] != 'L')
                throw input_error("expected frame slot 'L<k>' in '" + text + "'");
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
