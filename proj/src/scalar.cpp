#include "logpois/scalar.hpp"
#include "logpois/errors.hpp"

#include <cctype>

namespace logpois {

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q, mpq_class(0));
}

bool Scalar::is_integer() const {
    return im_ == 0 && re_.get_den() == 1;
}

bool Scalar::is_nonneg_integer() const {
    return is_integer() && re_ >= 0;
}

Scalar Scalar::operator/(const Scalar &o) const {
    if (o.is_zero()) throw input_error("division by zero scalar");
    mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
    return Scalar((re_ * o.re_ + im_ * o.im_) / n,
                  (im_ * o.re_ - re_ * o.im_) / n);
}

std::string rational_str(const mpq_class &q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string s = rational_str(re_);
    if (im_ > 0)
        s += "+" + rational_str(im_) + "*i";
    else
        s += "-" + rational_str(mpq_class(-im_)) + "*i";
    return s;
}

namespace {

// one signed rational, consuming characters from text[pos...]
mpq_class take_rational(const std::string &t, size_t &pos) {
    bool neg = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        neg = t[pos] == '-';
        pos++;
    }
    size_t digits = pos;
    while (pos < t.size() && std::isdigit((unsigned char)t[pos])) pos++;
    if (pos == digits)
        throw input_error("expected rational literal in '" + t + "'");
    std::string num = t.substr(digits, pos - digits);
    std::string den = "1";
    if (pos < t.size() && t[pos] == '/') {
        pos++;
        size_t dstart = pos;
        while (pos < t.size() && std::isdigit((unsigned char)t[pos])) pos++;
        if (pos == dstart)
            throw input_error("expected denominator in '" + t + "'");
        den = t.substr(dstart, pos - dstart);
    }
    if (pos < t.size() && (t[pos] == '.' || t[pos] == 'e' || t[pos] == 'E'))
        throw input_error("floating-point literal rejected, use exact p/q: '" + t + "'");
    mpq_class q(num + "/" + den);
    if (q.get_den() == 0) throw input_error("zero denominator in '" + t + "'");
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

} // namespace

Scalar Scalar::parse(const std::string &text) {
    if (text.empty()) throw input_error("empty scalar literal");
    size_t pos = 0;
    // pure imaginary shorthand "c/d*i" (also "i", "-i")
    auto finish_imag = [&](mpq_class re, mpq_class im) {
        if (pos != text.size())
            throw input_error("trailing characters in scalar '" + text + "'");
        return Scalar(std::move(re), std::move(im));
    };
    if (text == "i") return Scalar(mpq_class(0), mpq_class(1));
    if (text == "-i") return Scalar(mpq_class(0), mpq_class(-1));

    mpq_class first = take_rational(text, pos);
    if (pos == text.size()) return Scalar(first, mpq_class(0));
    if (text.compare(pos, 2, "*i") == 0) {
        pos += 2;
        return finish_imag(mpq_class(0), first);
    }
    if (text[pos] != '+' && text[pos] != '-')
        throw input_error("malformed scalar '" + text + "'");
    bool neg = text[pos] == '-';
    size_t save = pos;
    pos++;
    if (pos < text.size() && text[pos] == 'i' && pos + 1 == text.size())
        return Scalar(first, mpq_class(neg ? -1 : 1));
    pos = save;
    mpq_class second = take_rational(text, pos);
    if (text.compare(pos, 2, "*i") != 0)
        throw input_error("malformed imaginary part in scalar '" + text + "'");
    pos += 2;
    return finish_imag(first, second);
}

} // namespace logpois
