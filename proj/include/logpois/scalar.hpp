#ifndef LOGPOIS_SCALAR_HPP
#define LOGPOIS_SCALAR_HPP

#include <complex>
#include <gmpxx.h>
#include <string>

namespace logpois {

/* Exact Gaussian rational a + b*i, the coefficient field of the whole
 * engine. GMP keeps denominators positive and in lowest terms after
 * every operation, so equality is plain structural equality. */
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(mpq_class re, mpq_class im = 0)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static Scalar rational(long num, long den);
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    /* true when the value lies in Z (real with denominator 1) */
    bool is_integer() const;
    bool is_nonneg_integer() const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar operator+(const Scalar &o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar &o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar &o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar &o) const;
    Scalar &operator+=(const Scalar &o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar &operator-=(const Scalar &o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar &operator*=(const Scalar &o) { *this = *this * o; return *this; }

    bool operator==(const Scalar &o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar &o) const { return !(*this == o); }
    /* lexicographic on (re, im); used only for canonical container order */
    bool operator<(const Scalar &o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return cmp(im_, o.im_) < 0;
    }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    /* canonical text form: "a/b" or "a/b+c/d*i" or "a/b-c/d*i" */
    std::string str() const;
    static Scalar parse(const std::string &text);

private:
    mpq_class re_, im_;
};

inline Scalar operator*(long a, const Scalar &b) { return Scalar(a) * b; }

std::string rational_str(const mpq_class &q);
mpq_class parse_rational(const std::string &text);

} // namespace logpois

#endif
