#ifndef LOGPOIS_POLYVECTOR_HPP
#define LOGPOIS_POLYVECTOR_HPP

#include "logpois/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace logpois {

/* Polyvector field of fixed grade in the coordinate frame: components
 * indexed by strictly increasing tuples of coordinate indices, so
 * antisymmetry is implicit. Grade 0 is a function (empty tuple),
 * grade 1 a vector field, grade 2 a bivector. */
class Polyvector {
public:
    Polyvector() = default;
    Polyvector(RingSpec ring, int grade) : ring_(std::move(ring)), grade_(grade) {}

    static Polyvector function(const LaurentPoly &f);
    /* coordinate field \partial_k */
    static Polyvector basis_field(const RingSpec &ring, int k);

    const RingSpec &ring() const { return ring_; }
    int grade() const { return grade_; }
    const std::map<std::vector<int>, LaurentPoly> &components() const {
        return comps_;
    }
    bool is_zero() const;

    /* accumulate coeff on an arbitrary index tuple; sorts and signs */
    void add_term(std::vector<int> indices, const LaurentPoly &coeff);
    LaurentPoly component(const std::vector<int> &increasing) const;

    Polyvector operator+(const Polyvector &o) const;
    Polyvector operator-(const Polyvector &o) const;
    Polyvector operator-() const;
    Polyvector operator*(const Scalar &c) const;
    Polyvector operator*(const LaurentPoly &f) const;
    bool operator==(const Polyvector &o) const;
    bool operator!=(const Polyvector &o) const { return !(*this == o); }

    Polyvector wedge(const Polyvector &o) const;

    /* grade-1 helpers */
    LaurentPoly apply(const LaurentPoly &f) const;    // v(f)
    Polyvector lie_bracket(const Polyvector &w) const; // [v, w], both grade 1
    /* Lie derivative of this (any grade) along grade-1 v */
    Polyvector lie_derivative_along(const Polyvector &v) const;

    Polyvector coerce(const RingSpec &target) const;

    std::string str() const;
    static Polyvector parse(const RingSpec &ring, int grade, const std::string &text);

private:
    RingSpec ring_;
    int grade_ = 0;
    std::map<std::vector<int>, LaurentPoly> comps_;

    void prune();
};

} // namespace logpois

#endif
