#ifndef LOGPOIS_LOGFORM_HPP
#define LOGPOIS_LOGFORM_HPP

#include "logpois/polyvector.hpp"

namespace logpois {

/* Differential form expressed in the logarithmic coframe
 *      dz_i/z_i  (log coordinates i),   dz_j  (other coordinates),
 * components indexed by strictly increasing slot tuples. A form lies in
 * the logarithmic lattice exactly when all coefficients are holomorphic. */
class LogForm {
public:
    LogForm() = default;
    LogForm(RingSpec ring, int grade) : ring_(std::move(ring)), grade_(grade) {}

    /* the generator dz_k/z_k (log k) or dz_k (otherwise) */
    static LogForm frame_generator(const RingSpec &ring, int k);
    /* exact differential df in the log coframe */
    static LogForm differential(const LaurentPoly &f);

    const RingSpec &ring() const { return ring_; }
    int grade() const { return grade_; }
    const std::map<std::vector<int>, LaurentPoly> &components() const {
        return comps_;
    }
    bool is_zero() const;
    void add_term(std::vector<int> slots, const LaurentPoly &coeff);
    LaurentPoly component(const std::vector<int> &increasing) const;

    LogForm operator+(const LogForm &o) const;
    LogForm operator-(const LogForm &o) const;
    LogForm operator-() const;
    LogForm operator*(const Scalar &c) const;
    LogForm operator*(const LaurentPoly &f) const;
    bool operator==(const LogForm &o) const;
    bool operator!=(const LogForm &o) const { return !(*this == o); }

    LogForm exterior_derivative() const;
    /* contraction with a grade-1 polyvector (coordinate frame) */
    LogForm contract(const Polyvector &v) const;
    /* Cartan formula L_v = i_v d + d i_v */
    LogForm lie_derivative_along(const Polyvector &v) const;

    /* grade-1 only: residue along {z_k = 0}, i.e. the dz_k/z_k
     * coefficient restricted to the branch */
    LaurentPoly residue(int k) const;

    LogForm coerce(const RingSpec &target) const;
    /* worst holomorphy class over all coefficients */
    HolomorphyClass classify() const;

    std::string str() const;
    static LogForm parse(const RingSpec &ring, int grade, const std::string &text);

private:
    RingSpec ring_;
    int grade_ = 0;
    std::map<std::vector<int>, LaurentPoly> comps_;
};

} // namespace logpois

#endif
