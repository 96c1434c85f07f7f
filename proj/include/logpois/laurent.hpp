#ifndef LOGPOIS_LAURENT_HPP
#define LOGPOIS_LAURENT_HPP

#include "logpois/ring.hpp"
#include "logpois/scalar.hpp"

#include <map>
#include <string>

namespace logpois {

enum class HolomorphyClass { holomorphic, logarithmic_only, genuine_pole };

const char *holomorphy_name(HolomorphyClass c);

/* Sparse truncated multivariate Laurent polynomial: a finite map from
 * exponent vectors to exact scalars. Stored terms never have zero
 * coefficient, never exceed the total-degree truncation, and negative
 * exponents appear only on log coordinates within the pole budget.
 * Values are immutable after construction; every operation is pure. */
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(RingSpec ring) : ring_(std::move(ring)) {}
    LaurentPoly(RingSpec ring, const Scalar &constant);

    static LaurentPoly monomial(const RingSpec &ring, const MultiIndex &m,
                                const Scalar &coeff);
    /* coordinate z_k (0-based) */
    static LaurentPoly coordinate(const RingSpec &ring, int k);

    const RingSpec &ring() const { return ring_; }
    const std::map<MultiIndex, Scalar> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    int lowest_degree() const;  // min total degree; trunc+1 when zero
    int highest_degree() const; // max total degree; trunc when zero

    Scalar coeff(const MultiIndex &m) const;

    LaurentPoly operator+(const LaurentPoly &o) const;
    LaurentPoly operator-(const LaurentPoly &o) const;
    LaurentPoly operator*(const LaurentPoly &o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const Scalar &c) const;
    bool operator==(const LaurentPoly &o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly &o) const { return !(*this == o); }

    /* multiply by the single monomial z^m (m may carry negative entries) */
    LaurentPoly shift(const MultiIndex &m) const;

    LaurentPoly derivative(int k) const;

    /* exact division by z_k; nullopt if some term has no z_k factor */
    bool divisible_by_coordinate(int k) const;
    LaurentPoly divide_by_coordinate(int k) const;

    /* restriction to {z_k = 0}: keeps exponent-0 terms, errors on poles in z_k */
    LaurentPoly restrict_coordinate_zero(int k) const;

    LaurentPoly homogeneous_part(int degree) const;
    LaurentPoly truncate_at(int degree) const; // drop terms of degree > degree

    /* move to another ring over the same chart (may throw if a stored
     * term violates the target trunc/pole budget; trunc drops instead) */
    LaurentPoly coerce(const RingSpec &target) const;

    /* all exponents >= 0, or within the per-coordinate allowance
     * (allowance[k] <= 0 is the lowest admissible exponent) */
    HolomorphyClass classify(const std::vector<int> &allowance) const;
    bool is_holomorphic() const;

    Scalar eval(const std::vector<Scalar> &point) const;

    std::string str() const;
    static LaurentPoly parse(const RingSpec &ring, const std::string &text);

private:
    void insert_term(const MultiIndex &m, const Scalar &c);
    void check_compatible(const LaurentPoly &o, const char *op) const;

    RingSpec ring_;
    std::map<MultiIndex, Scalar> terms_;
};

inline LaurentPoly operator*(const Scalar &c, const LaurentPoly &p) { return p * c; }

} // namespace logpois

#endif
