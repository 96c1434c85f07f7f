#ifndef LOGPOIS_ROOTS_HPP
#define LOGPOIS_ROOTS_HPP

#include "logpois/scalar.hpp"

#include <optional>
#include <vector>

namespace logpois {

/* All roots (with multiplicity) of a monic polynomial over Q(i),
 * coefficients c[0] + c[1] t + ... + t^deg. Returns nullopt when some
 * root lies outside Q(i). Rescales to a monic Z[i] polynomial, whose
 * rational roots are Gaussian integers dividing the constant term. */
std::optional<std::vector<Scalar>>
gaussian_rational_roots(const std::vector<Scalar> &coeffs);

} // namespace logpois

#endif
