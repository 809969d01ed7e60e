#ifndef EISRES_RECONSTRUCT_HPP
#define EISRES_RECONSTRUCT_HPP

#include "eisres/real.hpp"

#include <optional>

namespace eisres {

/// First continued-fraction convergent p/q of x with q <= denom_bound and
/// |x - p/q| <= error, computed exactly on the dyadic value of x.
std::optional<Rational> reconstruct_rational(const Real& x, const Real& error, const Integer& denom_bound);

}  // namespace eisres

#endif
