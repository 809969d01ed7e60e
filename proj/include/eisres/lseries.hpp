#ifndef EISRES_LSERIES_HPP
#define EISRES_LSERIES_HPP

#include "eisres/lattice_enum.hpp"

#include <cstddef>
#include <optional>

namespace eisres {

struct LValueOptions {
    unsigned precision = 128;
    /// Stop when |value(2X) - value(X)| and the tail bound are both below
    /// max(tolerance * |value|, absolute_tolerance).
    double tolerance = 1e-10;
    double absolute_tolerance = 0.0;
    Rational initial_norm_bound{64};
    Rational max_norm_bound{1 << 20};
    /// Evaluate once at this bound instead of doubling.
    std::optional<Rational> fixed_norm_bound;
    unsigned threads = 1;
    double safety = 1.25;
};

struct LValueResult {
    Complex value{128};
    double trunc_bound = 0.0;
    double round_bound = 0.0;
    Rational norm_bound_used;
    std::size_t term_count = 0;
    /// |value(X) - value(X/2)| at the last doubling; negative for a fixed bound.
    double last_change = -1.0;
    int doublings = 0;
    unsigned precision = 128;
};

/// sum over a' in (a^vee \ 0)/U_{L,N} of e(Tr(a' b)) N(a')^{-s}.
LValueResult lvalue(const TotallyRealField& field, const FractionalIdeal& a, long level, const FieldElement& b,
                    long s, const LValueOptions& opts = {});
/// Orbits under U^+_{L,N}, denominators |N(a')|^s.
LValueResult lvalue_plus(const TotallyRealField& field, const FractionalIdeal& a, long level, const FieldElement& b,
                         long s, const LValueOptions& opts = {});
/// sum of N(g)^{-s} over integral g = mu b with mu >> 0, mu = 1 mod f b^{-1},
/// realized as mu in 1 + f b^{-1} modulo totally positive units = 1 mod f.
LValueResult partial_zeta(const TotallyRealField& field, const FractionalIdeal& b_ideal,
                          const FractionalIdeal& f_ideal, long s, const LValueOptions& opts = {});
/// sum over a' in a^vee / M a^vee of e(Tr(a' b)); M^g terms.
Complex character_sum(const TotallyRealField& field, const FractionalIdeal& a, const FieldElement& b, long modulus,
                      unsigned precision = 128);

/// Throws unless b in N^{-1} a; TwistInIdeal if b in a.
void validate_twist(const FractionalIdeal& a, long level, const FieldElement& b);

}  // namespace eisres

#endif
