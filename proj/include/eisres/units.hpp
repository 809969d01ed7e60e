#ifndef EISRES_UNITS_HPP
#define EISRES_UNITS_HPP

#include "eisres/ideal.hpp"

#include <vector>

namespace eisres {

/// U_{L,f}: units of O_L congruent to 1 modulo an integral ideal f (for
/// f = N O_L with N >= 3 this is U_{L,N}), together with its totally
/// positive subgroup. Free of rank g-1; empty generator lists when g = 1.
struct UnitSubgroup {
    std::vector<FieldElement> generators;
    /// Generators of the totally positive part U^+.
    std::vector<FieldElement> positive_generators;
    /// N when built from a rational level, 0 for a general modulus.
    long level = 0;
    /// [U : U^+], a power of two dividing 2^{g-1}.
    long tp_index = 1;
    /// |det(log|sigma_k(eps_i)|)_{i,k <= g-1}|; 1 when g = 1.
    Real regulator{1L, 128};
};

UnitSubgroup unit_subgroup(const TotallyRealField& field, long level);
UnitSubgroup unit_subgroup(const TotallyRealField& field, const FractionalIdeal& modulus);

/// x - 1 lies in the modulus.
bool is_congruent_to_one(const TotallyRealField& field, const FieldElement& x, const FractionalIdeal& modulus);
/// Absolute regulator of g-1 units (1 for an empty list).
Real regulator_of(const TotallyRealField& field, const std::vector<FieldElement>& units);
/// prod_i units[i]^{exponents[i]}.
FieldElement unit_product(const TotallyRealField& field, const std::vector<FieldElement>& units,
                          const std::vector<long>& exponents);

}  // namespace eisres

#endif
