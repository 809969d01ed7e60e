#ifndef EISRES_EISENSTEIN_HPP
#define EISRES_EISENSTEIN_HPP

// Term-by-term evaluation of the explicit Eisenstein (g, g-1)-form on H^g
// attached to a torsion section, in double precision.

#include "eisres/ideal.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace eisres {

using cplx = std::complex<double>;

struct TorsionDatum {
    FractionalIdeal a;
    long level;
    FieldElement b_prime;
    FieldElement b;
    long lambda;

    long l(std::size_t g) const { return lambda * static_cast<long>(g); }
};

/// N >= 3, lambda >= 3, b' in N^{-1} a^vee, b in N^{-1} a, and (when
/// `require_twist`) b not in a.
void validate_torsion_datum(const TotallyRealField& field, const TorsionDatum& datum, bool require_twist = true);

struct EisTerm {
    FieldElement a_prime;
    FieldElement a;
    std::vector<cplx> tau;
    std::vector<cplx> t;  // 1 / (tau_k - conj(tau_k))
    cplx rho;
    std::vector<cplx> f;
    std::vector<cplx> h;  // X-block then Y-block, 2g entries
    cplx phase;
};

EisTerm eis_term(const TotallyRealField& field, const TorsionDatum& datum, const FieldElement& a_prime,
                 const FieldElement& a, const std::vector<cplx>& tau);

/// (-1)^{l+1} (2g+l)! / l!; the form's constant is this times (2 pi i)^g.
Rational eis_prefactor(std::size_t g, long l);

struct MuTerm {
    cplx scalar;  // phase * f_k / rho^{2g+l}
    std::vector<cplx> h;
};

struct FormEvaluation {
    /// [k] -> pure-power pairs representing sum scalar * h^{(x) l} on mu_k.
    std::vector<std::vector<MuTerm>> mu_coefficients;
    Rational prefactor;
    long two_pi_i_power = 0;
    double radius = 0.0;
    std::size_t term_count = 0;
    /// Sum of |projected term| over the outer shell radius/2 < max|w| <= radius.
    double tail_estimate = 0.0;
};

/// All nonzero (a', a) with max_k |sigma_k(a') + sigma_k(a) tau_k| <= radius.
FormEvaluation eis_form_value(const TotallyRealField& field, const TorsionDatum& datum, const std::vector<cplx>& tau,
                              double radius);

/// Slot-wise projection: each pair contributes scalar * prod_k h_Y[k]^lambda.
std::vector<cplx> pr_res_project(const TorsionDatum& datum, const FormEvaluation& form);
cplx pr_res_project(const TorsionDatum& datum, const MuTerm& term);

}  // namespace eisres

#endif
