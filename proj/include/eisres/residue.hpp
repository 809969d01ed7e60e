#ifndef EISRES_RESIDUE_HPP
#define EISRES_RESIDUE_HPP

#include "eisres/eisenstein.hpp"
#include "eisres/lseries.hpp"

#include <array>
#include <functional>
#include <optional>

namespace eisres {

/// (-1)^{(lambda+1)g} ((lambda+1)!)^g (lambda+2) g^2 N^g / ((lambda g)! N(a)^2)
Rational residue_prefactor(std::size_t g, long lambda, long level, const Rational& norm_a);

struct ResidueOptions {
    LValueOptions lvalue;
    /// Also reconstruct Res as a rational (lambda even) at two precisions.
    bool certify = false;
};

struct ResidueReport {
    Rational rational_prefactor;
    LValueResult l_value;
    Integer discriminant;
    long two_pi_i_exponent = 0;
    /// prefactor * L / (sqrt(d_L) (2 pi i)^{(lambda+2) g})
    Complex numeric_value{128};
    /// Bound on |numeric_value| error from the L-value bounds.
    double error_bound = 0.0;
    std::optional<Rational> certificate;
};

ResidueReport residue_closed_form(const TotallyRealField& field, const TorsionDatum& datum,
                                  const ResidueOptions& opts = {});

/// ((lambda+1)!)^g / (((lambda+2)g - 1)! N(a')^{2(lambda+2)})
Real k_integral_closed_form(const TotallyRealField& field, const FieldElement& a_prime, long lambda,
                            unsigned precision = 128);

struct QuadratureResult {
    double value = 0.0;
    /// |Q(h/2, L') - Q(h, L)| at the accepted refinement.
    double change = 0.0;
    double step = 0.0;
    double half_width = 0.0;
    int refinements = 0;
};

/// Trapezoid rule in v_j = log y_j, centred where every summand of the
/// denominator equals |N(a')|^{2/g}; refines step and box until the relative
/// change is below `tolerance`.
QuadratureResult k_integral_quadrature(const TotallyRealField& field, const FieldElement& a_prime, long lambda,
                                       double tolerance = 1e-8, int max_refinements = 12);

struct CycleOptions {
    double r = 1.0;
    double tolerance = 1e-6;
    int max_refinements = 4;
    long initial_a_prime_radius = 64;
    long initial_a_radius = 8;
    long initial_points = 32;
    /// Monotone fraction in [0, 1].
    std::function<void(double)> progress;
};

struct CycleResult {
    cplx value;
    cplx zero_sector;     // a = 0
    cplx nonzero_sector;  // a != 0
    double change = 0.0;
    double volume = 0.0;
    long a_prime_radius = 0;
    long a_radius = 0;
    long points = 0;
    int refinements = 0;
};

/// (2 pi i)^{-1} times the integral over x in [0, vol) of the pr_res-projected
/// form at tau = x + i r, with the form's own constant; g = 1 only.
CycleResult cycle_residue_quadrature_g1(const TotallyRealField& field, const TorsionDatum& datum,
                                        const CycleOptions& opts = {});

struct CertificateRun {
    unsigned precision = 0;
    Rational norm_bound;
    Real q_hat{128};
    double budget = 0.0;
    Integer denom_bound;
    std::optional<Rational> recovered;
    double residual = 0.0;
    LValueResult l_value;
};

struct RationalCertificate {
    Rational value;
    Integer denom_bound;
    std::array<CertificateRun, 2> runs;
};

/// Default L-value tolerance for rational certification.
inline constexpr double kCertifyTolerance = 0x1p-64;

inline LValueOptions certify_lvalue_defaults() {
    LValueOptions o;
    o.tolerance = kCertifyTolerance;
    return o;
}

struct CertifyOptions {
    LValueOptions lvalue = certify_lvalue_defaults();
    /// Default: min(10^{p/8}, floor(1/sqrt(2 * budget))).
    std::optional<Integer> denom_bound;
};

/// q = L(a, N, b, lambda) sqrt(d_L) (2 pi i)^{-lambda g}, reconstructed at
/// precision p (doubling X to convergence) and again at 2p with 2X.
/// Throws NotCertified unless both runs recover the same rational.
RationalCertificate klingen_siegel_certify(const TotallyRealField& field, const FractionalIdeal& a, long level,
                                           const FieldElement& b, long lambda, const CertifyOptions& opts = {});

struct NonvanishingResult {
    bool nonzero = false;
    double abs_value = 0.0;
    double error_budget = 0.0;
    double margin = 0.0;
    LValueResult l_value;
};

/// |L(a, N, b, lambda + 2)| > trunc + round; Inconclusive otherwise.
NonvanishingResult nonvanishing_check(const TotallyRealField& field, const TorsionDatum& datum,
                                      const LValueOptions& opts = {});

}  // namespace eisres

#endif
