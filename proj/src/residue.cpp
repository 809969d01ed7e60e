#include "eisres/residue.hpp"

#include "eisres/error.hpp"
#include "eisres/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace eisres {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer ipow(const Integer& b, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational qpow(const Rational& b, long e) {
    Rational r(ipow(b.get_num(), e), ipow(b.get_den(), e));
    r.canonicalize();
    return r;
}

cplx cpow(cplx z, long e) {
    cplx r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

/// sqrt(d_L) / (2 pi)^{e} * (-1)^{e/2}: the real factor turning L into
/// L sqrt(d_L) (2 pi i)^{-e} for even e.
Real ks_scale(const TotallyRealField& field, long e, unsigned prec) {
    Real scale = sqrt(Real(field.discriminant(), prec)) / pow(Real(2L, prec) * pi(prec), e);
    return (e / 2) % 2 == 0 ? scale : -scale;
}

CertificateRun make_run(const TotallyRealField& field, const LValueResult& l, long e, bool include_change,
                        const std::optional<Integer>& denom_bound) {
    CertificateRun run;
    run.precision = l.precision;
    run.norm_bound = l.norm_bound_used;
    run.l_value = l;
    const Real scale = ks_scale(field, e, l.precision);
    run.q_hat = l.value.re * scale;
    const double err_l = l.trunc_bound + l.round_bound + (include_change ? std::max(l.last_change, 0.0) : 0.0);
    const double abs_scale = std::fabs(scale.to_double());
    run.budget = err_l * abs_scale + std::ldexp(std::fabs(run.q_hat.to_double()), 8 - static_cast<int>(l.precision));
    Integer cap;
    mpz_ui_pow_ui(cap.get_mpz_t(), 10, l.precision / 8);
    if (denom_bound) {
        run.denom_bound = *denom_bound;
    } else if (run.budget > 0.0) {
        const double d = std::floor(1.0 / std::sqrt(2.0 * run.budget));
        run.denom_bound = d < cap.get_d() ? Integer(d) : cap;
    } else {
        run.denom_bound = cap;
    }
    if (std::fabs(l.value.im.to_double()) * abs_scale > run.budget) return run;
    run.recovered = reconstruct_rational(run.q_hat, Real(run.budget, l.precision), run.denom_bound);
    if (run.recovered) run.residual = std::fabs((run.q_hat - Real(*run.recovered, l.precision)).to_double());
    return run;
}

RationalCertificate certify_at(const TotallyRealField& field, const FractionalIdeal& a, long level,
                               const FieldElement& b, long s, const CertifyOptions& opts) {
    const long e = s * static_cast<long>(field.degree());
    const LValueResult l1 = lvalue(field, a, level, b, s, opts.lvalue);
    LValueOptions second = opts.lvalue;
    second.precision = 2 * opts.lvalue.precision;
    second.fixed_norm_bound = l1.norm_bound_used * 2;
    const LValueResult l2 = lvalue(field, a, level, b, s, second);

    RationalCertificate cert;
    cert.runs[0] = make_run(field, l1, e, true, opts.denom_bound);
    cert.runs[1] = make_run(field, l2, e, false, opts.denom_bound);
    const auto& r0 = cert.runs[0];
    const auto& r1 = cert.runs[1];
    if (!r0.recovered || !r1.recovered || *r0.recovered != *r1.recovered) {
        std::ostringstream msg;
        msg << "rational reconstruction failed or disagreed:";
        for (const auto& r : cert.runs) {
            msg << " [p=" << r.precision << " X=" << r.norm_bound.get_str() << " q=" << r.q_hat.to_string(30)
                << " budget=" << r.budget << " -> " << (r.recovered ? r.recovered->get_str() : std::string("none"))
                << "]";
        }
        throw Error(ErrorCode::NotCertified, msg.str());
    }
    cert.value = *r0.recovered;
    cert.denom_bound = r0.denom_bound;
    return cert;
}

}  // namespace

Rational residue_prefactor(std::size_t g, long lambda, long level, const Rational& norm_a) {
    const long gl = static_cast<long>(g);
    Rational r(ipow(factorial(lambda + 1), gl) * (lambda + 2) * gl * gl * ipow(Integer(level), gl),
               factorial(lambda * gl));
    r.canonicalize();
    r /= norm_a * norm_a;
    return ((lambda + 1) * gl) % 2 == 0 ? r : Rational(-r);
}

ResidueReport residue_closed_form(const TotallyRealField& field, const TorsionDatum& datum,
                                  const ResidueOptions& opts) {
    validate_torsion_datum(field, datum, true);
    const std::size_t g = field.degree();
    ResidueReport rep;
    rep.rational_prefactor = residue_prefactor(g, datum.lambda, datum.level, datum.a.norm());
    rep.discriminant = field.discriminant();
    rep.two_pi_i_exponent = (datum.lambda + 2) * static_cast<long>(g);
    rep.l_value = lvalue(field, datum.a, datum.level, datum.b, datum.lambda + 2, opts.lvalue);

    const unsigned p = rep.l_value.precision;
    const long e = rep.two_pi_i_exponent;
    const Real real_denominator = sqrt(Real(rep.discriminant, p)) * pow(Real(2L, p) * pi(p), e);
    const Complex i_inv = i_power(-e, p);
    const Real c = Real(rep.rational_prefactor, p) / real_denominator;
    rep.numeric_value = (rep.l_value.value * i_inv) * c;
    rep.error_bound = std::fabs(c.to_double()) * (rep.l_value.trunc_bound + rep.l_value.round_bound +
                                                  std::max(rep.l_value.last_change, 0.0));

    if (opts.certify && datum.lambda % 2 == 0) {
        CertifyOptions co;
        co.lvalue = opts.lvalue;
        co.lvalue.tolerance = std::min(opts.lvalue.tolerance, kCertifyTolerance);
        const RationalCertificate cert = certify_at(field, datum.a, datum.level, datum.b, datum.lambda + 2, co);
        // Res = prefactor * q / d_L with q = L sqrt(d_L) (2 pi i)^{-e}.
        rep.certificate = rep.rational_prefactor * cert.value / Rational(rep.discriminant);
    }
    return rep;
}

Real k_integral_closed_form(const TotallyRealField& field, const FieldElement& a_prime, long lambda,
                            unsigned precision) {
    if (a_prime.is_zero()) throw Error(ErrorCode::ZeroElement, "a' must be nonzero");
    const long g = static_cast<long>(field.degree());
    Rational q(ipow(factorial(lambda + 1), g), factorial((lambda + 2) * g - 1));
    q.canonicalize();
    q /= qpow(abs(field.norm(a_prime)), 2 * (lambda + 2));
    return Real(q, precision);
}

QuadratureResult k_integral_quadrature(const TotallyRealField& field, const FieldElement& a_prime, long lambda,
                                       double tolerance, int max_refinements) {
    if (a_prime.is_zero()) throw Error(ErrorCode::ZeroElement, "a' must be nonzero");
    const std::size_t g = field.degree();
    const double m = static_cast<double>((lambda + 2) * static_cast<long>(g));
    const auto sigma = field.embed_double(a_prime);
    std::vector<double> s2;
    for (double s : sigma) s2.push_back(s * s);
    QuadratureResult res;
    if (g == 1) {
        res.value = std::pow(s2[0], -m);
        return res;
    }

    // Peak of the integrand: every summand equal to T = |N(a')|^{2/g}.
    double log_t = 0.0;
    for (double v : s2) log_t += std::log(v);
    log_t /= static_cast<double>(g);
    const std::size_t dim = g - 1;
    std::vector<double> centre(dim);
    for (std::size_t j = 0; j < dim; ++j) centre[j] = std::log(s2[j + 1]) - log_t;

    auto integrate = [&](double h, double half_width) {
        const long steps = static_cast<long>(std::ceil(half_width / h));
        std::vector<long> idx(dim, -steps);
        double sum = 0.0;
        while (true) {
            double vsum = 0.0;
            double denom = 0.0;
            for (std::size_t j = 0; j < dim; ++j) {
                const double v = centre[j] + static_cast<double>(idx[j]) * h;
                vsum += v;
                denom += s2[j + 1] * std::exp(-v);
            }
            denom += s2[0] * std::exp(vsum);
            sum += std::exp(-m * std::log(denom));
            std::size_t j = 0;
            while (j < dim && ++idx[j] > steps) idx[j++] = -steps;
            if (j == dim) break;
        }
        return sum * std::pow(h, static_cast<double>(dim));
    };

    double h = 0.5;
    double half_width = (40.0 + m * std::log(static_cast<double>(g))) / m + 1.0;
    double prev = integrate(h, half_width);
    for (int r = 1; r <= max_refinements; ++r) {
        h /= 2.0;
        half_width *= 1.25;
        const double cur = integrate(h, half_width);
        res.value = cur;
        res.change = std::fabs(cur - prev);
        res.step = h;
        res.half_width = half_width;
        res.refinements = r;
        if (res.change <= tolerance * std::fabs(cur)) return res;
        prev = cur;
    }
    throw Error(ErrorCode::NotConverged, "K quadrature did not reach the requested tolerance");
}

CycleResult cycle_residue_quadrature_g1(const TotallyRealField& field, const TorsionDatum& datum,
                                        const CycleOptions& opts) {
    if (field.degree() != 1) throw Error(ErrorCode::Precondition, "cycle quadrature is implemented for g = 1 only");
    if (!(opts.r > 0.0)) throw Error(ErrorCode::InvalidInput, "r must be positive");
    validate_torsion_datum(field, datum, true);
    const long lambda = datum.lambda;
    const long l = datum.l(1);

    const FieldElement alpha = datum.a.basis_element(0);
    const FieldElement delta = dual_ideal(field, datum.a).basis_element(0);
    const double alpha_s = field.embed_double(alpha)[0];
    const double delta_s = field.embed_double(delta)[0];
    const FractionalIdeal inv_a = ideal_inverse(field, datum.a);
    const FractionalIdeal cusp_lattice =
        ideal_product(field, ideal_product(field, inverse_different(field), inv_a), inv_a).scaled(datum.level);

    CycleResult out;
    out.volume = covolume(field, cusp_lattice).to_double();

    // e(m t1 - n t2) through a table of D-th roots of unity.
    const Rational t1 = field.trace(field.multiply(delta, datum.b));
    const Rational t2 = field.trace(field.multiply(datum.b_prime, alpha));
    Integer lcm;
    mpz_lcm(lcm.get_mpz_t(), t1.get_den_mpz_t(), t2.get_den_mpz_t());
    if (lcm > 1000000) throw Error(ErrorCode::InvalidInput, "twist denominators too large for the cycle quadrature");
    const long den = lcm.get_si();
    const long c1 = Rational(t1 * den).get_num().get_si() % den;
    const long c2 = Rational(t2 * den).get_num().get_si() % den;
    std::vector<cplx> roots(den);
    for (long k = 0; k < den; ++k) {
        const Complex z = exp_2pi_i(Rational(k, den), 64);
        roots[k] = {z.re.to_double(), z.im.to_double()};
    }

    const cplx two_pi_i(0.0, kTwoPi);
    const cplx form_constant = two_pi_i * eis_prefactor(1, l).get_d();
    const cplx residue_map = 1.0 / two_pi_i;
    const double r = opts.r;
    const cplx t = 1.0 / cplx(0.0, 2.0 * r);
    const long rho_power = 2 + l;

    long big_a = opts.initial_a_prime_radius;
    long big_b = opts.initial_a_radius;
    long points = opts.initial_points;
    const int passes = opts.max_refinements + 1;
    cplx prev = 0.0;
    for (int pass = 0; pass < passes; ++pass) {
        cplx zero = 0.0;
        cplx nonzero = 0.0;
        const double dx = out.volume / static_cast<double>(points);
        for (long i = 0; i < points; ++i) {
            const cplx tau(static_cast<double>(i) * dx, r);
            for (long n = -big_b; n <= big_b; ++n) {
                const double sa = static_cast<double>(n) * alpha_s;
                const long centre = n == 0 ? 0 : std::lround(-sa * tau.real() / delta_s);
                cplx row = 0.0;
                for (long m = centre - big_a; m <= centre + big_a; ++m) {
                    if (n == 0 && m == 0) continue;
                    const double sp = static_cast<double>(m) * delta_s;
                    const cplx w = sp + sa * tau;
                    const cplx wbar = sp + sa * std::conj(tau);
                    const cplx rho = cplx(0.0, -kTwoPi) * t * std::norm(w);
                    const cplx f = t * t * wbar * wbar;
                    const cplx h_y = t * w;
                    long k = (m % den * c1 - n % den * c2) % den;
                    if (k < 0) k += den;
                    row += roots[k] * f * cpow(h_y, lambda) / cpow(rho, rho_power);
                }
                (n == 0 ? zero : nonzero) += row;
            }
            if (opts.progress)
                opts.progress((static_cast<double>(pass) + static_cast<double>(i + 1) / static_cast<double>(points)) /
                              static_cast<double>(passes));
        }
        const cplx scale = form_constant * residue_map * dx;
        out.zero_sector = zero * scale;
        out.nonzero_sector = nonzero * scale;
        out.value = out.zero_sector + out.nonzero_sector;
        out.a_prime_radius = big_a;
        out.a_radius = big_b;
        out.points = points;
        out.refinements = pass;
        if (pass > 0) {
            out.change = std::abs(out.value - prev);
            if (out.change <= opts.tolerance * std::abs(out.value)) {
                if (opts.progress) opts.progress(1.0);
                return out;
            }
        }
        prev = out.value;
        big_a *= 2;
        big_b *= 2;
        points = std::min<long>(2 * points, 128);
    }
    throw Error(ErrorCode::NotConverged, "cycle quadrature did not stabilise");
}

RationalCertificate klingen_siegel_certify(const TotallyRealField& field, const FractionalIdeal& a, long level,
                                           const FieldElement& b, long lambda, const CertifyOptions& opts) {
    if (lambda < 6 || lambda % 2 != 0) throw Error(ErrorCode::Precondition, "lambda must be even and >= 6");
    validate_twist(a, level, b);
    return certify_at(field, a, level, b, lambda, opts);
}

NonvanishingResult nonvanishing_check(const TotallyRealField& field, const TorsionDatum& datum,
                                      const LValueOptions& opts) {
    if (datum.lambda < 6 || datum.lambda % 2 != 0) throw Error(ErrorCode::Precondition, "lambda must be even and >= 6");
    if (field.degree() < 2) throw Error(ErrorCode::Precondition, "nonvanishing criterion needs g >= 2");
    validate_torsion_datum(field, datum, true);
    const FractionalIdeal nb = ideal_product(field, FractionalIdeal::principal(field, datum.b * Rational(datum.level)),
                                             ideal_inverse(field, datum.a));
    if (!nb.is_integral()) throw Error(ErrorCode::Precondition, "N b a^{-1} is not an integral ideal");
    const FractionalIdeal f = FractionalIdeal::unit(field).scaled(datum.level);
    if (!are_coprime(field, f, nb)) throw Error(ErrorCode::NotCoprime, "N O_L and N b a^{-1} are not coprime");

    NonvanishingResult res;
    res.l_value = lvalue(field, datum.a, datum.level, datum.b, datum.lambda + 2, opts);
    res.abs_value = abs(res.l_value.value).to_double();
    res.error_budget = res.l_value.trunc_bound + res.l_value.round_bound;
    res.margin = res.abs_value - res.error_budget;
    if (!(res.margin > 0.0)) {
        std::ostringstream msg;
        msg << "|L| = " << res.abs_value << " does not exceed the error budget " << res.error_budget;
        throw Error(ErrorCode::Inconclusive, msg.str());
    }
    res.nonzero = true;
    return res;
}

}  // namespace eisres
