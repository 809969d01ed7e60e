#include "eisres/eisenstein.hpp"

#include "eisres/error.hpp"
#include "eisres/lattice_enum.hpp"

#include <cmath>

namespace eisres {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

cplx unit_phase(const Rational& q) {
    const Complex z = exp_2pi_i(q, 64);
    return {z.re.to_double(), z.im.to_double()};
}

Integer factorial(long n) {
    Integer r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

void validate_torsion_datum(const TotallyRealField& field, const TorsionDatum& datum, bool require_twist) {
    if (datum.level < 3) throw Error(ErrorCode::LevelTooSmall, "level must be at least 3");
    if (datum.lambda < 3) throw Error(ErrorCode::Precondition, "lambda must be at least 3");
    const Rational n(datum.level);
    if (!dual_ideal(field, datum.a).contains(datum.b_prime * n))
        throw Error(ErrorCode::InvalidInput, "b' is not in N^{-1} a^vee");
    if (!datum.a.contains(datum.b * n)) throw Error(ErrorCode::InvalidInput, "b is not in N^{-1} a");
    if (require_twist && datum.a.contains(datum.b)) throw Error(ErrorCode::TwistInIdeal, "b lies in a");
}

Rational eis_prefactor(std::size_t g, long l) {
    Rational r(factorial(2 * static_cast<long>(g) + l), factorial(l));
    r.canonicalize();
    return (l + 1) % 2 == 0 ? r : Rational(-r);
}

EisTerm eis_term(const TotallyRealField& field, const TorsionDatum& datum, const FieldElement& a_prime,
                 const FieldElement& a, const std::vector<cplx>& tau) {
    const std::size_t g = field.degree();
    if (a_prime.is_zero() && a.is_zero()) throw Error(ErrorCode::ZeroGamma, "gamma = (0, 0)");
    if (tau.size() != g) throw Error(ErrorCode::InvalidInput, "tau must have g entries");
    for (const auto& z : tau)
        if (!(z.imag() > 0.0)) throw Error(ErrorCode::NotUpperHalfPlane, "tau must lie in the upper half plane");

    EisTerm out;
    out.a_prime = a_prime;
    out.a = a;
    out.tau = tau;
    const auto sp = field.embed_double(a_prime);
    const auto sa = field.embed_double(a);
    std::vector<cplx> w(g);
    std::vector<double> w2(g);
    cplx rho_sum = 0.0;
    for (std::size_t k = 0; k < g; ++k) {
        out.t.push_back(1.0 / (tau[k] - std::conj(tau[k])));
        w[k] = sp[k] + sa[k] * tau[k];
        w2[k] = std::norm(w[k]);
        rho_sum += out.t[k] * w2[k];
    }
    out.rho = cplx(0.0, -kTwoPi) * rho_sum;
    for (std::size_t k = 0; k < g; ++k) {
        const cplx wb = sp[k] + sa[k] * std::conj(tau[k]);
        cplx f = out.t[k] * out.t[k] * wb * wb;
        for (std::size_t j = 0; j < g; ++j)
            if (j != k) f *= out.t[j] * out.t[j] * out.t[j] * w2[j];
        out.f.push_back(f);
    }
    for (std::size_t k = 0; k < g; ++k) out.h.push_back(-(out.t[k] * std::conj(tau[k]) * w[k]));
    for (std::size_t k = 0; k < g; ++k) out.h.push_back(out.t[k] * w[k]);
    const Rational arg = field.trace(field.multiply(a_prime, datum.b)) - field.trace(field.multiply(datum.b_prime, a));
    out.phase = unit_phase(arg);
    return out;
}

cplx pr_res_project(const TorsionDatum& datum, const MuTerm& term) {
    const std::size_t g = term.h.size() / 2;
    cplx r = term.scalar;
    for (std::size_t k = 0; k < g; ++k) r *= std::pow(term.h[g + k], static_cast<int>(datum.lambda));
    return r;
}

std::vector<cplx> pr_res_project(const TorsionDatum& datum, const FormEvaluation& form) {
    std::vector<cplx> out;
    for (const auto& terms : form.mu_coefficients) {
        cplx sum = 0.0;
        for (const auto& t : terms) sum += pr_res_project(datum, t);
        out.push_back(sum);
    }
    return out;
}

FormEvaluation eis_form_value(const TotallyRealField& field, const TorsionDatum& datum, const std::vector<cplx>& tau,
                              double radius) {
    const std::size_t g = field.degree();
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidInput, "radius must be positive");
    if (tau.size() != g) throw Error(ErrorCode::InvalidInput, "tau must have g entries");
    for (const auto& z : tau)
        if (!(z.imag() > 0.0)) throw Error(ErrorCode::NotUpperHalfPlane, "tau must lie in the upper half plane");

    const long l = datum.l(g);
    const int power = static_cast<int>(2 * static_cast<long>(g) + l);
    FormEvaluation out;
    out.mu_coefficients.assign(g, {});
    out.prefactor = eis_prefactor(g, l);
    out.two_pi_i_power = static_cast<long>(g);
    out.radius = radius;

    const FractionalIdeal dual = dual_ideal(field, datum.a);
    std::vector<double> a_radius(g);
    for (std::size_t k = 0; k < g; ++k) a_radius[k] = radius / tau[k].imag();
    const BoxEnumerator outer(field, datum.a, std::vector<double>(g, 0.0), a_radius);
    outer.run([&](const std::vector<long>& n, const std::vector<double>& sa) {
        const FieldElement a = outer.point(n);
        std::vector<double> center(g);
        std::vector<double> inner_radius(g);
        for (std::size_t k = 0; k < g; ++k) {
            center[k] = -sa[k] * tau[k].real();
            const double im = sa[k] * tau[k].imag();
            const double rem = radius * radius - im * im;
            inner_radius[k] = rem > 0.0 ? std::sqrt(rem) : 0.0;
        }
        const BoxEnumerator inner(field, dual, center, inner_radius);
        inner.run([&](const std::vector<long>& m, const std::vector<double>& sp) {
            double wmax = 0.0;
            for (std::size_t k = 0; k < g; ++k) wmax = std::max(wmax, std::abs(sp[k] + sa[k] * tau[k]));
            if (wmax > radius || wmax == 0.0) return;
            const FieldElement a_prime = inner.point(m);
            const EisTerm term = eis_term(field, datum, a_prime, a, tau);
            const cplx denom = std::pow(term.rho, power);
            ++out.term_count;
            for (std::size_t k = 0; k < g; ++k) {
                MuTerm mt{term.phase * term.f[k] / denom, term.h};
                if (wmax > radius / 2) out.tail_estimate += std::abs(pr_res_project(datum, mt));
                out.mu_coefficients[k].push_back(std::move(mt));
            }
        });
    });
    return out;
}

}  // namespace eisres
