#include "doctest.h"
#include "oracles.hpp"

#include "eisres/error.hpp"
#include "eisres/field_spec_io.hpp"
#include "eisres/reconstruct.hpp"
#include "eisres/residue.hpp"

#include <cmath>

using namespace eisres;

namespace {

const TotallyRealField& q() {
    static const auto f = TotallyRealField::load(*builtin_field_spec("q"), 128);
    return f;
}
const TotallyRealField& q5() {
    static const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    return f;
}

TorsionDatum datum(const TotallyRealField& f, long lambda, const Rational& b_prime = 0) {
    return {FractionalIdeal::unit(f), 3, f.from_rational(b_prime), f.from_rational(Rational(1, 3)), lambda};
}

/// For g = 2, y = |s2/s1| e^t turns the integrand into (2|N| cosh t)^{-n}, n = 2(lambda+2),
/// and int sech^n = 2^{n-1} Gamma(n/2)^2 / Gamma(n).
mpq_class k_oracle_g2(long lambda, const mpq_class& norm) {
    const long n = 2 * (lambda + 2);
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    mpq_class nn = 1;
    for (long i = 0; i < n; ++i) nn *= abs(norm);
    const mpz_class g = oracle::factorial(n / 2 - 1);
    mpq_class r(mpz_class(g * g * two_n / 2), mpz_class(two_n * oracle::factorial(n - 1)));
    r /= nn;
    r.canonicalize();
    return r;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("prefactor examples and the g = 1 identity") {
    CHECK(residue_prefactor(2, 3, 3, 1) == 144);
    CHECK(residue_prefactor(1, 4, 3, 1) == -90);
    for (long lambda = 3; lambda <= 12; ++lambda)
        for (long n = 3; n <= 7; ++n) {
            const long sign = lambda % 2 == 0 ? -1 : 1;
            CHECK(residue_prefactor(1, lambda, n, 1) == sign * (lambda + 1) * (lambda + 2) * n);
        }
    // independent factorial arithmetic
    for (long lambda = 3; lambda <= 8; ++lambda) {
        mpq_class want(oracle::factorial(lambda + 1) * oracle::factorial(lambda + 1) * (lambda + 2) * 4 * 9,
                       oracle::factorial(2 * lambda));
        want.canonicalize();
        CHECK(residue_prefactor(2, lambda, 3, 1) == want);
        CHECK(residue_prefactor(2, lambda, 3, 4) == want / 16);
    }
}

TEST_CASE("K quadrature matches the beta-function evaluation") {
    const auto& f = q5();
    for (long lambda : {3L, 4L}) {
        for (const QVector& c : {QVector{1, 0}, QVector{0, 1}, QVector{1, 1}, QVector{2, 0}, QVector{3, 1}}) {
            const auto ap = f.element(c);
            CAPTURE(lambda);
            CAPTURE(ap.to_string());
            const auto r = k_integral_quadrature(f, ap, lambda, 1e-11);
            const double want = k_oracle_g2(lambda, f.norm(ap)).get_d();
            CHECK(rel(r.value, want) < 1e-9);
        }
    }
    CHECK(k_oracle_g2(3, 1) == mpq_class(1, 1260));
}

TEST_CASE("K closed form routine and its ratio to the integral") {
    const auto& f = q5();
    const Real k = k_integral_closed_form(f, f.one(), 3, 128);
    CHECK(abs(k - Real(Rational(1, 630), 128)) < ldexp_one(-120, 128));
    const Real k4 = k_integral_closed_form(f, f.element({0, 1}), 4, 128);
    CHECK(abs(k4 - Real(Rational(14400, 39916800), 128)) < ldexp_one(-120, 128));
    // the closed form carries no Jacobian for the log coordinates; it is g times the integral
    const auto r = k_integral_quadrature(f, f.one(), 3, 1e-11);
    CHECK(r.value / k.to_double() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("property: K scales with |N(a')|^{-2(lambda+2)}") {
    const auto& f = q5();
    for (long lambda : {3L, 5L}) {
        const double k1 = k_integral_quadrature(f, f.one(), lambda, 1e-11).value;
        const double k2 = k_integral_quadrature(f, f.from_rational(2), lambda, 1e-11).value;
        CHECK(rel(k2 * std::pow(2.0, 4.0 * static_cast<double>(lambda + 2)), k1) < 1e-9);
    }
    CHECK_THROWS_AS(k_integral_quadrature(f, FieldElement::zero(2), 3), Error);
}

TEST_CASE("residue closed form is the product of its logged factors") {
    const auto& f = q5();
    ResidueOptions o;
    o.lvalue.tolerance = 1e-12;
    const auto rep = residue_closed_form(f, datum(f, 3), o);
    CHECK(rep.rational_prefactor == 144);
    CHECK(rep.discriminant == 5);
    CHECK(rep.two_pi_i_exponent == 10);
    // (2 pi i)^10 = -(2 pi)^10
    const double l = rep.l_value.value.re.to_double();
    const double want = 144.0 * l / (std::sqrt(5.0) * -std::pow(2 * M_PI, 10));
    CHECK(rep.numeric_value.re.to_double() == doctest::Approx(want).epsilon(1e-14));
    CHECK(std::abs(rep.numeric_value.im.to_double()) < 1e-30);
    CHECK(rep.error_bound < 1e-12 * std::abs(want));
}

TEST_CASE("residue certificate over Q") {
    const auto& f = q();
    ResidueOptions o;
    o.certify = true;
    const auto rep = residue_closed_form(f, datum(f, 4), o);
    REQUIRE(rep.certificate);
    // L(6) = -(2 pi i)^6 B_6(1/3)/6!, so Res = prefactor * (-B_6(1/3)/6!)
    mpq_class want = mpq_class(-90) * -oracle::bernoulli_poly(6, mpq_class(1, 3)) / mpq_class(oracle::factorial(6));
    want.canonicalize();
    CHECK(*rep.certificate == want);
    CHECK(rep.numeric_value.re.to_double() == doctest::Approx(want.get_d()).epsilon(1e-12));
}

TEST_CASE("rational reconstruction") {
    const unsigned p = 200;
    const Real third = Real(1L, p) / Real(3L, p);
    CHECK(reconstruct_rational(third, ldexp_one(-150, p), Integer(1000000)) == Rational(1, 3));
    CHECK_FALSE(reconstruct_rational(pi(p), Real(1e-50, p), Integer(1000000)).has_value());
    const Real x = Real(Rational(1093, 65610), p) + Real(1e-40, p);
    CHECK(reconstruct_rational(x, Real(1e-35, p), Integer(1000000)) == Rational(1093, 65610));
    CHECK(reconstruct_rational(Real(Rational(-7, 3), p), ldexp_one(-100, p), Integer(10)) == Rational(-7, 3));
}

TEST_CASE("Klingen-Siegel certificate over Q matches the Bernoulli value") {
    const auto& f = q();
    const auto cert = klingen_siegel_certify(f, FractionalIdeal::unit(f), 3, f.from_rational(Rational(1, 3)), 8);
    mpq_class want = -oracle::bernoulli_third(8) / mpq_class(oracle::factorial(8));
    want.canonicalize();
    CHECK(cert.value == want);
    CHECK(cert.value == Rational(-1093, 2645395200));
    CHECK(cert.runs[1].precision == 2 * cert.runs[0].precision);
    CHECK(cert.runs[1].norm_bound == 2 * cert.runs[0].norm_bound);
    for (const auto& r : cert.runs) CHECK(r.residual <= r.budget);
    auto code = [&](long lambda) {
        try {
            klingen_siegel_certify(f, FractionalIdeal::unit(f), 3, f.from_rational(Rational(1, 3)), lambda);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidInput;
    };
    CHECK(code(7) == ErrorCode::Precondition);
    CHECK(code(4) == ErrorCode::Precondition);
}

TEST_CASE("nonvanishing over Q(sqrt 5)") {
    const auto& f = q5();
    const auto r = nonvanishing_check(f, datum(f, 6));
    CHECK(r.nonzero);
    CHECK(r.margin > 10 * r.error_budget);
    auto code = [&](TorsionDatum d) {
        try {
            nonvanishing_check(d.a.degree() == 1 ? q() : f, d);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidInput;
    };
    auto bad = datum(f, 6);
    bad.b = f.one();
    CHECK(code(bad) == ErrorCode::TwistInIdeal);
    CHECK(code(datum(f, 5)) == ErrorCode::Precondition);
    CHECK(code(datum(q(), 6)) == ErrorCode::Precondition);
}

TEST_CASE("g = 1 cycle quadrature") {
    const auto& f = q();
    const auto closed = residue_closed_form(f, datum(f, 4)).numeric_value.re.to_double();
    CycleOptions o;
    const auto c1 = cycle_residue_quadrature_g1(f, datum(f, 4), o);
    o.r = 2.0;
    const auto c2 = cycle_residue_quadrature_g1(f, datum(f, 4), o);
    o.r = 1.0;
    const auto c3 = cycle_residue_quadrature_g1(f, datum(f, 4, Rational(1, 3)), o);
    CHECK(rel(c1.value.real(), closed) < 1e-4);
    CHECK(std::abs(c1.value - c2.value) < 1e-4 * std::abs(c1.value));
    CHECK(std::abs(c1.value - c3.value) < 1e-6 * std::abs(c1.value));
    CHECK(std::abs(c1.nonzero_sector) < 1e-6);
    CHECK(std::abs(c1.value.imag()) < 1e-6 * std::abs(c1.value));
    CHECK_THROWS_AS(cycle_residue_quadrature_g1(q5(), datum(q5(), 4)), Error);
}

TEST_CASE("translation invariance of single-term integrals over the real line") {
    const auto& f = q();
    const auto d = datum(f, 3);
    const double y = 1.0;
    auto integral = [&](long ap, long a) {
        cplx sum = 0;
        const double h = 0.01;
        for (double u = -9; u <= 9 + 1e-12; u += h) {
            const double x = std::sinh(u);
            const auto t = eis_term(f, d, f.from_rational(ap), f.from_rational(a), {{x, y}});
            const MuTerm mt{t.f[0] / std::pow(t.rho, 2 + static_cast<int>(d.lambda)), t.h};
            sum += pr_res_project(d, mt) * std::cosh(u) * h;
        }
        return sum;
    };
    const cplx i11 = integral(1, 1);
    const cplx i01 = integral(0, 1);
    CHECK(std::abs(i11 - i01) < 1e-6 * std::abs(i01));
    CHECK(std::abs(i01) > 0);
}
