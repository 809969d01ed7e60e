#include "eisres/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <utility>

namespace eisres {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Integer& v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::with_precision(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Rational Real::to_rational() const {
    Rational q;
    if (!is_zero()) {
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
        q = m;
        if (e >= 0)
            mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        else
            mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return q;
}

std::string Real::to_string(int digits) const {
    if (is_zero()) return "0";
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string out;
    if (mant[0] == '-') {
        out = "-";
        mant.erase(0, 1);
    }
    out += mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

namespace {
mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(joint(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

#define EISRES_UNARY(name, fn)                   \
    Real name(const Real& x) {                   \
        Real r(x.precision());                   \
        fn(r.raw(), x.raw(), MPFR_RNDN);         \
        return r;                                \
    }
EISRES_UNARY(abs, mpfr_abs)
EISRES_UNARY(sqrt, mpfr_sqrt)
EISRES_UNARY(exp, mpfr_exp)
EISRES_UNARY(log, mpfr_log)
EISRES_UNARY(sin, mpfr_sin)
EISRES_UNARY(cos, mpfr_cos)
#undef EISRES_UNARY

Real pow(const Real& x, long n) {
    Real r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real ldexp_one(long e, mpfr_prec_t prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
}

Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real abs(const Complex& z) {
    Real r(z.precision());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Complex i_power(long n, mpfr_prec_t prec) {
    long m = ((n % 4) + 4) % 4;
    switch (m) {
        case 0: return {Real(1L, prec), Real(0L, prec)};
        case 1: return {Real(0L, prec), Real(1L, prec)};
        case 2: return {Real(-1L, prec), Real(0L, prec)};
        default: return {Real(0L, prec), Real(-1L, prec)};
    }
}

Rational frac(const Rational& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

Complex exp_2pi_i(const Rational& q, mpfr_prec_t prec) {
    Rational r = frac(q);
    // Exact values at the quarter turns keep trivial characters exact.
    if (r == 0) return {Real(1L, prec), Real(0L, prec)};
    if (r == Rational(1, 2)) return {Real(-1L, prec), Real(0L, prec)};
    if (r == Rational(1, 4)) return {Real(0L, prec), Real(1L, prec)};
    if (r == Rational(3, 4)) return {Real(0L, prec), Real(-1L, prec)};
    mpfr_prec_t work = prec + 16;
    Real angle = pi(work) * Real(Rational(2 * r), work);
    Real s(work), c(work);
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {c.with_precision(prec), s.with_precision(prec)};
}

Complex pow(const Complex& z, long n) {
    Complex result{Real(1L, z.precision()), Real(0L, z.precision())};
    Complex base = z;
    bool invert = n < 0;
    unsigned long e = static_cast<unsigned long>(invert ? -n : n);
    while (e) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    if (invert) {
        Complex one{Real(1L, z.precision()), Real(0L, z.precision())};
        return one / result;
    }
    return result;
}

}  // namespace eisres
