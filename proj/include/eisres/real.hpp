#ifndef EISRES_REAL_HPP
#define EISRES_REAL_HPP

// Arbitrary-precision real and complex numbers on top of MPFR.
//
// Every Real carries its own precision. Binary operations produce a result
// at the larger of the two operand precisions, so mixing is well defined and
// nothing depends on process-global state.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace eisres {

using Integer = mpz_class;
using Rational = mpq_class;

class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(double v, mpfr_prec_t prec);
    Real(long v, mpfr_prec_t prec);
    Real(int v, mpfr_prec_t prec) : Real(static_cast<long>(v), prec) {}
    Real(const Integer& v, mpfr_prec_t prec);
    Real(const Rational& v, mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Copy rounded to a new precision.
    Real with_precision(mpfr_prec_t prec) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Exact conversion (MPFR values are dyadic rationals).
    Rational to_rational() const;
    /// Scientific notation with `digits` significant digits; deterministic.
    std::string to_string(int digits) const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real operator-() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

Real pi(mpfr_prec_t prec);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real pow(const Real& x, long n);
/// 2^e at the given precision.
Real ldexp_one(long e, mpfr_prec_t prec);

struct Complex {
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return re.precision(); }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& b) { return a *= b; }
    friend Complex operator/(const Complex& a, const Complex& b);
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
/// i^n as an exact complex unit.
Complex i_power(long n, mpfr_prec_t prec);
/// exp(2 pi i q) for an exact rational q; q is reduced mod 1 exactly first.
Complex exp_2pi_i(const Rational& q, mpfr_prec_t prec);
Complex pow(const Complex& z, long n);

/// q mod 1 in [0, 1), exact.
Rational frac(const Rational& q);

}  // namespace eisres

#endif
