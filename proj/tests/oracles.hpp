#ifndef EISRES_TESTS_ORACLES_HPP
#define EISRES_TESTS_ORACLES_HPP

// Reference computations that share no code with the library.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline mpz_class factorial(long n) {
    mpz_class r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// B_0..B_n with B_1 = -1/2 (Akiyama-Tanigawa).
inline std::vector<mpq_class> bernoulli_numbers(long n) {
    std::vector<mpq_class> out;
    std::vector<mpq_class> a(static_cast<std::size_t>(n + 1));
    for (long m = 0; m <= n; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (long j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out.push_back(a[0]);
    }
    if (n >= 1) out[1] = mpq_class(-1, 2);
    return out;
}

inline mpq_class bernoulli_poly(long n, const mpq_class& x) {
    const auto b = bernoulli_numbers(n);
    mpq_class r = 0;
    mpq_class xp = 1;
    for (long k = n; k >= 0; --k) {
        r += mpq_class(binomial(n, k)) * b[k] * xp;
        xp *= x;
    }
    return r;
}

/// B_n(1/m) for even n from the multiplication theorem
/// sum_{k<m} B_n(k/m) = m^{1-n} B_n and B_n(1-x) = B_n(x); m = 3.
inline mpq_class bernoulli_third(long n) {
    const auto b = bernoulli_numbers(n);
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));
    mpq_class r = (mpq_class(1, 1) / mpq_class(p3) - 1) * b[n] / 2;
    r.canonicalize();
    return r;
}

/// Hurwitz zeta by Euler-Maclaurin, s > 1, a > 0.
inline long double hurwitz_zeta(long double s, long double a) {
    const int n = 40;
    long double sum = 0;
    for (int k = 0; k < n; ++k) sum += std::pow(k + a, -s);
    const long double x = n + a;
    sum += std::pow(x, 1 - s) / (s - 1) + std::pow(x, -s) / 2;
    const long double b2j[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730};
    long double rising = s;
    long double fact = 2;
    for (int j = 1; j <= 6; ++j) {
        sum += b2j[j - 1] / fact * rising * std::pow(x, -s - 2 * j + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

// Q(sqrt 5) with basis (1, phi), phi^2 = phi + 1.
struct Q5 {
    mpq_class u, v;
};

inline mpq_class q5_norm(const Q5& x) { return x.u * x.u + x.u * x.v - x.v * x.v; }
inline mpq_class q5_trace(const Q5& x) { return 2 * x.u + x.v; }
inline Q5 q5_mul(const Q5& x, const Q5& y) {
    return {x.u * y.u + x.v * y.v, x.u * y.v + x.v * y.u + x.v * y.v};
}
/// Ascending embeddings.
inline std::pair<double, double> q5_embed(const Q5& x) {
    const double r5 = std::sqrt(5.0);
    const double p1 = (1 - r5) / 2, p2 = (1 + r5) / 2;
    return {x.u.get_d() + x.v.get_d() * p1, x.u.get_d() + x.v.get_d() * p2};
}
/// |sigma_2(x)| >= |sigma_1(x)|, exactly.
inline bool q5_ratio_at_least_one(const Q5& x) { return x.v * (2 * x.u + x.v) >= 0; }

/// Visits each orbit of nonzero points of the lattice spanned by `basis`
/// under <unit> once, where multiplication by `unit` scales
/// |sigma_2 / sigma_1| by unit_ratio > 1: the window 1 <= |ratio| < unit_ratio.
/// `unit_inverse` maps the window's upper edge back to ratio one.
template <class F>
void q5_orbit_window(const std::vector<Q5>& basis, const Q5& unit_inverse, double unit_ratio, const mpq_class& bound,
                     F visit) {
    const double r5 = std::sqrt(5.0);
    const double p1 = (1 - r5) / 2;
    const double x = bound.get_d();
    const double s1max = std::sqrt(x), s2max = std::sqrt(x * unit_ratio);
    // (u, v) -> (m, n) with (u, v) = m b0 + n b1
    const double det = basis[0].u.get_d() * basis[1].v.get_d() - basis[0].v.get_d() * basis[1].u.get_d();
    double mmax = 0, nmax = 0;
    for (int i = -1; i <= 1; i += 2)
        for (int j = -1; j <= 1; j += 2) {
            const double s1 = i * s1max, s2 = j * s2max;
            const double v = (s2 - s1) / r5;
            const double u = s1 - v * p1;
            const double m = (u * basis[1].v.get_d() - v * basis[1].u.get_d()) / det;
            const double n = (basis[0].u.get_d() * v - basis[0].v.get_d() * u) / det;
            mmax = std::max(mmax, std::abs(m));
            nmax = std::max(nmax, std::abs(n));
        }
    const long mb = static_cast<long>(mmax) + 2, nb = static_cast<long>(nmax) + 2;
    for (long m = -mb; m <= mb; ++m)
        for (long n = -nb; n <= nb; ++n) {
            if (m == 0 && n == 0) continue;
            const Q5 p{m * basis[0].u + n * basis[1].u, m * basis[0].v + n * basis[1].v};
            const mpq_class nm = q5_norm(p);
            if (abs(nm) > bound) continue;
            if (!q5_ratio_at_least_one(p)) continue;
            if (q5_ratio_at_least_one(q5_mul(p, unit_inverse))) continue;
            visit(p, nm);
        }
}

/// Trace dual of O: (1/sqrt 5) O.
inline std::vector<Q5> q5_inverse_different() { return {{mpq_class(-1, 5), mpq_class(2, 5)}, {mpq_class(2, 5), mpq_class(1, 5)}}; }

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace oracle

#endif
