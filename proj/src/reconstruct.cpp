#include "eisres/reconstruct.hpp"

namespace eisres {

std::optional<Rational> reconstruct_rational(const Real& x, const Real& error, const Integer& denom_bound) {
    if (!x.is_finite() || !error.is_finite()) return std::nullopt;
    const Rational target = x.to_rational();
    const Rational tol = abs(error.to_rational());
    Integer p_prev = 0, q_prev = 1, p_cur = 1, q_cur = 0;
    Rational r = target;
    while (true) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        Integer p = a * p_cur + p_prev;
        Integer q = a * q_cur + q_prev;
        if (q > denom_bound) return std::nullopt;
        Rational candidate(p, q);
        candidate.canonicalize();
        if (abs(target - candidate) <= tol) return candidate;
        Rational rest = r - Rational(a);
        if (rest == 0) return std::nullopt;
        r = 1 / rest;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p;
        q_cur = q;
    }
}

}  // namespace eisres
