#include "eisres/lseries.hpp"

#include "eisres/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace eisres {

namespace {

struct Term {
    std::optional<Rational> phase;  // e(phase), or 1 when absent
    Rational denominator;           // signed
};

using TermFn = std::function<Term(const OrbitRep&)>;

struct Series {
    const TotallyRealField* field;
    const FractionalIdeal* lattice;
    const UnitSubgroup* units;
    EnumerationParams params;
    long s;
    /// Scale of |term| relative to |N|^{-s}.
    double weight_scale = 1.0;
    TermFn term;
};

LValueResult sum_at(const Series& series, const Rational& x_bound, const LValueOptions& opts) {
    EnumerationParams params = series.params;
    params.norm_bound = x_bound;
    params.threads = opts.threads;
    params.safety = opts.safety;
    const auto reps = enumerate_orbit_reps(*series.field, *series.lattice, *series.units, params);

    const unsigned p = opts.precision;
    LValueResult out;
    out.precision = p;
    out.value = Complex(p);
    out.norm_bound_used = x_bound;
    out.term_count = reps.size();
    std::map<Rational, Complex> phases;
    double abs_sum = 0.0;
    for (const auto& rep : reps) {
        Term t = series.term(rep);
        const Real inv_den = Real(1L, p) / Real(t.denominator, p);
        abs_sum += std::fabs(inv_den.to_double());
        if (!t.phase) {
            out.value.re += inv_den;
            continue;
        }
        Rational q = frac(*t.phase);
        auto it = phases.find(q);
        if (it == phases.end()) it = phases.emplace(q, exp_2pi_i(q, p)).first;
        out.value += it->second * inv_den;
    }
    out.round_bound = static_cast<double>(reps.size() + series.s + 16) * std::ldexp(abs_sum, -static_cast<int>(p));

    // Tail: #{|N| <= T} ~ c T, fitted on T = X, X/2, X/4, X/8.
    const double x = x_bound.get_d();
    double c_fit = 0.0;
    for (int j = 0; j < 4; ++j) {
        const Rational t_bound = x_bound / (Rational(1) << j);
        const auto count = std::upper_bound(reps.begin(), reps.end(), t_bound,
                                            [](const Rational& v, const OrbitRep& r) { return v < r.abs_norm; }) -
                           reps.begin();
        c_fit = std::max(c_fit, static_cast<double>(count + 1) / t_bound.get_d());
    }
    const double s = static_cast<double>(series.s);
    out.trunc_bound = 4.0 * c_fit * s / (s - 1.0) * std::pow(x, 1.0 - s) * series.weight_scale;
    return out;
}

LValueResult evaluate(const Series& series, const LValueOptions& opts) {
    if (opts.fixed_norm_bound) {
        if (*opts.fixed_norm_bound <= 0) throw Error(ErrorCode::InvalidInput, "norm bound must be positive");
        return sum_at(series, *opts.fixed_norm_bound, opts);
    }
    if (opts.initial_norm_bound <= 0) throw Error(ErrorCode::InvalidInput, "norm bound must be positive");
    Rational x = opts.initial_norm_bound;
    LValueResult prev = sum_at(series, x, opts);
    for (int doublings = 1;; ++doublings) {
        x *= 2;
        if (x > opts.max_norm_bound) {
            std::ostringstream msg;
            msg << "no convergence up to norm bound " << opts.max_norm_bound.get_str() << " (last change "
                << prev.last_change << ", tail bound " << prev.trunc_bound << ")";
            throw Error(ErrorCode::NotConverged, msg.str());
        }
        LValueResult cur = sum_at(series, x, opts);
        const double change = abs(cur.value - prev.value).to_double();
        const double tol = std::max(opts.tolerance * abs(cur.value).to_double(), opts.absolute_tolerance);
        cur.last_change = change;
        cur.doublings = doublings;
        if (change < tol && cur.trunc_bound < tol) return cur;
        prev = std::move(cur);
    }
}

Rational signed_power(const Rational& v, long s) {
    Rational r = 1;
    for (long i = 0; i < s; ++i) r *= v;
    return r;
}

void require_s(long s) {
    if (s < 2) throw Error(ErrorCode::InvalidInput, "s must be an integer >= 2, got " + std::to_string(s));
}

void check_invariance(const TotallyRealField& field, const FractionalIdeal& a, const FieldElement& b, long s,
                      const std::vector<FieldElement>& gens, bool signed_norm) {
    for (const auto& eps : gens) {
        if (signed_norm && field.norm(eps) < 0 && s % 2 != 0)
            throw Error(ErrorCode::OrbitTermNotInvariant,
                        "unit " + eps.to_string() + " has norm -1 and s is odd; orbit terms change sign");
        if (!a.contains(field.multiply(eps - field.one(), b)))
            throw Error(ErrorCode::OrbitTermNotInvariant,
                        "unit " + eps.to_string() + " moves Tr(a'b) mod 1; orbit terms are not well defined");
    }
}

}  // namespace

void validate_twist(const FractionalIdeal& a, long level, const FieldElement& b) {
    if (level < 1) throw Error(ErrorCode::InvalidInput, "level must be positive");
    if (!a.contains(b * Rational(level))) throw Error(ErrorCode::InvalidInput, "b is not in N^{-1} a");
    if (a.contains(b)) throw Error(ErrorCode::TwistInIdeal, "b lies in a; the twist is trivial");
}

LValueResult lvalue(const TotallyRealField& field, const FractionalIdeal& a, long level, const FieldElement& b,
                    long s, const LValueOptions& opts) {
    require_s(s);
    validate_twist(a, level, b);
    const UnitSubgroup units = unit_subgroup(field, level);
    check_invariance(field, a, b, s, units.generators, true);
    const FractionalIdeal dual = dual_ideal(field, a);
    Series series{&field, &dual, &units, {}, s, 1.0, nullptr};
    series.params.action = UnitAction::Full;
    series.term = [&](const OrbitRep& rep) {
        return Term{field.trace(field.multiply(rep.point, b)), signed_power(rep.abs_norm * rep.norm_sign, s)};
    };
    return evaluate(series, opts);
}

LValueResult lvalue_plus(const TotallyRealField& field, const FractionalIdeal& a, long level, const FieldElement& b,
                         long s, const LValueOptions& opts) {
    require_s(s);
    validate_twist(a, level, b);
    const UnitSubgroup units = unit_subgroup(field, level);
    check_invariance(field, a, b, s, units.positive_generators, false);
    const FractionalIdeal dual = dual_ideal(field, a);
    Series series{&field, &dual, &units, {}, s, 1.0, nullptr};
    series.params.action = UnitAction::Positive;
    series.term = [&](const OrbitRep& rep) {
        return Term{field.trace(field.multiply(rep.point, b)), signed_power(rep.abs_norm, s)};
    };
    return evaluate(series, opts);
}

LValueResult partial_zeta(const TotallyRealField& field, const FractionalIdeal& b_ideal,
                          const FractionalIdeal& f_ideal, long s, const LValueOptions& opts) {
    require_s(s);
    if (!b_ideal.is_integral() || !f_ideal.is_integral())
        throw Error(ErrorCode::InvalidInput, "b and f must be integral ideals");
    if (!are_coprime(field, b_ideal, f_ideal)) throw Error(ErrorCode::NotCoprime, "b and f are not coprime");
    const UnitSubgroup units = unit_subgroup(field, f_ideal);
    const FractionalIdeal lattice = ideal_product(field, f_ideal, ideal_inverse(field, b_ideal));
    const Rational nb = b_ideal.norm();
    Series series{&field, &lattice, &units, {}, s, std::pow(nb.get_d(), -static_cast<double>(s)), nullptr};
    series.params.action = UnitAction::Positive;
    series.params.positivity = Positivity::TotallyPositive;
    series.params.shift = field.one();
    series.term = [&](const OrbitRep& rep) { return Term{std::nullopt, signed_power(rep.abs_norm * nb, s)}; };
    return evaluate(series, opts);
}

Complex character_sum(const TotallyRealField& field, const FractionalIdeal& a, const FieldElement& b, long modulus,
                      unsigned precision) {
    if (modulus < 1) throw Error(ErrorCode::InvalidInput, "modulus must be >= 1");
    const std::size_t g = field.degree();
    const FractionalIdeal dual = dual_ideal(field, a);
    std::vector<Rational> t;
    for (std::size_t j = 0; j < g; ++j) t.push_back(field.trace(field.multiply(dual.basis_element(j), b)));
    std::map<Rational, Complex> phases;
    Complex sum(precision);
    std::vector<long> n(g, 0);
    while (true) {
        Rational q = 0;
        for (std::size_t j = 0; j < g; ++j) q += t[j] * n[j];
        q = frac(q);
        auto it = phases.find(q);
        if (it == phases.end()) it = phases.emplace(q, exp_2pi_i(q, precision)).first;
        sum += it->second;
        std::size_t j = 0;
        while (j < g && ++n[j] == modulus) n[j++] = 0;
        if (j == g) break;
    }
    return sum;
}

}  // namespace eisres
