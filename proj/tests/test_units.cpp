#include "doctest.h"
#include "oracles.hpp"

#include "eisres/error.hpp"
#include "eisres/field_spec_io.hpp"
#include "eisres/units.hpp"

#include <cmath>

using namespace eisres;
using oracle::Q5;

namespace {

const char* const kCubic = "field-spec v1\nlabel: cubic81\npoly: 1 -3 0 1\nintegral_basis:\n  1 0 0\n  0 1 0\n"
                           "  0 0 1\nfundamental_units:\n  0 1 0\n  -1 1 0\n";

/// phi^k = F_{k-1} + F_k phi.
Q5 phi_power(long k) {
    mpz_class a = 1, b = 0;  // F_{-1}, F_0
    for (long i = 0; i < k; ++i) {
        mpz_class c = a + b;
        a = b;
        b = c;
    }
    return {mpq_class(a), mpq_class(b)};
}

bool integral(const Q5& x) { return x.u.get_den() == 1 && x.v.get_den() == 1; }

/// x = 1 mod (m), via (x - 1) / m integral.
bool one_mod(const Q5& x, const Q5& m) {
    const mpq_class n = oracle::q5_norm(m);
    const Q5 inv{(m.u + m.v) / n, -m.v / n};
    return integral(oracle::q5_mul({x.u - 1, x.v}, inv));
}

struct Minimal {
    long k;
    int sign;
};

/// Least k > 0 with +-phi^k = 1 mod (m).
Minimal minimal_unit(const Q5& m) {
    for (long k = 1;; ++k) {
        const Q5 p = phi_power(k);
        if (one_mod(p, m)) return {k, 1};
        if (one_mod({-p.u, -p.v}, m)) return {k, -1};
    }
}

bool matches(const FieldElement& e, const Minimal& m) {
    const Q5 p = phi_power(m.k);
    const FieldElement x({p.u * m.sign, p.v * m.sign});
    return e == x;
}

}  // namespace

TEST_CASE("U_{L,3} of Q(sqrt 5)") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    const auto u = unit_subgroup(f, 3);
    REQUIRE(u.generators.size() == 1);
    const auto& e = u.generators[0];
    const FieldElement minus_phi4({-2, -3});
    CHECK((e == minus_phi4 || e == f.inverse(minus_phi4)));
    CHECK(u.tp_index == 2);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(u.regulator.to_double() - 4 * std::log(phi)) < 1e-12);
    REQUIRE(u.positive_generators.size() == 1);
    const auto p8 = f.power(f.element({0, 1}), 8);
    CHECK((u.positive_generators[0] == p8 || u.positive_generators[0] == f.inverse(p8)));
}

TEST_CASE("generators agree with brute-force minimal units") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    const double logphi = std::log((1 + std::sqrt(5.0)) / 2);
    for (long level : {3L, 4L, 5L, 7L, 9L, 11L, 12L}) {
        CAPTURE(level);
        const auto m = minimal_unit({mpq_class(level), 0});
        const auto u = unit_subgroup(f, level);
        REQUIRE(u.generators.size() == 1);
        const auto& e = u.generators[0];
        CHECK((matches(e, m) || matches(f.inverse(e), m)));
        const bool positive = m.sign > 0 && m.k % 2 == 0;
        CHECK(u.tp_index == (positive ? 1 : 2));
        CHECK(std::abs(u.regulator.to_double() - m.k * logphi) < 1e-10);
        CHECK(is_congruent_to_one(f, e, FractionalIdeal::principal(f, f.from_rational(level))));
        CHECK(is_totally_positive(f, u.positive_generators[0]));
    }
}

TEST_CASE("general modulus") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    for (const Q5& m : {Q5{-1, 2}, Q5{3, 1}, Q5{4, 1}, Q5{7, 0}}) {
        CAPTURE(m.u.get_str());
        CAPTURE(m.v.get_str());
        const auto mod = FractionalIdeal::principal(f, f.element({m.u, m.v}));
        const auto want = minimal_unit(m);
        const auto u = unit_subgroup(f, mod);
        REQUIRE(u.generators.size() == 1);
        CHECK((matches(u.generators[0], want) || matches(f.inverse(u.generators[0]), want)));
        CHECK(u.level == 0);
    }
}

TEST_CASE("rational field and cubic field") {
    const auto q = TotallyRealField::load(*builtin_field_spec("q"), 128);
    const auto uq = unit_subgroup(q, 5);
    CHECK(uq.generators.empty());
    CHECK(uq.tp_index == 1);
    CHECK(uq.regulator.to_double() == 1.0);

    const auto c = TotallyRealField::load(parse_field_spec(std::string(kCubic)), 128);
    const auto uc = unit_subgroup(c, 3);
    REQUIRE(uc.generators.size() == 2);
    const auto three = FractionalIdeal::principal(c, c.from_rational(3));
    for (const auto& e : uc.generators) {
        CHECK(abs(c.norm(e)) == 1);
        CHECK(is_congruent_to_one(c, e, three));
    }
    for (const auto& e : uc.positive_generators) CHECK(is_totally_positive(c, e));
    CHECK(uc.regulator.to_double() > 0.0);
    const long idx = uc.tp_index;
    CHECK((idx == 1 || idx == 2 || idx == 4));
    // index of U_3 in U divides |(O/3)^x|
    const double ratio = uc.regulator.to_double() / regulator_of(c, {c.element({0, 1}), c.element({-1, 1})}).to_double();
    CHECK(std::abs(ratio - std::round(ratio)) < 1e-9);
}

TEST_CASE("errors and helpers") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    CHECK_THROWS_AS(unit_subgroup(f, 2), Error);
    try {
        unit_subgroup(f, 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LevelTooSmall);
    }
    const auto two = FractionalIdeal::principal(f, f.from_rational(2));
    CHECK_THROWS_AS(unit_subgroup(f, two), Error);
    const auto phi = f.element({0, 1});
    CHECK(unit_product(f, {phi}, {4}) == f.element({2, 3}));
    CHECK(unit_product(f, {phi}, {-1}) == f.element({-1, 1}));
}
