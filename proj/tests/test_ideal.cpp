#include "doctest.h"
#include "oracles.hpp"

#include "eisres/error.hpp"
#include "eisres/field_spec_io.hpp"
#include "eisres/ideal.hpp"

#include <cmath>

using namespace eisres;

namespace {

const char* const kSqrt13 = "field-spec v1\nlabel: q_sqrt13\npoly: -3 -1 1\nintegral_basis:\n  1 0\n  0 1\n"
                            "fundamental_units:\n  1 1\n";
const char* const kCubic = "field-spec v1\nlabel: cubic81\npoly: 1 -3 0 1\nintegral_basis:\n  1 0 0\n  0 1 0\n"
                           "  0 0 1\nfundamental_units:\n  0 1 0\n  -1 1 0\n";

FieldElement random_nonzero(const TotallyRealField& f, oracle::SplitMix& rng) {
    for (;;) {
        QVector c;
        for (std::size_t i = 0; i < f.degree(); ++i) c.emplace_back(rng.range(-6, 6));
        const auto x = f.element(c);
        if (!x.is_zero()) return x;
    }
}

/// (x) + (y), scaled by a random rational.
FractionalIdeal random_ideal(const TotallyRealField& f, oracle::SplitMix& rng) {
    const auto a = ideal_sum(FractionalIdeal::principal(f, random_nonzero(f, rng)),
                             FractionalIdeal::principal(f, random_nonzero(f, rng)));
    Rational c(rng.range(1, 5), rng.range(1, 5));
    c.canonicalize();
    return a.scaled(c);
}

}  // namespace

TEST_CASE("inverse different of Q(sqrt 5)") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    const auto d = inverse_different(f);
    CHECK(d.norm() == Rational(1, 5));
    CHECK(d.to_string() == "1/5,3/5;0,1");
    QMatrix rows;
    for (const auto& b : oracle::q5_inverse_different()) rows.push_back({b.u, b.v});
    CHECK(d == lattice_from_generators(rows));
}

TEST_CASE("property: dual involution and norms") {
    oracle::SplitMix rng{5};
    for (const auto& spec : {*builtin_field_spec("q"), *builtin_field_spec("q_sqrt5"), parse_field_spec(std::string(kSqrt13)),
                             parse_field_spec(std::string(kCubic))}) {
        const auto f = TotallyRealField::load(spec, 128);
        const Rational d(f.discriminant());
        for (int i = 0; i < 20; ++i) {
            const auto a = random_ideal(f, rng);
            const auto b = random_ideal(f, rng);
            const auto ad = dual_ideal(f, a);
            CHECK(dual_ideal(f, ad) == a);
            CHECK(ad.norm() * a.norm() * d == 1);
            CHECK(ad == ideal_product(f, inverse_different(f), ideal_inverse(f, a)));
            CHECK(ideal_product(f, a, b).norm() == a.norm() * b.norm());
            CHECK(ideal_product(f, a, ideal_inverse(f, a)) == FractionalIdeal::unit(f));
            // pairing
            const auto db = dual_basis(f, a);
            for (std::size_t r = 0; r < f.degree(); ++r)
                for (std::size_t c = 0; c < f.degree(); ++c)
                    CHECK(f.trace(f.multiply(a.basis_element(r), FieldElement(db[c]))) == (r == c ? 1 : 0));
        }
    }
}

TEST_CASE("membership") {
    oracle::SplitMix rng{8};
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_nonzero(f, rng);
        const auto y = random_nonzero(f, rng);
        const auto p = FractionalIdeal::principal(f, x);
        CHECK(p.contains(f.multiply(x, y)));
        CHECK(p.norm() == abs(f.norm(x)));
        CHECK(p.is_integral());
    }
    const auto three = FractionalIdeal::principal(f, f.from_rational(3));
    CHECK_FALSE(three.contains(f.element({1, 0})));
    CHECK(three.contains(f.element({3, -6})));
}

TEST_CASE("coprimality") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    const auto p = [&](QVector c) { return FractionalIdeal::principal(f, f.element(c)); };
    CHECK(are_coprime(f, p({3}), p({2})));
    CHECK_FALSE(are_coprime(f, p({3}), p({6})));
    CHECK_FALSE(are_coprime(f, p({2, 1}), p({5})));
    CHECK(are_coprime(f, p({2, 1}), p({3})));
}

TEST_CASE("covolume") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    CHECK(covolume(f, FractionalIdeal::unit(f)).to_double() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    const auto a = FractionalIdeal::principal(f, f.element({3, 1}));
    CHECK(covolume(f, a).to_double() == doctest::Approx(11 * std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("invalid ideals") {
    const auto f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    CHECK_THROWS_AS(FractionalIdeal::from_basis(f, {{1, 0}, {0, 2}}), Error);
    CHECK_THROWS_AS(FractionalIdeal::from_basis(f, {{1, 0}, {2, 0}}), Error);
    CHECK_THROWS_AS(FractionalIdeal::principal(f, FieldElement::zero(2)), Error);
    CHECK(FractionalIdeal::from_basis(f, {{2, 0}, {0, 2}}) == FractionalIdeal::principal(f, f.from_rational(2)));
}
