#include "doctest.h"
#include "oracles.hpp"

#include "eisres/error.hpp"
#include "eisres/field_spec_io.hpp"
#include "eisres/lattice_enum.hpp"

#include <cmath>
#include <map>

using namespace eisres;
using oracle::Q5;

namespace {

struct Setup {
    TotallyRealField f = TotallyRealField::load(*builtin_field_spec("q_sqrt5"), 128);
    FractionalIdeal dual = inverse_different(f);
    UnitSubgroup units = unit_subgroup(f, 3);
};

const Setup& setup() {
    static const Setup s;
    return s;
}

std::map<Rational, long> library_counts(const std::vector<OrbitRep>& reps) {
    std::map<Rational, long> out;
    for (const auto& r : reps) ++out[r.abs_norm];
    return out;
}

const double kPhi = (1 + std::sqrt(5.0)) / 2;

}  // namespace

TEST_CASE("eight orbits of norm 1/5 in the inverse different") {
    const auto& s = setup();
    EnumerationParams p;
    p.norm_bound = Rational(1, 5);
    const auto reps = enumerate_orbit_reps(s.f, s.dual, s.units, p);
    long oracle_count = 0;
    oracle::q5_orbit_window(oracle::q5_inverse_different(), Q5{5, -3}, std::pow(kPhi, 8), Rational(1, 5),
                            [&](const Q5&, const mpq_class&) { ++oracle_count; });
    CHECK(oracle_count == 8);
    CHECK(reps.size() == 8);
    for (const auto& r : reps) CHECK(r.abs_norm == Rational(1, 5));
}

TEST_CASE("orbit counts per norm match the ratio-window oracle") {
    const auto& s = setup();
    const Rational bound(300);
    EnumerationParams p;
    p.norm_bound = bound;
    const auto lib = library_counts(enumerate_orbit_reps(s.f, s.dual, s.units, p));
    std::map<Rational, long> ora;
    oracle::q5_orbit_window(oracle::q5_inverse_different(), Q5{5, -3}, std::pow(kPhi, 8), bound,
                            [&](const Q5&, const mpq_class& n) { ++ora[abs(n)]; });
    CHECK(lib == ora);
}

TEST_CASE("totally positive points under U^+") {
    const auto& s = setup();
    const Rational bound(120);
    EnumerationParams p;
    p.norm_bound = bound;
    p.positivity = Positivity::TotallyPositive;
    p.action = UnitAction::Positive;
    const auto lib = library_counts(enumerate_orbit_reps(s.f, FractionalIdeal::unit(s.f), s.units, p));
    std::map<Rational, long> ora;
    // U^+ = <phi^8>; phi^-8 = 34 - 21 phi
    oracle::q5_orbit_window({Q5{1, 0}, Q5{0, 1}}, Q5{34, -21}, std::pow(kPhi, 16), bound, [&](const Q5& x, const mpq_class& n) {
        if (n > 0 && oracle::q5_trace(x) > 0) ++ora[n];
    });
    CHECK(lib == ora);
}

TEST_CASE("rational field: all integers up to the bound") {
    const auto q = TotallyRealField::load(*builtin_field_spec("q"), 128);
    EnumerationParams p;
    p.norm_bound = Rational(3);
    const auto reps = enumerate_orbit_reps(q, FractionalIdeal::unit(q), unit_subgroup(q, 3), p);
    CHECK(reps.size() == 6);
}

TEST_CASE("property: count stability across safety factor and threads") {
    const auto& s = setup();
    EnumerationParams p;
    p.norm_bound = Rational(500);
    const auto base = enumerate_orbit_reps(s.f, s.dual, s.units, p);
    p.safety = 2.5;
    const auto wide = enumerate_orbit_reps(s.f, s.dual, s.units, p);
    p.safety = 1.25;
    p.threads = 4;
    const auto threaded = enumerate_orbit_reps(s.f, s.dual, s.units, p);
    REQUIRE(base.size() == wide.size());
    REQUIRE(base.size() == threaded.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].point == wide[i].point);
        CHECK(base[i].point == threaded[i].point);
    }
}

TEST_CASE("property: reduction is idempotent and stays in the orbit") {
    const auto& s = setup();
    const FundamentalDomain dom(s.f, s.units.generators);
    oracle::SplitMix rng{23};
    for (int i = 0; i < 40; ++i) {
        QVector c{Rational(rng.range(-50, 50), rng.range(1, 7)), Rational(rng.range(-50, 50), 3)};
        for (auto& v : c) v.canonicalize();
        const auto x = s.f.element(c);
        if (x.is_zero()) continue;
        const auto [y, e] = reduce_to_fundamental_domain(s.f, s.units, x);
        CHECK(y == s.f.multiply(x, unit_product(s.f, s.units.generators, e)));
        CHECK(dom.contains(y, s.f.embed_double(y)));
        const auto [z, e2] = reduce_to_fundamental_domain(s.f, s.units, y);
        CHECK(z == y);
        for (long v : e2) CHECK(v == 0);
        // a unit multiple reduces to the same representative
        const auto w = s.f.multiply(x, s.f.power(s.units.generators[0], rng.range(-3, 3)));
        CHECK(reduce_to_fundamental_domain(s.f, s.units, w).first == y);
    }
}

TEST_CASE("box enumerator visits exactly the points in the box") {
    const auto& s = setup();
    const std::vector<double> center{0.3, -1.1}, radius{4.0, 2.5};
    const BoxEnumerator box(s.f, FractionalIdeal::unit(s.f), center, radius);
    long count = 0;
    box.run([&](const std::vector<long>&, const std::vector<double>&) { ++count; });
    long brute = 0;
    for (long u = -40; u <= 40; ++u)
        for (long v = -40; v <= 40; ++v) {
            const auto [a, b] = oracle::q5_embed({u, v});
            if (std::abs(a - center[0]) <= radius[0] && std::abs(b - center[1]) <= radius[1]) ++brute;
        }
    CHECK(count == brute);
}

TEST_CASE("invalid parameters") {
    const auto& s = setup();
    EnumerationParams p;
    p.norm_bound = 0;
    CHECK_THROWS_AS(enumerate_orbit_reps(s.f, s.dual, s.units, p), Error);
    p.norm_bound = 1;
    p.safety = 0.5;
    CHECK_THROWS_AS(enumerate_orbit_reps(s.f, s.dual, s.units, p), Error);
    CHECK_THROWS_AS(reduce_to_fundamental_domain(s.f, s.units, FieldElement::zero(2)), Error);
}
