#include "eisres/units.hpp"

#include "eisres/error.hpp"

#include <map>

namespace eisres {

namespace {

constexpr std::size_t kMaxQuotientOrder = 5'000'000;

class ResidueRing {
  public:
    ResidueRing(const TotallyRealField& field, const FractionalIdeal& modulus) : field_(field) {
        for (const auto& row : modulus.basis()) {
            ZVector z;
            for (const auto& x : row) z.push_back(x.get_num());
            hnf_.push_back(std::move(z));
        }
        hnf_ = hermite_normal_form(hnf_);
    }

    ZVector reduce(const FieldElement& x) const {
        ZVector z;
        for (const auto& c : x.coords()) z.push_back(c.get_num());
        return reduce_mod_hnf(std::move(z), hnf_);
    }

    ZVector mul(const ZVector& a, const ZVector& b) const { return reduce(field_.multiply(lift(a), lift(b))); }

    static FieldElement lift(const ZVector& a) {
        QVector q(a.begin(), a.end());
        return FieldElement(std::move(q));
    }

  private:
    const TotallyRealField& field_;
    ZMatrix hnf_;
};

/// Relation lattice of the map Z^k -> (O/f)^x sending e_i to gens[i],
/// built by extending an explicitly enumerated subgroup one generator at a
/// time. Row i is m_i e_i - (exponents of gens[i]^{m_i} in the previous
/// subgroup), so the rows form a triangular basis.
ZMatrix relation_lattice(const ResidueRing& ring, const std::vector<ZVector>& gens, const ZVector& one) {
    const std::size_t k = gens.size();
    std::map<ZVector, ZVector> subgroup{{one, ZVector(k, Integer(0))}};
    ZMatrix relations;
    for (std::size_t i = 0; i < k; ++i) {
        ZVector x = gens[i];
        long m = 1;
        while (subgroup.find(x) == subgroup.end()) {
            x = ring.mul(x, gens[i]);
            if (++m > static_cast<long>(kMaxQuotientOrder))
                throw Error(ErrorCode::InvalidInput, "unit image in (O/f)^x is too large to enumerate");
        }
        ZVector rel(k, Integer(0));
        const ZVector& prev = subgroup.at(x);
        for (std::size_t j = 0; j < k; ++j) rel[j] = -prev[j];
        rel[i] += m;
        relations.push_back(rel);

        std::map<ZVector, ZVector> extended;
        for (const auto& [elt, expo] : subgroup) {
            ZVector y = elt;
            ZVector e = expo;
            for (long j = 0; j < m; ++j) {
                extended.emplace(y, e);
                y = ring.mul(y, gens[i]);
                e[i] += 1;
            }
        }
        if (extended.size() > kMaxQuotientOrder)
            throw Error(ErrorCode::InvalidInput, "unit image in (O/f)^x is too large to enumerate");
        subgroup = std::move(extended);
    }
    return relations;
}

std::vector<long> to_longs(const ZVector& v) {
    std::vector<long> out;
    for (const auto& x : v) {
        if (!x.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "unit exponent overflow");
        out.push_back(x.get_si());
    }
    return out;
}

}  // namespace

FieldElement unit_product(const TotallyRealField& field, const std::vector<FieldElement>& units,
                          const std::vector<long>& exponents) {
    FieldElement r = field.one();
    for (std::size_t i = 0; i < units.size(); ++i)
        if (exponents[i] != 0) r = field.multiply(r, field.power(units[i], exponents[i]));
    return r;
}

bool is_congruent_to_one(const TotallyRealField& field, const FieldElement& x, const FractionalIdeal& modulus) {
    return modulus.contains(x - field.one());
}

Real regulator_of(const TotallyRealField& field, const std::vector<FieldElement>& units) {
    const unsigned p = field.precision();
    const std::size_t n = units.size();
    if (n == 0) return Real(1L, p);
    std::vector<std::vector<Real>> m;
    for (const auto& u : units) {
        auto s = field.embed(u);
        std::vector<Real> row;
        for (std::size_t k = 0; k < n; ++k) row.push_back(log(abs(s[k])));
        m.push_back(std::move(row));
    }
    Real det(1L, p);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
        std::swap(m[piv], m[c]);
        if (m[c][c].is_zero()) return Real(0L, p);
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Real f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return abs(det);
}

UnitSubgroup unit_subgroup(const TotallyRealField& field, long level) {
    if (level < 3) throw Error(ErrorCode::LevelTooSmall, "level must be at least 3, got " + std::to_string(level));
    QMatrix rows = identity_matrix(field.degree());
    for (auto& r : rows)
        for (auto& x : r) x *= level;
    UnitSubgroup u = unit_subgroup(field, lattice_from_generators(rows));
    u.level = level;
    return u;
}

UnitSubgroup unit_subgroup(const TotallyRealField& field, const FractionalIdeal& modulus) {
    const std::size_t g = field.degree();
    if (!modulus.is_integral()) throw Error(ErrorCode::InvalidInput, "unit modulus must be an integral ideal");
    if (modulus.contains(field.from_rational(2)))
        throw Error(ErrorCode::LevelTooSmall, "-1 is congruent to 1 modulo the given ideal");

    UnitSubgroup out;
    out.regulator = Real(1L, field.precision());
    if (g == 1) return out;

    ResidueRing ring(field, modulus);
    std::vector<FieldElement> base{-field.one()};
    for (std::size_t i = 0; i + 1 < g; ++i) base.push_back(field.fundamental_unit(i));
    std::vector<ZVector> gens;
    for (const auto& b : base) gens.push_back(ring.reduce(b));
    ZMatrix relations = relation_lattice(ring, gens, ring.reduce(field.one()));

    // Drop the sign coordinate: -1 is not congruent to 1, so each projected
    // kernel vector lifts to exactly one unit of U_f.
    ZMatrix projected;
    for (const auto& r : relations) projected.emplace_back(r.begin() + 1, r.end());
    ZMatrix basis = hermite_normal_form(projected);
    if (basis.size() != g - 1) throw Error(ErrorCode::InvalidInput, "unit kernel has unexpected rank");

    std::vector<FieldElement> fundamentals(base.begin() + 1, base.end());
    for (const auto& v : basis) {
        FieldElement eps = unit_product(field, fundamentals, to_longs(v));
        if (!is_congruent_to_one(field, eps, modulus)) eps = -eps;
        if (!is_congruent_to_one(field, eps, modulus))
            throw Error(ErrorCode::InvalidInput, "internal: kernel vector does not lift to U_f");
        out.generators.push_back(eps);
    }

    // Totally positive part: kernel of the sign map Z^{g-1} -> F_2^g.
    std::vector<std::vector<int>> signs;
    for (const auto& eps : out.generators) {
        auto s = embedding_signs(field, eps);
        std::vector<int> bits;
        for (int x : s) bits.push_back(x < 0 ? 1 : 0);
        signs.push_back(bits);
    }
    const std::size_t n = g - 1;
    ZMatrix positive_rows;
    std::size_t kernel_size = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        bool in_kernel = true;
        for (std::size_t k = 0; k < g && in_kernel; ++k) {
            int parity = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1UL << i)) parity ^= signs[i][k];
            in_kernel = parity == 0;
        }
        if (!in_kernel) continue;
        ++kernel_size;
        ZVector v(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1UL;
        positive_rows.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
        ZVector v(n, Integer(0));
        v[i] = 2;
        positive_rows.push_back(v);
    }
    out.tp_index = static_cast<long>((1UL << n) / kernel_size);
    for (const auto& v : hermite_normal_form(positive_rows))
        out.positive_generators.push_back(unit_product(field, out.generators, to_longs(v)));
    out.regulator = regulator_of(field, out.generators);
    return out;
}

}  // namespace eisres
