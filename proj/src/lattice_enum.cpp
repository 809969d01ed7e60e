#include "eisres/lattice_enum.hpp"

#include "eisres/error.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace eisres {

namespace {

constexpr unsigned kHighPrecision = 256;
constexpr double kBorderline = 1e-9;

std::vector<std::vector<double>> invert(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        if (m[piv][c] == 0.0) throw Error(ErrorCode::SingularGram, "singular embedding matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        const double d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0.0) continue;
            const double f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

std::vector<std::vector<Real>> invert(std::vector<std::vector<Real>> m, unsigned prec) {
    const std::size_t n = m.size();
    std::vector<std::vector<Real>> inv(n, std::vector<Real>(n, Real(0L, prec)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Real(1L, prec);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
        if (m[piv][c].is_zero()) throw Error(ErrorCode::SingularGram, "singular unit log matrix");
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        const Real d = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            const Real f = m[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

long floor_to_long(double v) {
    if (!std::isfinite(v) || std::fabs(v) > 9e15) throw Error(ErrorCode::InvalidInput, "enumeration box too large");
    return static_cast<long>(std::floor(v));
}

}  // namespace

BoxEnumerator::BoxEnumerator(const TotallyRealField& field, const FractionalIdeal& lattice,
                             const std::vector<double>& center, const std::vector<double>& radius,
                             const std::optional<FieldElement>& shift)
    : g_(field.degree()), basis_(lattice.basis()), shift_(shift), center_(center), radius_(radius) {
    if (center.size() != g_ || radius.size() != g_) throw Error(ErrorCode::InvalidInput, "box dimension mismatch");
    for (std::size_t j = 0; j < g_; ++j) embed_.push_back(field.embed_double(lattice.basis_element(j)));
    shift_sigma_ = shift ? field.embed_double(*shift) : std::vector<double>(g_, 0.0);
    const auto inv = invert(embed_);
    for (std::size_t j = 0; j < g_; ++j) {
        double mid = 0.0;
        double half = 0.0;
        for (std::size_t k = 0; k < g_; ++k) {
            mid += (center_[k] - shift_sigma_[k]) * inv[k][j];
            half += radius_[k] * std::fabs(inv[k][j]);
        }
        const double slack = 1e-9 * (1.0 + std::fabs(mid) + half);
        ranges_.emplace_back(-floor_to_long(-(mid - half - slack)), floor_to_long(mid + half + slack));
    }
    outer_min_ = ranges_[0].first;
    outer_max_ = ranges_[0].second;
}

FieldElement BoxEnumerator::point(const std::vector<long>& n) const {
    QVector c = shift_ ? shift_->coords() : QVector(g_, Rational(0));
    for (std::size_t j = 0; j < g_; ++j)
        if (n[j] != 0)
            for (std::size_t i = 0; i < g_; ++i) c[i] += basis_[j][i] * n[j];
    return FieldElement(std::move(c));
}

void BoxEnumerator::run(long lo, long hi, const Visitor& visit) const {
    std::vector<long> n(g_, 0);
    std::vector<double> partial(g_, 0.0);
    descend(0, std::max(lo, outer_min_), std::min(hi, outer_max_), n, partial, visit);
}

void BoxEnumerator::descend(std::size_t j, long lo, long hi, std::vector<long>& n, std::vector<double>& partial,
                            const Visitor& visit) const {
    if (j + 1 == g_) {
        // Solve the last coordinate exactly against every embedding.
        double a = -INFINITY;
        double b = INFINITY;
        for (std::size_t k = 0; k < g_; ++k) {
            const double base = partial[k] + shift_sigma_[k] - center_[k];
            const double step = embed_[j][k];
            if (step == 0.0) {
                if (std::fabs(base) > radius_[k]) return;
                continue;
            }
            double u = (-radius_[k] - base) / step;
            double v = (radius_[k] - base) / step;
            if (u > v) std::swap(u, v);
            a = std::max(a, u);
            b = std::min(b, v);
        }
        const double slack = 1e-9 * (1.0 + std::fabs(a) + std::fabs(b));
        lo = std::max(lo, -floor_to_long(-(a - slack)));
        hi = std::min(hi, floor_to_long(b + slack));
        std::vector<double> sigma(g_);
        for (long v = lo; v <= hi; ++v) {
            n[j] = v;
            bool inside = true;
            for (std::size_t k = 0; k < g_; ++k) {
                sigma[k] = partial[k] + v * embed_[j][k] + shift_sigma_[k];
                if (std::fabs(sigma[k] - center_[k]) > radius_[k] * (1.0 + 1e-12)) inside = false;
            }
            if (inside) visit(n, sigma);
        }
        n[j] = 0;
        return;
    }
    for (long v = lo; v <= hi; ++v) {
        n[j] = v;
        for (std::size_t k = 0; k < g_; ++k) partial[k] += v * embed_[j][k];
        descend(j + 1, ranges_[j + 1].first, ranges_[j + 1].second, n, partial, visit);
        for (std::size_t k = 0; k < g_; ++k) partial[k] -= v * embed_[j][k];
    }
    n[j] = 0;
}

FundamentalDomain::FundamentalDomain(const TotallyRealField& field, std::vector<FieldElement> generators)
    : field_(&field), gens_(std::move(generators)) {
    const std::size_t r = gens_.size();
    if (r == 0) return;
    if (r + 1 != field.degree()) throw Error(ErrorCode::InvalidInput, "fundamental domain needs g-1 generators");
    std::vector<std::vector<double>> m;
    std::vector<std::vector<Real>> mhp;
    for (const auto& e : gens_) {
        auto s = field.embed_double(e);
        auto shp = field.embed(e, kHighPrecision);
        std::vector<double> row;
        std::vector<Real> rowhp;
        for (std::size_t k = 0; k < field.degree(); ++k) {
            row.push_back(std::log(std::fabs(s[k])));
            rowhp.push_back(log(abs(shp[k])));
        }
        logs_.push_back(row);
        row.resize(r);
        rowhp.resize(r, Real(0L, kHighPrecision));
        m.push_back(row);
        mhp.push_back(rowhp);
    }
    solve_ = invert(m);
    solve_hp_ = invert(mhp, kHighPrecision);
}

std::vector<double> FundamentalDomain::coordinates(const std::vector<double>& sigma) const {
    const std::size_t r = gens_.size();
    const std::size_t g = sigma.size();
    std::vector<double> l(g);
    double mean = 0.0;
    for (std::size_t k = 0; k < g; ++k) {
        l[k] = std::log(std::fabs(sigma[k]));
        mean += l[k];
    }
    mean /= static_cast<double>(g);
    std::vector<double> c(r, 0.0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) c[i] += (l[k] - mean) * solve_[k][i];
    return c;
}

std::vector<long> FundamentalDomain::floor_coordinates(const FieldElement& x, const std::vector<double>& sigma) const {
    const std::size_t r = gens_.size();
    if (r == 0) return {};
    const auto c = coordinates(sigma);
    std::vector<long> n(r);
    for (std::size_t i = 0; i < r; ++i) {
        const double v = c[i] + kOffset;
        if (!std::isfinite(v) || std::fabs(v - std::nearbyint(v)) < kBorderline) return floor_high_precision(x);
        n[i] = floor_to_long(v);
    }
    return n;
}

std::vector<long> FundamentalDomain::floor_coordinates(const FieldElement& x) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot reduce zero");
    return floor_coordinates(x, field_->embed_double(x));
}

std::vector<long> FundamentalDomain::floor_high_precision(const FieldElement& x) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot reduce zero");
    const std::size_t r = gens_.size();
    const std::size_t g = field_->degree();
    auto s = field_->embed(x, kHighPrecision);
    std::vector<Real> l;
    Real mean(0L, kHighPrecision);
    for (std::size_t k = 0; k < g; ++k) {
        l.push_back(log(abs(s[k])));
        mean += l.back();
    }
    mean /= Real(static_cast<long>(g), kHighPrecision);
    const Real delta(kOffset, kHighPrecision);
    std::vector<long> n(r);
    for (std::size_t i = 0; i < r; ++i) {
        Real c(0L, kHighPrecision);
        for (std::size_t k = 0; k < r; ++k) c += (l[k] - mean) * solve_hp_[k][i];
        c += delta;
        mpfr_floor(c.raw(), c.raw());
        n[i] = mpfr_get_si(c.raw(), MPFR_RNDN);
    }
    return n;
}

bool FundamentalDomain::contains(const FieldElement& x, const std::vector<double>& sigma) const {
    for (long v : floor_coordinates(x, sigma))
        if (v != 0) return false;
    return true;
}

std::vector<double> FundamentalDomain::log_excess() const {
    const std::size_t g = field_->degree();
    std::vector<double> out(g, 0.0);
    for (const auto& row : logs_)
        for (std::size_t k = 0; k < g; ++k) out[k] += std::max(-kOffset * row[k], (1.0 - kOffset) * row[k]);
    return out;
}

std::pair<FieldElement, std::vector<long>> reduce_to_fundamental_domain(const TotallyRealField& field,
                                                                        const std::vector<FieldElement>& generators,
                                                                        const FieldElement& x) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot reduce zero");
    FundamentalDomain dom(field, generators);
    std::vector<long> e = dom.floor_coordinates(x);
    for (auto& v : e) v = -v;
    return {field.multiply(x, unit_product(field, generators, e)), e};
}

std::pair<FieldElement, std::vector<long>> reduce_to_fundamental_domain(const TotallyRealField& field,
                                                                        const UnitSubgroup& units,
                                                                        const FieldElement& x) {
    return reduce_to_fundamental_domain(field, units.generators, x);
}

std::vector<OrbitRep> enumerate_orbit_reps(const TotallyRealField& field, const FractionalIdeal& lattice,
                                           const UnitSubgroup& units, const EnumerationParams& params) {
    if (params.norm_bound <= 0) throw Error(ErrorCode::InvalidInput, "norm bound must be positive");
    if (!(params.safety >= 1.0)) throw Error(ErrorCode::InvalidInput, "safety factor must be at least 1");
    const std::size_t g = field.degree();
    const FundamentalDomain dom(field,
                                params.action == UnitAction::Full ? units.generators : units.positive_generators);
    const double x_bound = params.norm_bound.get_d();
    const double base = std::pow(x_bound, 1.0 / static_cast<double>(g));
    const auto excess = dom.log_excess();
    std::vector<double> radius(g);
    for (std::size_t k = 0; k < g; ++k) radius[k] = base * std::exp(excess[k]) * params.safety;
    const BoxEnumerator box(field, lattice, std::vector<double>(g, 0.0), radius, params.shift);

    auto visit_range = [&](long lo, long hi, std::vector<OrbitRep>& out) {
        box.run(lo, hi, [&](const std::vector<long>& n, const std::vector<double>& sigma) {
            double approx = 1.0;
            for (double s : sigma) approx *= std::fabs(s);
            if (approx > x_bound * (1.0 + 1e-9)) return;
            if (params.positivity == Positivity::TotallyPositive) {
                bool negative = false;
                bool unsure = false;
                for (double s : sigma) {
                    if (s < -1e-9) negative = true;
                    else if (s <= 1e-9) unsure = true;
                }
                if (negative) return;
                if (unsure) {
                    FieldElement x = box.point(n);
                    if (x.is_zero() || !is_totally_positive(field, x)) return;
                }
            }
            FieldElement x = box.point(n);
            if (x.is_zero()) return;
            if (!dom.contains(x, sigma)) return;
            Rational nn = field.norm(x);
            Rational an = abs(nn);
            if (an > params.norm_bound) return;
            OrbitRep rep;
            rep.point = std::move(x);
            rep.abs_norm = an;
            rep.norm_sign = sgn(nn);
            for (double s : sigma) rep.log_vector.push_back(std::log(std::fabs(s)));
            out.push_back(std::move(rep));
        });
    };

    std::vector<OrbitRep> reps;
    const long lo = box.outer_min();
    const long hi = box.outer_max();
    const unsigned threads = std::max(1U, params.threads);
    if (threads == 1 || hi - lo < static_cast<long>(threads)) {
        visit_range(lo, hi, reps);
    } else {
        std::vector<std::vector<OrbitRep>> parts(threads);
        std::vector<std::thread> pool;
        const long span = hi - lo + 1;
        for (unsigned t = 0; t < threads; ++t) {
            const long a = lo + span * t / threads;
            const long b = lo + span * (t + 1) / threads - 1;
            pool.emplace_back([&, a, b, t] { visit_range(a, b, parts[t]); });
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts)
            for (auto& r : p) reps.push_back(std::move(r));
    }
    std::sort(reps.begin(), reps.end(), [](const OrbitRep& a, const OrbitRep& b) {
        if (a.abs_norm != b.abs_norm) return a.abs_norm < b.abs_norm;
        return a.point < b.point;
    });
    return reps;
}

}  // namespace eisres
