#include "eisres/field.hpp"

#include "eisres/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace eisres {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

QPoly remainder(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational evaluate(const QPoly& p, const Rational& x) {
    Rational v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

class SturmChain {
  public:
    explicit SturmChain(const QPoly& p) {
        chain_.push_back(p);
        chain_.push_back(derivative(p));
        while (!chain_.back().empty()) {
            QPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
            for (auto& c : r) c = -c;
            if (r.empty()) break;
            chain_.push_back(std::move(r));
        }
    }

    int sign_changes(const Rational& x) const {
        int changes = 0;
        int last = 0;
        for (const auto& q : chain_) {
            int s = sgn(evaluate(q, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Number of distinct real roots in (lo, hi].
    int count(const Rational& lo, const Rational& hi) const { return sign_changes(lo) - sign_changes(hi); }

  private:
    std::vector<QPoly> chain_;
};

struct Interval {
    Rational lo, hi;
};

std::vector<Interval> isolate_roots(const QPoly& p, const SturmChain& sturm) {
    Rational bound = 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max<Rational>(bound, Rational(abs(p[i])) + 1);
    std::vector<Interval> pending{{-bound, bound}};
    std::vector<Interval> out;
    while (!pending.empty()) {
        Interval iv = pending.back();
        pending.pop_back();
        int n = sturm.count(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        pending.push_back({iv.lo, mid});
        pending.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

Interval refine_root(Interval iv, const QPoly& p, const SturmChain* sturm, unsigned bits) {
    const Rational width = Rational(1) / (Rational(Integer(1) << (bits + 8)));
    // Once p changes sign strictly across the bracket, plain bisection on
    // the sign of p is enough and much cheaper than Sturm counts.
    int slo = sgn(evaluate(p, iv.lo));
    int shi = sgn(evaluate(p, iv.hi));
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (slo != 0 && shi != 0 && slo != shi) {
            int sm = sgn(evaluate(p, mid));
            if (sm == 0) return {mid, mid};
            if (sm == slo)
                iv.lo = mid;
            else
                iv.hi = mid;
            continue;
        }
        if (sturm->count(iv.lo, mid) == 1) {
            iv.hi = mid;
            shi = sgn(evaluate(p, iv.hi));
            if (shi == 0) return {mid, mid};
        } else {
            iv.lo = mid;
            slo = sgn(evaluate(p, iv.lo));
        }
    }
    return iv;
}

Real midpoint(const Interval& iv, unsigned bits) { return Real(Rational((iv.lo + iv.hi) / 2), bits); }

std::vector<std::vector<Real>> evaluate_basis(const QMatrix& basis, const std::vector<Real>& roots, unsigned bits) {
    const std::size_t g = roots.size();
    std::vector<std::vector<Real>> out(g, std::vector<Real>(g, Real(static_cast<mpfr_prec_t>(bits))));
    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t j = 0; j < g; ++j) {
            Real v(0L, bits);
            Real pw(1L, bits);
            for (std::size_t m = 0; m < g; ++m) {
                if (basis[j][m] != 0) v += Real(basis[j][m], bits) * pw;
                pw *= roots[k];
            }
            out[k][j] = v;
        }
    return out;
}

QPoly mul_mod(const QPoly& a, const QPoly& b, const QPoly& modulus) {
    QPoly prod(a.size() + b.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    return remainder(prod, modulus);
}

}  // namespace

bool FieldElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& x : r.coords_) x = -x;
    return r;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
    return os.str();
}

TotallyRealField TotallyRealField::load(const FieldSpec& spec, unsigned precision_bits) {
    if (spec.poly.size() < 2 || spec.poly.back() != 1)
        throw Error(ErrorCode::NotMonic, "defining polynomial must be monic of degree >= 1");
    TotallyRealField f;
    f.spec_ = spec;
    f.g_ = spec.poly.size() - 1;
    f.precision_ = std::max(precision_bits, 53U);
    const std::size_t g = f.g_;

    QPoly p(spec.poly.begin(), spec.poly.end());
    if (gcd(p, derivative(p)).size() > 1)
        throw Error(ErrorCode::NotSquarefree, "defining polynomial has a repeated root");
    SturmChain sturm(p);
    auto intervals = isolate_roots(p, sturm);
    if (intervals.size() != g)
        throw Error(ErrorCode::NotTotallyReal,
                    std::to_string(g - intervals.size()) + " of " + std::to_string(g) + " roots are not real");

    if (spec.integral_basis.size() != g)
        throw Error(ErrorCode::InvalidInput, "integral basis must have g rows");
    for (const auto& row : spec.integral_basis)
        if (row.size() != g) throw Error(ErrorCode::InvalidInput, "integral basis must be g x g");
    f.basis_inverse_ = eisres::inverse(spec.integral_basis, "integral basis");

    // Structure constants.
    f.structure_.assign(g, std::vector<ZVector>(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            QPoly prod = mul_mod(spec.integral_basis[i], spec.integral_basis[j], p);
            prod.resize(g, Rational(0));
            QVector c = eisres::multiply(prod, f.basis_inverse_);
            if (!is_integral(c))
                throw Error(ErrorCode::BasisNotRing, "structure constants of the integral basis are not integral");
            ZVector z;
            for (const auto& x : c) z.push_back(x.get_num());
            f.structure_[i][j] = z;
            f.structure_[j][i] = z;
        }
    QVector one_pb(g, Rational(0));
    one_pb[0] = 1;
    QVector one = eisres::multiply(one_pb, f.basis_inverse_);
    if (!is_integral(one)) throw Error(ErrorCode::BasisNotRing, "1 is not in the span of the integral basis");
    f.one_ = FieldElement(one);

    QMatrix gram(g, QVector(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            QVector e(g, Rational(0));
            e[i] = 1;
            QVector e2(g, Rational(0));
            e2[j] = 1;
            gram[i][j] = f.trace(f.multiply(FieldElement(e), FieldElement(e2)));
        }
    Rational d = determinant(gram);
    if (d == 0 || d.get_den() != 1) throw Error(ErrorCode::BasisNotRing, "trace form is degenerate");
    f.disc_ = d.get_num();

    const unsigned work = f.precision_ + 64;
    for (const auto& iv : intervals) {
        Interval r = refine_root(iv, p, &sturm, work);
        f.root_brackets_.emplace_back(r.lo, r.hi);
        f.roots_.push_back(midpoint(r, work));
    }
    f.basis_embed_ = evaluate_basis(spec.integral_basis, f.roots_, work);
    f.basis_embed_double_.assign(g, std::vector<double>(g, 0.0));
    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t j = 0; j < g; ++j) f.basis_embed_double_[k][j] = f.basis_embed_[k][j].to_double();

    // Fundamental units: integral, norm +-1, independent.
    if (spec.fundamental_units.size() != g - 1)
        throw Error(ErrorCode::InvalidInput, "expected g-1 fundamental units");
    for (const auto& u : spec.fundamental_units) {
        if (u.size() != g) throw Error(ErrorCode::InvalidInput, "unit coordinate row has wrong length");
        if (!is_integral(u)) throw Error(ErrorCode::InvalidUnit, "unit is not integral");
        Rational n = f.norm(FieldElement(u));
        if (n != 1 && n != -1) throw Error(ErrorCode::InvalidUnit, "unit has norm " + n.get_str());
    }
    if (g >= 2) {
        std::vector<std::vector<Real>> logs;
        for (std::size_t i = 0; i + 1 < g; ++i) {
            auto s = f.embed(FieldElement(spec.fundamental_units[i]));
            std::vector<Real> row;
            for (std::size_t k = 0; k + 1 < g; ++k) row.push_back(log(abs(s[k])));
            logs.push_back(std::move(row));
        }
        // Gaussian elimination in Real; the determinant is small-dimensional.
        Real det(1L, f.precision_);
        const std::size_t n = g - 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            for (std::size_t r = c + 1; r < n; ++r)
                if (abs(logs[r][c]) > abs(logs[piv][c])) piv = r;
            std::swap(logs[piv], logs[c]);
            det *= logs[c][c];
            if (logs[c][c].is_zero()) break;
            for (std::size_t r = c + 1; r < n; ++r) {
                Real fac = logs[r][c] / logs[c][c];
                for (std::size_t j = c; j < n; ++j) logs[r][j] -= fac * logs[c][j];
            }
        }
        Real threshold = pow(Real(10L, f.precision_), -static_cast<long>(f.precision_ / 4));
        if (abs(det) <= threshold)
            throw Error(ErrorCode::RegulatorZero, "fundamental units are multiplicatively dependent");
    }
    return f;
}

FieldElement TotallyRealField::element(QVector coords) const {
    if (coords.size() > g_) throw Error(ErrorCode::InvalidInput, "too many coordinates for a degree-" + std::to_string(g_) + " field");
    coords.resize(g_, Rational(0));
    return FieldElement(std::move(coords));
}

FieldElement TotallyRealField::fundamental_unit(std::size_t i) const { return FieldElement(spec_.fundamental_units.at(i)); }

FieldElement TotallyRealField::multiply(const FieldElement& x, const FieldElement& y) const {
    QVector out(g_, Rational(0));
    for (std::size_t i = 0; i < g_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g_; ++j) {
            if (y[j] == 0) continue;
            Rational xy = x[i] * y[j];
            const ZVector& c = structure_[i][j];
            for (std::size_t k = 0; k < g_; ++k)
                if (c[k] != 0) out[k] += xy * c[k];
        }
    }
    return FieldElement(std::move(out));
}

QMatrix TotallyRealField::multiplication_matrix(const FieldElement& x) const {
    QMatrix m(g_, QVector(g_, Rational(0)));
    for (std::size_t i = 0; i < g_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g_; ++j) {
            const ZVector& c = structure_[i][j];
            for (std::size_t k = 0; k < g_; ++k)
                if (c[k] != 0) m[k][j] += x[i] * c[k];
        }
    }
    return m;
}

FieldElement TotallyRealField::inverse(const FieldElement& x) const {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot invert zero");
    QMatrix inv = eisres::inverse(multiplication_matrix(x), "multiplication matrix");
    QVector y(g_, Rational(0));
    for (std::size_t k = 0; k < g_; ++k)
        for (std::size_t j = 0; j < g_; ++j) y[k] += inv[k][j] * one_[j];
    return FieldElement(std::move(y));
}

FieldElement TotallyRealField::power(const FieldElement& x, long n) const {
    FieldElement base = n < 0 ? inverse(x) : x;
    unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
    FieldElement result = one_;
    while (e) {
        if (e & 1UL) result = multiply(result, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return result;
}

Rational TotallyRealField::trace(const FieldElement& x) const {
    QMatrix m = multiplication_matrix(x);
    Rational t = 0;
    for (std::size_t k = 0; k < g_; ++k) t += m[k][k];
    return t;
}

Rational TotallyRealField::norm(const FieldElement& x) const { return determinant(multiplication_matrix(x)); }

std::vector<Real> TotallyRealField::embed(const FieldElement& x) const { return embed(x, precision_); }

std::vector<Real> TotallyRealField::embed(const FieldElement& x, unsigned precision_bits) const {
    const mpfr_prec_t work = basis_embed_.empty() ? precision_bits : basis_embed_[0][0].precision();
    std::vector<Real> out;
    out.reserve(g_);
    for (std::size_t k = 0; k < g_; ++k) {
        Real v(0L, work);
        for (std::size_t j = 0; j < g_; ++j)
            if (x[j] != 0) v += Real(x[j], work) * basis_embed_[k][j];
        out.push_back(v.with_precision(precision_bits));
    }
    return out;
}

std::vector<double> TotallyRealField::embed_double(const FieldElement& x) const {
    std::vector<double> out(g_, 0.0);
    for (std::size_t j = 0; j < g_; ++j) {
        if (x[j] == 0) continue;
        double c = x[j].get_d();
        for (std::size_t k = 0; k < g_; ++k) out[k] += c * basis_embed_double_[k][j];
    }
    return out;
}

std::vector<std::vector<Real>> TotallyRealField::basis_embeddings_at(unsigned precision_bits) const {
    const unsigned work = precision_bits + 64;
    if (work <= precision_ + 64) return evaluate_basis(spec_.integral_basis, roots_, work);
    QPoly p(spec_.poly.begin(), spec_.poly.end());
    std::vector<Real> roots;
    for (const auto& [lo, hi] : root_brackets_) {
        Interval r{lo, hi};
        if (lo != hi) {
            SturmChain sturm(p);
            r = refine_root(r, p, &sturm, work);
        }
        roots.push_back(midpoint(r, work));
    }
    return evaluate_basis(spec_.integral_basis, roots, work);
}

QVector TotallyRealField::to_power_basis(const FieldElement& x) const { return eisres::multiply(x.coords(), spec_.integral_basis); }

TotallyRealField load_field(const FieldSpec& spec, unsigned precision_bits) {
    return TotallyRealField::load(spec, precision_bits);
}

std::vector<Real> embed(const TotallyRealField& field, const FieldElement& x) { return field.embed(x); }

std::pair<Rational, Rational> trace_norm(const TotallyRealField& field, const FieldElement& x) {
    return {field.trace(x), field.norm(x)};
}

std::vector<int> embedding_signs(const TotallyRealField& field, const FieldElement& x) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "sign of zero is undefined");
    const std::size_t g = field.degree();
    std::vector<int> signs(g, 0);
    std::size_t decided = 0;
    // Basis embeddings carry 64 guard bits over `bits`, so the evaluation
    // error is below 2^{-(bits+56)} * sum_j |x_j| |sigma_k(omega_j)|.
    for (unsigned bits = field.precision(); bits <= 16384 && decided < g; bits *= 2) {
        const auto be = bits == field.precision() ? std::vector<std::vector<Real>>{} : field.basis_embeddings_at(bits);
        const auto& bd = field.basis_embeddings();
        auto values = bits == field.precision() ? field.embed(x, bits + 64) : std::vector<Real>{};
        for (std::size_t k = 0; k < g; ++k) {
            if (signs[k] != 0) continue;
            Real v(0L, bits + 64);
            if (be.empty()) {
                v = values[k];
            } else {
                for (std::size_t j = 0; j < g; ++j)
                    if (x[j] != 0) v += Real(x[j], bits + 64) * be[k][j];
            }
            double scale = 1.0;
            for (std::size_t j = 0; j < g; ++j) scale += std::fabs(x[j].get_d()) * std::fabs(bd[k][j]);
            Real bound = Real(scale, bits + 64) * ldexp_one(-static_cast<long>(bits) - 56, bits + 64);
            if (abs(v) > bound) {
                signs[k] = v.sign();
                ++decided;
            }
        }
    }
    if (decided < g)
        throw Error(ErrorCode::Precondition, "embedding sign not certified; is the defining polynomial reducible?");
    return signs;
}

bool is_totally_positive(const TotallyRealField& field, const FieldElement& x) {
    auto s = embedding_signs(field, x);
    return std::all_of(s.begin(), s.end(), [](int v) { return v > 0; });
}

}  // namespace eisres
