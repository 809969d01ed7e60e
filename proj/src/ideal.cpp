#include "eisres/ideal.hpp"

#include "eisres/error.hpp"

#include <sstream>

namespace eisres {

FractionalIdeal::FractionalIdeal(QMatrix hnf_rows) : basis_(std::move(hnf_rows)) {
    Rational d = determinant(basis_);
    if (d == 0) throw Error(ErrorCode::NotAnIdeal, "lattice basis is not of full rank");
    norm_ = abs(d);
    inverse_ = eisres::inverse(basis_, "ideal basis");
}

FractionalIdeal lattice_from_generators(const QMatrix& rows) {
    QMatrix h = lattice_hnf(rows);
    const std::size_t g = rows.empty() ? 0 : rows[0].size();
    if (h.size() != g) throw Error(ErrorCode::NotAnIdeal, "generators do not span a full-rank lattice");
    return FractionalIdeal(std::move(h));
}

FractionalIdeal FractionalIdeal::from_basis(const TotallyRealField& field, const QMatrix& rows) {
    const std::size_t g = field.degree();
    if (rows.size() != g) throw Error(ErrorCode::NotAnIdeal, "ideal basis must have g rows");
    for (const auto& r : rows)
        if (r.size() != g) throw Error(ErrorCode::NotAnIdeal, "ideal basis rows must have g entries");
    FractionalIdeal a = lattice_from_generators(rows);
    for (std::size_t i = 0; i < g; ++i) {
        QVector e(g, Rational(0));
        e[i] = 1;
        FieldElement w(e);
        for (std::size_t j = 0; j < g; ++j)
            if (!a.contains(field.multiply(w, a.basis_element(j))))
                throw Error(ErrorCode::NotAnIdeal, "lattice is not stable under multiplication by O_L");
    }
    return a;
}

FractionalIdeal FractionalIdeal::unit(const TotallyRealField& field) {
    return FractionalIdeal(identity_matrix(field.degree()));
}

FractionalIdeal FractionalIdeal::principal(const TotallyRealField& field, const FieldElement& x) {
    if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "principal ideal of zero");
    QMatrix rows;
    for (std::size_t j = 0; j < field.degree(); ++j) {
        QVector e(field.degree(), Rational(0));
        e[j] = 1;
        rows.push_back(field.multiply(x, FieldElement(e)).coords());
    }
    return lattice_from_generators(rows);
}

QVector FractionalIdeal::lattice_coordinates(const FieldElement& x) const { return multiply(x.coords(), inverse_); }

bool FractionalIdeal::contains(const FieldElement& x) const { return eisres::is_integral(lattice_coordinates(x)); }

bool FractionalIdeal::is_integral() const {
    for (const auto& row : basis_)
        if (!eisres::is_integral(row)) return false;
    return true;
}

FractionalIdeal FractionalIdeal::scaled(const Rational& c) const {
    if (c == 0) throw Error(ErrorCode::ZeroElement, "scaling an ideal by zero");
    QMatrix rows = basis_;
    for (auto& r : rows)
        for (auto& x : r) x *= c;
    return lattice_from_generators(rows);
}

std::string FractionalIdeal::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) os << ";";
        for (std::size_t j = 0; j < basis_[i].size(); ++j) os << (j ? "," : "") << basis_[i][j].get_str();
    }
    return os.str();
}

QMatrix trace_gram(const TotallyRealField& field, const FractionalIdeal& a) {
    const std::size_t g = a.degree();
    QMatrix gram(g, QVector(g));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) {
            gram[i][j] = field.trace(field.multiply(a.basis_element(i), a.basis_element(j)));
            gram[j][i] = gram[i][j];
        }
    return gram;
}

QMatrix dual_basis(const TotallyRealField& field, const FractionalIdeal& a) {
    return multiply(inverse(trace_gram(field, a), "trace Gram matrix"), a.basis());
}

FractionalIdeal dual_ideal(const TotallyRealField& field, const FractionalIdeal& a) {
    return lattice_from_generators(dual_basis(field, a));
}

FractionalIdeal ideal_product(const TotallyRealField& field, const FractionalIdeal& a, const FractionalIdeal& b) {
    QMatrix rows;
    for (std::size_t i = 0; i < a.degree(); ++i)
        for (std::size_t j = 0; j < b.degree(); ++j)
            rows.push_back(field.multiply(a.basis_element(i), b.basis_element(j)).coords());
    return lattice_from_generators(rows);
}

FractionalIdeal ideal_sum(const FractionalIdeal& a, const FractionalIdeal& b) {
    QMatrix rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return lattice_from_generators(rows);
}

FractionalIdeal inverse_different(const TotallyRealField& field) {
    return dual_ideal(field, FractionalIdeal::unit(field));
}

FractionalIdeal ideal_inverse(const TotallyRealField& field, const FractionalIdeal& a) {
    // (a d^{-1})^vee = a^{-1} d d^{-1} = a^{-1}
    return dual_ideal(field, ideal_product(field, a, inverse_different(field)));
}

bool are_coprime(const TotallyRealField& field, const FractionalIdeal& a, const FractionalIdeal& b) {
    return ideal_sum(a, b) == FractionalIdeal::unit(field);
}

Real covolume(const TotallyRealField& field, const FractionalIdeal& a) {
    // |det(sigma_k(beta_j))| = N(a) * |det(sigma_k(omega_j))| = N(a) sqrt(d_L)
    const unsigned p = field.precision();
    return Real(a.norm(), p) * sqrt(Real(field.discriminant(), p));
}

}  // namespace eisres
