#ifndef EISRES_IDEAL_HPP
#define EISRES_IDEAL_HPP

#include "eisres/field.hpp"

namespace eisres {

/// Full-rank O_L-submodule of L, stored as a canonical (Hermite) Z-basis
/// over the integral basis. Two ideals are equal iff their bases are.
class FractionalIdeal {
  public:
    /// Validates full rank and O_L-stability.
    static FractionalIdeal from_basis(const TotallyRealField& field, const QMatrix& rows);
    static FractionalIdeal unit(const TotallyRealField& field);
    static FractionalIdeal principal(const TotallyRealField& field, const FieldElement& x);

    std::size_t degree() const { return basis_.size(); }
    /// Rows are Z-basis elements over the integral basis.
    const QMatrix& basis() const { return basis_; }
    FieldElement basis_element(std::size_t i) const { return FieldElement(basis_[i]); }
    /// Absolute norm |det(basis)|.
    const Rational& norm() const { return norm_; }

    /// Coordinates of x over this ideal's Z-basis.
    QVector lattice_coordinates(const FieldElement& x) const;
    bool contains(const FieldElement& x) const;
    bool is_integral() const;
    FractionalIdeal scaled(const Rational& c) const;

    friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) { return a.basis_ == b.basis_; }

    std::string to_string() const;

  private:
    explicit FractionalIdeal(QMatrix hnf_rows);

    QMatrix basis_;
    QMatrix inverse_;
    Rational norm_;

    friend FractionalIdeal lattice_from_generators(const QMatrix& rows);
};

/// Canonical lattice spanned by arbitrary generator rows (no O_L check).
FractionalIdeal lattice_from_generators(const QMatrix& rows);

/// Exact Gram matrix (Tr(beta_i beta_j)) of the ideal basis.
QMatrix trace_gram(const TotallyRealField& field, const FractionalIdeal& a);
/// G^{-1} * basis: the basis of the dual that pairs to the identity with
/// a.basis(). Throws SingularGram on degenerate input.
QMatrix dual_basis(const TotallyRealField& field, const FractionalIdeal& a);
/// Trace dual {x : Tr(x a) in Z}.
FractionalIdeal dual_ideal(const TotallyRealField& field, const FractionalIdeal& a);
FractionalIdeal ideal_product(const TotallyRealField& field, const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal ideal_sum(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal ideal_inverse(const TotallyRealField& field, const FractionalIdeal& a);
/// Inverse different d_L^{-1} = dual of O_L.
FractionalIdeal inverse_different(const TotallyRealField& field);
/// Coprime integral ideals: a + b = O_L.
bool are_coprime(const TotallyRealField& field, const FractionalIdeal& a, const FractionalIdeal& b);
/// Covolume of the ideal's image in R^g under the embeddings.
Real covolume(const TotallyRealField& field, const FractionalIdeal& a);

}  // namespace eisres

#endif
