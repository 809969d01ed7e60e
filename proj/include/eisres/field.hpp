#ifndef EISRES_FIELD_HPP
#define EISRES_FIELD_HPP

// Exact arithmetic in a totally real number field given by a monic integer
// polynomial and a user-supplied integral basis.
//
// Elements are stored by their rational coordinates over the integral basis
// (omega_1, ..., omega_g). Floating point enters only through the embedding
// boundary (embed / embed_double), where sigma_1 < ... < sigma_g are the real
// roots of the defining polynomial in ascending order.

#include "eisres/linalg.hpp"
#include "eisres/real.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eisres {

struct FieldSpec {
    std::string label;
    /// Monic defining polynomial, constant coefficient first.
    std::vector<Integer> poly;
    /// Row i expresses omega_i over the power basis 1, t, ..., t^{g-1}.
    QMatrix integral_basis;
    /// g-1 rows of coordinates over the integral basis.
    QMatrix fundamental_units;
};

class FieldElement {
  public:
    FieldElement() = default;
    explicit FieldElement(QVector coords) : coords_(std::move(coords)) {}

    static FieldElement zero(std::size_t g) { return FieldElement(QVector(g, Rational(0))); }

    std::size_t degree() const { return coords_.size(); }
    const QVector& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const Rational& c);
    FieldElement operator-() const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
    friend FieldElement operator*(const Rational& c, FieldElement a) { return a *= c; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords_ == b.coords_; }
    /// Lexicographic on exact coordinates.
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.coords_ < b.coords_; }

    std::string to_string() const;

  private:
    QVector coords_;
};

class TotallyRealField {
  public:
    /// Validates `spec` (monic, squarefree, totally real, basis is a ring,
    /// units have norm +-1 and a nonzero regulator) and isolates the roots
    /// to `precision_bits`.
    static TotallyRealField load(const FieldSpec& spec, unsigned precision_bits = 128);

    const FieldSpec& spec() const { return spec_; }
    const std::string& label() const { return spec_.label; }
    std::size_t degree() const { return g_; }
    unsigned precision() const { return precision_; }
    const Integer& discriminant() const { return disc_; }
    /// Roots sigma_k(t), ascending, carried with guard bits.
    const std::vector<Real>& roots() const { return roots_; }

    FieldElement one() const { return one_; }
    FieldElement from_rational(const Rational& q) const { return one_ * q; }
    /// Pads missing trailing coordinates with zero.
    FieldElement element(QVector coords) const;
    FieldElement fundamental_unit(std::size_t i) const;

    FieldElement multiply(const FieldElement& x, const FieldElement& y) const;
    FieldElement inverse(const FieldElement& x) const;
    FieldElement power(const FieldElement& x, long n) const;

    /// Matrix of y -> x*y on coordinates: column j holds x*omega_j.
    QMatrix multiplication_matrix(const FieldElement& x) const;
    Rational trace(const FieldElement& x) const;
    Rational norm(const FieldElement& x) const;

    /// sigma_k(x) at the field precision.
    std::vector<Real> embed(const FieldElement& x) const;
    std::vector<Real> embed(const FieldElement& x, unsigned precision_bits) const;
    std::vector<double> embed_double(const FieldElement& x) const;
    /// sigma_k(omega_j) in double precision, indexed [k][j].
    const std::vector<std::vector<double>>& basis_embeddings() const { return basis_embed_double_; }

    /// Power-basis coordinates of x.
    QVector to_power_basis(const FieldElement& x) const;

    /// sigma_k(omega_j) recomputed from the exact root brackets at an
    /// arbitrary precision (used when a sign needs more bits).
    std::vector<std::vector<Real>> basis_embeddings_at(unsigned precision_bits) const;

  private:
    TotallyRealField() = default;

    FieldSpec spec_;
    std::size_t g_ = 0;
    unsigned precision_ = 0;
    QMatrix basis_inverse_;
    // structure_[i][j] = coordinates of omega_i * omega_j
    std::vector<std::vector<ZVector>> structure_;
    FieldElement one_;
    Integer disc_;
    std::vector<Real> roots_;
    // Exact isolating brackets of width < 2^{-(precision+72)}.
    std::vector<std::pair<Rational, Rational>> root_brackets_;
    std::vector<std::vector<Real>> basis_embed_;
    std::vector<std::vector<double>> basis_embed_double_;
};

// Operation-style entry points.
TotallyRealField load_field(const FieldSpec& spec, unsigned precision_bits);
std::vector<Real> embed(const TotallyRealField& field, const FieldElement& x);
std::pair<Rational, Rational> trace_norm(const TotallyRealField& field, const FieldElement& x);
/// Sign-certified: refines precision until every sign is decided.
bool is_totally_positive(const TotallyRealField& field, const FieldElement& x);
/// Signs of sigma_k(x) (+1/-1), certified as in is_totally_positive.
std::vector<int> embedding_signs(const TotallyRealField& field, const FieldElement& x);

}  // namespace eisres

#endif
