#ifndef EISRES_LATTICE_ENUM_HPP
#define EISRES_LATTICE_ENUM_HPP

#include "eisres/units.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace eisres {

/// Lattice points n (over a lattice Z-basis) whose embedding vector
/// sigma(shift + sum n_j beta_j) lies in the box |sigma_k - center_k| <= radius_k.
/// The outer coordinate range can be split across workers.
class BoxEnumerator {
  public:
    using Visitor = std::function<void(const std::vector<long>& n, const std::vector<double>& sigma)>;

    BoxEnumerator(const TotallyRealField& field, const FractionalIdeal& lattice, const std::vector<double>& center,
                  const std::vector<double>& radius, const std::optional<FieldElement>& shift = std::nullopt);

    long outer_min() const { return outer_min_; }
    long outer_max() const { return outer_max_; }
    /// Visits points whose first coordinate lies in [lo, hi].
    void run(long lo, long hi, const Visitor& visit) const;
    void run(const Visitor& visit) const { run(outer_min_, outer_max_, visit); }

    /// shift + sum n_j beta_j, exactly.
    FieldElement point(const std::vector<long>& n) const;

  private:
    void descend(std::size_t j, long lo, long hi, std::vector<long>& n, std::vector<double>& partial,
                 const Visitor& visit) const;

    std::size_t g_;
    QMatrix basis_;
    std::optional<FieldElement> shift_;
    std::vector<std::vector<double>> embed_;  // [j][k] = sigma_k(beta_j)
    std::vector<double> shift_sigma_;
    std::vector<double> center_;
    std::vector<double> radius_;
    std::vector<std::pair<long, long>> ranges_;
    long outer_min_ = 0;
    long outer_max_ = -1;
};

/// Half-open parallelotope [-delta, 1-delta)^{r} in the coordinates of the
/// trace-zero part of log|sigma(x)| against the generator log vectors.
class FundamentalDomain {
  public:
    static constexpr double kOffset = 1.0 / 1048576.0;  // delta = 2^-20

    FundamentalDomain(const TotallyRealField& field, std::vector<FieldElement> generators);

    std::size_t rank() const { return gens_.size(); }
    const std::vector<FieldElement>& generators() const { return gens_; }

    /// n with coordinates(x) - n in [-delta, 1-delta)^r. `sigma` is the
    /// double embedding of x; borderline cases are redone at 256 bits.
    std::vector<long> floor_coordinates(const FieldElement& x, const std::vector<double>& sigma) const;
    std::vector<long> floor_coordinates(const FieldElement& x) const;
    std::vector<double> coordinates(const std::vector<double>& sigma) const;
    bool contains(const FieldElement& x, const std::vector<double>& sigma) const;

    /// R_k = max over the domain of sum_i c_i log|sigma_k(eps_i)|.
    std::vector<double> log_excess() const;

  private:
    std::vector<long> floor_high_precision(const FieldElement& x) const;

    const TotallyRealField* field_;
    std::vector<FieldElement> gens_;
    std::vector<std::vector<double>> logs_;  // [i][k]
    std::vector<std::vector<double>> solve_;
    std::vector<std::vector<Real>> solve_hp_;
};

enum class Positivity { Any, TotallyPositive };
enum class UnitAction { Full, Positive };

struct EnumerationParams {
    Rational norm_bound{1};
    Positivity positivity = Positivity::Any;
    std::optional<FieldElement> shift;
    UnitAction action = UnitAction::Full;
    double safety = 1.25;
    unsigned threads = 1;
};

struct OrbitRep {
    FieldElement point;
    Rational abs_norm;
    int norm_sign = 1;
    std::vector<double> log_vector;
};

/// (eps * x, e) with eps = prod generators^e and eps * x in the domain.
std::pair<FieldElement, std::vector<long>> reduce_to_fundamental_domain(const TotallyRealField& field,
                                                                        const std::vector<FieldElement>& generators,
                                                                        const FieldElement& x);
std::pair<FieldElement, std::vector<long>> reduce_to_fundamental_domain(const TotallyRealField& field,
                                                                        const UnitSubgroup& units,
                                                                        const FieldElement& x);

/// One representative per orbit of nonzero points (of shift + lattice) with
/// |N| <= norm_bound, sorted by abs_norm then coordinates.
std::vector<OrbitRep> enumerate_orbit_reps(const TotallyRealField& field, const FractionalIdeal& lattice,
                                           const UnitSubgroup& units, const EnumerationParams& params);

}  // namespace eisres

#endif
