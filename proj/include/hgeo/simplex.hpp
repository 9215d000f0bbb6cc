#pragma once

#include <cstddef>
#include <vector>

namespace hgeo {

/// Shared numeric knobs for iterative routines.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_iter = 100;
};

/// Smallest coordinate magnitude accepted for simplex and cone points.
/// Anything at or below this underflows the log-coordinate maps and makes
/// the projective distances diverge, so construction rejects it outright.
inline constexpr double kMinCoordinate = 1e-300;

/// A point of the open standard simplex: strictly positive coordinates
/// renormalized to unit sum at construction. Immutable.
class SimplexPoint {
public:
    /// Validates positivity and length, then divides by the coordinate sum.
    explicit SimplexPoint(std::vector<double> raw);

    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    /// Number of coordinates (d + 1).
    std::size_t size() const { return coords_.size(); }
    /// Simplex dimension d.
    std::size_t dim() const { return coords_.size() - 1; }

private:
    std::vector<double> coords_;
};

/// An unnormalized strictly positive measure (a ray representative in the
/// open positive orthant). Immutable.
class ConeVector {
public:
    explicit ConeVector(std::vector<double> raw);

    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }

    /// Dehomogenize the ray onto the simplex.
    SimplexPoint normalized() const;

private:
    std::vector<double> coords_;
};

/// A vector of the zero-sum linear subspace that the log map sends the
/// simplex into. Construction checks the zero-sum constraint to 1e-10.
class NormedPoint {
public:
    explicit NormedPoint(std::vector<double> coords);

    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }

private:
    std::vector<double> coords_;
};

SimplexPoint make_simplex_point(std::vector<double> raw);

/// Isometric log map: v_i = log(lambda_i) - mean_j log(lambda_j).
NormedPoint simplex_to_normed(const SimplexPoint& p);

/// Inverse map: lambda_i = exp(v_i) / sum_j exp(v_j). The maximum is
/// subtracted before exponentiating, so overflow cannot occur.
SimplexPoint normed_to_simplex(const NormedPoint& v);

/// Variation norm max_i x_i - min_i x_i, the norm that makes the log map
/// above an isometry for the Hilbert simplex distance.
double hilbert_norm(const NormedPoint& v);

/// Variation seminorm of a raw vector (helper shared with the distances).
double variation_norm(const std::vector<double>& x);

/// Exponential-family coordinates theta_i = log(lambda_i / lambda_0),
/// i = 1..d. Inverted by a softmax with a prepended zero.
std::vector<double> natural_params(const SimplexPoint& p);

} // namespace hgeo
