#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hgeo {

/// Seedable random source with fixed sampling algorithms.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard, and every distribution below is implemented here rather
/// than with std:: distribution classes (those are implementation-defined).
/// A given seed therefore reproduces the same stream on any platform:
///   - uniform01: high 53 bits of one engine output, value in [0,1)
///   - normal:    Box-Muller cosine branch, consumes two engine outputs
///   - gamma:     Marsaglia-Tsang squeeze (shape>=1), boosted for shape<1
///   - chi_square(k) = gamma(k/2, 2); student_t, exponential, dirichlet
///     are derived from the above in the order written in rng.cpp
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01();

    double uniform(double lo, double hi);

    /// Uniform index in {0, ..., n-1}; n must be positive.
    std::size_t uniform_index(std::size_t n);

    /// Standard normal draw.
    double normal();

    /// Exponential with unit rate.
    double exponential();

    /// Gamma with the given shape and scale.
    double gamma(double shape, double scale);

    double chi_square(double dof);

    /// Student's t with the given degrees of freedom.
    double student_t(double dof);

    /// Uniform point on the open standard simplex with n coordinates
    /// (symmetric Dirichlet with unit concentration).
    std::vector<double> dirichlet_uniform(std::size_t n);

    /// Index drawn with probability proportional to the (nonnegative)
    /// weights, by cumulative scan. Total weight must be positive.
    std::size_t weighted_index(const std::vector<double>& weights);

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace hgeo
