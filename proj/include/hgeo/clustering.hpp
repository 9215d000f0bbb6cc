#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "hgeo/errors.hpp"
#include "hgeo/rng.hpp"
#include "hgeo/simplex.hpp"

namespace hgeo {

/// A dissimilarity with the two traits the seeding analysis cares about:
/// whether it is symmetric, and whether the k-means++ machinery should
/// square it (metric distances are squared; divergences are used as-is).
template <typename P>
struct Dissimilarity {
    std::function<double(const P&, const P&)> fn;
    bool symmetric = true;
    bool squared_for_kmeans = false;

    double operator()(const P& a, const P& b) const { return fn(a, b); }

    double kmeans_weight(const P& a, const P& b) const {
        double v = fn(a, b);
        return squared_for_kmeans ? v * v : v;
    }
};

/// Geodesic cut operator: (p, q, alpha) -> the point v on the geodesic
/// from p to q with rho(p, v) = alpha * rho(p, q).
template <typename P>
using GeodesicCut = std::function<P(const P&, const P&, double)>;

template <typename P>
struct ClusteringResult {
    std::vector<int> labels;  // 1-based cluster indices
    std::vector<P> centers;
    double objective = 0.0;
    int iterations = 0;
    std::uint64_t seed = 0;
};

/// k-means++ seeding: first index uniform, then each next index drawn with
/// probability proportional to the (possibly squared) dissimilarity to the
/// already chosen set. Throws NotEnoughDistinctPointsError when fewer than
/// k distinct points exist.
template <typename P>
std::vector<std::size_t> kmeanspp_seed(const std::vector<P>& points, std::size_t k,
                                       const Dissimilarity<P>& d, Rng& rng) {
    if (k == 0 || k > points.size())
        throw NotEnoughDistinctPointsError("kmeanspp_seed: k out of range");
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    chosen.push_back(rng.uniform_index(points.size()));
    std::vector<double> min_d(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        min_d[i] = d.kmeans_weight(points[i], points[chosen[0]]);
    while (chosen.size() < k) {
        double total = 0.0;
        for (double w : min_d) total += w;
        if (!(total > 0.0))
            throw NotEnoughDistinctPointsError(
                "kmeanspp_seed: fewer distinct points than requested centers");
        std::size_t next = rng.weighted_index(min_d);
        chosen.push_back(next);
        for (std::size_t i = 0; i < points.size(); ++i)
            min_d[i] = std::min(min_d[i], d.kmeans_weight(points[i], points[next]));
    }
    return chosen;
}

namespace detail {

template <typename P>
std::vector<int> assign_labels(const std::vector<P>& points, const std::vector<P>& centers,
                               const Dissimilarity<P>& d) {
    std::vector<int> labels(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int arg = 1;
        for (std::size_t j = 0; j < centers.size(); ++j) {
            double v = d(points[i], centers[j]);
            if (v < best) {
                best = v;
                arg = static_cast<int>(j) + 1;
            }
        }
        labels[i] = arg;
    }
    return labels;
}

template <typename P>
double kmeans_energy(const std::vector<P>& points, const std::vector<P>& centers,
                     const Dissimilarity<P>& d) {
    double acc = 0.0;
    for (const auto& p : points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : centers) best = std::min(best, d.kmeans_weight(p, c));
        acc += best;
    }
    return acc / static_cast<double>(points.size());
}

} // namespace detail

/// k-means++ clustering: seeding plus nearest-center assignment. With
/// refine_rounds > 0, alternates medoid center updates (the member point
/// minimizing the summed dissimilarity within its cluster) with
/// reassignment; the energy is non-increasing across rounds.
template <typename P>
ClusteringResult<P> kmeanspp_cluster(const std::vector<P>& points, std::size_t k,
                                     const Dissimilarity<P>& d, Rng& rng,
                                     int refine_rounds = 0) {
    ClusteringResult<P> result;
    result.seed = rng.seed();
    auto seed_idx = kmeanspp_seed(points, k, d, rng);
    for (auto i : seed_idx) result.centers.push_back(points[i]);
    result.labels = detail::assign_labels(points, result.centers, d);
    for (int round = 0; round < refine_rounds; ++round) {
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (result.labels[i] == static_cast<int>(j) + 1) members.push_back(i);
            if (members.empty()) continue;
            double best = std::numeric_limits<double>::infinity();
            std::size_t medoid = members.front();
            for (auto c : members) {
                double cost = 0.0;
                for (auto i : members) cost += d.kmeans_weight(points[i], points[c]);
                if (cost < best) {
                    best = cost;
                    medoid = c;
                }
            }
            result.centers[j] = points[medoid];
        }
        result.labels = detail::assign_labels(points, result.centers, d);
        ++result.iterations;
    }
    result.objective = detail::kmeans_energy(points, result.centers, d);
    return result;
}

/// Farthest-first traversal: first index uniform, each next index the point
/// farthest from the chosen set (ties broken by lowest index). For a metric
/// dissimilarity the induced k-center cost is at most twice optimal.
template <typename P>
std::vector<std::size_t> farthest_first_seed(const std::vector<P>& points, std::size_t k,
                                             const Dissimilarity<P>& metric, Rng& rng) {
    if (k == 0 || k > points.size())
        throw NotEnoughDistinctPointsError("farthest_first_seed: k out of range");
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    chosen.push_back(rng.uniform_index(points.size()));
    std::vector<double> min_d(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        min_d[i] = metric(points[i], points[chosen[0]]);
    while (chosen.size() < k) {
        std::size_t far = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (min_d[i] > best) {
                best = min_d[i];
                far = i;
            }
        }
        if (!(best > 0.0))
            throw NotEnoughDistinctPointsError(
                "farthest_first_seed: fewer distinct points than requested centers");
        chosen.push_back(far);
        for (std::size_t i = 0; i < points.size(); ++i)
            min_d[i] = std::min(min_d[i], metric(points[i], points[far]));
    }
    return chosen;
}

/// Geodesic walk for the minimax (smallest enclosing ball) center: repeat
/// T times from the first point, stepping toward the current farthest
/// point with shrinking step 1/(t+1).
template <typename P>
P minimax_center(const std::vector<P>& points, const Dissimilarity<P>& rho,
                 const GeodesicCut<P>& cut, int iterations) {
    if (points.empty()) throw EmptyInputError("minimax_center: no points");
    P center = points.front();
    for (int t = 1; t <= iterations; ++t) {
        std::size_t far = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            double v = rho(points[i], center);
            if (v > best) {
                best = v;
                far = i;
            }
        }
        center = cut(center, points[far], 1.0 / static_cast<double>(t + 1));
    }
    return center;
}

/// k-center clustering: k-means++ seeding, then T rounds alternating
/// nearest-center labeling with per-cluster minimax center updates (each a
/// geodesic walk of walk_iterations steps). The objective is the largest
/// distance from a point to its assigned center.
template <typename P>
ClusteringResult<P> kcenter_cluster(const std::vector<P>& points, std::size_t k,
                                    const Dissimilarity<P>& rho, Rng& rng, int rounds,
                                    const GeodesicCut<P>& cut, int walk_iterations = 100) {
    ClusteringResult<P> result;
    result.seed = rng.seed();
    auto seed_idx = kmeanspp_seed(points, k, rho, rng);
    for (auto i : seed_idx) result.centers.push_back(points[i]);
    for (int t = 0; t < rounds; ++t) {
        result.labels = detail::assign_labels(points, result.centers, rho);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<P> members;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (result.labels[i] == static_cast<int>(j) + 1)
                    members.push_back(points[i]);
            if (!members.empty())
                result.centers[j] = minimax_center(members, rho, cut, walk_iterations);
        }
        ++result.iterations;
    }
    result.labels = detail::assign_labels(points, result.centers, rho);
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        worst = std::max(worst, rho(points[i], result.centers[result.labels[i] - 1]));
    result.objective = worst;
    return result;
}

/// Parameterized families of simplex geodesics for the cut operator.
enum class GeodesicKind {
    EuclideanSegment,  // straight chord (exact for the Hilbert distance)
    SqrtSphere,        // great-circle arc in square-root coordinates
    MixtureLine,       // straight in the expectation parameters
    NaturalLine,       // straight in the natural (log-odds) parameters
};

/// Point v on the selected geodesic with rho(p, v) = alpha * rho(p, q),
/// located by bisection on the curve parameter except where a closed form
/// is exact (square-root great circle; two-coordinate log-odds line).
SimplexPoint geodesic_cut(const SimplexPoint& p, const SimplexPoint& q, double alpha,
                          const std::function<double(const SimplexPoint&, const SimplexPoint&)>& rho,
                          GeodesicKind kind, const Tolerance& tol = {1e-12, 1e-9, 200});

/// Closed-form Hilbert cut on two coordinates (log-odds interpolation).
SimplexPoint hilbert_bernoulli_cut(const SimplexPoint& p, const SimplexPoint& q,
                                   double alpha);

/// Summary statistics of the empirical quasi-triangle ratio
/// kappa1 = D(x:z) / (D(x:y) + D(y:z)) over uniformly sampled triples, and
/// of the asymmetry ratio kappa2 = max(D(x:y)/D(y:x), D(y:x)/D(x:y)) over
/// pairs.
struct KappaStats {
    struct Stats {
        double max, mean, std, min;
    };
    Stats kappa1;
    Stats kappa2;
    std::size_t samples = 0;
    std::size_t dim = 0;
};

KappaStats estimate_kappa(const Dissimilarity<SimplexPoint>& d, std::size_t dim,
                          std::size_t n_samples, Rng& rng);

} // namespace hgeo
