#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hgeo/matrix_geometry.hpp"
#include "hgeo/simplex.hpp"

namespace hgeo {

enum class NoiseKind { Gaussian, StudentT5 };

/// Configuration for the simplex cluster generators: k clusters totalling
/// n points on the d-dimensional simplex; each point is the softmax of the
/// cluster center's log-coordinates plus sigma times iid noise (standard
/// Gaussian or Student's t with five degrees of freedom).
struct SimplexClusterSpec {
    std::size_t k = 3;
    std::size_t n = 50;
    std::size_t d = 9;
    double sigma = 0.5;
    NoiseKind noise = NoiseKind::Gaussian;
    std::uint64_t seed = 0;
};

/// Clustered draws from a hierarchical inverse-Wishart model: one scale
/// matrix per cluster from inv-Wishart(I, nu1), members from
/// inv-Wishart(scale, nu2), each projected to unit diagonal.
struct ElliptopeClusterSpec {
    std::size_t k = 3;
    std::size_t n = 100;
    std::size_t d = 3;
    double nu1 = 4.0;
    double nu2 = 10.0;
    std::uint64_t seed = 0;
};

/// Clustered SPD matrices: each cluster fixes an orthonormal frame and a
/// gamma-distributed eigenvalue vector; members add sigma * A A^T Wishart
/// noise with A iid standard Gaussian.
struct PsdClusterSpec {
    std::size_t k = 5;
    std::size_t n = 250;
    std::size_t d = 2;
    double gamma_shape = 2.0;
    double gamma_scale = 1.0;
    double sigma = 0.1;
    std::uint64_t seed = 0;
};

template <typename P>
struct LabeledDataset {
    std::vector<P> points;
    std::vector<int> labels;  // 1-based, sizes balanced to within one
    nlohmann::json spec;      // echo of the generating configuration
    std::uint64_t seed = 0;
};

LabeledDataset<SimplexPoint> gen_simplex_clusters(const SimplexClusterSpec& spec);

/// Same as gen_simplex_clusters, then each point is scaled by an
/// independent Gamma(10, 0.1) draw (unit mean), producing unnormalized
/// positive measures.
LabeledDataset<ConeVector> gen_positive_measures(const SimplexClusterSpec& spec);

LabeledDataset<CorrelationMatrix> gen_elliptope_clusters(const ElliptopeClusterSpec& spec);

LabeledDataset<SpdMatrix> gen_psd_clusters(const PsdClusterSpec& spec);

} // namespace hgeo
