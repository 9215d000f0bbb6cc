#pragma once

#include <string>
#include <vector>

#include "hgeo/clustering.hpp"
#include "hgeo/matrix_geometry.hpp"
#include "hgeo/simplex.hpp"

namespace hgeo {

/// Closed enumeration of the simplex dissimilarities, addressable by the
/// stable names "fhr", "kl", "rkl", "skl", "hilbert", "l1", "tv", "euc",
/// "cs", "funk" ("rfunk" for the reverse direction).
enum class SimplexMetric {
    Fhr,
    Kl,
    ReverseKl,
    SymKl,
    Hilbert,
    L1,
    Tv,
    Euclidean,
    CauchySchwarz,
    Funk,
    ReverseFunk,
};

SimplexMetric simplex_metric_from_name(const std::string& name);
std::string simplex_metric_name(SimplexMetric m);
const std::vector<std::string>& simplex_metric_names();

Dissimilarity<SimplexPoint> make_simplex_dissimilarity(SimplexMetric m);

/// Cut operator along the geodesic family that suits the metric
/// (square-root great circles for fhr, straight chords for hilbert and the
/// norm distances, the mixture line for the divergences; kl may instead
/// use the natural-parameter line when natural_line_for_kl is set).
GeodesicCut<SimplexPoint> make_simplex_geodesic_cut(SimplexMetric m,
                                                    bool natural_line_for_kl = false,
                                                    Tolerance tol = {1e-12, 1e-9, 200});

/// Dissimilarities on positive measures: "birkhoff", "ekl", "rekl",
/// "sekl", "cs".
enum class ConeMetric { Birkhoff, ExtKl, ReverseExtKl, SymExtKl, CauchySchwarz };

ConeMetric cone_metric_from_name(const std::string& name);
std::string cone_metric_name(ConeMetric m);
const std::vector<std::string>& cone_metric_names();

Dissimilarity<ConeVector> make_cone_dissimilarity(ConeMetric m);

/// Dissimilarities on SPD / correlation matrices: "birkhoff" ("hilbert" is
/// an alias: the same formula is the elliptope metric on unit-diagonal
/// inputs), "thompson", "funk", "logdet", "rlogdet", "slogdet",
/// "sqrtlogdet", "euc", "l1".
enum class MatrixMetric {
    Birkhoff,
    Thompson,
    Funk,
    LogDet,
    ReverseLogDet,
    SymLogDet,
    SqrtLogDet,
    Frobenius,
    EntrywiseL1,
};

MatrixMetric matrix_metric_from_name(const std::string& name);
std::string matrix_metric_name(MatrixMetric m);
const std::vector<std::string>& matrix_metric_names();

Dissimilarity<SpdMatrix> make_matrix_dissimilarity(MatrixMetric m);

} // namespace hgeo
