#include "hgeo/metrics.hpp"

#include <cmath>

#include "hgeo/distances.hpp"
#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

} // namespace

const std::vector<std::string>& simplex_metric_names() {
    static const std::vector<std::string> names = {
        "fhr", "kl", "rkl", "skl", "hilbert", "l1", "tv", "euc", "cs", "funk", "rfunk"};
    return names;
}

SimplexMetric simplex_metric_from_name(const std::string& name) {
    if (name == "fhr") return SimplexMetric::Fhr;
    if (name == "kl") return SimplexMetric::Kl;
    if (name == "rkl") return SimplexMetric::ReverseKl;
    if (name == "skl") return SimplexMetric::SymKl;
    if (name == "hilbert") return SimplexMetric::Hilbert;
    if (name == "l1") return SimplexMetric::L1;
    if (name == "tv") return SimplexMetric::Tv;
    if (name == "euc") return SimplexMetric::Euclidean;
    if (name == "cs") return SimplexMetric::CauchySchwarz;
    if (name == "funk") return SimplexMetric::Funk;
    if (name == "rfunk") return SimplexMetric::ReverseFunk;
    throw UnknownMetricError("unknown simplex metric '" + name +
                             "'; valid names: " + join_names(simplex_metric_names()));
}

std::string simplex_metric_name(SimplexMetric m) {
    switch (m) {
        case SimplexMetric::Fhr: return "fhr";
        case SimplexMetric::Kl: return "kl";
        case SimplexMetric::ReverseKl: return "rkl";
        case SimplexMetric::SymKl: return "skl";
        case SimplexMetric::Hilbert: return "hilbert";
        case SimplexMetric::L1: return "l1";
        case SimplexMetric::Tv: return "tv";
        case SimplexMetric::Euclidean: return "euc";
        case SimplexMetric::CauchySchwarz: return "cs";
        case SimplexMetric::Funk: return "funk";
        case SimplexMetric::ReverseFunk: return "rfunk";
    }
    return "?";
}

Dissimilarity<SimplexPoint> make_simplex_dissimilarity(SimplexMetric m) {
    using P = SimplexPoint;
    switch (m) {
        case SimplexMetric::Fhr:
            return {[](const P& a, const P& b) { return rho_fhr(a, b); }, true, true};
        case SimplexMetric::Kl:
            return {[](const P& a, const P& b) { return rho_kl(a, b); }, false, false};
        case SimplexMetric::ReverseKl:
            return {[](const P& a, const P& b) { return rho_kl(b, a); }, false, false};
        case SimplexMetric::SymKl:
            return {[](const P& a, const P& b) {
                        return rho_kl_variant(a, b, KlVariant::Symmetrized);
                    },
                    true, false};
        case SimplexMetric::Hilbert:
            return {[](const P& a, const P& b) { return rho_hilbert(a, b); }, true, true};
        case SimplexMetric::L1:
            return {[](const P& a, const P& b) { return rho_l1(a, b); }, true, true};
        case SimplexMetric::Tv:
            return {[](const P& a, const P& b) { return rho_tv(a, b); }, true, true};
        case SimplexMetric::Euclidean:
            return {[](const P& a, const P& b) { return rho_euclidean(a, b); }, true, true};
        case SimplexMetric::CauchySchwarz:
            return {[](const P& a, const P& b) { return rho_cauchy_schwarz(a, b); }, true,
                    false};
        case SimplexMetric::Funk:
            return {[](const P& a, const P& b) { return rho_funk(a, b); }, false, false};
        case SimplexMetric::ReverseFunk:
            return {[](const P& a, const P& b) { return rho_funk(b, a); }, false, false};
    }
    throw UnknownMetricError("make_simplex_dissimilarity: bad enum");
}

GeodesicCut<SimplexPoint> make_simplex_geodesic_cut(SimplexMetric m,
                                                    bool natural_line_for_kl,
                                                    Tolerance tol) {
    using P = SimplexPoint;
    auto d = make_simplex_dissimilarity(m);
    switch (m) {
        case SimplexMetric::Fhr:
            return [d, tol](const P& p, const P& q, double a) {
                return geodesic_cut(p, q, a, d.fn, GeodesicKind::SqrtSphere, tol);
            };
        case SimplexMetric::Hilbert:
            return [d, tol](const P& p, const P& q, double a) {
                if (p.size() == 2) return hilbert_bernoulli_cut(p, q, a);
                return geodesic_cut(p, q, a, d.fn, GeodesicKind::EuclideanSegment, tol);
            };
        case SimplexMetric::Kl:
        case SimplexMetric::ReverseKl:
        case SimplexMetric::SymKl: {
            auto kind = natural_line_for_kl ? GeodesicKind::NaturalLine
                                            : GeodesicKind::MixtureLine;
            return [d, tol, kind](const P& p, const P& q, double a) {
                return geodesic_cut(p, q, a, d.fn, kind, tol);
            };
        }
        default:
            return [d, tol](const P& p, const P& q, double a) {
                return geodesic_cut(p, q, a, d.fn, GeodesicKind::EuclideanSegment, tol);
            };
    }
}

const std::vector<std::string>& cone_metric_names() {
    static const std::vector<std::string> names = {"birkhoff", "ekl", "rekl", "sekl", "cs"};
    return names;
}

ConeMetric cone_metric_from_name(const std::string& name) {
    if (name == "birkhoff") return ConeMetric::Birkhoff;
    if (name == "ekl") return ConeMetric::ExtKl;
    if (name == "rekl") return ConeMetric::ReverseExtKl;
    if (name == "sekl") return ConeMetric::SymExtKl;
    if (name == "cs") return ConeMetric::CauchySchwarz;
    throw UnknownMetricError("unknown cone metric '" + name +
                             "'; valid names: " + join_names(cone_metric_names()));
}

std::string cone_metric_name(ConeMetric m) {
    switch (m) {
        case ConeMetric::Birkhoff: return "birkhoff";
        case ConeMetric::ExtKl: return "ekl";
        case ConeMetric::ReverseExtKl: return "rekl";
        case ConeMetric::SymExtKl: return "sekl";
        case ConeMetric::CauchySchwarz: return "cs";
    }
    return "?";
}

Dissimilarity<ConeVector> make_cone_dissimilarity(ConeMetric m) {
    using P = ConeVector;
    switch (m) {
        case ConeMetric::Birkhoff:
            return {[](const P& a, const P& b) { return rho_birkhoff(a, b); }, true, true};
        case ConeMetric::ExtKl:
            return {[](const P& a, const P& b) { return rho_ext_kl(a, b, ExtKlKind::Forward); },
                    false, false};
        case ConeMetric::ReverseExtKl:
            return {[](const P& a, const P& b) { return rho_ext_kl(a, b, ExtKlKind::Reverse); },
                    false, false};
        case ConeMetric::SymExtKl:
            return {[](const P& a, const P& b) {
                        return rho_ext_kl(a, b, ExtKlKind::Symmetrized);
                    },
                    true, false};
        case ConeMetric::CauchySchwarz:
            return {[](const P& a, const P& b) { return rho_cauchy_schwarz(a, b); }, true,
                    false};
    }
    throw UnknownMetricError("make_cone_dissimilarity: bad enum");
}

const std::vector<std::string>& matrix_metric_names() {
    static const std::vector<std::string> names = {
        "birkhoff", "hilbert", "thompson", "funk", "logdet",
        "rlogdet",  "slogdet", "sqrtlogdet", "euc", "l1"};
    return names;
}

MatrixMetric matrix_metric_from_name(const std::string& name) {
    if (name == "birkhoff" || name == "hilbert") return MatrixMetric::Birkhoff;
    if (name == "thompson") return MatrixMetric::Thompson;
    if (name == "funk") return MatrixMetric::Funk;
    if (name == "logdet") return MatrixMetric::LogDet;
    if (name == "rlogdet") return MatrixMetric::ReverseLogDet;
    if (name == "slogdet") return MatrixMetric::SymLogDet;
    if (name == "sqrtlogdet") return MatrixMetric::SqrtLogDet;
    if (name == "euc") return MatrixMetric::Frobenius;
    if (name == "l1") return MatrixMetric::EntrywiseL1;
    throw UnknownMetricError("unknown matrix metric '" + name +
                             "'; valid names: " + join_names(matrix_metric_names()));
}

std::string matrix_metric_name(MatrixMetric m) {
    switch (m) {
        case MatrixMetric::Birkhoff: return "birkhoff";
        case MatrixMetric::Thompson: return "thompson";
        case MatrixMetric::Funk: return "funk";
        case MatrixMetric::LogDet: return "logdet";
        case MatrixMetric::ReverseLogDet: return "rlogdet";
        case MatrixMetric::SymLogDet: return "slogdet";
        case MatrixMetric::SqrtLogDet: return "sqrtlogdet";
        case MatrixMetric::Frobenius: return "euc";
        case MatrixMetric::EntrywiseL1: return "l1";
    }
    return "?";
}

Dissimilarity<SpdMatrix> make_matrix_dissimilarity(MatrixMetric m) {
    using P = SpdMatrix;
    switch (m) {
        case MatrixMetric::Birkhoff:
            return {[](const P& a, const P& b) { return rho_birkhoff_psd(a, b); }, true,
                    true};
        case MatrixMetric::Thompson:
            return {[](const P& a, const P& b) { return rho_thompson(a, b); }, true, true};
        case MatrixMetric::Funk:
            return {[](const P& a, const P& b) { return rho_funk_matrix(a, b); }, false,
                    false};
        case MatrixMetric::LogDet:
            return {[](const P& a, const P& b) { return rho_logdet(a, b); }, false, false};
        case MatrixMetric::ReverseLogDet:
            return {[](const P& a, const P& b) { return rho_logdet(b, a); }, false, false};
        case MatrixMetric::SymLogDet:
            return {[](const P& a, const P& b) {
                        return rho_logdet(a, b) + rho_logdet(b, a);
                    },
                    true, false};
        case MatrixMetric::SqrtLogDet:
            return {[](const P& a, const P& b) { return std::sqrt(rho_logdet(a, b)); },
                    false, true};
        case MatrixMetric::Frobenius:
            return {[](const P& a, const P& b) { return frobenius_distance(a, b); }, true,
                    true};
        case MatrixMetric::EntrywiseL1:
            return {[](const P& a, const P& b) { return entrywise_l1_distance(a, b); },
                    true, true};
    }
    throw UnknownMetricError("make_matrix_dissimilarity: bad enum");
}

} // namespace hgeo
