#include "hgeo/distances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionMismatchError(std::string(what) + ": sizes " +
                                     std::to_string(a) + " vs " + std::to_string(b));
}

double clamped_acos(double x) {
    return std::acos(std::clamp(x, -1.0, 1.0));
}

double kl_raw(const std::vector<double>& p, const std::vector<double>& q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        acc += p[i] * std::log(p[i] / q[i]);
    return acc;
}

double cauchy_schwarz_raw(const std::vector<double>& p, const std::vector<double>& q) {
    double pq = 0.0, pp = 0.0, qq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        pq += p[i] * q[i];
        pp += p[i] * p[i];
        qq += q[i] * q[i];
    }
    return -std::log(pq / std::sqrt(pp * qq));
}

} // namespace

double rho_fhr(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "rho_fhr");
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * q[i]);
    return 2.0 * clamped_acos(s);
}

double rho_kl(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "rho_kl");
    return kl_raw(p.coords(), q.coords());
}

double rho_kl_variant(const SimplexPoint& p, const SimplexPoint& q, KlVariant kind) {
    switch (kind) {
        case KlVariant::Reverse: return rho_kl(q, p);
        case KlVariant::Symmetrized: return rho_kl(p, q) + rho_kl(q, p);
    }
    throw std::invalid_argument("rho_kl_variant: bad kind");
}

double rho_ext_kl(const ConeVector& p, const ConeVector& q, ExtKlKind kind) {
    check_same_size(p.size(), q.size(), "rho_ext_kl");
    const auto& a = p.coords();
    const auto& b = q.coords();
    double acc = 0.0;
    switch (kind) {
        case ExtKlKind::Forward:
            for (std::size_t i = 0; i < a.size(); ++i)
                acc += a[i] * std::log(a[i] / b[i]) + b[i] - a[i];
            break;
        case ExtKlKind::Reverse:
            for (std::size_t i = 0; i < a.size(); ++i)
                acc += b[i] * std::log(b[i] / a[i]) + a[i] - b[i];
            break;
        case ExtKlKind::Symmetrized:
            for (std::size_t i = 0; i < a.size(); ++i)
                acc += (a[i] - b[i]) * std::log(a[i] / b[i]);
            break;
    }
    return acc;
}

double rho_l1(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "rho_l1");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
    return acc;
}

double rho_tv(const SimplexPoint& p, const SimplexPoint& q) {
    return 0.5 * rho_l1(p, q);
}

double rho_euclidean(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "rho_euclidean");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = p[i] - q[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double rho_cauchy_schwarz(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "rho_cauchy_schwarz");
    return cauchy_schwarz_raw(p.coords(), q.coords());
}

double rho_cauchy_schwarz(const ConeVector& p, const ConeVector& q) {
    check_same_size(p.size(), q.size(), "rho_cauchy_schwarz");
    return cauchy_schwarz_raw(p.coords(), q.coords());
}

double rho_hilbert(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "rho_hilbert");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = std::log(p[i]) - std::log(q[i]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

LineClip clip_segment_to_simplex(const SimplexPoint& p, const SimplexPoint& q) {
    check_same_size(p.size(), q.size(), "clip_segment_to_simplex");
    const double inf = std::numeric_limits<double>::infinity();
    LineClip clip{-inf, inf};
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == q[i]) continue;  // line parallel to this facet
        double t = p[i] / (p[i] - q[i]);
        if (t <= 0.0) {
            clip.t0 = std::max(clip.t0, t);
        } else if (t >= 1.0) {
            clip.t1 = std::min(clip.t1, t);
        }
    }
    return clip;
}

double rho_hilbert_crossratio(const SimplexPoint& p, const SimplexPoint& q) {
    LineClip clip = clip_segment_to_simplex(p, q);
    if (std::isinf(clip.t0) || std::isinf(clip.t1)) return 0.0;  // p = q
    if (clip.t0 == 0.0 || clip.t1 == 1.0)
        return std::numeric_limits<double>::infinity();  // endpoint on a facet
    return std::abs(std::log1p(-1.0 / clip.t0) - std::log1p(-1.0 / clip.t1));
}

double rho_birkhoff(const ConeVector& p, const ConeVector& q) {
    check_same_size(p.size(), q.size(), "rho_birkhoff");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double d = std::log(p[i]) - std::log(q[i]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

double rho_funk(const SimplexPoint& p, const SimplexPoint& q) {
    LineClip clip = clip_segment_to_simplex(p, q);
    if (std::isinf(clip.t1)) return 0.0;  // p = q
    if (clip.t1 == 1.0) return std::numeric_limits<double>::infinity();
    return -std::log1p(-1.0 / clip.t1);
}

double rho_polytope_hilbert(const std::vector<double>& x,
                            const std::vector<double>& y,
                            const PolytopeHalfspaces& polytope) {
    check_same_size(x.size(), y.size(), "rho_polytope_hilbert");
    const std::size_t m = polytope.facets.size();
    std::vector<double> log_ratio(m);  // log(L_i(x) / L_i(y))
    for (std::size_t i = 0; i < m; ++i) {
        const auto& f = polytope.facets[i];
        check_same_size(f.normal.size(), x.size(), "rho_polytope_hilbert facet");
        double lx = f.offset, ly = f.offset;
        for (std::size_t j = 0; j < x.size(); ++j) {
            lx += f.normal[j] * x[j];
            ly += f.normal[j] * y[j];
        }
        if (!(lx > 0.0) || !(ly > 0.0))
            throw PointOutsidePolytopeError(
                "rho_polytope_hilbert: facet " + std::to_string(i) +
                " is not strictly positive at an argument");
        log_ratio[i] = std::log(lx) - std::log(ly);
    }
    // max_{i,j} [log_ratio_i - log_ratio_j]
    return variation_norm(log_ratio);
}

double positive_matrix_cross_ratio(const std::vector<std::vector<double>>& m) {
    const std::size_t rows = m.size();
    if (rows == 0) throw DimensionTooSmallError("positive_matrix_cross_ratio: empty");
    const std::size_t cols = m[0].size();
    for (const auto& row : m) {
        check_same_size(row.size(), cols, "positive_matrix_cross_ratio");
        for (double v : row)
            if (!(v > 0.0))
                throw NonPositiveCoordinateError(
                    "positive_matrix_cross_ratio: entries must be positive");
    }
    double best = 1.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            for (std::size_t k = 0; k < cols; ++k)
                for (std::size_t l = 0; l < cols; ++l)
                    best = std::max(best, (m[i][k] * m[j][l]) / (m[j][k] * m[i][l]));
    return best;
}

double birkhoff_contraction_ratio(const std::vector<std::vector<double>>& m) {
    double root = std::sqrt(positive_matrix_cross_ratio(m));
    return (root - 1.0) / (root + 1.0);
}

} // namespace hgeo
