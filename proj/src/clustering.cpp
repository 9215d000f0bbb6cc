#include "hgeo/clustering.hpp"

#include <algorithm>
#include <cmath>

namespace hgeo {

namespace {

std::vector<double> lerp(const std::vector<double>& a, const std::vector<double>& b,
                         double t) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = (1.0 - t) * a[i] + t * b[i];
    return out;
}

SimplexPoint point_on_curve(const SimplexPoint& p, const SimplexPoint& q, double t,
                            GeodesicKind kind) {
    switch (kind) {
        case GeodesicKind::EuclideanSegment:
        case GeodesicKind::MixtureLine:
            return SimplexPoint(lerp(p.coords(), q.coords(), t));
        case GeodesicKind::SqrtSphere: {
            std::vector<double> u(p.size());
            for (std::size_t i = 0; i < p.size(); ++i)
                u[i] = (1.0 - t) * std::sqrt(p[i]) + t * std::sqrt(q[i]);
            for (auto& x : u) x = x * x;
            return SimplexPoint(std::move(u));
        }
        case GeodesicKind::NaturalLine: {
            auto tp = natural_params(p);
            auto tq = natural_params(q);
            auto tv = lerp(tp, tq, t);
            // softmax with a prepended zero recovers the coordinates
            double hi = 0.0;
            for (double x : tv) hi = std::max(hi, x);
            std::vector<double> lam(tv.size() + 1);
            lam[0] = std::exp(-hi);
            for (std::size_t i = 0; i < tv.size(); ++i) lam[i + 1] = std::exp(tv[i] - hi);
            return SimplexPoint(std::move(lam));
        }
    }
    throw std::invalid_argument("point_on_curve: bad kind");
}

// Great-circle interpolation in square-root coordinates reaches the target
// arc-length fraction exactly.
SimplexPoint slerp_cut(const SimplexPoint& p, const SimplexPoint& q, double alpha) {
    double dot = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) dot += std::sqrt(p[i] * q[i]);
    double omega = std::acos(std::clamp(dot, -1.0, 1.0));
    if (omega < 1e-15) return p;
    double s = std::sin(omega);
    double ca = std::sin((1.0 - alpha) * omega) / s;
    double cb = std::sin(alpha * omega) / s;
    std::vector<double> u(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        double r = ca * std::sqrt(p[i]) + cb * std::sqrt(q[i]);
        u[i] = r * r;
    }
    return SimplexPoint(std::move(u));
}

} // namespace

// On two coordinates the Hilbert distance is plain length in the log-odds
// coordinate, so the cut has a closed form there.
SimplexPoint hilbert_bernoulli_cut(const SimplexPoint& p, const SimplexPoint& q,
                                   double alpha) {
    auto odds = [](const SimplexPoint& x) { return std::log(x[0]) - std::log(x[1]); };
    double theta = (1.0 - alpha) * odds(p) + alpha * odds(q);
    double lam0 = 1.0 / (1.0 + std::exp(-theta));
    return SimplexPoint({lam0, 1.0 - lam0});
}

SimplexPoint geodesic_cut(const SimplexPoint& p, const SimplexPoint& q, double alpha,
                          const std::function<double(const SimplexPoint&, const SimplexPoint&)>& rho,
                          GeodesicKind kind, const Tolerance& tol) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("geodesic_cut: alpha outside [0, 1]");
    if (alpha == 0.0) return p;
    if (alpha == 1.0) return q;
    if (kind == GeodesicKind::SqrtSphere) return slerp_cut(p, q, alpha);

    double total = rho(p, q);
    if (total == 0.0) return p;
    double target = alpha * total;
    // rho(p, x(t)) is nondecreasing along each supported curve, so bisect.
    double lo = 0.0, hi = 1.0;
    SimplexPoint best = p;
    for (int i = 0; i < tol.max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        best = point_on_curve(p, q, mid, kind);
        double v = rho(p, best);
        if (std::abs(v - target) <= tol.rel_tol * total) return best;
        (v < target ? lo : hi) = mid;
        if (hi - lo < 1e-16) return best;
    }
    throw ToleranceNotReachedError("geodesic_cut: bisection did not converge");
}

KappaStats estimate_kappa(const Dissimilarity<SimplexPoint>& d, std::size_t dim,
                          std::size_t n_samples, Rng& rng) {
    if (n_samples == 0) throw EmptyInputError("estimate_kappa: need samples");
    auto draw = [&] { return SimplexPoint(rng.dirichlet_uniform(dim + 1)); };

    auto finish = [](std::vector<double>& v) {
        KappaStats::Stats s{};
        s.max = *std::max_element(v.begin(), v.end());
        s.min = *std::min_element(v.begin(), v.end());
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        var /= static_cast<double>(v.size());
        s.mean = mean;
        s.std = std::sqrt(var);
        return s;
    };

    std::vector<double> k1;
    std::vector<double> k2;
    k1.reserve(n_samples);
    k2.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        SimplexPoint x = draw(), y = draw(), z = draw();
        double num = d(x, z);
        double den = d(x, y) + d(y, z);
        if (den > 0.0) k1.push_back(num / den);
        double fwd = d(x, y);
        double rev = d(y, x);
        if (fwd > 0.0 && rev > 0.0) k2.push_back(std::max(fwd / rev, rev / fwd));
    }
    KappaStats out;
    out.kappa1 = finish(k1);
    out.kappa2 = finish(k2);
    out.samples = n_samples;
    out.dim = dim;
    return out;
}

} // namespace hgeo
