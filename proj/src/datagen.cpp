#include "hgeo/datagen.hpp"

#include <algorithm>
#include <cmath>

#include "hgeo/errors.hpp"
#include "hgeo/rng.hpp"

namespace hgeo {

namespace {

using nlohmann::json;

/// Cluster sizes summing to n and differing by at most one.
std::vector<std::size_t> balanced_sizes(std::size_t n, std::size_t k) {
    std::vector<std::size_t> sizes(k, n / k);
    for (std::size_t i = 0; i < n % k; ++i) ++sizes[i];
    return sizes;
}

std::vector<double> softmax_of(const std::vector<double>& z) {
    double hi = *std::max_element(z.begin(), z.end());
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = std::exp(z[i] - hi);
    return out;  // SimplexPoint construction normalizes
}

std::vector<std::vector<double>> raw_simplex_clusters(const SimplexClusterSpec& spec,
                                                      std::vector<int>& labels, Rng& rng) {
    if (spec.n < spec.k || spec.k < 1)
        throw std::invalid_argument("simplex clusters: need n >= k >= 1");
    auto sizes = balanced_sizes(spec.n, spec.k);
    std::vector<std::vector<double>> raw;
    raw.reserve(spec.n);
    labels.clear();
    labels.reserve(spec.n);
    for (std::size_t c = 0; c < spec.k; ++c) {
        auto center = rng.dirichlet_uniform(spec.d + 1);
        std::vector<double> log_center(center.size());
        for (std::size_t i = 0; i < center.size(); ++i) log_center[i] = std::log(center[i]);
        for (std::size_t m = 0; m < sizes[c]; ++m) {
            std::vector<double> z(log_center);
            for (auto& x : z) {
                double eps = spec.noise == NoiseKind::Gaussian ? rng.normal()
                                                               : rng.student_t(5.0);
                x += spec.sigma * eps;
            }
            raw.push_back(softmax_of(z));
            labels.push_back(static_cast<int>(c) + 1);
        }
    }
    return raw;
}

json spec_to_json(const SimplexClusterSpec& spec) {
    return json{{"k", spec.k},
                {"n", spec.n},
                {"d", spec.d},
                {"sigma", spec.sigma},
                {"noise", spec.noise == NoiseKind::Gaussian ? "gaussian" : "student5"},
                {"seed", spec.seed}};
}

/// Wishart draw by the Bartlett construction: scale = L L^T, lower
/// triangular T with chi distributed diagonal, W = L T T^T L^T.
Eigen::MatrixXd wishart(const Eigen::MatrixXd& scale, double dof, Rng& rng) {
    const auto d = scale.rows();
    Eigen::LLT<Eigen::MatrixXd> llt(scale);
    if (llt.info() != Eigen::Success)
        throw FactorizationFailureError("wishart: scale matrix is not positive definite");
    Eigen::MatrixXd l = llt.matrixL();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        t(i, i) = std::sqrt(rng.chi_square(dof - static_cast<double>(i)));
        for (Eigen::Index j = 0; j < i; ++j) t(i, j) = rng.normal();
    }
    Eigen::MatrixXd lt = l * t;
    return lt * lt.transpose();
}

Eigen::MatrixXd inverse_wishart(const Eigen::MatrixXd& scale, double dof, Rng& rng) {
    Eigen::MatrixXd w = wishart(scale.inverse(), dof, rng);
    return w.inverse();
}

Eigen::MatrixXd to_unit_diagonal(const Eigen::MatrixXd& s) {
    Eigen::VectorXd inv_sqrt = s.diagonal().cwiseSqrt().cwiseInverse();
    return inv_sqrt.asDiagonal() * s * inv_sqrt.asDiagonal();
}

/// Orthonormal frame from the QR factorization of a Gaussian matrix, with
/// the sign convention that makes the distribution rotation invariant.
Eigen::MatrixXd random_orthonormal(std::size_t d, Rng& rng) {
    Eigen::MatrixXd g(d, d);
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < q.cols(); ++j)
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
    return q;
}

} // namespace

LabeledDataset<SimplexPoint> gen_simplex_clusters(const SimplexClusterSpec& spec) {
    Rng rng(spec.seed);
    LabeledDataset<SimplexPoint> out;
    auto raw = raw_simplex_clusters(spec, out.labels, rng);
    out.points.reserve(raw.size());
    for (auto& r : raw) out.points.emplace_back(std::move(r));
    out.spec = spec_to_json(spec);
    out.spec["kind"] = "simplex";
    out.seed = spec.seed;
    return out;
}

LabeledDataset<ConeVector> gen_positive_measures(const SimplexClusterSpec& spec) {
    Rng rng(spec.seed);
    LabeledDataset<ConeVector> out;
    auto raw = raw_simplex_clusters(spec, out.labels, rng);
    out.points.reserve(raw.size());
    for (auto& r : raw) {
        double total = 0.0;
        for (double x : r) total += x;
        double mass = rng.gamma(10.0, 0.1);
        for (auto& x : r) x *= mass / total;
        out.points.emplace_back(std::move(r));
    }
    out.spec = spec_to_json(spec);
    out.spec["kind"] = "cone";
    out.spec["mass_gamma"] = {10.0, 0.1};
    out.seed = spec.seed;
    return out;
}

LabeledDataset<CorrelationMatrix> gen_elliptope_clusters(const ElliptopeClusterSpec& spec) {
    if (!(spec.nu1 > spec.d + 1) || !(spec.nu2 > spec.d + 1))
        throw std::invalid_argument("elliptope clusters: need nu > d + 1");
    Rng rng(spec.seed);
    LabeledDataset<CorrelationMatrix> out;
    auto sizes = balanced_sizes(spec.n, spec.k);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(spec.d, spec.d);
    int redraws = 0;
    auto draw_valid = [&](const Eigen::MatrixXd& scale, double dof) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            try {
                return inverse_wishart(scale, dof, rng);
            } catch (const FactorizationFailureError&) {
                ++redraws;
            }
        }
        throw DegenerateDrawError("elliptope clusters: persistent singular draws");
    };
    for (std::size_t c = 0; c < spec.k; ++c) {
        Eigen::MatrixXd scale = draw_valid(eye, spec.nu1);
        for (std::size_t m = 0; m < sizes[c]; ++m) {
            for (;;) {
                Eigen::MatrixXd s = draw_valid(scale, spec.nu2);
                try {
                    out.points.emplace_back(to_unit_diagonal(s));
                    break;
                } catch (const FactorizationFailureError&) {
                    ++redraws;  // numerically semidefinite after normalization
                }
            }
            out.labels.push_back(static_cast<int>(c) + 1);
        }
    }
    out.spec = json{{"kind", "elliptope"}, {"k", spec.k},     {"n", spec.n},
                    {"d", spec.d},         {"nu1", spec.nu1}, {"nu2", spec.nu2},
                    {"seed", spec.seed},   {"degenerate_redraws", redraws}};
    out.seed = spec.seed;
    return out;
}

LabeledDataset<SpdMatrix> gen_psd_clusters(const PsdClusterSpec& spec) {
    if (!(spec.gamma_shape > 0.0) || !(spec.gamma_scale > 0.0) || spec.sigma < 0.0)
        throw std::invalid_argument("psd clusters: bad gamma or sigma parameters");
    Rng rng(spec.seed);
    LabeledDataset<SpdMatrix> out;
    auto sizes = balanced_sizes(spec.n, spec.k);
    for (std::size_t c = 0; c < spec.k; ++c) {
        Eigen::MatrixXd frame = random_orthonormal(spec.d, rng);
        Eigen::VectorXd eigs(spec.d);
        for (Eigen::Index i = 0; i < eigs.size(); ++i)
            eigs(i) = rng.gamma(spec.gamma_shape, spec.gamma_scale);
        Eigen::MatrixXd base = frame * eigs.asDiagonal() * frame.transpose();
        for (std::size_t m = 0; m < sizes[c]; ++m) {
            Eigen::MatrixXd a(spec.d, spec.d);
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = rng.normal();
            out.points.emplace_back(base + spec.sigma * (a * a.transpose()));
            out.labels.push_back(static_cast<int>(c) + 1);
        }
    }
    out.spec = json{{"kind", "psd"},
                    {"k", spec.k},
                    {"n", spec.n},
                    {"d", spec.d},
                    {"gamma_shape", spec.gamma_shape},
                    {"gamma_scale", spec.gamma_scale},
                    {"sigma", spec.sigma},
                    {"seed", spec.seed}};
    out.seed = spec.seed;
    return out;
}

} // namespace hgeo
