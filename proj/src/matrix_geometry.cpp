#include "hgeo/matrix_geometry.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

void check_square_symmetric(const Eigen::MatrixXd& m, const char* what) {
    if (m.rows() != m.cols())
        throw DimensionMismatchError(std::string(what) + ": matrix is not square");
    if (m.rows() < 1)
        throw DimensionTooSmallError(std::string(what) + ": empty matrix");
    double skew = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (skew > 1e-12)
        throw NotSymmetricError(std::string(what) + ": symmetry violated by " +
                                std::to_string(skew));
}

void check_same_dim(const SpdMatrix& a, const SpdMatrix& b, const char* what) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError(std::string(what) + ": dimensions " +
                                     std::to_string(a.dim()) + " vs " +
                                     std::to_string(b.dim()));
}

bool is_positive_definite(const Eigen::MatrixXd& m) {
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    return llt.info() == Eigen::Success;
}

} // namespace

SpdMatrix::SpdMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
    check_square_symmetric(m_, "SpdMatrix");
    m_ = 0.5 * (m_ + m_.transpose()).eval();  // scrub roundoff skew
    if (!is_positive_definite(m_))
        throw FactorizationFailureError("SpdMatrix: matrix is not positive definite");
}

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXd m) : SpdMatrix(std::move(m)) {
    for (Eigen::Index i = 0; i < dim(); ++i) {
        if (std::abs(matrix()(i, i) - 1.0) > 1e-12)
            throw NotSymmetricError(
                "CorrelationMatrix: diagonal entry " + std::to_string(i) +
                " = " + std::to_string(matrix()(i, i)) + ", expected 1");
    }
}

std::vector<double> generalized_eigenvalues(const SpdMatrix& a, const SpdMatrix& b) {
    check_same_dim(a, b, "generalized_eigenvalues");
    Eigen::LLT<Eigen::MatrixXd> llt(a.matrix());
    if (llt.info() != Eigen::Success)
        throw FactorizationFailureError("generalized_eigenvalues: Cholesky of A failed");
    Eigen::MatrixXd l = llt.matrixL();
    // M = L^-1 B L^-T is symmetric with the spectrum of A^-1 B.
    Eigen::MatrixXd m = l.triangularView<Eigen::Lower>().solve(b.matrix());
    m = l.triangularView<Eigen::Lower>().solve(m.transpose().eval());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
    if (es.info() != Eigen::Success)
        throw FactorizationFailureError("generalized_eigenvalues: eigensolve failed");
    std::vector<double> ev(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
    return ev;  // Eigen returns ascending order
}

double rho_birkhoff_psd(const SpdMatrix& a, const SpdMatrix& b) {
    auto ev = generalized_eigenvalues(a, b);
    return std::log(ev.back()) - std::log(ev.front());
}

double rho_hilbert_elliptope(const CorrelationMatrix& a, const CorrelationMatrix& b) {
    return rho_birkhoff_psd(a, b);
}

double rho_thompson(const SpdMatrix& a, const SpdMatrix& b) {
    auto ev = generalized_eigenvalues(a, b);
    return std::max(std::abs(std::log(ev.front())), std::abs(std::log(ev.back())));
}

double rho_funk_matrix(const SpdMatrix& a, const SpdMatrix& b) {
    auto ev = generalized_eigenvalues(b, a);
    return std::log(ev.back());
}

double rho_logdet(const SpdMatrix& a, const SpdMatrix& b) {
    check_same_dim(a, b, "rho_logdet");
    Eigen::LLT<Eigen::MatrixXd> llt_b(b.matrix());
    if (llt_b.info() != Eigen::Success)
        throw FactorizationFailureError("rho_logdet: Cholesky of B failed");
    Eigen::MatrixXd m = llt_b.solve(a.matrix());  // B^-1 A, trace equals tr(A B^-1)
    double log_det = 0.0;
    Eigen::LLT<Eigen::MatrixXd> llt_a(a.matrix());
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        log_det += 2.0 * (std::log(llt_a.matrixLLT()(i, i)) -
                          std::log(llt_b.matrixLLT()(i, i)));
    }
    double v = m.trace() - log_det - static_cast<double>(a.dim());
    return std::max(v, 0.0);  // clamp roundoff at the minimum A = B
}

double log_spectrum_variation(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols() || x.rows() != x.cols())
        throw DimensionMismatchError("log_spectrum_variation: incompatible shapes");
    Eigen::MatrixXd pencil = x.partialPivLu().solve(y);
    Eigen::EigenSolver<Eigen::MatrixXd> es(pencil);
    if (es.info() != Eigen::Success)
        throw FactorizationFailureError("log_spectrum_variation: eigensolve failed");
    std::vector<double> logs;
    logs.reserve(static_cast<std::size_t>(x.rows()));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        std::complex<double> lam = es.eigenvalues()(i);
        if (!(lam.real() > 0.0))
            throw FactorizationFailureError(
                "log_spectrum_variation: pencil spectrum is not positive");
        logs.push_back(std::log(lam.real()));
    }
    return variation_norm(logs);
}

IntervalEstimate hilbert_elliptope_bisection(const CorrelationMatrix& c1,
                                             const CorrelationMatrix& c2,
                                             const Tolerance& tol) {
    check_same_dim(c1, c2, "hilbert_elliptope_bisection");
    Eigen::MatrixXd delta = c2.matrix() - c1.matrix();
    if (delta.cwiseAbs().maxCoeff() == 0.0)
        throw DegenerateLineError("hilbert_elliptope_bisection: identical matrices");

    auto inside = [&](double t) {
        return is_positive_definite(c1.matrix() + t * delta);
    };

    // Walk outward until the line leaves the elliptope, then bisect the
    // crossing down to a bracket of width tol.abs_tol in t.
    auto boundary = [&](double t_in, double step) {
        double t_out = t_in + step;
        while (inside(t_out)) {
            t_in = t_out;
            step *= 2.0;
            t_out = t_in + step;
        }
        for (int i = 0; i < tol.max_iter && std::abs(t_out - t_in) > tol.abs_tol; ++i) {
            double mid = 0.5 * (t_in + t_out);
            (inside(mid) ? t_in : t_out) = mid;
        }
        return std::pair<double, double>{t_in, t_out};  // (inside, outside)
    };

    auto [back_in, back_out] = boundary(0.0, -1.0);   // t0 side, t <= 0
    auto [fwd_in, fwd_out] = boundary(1.0, 1.0);      // t1 side, t >= 1

    // Cross ratio of (x(t0), c1, c2, x(t1)); with an affine parameterization
    // the chord norms reduce to parameter differences.
    auto cross_ratio = [](double t0, double t1) {
        return std::abs(std::log1p(-1.0 / t0) - std::log1p(-1.0 / t1));
    };

    // Inner boundary points shrink the domain (larger distance); outer
    // points enlarge it (smaller distance).
    double upper = cross_ratio(back_in, fwd_in);
    double lower = cross_ratio(back_out, fwd_out);
    if (lower > upper) std::swap(lower, upper);
    return IntervalEstimate{lower, upper};
}

double frobenius_distance(const SpdMatrix& a, const SpdMatrix& b) {
    check_same_dim(a, b, "frobenius_distance");
    return (a.matrix() - b.matrix()).norm();
}

double entrywise_l1_distance(const SpdMatrix& a, const SpdMatrix& b) {
    check_same_dim(a, b, "entrywise_l1_distance");
    return (a.matrix() - b.matrix()).cwiseAbs().sum();
}

} // namespace hgeo
