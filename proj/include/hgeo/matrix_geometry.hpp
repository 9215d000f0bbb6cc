#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hgeo/simplex.hpp"

namespace hgeo {

/// Symmetric positive definite matrix. Construction verifies symmetry to
/// 1e-12 and definiteness by attempting a Cholesky factorization; boundary
/// (rank deficient) matrices are rejected. Immutable.
class SpdMatrix {
public:
    explicit SpdMatrix(Eigen::MatrixXd m);

    const Eigen::MatrixXd& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

private:
    Eigen::MatrixXd m_;
};

/// SPD matrix with unit diagonal (a point of the correlation elliptope).
class CorrelationMatrix : public SpdMatrix {
public:
    explicit CorrelationMatrix(Eigen::MatrixXd m);
};

/// A two-sided bracket produced by the boundary-bisection routine.
struct IntervalEstimate {
    double lower;
    double upper;
};

/// Eigenvalues of A^-1 B in ascending order, all strictly positive.
/// Computed by whitening: factor A = L L^T and eigendecompose the
/// symmetric matrix L^-1 B L^-T.
std::vector<double> generalized_eigenvalues(const SpdMatrix& a, const SpdMatrix& b);

/// Projective distance between SPD rays:
/// log(lambda_max / lambda_min) of A^-1 B. Invariant to positive scaling
/// of either argument.
double rho_birkhoff_psd(const SpdMatrix& a, const SpdMatrix& b);

/// The same log-eigenvalue-ratio formula restricted to correlation
/// matrices, where the unit diagonal removes the projective slack and it
/// becomes a proper metric of the elliptope.
double rho_hilbert_elliptope(const CorrelationMatrix& a, const CorrelationMatrix& b);

/// max_i |log lambda_i(A^-1 B)|: a (non-projective) metric of the SPD cone.
double rho_thompson(const SpdMatrix& a, const SpdMatrix& b);

/// Directed distance log inf{beta : A <= beta B} = log lambda_max(B^-1 A).
/// May be negative; forward plus reverse equals rho_birkhoff_psd.
double rho_funk_matrix(const SpdMatrix& a, const SpdMatrix& b);

/// Log-det divergence tr(A B^-1) - log|A B^-1| - d (>= 0, asymmetric).
double rho_logdet(const SpdMatrix& a, const SpdMatrix& b);

/// Variation norm of the log spectrum of X^-1 Y for a general invertible
/// pair whose pencil has a positive real spectrum (e.g. congruence images
/// of SPD pairs). Used to check invariance properties of rho_birkhoff_psd.
double log_spectrum_variation(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

/// Interval bracketing the elliptope distance by bisecting for the two
/// boundary crossings of the line through c1 and c2 (definiteness checked
/// by Cholesky), then evaluating the cross ratio with the boundary points
/// rounded both inward and outward. tol.abs_tol is the bracket width in
/// the line parameter at which bisection stops.
IntervalEstimate hilbert_elliptope_bisection(const CorrelationMatrix& c1,
                                             const CorrelationMatrix& c2,
                                             const Tolerance& tol = {1e-8, 1e-9, 200});

/// Frobenius and entrywise-L1 matrix distances (baselines for benchmarks).
double frobenius_distance(const SpdMatrix& a, const SpdMatrix& b);
double entrywise_l1_distance(const SpdMatrix& a, const SpdMatrix& b);

} // namespace hgeo
