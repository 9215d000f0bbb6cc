#pragma once

#include <vector>

#include "hgeo/simplex.hpp"

namespace hgeo {

/// Rao spherical distance 2*arccos(sum_i sqrt(p_i q_i)), in [0, pi].
double rho_fhr(const SimplexPoint& p, const SimplexPoint& q);

/// Kullback-Leibler divergence sum_i p_i log(p_i / q_i).
double rho_kl(const SimplexPoint& p, const SimplexPoint& q);

enum class KlVariant { Reverse, Symmetrized };

/// Reverse KL swaps the arguments; Symmetrized adds both directions.
double rho_kl_variant(const SimplexPoint& p, const SimplexPoint& q, KlVariant kind);

enum class ExtKlKind { Forward, Reverse, Symmetrized };

/// KL divergence extended to unnormalized positive measures:
/// sum_i p_i log(p_i / q_i) + q_i - p_i, plus the reverse and
/// symmetrized combinations.
double rho_ext_kl(const ConeVector& p, const ConeVector& q, ExtKlKind kind);

/// L1 distance of the coordinate vectors; twice the total variation.
double rho_l1(const SimplexPoint& p, const SimplexPoint& q);
double rho_tv(const SimplexPoint& p, const SimplexPoint& q);

double rho_euclidean(const SimplexPoint& p, const SimplexPoint& q);

/// Cauchy-Schwarz divergence -log(<p,q> / (|p| |q|)). Projective: invariant
/// to positive scaling of either argument, hence also defined on rays.
double rho_cauchy_schwarz(const SimplexPoint& p, const SimplexPoint& q);
double rho_cauchy_schwarz(const ConeVector& p, const ConeVector& q);

/// Hilbert simplex distance, computed as the variation norm of the
/// log-coordinate difference (O(d), exact).
double rho_hilbert(const SimplexPoint& p, const SimplexPoint& q);

/// Hilbert simplex distance through the cross-ratio of the segment (p, q)
/// clipped against the facet hyperplanes. Same value as rho_hilbert;
/// retained as an independent route for validation.
double rho_hilbert_crossratio(const SimplexPoint& p, const SimplexPoint& q);

/// Projective distance between rays of the positive orthant:
/// log max_{i,j} (p_i q_j)/(p_j q_i), evaluated as a variation norm.
/// Dehomogenizes to rho_hilbert.
double rho_birkhoff(const ConeVector& p, const ConeVector& q);

/// Directed (asymmetric) distance -log(1 - 1/t1) where t1 is the forward
/// boundary intersection of the segment (p, q). Adding the reverse
/// direction gives rho_hilbert.
double rho_funk(const SimplexPoint& p, const SimplexPoint& q);

/// Parameters of the line x(t) = (1-t) p + t q clipped to the simplex:
/// the backward exit t0 <= 0 and the forward exit t1 >= 1. Infinite when
/// the corresponding side never exits (p = q).
struct LineClip {
    double t0;
    double t1;
};
LineClip clip_segment_to_simplex(const SimplexPoint& p, const SimplexPoint& q);

/// Polytope interior given as affine functionals L_i(x) = a_i . x + b_i
/// that are positive inside.
struct PolytopeHalfspaces {
    struct Facet {
        std::vector<double> normal;
        double offset = 0.0;
    };
    std::vector<Facet> facets;
};

/// Hilbert distance of a bounded polytope domain:
/// max_{i,j} log[(L_i(x) L_j(y)) / (L_j(x) L_i(y))].
double rho_polytope_hilbert(const std::vector<double>& x,
                            const std::vector<double>& y,
                            const PolytopeHalfspaces& polytope);

/// Largest cross ratio a(M) = max_{i,j,k,l} M_ik M_jl / (M_jk M_il) of a
/// strictly positive matrix, given in row-major order.
double positive_matrix_cross_ratio(const std::vector<std::vector<double>>& m);

/// Contraction ratio (sqrt(a) - 1)/(sqrt(a) + 1) < 1 of a strictly positive
/// linear map acting on cone rays: coarse graining through such a map
/// shrinks rho_birkhoff by at least this factor.
double birkhoff_contraction_ratio(const std::vector<std::vector<double>>& m);

} // namespace hgeo
