#pragma once

#include <Eigen/Dense>

#include "hecs/complex.hpp"
#include "hecs/hecs.hpp"

namespace hecs {

/// kappa_plus = sigma_max / sigma_min_plus over singular values above the
/// numerical-rank cutoff tau = max(rows, cols) * sigma_max * machine_eps.
struct SpectralSummary {
    double sigma_min_plus = 0.0;
    double sigma_max = 0.0;
    double kappa_plus = 0.0;
    int rank = 0;
    int kernel_dim = 0;
};

/// Spectral summary of a dense matrix. Symmetric inputs go through a
/// self-adjoint eigendecomposition (their singular values), anything else
/// through an SVD. Throws dense_cap_exceeded past the cap and
/// invalid_argument on a numerically zero matrix (no positive spectrum).
SpectralSummary kappa_plus(const Eigen::MatrixXd& A, int dense_cap = kDefaultDenseCap);

/// Betti number beta_k = dim ker L_k by dense SVD rank, k in {0, 1}.
int betti(const SimplicialComplex2& K, int k, int dense_cap = kDefaultDenseCap);

/// One step of the Schur-complement recursion at the given pivot:
///   c = S d_i / sqrt(S_ii),  S_next = S - c c^T.
struct SchurStep {
    Eigen::MatrixXd next;
    Eigen::VectorXd column;
};
SchurStep schur_step(const Eigen::MatrixXd& S, int pivot);

/**
 * Closed form of the first Schur complement of the weighted L1_up after
 * eliminating `pivot_edge`: H1 sums the rank-1 terms of triangles avoiding
 * the edge, K1 is the cyclic term
 *   1/(2 Omega) * sum_{t1, t2 incident} w2(t1) w2(t2) (e_t1 - e_t2)(...)^T
 * with Omega the total incident triangle weight. Columns are sign-normalized
 * so the pivot coordinate is positive, which makes the formula valid for any
 * pivot edge, not only the globally first one. H1 + K1 equals the recursion
 * step on L1_up at the same pivot.
 */
struct Schur1Oracle {
    Eigen::MatrixXd H1;
    Eigen::MatrixXd K1;
    double omega = 0.0;
};
Schur1Oracle schur1_oracle(const SimplicialComplex2& K, int pivot_edge = 0);

/// Both sides of the conditioning identity for a subsampled preconditioner:
/// lhs is kappa_plus of the preconditioned operator built with the exact
/// dense Moore-Penrose inverse of the full rectangular C, rhs is
/// kappa_plus(Pi V1)^2 with V1 the right singular vectors of the weighted
/// B2. Throws kernel_clash when the subsample breaks im B2^T.
struct Thm65Check {
    double lhs = 0.0;
    double rhs = 0.0;
};
Thm65Check verify_conditioning_identity(const SimplicialComplex2& K, const HecsPreconditioner& P,
                                        int dense_cap = kDefaultDenseCap);

/// Moore-Penrose pseudo-inverse by SVD with the standard rank cutoff.
Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& A);

}  // namespace hecs
