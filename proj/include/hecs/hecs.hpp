#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hecs/collapse.hpp"
#include "hecs/complex.hpp"
#include "hecs/sparse_matrix.hpp"

namespace hecs {

/**
 * Lower-trapezoidal preconditioner assembled from a collapsing sequence of a
 * weakly collapsible subcomplex.
 *
 * `edge_perm` lists collapsed edges first, in collapse order, then the
 * remaining edges ascending; `tri_perm` does the same for triangles. `pi` is
 * the 0/1 diagonal selecting the sampled triangles. `factor` holds the r
 * sampled columns of the permuted weighted boundary operator: column j has
 * its first nonzero exactly at row j, so the leading r x r block is lower
 * triangular with nonzero diagonal. nnz(factor) is at most 3 * m1.
 */
struct HecsPreconditioner {
    std::vector<int> edge_perm;
    std::vector<int> tri_perm;
    std::vector<std::uint8_t> pi;
    SparseColumnMatrix factor;  // m1 x r
    int r = 0;

    std::vector<int> edge_rank;  // inverse of edge_perm
};

/// Greedy heavy scan: triangles are visited in descending weight (ties by
/// ascending index) and accepted iff the subcomplex stays weakly
/// collapsible. `sigma`/`tau` is a collapsing sequence of the final
/// subcomplex; `sampled` lists accepted triangles in scan order.
struct HeavyScanResult {
    std::vector<int> sampled;
    std::vector<int> sigma;
    std::vector<int> tau;
};

enum class ScanMode {
    rebuild,      // re-run the greedy collapse from scratch per candidate
    incremental,  // keep adjacency sets across candidates with an undo log
};

HeavyScanResult heavy_subcomplex(const SimplicialComplex2& K,
                                 ScanMode mode = ScanMode::incremental);

/// Two-stage pipeline: greedy-collapse K down to its 2-core, run the heavy
/// scan on the core, concatenate the two collapsing sequences and assemble
/// the factor with the original triangle weights.
HecsPreconditioner build_preconditioner(const SimplicialComplex2& K,
                                        ScanMode mode = ScanMode::incremental);

/// Assembles the preconditioner from an explicit collapsing sequence
/// (original edge/triangle indices). Validates that the permuted sampled
/// columns are lower-trapezoidal, which is exactly the condition for
/// sigma/tau to be a valid collapsing sequence of the sampled subcomplex.
HecsPreconditioner assemble_preconditioner(const SimplicialComplex2& K,
                                           const std::vector<int>& sigma,
                                           const std::vector<int>& tau);

/**
 * Pseudo-inverse application through the leading triangular block.
 *
 * Non-transposed: permute v, forward-substitute the leading r x r block
 * against the first r entries, return the length-r coefficients. Transposed:
 * back-substitute the transposed block, scatter to edge coordinates (zeros
 * beyond row r), un-permute. On vectors in range(C) the non-transposed
 * result equals the exact Moore-Penrose C^+ v; cost is O(nnz(factor)).
 */
Eigen::VectorXd apply_pinv(const HecsPreconditioner& P, const Eigen::VectorXd& v,
                           bool transposed);

/// The r-dimensional symmetric PSD operator y -> C^+ L1_up C^{+T} y with
/// both pseudo-inverse applications done through the leading block.
LinearOperator preconditioned_operator(const HecsPreconditioner& P, const SimplicialComplex2& K);

/// Subcomplex keeping all vertices and edges and only the triangles with
/// pi = 1 (weights carried over).
SimplicialComplex2 sampled_subcomplex(const SimplicialComplex2& K,
                                      const std::vector<std::uint8_t>& pi);

/// Debug dump: permutations, pi and the factor in (row, col, value) triplets.
void dump_preconditioner(const HecsPreconditioner& P, std::ostream& out);

}  // namespace hecs
