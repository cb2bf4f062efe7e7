#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "hecs/errors.hpp"
#include "hecs/sparse_matrix.hpp"

namespace hecs {

inline constexpr int kDefaultDenseCap = 4096;

/**
 * Weighted 2-skeleton simplicial complex.
 *
 * Vertices are the integers 0..n_vertices-1. Edges and triangles are stored
 * with ascending vertex indices inside each simplex and the simplex lists
 * sorted lexicographically; under that ordering the first edge of every
 * triangle is the one acted on positively by the order-2 boundary operator.
 * All weights are strictly positive.
 */
struct SimplicialComplex2 {
    int n_vertices = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<double> w0, w1, w2;

    int m0() const { return n_vertices; }
    int m1() const { return static_cast<int>(edges.size()); }
    int m2() const { return static_cast<int>(triangles.size()); }

    /// Index of edge (u, v) in canonical order, or -1 if absent. Accepts the
    /// pair in either order.
    int edge_index(int u, int v) const;
    int triangle_index(int u, int v, int w) const;
};

struct ComplexWeights {
    std::optional<std::vector<double>> w0, w1, w2;
};

/// Canonicalizes and validates the input simplices; missing weights default
/// to 1. Throws missing_face / non_positive_weight / index_out_of_range /
/// duplicate_simplex / degenerate_simplex.
SimplicialComplex2 build_complex(int n_vertices, std::vector<std::array<int, 2>> edges,
                                 std::vector<std::array<int, 3>> triangles,
                                 const ComplexWeights& weights = {});

/// Boundary operator B_k as a sparse matrix; k is 1 or 2. The weighted
/// variant applies the row scaling 1/sqrt(w_{k-1}) and the column scaling
/// sqrt(w_k) during assembly.
SparseColumnMatrix boundary(const SimplicialComplex2& K, int k, bool weighted);

enum class LaplacianKind { up0, up1, down1, full1 };

// Matrix-free symmetric operator. `apply` must be deterministic for fixed
// inputs; `to_dense` materializes through unit-vector products and is meant
// for desk-scale spectral checks only.
struct LinearOperator {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> apply;

    Eigen::VectorXd operator()(const Eigen::VectorXd& x) const { return apply(x); }
    Eigen::MatrixXd to_dense(int dense_cap = kDefaultDenseCap) const;
};

/// Weighted Laplacian of the requested kind:
///   up0 = B1 B1^T, up1 = B2 B2^T, down1 = B1^T B1, full1 = down1 + up1.
LinearOperator laplacian(const SimplicialComplex2& K, LaplacianKind kind);

/// One rank-1 up-Laplacian term per triangle: weight w2(t) and the sparse
/// incidence column e_t scaled by 1/sqrt(w1) per edge, so that
/// sum_t w2(t) e_t e_t^T equals the weighted L1_up exactly.
struct Rank1Term {
    double weight;
    std::vector<std::pair<int, double>> entries;  // (edge index, value), sorted
};
std::vector<Rank1Term> rank1_terms(const SimplicialComplex2& K);

struct EdgeAdjacency {
    std::vector<std::vector<int>> tris_of_edge;  // sorted triangle indices per edge
    std::vector<int> free_edges;                 // edges with exactly one incident triangle
};
EdgeAdjacency adjacency_and_free(const SimplicialComplex2& K);

}  // namespace hecs
