#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hecs/complex.hpp"

namespace hecs {

/**
 * Outcome of a run of the greedy collapse. `sigma` and `tau` index into the
 * *input* complex: replaying them step by step, sigma[i] is free at step i
 * and tau[i] is its unique incident triangle. The residual complex keeps all
 * vertices and the surviving edges/triangles with their weights; the
 * residual_* arrays map positions in the residual back to input indices.
 */
struct CollapseResult {
    std::vector<int> sigma;  // collapsed edges, in collapse order
    std::vector<int> tau;    // collapsed triangles, same length
    SimplicialComplex2 residual;
    bool weakly_collapsible = false;

    std::vector<int> residual_edge_index;      // residual edge -> input edge
    std::vector<int> residual_triangle_index;  // residual triangle -> input triangle
    std::size_t adjacency_removals = 0;        // diagnostic; <= 2 * m2
};

/// Single collapse at a free edge. Throws unknown_edge / not_free.
SimplicialComplex2 collapse_at(const SimplicialComplex2& K, int edge);

/**
 * Greedy collapse: repeatedly pop a free edge, remove it together with its
 * unique incident triangle, and update the adjacency sets of the triangle's
 * other two edges. Stops when no free edge remains or all triangles are
 * gone. The verdict does not depend on the pop order; the default order is
 * FIFO seeded by ascending edge index so runs are reproducible. Passing
 * `shuffle_seed` pops uniformly at random instead, which is how the
 * order-invariance of the verdict is exercised in tests.
 */
CollapseResult greedy_collapse(const SimplicialComplex2& K,
                               std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// True iff greedy collapse removes every triangle. Complexes with more
/// triangles than edges are rejected without running the loop: each collapse
/// removes exactly one of each.
bool is_weakly_collapsible(const SimplicialComplex2& K);

}  // namespace hecs
