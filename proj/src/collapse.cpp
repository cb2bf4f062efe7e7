#include "hecs/collapse.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace hecs {

namespace {

std::array<int, 3> triangle_edges(const SimplicialComplex2& K, int t) {
    auto [u, v, w] = K.triangles[t];
    return {K.edge_index(u, v), K.edge_index(u, w), K.edge_index(v, w)};
}

SimplicialComplex2 subcomplex(const SimplicialComplex2& K, const std::vector<char>& edge_alive,
                              const std::vector<char>& tri_alive, std::vector<int>* edge_map,
                              std::vector<int>* tri_map) {
    SimplicialComplex2 R;
    R.n_vertices = K.n_vertices;
    R.w0 = K.w0;
    for (int e = 0; e < K.m1(); ++e) {
        if (!edge_alive[e]) continue;
        R.edges.push_back(K.edges[e]);
        R.w1.push_back(K.w1[e]);
        if (edge_map) edge_map->push_back(e);
    }
    for (int t = 0; t < K.m2(); ++t) {
        if (!tri_alive[t]) continue;
        R.triangles.push_back(K.triangles[t]);
        R.w2.push_back(K.w2[t]);
        if (tri_map) tri_map->push_back(t);
    }
    return R;
}

}  // namespace

SimplicialComplex2 collapse_at(const SimplicialComplex2& K, int edge) {
    if (edge < 0 || edge >= K.m1()) fail(errc::unknown_edge, "edge index out of range");
    int incident = -1;
    int count = 0;
    for (int t = 0; t < K.m2(); ++t) {
        auto e3 = triangle_edges(K, t);
        if (e3[0] == edge || e3[1] == edge || e3[2] == edge) {
            incident = t;
            ++count;
        }
    }
    if (count != 1)
        fail(errc::not_free, "edge has " + std::to_string(count) + " incident triangles");

    std::vector<char> edge_alive(K.m1(), 1), tri_alive(K.m2(), 1);
    edge_alive[edge] = 0;
    tri_alive[incident] = 0;
    return subcomplex(K, edge_alive, tri_alive, nullptr, nullptr);
}

CollapseResult greedy_collapse(const SimplicialComplex2& K,
                               std::optional<std::uint64_t> shuffle_seed) {
    CollapseResult result;

    auto adj = adjacency_and_free(K);
    auto& delta = adj.tris_of_edge;
    std::vector<char> edge_alive(K.m1(), 1), tri_alive(K.m2(), 1);
    int triangles_left = K.m2();

    // Pending free edges. FIFO by default; with a shuffle seed the next pop
    // position is drawn uniformly instead.
    std::deque<int> queue(adj.free_edges.begin(), adj.free_edges.end());
    std::mt19937_64 rng(shuffle_seed.value_or(0));

    while (!queue.empty() && triangles_left > 0) {
        int pick = 0;
        if (shuffle_seed) pick = static_cast<int>(rng() % queue.size());
        int sigma = queue[pick];
        queue.erase(queue.begin() + pick);

        // The edge may have lost its last triangle since it was queued.
        if (delta[sigma].size() != 1) continue;
        int tau = delta[sigma][0];

        result.sigma.push_back(sigma);
        result.tau.push_back(tau);
        edge_alive[sigma] = 0;
        tri_alive[tau] = 0;
        --triangles_left;
        delta[sigma].clear();

        for (int other : triangle_edges(K, tau)) {
            if (other == sigma) continue;
            auto& d = delta[other];
            auto it = std::lower_bound(d.begin(), d.end(), tau);
            d.erase(it);
            ++result.adjacency_removals;
            if (d.size() == 1) queue.push_back(other);
        }
    }

    result.residual = subcomplex(K, edge_alive, tri_alive, &result.residual_edge_index,
                                 &result.residual_triangle_index);
    result.weakly_collapsible = (triangles_left == 0);
    return result;
}

bool is_weakly_collapsible(const SimplicialComplex2& K) {
    if (K.m2() > K.m1()) return false;
    return greedy_collapse(K).weakly_collapsible;
}

}  // namespace hecs
