#include "hecs/complex.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace hecs {

namespace {

void check_weights(const std::vector<double>& w, std::size_t expected, const char* name) {
    if (w.size() != expected)
        fail(errc::dimension_mismatch,
             std::string(name) + ": expected " + std::to_string(expected) + " weights, got " +
                 std::to_string(w.size()));
    for (double v : w)
        if (!(v > 0.0)) fail(errc::non_positive_weight, std::string(name) + ": weights must be positive");
}

}  // namespace

int SimplicialComplex2::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::array<int, 2> key{u, v};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
}

int SimplicialComplex2::triangle_index(int u, int v, int w) const {
    std::array<int, 3> key{u, v, w};
    std::sort(key.begin(), key.end());
    auto it = std::lower_bound(triangles.begin(), triangles.end(), key);
    if (it == triangles.end() || *it != key) return -1;
    return static_cast<int>(it - triangles.begin());
}

SimplicialComplex2 build_complex(int n_vertices, std::vector<std::array<int, 2>> edges,
                                 std::vector<std::array<int, 3>> triangles,
                                 const ComplexWeights& weights) {
    if (n_vertices < 0) fail(errc::invalid_argument, "negative vertex count");

    SimplicialComplex2 K;
    K.n_vertices = n_vertices;

    // Canonicalize each simplex, keeping any supplied weight attached to it.
    std::vector<std::size_t> edge_order(edges.size()), tri_order(triangles.size());
    for (auto& e : edges) {
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[0] == e[1]) fail(errc::degenerate_simplex, "edge with repeated vertex");
        if (e[0] < 0 || e[1] >= n_vertices) fail(errc::index_out_of_range, "edge vertex out of range");
    }
    for (auto& t : triangles) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) fail(errc::degenerate_simplex, "triangle with repeated vertex");
        if (t[0] < 0 || t[2] >= n_vertices) fail(errc::index_out_of_range, "triangle vertex out of range");
    }
    for (std::size_t i = 0; i < edge_order.size(); ++i) edge_order[i] = i;
    for (std::size_t i = 0; i < tri_order.size(); ++i) tri_order[i] = i;
    std::sort(edge_order.begin(), edge_order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::sort(tri_order.begin(), tri_order.end(),
              [&](std::size_t a, std::size_t b) { return triangles[a] < triangles[b]; });

    K.edges.reserve(edges.size());
    for (std::size_t i : edge_order) {
        if (!K.edges.empty() && K.edges.back() == edges[i])
            fail(errc::duplicate_simplex, "duplicate edge after canonicalization");
        K.edges.push_back(edges[i]);
    }
    K.triangles.reserve(triangles.size());
    for (std::size_t i : tri_order) {
        if (!K.triangles.empty() && K.triangles.back() == triangles[i])
            fail(errc::duplicate_simplex, "duplicate triangle after canonicalization");
        K.triangles.push_back(triangles[i]);
    }

    // Closure: each triangle face must be present as an edge.
    for (const auto& t : K.triangles) {
        for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
            if (K.edge_index(a, b) < 0)
                fail(errc::missing_face, "triangle (" + std::to_string(t[0]) + "," +
                                             std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                             ") references absent edge (" + std::to_string(a) + "," +
                                             std::to_string(b) + ")");
        }
    }

    auto reorder = [](const std::vector<double>& w, const std::vector<std::size_t>& order) {
        std::vector<double> out(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) out[i] = w[order[i]];
        return out;
    };
    if (weights.w0) {
        check_weights(*weights.w0, static_cast<std::size_t>(n_vertices), "w0");
        K.w0 = *weights.w0;
    } else {
        K.w0.assign(n_vertices, 1.0);
    }
    if (weights.w1) {
        check_weights(*weights.w1, edges.size(), "w1");
        K.w1 = reorder(*weights.w1, edge_order);
    } else {
        K.w1.assign(K.edges.size(), 1.0);
    }
    if (weights.w2) {
        check_weights(*weights.w2, triangles.size(), "w2");
        K.w2 = reorder(*weights.w2, tri_order);
    } else {
        K.w2.assign(K.triangles.size(), 1.0);
    }
    return K;
}

SparseColumnMatrix boundary(const SimplicialComplex2& K, int k, bool weighted) {
    if (k == 1) {
        SparseColumnMatrix B(K.m0(), 0);
        for (int e = 0; e < K.m1(); ++e) {
            auto [u, v] = K.edges[e];
            double s = weighted ? std::sqrt(K.w1[e]) : 1.0;
            double su = weighted ? s / std::sqrt(K.w0[u]) : 1.0;
            double sv = weighted ? s / std::sqrt(K.w0[v]) : 1.0;
            B.push_column({{u, -su}, {v, +sv}});
        }
        return B;
    }
    if (k == 2) {
        SparseColumnMatrix B(K.m1(), 0);
        for (int t = 0; t < K.m2(); ++t) {
            auto [u, v, w] = K.triangles[t];
            int euv = K.edge_index(u, v);
            int euw = K.edge_index(u, w);
            int evw = K.edge_index(v, w);
            double s = weighted ? std::sqrt(K.w2[t]) : 1.0;
            // Alternating signs on the faces; lexicographic edge order keeps
            // the entries sorted by row with the +1 first.
            std::vector<std::pair<int, double>> col{
                {euv, +s * (weighted ? 1.0 / std::sqrt(K.w1[euv]) : 1.0)},
                {euw, -s * (weighted ? 1.0 / std::sqrt(K.w1[euw]) : 1.0)},
                {evw, +s * (weighted ? 1.0 / std::sqrt(K.w1[evw]) : 1.0)}};
            std::sort(col.begin(), col.end());
            B.push_column(col);
        }
        return B;
    }
    fail(errc::invalid_argument, "boundary order must be 1 or 2");
}

Eigen::MatrixXd LinearOperator::to_dense(int dense_cap) const {
    if (rows > dense_cap || cols > dense_cap)
        fail(errc::dense_cap_exceeded, "operator too large for dense materialization");
    Eigen::MatrixXd d(rows, cols);
    Eigen::VectorXd unit = Eigen::VectorXd::Zero(cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        unit[j] = 1.0;
        d.col(j) = apply(unit);
        unit[j] = 0.0;
    }
    return d;
}

LinearOperator laplacian(const SimplicialComplex2& K, LaplacianKind kind) {
    auto B1 = std::make_shared<SparseColumnMatrix>(boundary(K, 1, true));
    auto B2 = std::make_shared<SparseColumnMatrix>(boundary(K, 2, true));
    LinearOperator op;
    switch (kind) {
        case LaplacianKind::up0:
            op.rows = op.cols = K.m0();
            op.apply = [B1](const Eigen::VectorXd& x) { return B1->matvec(B1->matvec_transpose(x)); };
            break;
        case LaplacianKind::up1:
            op.rows = op.cols = K.m1();
            op.apply = [B2](const Eigen::VectorXd& x) { return B2->matvec(B2->matvec_transpose(x)); };
            break;
        case LaplacianKind::down1:
            op.rows = op.cols = K.m1();
            op.apply = [B1](const Eigen::VectorXd& x) { return B1->matvec_transpose(B1->matvec(x)); };
            break;
        case LaplacianKind::full1:
            op.rows = op.cols = K.m1();
            op.apply = [B1, B2](const Eigen::VectorXd& x) {
                return B1->matvec_transpose(B1->matvec(x)) + B2->matvec(B2->matvec_transpose(x));
            };
            break;
    }
    return op;
}

std::vector<Rank1Term> rank1_terms(const SimplicialComplex2& K) {
    std::vector<Rank1Term> terms;
    terms.reserve(K.m2());
    for (int t = 0; t < K.m2(); ++t) {
        auto [u, v, w] = K.triangles[t];
        int euv = K.edge_index(u, v);
        int euw = K.edge_index(u, w);
        int evw = K.edge_index(v, w);
        Rank1Term term;
        term.weight = K.w2[t];
        term.entries = {{euv, +1.0 / std::sqrt(K.w1[euv])},
                        {euw, -1.0 / std::sqrt(K.w1[euw])},
                        {evw, +1.0 / std::sqrt(K.w1[evw])}};
        std::sort(term.entries.begin(), term.entries.end());
        terms.push_back(std::move(term));
    }
    return terms;
}

EdgeAdjacency adjacency_and_free(const SimplicialComplex2& K) {
    EdgeAdjacency adj;
    adj.tris_of_edge.assign(K.m1(), {});
    for (int t = 0; t < K.m2(); ++t) {
        auto [u, v, w] = K.triangles[t];
        adj.tris_of_edge[K.edge_index(u, v)].push_back(t);
        adj.tris_of_edge[K.edge_index(u, w)].push_back(t);
        adj.tris_of_edge[K.edge_index(v, w)].push_back(t);
    }
    for (int e = 0; e < K.m1(); ++e)
        if (adj.tris_of_edge[e].size() == 1) adj.free_edges.push_back(e);
    return adj;
}

}  // namespace hecs
