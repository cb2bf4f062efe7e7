#include "hecs/hecs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <ostream>

namespace hecs {

namespace {

std::array<int, 3> triangle_edges(const SimplicialComplex2& K, int t) {
    auto [u, v, w] = K.triangles[t];
    return {K.edge_index(u, v), K.edge_index(u, w), K.edge_index(v, w)};
}

// Adjacency structure for the heavy scan. Holds the edge -> sampled-triangle
// sets of the current subcomplex; check() tentatively adds one triangle,
// replays the greedy collapse destructively and then rolls everything back
// through the undo log, so accepted and rejected candidates both leave the
// structure consistent.
class HeavyScanState {
  public:
    explicit HeavyScanState(const SimplicialComplex2& K) : K_(K), delta_(K.m1()) {}

    bool check(int candidate, std::vector<int>* sigma_out, std::vector<int>* tau_out) {
        insert(candidate);
        sampled_count_ += 1;

        std::vector<std::pair<int, int>> undo;  // (edge, triangle) removals
        std::vector<int> sigma, tau;
        std::deque<int> queue;
        for (int e = 0; e < K_.m1(); ++e)
            if (delta_[e].size() == 1) queue.push_back(e);

        int remaining = sampled_count_;
        while (!queue.empty() && remaining > 0) {
            int s = queue.front();
            queue.pop_front();
            if (delta_[s].size() != 1) continue;
            int t = delta_[s][0];
            sigma.push_back(s);
            tau.push_back(t);
            remove(s, t, undo);
            --remaining;
            for (int other : triangle_edges(K_, t)) {
                if (other == s) continue;
                remove(other, t, undo);
                if (delta_[other].size() == 1) queue.push_back(other);
            }
        }
        bool collapsible = (remaining == 0);

        // Roll back the collapse replay.
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
            auto& d = delta_[it->first];
            d.insert(std::lower_bound(d.begin(), d.end(), it->second), it->second);
        }
        if (collapsible) {
            if (sigma_out) *sigma_out = std::move(sigma);
            if (tau_out) *tau_out = std::move(tau);
        } else {
            erase(candidate);
            sampled_count_ -= 1;
        }
        return collapsible;
    }

  private:
    void insert(int t) {
        for (int e : triangle_edges(K_, t)) {
            auto& d = delta_[e];
            d.insert(std::lower_bound(d.begin(), d.end(), t), t);
        }
    }
    void erase(int t) {
        for (int e : triangle_edges(K_, t)) {
            auto& d = delta_[e];
            d.erase(std::lower_bound(d.begin(), d.end(), t));
        }
    }
    void remove(int e, int t, std::vector<std::pair<int, int>>& undo) {
        auto& d = delta_[e];
        d.erase(std::lower_bound(d.begin(), d.end(), t));
        undo.emplace_back(e, t);
    }

    const SimplicialComplex2& K_;
    std::vector<std::vector<int>> delta_;
    int sampled_count_ = 0;
};

}  // namespace

HeavyScanResult heavy_subcomplex(const SimplicialComplex2& K, ScanMode mode) {
    std::vector<int> order(K.m2());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return K.w2[a] != K.w2[b] ? K.w2[a] > K.w2[b] : a < b;
    });

    HeavyScanResult result;
    if (mode == ScanMode::incremental) {
        HeavyScanState state(K);
        std::vector<int> sigma, tau;
        for (int t : order) {
            if (state.check(t, &sigma, &tau)) {
                result.sampled.push_back(t);
                result.sigma = std::move(sigma);
                result.tau = std::move(tau);
            }
        }
        return result;
    }

    // Rebuild mode: run the greedy collapse on a freshly built subcomplex
    // per candidate. Quadratic in the triangle count but free of shared
    // state; the two modes must agree exactly.
    std::vector<char> accepted(K.m2(), 0);
    for (int t : order) {
        accepted[t] = 1;
        SimplicialComplex2 sub;
        sub.n_vertices = K.n_vertices;
        sub.w0 = K.w0;
        sub.edges = K.edges;
        sub.w1 = K.w1;
        std::vector<int> tri_of_sub;
        for (int i = 0; i < K.m2(); ++i) {
            if (!accepted[i]) continue;
            sub.triangles.push_back(K.triangles[i]);
            sub.w2.push_back(K.w2[i]);
            tri_of_sub.push_back(i);
        }
        auto run = greedy_collapse(sub);
        if (run.weakly_collapsible) {
            result.sampled.push_back(t);
            result.sigma = run.sigma;  // edge universe identical to K's
            result.tau.clear();
            for (int i : run.tau) result.tau.push_back(tri_of_sub[i]);
        } else {
            accepted[t] = 0;
        }
    }
    return result;
}

HecsPreconditioner assemble_preconditioner(const SimplicialComplex2& K,
                                           const std::vector<int>& sigma,
                                           const std::vector<int>& tau) {
    if (sigma.size() != tau.size())
        fail(errc::dimension_mismatch, "collapsing sequences must have equal length");
    const int r = static_cast<int>(sigma.size());
    const int m1 = K.m1();
    const int m2 = K.m2();

    HecsPreconditioner P;
    P.r = r;
    P.edge_perm.reserve(m1);
    P.tri_perm.reserve(m2);
    P.pi.assign(m2, 0);

    std::vector<char> edge_used(m1, 0), tri_used(m2, 0);
    for (int e : sigma) {
        if (e < 0 || e >= m1 || edge_used[e]) fail(errc::invalid_argument, "bad edge sequence");
        edge_used[e] = 1;
        P.edge_perm.push_back(e);
    }
    for (int t : tau) {
        if (t < 0 || t >= m2 || tri_used[t]) fail(errc::invalid_argument, "bad triangle sequence");
        tri_used[t] = 1;
        P.tri_perm.push_back(t);
        P.pi[t] = 1;
    }
    for (int e = 0; e < m1; ++e)
        if (!edge_used[e]) P.edge_perm.push_back(e);
    for (int t = 0; t < m2; ++t)
        if (!tri_used[t]) P.tri_perm.push_back(t);

    P.edge_rank.assign(m1, 0);
    for (int i = 0; i < m1; ++i) P.edge_rank[P.edge_perm[i]] = i;

    // Sampled columns of the permuted weighted boundary operator.
    P.factor = SparseColumnMatrix(m1, 0);
    for (int j = 0; j < r; ++j) {
        int t = tau[j];
        double s = std::sqrt(K.w2[t]);
        auto edges3 = triangle_edges(K, t);
        // Signs follow the alternating-face rule in lexicographic edge order.
        double signs[3] = {+1.0, -1.0, +1.0};
        std::vector<std::pair<int, double>> col;
        for (int i = 0; i < 3; ++i)
            col.emplace_back(P.edge_rank[edges3[i]], signs[i] * s / std::sqrt(K.w1[edges3[i]]));
        std::sort(col.begin(), col.end());
        if (col[0].first != j)
            fail(errc::invalid_argument,
                 "sequence is not collapsing: column " + std::to_string(j) +
                     " has first nonzero at row " + std::to_string(col[0].first));
        P.factor.push_column(col);
    }
    return P;
}

HecsPreconditioner build_preconditioner(const SimplicialComplex2& K, ScanMode mode) {
    auto stage1 = greedy_collapse(K);
    auto stage2 = heavy_subcomplex(stage1.residual, mode);

    std::vector<int> sigma = stage1.sigma;
    std::vector<int> tau = stage1.tau;
    for (int e : stage2.sigma) sigma.push_back(stage1.residual_edge_index[e]);
    for (int t : stage2.tau) tau.push_back(stage1.residual_triangle_index[t]);
    return assemble_preconditioner(K, sigma, tau);
}

Eigen::VectorXd apply_pinv(const HecsPreconditioner& P, const Eigen::VectorXd& v,
                           bool transposed) {
    const auto& F = P.factor;
    const int r = P.r;
    const int m1 = F.rows();

    if (!transposed) {
        if (v.size() != m1) fail(errc::dimension_mismatch, "apply_pinv: expected edge vector");
        Eigen::VectorXd z(r);
        for (int j = 0; j < r; ++j) z[j] = v[P.edge_perm[j]];
        for (int j = 0; j < r; ++j) {
            int p = F.col_begin(j);
            z[j] /= F.value(p);  // diagonal entry sits first in the column
            for (++p; p < F.col_end(j); ++p) {
                int i = F.row_index(p);
                if (i >= r) break;
                z[i] -= F.value(p) * z[j];
            }
        }
        return z;
    }

    if (v.size() != r) fail(errc::dimension_mismatch, "apply_pinv: expected length-r vector");
    Eigen::VectorXd w(r);
    for (int j = r - 1; j >= 0; --j) {
        double acc = v[j];
        int p = F.col_begin(j);
        double diag = F.value(p);
        for (++p; p < F.col_end(j); ++p) {
            int i = F.row_index(p);
            if (i >= r) break;
            acc -= F.value(p) * w[i];
        }
        w[j] = acc / diag;
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(m1);
    for (int j = 0; j < r; ++j) out[P.edge_perm[j]] = w[j];
    return out;
}

LinearOperator preconditioned_operator(const HecsPreconditioner& P, const SimplicialComplex2& K) {
    auto shared_P = std::make_shared<HecsPreconditioner>(P);
    auto B2 = std::make_shared<SparseColumnMatrix>(boundary(K, 2, true));
    LinearOperator op;
    op.rows = op.cols = P.r;
    op.apply = [shared_P, B2](const Eigen::VectorXd& y) {
        Eigen::VectorXd t = apply_pinv(*shared_P, y, true);
        t = B2->matvec(B2->matvec_transpose(t));
        return apply_pinv(*shared_P, t, false);
    };
    return op;
}

SimplicialComplex2 sampled_subcomplex(const SimplicialComplex2& K,
                                      const std::vector<std::uint8_t>& pi) {
    if (pi.size() != static_cast<std::size_t>(K.m2()))
        fail(errc::dimension_mismatch, "pi length != triangle count");
    SimplicialComplex2 L;
    L.n_vertices = K.n_vertices;
    L.w0 = K.w0;
    L.edges = K.edges;
    L.w1 = K.w1;
    for (int t = 0; t < K.m2(); ++t) {
        if (!pi[t]) continue;
        L.triangles.push_back(K.triangles[t]);
        L.w2.push_back(K.w2[t]);
    }
    return L;
}

void dump_preconditioner(const HecsPreconditioner& P, std::ostream& out) {
    out << "r " << P.r << "\nedge_perm";
    for (int e : P.edge_perm) out << ' ' << e;
    out << "\ntri_perm";
    for (int t : P.tri_perm) out << ' ' << t;
    out << "\npi";
    for (auto b : P.pi) out << ' ' << int(b);
    out << "\nfactor " << P.factor.rows() << ' ' << P.factor.cols() << '\n';
    for (int j = 0; j < P.factor.cols(); ++j)
        for (int p = P.factor.col_begin(j); p < P.factor.col_end(j); ++p)
            out << P.factor.row_index(p) << ' ' << j << ' ' << P.factor.value(p) << '\n';
}

}  // namespace hecs
