#include "hecs/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hecs {

SparseColumnMatrix SparseColumnMatrix::from_triplets(int rows, int cols,
                                                     std::vector<Triplet> triplets) {
    for (const auto& t : triplets) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            fail(errc::index_out_of_range, "triplet index outside matrix shape");
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });

    SparseColumnMatrix m(rows, cols);
    m.row_idx_.reserve(triplets.size());
    m.val_.reserve(triplets.size());
    std::size_t i = 0;
    for (int j = 0; j < cols; ++j) {
        while (i < triplets.size() && triplets[i].col == j) {
            // Duplicates within a column are summed; zeros are dropped.
            double v = triplets[i].value;
            int r = triplets[i].row;
            ++i;
            while (i < triplets.size() && triplets[i].col == j && triplets[i].row == r) {
                v += triplets[i].value;
                ++i;
            }
            if (v != 0.0) {
                m.row_idx_.push_back(r);
                m.val_.push_back(v);
            }
        }
        m.col_ptr_[j + 1] = static_cast<int>(m.row_idx_.size());
    }
    return m;
}

void SparseColumnMatrix::push_column(const std::vector<std::pair<int, double>>& entries) {
    int prev = -1;
    for (const auto& [r, v] : entries) {
        if (r < 0 || r >= rows_) fail(errc::index_out_of_range, "row index outside matrix shape");
        if (r <= prev) fail(errc::invalid_argument, "column entries must be sorted by row");
        prev = r;
        if (v == 0.0) continue;
        row_idx_.push_back(r);
        val_.push_back(v);
    }
    ++cols_;
    col_ptr_.push_back(static_cast<int>(row_idx_.size()));
}

Eigen::VectorXd SparseColumnMatrix::matvec(const Eigen::VectorXd& x) const {
    if (x.size() != cols_) fail(errc::dimension_mismatch, "matvec: vector length != cols");
    Eigen::VectorXd y = Eigen::VectorXd::Zero(rows_);
    for (int j = 0; j < cols_; ++j) {
        double xj = x[j];
        if (xj == 0.0) continue;
        for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) y[row_idx_[p]] += val_[p] * xj;
    }
    return y;
}

Eigen::VectorXd SparseColumnMatrix::matvec_transpose(const Eigen::VectorXd& x) const {
    if (x.size() != rows_) fail(errc::dimension_mismatch, "matvec_transpose: vector length != rows");
    Eigen::VectorXd y = Eigen::VectorXd::Zero(cols_);
    for (int j = 0; j < cols_; ++j) {
        double acc = 0.0;
        for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) acc += val_[p] * x[row_idx_[p]];
        y[j] = acc;
    }
    return y;
}

Eigen::MatrixXd SparseColumnMatrix::to_dense() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
        for (int p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) d(row_idx_[p], j) = val_[p];
    return d;
}

double SparseColumnMatrix::coeff(int i, int j) const {
    auto first = row_idx_.begin() + col_ptr_[j];
    auto last = row_idx_.begin() + col_ptr_[j + 1];
    auto it = std::lower_bound(first, last, i);
    if (it == last || *it != i) return 0.0;
    return val_[it - row_idx_.begin()];
}

}  // namespace hecs
