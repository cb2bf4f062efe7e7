#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hecs/errors.hpp"

namespace hecs {

// Column-compressed sparse matrix. Row indices are strictly increasing
// within each column and explicit zeros are never stored.
class SparseColumnMatrix {
  public:
    struct Triplet {
        int row;
        int col;
        double value;
    };

    SparseColumnMatrix() : rows_(0), cols_(0), col_ptr_(1, 0) {}
    SparseColumnMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_ptr_(cols + 1, 0) {}

    static SparseColumnMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return row_idx_.size(); }

    int col_begin(int j) const { return col_ptr_[j]; }
    int col_end(int j) const { return col_ptr_[j + 1]; }
    int row_index(int p) const { return row_idx_[p]; }
    double value(int p) const { return val_[p]; }

    Eigen::VectorXd matvec(const Eigen::VectorXd& x) const;
    Eigen::VectorXd matvec_transpose(const Eigen::VectorXd& x) const;

    Eigen::MatrixXd to_dense() const;

    double coeff(int i, int j) const;

    // Appends one column given entries sorted by row. Used by builders that
    // construct columns left to right.
    void push_column(const std::vector<std::pair<int, double>>& entries);

  private:
    int rows_;
    int cols_;
    std::vector<int> col_ptr_;
    std::vector<int> row_idx_;
    std::vector<double> val_;
};

}  // namespace hecs
