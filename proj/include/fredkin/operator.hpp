#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <utility>
#include <vector>

#include "fredkin/common.hpp"

namespace fredkin {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

/// A real symmetric operator on the computational basis, stored either as an
/// explicit sparse matrix or as a matrix-free apply closure (or both).
class LinearOperator {
  public:
    using ApplyFn = std::function<void(const Vector&, Vector&)>;

    LinearOperator() = default;

    static LinearOperator from_triplets(std::int64_t dim, std::vector<Triplet> triplets,
                                        bool symmetric = true) {
        LinearOperator op;
        op.dim_ = dim;
        op.symmetric_ = symmetric;
        op.sparse_ = std::make_shared<SparseMatrix>(dim, dim);
        op.sparse_->setFromTriplets(triplets.begin(), triplets.end());
        op.sparse_->makeCompressed();
        return op;
    }

    static LinearOperator from_apply(std::int64_t dim, ApplyFn fn, bool symmetric = true) {
        LinearOperator op;
        op.dim_ = dim;
        op.symmetric_ = symmetric;
        op.apply_ = std::move(fn);
        return op;
    }

    std::int64_t dim() const { return dim_; }
    bool symmetric() const { return symmetric_; }
    bool has_sparse() const { return sparse_ != nullptr; }
    bool matrix_free() const { return !has_sparse(); }

    const SparseMatrix& sparse() const {
        if (!sparse_) throw DimensionMismatch("LinearOperator: no sparse storage");
        return *sparse_;
    }

    Vector apply(const Vector& v) const {
        if (v.size() != dim_)
            throw DimensionMismatch("apply: vector size " + std::to_string(v.size()) +
                                    " != operator dim " + std::to_string(dim_));
        if (sparse_) return *sparse_ * v;
        Vector out(dim_);
        apply_(v, out);
        return out;
    }

    Matrix to_dense() const {
        if (sparse_) return Matrix(*sparse_);
        Matrix m(dim_, dim_);
        Vector e = Vector::Zero(dim_), col(dim_);
        for (std::int64_t j = 0; j < dim_; ++j) {
            e[j] = 1.0;
            apply_(e, col);
            m.col(j) = col;
            e[j] = 0.0;
        }
        return m;
    }

    /// Coordinate-format dump: "row col value" per line, 0-indexed, sorted
    /// row-major; only structurally stored entries appear.
    void dump(std::ostream& os) const {
        const SparseMatrix& m = sparse();
        for (std::int64_t i = 0; i < m.outerSize(); ++i)
            for (SparseMatrix::InnerIterator it(m, i); it; ++it)
                os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
    }

    LinearOperator operator+(const LinearOperator& other) const {
        if (dim_ != other.dim_) throw DimensionMismatch("operator+: dims differ");
        LinearOperator op;
        op.dim_ = dim_;
        op.symmetric_ = symmetric_ && other.symmetric_;
        op.sparse_ = std::make_shared<SparseMatrix>(*sparse_ + *other.sparse_);
        op.sparse_->makeCompressed();
        return op;
    }

    LinearOperator scaled(double factor) const {
        LinearOperator op;
        op.dim_ = dim_;
        op.symmetric_ = symmetric_;
        op.sparse_ = std::make_shared<SparseMatrix>(factor * *sparse_);
        return op;
    }

  private:
    std::int64_t dim_ = 0;
    bool symmetric_ = true;
    std::shared_ptr<SparseMatrix> sparse_;
    ApplyFn apply_;
};

}  // namespace fredkin
