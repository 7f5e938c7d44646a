#ifndef MONALG_LINALG_HPP
#define MONALG_LINALG_HPP

// Exact linear algebra over an arbitrary field-like scalar. Nothing here
// compares against a tolerance: zero means zero.

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <map>
#include <span>
#include <utility>

namespace monalg {

template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
bool is_zero(const SparseMatrix<Scalar>& m) {
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (typename SparseMatrix<Scalar>::InnerIterator it(m, k); it; ++it)
            if (it.value() != Scalar(0)) return false;
    return true;
}

template <typename Scalar>
bool exactly_equal(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return is_zero<Scalar>(a - b);
}

template <typename Scalar>
SparseMatrix<Scalar> commutator(const SparseMatrix<Scalar>& a, const SparseMatrix<Scalar>& b) {
    SparseMatrix<Scalar> ab = a * b;
    SparseMatrix<Scalar> ba = b * a;
    return ab - ba;
}

/// Nonzero entries keyed by (row, col).
template <typename Scalar>
std::map<std::pair<Eigen::Index, Eigen::Index>, Scalar> nonzero_entries(const SparseMatrix<Scalar>& m) {
    std::map<std::pair<Eigen::Index, Eigen::Index>, Scalar> out;
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
        for (typename SparseMatrix<Scalar>::InnerIterator it(m, k); it; ++it)
            if (it.value() != Scalar(0)) out.emplace(std::make_pair(it.row(), it.col()), it.value());
    return out;
}

/// Rank by Gaussian elimination with any nonzero pivot.
template <typename Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index rank = 0;
    for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
        Eigen::Index pivot = rank;
        while (pivot < rows && m(pivot, col) == Scalar(0)) ++pivot;
        if (pivot == rows) continue;
        m.row(rank).swap(m.row(pivot));
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (m(r, col) == Scalar(0)) continue;
            const Scalar factor = m(r, col) / m(rank, col);
            for (Eigen::Index j = col; j < cols; ++j) m(r, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Rank of a family of matrices, each flattened to one column vector.
template <typename Scalar>
Eigen::Index family_rank(std::span<const SparseMatrix<Scalar>> family) {
    std::map<std::pair<Eigen::Index, Eigen::Index>, Eigen::Index> position;
    for (const auto& m : family)
        for (const auto& [rc, value] : nonzero_entries<Scalar>(m))
            position.emplace(rc, static_cast<Eigen::Index>(position.size()));

    DenseMatrix<Scalar> stacked = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(position.size()),
                                                            static_cast<Eigen::Index>(family.size()));
    for (std::size_t c = 0; c < family.size(); ++c)
        for (const auto& [rc, value] : nonzero_entries<Scalar>(family[c]))
            stacked(position.at(rc), static_cast<Eigen::Index>(c)) = value;
    return exact_rank<Scalar>(std::move(stacked));
}

} // namespace monalg

#endif // MONALG_LINALG_HPP
