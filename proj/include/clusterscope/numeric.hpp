#pragma once

#include <type_traits>
#include <utility>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace clusterscope {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename Scalar>
inline constexpr bool is_field_v = std::is_same_v<Scalar, BigRational>;

// Fraction-free elimination: every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact.
inline Eigen::Index bareiss_rank(DenseMatrix<BigInt> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  BigInt previous = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / previous;
      }
      a(i, col) = 0;
    }
    previous = a(rank, col);
    ++rank;
  }
  return rank;
}

inline Eigen::Index gaussian_rank(DenseMatrix<BigRational> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(pivot).swap(a.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      const BigRational factor = a(i, col) / a(rank, col);
      for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= factor * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Exact rank of an integer or rational matrix. Integer scalars go through
/// fraction-free elimination over BigInt; BigRational uses Gaussian
/// elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (detail::is_field_v<Scalar>) {
    return detail::gaussian_rank(m.eval());
  } else {
    DenseMatrix<BigInt> big(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) big(i, j) = BigInt(m(i, j));
    return detail::bareiss_rank(std::move(big));
  }
}

}  // namespace clusterscope
