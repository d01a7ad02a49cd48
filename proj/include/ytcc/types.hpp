#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace ytcc {

using Real = double;
using Index = Eigen::Index;

using DenseMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using DenseVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Column-major (CSC) storage; transforms emit triplets, models iterate columns.
using SparseMatrix = Eigen::SparseMatrix<Real>;
using Triplet = Eigen::Triplet<Real>;

}  // namespace ytcc
