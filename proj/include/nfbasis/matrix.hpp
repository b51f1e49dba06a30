#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <type_traits>

#include "nfbasis/errors.hpp"

namespace nfbasis {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = DenseMatrix<double>;
using RealVector = DenseVector<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;
using ComplexVector = DenseVector<std::complex<double>>;

template <class Scalar>
inline constexpr bool is_complex_v = std::is_same_v<Scalar, std::complex<double>>;

/// Throws InvalidInputError unless M is non-empty with all entries finite.
template <class Scalar>
void require_valid(const DenseMatrix<Scalar>& M, const std::string& what) {
    if (M.rows() < 1 || M.cols() < 1)
        throw InvalidInputError(what + ": matrix must have at least one row and one column");
    if (!M.allFinite())
        throw InvalidInputError(what + ": matrix has non-finite entries");
}

template <class Scalar>
void require_valid(const DenseVector<Scalar>& v, const std::string& what) {
    if (v.size() < 1)
        throw InvalidInputError(what + ": vector must be non-empty");
    if (!v.allFinite())
        throw InvalidInputError(what + ": vector has non-finite entries");
}

} // namespace nfbasis
