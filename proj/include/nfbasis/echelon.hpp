#pragma once

#include "nfbasis/matrix.hpp"
#include "nfbasis/tolerance.hpp"

namespace nfbasis {

/// Reduced row echelon form by Gauss-Jordan elimination with partial
/// pivoting. Leading entries are exactly 1, pivot columns are zeroed
/// elsewhere, zero rows sink to the bottom. Entries below
/// zero_rel_tol * (column max) are treated as zero.
template <class Scalar>
DenseMatrix<Scalar> rref(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol = {});

/// Reduced column echelon form, rref(A^T)^T; a cheap unique normal form for
/// the column space. Requires full column rank.
template <class Scalar>
DenseMatrix<Scalar> rcef(const DenseMatrix<Scalar>& A, const ToleranceConfig& tol = {});

extern template RealMatrix rref<double>(const RealMatrix&, const ToleranceConfig&);
extern template ComplexMatrix rref<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
extern template RealMatrix rcef<double>(const RealMatrix&, const ToleranceConfig&);
extern template ComplexMatrix rcef<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);

} // namespace nfbasis
