#include "nfbasis/echelon.hpp"

#include "nfbasis/linalg.hpp"

#include <cmath>

namespace nfbasis {

template <class Scalar>
DenseMatrix<Scalar> rref(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol) {
    require_valid(M, "rref");
    tol.validate();
    DenseMatrix<Scalar> R = M;
    const Eigen::Index m = R.rows();
    const Eigen::Index n = R.cols();

    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < n && row < m; ++col) {
        const double col_scale = R.col(col).cwiseAbs().maxCoeff();
        const double threshold = tol.zero_rel_tol * col_scale;

        Eigen::Index pivot = row;
        double pivot_abs = std::abs(R(row, col));
        for (Eigen::Index i = row + 1; i < m; ++i) {
            const double a = std::abs(R(i, col));
            if (a > pivot_abs) {
                pivot_abs = a;
                pivot = i;
            }
        }
        if (pivot_abs <= threshold) {
            // No pivot here; whatever is left in this column is noise.
            for (Eigen::Index i = row; i < m; ++i)
                R(i, col) = Scalar(0);
            continue;
        }

        R.row(row).swap(R.row(pivot));
        R.row(row) /= R(row, col);
        R(row, col) = Scalar(1);
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i == row)
                continue;
            const Scalar factor = R(i, col);
            if (factor != Scalar(0)) {
                R.row(i) -= factor * R.row(row);
                R(i, col) = Scalar(0);
            }
        }
        ++row;
    }
    return R;
}

template <class Scalar>
DenseMatrix<Scalar> rcef(const DenseMatrix<Scalar>& A, const ToleranceConfig& tol) {
    require_valid(A, "rcef");
    tol.validate();
    if (rank(A, tol) < A.cols())
        throw NotFullColumnRankError("rcef: matrix does not have full column rank");
    return rref(DenseMatrix<Scalar>(A.transpose()), tol).transpose();
}

template RealMatrix rref<double>(const RealMatrix&, const ToleranceConfig&);
template ComplexMatrix rref<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
template RealMatrix rcef<double>(const RealMatrix&, const ToleranceConfig&);
template ComplexMatrix rcef<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);

} // namespace nfbasis
