#include "nfbasis/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace nfbasis {

namespace {

template <class Scalar>
double rank_threshold(const Eigen::JacobiSVD<DenseMatrix<Scalar>>& svd,
                      Eigen::Index m, Eigen::Index n, const ToleranceConfig& tol) {
    const double sigma_max = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    return tol.rank_rel_tol * sigma_max * static_cast<double>(std::max(m, n));
}

template <class Scalar>
Eigen::Index count_above(const Eigen::JacobiSVD<DenseMatrix<Scalar>>& svd, double threshold) {
    Eigen::Index r = 0;
    const auto& sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++r;
    return r;
}

} // namespace

template <class Scalar>
Eigen::Index rank(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol) {
    require_valid(M, "rank");
    tol.validate();
    Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(M);
    return count_above<Scalar>(svd, rank_threshold<Scalar>(svd, M.rows(), M.cols(), tol));
}

template <class Scalar>
RankInfo<Scalar> rank_info(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol) {
    require_valid(M, "rank_info");
    tol.validate();
    Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(M);
    RankInfo<Scalar> info;
    const auto& sv = svd.singularValues();
    info.sigma_max = sv.size() ? sv(0) : 0.0;
    info.sigma_min = sv.size() ? sv(sv.size() - 1) : 0.0;
    info.rank = count_above<Scalar>(svd, rank_threshold<Scalar>(svd, M.rows(), M.cols(), tol));
    return info;
}

template <class Scalar>
DenseMatrix<Scalar> nullspace_basis(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol) {
    require_valid(M, "nullspace_basis");
    tol.validate();
    Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(M, Eigen::ComputeFullV);
    const Eigen::Index r = count_above<Scalar>(svd, rank_threshold<Scalar>(svd, M.rows(), M.cols(), tol));
    const Eigen::Index n = M.cols();
    return svd.matrixV().rightCols(n - r);
}

template <class Scalar>
std::optional<DenseVector<Scalar>> hyperplane_normal(const DenseMatrix<Scalar>& rows,
                                                     const ToleranceConfig& tol) {
    require_valid(rows, "hyperplane_normal");
    tol.validate();
    const Eigen::Index n = rows.cols();
    Eigen::JacobiSVD<DenseMatrix<Scalar>> svd(rows, Eigen::ComputeFullV);
    const Eigen::Index r = count_above<Scalar>(svd, rank_threshold<Scalar>(svd, rows.rows(), n, tol));
    if (r != n - 1)
        return std::nullopt;
    return DenseVector<Scalar>(svd.matrixV().col(n - 1));
}

template <class Scalar>
IndependenceTracker<Scalar>::IndependenceTracker(Eigen::Index ambient_dim)
    : ambient_dim_(ambient_dim), ortho_(ambient_dim, 0) {
    if (ambient_dim < 1)
        throw InvalidInputError("IndependenceTracker: ambient dimension must be >= 1");
}

template <class Scalar>
bool IndependenceTracker<Scalar>::try_extend(const DenseVector<Scalar>& v, const ToleranceConfig& tol) {
    tol.validate();
    if (v.size() != ambient_dim_)
        throw InvalidInputError("IndependenceTracker: vector dimension mismatch");
    require_valid(v, "IndependenceTracker");

    const double vnorm = v.norm();
    if (size() >= ambient_dim_ || vnorm == 0.0)
        return false;

    // Modified Gram-Schmidt, projected twice against accumulated roundoff.
    DenseVector<Scalar> w = v;
    for (int pass = 0; pass < 2; ++pass)
        for (Eigen::Index j = 0; j < ortho_.cols(); ++j)
            w -= ortho_.col(j) * ortho_.col(j).dot(w);

    if (w.norm() <= tol.indep_rel_tol * vnorm)
        return false;

    ortho_.conservativeResize(Eigen::NoChange, ortho_.cols() + 1);
    ortho_.col(ortho_.cols() - 1) = w / w.norm();
    accepted_.push_back(v);
    return true;
}

template Eigen::Index rank<double>(const RealMatrix&, const ToleranceConfig&);
template Eigen::Index rank<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
template RealMatrix nullspace_basis<double>(const RealMatrix&, const ToleranceConfig&);
template ComplexMatrix nullspace_basis<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
template RankInfo<double> rank_info<double>(const RealMatrix&, const ToleranceConfig&);
template RankInfo<std::complex<double>> rank_info<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
template std::optional<RealVector> hyperplane_normal<double>(const RealMatrix&, const ToleranceConfig&);
template std::optional<ComplexVector> hyperplane_normal<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
template class IndependenceTracker<double>;
template class IndependenceTracker<std::complex<double>>;

} // namespace nfbasis
