#pragma once

#include <optional>
#include <vector>

#include "nfbasis/matrix.hpp"
#include "nfbasis/tolerance.hpp"

namespace nfbasis {

/// Number of singular values above rank_rel_tol * sigma_max * max(m, n).
template <class Scalar>
Eigen::Index rank(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol = {});

/// Orthonormal basis of {v : M v = 0} as matrix columns. The product M v is
/// the plain (unconjugated) one, which is what an SVD kernel delivers for
/// complex M as well. Returns an n x 0 matrix when the kernel is trivial.
template <class Scalar>
DenseMatrix<Scalar> nullspace_basis(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol = {});

/// Rank and smallest/largest singular value in one pass; used where callers
/// need the singular spectrum anyway.
template <class Scalar>
struct RankInfo {
    Eigen::Index rank = 0;
    double sigma_max = 0.0;
    double sigma_min = 0.0; // smallest of the min(m,n) singular values
};

template <class Scalar>
RankInfo<Scalar> rank_info(const DenseMatrix<Scalar>& M, const ToleranceConfig& tol = {});

/// One normal vector s of the hyperplane spanned by the given rows, i.e.
/// rows * s = 0 with the unconjugated product. Present iff the rows span a
/// space of dimension exactly n-1; s comes back with unit Euclidean norm.
template <class Scalar>
std::optional<DenseVector<Scalar>> hyperplane_normal(const DenseMatrix<Scalar>& rows,
                                                     const ToleranceConfig& tol = {});

/// Incremental linear-independence filter over F^n. Accepted vectors are
/// kept verbatim; the span is tracked as an orthonormal set maintained by
/// modified Gram-Schmidt with one re-orthogonalization pass.
template <class Scalar>
class IndependenceTracker {
public:
    explicit IndependenceTracker(Eigen::Index ambient_dim);

    /// True iff v was independent of the accepted span at tol.indep_rel_tol
    /// (relative to ||v||); extends the tracked span on acceptance.
    bool try_extend(const DenseVector<Scalar>& v, const ToleranceConfig& tol = {});

    Eigen::Index ambient_dim() const { return ambient_dim_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(accepted_.size()); }
    const std::vector<DenseVector<Scalar>>& accepted() const { return accepted_; }

private:
    Eigen::Index ambient_dim_;
    std::vector<DenseVector<Scalar>> accepted_;
    DenseMatrix<Scalar> ortho_; // ambient_dim x size(), orthonormal columns
};

extern template Eigen::Index rank<double>(const RealMatrix&, const ToleranceConfig&);
extern template Eigen::Index rank<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
extern template RealMatrix nullspace_basis<double>(const RealMatrix&, const ToleranceConfig&);
extern template ComplexMatrix nullspace_basis<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
extern template RankInfo<double> rank_info<double>(const RealMatrix&, const ToleranceConfig&);
extern template RankInfo<std::complex<double>> rank_info<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
extern template std::optional<RealVector> hyperplane_normal<double>(const RealMatrix&, const ToleranceConfig&);
extern template std::optional<ComplexVector> hyperplane_normal<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&);
extern template class IndependenceTracker<double>;
extern template class IndependenceTracker<std::complex<double>>;

} // namespace nfbasis
