#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nfbasis/linalg.hpp"
#include "nfbasis/matrix.hpp"
#include "nfbasis/tolerance.hpp"
#include "nfbasis/zero_pattern.hpp"

namespace nfbasis {

enum class Algorithm { standard, topdown };

/// Verification hook: enumerating row selections forward or backward must
/// not change the result. Applies to the standard algorithm only.
enum class EnumerationOrder { forward, reversed };

struct SearchStats {
    std::uint64_t selections_enumerated = 0; ///< row selections / zero patterns tried
    std::uint64_t candidates_examined = 0;   ///< distinct candidates fed to the greedy filter
    std::uint64_t levels_visited = 0;        ///< zero-count levels processed (top-down only)
};

struct NormalFormOptions {
    /// Accept single-column inputs and return the column scaled so its first
    /// non-vanishing entry is +1. Off by default: one-dimensional spaces are
    /// rejected as unsupported.
    bool allow_single_column = false;
    EnumerationOrder order = EnumerationOrder::forward;
    /// Worker threads for candidate generation. 0 = NFBASIS_THREADS env var,
    /// falling back to the hardware count.
    int threads = 0;
};

/// A normalized hyperplane normal together with its image and ordering key.
/// The first entry of image not classified zero equals +1 by construction.
template <class Scalar>
struct Candidate {
    DenseVector<Scalar> s_hat; ///< normal vector, scaled
    DenseVector<Scalar> image; ///< A * s_hat
    ThetaKey key;              ///< key.pattern records the zeros of image

    const ZeroPattern& pattern() const { return key.pattern; }
};

template <class Scalar>
struct NormalFormResult {
    DenseMatrix<Scalar> columns;   ///< m x n, the normal form in selection order
    DenseMatrix<Scalar> s_vectors; ///< n x n, column j holds s_hat_j
    std::vector<ThetaKey> keys;    ///< strictly decreasing
    Algorithm algorithm = Algorithm::standard;
    SearchStats stats;

    Eigen::Index rows() const { return columns.rows(); }
    Eigen::Index cols() const { return columns.cols(); }
    /// Count of entries not classified zero, per the stored patterns.
    std::int64_t nonzero_entries() const;
};

/// Scales s so that the first non-vanishing entry of A*s becomes +1 and
/// classifies the zero pattern of the image (relative to its largest entry).
/// Throws InternalError if A*s is classified zero everywhere, which signals
/// a rank-deficient A or a broken tolerance.
template <class Scalar>
Candidate<Scalar> normalize_candidate(const DenseMatrix<Scalar>& A, const DenseVector<Scalar>& s,
                                      const ToleranceConfig& tol = {});

/// Three-way comparison consistent with the exact ordering integers.
inline int compare_theta(const ThetaKey& a, const ThetaKey& b) { return ThetaKey::compare(a, b); }

/// Exhaustive search: enumerate all C(m, n-1) row selections, keep those
/// spanning an (n-1)-dimensional space, deduplicate candidates by exact zero
/// pattern, order by key, and greedily pick the first n independent normals.
template <class Scalar>
NormalFormResult<Scalar> normal_form_standard(const DenseMatrix<Scalar>& A,
                                              const ToleranceConfig& tol = {},
                                              const NormalFormOptions& opts = {});

/// Same result as normal_form_standard, searching zero patterns from the
/// highest achievable count downward and stopping once a completed level has
/// produced n independent normals.
template <class Scalar>
NormalFormResult<Scalar> normal_form_topdown(const DenseMatrix<Scalar>& A,
                                             const ToleranceConfig& tol = {},
                                             const NormalFormOptions& opts = {});

template <class Scalar>
NormalFormResult<Scalar> normal_form(const DenseMatrix<Scalar>& A, Algorithm algorithm,
                                     const ToleranceConfig& tol = {},
                                     const NormalFormOptions& opts = {});

/// Closed form for the normal form of the space orthogonal to a single
/// vector with no vanishing entries: first row all ones, -a_1/a_{i+1} on the
/// subdiagonal. Falls back to the general algorithm when some entry of a is
/// classified zero. Requires dim >= 3.
template <class Scalar>
DenseMatrix<Scalar> orthogonal_complement_nf(const DenseVector<Scalar>& a,
                                             const ToleranceConfig& tol = {});

/// Closed form for the normal form of the space orthogonal to two
/// independent vectors (dim >= 4): ones in the first row, a dense second
/// row, and a diagonal below, with each column solved from a 2x2 system.
/// Returns empty when a 2x2 block is singular or the assembled matrix fails
/// its validity conditions; the caller then falls back to the general
/// algorithm.
template <class Scalar>
std::optional<DenseMatrix<Scalar>> two_vector_complement_nf(const DenseVector<Scalar>& a1,
                                                            const DenseVector<Scalar>& a2,
                                                            const ToleranceConfig& tol = {});

extern template struct Candidate<double>;
extern template struct Candidate<std::complex<double>>;
extern template struct NormalFormResult<double>;
extern template struct NormalFormResult<std::complex<double>>;
extern template Candidate<double> normalize_candidate<double>(const RealMatrix&, const RealVector&, const ToleranceConfig&);
extern template Candidate<std::complex<double>> normalize_candidate<std::complex<double>>(const ComplexMatrix&, const ComplexVector&, const ToleranceConfig&);
extern template NormalFormResult<double> normal_form_standard<double>(const RealMatrix&, const ToleranceConfig&, const NormalFormOptions&);
extern template NormalFormResult<std::complex<double>> normal_form_standard<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&, const NormalFormOptions&);
extern template NormalFormResult<double> normal_form_topdown<double>(const RealMatrix&, const ToleranceConfig&, const NormalFormOptions&);
extern template NormalFormResult<std::complex<double>> normal_form_topdown<std::complex<double>>(const ComplexMatrix&, const ToleranceConfig&, const NormalFormOptions&);
extern template NormalFormResult<double> normal_form<double>(const RealMatrix&, Algorithm, const ToleranceConfig&, const NormalFormOptions&);
extern template NormalFormResult<std::complex<double>> normal_form<std::complex<double>>(const ComplexMatrix&, Algorithm, const ToleranceConfig&, const NormalFormOptions&);
extern template RealMatrix orthogonal_complement_nf<double>(const RealVector&, const ToleranceConfig&);
extern template ComplexMatrix orthogonal_complement_nf<std::complex<double>>(const ComplexVector&, const ToleranceConfig&);
extern template std::optional<RealMatrix> two_vector_complement_nf<double>(const RealVector&, const RealVector&, const ToleranceConfig&);
extern template std::optional<ComplexMatrix> two_vector_complement_nf<std::complex<double>>(const ComplexVector&, const ComplexVector&, const ToleranceConfig&);

} // namespace nfbasis
