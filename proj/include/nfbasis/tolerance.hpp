#pragma once

#include "nfbasis/errors.hpp"

namespace nfbasis {

/// Relative thresholds used throughout the library. All three are
/// dimensionless and must lie in (0, 1).
struct ToleranceConfig {
    /// Singular values sigma_i with sigma_i <= rank_rel_tol * sigma_max * max(m, n)
    /// are treated as zero when counting rank.
    double rank_rel_tol = 1e-10;

    /// Entries of an image vector A*s with |entry| <= zero_rel_tol * max|A*s|
    /// are classified as zero.
    double zero_rel_tol = 1e-9;

    /// A vector extends an independent set iff its residual after projection
    /// onto the accepted span exceeds indep_rel_tol * ||v||.
    double indep_rel_tol = 1e-9;

    void validate() const {
        auto ok = [](double t) { return t > 0.0 && t < 1.0; };
        if (!ok(rank_rel_tol) || !ok(zero_rel_tol) || !ok(indep_rel_tol))
            throw InvalidInputError("tolerances must be strictly positive and < 1");
    }
};

} // namespace nfbasis
