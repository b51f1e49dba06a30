#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nfbasis/matrix.hpp"
#include "nfbasis/normal_form.hpp"
#include "nfbasis/tolerance.hpp"

namespace nfbasis {

/// Basis of the intersection of the kernels of the given blocks, computed as
/// the kernel of the vertically stacked matrix. All blocks must share the
/// column count.
template <class Scalar>
DenseMatrix<Scalar> common_kernel(const std::vector<DenseMatrix<Scalar>>& blocks,
                                  const ToleranceConfig& tol = {});

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

/// Best rational approximation p/q with q <= max_den, by continued
/// fractions, provided it lands within tol of x. Empty when no denominator
/// up to max_den gets that close.
std::optional<Rational> snap_rational(double x, std::int64_t max_den = 64, double tol = 1e-6);

/// Named physical quantities with their dimension exponents: one row per
/// base dimension, one column per quantity.
struct DimensionTable {
    std::vector<std::string> dimension_names;
    std::vector<std::string> quantity_names;
    RealMatrix exponents; // dimensions x quantities

    void validate() const;
};

/// Independent dimensionless products of powers of the table's quantities.
/// exponent_columns holds the raw normal-formed kernel of the dimension
/// matrix (quantities x groups); snapping affects the rendered labels only.
struct PiGroupSet {
    RealMatrix exponent_columns;
    std::vector<std::string> group_labels;

    std::size_t size() const { return group_labels.size(); }
};

struct PiGroupOptions {
    Algorithm algorithm = Algorithm::standard;
    std::int64_t snap_max_den = 64;
    double snap_tol = 1e-6;
};

/// Kernel of the dimension matrix, normal-formed, one dimensionless group
/// per column. A trivial kernel yields an empty set.
PiGroupSet pi_groups(const DimensionTable& table, const ToleranceConfig& tol = {},
                     const PiGroupOptions& opts = {});

extern template RealMatrix common_kernel<double>(const std::vector<RealMatrix>&, const ToleranceConfig&);
extern template ComplexMatrix common_kernel<std::complex<double>>(const std::vector<ComplexMatrix>&, const ToleranceConfig&);

} // namespace nfbasis
