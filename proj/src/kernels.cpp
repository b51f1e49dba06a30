#include "nfbasis/kernels.hpp"

#include "nfbasis/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

namespace nfbasis {

template <class Scalar>
DenseMatrix<Scalar> common_kernel(const std::vector<DenseMatrix<Scalar>>& blocks,
                                  const ToleranceConfig& tol) {
    if (blocks.empty())
        throw InvalidInputError("common_kernel: at least one block required");
    const Eigen::Index cols = blocks.front().cols();
    Eigen::Index rows = 0;
    for (const auto& b : blocks) {
        require_valid(b, "common_kernel");
        if (b.cols() != cols)
            throw InvalidInputError("common_kernel: blocks have inconsistent column counts");
        rows += b.rows();
    }
    DenseMatrix<Scalar> stacked(rows, cols);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        stacked.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return nullspace_basis(stacked, tol);
}

std::string Rational::to_string() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> snap_rational(double x, std::int64_t max_den, double tol) {
    if (max_den < 1)
        throw InvalidInputError("snap_rational: max_den must be >= 1");
    if (!std::isfinite(x) || std::abs(x) > 9e15)
        return std::nullopt;

    const double target = std::abs(x);
    // Convergent recurrence h_i = a_i h_{i-1} + h_{i-2}, same for k.
    std::int64_t h_prev2 = 0, h_prev = 1;
    std::int64_t k_prev2 = 1, k_prev = 0;
    std::int64_t best_num = 0, best_den = 1;
    bool have = false;
    double y = target;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_float = std::floor(y);
        if (a_float > 9e15)
            break;
        const std::int64_t a = static_cast<std::int64_t>(a_float);
        const std::int64_t h = a * h_prev + h_prev2;
        const std::int64_t k = a * k_prev + k_prev2;
        if (k > max_den) {
            // Fold back to the largest semiconvergent that still fits.
            const std::int64_t t = k_prev > 0 ? (max_den - k_prev2) / k_prev : 0;
            if (t > 0) {
                const std::int64_t hs = t * h_prev + h_prev2;
                const std::int64_t ks = t * k_prev + k_prev2;
                const double err_semi = std::abs(target - static_cast<double>(hs) / static_cast<double>(ks));
                const double err_best = have
                    ? std::abs(target - static_cast<double>(best_num) / static_cast<double>(best_den))
                    : std::numeric_limits<double>::infinity();
                if (err_semi < err_best) {
                    best_num = hs;
                    best_den = ks;
                    have = true;
                }
            }
            break;
        }
        best_num = h;
        best_den = k;
        have = true;
        const double frac = y - a_float;
        if (frac <= 0.0 || 1.0 / frac > 9e15)
            break;
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        y = 1.0 / frac;
        if (std::abs(target - static_cast<double>(h) / static_cast<double>(k)) <= tol)
            break; // already close enough; smaller denominators are preferred
    }
    if (!have)
        return std::nullopt;
    if (std::abs(target - static_cast<double>(best_num) / static_cast<double>(best_den)) > tol)
        return std::nullopt;
    return Rational{x < 0 ? -best_num : best_num, best_den};
}

void DimensionTable::validate() const {
    if (dimension_names.empty() || quantity_names.empty())
        throw InvalidInputError("DimensionTable: names must be non-empty");
    if (exponents.rows() != static_cast<Eigen::Index>(dimension_names.size()) ||
        exponents.cols() != static_cast<Eigen::Index>(quantity_names.size()))
        throw InvalidInputError("DimensionTable: exponent shape does not match the name lists");
    if (!exponents.allFinite())
        throw InvalidInputError("DimensionTable: non-finite exponents");
    std::set<std::string> dims(dimension_names.begin(), dimension_names.end());
    std::set<std::string> qs(quantity_names.begin(), quantity_names.end());
    if (dims.size() != dimension_names.size() || qs.size() != quantity_names.size())
        throw InvalidInputError("DimensionTable: names must be unique");
}

namespace {

std::string power_factor(const std::string& name, const std::optional<Rational>& snapped,
                         double magnitude) {
    // magnitude is the absolute exponent; the caller already chose the side.
    if (snapped) {
        if (snapped->den == 1 && std::abs(snapped->num) == 1)
            return name;
        if (snapped->den == 1)
            return name + "^" + std::to_string(std::abs(snapped->num));
        return name + "^(" + std::to_string(std::abs(snapped->num)) + "/" +
               std::to_string(snapped->den) + ")";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", magnitude);
    return name + "^" + buf;
}

std::string render_group(const RealVector& exponents, const std::vector<std::string>& names,
                         const PiGroupOptions& opts) {
    std::vector<std::string> sqrt_num, sqrt_den, num, den;
    for (Eigen::Index i = 0; i < exponents.size(); ++i) {
        const double e = exponents(i);
        const auto snapped = snap_rational(e, opts.snap_max_den, opts.snap_tol);
        if (snapped && snapped->num == 0)
            continue;
        if (!snapped && e == 0.0)
            continue;
        // Radical notation for exponent one half only.
        if (snapped && snapped->den == 2 && std::abs(snapped->num) == 1) {
            (snapped->num > 0 ? sqrt_num : sqrt_den).push_back(names[static_cast<std::size_t>(i)]);
            continue;
        }
        const bool positive = snapped ? snapped->num > 0 : e > 0;
        (positive ? num : den)
            .push_back(power_factor(names[static_cast<std::size_t>(i)], snapped, std::abs(e)));
    }

    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += "*";
            s += parts[i];
        }
        return s;
    };

    std::vector<std::string> numerator;
    if (!sqrt_num.empty()) {
        std::string inner = join(sqrt_num);
        if (!sqrt_den.empty())
            inner += "/" + (sqrt_den.size() == 1 ? join(sqrt_den) : "(" + join(sqrt_den) + ")");
        numerator.push_back("sqrt(" + inner + ")");
    } else if (!sqrt_den.empty()) {
        den.push_back("sqrt(" + join(sqrt_den) + ")");
    }
    for (auto& f : num)
        numerator.push_back(std::move(f));

    std::string out = numerator.empty() ? "1" : join(numerator);
    if (!den.empty())
        out += "/" + (den.size() == 1 ? join(den) : "(" + join(den) + ")");
    return out;
}

} // namespace

PiGroupSet pi_groups(const DimensionTable& table, const ToleranceConfig& tol,
                     const PiGroupOptions& opts) {
    table.validate();
    tol.validate();
    const RealMatrix kernel = nullspace_basis(table.exponents, tol);
    PiGroupSet set;
    if (kernel.cols() == 0) {
        set.exponent_columns = RealMatrix(table.exponents.cols(), 0);
        return set;
    }
    NormalFormOptions nf_opts;
    nf_opts.allow_single_column = true; // a one-dimensional kernel is one valid group
    const auto nf = normal_form(kernel, opts.algorithm, tol, nf_opts);
    set.exponent_columns = nf.columns;
    set.group_labels.reserve(static_cast<std::size_t>(nf.columns.cols()));
    for (Eigen::Index c = 0; c < nf.columns.cols(); ++c)
        set.group_labels.push_back(render_group(nf.columns.col(c), table.quantity_names, opts));
    return set;
}

template RealMatrix common_kernel<double>(const std::vector<RealMatrix>&, const ToleranceConfig&);
template ComplexMatrix common_kernel<std::complex<double>>(const std::vector<ComplexMatrix>&, const ToleranceConfig&);

} // namespace nfbasis
