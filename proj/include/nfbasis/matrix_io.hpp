#pragma once

#include <complex>
#include <string>
#include <variant>

#include "nfbasis/kernels.hpp"
#include "nfbasis/matrix.hpp"

namespace nfbasis {

/// Matrix parsed from text, real unless some entry carried an imaginary part.
class ParsedMatrix {
public:
    ParsedMatrix(RealMatrix m) : data_(std::move(m)) {}
    ParsedMatrix(ComplexMatrix m) : data_(std::move(m)) {}

    bool is_complex() const { return std::holds_alternative<ComplexMatrix>(data_); }
    const RealMatrix& real() const { return std::get<RealMatrix>(data_); }
    const ComplexMatrix& complex() const { return std::get<ComplexMatrix>(data_); }

    Eigen::Index rows() const;
    Eigen::Index cols() const;

    template <class Fn>
    auto visit(Fn&& fn) const {
        return std::visit(std::forward<Fn>(fn), data_);
    }

private:
    std::variant<RealMatrix, ComplexMatrix> data_;
};

/// One scalar token: decimal, scientific, rational p/q, or complex a+bi.
/// `i` alone means 0+1i. Throws InvalidInputError on malformed input.
std::complex<double> parse_scalar(const std::string& token);

/// Whitespace- or comma-delimited rows, one per line; `#` starts a comment.
/// Raggedness and bad tokens are reported with their line number.
ParsedMatrix parse_matrix(const std::string& text);

/// Shortest decimal rendering that parses back to the identical double.
std::string format_scalar(double x);
/// Full-precision a+bi rendering.
std::string format_scalar(const std::complex<double>& z);

/// Dimension-table CSV: blank-first-cell header of quantity names, then one
/// row per dimension, name first.
DimensionTable parse_dimension_table_csv(const std::string& text);

} // namespace nfbasis
