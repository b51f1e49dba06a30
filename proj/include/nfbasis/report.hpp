#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "nfbasis/matrix_io.hpp"
#include "nfbasis/normal_form.hpp"

namespace nfbasis {

/// Matrix as a JSON array of column arrays; real entries are numbers
/// (shortest round-trip form), complex entries are "a+bi" strings.
nlohmann::json matrix_to_json(const RealMatrix& M);
nlohmann::json matrix_to_json(const ComplexMatrix& M);

/// Inverse of matrix_to_json; infers the field like parse_matrix does.
ParsedMatrix matrix_from_json(const nlohmann::json& columns);

/// Full report for a normal-form computation. Keys: columns, zero_patterns,
/// theta, algorithm, stats. Pattern values are numbers up to 53 rows and
/// decimal strings beyond; exact theta is always a decimal string.
template <class Scalar>
nlohmann::json result_report(const NormalFormResult<Scalar>& result, double wall_time_seconds);

/// Plain-text matrix table. With snap_max_den set, entries are shown as
/// rationals where one within snap_tol exists (display only).
struct TextFormat {
    std::optional<std::int64_t> snap_max_den;
    double snap_tol = 1e-6;
};

std::string matrix_to_text(const RealMatrix& M, const TextFormat& fmt = {});
std::string matrix_to_text(const ComplexMatrix& M, const TextFormat& fmt = {});

extern template nlohmann::json result_report<double>(const NormalFormResult<double>&, double);
extern template nlohmann::json result_report<std::complex<double>>(const NormalFormResult<std::complex<double>>&, double);

} // namespace nfbasis
