#include "nfbasis/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace nfbasis {

nlohmann::json matrix_to_json(const RealMatrix& M) {
    nlohmann::json cols = nlohmann::json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (Eigen::Index r = 0; r < M.rows(); ++r)
            col.push_back(M(r, c));
        cols.push_back(std::move(col));
    }
    return cols;
}

nlohmann::json matrix_to_json(const ComplexMatrix& M) {
    nlohmann::json cols = nlohmann::json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
        nlohmann::json col = nlohmann::json::array();
        for (Eigen::Index r = 0; r < M.rows(); ++r)
            col.push_back(format_scalar(M(r, c)));
        cols.push_back(std::move(col));
    }
    return cols;
}

ParsedMatrix matrix_from_json(const nlohmann::json& columns) {
    if (!columns.is_array() || columns.empty() || !columns[0].is_array() || columns[0].empty())
        throw InvalidInputError("matrix_from_json: expected a non-empty array of column arrays");
    const Eigen::Index n = static_cast<Eigen::Index>(columns.size());
    const Eigen::Index m = static_cast<Eigen::Index>(columns[0].size());
    bool any_imag = false;
    std::vector<std::vector<std::complex<double>>> cols;
    for (const auto& col : columns) {
        if (static_cast<Eigen::Index>(col.size()) != m)
            throw InvalidInputError("matrix_from_json: ragged columns");
        std::vector<std::complex<double>> parsed;
        parsed.reserve(col.size());
        for (const auto& entry : col) {
            std::complex<double> z;
            if (entry.is_number())
                z = {entry.get<double>(), 0.0};
            else if (entry.is_string())
                z = parse_scalar(entry.get<std::string>());
            else
                throw InvalidInputError("matrix_from_json: entries must be numbers or strings");
            any_imag = any_imag || z.imag() != 0.0;
            parsed.push_back(z);
        }
        cols.push_back(std::move(parsed));
    }
    if (any_imag) {
        ComplexMatrix M(m, n);
        for (Eigen::Index c = 0; c < n; ++c)
            for (Eigen::Index r = 0; r < m; ++r)
                M(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        return ParsedMatrix(std::move(M));
    }
    RealMatrix M(m, n);
    for (Eigen::Index c = 0; c < n; ++c)
        for (Eigen::Index r = 0; r < m; ++r)
            M(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)].real();
    return ParsedMatrix(std::move(M));
}

template <class Scalar>
nlohmann::json result_report(const NormalFormResult<Scalar>& result, double wall_time_seconds) {
    nlohmann::json report;
    report["columns"] = matrix_to_json(result.columns);

    nlohmann::json patterns = nlohmann::json::array();
    nlohmann::json theta = nlohmann::json::array();
    const bool small = result.rows() <= 53; // pattern values stay exact in a double
    for (const auto& key : result.keys) {
        patterns.push_back(key.pattern.to_string());
        nlohmann::json t;
        t["zero_count"] = key.zero_count;
        if (small)
            t["pattern_value"] = key.pattern.value_u64();
        else
            t["pattern_value"] = key.pattern.value_decimal();
        t["exact_theta"] = key.exact_theta_decimal();
        theta.push_back(std::move(t));
    }
    report["zero_patterns"] = std::move(patterns);
    report["theta"] = std::move(theta);
    report["algorithm"] = result.algorithm == Algorithm::standard ? "standard" : "topdown";
    report["stats"] = {
        {"selections_enumerated", result.stats.selections_enumerated},
        {"candidates_examined", result.stats.candidates_examined},
        {"levels_visited", result.stats.levels_visited},
        {"wall_time", wall_time_seconds},
    };
    return report;
}

namespace {

std::string entry_text(double x, const TextFormat& fmt) {
    if (fmt.snap_max_den) {
        if (const auto r = snap_rational(x, *fmt.snap_max_den, fmt.snap_tol))
            return r->to_string();
    }
    return format_scalar(x);
}

std::string entry_text(const std::complex<double>& z, const TextFormat& fmt) {
    if (z.imag() == 0.0)
        return entry_text(z.real(), fmt);
    if (fmt.snap_max_den) {
        const auto re = snap_rational(z.real(), *fmt.snap_max_den, fmt.snap_tol);
        const auto im = snap_rational(z.imag(), *fmt.snap_max_den, fmt.snap_tol);
        if (re && im) {
            std::string t = im->to_string();
            return re->to_string() + (t[0] == '-' ? "" : "+") + t + "i";
        }
    }
    return format_scalar(z);
}

template <class Scalar>
std::string matrix_text(const DenseMatrix<Scalar>& M, const TextFormat& fmt) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<std::size_t>(M.size()));
    std::size_t width = 0;
    for (Eigen::Index r = 0; r < M.rows(); ++r)
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            cells.push_back(entry_text(M(r, c), fmt));
            width = std::max(width, cells.back().size());
        }
    std::ostringstream out;
    std::size_t at = 0;
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
        for (Eigen::Index c = 0; c < M.cols(); ++c) {
            const std::string& cell = cells[at++];
            out << std::string(width - cell.size() + (c ? 2 : 0), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string matrix_to_text(const RealMatrix& M, const TextFormat& fmt) {
    return matrix_text(M, fmt);
}

std::string matrix_to_text(const ComplexMatrix& M, const TextFormat& fmt) {
    return matrix_text(M, fmt);
}

template nlohmann::json result_report<double>(const NormalFormResult<double>&, double);
template nlohmann::json result_report<std::complex<double>>(const NormalFormResult<std::complex<double>>&, double);

} // namespace nfbasis
