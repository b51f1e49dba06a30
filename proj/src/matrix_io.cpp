#include "nfbasis/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace nfbasis {

Eigen::Index ParsedMatrix::rows() const {
    return visit([](const auto& m) { return m.rows(); });
}

Eigen::Index ParsedMatrix::cols() const {
    return visit([](const auto& m) { return m.cols(); });
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Full-consumption double parse; nullopt on failure.
std::optional<double> parse_double(const std::string& s) {
    if (s.empty())
        return std::nullopt;
    double value = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    // from_chars rejects a leading '+'
    if (*begin == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return value;
}

[[noreturn]] void bad_token(const std::string& token) {
    throw InvalidInputError("cannot parse scalar '" + token + "'");
}

} // namespace

std::complex<double> parse_scalar(const std::string& raw) {
    const std::string token = trim(raw);
    if (token.empty())
        throw InvalidInputError("empty scalar token");

    // Rational p/q (real only).
    if (const auto slash = token.find('/'); slash != std::string::npos) {
        const auto p = parse_double(token.substr(0, slash));
        const auto q = parse_double(token.substr(slash + 1));
        if (!p || !q || *q == 0.0)
            bad_token(token);
        return {*p / *q, 0.0};
    }

    if (token.back() != 'i') {
        const auto x = parse_double(token);
        if (!x)
            bad_token(token);
        return {*x, 0.0};
    }

    // Complex: find the sign splitting real and imaginary parts; it must not
    // be the leading sign and must not belong to an exponent.
    const std::string body = token.substr(0, token.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if ((body[pos] == '+' || body[pos] == '-') &&
            body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            split = pos;
            break;
        }
    }

    std::string real_part, imag_part;
    if (split == std::string::npos) {
        imag_part = body; // pure imaginary
    } else {
        real_part = body.substr(0, split);
        imag_part = body.substr(split);
    }
    if (imag_part.empty() || imag_part == "+")
        imag_part = "1";
    else if (imag_part == "-")
        imag_part = "-1";

    const auto im = parse_double(imag_part);
    if (!im)
        bad_token(token);
    if (real_part.empty())
        return {0.0, *im};
    const auto re = parse_double(real_part);
    if (!re)
        bad_token(token);
    return {*re, *im};
}

ParsedMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<std::complex<double>>> rows;
    bool any_imag = false;

    std::vector<std::pair<int, std::string>> cleaned; // (line number, content)
    {
        std::istringstream lines(text);
        std::string line;
        int line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (!line.empty())
                cleaned.emplace_back(line_no, std::move(line));
        }
    }
    const bool comma = std::any_of(cleaned.begin(), cleaned.end(), [](const auto& l) {
        return l.second.find(',') != std::string::npos;
    });

    for (const auto& [line_no, line] : cleaned) {
        std::vector<std::string> tokens;
        if (comma) {
            std::istringstream cells(line);
            std::string cell;
            while (std::getline(cells, cell, ','))
                tokens.push_back(trim(cell));
        } else {
            std::istringstream cells(line);
            std::string cell;
            while (cells >> cell)
                tokens.push_back(cell);
        }

        std::vector<std::complex<double>> row;
        row.reserve(tokens.size());
        for (const auto& t : tokens) {
            std::complex<double> z;
            try {
                z = parse_scalar(t);
            } catch (const InvalidInputError& e) {
                throw InvalidInputError(std::string(e.what()) + " at line " +
                                        std::to_string(line_no));
            }
            any_imag = any_imag || z.imag() != 0.0;
            row.push_back(z);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw InvalidInputError("ragged matrix: line " + std::to_string(line_no) + " has " +
                                    std::to_string(row.size()) + " entries, expected " +
                                    std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }

    if (rows.empty() || rows.front().empty())
        throw InvalidInputError("matrix text contains no entries");

    const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index n = static_cast<Eigen::Index>(rows.front().size());
    if (any_imag) {
        ComplexMatrix M(m, n);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return ParsedMatrix(std::move(M));
    }
    RealMatrix M(m, n);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].real();
    return ParsedMatrix(std::move(M));
}

std::string format_scalar(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string format_scalar(const std::complex<double>& z) {
    std::string s = format_scalar(z.real());
    std::string t = format_scalar(z.imag());
    if (t[0] != '-')
        s += '+';
    return s + t + "i";
}

DimensionTable parse_dimension_table_csv(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    DimensionTable table;
    std::vector<std::vector<double>> exps;

    while (std::getline(lines, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        if (trim(line).empty())
            continue;

        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ','))
            cells.push_back(trim(cell));

        if (table.quantity_names.empty() && exps.empty()) {
            if (cells.size() < 2)
                throw InvalidInputError("dimension table: header needs at least one quantity"
                                        " (line " + std::to_string(line_no) + ")");
            table.quantity_names.assign(cells.begin() + 1, cells.end());
            for (const auto& q : table.quantity_names)
                if (q.empty())
                    throw InvalidInputError("dimension table: empty quantity name in header");
            continue;
        }

        if (cells.size() != table.quantity_names.size() + 1)
            throw InvalidInputError("dimension table: line " + std::to_string(line_no) +
                                    " has " + std::to_string(cells.size()) + " cells, expected " +
                                    std::to_string(table.quantity_names.size() + 1));
        if (cells.front().empty())
            throw InvalidInputError("dimension table: empty dimension name at line " +
                                    std::to_string(line_no));
        table.dimension_names.push_back(cells.front());
        std::vector<double> row_exps;
        for (std::size_t c = 1; c < cells.size(); ++c) {
            const auto z = parse_scalar(cells[c]);
            if (z.imag() != 0.0)
                throw InvalidInputError("dimension table: complex exponent at line " +
                                        std::to_string(line_no));
            row_exps.push_back(z.real());
        }
        exps.push_back(std::move(row_exps));
    }

    if (table.quantity_names.empty() || exps.empty())
        throw InvalidInputError("dimension table: need a header row and at least one dimension row");

    table.exponents.resize(static_cast<Eigen::Index>(exps.size()),
                           static_cast<Eigen::Index>(table.quantity_names.size()));
    for (Eigen::Index i = 0; i < table.exponents.rows(); ++i)
        for (Eigen::Index j = 0; j < table.exponents.cols(); ++j)
            table.exponents(i, j) = exps[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    table.validate();
    return table;
}

} // namespace nfbasis
