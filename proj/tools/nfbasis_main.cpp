#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nfbasis/echelon.hpp"
#include "nfbasis/kernels.hpp"
#include "nfbasis/matrix_io.hpp"
#include "nfbasis/noether.hpp"
#include "nfbasis/normal_form.hpp"
#include "nfbasis/report.hpp"

namespace {

using namespace nfbasis;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonFlags {
    bool json = false;
    std::int64_t snap_raw = 0; // 0 = off, >0 = max denominator

    std::optional<std::int64_t> snap_max_den() const {
        return snap_raw > 0 ? std::optional<std::int64_t>(snap_raw) : std::nullopt;
    }
};

void add_snap_flag(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--snap-rational{64}", flags.snap_raw,
                  "Show entries as rationals p/q (display only; optional =MAXDEN, default 64)");
}

TextFormat text_format(const CommonFlags& flags) {
    TextFormat fmt;
    fmt.snap_max_den = flags.snap_max_den();
    return fmt;
}

void print_matrix(const ParsedMatrix& M, const CommonFlags& flags) {
    M.visit([&](const auto& mat) { std::cout << matrix_to_text(mat, text_format(flags)); });
}

template <class Scalar>
void print_result_human(const NormalFormResult<Scalar>& result, double seconds,
                        const CommonFlags& flags) {
    std::cout << "normal form (" << result.rows() << "x" << result.cols() << ", "
              << (result.algorithm == Algorithm::standard ? "standard" : "topdown") << "):\n"
              << matrix_to_text(result.columns, text_format(flags));
    std::cout << "zero patterns (leftmost character = row 1, '1' = zero):\n";
    for (std::size_t j = 0; j < result.keys.size(); ++j)
        std::cout << "  column " << j + 1 << ": " << result.keys[j].pattern.to_string()
                  << "  (zeros=" << result.keys[j].zero_count
                  << ", theta=" << result.keys[j].exact_theta_decimal() << ")\n";
    std::cout << "stats: selections_enumerated=" << result.stats.selections_enumerated
              << " candidates_examined=" << result.stats.candidates_examined
              << " levels_visited=" << result.stats.levels_visited << " wall_time=" << seconds
              << "s\n";
}

template <class Scalar>
int run_normal_form_typed(const DenseMatrix<Scalar>& A, Algorithm algo,
                          const ToleranceConfig& tol, const NormalFormOptions& opts,
                          const CommonFlags& flags) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = normal_form(A, algo, tol, opts);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (flags.json)
        std::cout << result_report(result, seconds).dump(2) << "\n";
    else
        print_result_human(result, seconds, flags);
    return kExitOk;
}

int run_normal_form(const std::string& file, const std::string& algorithm, double zero_tol,
                    double rank_tol, bool allow_n1, const CommonFlags& flags) {
    ToleranceConfig tol;
    if (zero_tol > 0) tol.zero_rel_tol = zero_tol;
    if (rank_tol > 0) tol.rank_rel_tol = rank_tol;
    NormalFormOptions opts;
    opts.allow_single_column = allow_n1;
    const Algorithm algo = algorithm == "standard" ? Algorithm::standard : Algorithm::topdown;
    const ParsedMatrix M = parse_matrix(read_file(file));
    return M.visit([&](const auto& mat) { return run_normal_form_typed(mat, algo, tol, opts, flags); });
}

int run_rcef(const std::string& file, const CommonFlags& flags) {
    const ParsedMatrix M = parse_matrix(read_file(file));
    return M.visit([&](const auto& mat) {
        auto result = rcef(mat, ToleranceConfig{});
        if (flags.json) {
            nlohmann::json report;
            report["columns"] = matrix_to_json(result);
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "rcef (" << result.rows() << "x" << result.cols() << "):\n"
                      << matrix_to_text(result, text_format(flags));
        }
        return kExitOk;
    });
}

int run_nullspace(const std::string& file, bool to_normal_form, const std::string& algorithm,
                  const CommonFlags& flags) {
    const ParsedMatrix M = parse_matrix(read_file(file));
    const ToleranceConfig tol;
    return M.visit([&](const auto& mat) {
        auto kernel = nullspace_basis(mat, tol);
        if (kernel.cols() == 0) {
            if (flags.json) {
                nlohmann::json report;
                report["columns"] = nlohmann::json::array();
                std::cout << report.dump(2) << "\n";
            } else {
                std::cout << "kernel is trivial (rank " << mat.cols() << ")\n";
            }
            return kExitOk;
        }
        if (to_normal_form) {
            NormalFormOptions opts;
            opts.allow_single_column = true; // a 1-dim kernel still has a canonical vector
            const Algorithm algo = algorithm == "standard" ? Algorithm::standard : Algorithm::topdown;
            return run_normal_form_typed(kernel, algo, tol, opts, flags);
        }
        if (flags.json) {
            nlohmann::json report;
            report["columns"] = matrix_to_json(kernel);
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << "kernel basis (" << kernel.rows() << "x" << kernel.cols() << "):\n"
                      << matrix_to_text(kernel, text_format(flags));
        }
        return kExitOk;
    });
}

int run_pi_groups(const std::string& file, const std::string& algorithm, const CommonFlags& flags) {
    const DimensionTable table = parse_dimension_table_csv(read_file(file));
    PiGroupOptions opts;
    opts.algorithm = algorithm == "standard" ? Algorithm::standard : Algorithm::topdown;
    const PiGroupSet groups = pi_groups(table, ToleranceConfig{}, opts);
    if (flags.json) {
        nlohmann::json report;
        report["columns"] = matrix_to_json(groups.exponent_columns);
        report["group_labels"] = groups.group_labels;
        report["quantities"] = table.quantity_names;
        std::cout << report.dump(2) << "\n";
        return kExitOk;
    }
    if (groups.size() == 0) {
        std::cout << "no dimensionless groups (trivial kernel)\n";
        return kExitOk;
    }
    std::cout << "dimensionless groups:\n";
    for (std::size_t g = 0; g < groups.size(); ++g)
        std::cout << "  a" << g + 1 << " = " << groups.group_labels[g] << "\n";
    TextFormat fmt;
    fmt.snap_max_den = flags.snap_raw > 0 ? flags.snap_raw : 64;
    std::cout << "exponent columns (quantities x groups):\n"
              << matrix_to_text(groups.exponent_columns, fmt);
    return kExitOk;
}

int run_noether(double m1, double m2, double alpha, std::uint64_t samples, std::uint64_t seed,
                const std::string& orbit_csv, const CommonFlags& flags) {
    const noether::TwoBodyParams params{m1, m2, alpha};
    const auto t0 = std::chrono::steady_clock::now();
    const auto sym = noether::find_symmetries(params, samples, seed);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    for (const auto& w : sym.warnings)
        std::cerr << "warning: " << w << "\n";

    // The mixed generators carry the mass ratio: with B(1,2) normalized to 1
    // the entry B(1,5) equals m2/(m1-m2) when the expected structure holds.
    std::optional<double> beta;
    if (sym.kernel_dim == 9 && sym.normal_form.rows() == 42) {
        const auto& C = sym.normal_form.columns;
        beta = C(10, 6);
    }

    if (!orbit_csv.empty()) {
        if (sym.kernel_dim < 7)
            throw InvalidInputError("noether-demo: no mixed generator available for --orbit-csv");
        const auto gen = noether::Generator::from_flat(sym.normal_form.columns.col(6));
        Eigen::Matrix<double, 6, 1> x0;
        x0 << 1.0, 0.0, 0.0, -0.4, 0.3, 0.0;
        const auto orbit = noether::transformation_orbit(gen, x0, 2.0 * M_PI, 361);
        std::ofstream csv(orbit_csv);
        if (!csv)
            throw InvalidInputError("cannot write '" + orbit_csv + "'");
        csv << "lambda,x1_x,x1_y,x1_z,x2_x,x2_y,x2_z\n";
        for (std::size_t i = 0; i < orbit.lambdas.size(); ++i) {
            csv << format_scalar(orbit.lambdas[i]);
            for (int c = 0; c < 6; ++c)
                csv << "," << format_scalar(orbit.points[i](c));
            csv << "\n";
        }
    }

    if (flags.json) {
        nlohmann::json report = result_report(sym.normal_form, seconds);
        report["kernel_dim"] = sym.kernel_dim;
        report["samples"] = sym.samples;
        report["nonzero_entries"] = sym.normal_form.nonzero_entries();
        report["params"] = {{"m1", m1}, {"m2", m2}, {"alpha", alpha}, {"seed", seed}};
        if (beta)
            report["beta"] = *beta;
        report["warnings"] = sym.warnings;
        std::cout << report.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "two-body symmetry search: m1=" << m1 << " m2=" << m2 << " alpha=" << alpha
              << " samples=" << samples << " seed=" << seed << "\n";
    std::cout << "symmetry space dimension: " << sym.kernel_dim << "\n";
    std::cout << "normal form: 42x" << sym.kernel_dim << " with "
              << sym.normal_form.nonzero_entries() << " nonzero entries\n";
    if (beta)
        std::cout << "mass-ratio coefficient in mixed generators: beta=" << *beta
                  << " (m2/(m1-m2)=" << m2 / (m1 - m2) << ")\n";
    TextFormat fmt;
    fmt.snap_max_den = flags.snap_raw > 0 ? flags.snap_raw : 1024;
    fmt.snap_tol = 1e-7;
    for (Eigen::Index g = 0; g < sym.kernel_dim; ++g) {
        const auto gen = noether::Generator::from_flat(sym.normal_form.columns.col(g));
        std::string a_row = matrix_to_text(RealMatrix(gen.a.transpose()), fmt);
        if (!a_row.empty() && a_row.back() == '\n')
            a_row.pop_back();
        std::cout << "generator " << g + 1 << ":\n  a = (" << a_row << " )\n  B =\n";
        std::istringstream lines(matrix_to_text(RealMatrix(gen.B), fmt));
        std::string line;
        while (std::getline(lines, line))
            std::cout << "    " << line << "\n";
    }
    std::cout << "wall time: " << seconds << " s\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse normal form for bases of finite-dimensional vector spaces"};
    app.require_subcommand(1);

    // normal-form
    std::string nf_file, nf_algorithm = "topdown";
    double nf_zero_tol = 0, nf_rank_tol = 0;
    bool nf_allow_n1 = false;
    CommonFlags nf_flags;
    auto* nf_cmd = app.add_subcommand("normal-form", "Normal form of the column space of FILE");
    nf_cmd->add_option("file", nf_file, "matrix file")->required();
    nf_cmd->add_option("--algorithm", nf_algorithm, "standard|topdown (default topdown)")
        ->check(CLI::IsMember({"standard", "topdown"}));
    nf_cmd->add_option("--zero-tol", nf_zero_tol, "relative zero classification tolerance");
    nf_cmd->add_option("--rank-tol", nf_rank_tol, "relative rank tolerance");
    nf_cmd->add_flag("--allow-n1", nf_allow_n1, "accept single-column inputs");
    nf_cmd->add_flag("--json", nf_flags.json, "JSON report on stdout");
    add_snap_flag(nf_cmd, nf_flags);

    // rcef
    std::string rcef_file;
    CommonFlags rcef_flags;
    auto* rcef_cmd = app.add_subcommand("rcef", "Reduced column echelon form of FILE");
    rcef_cmd->add_option("file", rcef_file, "matrix file")->required();
    rcef_cmd->add_flag("--json", rcef_flags.json, "JSON report on stdout");
    add_snap_flag(rcef_cmd, rcef_flags);

    // nullspace
    std::string ns_file, ns_algorithm = "topdown";
    bool ns_nf = false;
    CommonFlags ns_flags;
    auto* ns_cmd = app.add_subcommand("nullspace", "Kernel basis of the matrix in FILE");
    ns_cmd->add_option("file", ns_file, "matrix file")->required();
    ns_cmd->add_flag("--normal-form", ns_nf, "normal-form the kernel basis");
    ns_cmd->add_option("--algorithm", ns_algorithm, "standard|topdown (with --normal-form)")
        ->check(CLI::IsMember({"standard", "topdown"}));
    ns_cmd->add_flag("--json", ns_flags.json, "JSON report on stdout");
    add_snap_flag(ns_cmd, ns_flags);

    // pi-groups
    std::string pi_file, pi_algorithm = "standard";
    CommonFlags pi_flags;
    auto* pi_cmd = app.add_subcommand("pi-groups",
                                      "Dimensionless groups from a dimension-table CSV");
    pi_cmd->add_option("file", pi_file, "dimension table CSV")->required();
    pi_cmd->add_option("--algorithm", pi_algorithm, "standard|topdown")
        ->check(CLI::IsMember({"standard", "topdown"}));
    pi_cmd->add_flag("--json", pi_flags.json, "JSON report on stdout");
    add_snap_flag(pi_cmd, pi_flags);

    // noether-demo
    double no_m1 = 0.7, no_m2 = 0.3, no_alpha = 0.5;
    std::uint64_t no_samples = 100, no_seed = 1;
    std::string no_orbit_csv;
    CommonFlags no_flags;
    auto* no_cmd = app.add_subcommand(
        "noether-demo", "Detect two-body symmetries numerically and normal-form the generators");
    no_cmd->add_option("--m1", no_m1, "first mass (default 0.7)");
    no_cmd->add_option("--m2", no_m2, "second mass (default 0.3)");
    no_cmd->add_option("--alpha", no_alpha, "potential coupling (default 0.5)");
    no_cmd->add_option("--samples", no_samples, "sampled states (default 100)");
    no_cmd->add_option("--seed", no_seed, "RNG seed (default 1)");
    no_cmd->add_option("--orbit-csv", no_orbit_csv,
                       "write the finite transformation orbit of the first mixed generator");
    no_cmd->add_flag("--json", no_flags.json, "JSON report on stdout");
    add_snap_flag(no_cmd, no_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (nf_cmd->parsed())
            return run_normal_form(nf_file, nf_algorithm, nf_zero_tol, nf_rank_tol, nf_allow_n1,
                                   nf_flags);
        if (rcef_cmd->parsed())
            return run_rcef(rcef_file, rcef_flags);
        if (ns_cmd->parsed())
            return run_nullspace(ns_file, ns_nf, ns_algorithm, ns_flags);
        if (pi_cmd->parsed())
            return run_pi_groups(pi_file, pi_algorithm, pi_flags);
        if (no_cmd->parsed())
            return run_noether(no_m1, no_m2, no_alpha, no_samples, no_seed, no_orbit_csv, no_flags);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
