#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nfbasis/echelon.hpp"
#include "nfbasis/kernels.hpp"
#include "nfbasis/linalg.hpp"
#include "nfbasis/noether.hpp"
#include "nfbasis/normal_form.hpp"

namespace py = pybind11;
using namespace nfbasis;

namespace {

ToleranceConfig make_tol(double rank_tol, double zero_tol, double indep_tol) {
    ToleranceConfig tol;
    if (rank_tol > 0) tol.rank_rel_tol = rank_tol;
    if (zero_tol > 0) tol.zero_rel_tol = zero_tol;
    if (indep_tol > 0) tol.indep_rel_tol = indep_tol;
    return tol;
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "standard") return Algorithm::standard;
    if (name == "topdown") return Algorithm::topdown;
    throw InvalidInputError("algorithm must be 'standard' or 'topdown'");
}

template <class Scalar>
py::dict result_to_dict(const NormalFormResult<Scalar>& res) {
    py::dict out;
    out["columns"] = res.columns;
    out["s_vectors"] = res.s_vectors;
    py::list patterns, theta;
    for (const auto& key : res.keys) {
        patterns.append(key.pattern.to_string());
        py::dict t;
        t["zero_count"] = key.zero_count;
        t["pattern_value"] = key.pattern.value_decimal();
        t["exact_theta"] = key.exact_theta_decimal();
        theta.append(std::move(t));
    }
    out["zero_patterns"] = std::move(patterns);
    out["theta"] = std::move(theta);
    out["algorithm"] = res.algorithm == Algorithm::standard ? "standard" : "topdown";
    out["nonzero_entries"] = res.nonzero_entries();
    py::dict stats;
    stats["selections_enumerated"] = res.stats.selections_enumerated;
    stats["candidates_examined"] = res.stats.candidates_examined;
    stats["levels_visited"] = res.stats.levels_visited;
    out["stats"] = std::move(stats);
    return out;
}

template <class Scalar>
py::dict normal_form_py(const DenseMatrix<Scalar>& A, const std::string& algorithm,
                        double rank_tol, double zero_tol, double indep_tol,
                        bool allow_single_column, int threads) {
    NormalFormOptions opts;
    opts.allow_single_column = allow_single_column;
    opts.threads = threads;
    return result_to_dict(
        normal_form(A, parse_algorithm(algorithm), make_tol(rank_tol, zero_tol, indep_tol), opts));
}

} // namespace

PYBIND11_MODULE(_nfbasis, m) {
    m.doc() = "Sparse normal form for bases of finite-dimensional vector spaces";

    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<NotFullColumnRankError>(m, "NotFullColumnRankError", PyExc_ValueError);
    py::register_exception<UnsupportedDimensionError>(m, "UnsupportedDimensionError", PyExc_ValueError);
    py::register_exception<SingularConfigurationError>(m, "SingularConfigurationError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

    m.def("normal_form", &normal_form_py<double>, py::arg("A"), py::arg("algorithm") = "topdown",
          py::arg("rank_tol") = 0.0, py::arg("zero_tol") = 0.0, py::arg("indep_tol") = 0.0,
          py::arg("allow_single_column") = false, py::arg("threads") = 0,
          "Normal form of the column space of A; returns a dict with columns, s_vectors, "
          "zero_patterns, theta, algorithm, stats.");
    m.def("normal_form", &normal_form_py<std::complex<double>>, py::arg("A"),
          py::arg("algorithm") = "topdown", py::arg("rank_tol") = 0.0, py::arg("zero_tol") = 0.0,
          py::arg("indep_tol") = 0.0, py::arg("allow_single_column") = false, py::arg("threads") = 0);

    m.def("rank", [](const RealMatrix& M, double rank_tol) {
        return rank(M, make_tol(rank_tol, 0, 0));
    }, py::arg("M"), py::arg("rank_tol") = 0.0);
    m.def("rank", [](const ComplexMatrix& M, double rank_tol) {
        return rank(M, make_tol(rank_tol, 0, 0));
    }, py::arg("M"), py::arg("rank_tol") = 0.0);

    m.def("nullspace", [](const RealMatrix& M, double rank_tol) {
        return nullspace_basis(M, make_tol(rank_tol, 0, 0));
    }, py::arg("M"), py::arg("rank_tol") = 0.0,
        "Orthonormal kernel basis of M as matrix columns.");
    m.def("nullspace", [](const ComplexMatrix& M, double rank_tol) {
        return nullspace_basis(M, make_tol(rank_tol, 0, 0));
    }, py::arg("M"), py::arg("rank_tol") = 0.0);

    m.def("rref", [](const RealMatrix& M) { return rref(M); }, py::arg("M"));
    m.def("rref", [](const ComplexMatrix& M) { return rref(M); }, py::arg("M"));
    m.def("rcef", [](const RealMatrix& M) { return rcef(M); }, py::arg("M"),
          "Reduced column echelon form (requires full column rank).");
    m.def("rcef", [](const ComplexMatrix& M) { return rcef(M); }, py::arg("M"));

    m.def("common_kernel", [](const std::vector<RealMatrix>& blocks) {
        return common_kernel(blocks);
    }, py::arg("blocks"), "Basis of the intersection of the kernels of the blocks.");
    m.def("common_kernel", [](const std::vector<ComplexMatrix>& blocks) {
        return common_kernel(blocks);
    }, py::arg("blocks"));

    m.def("orthogonal_complement_nf", [](const RealVector& a) {
        return orthogonal_complement_nf(a);
    }, py::arg("a"), "Closed-form normal form of the space orthogonal to a (dim >= 3).");
    m.def("orthogonal_complement_nf", [](const ComplexVector& a) {
        return orthogonal_complement_nf(a);
    }, py::arg("a"));
    m.def("two_vector_complement_nf", [](const RealVector& a1, const RealVector& a2) {
        return two_vector_complement_nf(a1, a2);
    }, py::arg("a1"), py::arg("a2"),
        "Closed-form normal form orthogonal to two vectors, or None when not applicable.");
    m.def("two_vector_complement_nf", [](const ComplexVector& a1, const ComplexVector& a2) {
        return two_vector_complement_nf(a1, a2);
    }, py::arg("a1"), py::arg("a2"));

    m.def("snap_rational", [](double x, std::int64_t max_den, double tol) -> py::object {
        if (const auto r = snap_rational(x, max_den, tol))
            return py::make_tuple(r->num, r->den);
        return py::none();
    }, py::arg("x"), py::arg("max_den") = 64, py::arg("tol") = 1e-6,
        "Best rational (num, den) within tol of x, or None.");

    m.def("pi_groups", [](const std::vector<std::string>& dimension_names,
                          const std::vector<std::string>& quantity_names,
                          const RealMatrix& exponents, const std::string& algorithm) {
        DimensionTable table{dimension_names, quantity_names, exponents};
        PiGroupOptions opts;
        opts.algorithm = parse_algorithm(algorithm);
        const PiGroupSet set = pi_groups(table, ToleranceConfig{}, opts);
        py::dict out;
        out["exponent_columns"] = set.exponent_columns;
        out["group_labels"] = set.group_labels;
        return out;
    }, py::arg("dimension_names"), py::arg("quantity_names"), py::arg("exponents"),
        py::arg("algorithm") = "standard",
        "Dimensionless groups of a dimension-exponent table.");

    m.def("find_symmetries", [](double m1, double m2, double alpha, std::uint64_t samples,
                                std::uint64_t seed) {
        const auto sym = noether::find_symmetries({m1, m2, alpha}, samples, seed);
        py::dict out = result_to_dict(sym.normal_form);
        out["kernel_dim"] = sym.kernel_dim;
        out["samples"] = sym.samples;
        out["warnings"] = sym.warnings;
        return out;
    }, py::arg("m1") = 0.7, py::arg("m2") = 0.3, py::arg("alpha") = 0.5,
        py::arg("samples") = 100, py::arg("seed") = 1,
        "Numerically detect the linear symmetries of the two-body 1/r Lagrangian.");

    m.attr("__version__") = "0.1.0";
}
