#include <doctest.h>

#include <random>

#include "nfbasis/matrix_io.hpp"
#include "nfbasis/report.hpp"
#include "support/oracles.hpp"

using namespace nfbasis;
namespace nt = nfbasis::testing;

TEST_SUITE_BEGIN("io");

TEST_CASE("whitespace matrix parses as real") {
    const auto M = parse_matrix("1 0\n0 1\n2 0\n");
    REQUIRE_FALSE(M.is_complex());
    REQUIRE(M.rows() == 3);
    REQUIRE(M.cols() == 2);
    CHECK(M.real()(2, 0) == 2.0);
}

TEST_CASE("comma matrix with complex entries") {
    const auto M = parse_matrix("1+2i, 0\n0, 1\n");
    REQUIRE(M.is_complex());
    CHECK(M.complex()(0, 0) == std::complex<double>(1, 2));
    CHECK(M.complex()(1, 1) == std::complex<double>(1, 0));
}

TEST_CASE("ragged input names the offending line") {
    try {
        parse_matrix("1 2\n3\n");
        FAIL("expected a parse error");
    } catch (const InvalidInputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("malformed token names the token") {
    try {
        parse_matrix("1 2\n3 4x\n");
        FAIL("expected a parse error");
    } catch (const InvalidInputError& e) {
        CHECK(std::string(e.what()).find("4x") != std::string::npos);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    const auto M = parse_matrix("# heading, with a comma\n1 2\n\n3 4 # trailing\n");
    REQUIRE_FALSE(M.is_complex());
    CHECK(M.rows() == 2);
    CHECK(M.real()(1, 1) == 4.0);
}

TEST_CASE("scalar grammar") {
    CHECK(parse_scalar("1.5e-3") == std::complex<double>(1.5e-3, 0));
    CHECK(parse_scalar("-2/4") == std::complex<double>(-0.5, 0));
    CHECK(parse_scalar("i") == std::complex<double>(0, 1));
    CHECK(parse_scalar("-i") == std::complex<double>(0, -1));
    CHECK(parse_scalar("3i") == std::complex<double>(0, 3));
    CHECK(parse_scalar("1-2i") == std::complex<double>(1, -2));
    CHECK(parse_scalar("-1.5e-3-2e1i") == std::complex<double>(-1.5e-3, -20));
    CHECK_THROWS_AS(parse_scalar("one"), InvalidInputError);
    CHECK_THROWS_AS(parse_scalar("1/0"), InvalidInputError);
}

TEST_CASE("format_scalar round-trips doubles bit-exactly") {
    std::mt19937_64 rng(501);
    std::uniform_real_distribution<double> uni(-1e3, 1e3);
    for (int t = 0; t < 500; ++t) {
        const double x = uni(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
        CHECK(parse_scalar(format_scalar(x)).real() == x);
    }
    CHECK(parse_scalar(format_scalar(std::complex<double>(0.1, -0.3))) ==
          std::complex<double>(0.1, -0.3));
}

TEST_CASE("matrix json round-trips bit-exactly") {
    std::mt19937_64 rng(503);
    const RealMatrix A = nt::random_matrix<double>(rng, 4, 3);
    const auto parsed = matrix_from_json(matrix_to_json(A));
    REQUIRE_FALSE(parsed.is_complex());
    CHECK((parsed.real() - A).cwiseAbs().maxCoeff() == 0.0);

    const ComplexMatrix C = nt::random_matrix<std::complex<double>>(rng, 3, 2);
    const auto parsed_c = matrix_from_json(matrix_to_json(C));
    REQUIRE(parsed_c.is_complex());
    CHECK((parsed_c.complex() - C).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("snapped text is display-only") {
    RealMatrix M(1, 2);
    M << 0.5, 0.12345678901;
    TextFormat snap;
    snap.snap_max_den = 64;
    const std::string text = matrix_to_text(M, snap);
    CHECK(text.find("1/2") != std::string::npos);
    // the awkward value stays decimal
    CHECK(text.find("0.12345678901") != std::string::npos);
    // json unaffected by any text formatting
    const auto parsed = matrix_from_json(matrix_to_json(M));
    CHECK(parsed.real()(0, 1) == 0.12345678901);
}

TEST_CASE("dimension table csv") {
    const std::string csv = ",t,x0,xdot0,k,m\n"
                            "M,0,0,0,1,1\n"
                            "L,0,1,1,0,0\n"
                            "T,1,0,-1,-2,0\n";
    const auto table = parse_dimension_table_csv(csv);
    CHECK(table.dimension_names == std::vector<std::string>{"M", "L", "T"});
    CHECK(table.quantity_names.size() == 5);
    CHECK(table.exponents(2, 3) == -2.0);

    CHECK_THROWS_AS(parse_dimension_table_csv(",a\nM,1,2\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_dimension_table_csv(""), InvalidInputError);
}

TEST_CASE("result report carries the required keys") {
    RealMatrix A(3, 2);
    A << 1, 0, 0, 1, 2, 0;
    const auto res = normal_form_standard(A);
    const auto report = result_report(res, 0.25);
    CHECK(report.contains("columns"));
    CHECK(report.contains("zero_patterns"));
    CHECK(report.contains("theta"));
    CHECK(report.contains("algorithm"));
    CHECK(report.contains("stats"));
    CHECK(report["theta"][0]["exact_theta"] == "37");
    CHECK(report["theta"][1]["exact_theta"] == "18");
    CHECK(report["stats"]["wall_time"] == 0.25);
    const auto parsed = matrix_from_json(report["columns"]);
    CHECK((parsed.real() - res.columns).cwiseAbs().maxCoeff() == 0.0);
}

TEST_SUITE_END();
