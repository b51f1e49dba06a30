#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "nfbasis_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("NFBASIS_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "NFBASIS_BIN must point at the CLI binary");
    const fs::path err_path = scratch_dir() / "stderr.txt";
    const std::string cmd = std::string(bin) + " " + args + " 2>" + err_path.string();

    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
        result.out.append(buf, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;

    std::ifstream err(err_path);
    result.err.assign(std::istreambuf_iterator<char>(err), std::istreambuf_iterator<char>());
    return result;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("normal-form reports the worked theta values") {
    const auto file = write_file("worked.txt", "1 0\n0 1\n2 0\n");
    const auto res = run_cli("normal-form " + file.string());
    CHECK(res.status == 0);
    CHECK(res.out.find("theta=37") != std::string::npos);
    CHECK(res.out.find("theta=18") != std::string::npos);
}

TEST_CASE("both algorithms emit byte-identical json columns") {
    const auto file = write_file("worked.txt", "1 0\n0 1\n2 0\n");
    const auto std_run = run_cli("normal-form " + file.string() + " --json --algorithm standard");
    const auto td_run = run_cli("normal-form " + file.string() + " --json --algorithm topdown");
    REQUIRE(std_run.status == 0);
    REQUIRE(td_run.status == 0);
    const auto a = nlohmann::json::parse(std_run.out);
    const auto b = nlohmann::json::parse(td_run.out);
    CHECK(a["columns"].dump() == b["columns"].dump());
    CHECK(a["algorithm"] == "standard");
    CHECK(b["algorithm"] == "topdown");
}

TEST_CASE("json emits the stats and pattern keys") {
    const auto file = write_file("worked.txt", "1 0\n0 1\n2 0\n");
    const auto res = run_cli("normal-form " + file.string() + " --json");
    REQUIRE(res.status == 0);
    const auto report = nlohmann::json::parse(res.out);
    CHECK(report["zero_patterns"][0] == "101");
    CHECK(report["theta"][0]["exact_theta"] == "37");
    CHECK(report["stats"].contains("selections_enumerated"));
    CHECK(report["stats"].contains("wall_time"));
}

TEST_CASE("nullspace --normal-form snaps to integer entries") {
    const auto file = write_file("ones.txt", "1 1 1 1 1\n");
    const auto res = run_cli("nullspace " + file.string() + " --normal-form --snap-rational");
    REQUIRE(res.status == 0);
    CHECK(res.out.find("-1") != std::string::npos);
    CHECK(res.out.find("0.447") == std::string::npos); // orthonormal junk is gone
}

TEST_CASE("complex matrices are inferred from the file") {
    const auto file = write_file("cx.txt", "1+2i, 0\n0, 1\n");
    const auto res = run_cli("normal-form " + file.string() + " --json");
    REQUIRE(res.status == 0);
    const auto report = nlohmann::json::parse(res.out);
    CHECK(report["columns"][0][0].is_string());
}

TEST_CASE("rcef subcommand") {
    const auto file = write_file("sq.txt", "2 1\n1 1\n");
    const auto res = run_cli("rcef " + file.string() + " --json");
    REQUIRE(res.status == 0);
    const auto report = nlohmann::json::parse(res.out);
    CHECK(report["columns"][0][0] == 1.0);
    CHECK(report["columns"][1][0] == 0.0);
}

TEST_CASE("pi-groups renders the oscillator labels") {
    const auto file = write_file("osc.csv", ",t,x0,xdot0,k,m\n"
                                            "M,0,0,0,1,1\n"
                                            "L,0,1,1,0,0\n"
                                            "T,1,0,-1,-2,0\n");
    const auto res = run_cli("pi-groups " + file.string());
    REQUIRE(res.status == 0);
    CHECK(res.out.find("t*xdot0/x0") != std::string::npos);
    CHECK(res.out.find("sqrt(k/m)*t") != std::string::npos);
}

TEST_CASE("square matrices normal-form to the identity via the cli") {
    const auto file = write_file("inv.txt", "2 1 0\n1 3 1\n0 1 4\n");
    const auto res = run_cli("normal-form " + file.string() + " --algorithm topdown --json");
    REQUIRE(res.status == 0);
    const auto report = nlohmann::json::parse(res.out);
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r) {
            const double expected = r == c ? 1.0 : 0.0;
            CHECK(std::abs(report["columns"][c][r].get<double>() - expected) < 1e-12);
        }
}

TEST_CASE("errors exit nonzero and use the diagnostic stream") {
    const auto missing = run_cli("normal-form does_not_exist.txt");
    CHECK(missing.status == 1);
    CHECK(missing.out.empty());
    CHECK(missing.err.find("error") != std::string::npos);

    const auto ragged_file = write_file("ragged.txt", "1 2\n3\n");
    const auto ragged = run_cli("normal-form " + ragged_file.string());
    CHECK(ragged.status == 1);
    CHECK(ragged.err.find("line 2") != std::string::npos);

    const auto deficient = write_file("deficient.txt", "1 2\n2 4\n3 6\n");
    const auto rankfail = run_cli("normal-form " + deficient.string());
    CHECK(rankfail.status == 1);
    CHECK(rankfail.err.find("full column rank") != std::string::npos);

    const auto single = write_file("single.txt", "1\n2\n");
    CHECK(run_cli("normal-form " + single.string()).status == 1);
    CHECK(run_cli("normal-form " + single.string() + " --allow-n1").status == 0);

    const auto unknown = run_cli("normal-form " + single.string() + " --no-such-flag");
    CHECK(unknown.status == 1);
}

TEST_CASE("noether demo reports the nine generators and writes the orbit csv") {
    const fs::path csv = scratch_dir() / "orbit.csv";
    const auto res = run_cli("noether-demo --samples 100 --seed 3 --json --orbit-csv " +
                             csv.string());
    REQUIRE(res.status == 0);
    const auto report = nlohmann::json::parse(res.out);
    CHECK(report["kernel_dim"] == 9);
    CHECK(report["nonzero_entries"] == 36);
    CHECK(std::abs(report["beta"].get<double>() - 0.75) < 1e-6);

    std::ifstream orbit(csv);
    std::string header;
    std::getline(orbit, header);
    CHECK(header == "lambda,x1_x,x1_y,x1_z,x2_x,x2_y,x2_z");
    int lines = 0;
    for (std::string l; std::getline(orbit, l);)
        ++lines;
    CHECK(lines == 361);
}

TEST_SUITE_END();
