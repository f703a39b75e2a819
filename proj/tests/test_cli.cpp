#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "sunqps/io.hpp"
#include "sunqps/verify.hpp"

using namespace sunqps;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sunqps_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run_cli(const std::string& args) {
    const std::string command = std::string(SUNQPS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("generators subcommand emits the su(3) set") {
    TempDir dir;
    const std::string out = dir.file("g31.json");
    REQUIRE(run_cli("generators --n 3 --m 1 --out " + out) == 0);
    const json doc = read_json(out);
    CHECK(doc["dim"] == 3);
    REQUIRE(doc["generators"].size() == 8);
    const ComplexMatrix lambda8 = matrix_from_json(doc["generators"][7]["matrix"], "cli");
    CHECK((lambda8 - build_generators(3, 1).lambda(8)).cwiseAbs().maxCoeff() == 0.0);

    // byte-identical re-run
    const std::string again = dir.file("g31b.json");
    REQUIRE(run_cli("generators --n 3 --m 1 --out " + again) == 0);
    CHECK(read_file(out) == read_file(again));
}

TEST_CASE("coherent subcommand matches the library") {
    TempDir dir;
    const std::string out = dir.file("cs.json");
    REQUIRE(run_cli("coherent --n 2 --m 2 --theta 0.4 --phi 1.2 --out " + out) == 0);
    const json doc = read_json(out);
    PhasePoint pt{RealVector(1), RealVector(1)};
    pt.thetas(0) = 0.4;
    pt.phis(0) = 1.2;
    const ComplexVector expected = coherent_state(2, 2, pt).amplitudes;
    REQUIRE(doc["amplitudes"].size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(doc["amplitudes"][i][0].get<double>() == expected(i).real());
        CHECK(doc["amplitudes"][i][1].get<double>() == expected(i).imag());
    }
}

TEST_CASE("kernel subcommand emits a unit-trace matrix") {
    TempDir dir;
    const std::string out = dir.file("kernel.json");
    REQUIRE(run_cli("kernel --n 3 --m 1 --s -1 --theta 0.3,0.8 --phi 0.1,2.2 --out " + out) == 0);
    const json doc = read_json(out);
    const ComplexMatrix f = matrix_from_json(doc["matrix"], "cli");
    CHECK(std::abs(f.trace() - Complex(1.0)) < 1e-12);
    CHECK(doc["s"] == -1);
}

TEST_CASE("distribution subcommand evaluates the werner closed form") {
    TempDir dir;
    const std::string state = dir.file("werner.json");
    {
        std::ofstream out(state);
        out << density_to_json(werner_state({0.5})).dump();
    }
    const std::string out = dir.file("value.json");
    REQUIRE(run_cli("distribution --n 4 --m 1 --s 0 --state " + state +
                    " --theta 0.3,0.7,1.1 --phi 0,0,0 --out " + out) == 0);
    const json doc = read_json(out);
    PhasePoint pt{RealVector(3), RealVector(3)};
    pt.thetas << 0.3, 0.7, 1.1;
    pt.phis.setZero();
    CHECK(doc["value"].get<double>() ==
          doctest::Approx(werner_closed_form({0.5}, 0, pt)).epsilon(1e-12));
}

TEST_CASE("grid samples round trip through file-based recovery") {
    TempDir dir;
    const std::string state = dir.file("rho.json");
    {
        std::ofstream out(state);
        out << density_to_json(werner_state({0.7})).dump();
    }
    const std::string samples = dir.file("samples.json");
    REQUIRE(run_cli("distribution --n 4 --m 1 --s 1 --state " + state + " --eval-grid --out " +
                    samples) == 0);
    const std::string recovered = dir.file("recovered.json");
    REQUIRE(run_cli("recover --n 4 --m 1 --s 1 --samples-from file --samples " + samples +
                    " --out " + recovered) == 0);
    const json doc = read_json(recovered);
    const ComplexMatrix rho = matrix_from_json(doc["matrix"], "cli");
    CHECK((rho - werner_state({0.7}).matrix).norm() < 1e-8);
    CHECK(doc["positivity_warning"] == false);
}

TEST_CASE("exact-evaluator recovery with explicit grid flags") {
    TempDir dir;
    const std::string state = dir.file("rho.json");
    {
        std::ofstream out(state);
        out << density_to_json(random_mixed_state(3, 135)).dump();
    }
    const std::string out = dir.file("rec.json");
    REQUIRE(run_cli("recover --n 3 --m 1 --s 0 --samples-from exact --state " + state +
                    " --grid-theta 8 --grid-phi 8 --out " + out) == 0);
    const ComplexMatrix rho = matrix_from_json(read_json(out)["matrix"], "cli");
    CHECK((rho - random_mixed_state(3, 135).matrix).norm() < 1e-8);

    // thread cap must not change the bytes
    const std::string out4 = dir.file("rec4.json");
    REQUIRE(run_cli("recover --n 3 --m 1 --s 0 --samples-from exact --state " + state +
                    " --grid-theta 8 --grid-phi 8 --threads 4 --out " + out4) == 0);
    CHECK(read_file(out) == read_file(out4));
}

TEST_CASE("verify subcommand reports passing identities") {
    TempDir dir;
    const std::string out = dir.file("verify.json");
    REQUIRE(run_cli("verify --n 2 --m 1 --out " + out) == 0);
    const json doc = read_json(out);
    CHECK(doc["pass"] == true);
    for (const auto& identity : doc["identities"]) {
        CHECK(identity["pass"] == true);
        CHECK(identity["residual"].get<double>() < 1e-10);
    }
}

TEST_CASE("werner scan and threshold subcommands") {
    TempDir dir;
    const std::string csv = dir.file("scan.csv");
    REQUIRE(run_cli("werner-scan --s 0 --gamma 0.8 --phi-case aligned --resolution 8 --out " +
                    csv) == 0);
    std::istringstream rows(read_file(csv));
    std::string header;
    std::getline(rows, header);
    CHECK(header == "theta1,theta2,theta3,value,negative");

    const std::string threshold = dir.file("threshold.json");
    REQUIRE(run_cli("werner-threshold --s -1 --tol 1e-3 --out " + threshold) == 0);
    const json doc = read_json(threshold);
    REQUIRE(doc["found"] == true);
    CHECK(std::abs(doc["gamma_critical"].get<double>() - 0.2) < 2e-3);
}

TEST_CASE("config file supplies defaults") {
    TempDir dir;
    const std::string config = dir.file("config.json");
    {
        std::ofstream out(config);
        out << R"({"n": 3, "m": 1})";
    }
    const std::string out = dir.file("gens.json");
    REQUIRE(run_cli("generators --config " + config + " --out " + out) == 0);
    CHECK(read_json(out)["n"] == 3);
}

TEST_CASE("validation failures exit with status 1") {
    CHECK(run_cli("generators --n 1 --m 1") == 1);
    CHECK(run_cli("distribution --n 4 --m 1 --s 0 --state /does/not/exist.json --theta 0,0,0 "
                  "--phi 0,0,0") == 1);
    CHECK(run_cli("coherent --n 2 --m 1 --theta 9.9 --phi 0") == 1);
    CHECK(run_cli("kernel --n 2 --m 1 --s 7 --theta 0.1 --phi 0.1") == 1);
    CHECK(run_cli("nonsense") != 0);
}
