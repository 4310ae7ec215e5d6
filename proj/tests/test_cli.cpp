#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ingleton/cli.hpp"
#include "ingleton/json_io.hpp"
#include "ingleton/search.hpp"

using namespace ingleton;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "ingleton_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("graph generation and spectrum") {
    const auto fano = (scratch() / "fano.json").string();
    auto r = run({"graph", "gen", "--family", "projective-plane", "--q", "2", "-o", fano});
    REQUIRE(r.code == 0);
    r = run({"graph", "validate", "-i", fano});
    CHECK(r.code == 0);
    r = run({"spectrum", "-i", fano});
    REQUIRE(r.code == 0);
    const auto j = io::Json::parse(r.out);
    CHECK(j["lambda1"].get<double>() == doctest::Approx(3.0));
    CHECK(j["lambda2"].get<double>() == doctest::Approx(1.41421356).epsilon(1e-8));
}

TEST_CASE("exit codes") {
    auto r = run({"graph", "gen", "--family", "projective-plane", "--q", "6"});
    CHECK(r.code == 2);
    CHECK(r.err.find("NonPrimeModulus") != std::string::npos);
    CHECK(run({"graph", "gen", "--family", "projective-plane", "--q", "2", "--bogus"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"spectrum", "-i", (scratch() / "missing.json").string()}).code == 2);

    const auto bad = scratch() / "bad.json";
    std::ofstream(bad) << R"({"x_size": 2, "y_size": 2, "edges": [[0,0],[0,1],[1,1]]})";
    r = run({"graph", "validate", "-i", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("NotBiregular") != std::string::npos);
}

TEST_CASE("entropy evaluation on the Fano pair") {
    const auto fano = (scratch() / "fano.json").string();
    const auto pair = (scratch() / "fano_pair.json").string();
    REQUIRE(run({"graph", "gen", "--family", "projective-plane", "--q", "2", "-o", fano}).code == 0);
    REQUIRE(run({"entropy", "pair", "-i", fano, "-o", pair}).code == 0);
    const auto r = run({"entropy", "eval", "-i", pair, "--expr", "I(0:1)"});
    REQUIRE(r.code == 0);
    CHECK(io::Json::parse(r.out)["value"].get<double>() == doctest::Approx(1.22239242).epsilon(1e-9));
    CHECK(run({"entropy", "eval", "-i", pair, "--expr", "H(0:1)"}).code == 2);

    const auto s = run({"split", "-i", pair});
    REQUIRE(s.code == 0);
    CHECK(io::Json::parse(s.out)["parts"].size() == 1);
}

TEST_CASE("certify from a kernel file") {
    const auto g = graphs::build_projective_plane(2);
    const auto gpath = scratch() / "fano.json";
    const auto kpath = scratch() / "copy_kernels.json";
    io::write_file(gpath, io::to_json(g));
    io::write_file(kpath, io::to_json(search::copy_kernels(g)));
    CHECK(io::kernels_from_json(io::read_file(kpath)) == search::copy_kernels(g));
    const auto r = run({"certify", "-i", gpath.string(), "--kernels", kpath.string()});
    REQUIRE(r.code == 0);
    const auto j = io::Json::parse(r.out);
    CHECK(j["certified"].get<double>() == doctest::Approx(-2.22239242).epsilon(1e-9));
    CHECK(j["actual_ing"].get<double>() == doctest::Approx(0.0));
    CHECK(run({"certify", "-i", gpath.string(), "--kernels", kpath.string(), "--epsilon0", "2"}).code == 2);
}

TEST_CASE("byte-stable outputs") {
    const auto a = scratch() / "a.json";
    const auto b = scratch() / "b.json";
    REQUIRE(run({"graph", "gen", "--family", "grassmann", "--q", "2", "--n", "4", "--k", "1", "--l", "2", "-o",
                 a.string()}).code == 0);
    REQUIRE(run({"graph", "gen", "--family", "grassmann", "--q", "2", "--n", "4", "--k", "1", "--l", "2", "-o",
                 b.string()}).code == 0);
    CHECK(slurp(a) == slurp(b));
    const auto s1 = run({"search", "-i", a.string(), "--restarts", "2", "--max-steps", "20", "--seed", "5"});
    const auto s2 = run({"search", "-i", a.string(), "--restarts", "2", "--max-steps", "20", "--seed", "5"});
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
    const auto m1 = run({"mixing", "-i", a.string(), "--samples", "50", "--seed", "3"});
    CHECK(m1.code == 0);
    CHECK(m1.out == run({"mixing", "-i", a.string(), "--samples", "50", "--seed", "3"}).out);
}

TEST_CASE("verify command") {
    const auto r = run({"verify", "--suite", "mixing", "--scale", "0.05"});
    CHECK(r.code == 0);
    CHECK(io::Json::parse(r.out)["passed"].get<bool>());
}

TEST_CASE("json writer") {
    const io::Json j{{"b", 1.0}, {"a", {1, 2}}, {"c", 0.1}};
    CHECK(io::dump(j) == "{\n  \"a\": [1, 2],\n  \"b\": 1.0,\n  \"c\": 0.10000000000000001\n}\n");
}
