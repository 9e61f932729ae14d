#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LRC_CLI_BINARY) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("lrc_cli_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("table output and determinism") {
    auto a = run("table --id hermitian --format csv");
    CHECK(a.exit_code == 0);
    CHECK(a.out.rfind("q2,r1,r2,n,k,d,upper_bound,relative_defect\n", 0) == 0);
    CHECK(a.out.find("5764801,2400,2401,13841284800,5762400,13829760002,13835520001,0.0004") !=
          std::string::npos);
    auto b = run("table --id hermitian --format csv");
    CHECK(a.out == b.out);  // byte identical

    auto bad = run("table --id nope");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("build writes the artifacts") {
    auto dir = fresh_dir("build");
    auto r = run("build --family as --p 3 --h 2 --t 2 --l 0 --format json --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    auto meta = json::parse(slurp(dir / "metadata.json"));
    CHECK(meta["n"] == 729);
    CHECK(meta["k"] == 4);
    CHECK(meta["d_lower"] == 669);
    CHECK(meta["localities"] == json::array({2, 2}));

    auto points = slurp(dir / "points.csv");
    CHECK(points.rfind("index,y0,y1,y2\n", 0) == 0);
    CHECK(std::count(points.begin(), points.end(), '\n') == 730);

    auto matrix = slurp(dir / "generator_matrix.csv");
    CHECK(std::count(matrix.begin(), matrix.end(), '\n') == 5);  // header + 4 rows

    auto index = json::parse(slurp(dir / "recovery_index.json"));
    CHECK(index["sets"].size() == 729);
    CHECK(index["sets"][0].size() == 2);

    // deterministic across runs
    auto dir2 = fresh_dir("build2");
    run("build --family as --p 3 --h 2 --t 2 --l 0 --format json --out " + dir2.string());
    CHECK(slurp(dir / "generator_matrix.csv") == slurp(dir2 / "generator_matrix.csv"));
    CHECK(slurp(dir / "points.csv") == slurp(dir2 / "points.csv"));
}

TEST_CASE("build rejects l past the positive-distance range") {
    auto dir = fresh_dir("reject");
    auto r = run("build --family as --p 3 --h 2 --t 2 --l 80 --out " + dir.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("recover round trip through files") {
    auto dir = fresh_dir("recover");
    run("build --family hermitian_lrc2 --p 3 --h 1 --l 0 --out " + dir.string());
    // the first generator row is the all-ones codeword; erase two positions
    std::ofstream word(dir / "word.csv");
    word << "index,symbol\n";
    for (int i = 0; i < 24; ++i) {
        word << i << ",";
        if (i == 3 || i == 17)
            word << "?";
        else
            word << 1;
        word << "\n";
    }
    word.close();
    auto r = run("recover --family hermitian_lrc2 --p 3 --h 1 --l 0 --word " +
                 (dir / "word.csv").string() + " --format json --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    auto report = json::parse(slurp(dir / "recovery_report.json"));
    CHECK(report["complete"] == true);
    CHECK(report["failed"].empty());
    auto repaired = slurp(dir / "repaired.csv");
    CHECK(repaired.find("3,1") != std::string::npos);
    CHECK(repaired.find("17,1") != std::string::npos);
    CHECK(repaired.find('?') == std::string::npos);
}

TEST_CASE("recover demo is seeded and deterministic") {
    auto dir = fresh_dir("demo");
    auto a = run("recover --family as --p 3 --h 2 --t 2 --l 0 --demo 2 --seed 5 --format json --out " +
                 dir.string());
    CHECK(a.exit_code == 0);
    auto b = run("recover --family as --p 3 --h 2 --t 2 --l 0 --demo 2 --seed 5 --format json --out " +
                 dir.string());
    CHECK(a.out == b.out);
}

TEST_CASE("certify reports the honest interval over GF(16)") {
    auto dir = fresh_dir("certify");
    auto r = run("certify --family thc --p 2 --h 2 --l 4 --format json --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    auto cert = json::parse(slurp(dir / "certificate.json"));
    CHECK(cert["status"] == "interval");
    CHECK(cert["interval"] == json::array({62, 72}));

    auto exact = run("certify --family as --p 3 --h 2 --t 2 --l 60 --format json --out " +
                     dir.string());
    auto cj = json::parse(exact.out);
    CHECK(cj["status"] == "exact");
    CHECK(cj["d"] == 129);
}

TEST_CASE("field, curve, bounds, figure-data") {
    auto f = run("field --p 3 --degree 4 --modulus 1,1,1,1,1 --kernel-basis --format json");
    REQUIRE(f.exit_code == 0);
    auto fj = json::parse(f.out);
    CHECK(fj["order"] == 81);
    CHECK(fj["trace_kernel_basis"].size() == 2);

    auto c = run("curve --family thc --p 3 --h 1 --enumerate --format json");
    REQUIRE(c.exit_code == 0);
    auto cj = json::parse(c.out);
    CHECK(cj["split_count"] == 6);
    CHECK(cj["n"] == 72);
    CHECK(cj["point_count"]["match"] == true);

    auto b = run("bounds --n 60 --k 12 --localities 3,4 --d 38 --format json");
    auto bj = json::parse(b.out);
    CHECK(bj["bhadane_thangaraj"] == 46);
    CHECK(bj["bmq"] == 47);
    CHECK(bj["relative_defect"] == "0.1333");

    auto g = run("figure-data --p 3 --t-min 2 --t-max 4 --format csv");
    CHECK(g.exit_code == 0);
    CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 4);
    CHECK(g.out.find("2,74,729,300,0.411523,0.533333,0.444444,0.500000") != std::string::npos);
}
