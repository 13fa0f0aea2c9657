#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "trispec/matrix_market.hpp"
#include "trispec/spectra.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; `args` is appended verbatim.
Run run(const std::string& args, const std::string& prefix = "") {
    const std::string cmd = prefix + "'" + std::string(TRISPEC_CLI) + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("trispec_cli_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("lambda of named constructions") {
    auto r = run("lambda kn:5");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["lambda"].get<double>() == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(j["dims"]["vertices"] == 5);
    CHECK(j["dims"]["edges"] == 10);
    CHECK(j["dims"]["triangles"] == 10);
    CHECK(j.contains("spectrum"));
    CHECK(j.contains("tau"));
    CHECK(j.contains("nullity"));

    r = run("lambda gcb:4,2");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["lambda"].get<double>() == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("lambda from stdin") {
    const auto r = run("lambda -", "printf '1 2 3\\n1 2 4\\n1 3 4\\n' | ");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["lambda"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("lambda error exit codes") {
    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "1 2 3\n1 2\n";
    const std::string cmd = "'" + std::string(TRISPEC_CLI) + "' lambda " + bad.string() + " 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[4096];
    std::string err;
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, n);
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
    CHECK(err.find("line 2") != std::string::npos);
    fs::remove(bad);

    CHECK(run("lambda /nonexistent/family.txt").code == 4);
    CHECK(run("lambda kn:2").code == 2);
    CHECK(run("lambda gcb:3").code == 2);
    CHECK(run("lambda -", "printf '# nothing\\n' | ").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("lambda frob:3,60").code == 2);
}

TEST_CASE("construct and certify") {
    auto r = run("construct gcb:3,1");
    REQUIRE(r.code == 0);
    CHECK(r.out == "1 2 3\n1 2 4\n1 3 4\n2 3 4\n");

    r = run("certify kn:5");
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["overlap"]["pass"] == true);
    CHECK(j["overlap"]["min_edge_codegree"] == 3);
    CHECK(j["overlap"]["min_degree"] == 4);
    CHECK(j["counting"]["pass"] == true);
}

TEST_CASE("verify suites") {
    auto r = run("verify gcb --c 3..5 --b 1..3");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("summary: 18/18 passed") != std::string::npos);

    r = run("verify mingap --random 50 --seed 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    // 6 complete families, 4 small families, 9 join families, 50 random.
    CHECK(r.out.find("summary: 69/69 passed") != std::string::npos);

    CHECK(run("verify all").code == 0);
    CHECK(run("verify bogus").code == 2);
    CHECK(run("verify mingap --random 5").code == 2);
    CHECK(run("verify gcb --c 2..4").code == 2);
    CHECK(run("verify gcb --c x").code == 2);
}

TEST_CASE("phi") {
    auto r = run("phi 4");
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["phi"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(j["exhaustive"] == true);

    r = run("phi 3");
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["phi"].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(j["exhaustive"] == true);

    const auto pruned = json::parse(run("phi 5").out);
    const auto full = json::parse(run("phi 5 --no-prune").out);
    CHECK(pruned["phi"] == full["phi"]);

    r = run("phi 4 --csv");
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("t,phi,Lambda,exhaustive", 0) == 0);
    r = run("phi 4 --table");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["entries"].size() == 4);

    CHECK(run("phi 0").code == 2);
    CHECK(run("phi 3 --max-vertices 30").code == 2);
    CHECK(run("phi 4", "TRISPEC_THREADS=abc ").code == 2);
    CHECK(run("phi 4", "TRISPEC_THREADS=2 ").code == 0);
}

TEST_CASE("export writes MatrixMarket files and a manifest") {
    const auto dir = scratch("export");
    auto r = run("export kn:4 --matrices d0,d1,L2down " + dir.string());
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "d0.mtx"));
    CHECK(fs::exists(dir / "d1.mtx"));
    CHECK(fs::exists(dir / "L2down.mtx"));
    REQUIRE(fs::exists(dir / "manifest.json"));
    const auto manifest = json::parse(read_file(dir / "manifest.json"));
    CHECK(manifest["outputs"].size() == 3);
    CHECK(manifest["exit_code"] == 0);

    std::ifstream in(dir / "L2down.mtx");
    const auto l2 = trispec::read_matrix_market(in);
    const auto ev = trispec::eigenvalues_symmetric(l2);
    double lambda = 0;
    for (double x : ev)
        if (x > 1e-6) {
            lambda = x;
            break;
        }
    CHECK(std::abs(lambda - 4.0) <= 1e-10);
    fs::remove_all(dir);

    const auto one = scratch("export_one");
    REQUIRE(run("export intro:1 --matrices d1 " + one.string()).code == 0);
    std::ifstream d1in(one / "d1.mtx");
    CHECK(trispec::read_matrix_market(d1in).nonzeros() == 3);
    fs::remove_all(one);
}

TEST_CASE("export to an unwritable location fails with exit 4") {
    const auto file = scratch("not_a_dir");
    std::ofstream(file) << "x";
    CHECK(run("export kn:4 " + (file / "sub").string()).code == 4);
    fs::remove(file);
}

TEST_CASE("identical runs produce identical output and manifests") {
    const auto m1 = scratch("m1.json"), m2 = scratch("m2.json");
    const auto a = run("--manifest " + m1.string() + " verify mingap --random 10 --seed 3");
    const auto b = run("--manifest " + m2.string() + " verify mingap --random 10 --seed 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j1 = json::parse(read_file(m1));
    auto j2 = json::parse(read_file(m2));
    j1.erase("timing");
    j2.erase("timing");
    j1.erase("command_line");
    j2.erase("command_line");
    CHECK(j1 == j2);
    CHECK(j1["input_hash"].get<std::string>().rfind("fnv1a64:", 0) == 0);

    const auto c = run("--manifest " + m1.string() + " verify mingap --random 10 --seed 4");
    CHECK(json::parse(read_file(m1))["input_hash"] != j2["input_hash"]);
    CHECK(c.out != a.out);
    fs::remove(m1);
    fs::remove(m2);

    CHECK(run("lambda kn:6").out == run("lambda kn:6").out);
}
