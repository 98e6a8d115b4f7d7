#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("AFINV_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    fs::path tmp = fs::temp_directory_path() / ("afinv_cli_out_" + std::to_string(counter++));
    std::string cmd = env + (env.empty() ? "" : " ") + cli_path() + " " + args + " > " +
                      tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    fs::remove(tmp);
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("analyze: json output and exit codes") {
    RunResult r = run("analyze \"[[0,1,0],[3,0,1],[-1,0,0]]\" --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["galois"] == "C3");
    CHECK(j["k"] == 3);
    CHECK(j["discriminant"] == 81);
    CHECK(j["flags"]["tight"] == true);

    RunResult plain = run("analyze \"[[1,1],[1,0]]\"");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out.find("tight:         yes") != std::string::npos);
    CHECK(plain.out.find("C2") != std::string::npos);

    CHECK(run("analyze \"[[1,2],[3]]\"").exit_code == 2); // ragged rows
    CHECK(run("analyze \"not json\"").exit_code == 2);
    CHECK(run("analyze \"/nonexistent/file.json\"").exit_code == 2);
}

TEST_CASE("analyze: matrix from file") {
    fs::path tmp = fs::temp_directory_path() / "afinv_matrix.json";
    std::ofstream(tmp) << "[[1,1],[1,0]]";
    RunResult r = run("analyze " + tmp.string() + " --json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["galois"] == "C2");
    fs::remove(tmp);
}

TEST_CASE("obstruct: exit codes follow verdicts") {
    CHECK(run("obstruct \"[[0,1,0],[3,0,1],[-1,0,0]]\" --target-dim 2").exit_code == 0);
    // S3 cubic: k = 6 is divisible by 2
    CHECK(run("obstruct \"[[0,0,1],[1,0,1],[0,1,0]]\" --target-dim 2").exit_code == 1);
    // no D>0 assumption for dimension-3 targets
    CHECK(run("obstruct \"[[0,1,0],[3,0,1],[-1,0,0]]\" --target-dim 3").exit_code == 3);
    CHECK(run("obstruct \"[[1,1],[1,0]]\" --target-dim 5").exit_code == 2);

    RunResult r = run("obstruct \"[[0,1,0],[3,0,1],[-1,0,0]]\" --target-dim 2 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "robust");
    CHECK(j["target"]["candidate_orders"] == json::parse("[2]"));
    CHECK(j["trace"].size() >= 2);
}

TEST_CASE("expand: golden ratio case") {
    RunResult r = run("expand \"[[1,1],[1,0]]\" --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["incidence"] == json::parse("[[0,1],[1,1]]"));
    CHECK(j["period"] == 1);
    CHECK(j["period_digits"] == json::parse("[[1]]"));
    CHECK(j["squared"] == true);
    CHECK(j["lemma6"]["matched"] == true);
    CHECK(j["lemma6"]["exponent"] == 1);

    RunResult text = run("expand \"[[0,1,0],[3,0,1],[-1,0,0]]\" --max-steps 256");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("eigen-collinearity: PASS") != std::string::npos);
}

TEST_CASE("expand: non-tight input exits 3, budget exhaustion exits 4") {
    CHECK(run("expand \"[[0,0,0,-1],[1,0,0,-4],[0,1,0,-5],[0,0,1,-2]]\"").exit_code == 3);
    CHECK(run("expand \"[[2,0],[0,3]]\"").exit_code == 3);
    RunResult r = run("expand \"[[0,1,0],[3,0,1],[-1,0,0]]\" --max-steps 1 --json");
    CHECK(r.exit_code == 4);
    json j = json::parse(r.out);
    CHECK(j["period"].is_null());
}

TEST_CASE("expand: budget default comes from the environment") {
    RunResult r = run("expand \"[[0,1,0],[3,0,1],[-1,0,0]]\"", "BRATTELI_MAX_STEPS=1");
    CHECK(r.exit_code == 4);
    RunResult ok = run("expand \"[[0,1,0],[3,0,1],[-1,0,0]]\"", "BRATTELI_MAX_STEPS=64");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("expand: dot export") {
    fs::path dot = fs::temp_directory_path() / "afinv_bratteli.dot";
    fs::remove(dot);
    RunResult r = run("expand \"[[1,1],[1,0]]\" --export-dot " + dot.string() + " --dot-depth 3");
    CHECK(r.exit_code == 0);
    std::string text = slurp(dot);
    CHECK(text.find("digraph bratteli") != std::string::npos);
    CHECK(text.find("v1_1 -> v2_1") != std::string::npos);
    fs::remove(dot);
}

TEST_CASE("scan: cubic family writes reports and an index") {
    fs::path dir = fs::temp_directory_path() / "afinv_scan_cubic";
    fs::remove_all(dir);
    RunResult r = run("scan --family cubic --b -3..3 --c -3..3 --out " + dir.string());
    CHECK(r.exit_code == 0);
    json index = json::parse(slurp(dir / "index.json"));
    CHECK(index["count"] == 4);
    REQUIRE(index["entries"].size() == 4);
    std::set<std::pair<int, int>> hits;
    for (const auto& e : index["entries"])
        hits.emplace(e["b"].get<int>(), e["c"].get<int>());
    CHECK(hits == std::set<std::pair<int, int>>{{0, -3}, {-1, -2}, {-2, -1}, {-3, 0}});
    for (const auto& e : index["entries"]) {
        CHECK(e["galois"] == "C3");
        CHECK(e["verdict"] == "robust");
        json rep = json::parse(slurp(dir / e["file"].get<std::string>()));
        CHECK(rep["verdict"] == "robust");
        CHECK(rep["k"] == 3);
    }

    // worker count must not change the index bytes
    fs::path dir3 = fs::temp_directory_path() / "afinv_scan_cubic_j3";
    fs::remove_all(dir3);
    RunResult r3 = run("scan --family cubic --b -3..3 --c -3..3 --jobs 3 --out " + dir3.string());
    CHECK(r3.exit_code == 0);
    CHECK(slurp(dir / "index.json") == slurp(dir3 / "index.json"));
    fs::remove_all(dir);
    fs::remove_all(dir3);
}

TEST_CASE("scan: empty range yields an empty index") {
    fs::path dir = fs::temp_directory_path() / "afinv_scan_empty";
    fs::remove_all(dir);
    RunResult r = run("scan --family cubic --b 2..1 --c 0..0 --out " + dir.string());
    CHECK(r.exit_code == 0);
    json index = json::parse(slurp(dir / "index.json"));
    CHECK(index["count"] == 0);
    CHECK(index["entries"].empty());
    fs::remove_all(dir);
}

TEST_CASE("scan: quartic family reports carry the symbolic checks") {
    fs::path dir = fs::temp_directory_path() / "afinv_scan_quartic";
    fs::remove_all(dir);
    RunResult r = run("scan --family quartic --a 0..2 --c 0..2 --out " + dir.string());
    CHECK(r.exit_code == 0);
    json index = json::parse(slurp(dir / "index.json"));
    CHECK(index["count"] == 9);
    for (const auto& e : index["entries"]) {
        CHECK(e["resolvent_check"] == true);
        CHECK(e["h_check"] == true);
        CHECK(e["tight"] == false);
        json rep = json::parse(slurp(dir / e["file"].get<std::string>()));
        CHECK(rep["family"]["resolvent_matches_family_form"] == true);
        CHECK(rep["family"]["h_matches_family_form"] == true);
        CHECK(rep["flags"]["tight"] == false);
    }
    fs::remove_all(dir);
}

TEST_CASE("scan: unwritable output directory exits 2") {
    CHECK(run("scan --family cubic --b 0..0 --c 0..0 --out /proc/afinv_cannot_write").exit_code ==
          2);
    CHECK(run("scan --family nosuch --b 0..0 --c 0..0").exit_code == 2);
}
