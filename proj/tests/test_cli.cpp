#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(WALLKIT_CLI_PATH) + " " + args + " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WEXITSTATUS(rc);
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

const char* kExampleWall =
    R"({"ground": 4, "bricks": [[1,2],[3,4],[2,3],[1]], "relations": [[1,3],[2,3],[1,4]]})";

} // namespace

TEST_CASE("enum reports the five connected two-brick walls") {
    auto r = run_cli("enum --ground 2 --bricks 2 --connected");
    CHECK(r.status == 0);
    CHECK(r.output.find("\"count\":5") != std::string::npos);
}

TEST_CASE("enum csv output carries a count header") {
    auto r = run_cli("enum --ground 1 --bricks 1 --format csv");
    CHECK(r.status == 0);
    CHECK(r.output.rfind("count,1\n", 0) == 0);
}

TEST_CASE("enum refuses over-budget requests with exit 3") {
    auto r = run_cli("enum --ground 9 --bricks 9");
    CHECK(r.status == 3);
}

TEST_CASE("enum output is byte-identical across runs and cache hits") {
    auto without_cache = run_cli("enum --ground 3 --bricks 2");
    auto again = run_cli("enum --ground 3 --bricks 2");
    CHECK(without_cache.output == again.output);

    auto cache_dir = std::filesystem::temp_directory_path() / "wallkit-cache-test";
    std::filesystem::remove_all(cache_dir);
    std::string env = "WALLKIT_CACHE_DIR=" + cache_dir.string() + " ";
    auto miss = run_cli("enum --ground 3 --bricks 2", env);
    CHECK(miss.status == 0);
    CHECK(std::filesystem::exists(cache_dir));
    bool has_entry = false;
    for (auto& e : std::filesystem::directory_iterator(cache_dir)) has_entry |= e.is_regular_file();
    CHECK(has_entry);
    auto hit = run_cli("enum --ground 3 --bricks 2", env);
    CHECK(hit.output == miss.output);
    CHECK(hit.output == without_cache.output);
    std::filesystem::remove_all(cache_dir);
}

TEST_CASE("free-dims prints the weight-two row with its closed form") {
    auto r = run_cli("free-dims --gens 0,1 --max-weight 2 --max-arity 4");
    CHECK(r.status == 0);
    CHECK(r.output.find("2,2,1,1\n") != std::string::npos);
    CHECK(r.output.find("2,3,6,6\n") != std::string::npos);
    CHECK(r.output.find("2,4,0,0\n") != std::string::npos);
    // weight 1 row reproduces the generators
    CHECK(r.output.find("1,2,1,\n") != std::string::npos);
}

TEST_CASE("free-dims oracle column agrees with the wall formula") {
    auto r = run_cli("free-dims --gens 0,1 --max-weight 3 --max-arity 4 --oracle");
    CHECK(r.status == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line); // header
    while (std::getline(lines, line)) {
        auto last_comma = line.rfind(',');
        auto dim_start = line.find(',', line.find(',') + 1) + 1;
        std::string dim = line.substr(dim_start, line.find(',', dim_start) - dim_start);
        std::string oracle = line.substr(last_comma + 1);
        CHECK(dim == oracle);
    }
}

TEST_CASE("colouring reports the example complex") {
    auto path = temp_file("wallkit-example-wall.json", kExampleWall);
    auto r = run_cli("colouring " + path.string() + " --betti --check-d2");
    CHECK(r.status == 0);
    CHECK(r.output.find("\"graded_counts\":[1,3,3,1]") != std::string::npos);
    CHECK(r.output.find("\"betti\":[0,0,0,0]") != std::string::npos);
    CHECK(r.output.find("\"d_squared_zero\":true") != std::string::npos);
    CHECK(r.output.find("\"euler\":0") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("colouring of a single brick has top homology") {
    auto path = temp_file("wallkit-single-wall.json", R"({"ground": 1, "bricks": [[1]]})");
    auto r = run_cli("colouring " + path.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("\"betti\":[1]") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("a cyclic relation file fails with exit 2") {
    auto path = temp_file("wallkit-cyclic-wall.json",
                          R"({"ground": 2, "bricks": [[1,2],[1]], "relations": [[1,2],[2,1]]})");
    auto r = run_cli("colouring " + path.string());
    CHECK(r.status == 2);
    CHECK(r.output.find("CycleDetected") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("verify passes on default budgets") {
    auto r = run_cli("verify");
    CHECK(r.status == 0);
    CHECK(r.output.find("PASS colouring-d2-acyclicity") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify detects a corrupted sign convention") {
    auto r = run_cli("verify --corrupt-signs --max-ground 3 --max-bricks 4");
    CHECK(r.status == 4);
    CHECK(r.output.find("FAIL colouring-d2-acyclicity") != std::string::npos);
}

TEST_CASE("ind-check certifies monoidality for the binary generator") {
    auto r = run_cli("ind-check --gens-v 0,1 --gens-w 0,1 --max-arity 3");
    CHECK(r.status == 0);
    CHECK(r.output.find("DIFFER") == std::string::npos);
    CHECK(r.output.find("1,0,0,equal") != std::string::npos);
}

TEST_CASE("ind-check arity one multiplies the unary dims") {
    auto r = run_cli("ind-check --gens-v 1 --gens-w 1 --max-arity 2");
    CHECK(r.status == 0);
    CHECK(r.output.find("1,1,1,equal") != std::string::npos);
}

TEST_CASE("ind-check refuses arities past four") {
    auto r = run_cli("ind-check --gens-v 0,1 --gens-w 0,1 --max-arity 5");
    CHECK(r.status == 3);
}
