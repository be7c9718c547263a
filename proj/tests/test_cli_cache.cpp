#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hlab/cache.hpp"

using namespace hlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const fs::path& cache_dir) {
    const std::string cmd = "HLAB_CACHE_DIR=" + cache_dir.string() + " " +
                            std::string(HLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hlab-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

struct ScopedCacheEnv {
    explicit ScopedCacheEnv(const fs::path& p) { setenv("HLAB_CACHE_DIR", p.c_str(), 1); }
    ~ScopedCacheEnv() { unsetenv("HLAB_CACHE_DIR"); }
};

}  // namespace

TEST_CASE("coupling subcommand reproduces the fieldless HCIZ norm") {
    TempDir tmp;
    const auto r = run_cli("coupling --m 2 --N 2 --d 3", tmp.path);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"] == "64");
}

TEST_CASE("usage errors exit 2") {
    TempDir tmp;
    CHECK(run_cli("coupling --m 7 --N 2 --d 1", tmp.path).exit_code == 2);
    CHECK(run_cli("frobnicate", tmp.path).exit_code == 2);
    CHECK(run_cli("", tmp.path).exit_code == 2);
}

TEST_CASE("verify suites pass and exit 0") {
    TempDir tmp;
    const auto r = run_cli("verify --suite cancellation --dmax 4 --gmax 2", tmp.path);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["failures"].empty());
}

TEST_CASE("hurwitz JSON contains the two-sheet connected numbers") {
    TempDir tmp;
    const auto r = run_cli("hurwitz --mode 0 --connected --dmax 2 --gmax 4", tmp.path);
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    bool found = false;
    for (const auto& rec : j["entries"])
        if (rec["d"] == 2) {
            found = true;
            CHECK(rec["values"].size() == 5);
            for (const auto& gv : rec["values"]) CHECK(gv[1] == "1");
        }
    CHECK(found);
}

TEST_CASE("cache hits are byte-identical to cold computes") {
    TempDir tmp;
    const auto cold = run_cli("hurwitz --mode 2 --dmax 3 --gmax 1", tmp.path);
    CHECK(cold.exit_code == 0);
    CHECK(fs::exists(tmp.path / "hurwitz-disc-m2-d3-g1.json"));
    const auto warm = run_cli("hurwitz --mode 2 --dmax 3 --gmax 1", tmp.path);
    CHECK(warm.out == cold.out);

    const auto chars_cold = run_cli("chars --d 5", tmp.path);
    CHECK(fs::exists(tmp.path / "chars-d5.json"));
    const auto chars_warm = run_cli("chars --d 5", tmp.path);
    CHECK(chars_warm.out == chars_cold.out);
}

TEST_CASE("CSV and JSON exports carry the same values") {
    TempDir tmp;
    const auto js = run_cli("hurwitz --mode 1 --dmax 3 --gmax 1", tmp.path);
    const auto cs = run_cli("hurwitz --mode 1 --dmax 3 --gmax 1 --format csv", tmp.path);
    const json j = json::parse(js.out);

    // index JSON values by (d, alpha, g)
    std::map<std::string, std::string> from_json;
    for (const auto& rec : j["entries"]) {
        std::string alpha;
        for (const auto& part : rec["alpha"]) {
            if (!alpha.empty()) alpha += '+';
            alpha += std::to_string(part.get<int>());
        }
        for (const auto& gv : rec["values"])
            from_json[std::to_string(rec["d"].get<int>()) + "|" + alpha + "|" +
                      std::to_string(gv[0].get<int>())] = gv[1].get<std::string>();
    }

    std::istringstream lines(cs.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "d,alpha,beta,g,value");
    int rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string d, alpha, beta, g, value;
        std::getline(cells, d, ',');
        std::getline(cells, alpha, ',');
        std::getline(cells, beta, ',');
        std::getline(cells, g, ',');
        std::getline(cells, value, ',');
        CHECK(from_json.at(d + "|" + alpha + "|" + g) == value);
        ++rows;
    }
    CHECK(rows == static_cast<int>(from_json.size()));
}

TEST_CASE("character table round-trips through the cache") {
    TempDir tmp;
    ScopedCacheEnv env(tmp.path);
    const auto table = character_table(6);
    store_character_table(*table);
    const auto loaded = load_character_table(6);
    REQUIRE(loaded.has_value());
    CHECK(loaded->matrix() == table->matrix());
    CHECK(loaded->partitions() == table->partitions());
}

TEST_CASE("hurwitz table round-trips through the cache") {
    TempDir tmp;
    ScopedCacheEnv env(tmp.path);
    const auto t = disconnected_table(2, 3, 2);
    store_hurwitz_table(t);
    const auto loaded = load_hurwitz_table(2, false, 3, 2);
    REQUIRE(loaded.has_value());
    CHECK(loaded->entries() == t.entries());
}

TEST_CASE("checksum tampering invalidates a cache entry") {
    TempDir tmp;
    ScopedCacheEnv env(tmp.path);
    store_character_table(*character_table(4));
    const auto path = tmp.path / "chars-d4.json";
    REQUIRE(fs::exists(path));

    std::ifstream in(path);
    json j = json::parse(in);
    in.close();
    j["payload"]["chi"][0][0] = "999";  // payload no longer matches the checksum
    std::ofstream out(path, std::ios::trunc);
    out << j.dump();
    out.close();
    CHECK(!load_character_table(4).has_value());

    // corrupted JSON likewise falls through to recompute
    std::ofstream garbage(path, std::ios::trunc);
    garbage << "{not json";
    garbage.close();
    CHECK(!load_character_table(4).has_value());
}

TEST_CASE("atomic writes leave no temp files behind") {
    TempDir tmp;
    ScopedCacheEnv env(tmp.path);
    store_character_table(*character_table(3));
    for (const auto& entry : fs::directory_iterator(tmp.path))
        CHECK(entry.path().extension() != ".tmp");
}
