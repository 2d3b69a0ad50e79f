#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef LOWLEFT_CLI_PATH
#error "LOWLEFT_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct run_outcome {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

class scratch_dir {
public:
    scratch_dir() {
        std::mt19937_64 rng(std::random_device{}());
        dir_ = fs::temp_directory_path() /
               ("lowleft-cli-" + std::to_string(rng()));
        fs::create_directories(dir_);
    }
    ~scratch_dir() { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& content) const {
        fs::path p = dir_ / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
    const fs::path& path() const { return dir_; }

private:
    fs::path dir_;
};

run_outcome run_cli(const scratch_dir& dir, const std::string& args) {
    const fs::path out = dir.path() / "stdout.txt";
    const fs::path err = dir.path() / "stderr.txt";
    std::string cmd = std::string("\"") + LOWLEFT_CLI_PATH + "\" " + args + " >" + out.string() +
                      " 2>" + err.string();
    int status = std::system(cmd.c_str());
    run_outcome res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

const char* kTriangleFlt = "0\n1\n2\n0 1\n0 2\n1 2\n0 1 2\n";
const char* kTriangleBarcode = "0 1 inf\n0 2 4\n0 3 5\n1 6 7\n";

} // namespace

TEST_CASE("reduce computes the triangle barcode with the default strategy") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res = run_cli(dir, "reduce --input " + input.string() + " --format flt");
    CHECK(res.exit_code == 0);
    CHECK(res.out == kTriangleBarcode);
    CHECK(res.err.empty());
}

TEST_CASE("reduce accepts every strategy and agrees across them") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    for (std::string strat : {"col-b", "col-cob", "row-b", "row-cob"}) {
        for (std::string optim : {"none", "clear", "compress"}) {
            const bool valid = optim == "none" ||
                               (optim == "clear" && strat.rfind("col", 0) == 0) ||
                               (optim == "compress" && strat.rfind("row", 0) == 0);
            auto res = run_cli(dir, "reduce -i " + input.string() + " --strategy " + strat +
                                        " --optim " + optim);
            if (valid) {
                CHECK(res.exit_code == 0);
                CHECK(res.out == kTriangleBarcode);
            } else {
                CHECK(res.exit_code == 2);
            }
        }
    }
}

TEST_CASE("invalid strategy combinations exit with code 2 and a clear message") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res =
        run_cli(dir, "reduce --input " + input.string() + " --strategy col-b --optim compress");
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("compress requires a row orientation") != std::string::npos);

    res = run_cli(dir, "reduce --input " + input.string() + " --strategy row-b --optim clear");
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("clear requires a column orientation") != std::string::npos);
}

TEST_CASE("an empty filtration produces an empty barcode") {
    scratch_dir dir;
    auto input = dir.write("empty.flt", "");
    auto res = run_cli(dir, "reduce --input " + input.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
}

TEST_CASE("input errors exit with code 1") {
    scratch_dir dir;
    auto res = run_cli(dir, "reduce --input " + (dir.path() / "missing.flt").string());
    CHECK(res.exit_code == 1);

    auto bad = dir.write("bad.flt", "0 1\n");
    res = run_cli(dir, "reduce --input " + bad.string());
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("position 1") != std::string::npos);
}

TEST_CASE("configuration errors exit with code 2") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    CHECK(run_cli(dir, "reduce --input " + input.string() + " --strategy sideways").exit_code ==
          2);
    CHECK(run_cli(dir, "reduce --input " + input.string() + " --optim twist").exit_code == 2);
    CHECK(run_cli(dir, "reduce --input " + input.string() + " --values").exit_code == 2);
    CHECK(run_cli(dir, "reduce --input " + input.string() + " --certificate").exit_code == 2);
    auto noext = dir.write("data", kTriangleFlt);
    CHECK(run_cli(dir, "reduce --input " + noext.string()).exit_code == 2);
    CHECK(run_cli(dir, "bogus-subcommand").exit_code == 2);
}

TEST_CASE("stats record is emitted as one JSON object") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res = run_cli(dir, "reduce --input " + input.string() +
                                " --emit-stats --output " +
                                (dir.path() / "bars.txt").string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.out ==
          "{\"strategy\":\"row-b\",\"optimization\":\"compress\",\"rows_processed\":4,"
          "\"cols_processed\":0,\"additions\":2,\"symbol_flips\":4,\"skipped_by_clear\":0,"
          "\"skipped_by_compress\":2,\"pairs\":3,\"essential\":1}\n");
    CHECK(slurp(dir.path() / "bars.txt") == kTriangleBarcode);

    auto parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["strategy"] == "row-b");
    CHECK(parsed["optimization"] == "compress");
    CHECK(parsed["rows_processed"] == 4);
    CHECK(parsed["pairs"] == 3);
    CHECK(parsed["essential"] == 1);
    CHECK(parsed.size() == 10);
}

TEST_CASE("identical runs produce byte-identical outputs") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    const std::string args = "reduce --input " + input.string() +
                             " --strategy col-cob --optim clear --emit-stats";
    auto first = run_cli(dir, args);
    auto second = run_cli(dir, args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
}

TEST_CASE("lower-distance-matrix input goes through the Rips builder") {
    scratch_dir dir;
    auto input = dir.write("tri.ldm", "1, 1, 1\n");
    auto res = run_cli(dir, "reduce --input " + input.string() + " --max-dim 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out == kTriangleBarcode);

    auto values = run_cli(dir, "reduce --input " + input.string() + " --max-dim 2 --values");
    CHECK(values.exit_code == 0);
    CHECK(values.out == "0 1 inf 0 inf\n0 2 4 0 1\n0 3 5 0 1\n");
}

TEST_CASE("point-cloud input matches the combinatorially equal filtration") {
    scratch_dir dir;
    auto pts = dir.write("tri.pts", "0 0\n1 0\n0 1\n");
    auto res = run_cli(dir, "reduce --input " + pts.string() + " --max-dim 2");
    CHECK(res.exit_code == 0);
    CHECK(res.out == kTriangleBarcode);
}

TEST_CASE("certificates can be tracked from the command line") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res = run_cli(dir, "reduce --input " + input.string() +
                                " --strategy row-b --optim none --certificate");
    CHECK(res.exit_code == 0);
    CHECK(res.out == kTriangleBarcode);
}

TEST_CASE("verify cross-checks strategies, oracle and duality") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res = run_cli(dir, "verify --input " + input.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("strategies: 8 combinations agree (pairs=3, essential=1)") !=
          std::string::npos);
    CHECK(res.out.find("oracle: pair set matches the rank oracle") != std::string::npos);
    CHECK(res.out.find("duality: compress rows_processed = 4, clear cols_processed = 4") !=
          std::string::npos);
    CHECK(res.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify skips the oracle above the cap but still cross-checks") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res = run_cli(dir, "verify --input " + input.string() + " --oracle-cap 5");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("oracle scan skipped") != std::string::npos);
    CHECK(res.out.find("strategies: 8 combinations agree") != std::string::npos);
    CHECK(res.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify above the strategy cap falls back to the duality pair") {
    scratch_dir dir;
    auto input = dir.write("tri.flt", kTriangleFlt);
    auto res = run_cli(dir, "verify --input " + input.string() + " --strategy-cap 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("cross-checking the duality pair only") != std::string::npos);
    CHECK(res.out.find("strategies: 2 combinations agree") != std::string::npos);
    CHECK(res.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify on the full simplex with four vertices reports the duality count 8") {
    scratch_dir dir;
    auto input = dir.write("four.ldm", "1 1 1 1 1 1\n");
    auto res = run_cli(dir, "verify --input " + input.string() + " --max-dim 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("duality: compress rows_processed = 8, clear cols_processed = 8") !=
          std::string::npos);
}
