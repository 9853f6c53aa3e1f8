#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cliffperm/permutation.hpp"

#ifndef CLIFFPERM_BIN
#error "CLIFFPERM_BIN must point at the command-line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out = dir / ("cliffperm_cli_out_" + std::to_string(++counter) + ".txt");
    const fs::path err = dir / ("cliffperm_cli_err_" + std::to_string(counter) + ".txt");
    const std::string cmd = env_prefix + std::string(CLIFFPERM_BIN) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    fs::remove(out);
    fs::remove(err);
    return res;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

TEST(Cli, OrderGoldenOutputs) {
    const RunResult one = run_cli("order -n 1");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, "n 1\n|C_n| 24\n|IN_n| 8\n|IN_n|/2 4\n|V| 6\n|P_n| 4\n");

    const RunResult two = run_cli("order -n 2");
    EXPECT_EQ(two.code, 0);
    EXPECT_EQ(two.out, "n 2\n|C_n| 11520\n|IN_n| 768\n|IN_n|/2 384\n|V| 30\n|P_n| 16\n");

    const RunResult three = run_cli("order -n 3");
    EXPECT_EQ(three.code, 0);
    EXPECT_EQ(three.out,
              "n 3\n|C_n| 92897280\n|IN_n| 1474560\n|IN_n|/2 737280\n|V| 126\n|P_n| 64\n");
}

TEST(Cli, OrderRejectsOutOfRange) {
    EXPECT_EQ(run_cli("order -n 17").code, 2);
    EXPECT_EQ(run_cli("order -n 0").code, 2);
}

TEST(Cli, PermrepStdoutStructure) {
    const RunResult res = run_cli("permrep -n 1");
    ASSERT_EQ(res.code, 0);
    const auto lines = split_lines(res.out);
    // Manifest (5 header lines + 6 labels), blank separator, 2 generator lines.
    ASSERT_EQ(lines.size(), 14u);
    EXPECT_EQ(lines[0], "degree 6");
    EXPECT_EQ(lines[1], "qubits 1");
    EXPECT_EQ(lines[2], "format cycles");
    EXPECT_EQ(lines[3].rfind("seed ", 0), 0u);
    EXPECT_EQ(lines[4], "generators h1 s1");
    for (int i = 0; i < 6; ++i)
        EXPECT_EQ(lines[5 + i].rfind("label " + std::to_string(i + 1) + " ", 0), 0u);
    EXPECT_EQ(lines[11], "");
    for (int i = 12; i < 14; ++i) {
        const cliffperm::Permutation p =
            cliffperm::Permutation::parse(lines[i], cliffperm::PermFormat::Cycles, 6);
        EXPECT_FALSE(p.is_identity());
    }

    // Reruns are byte-identical.
    EXPECT_EQ(run_cli("permrep -n 1").out, res.out);

    const RunResult arrays = run_cli("permrep -n 1 --format arrays");
    ASSERT_EQ(arrays.code, 0);
    EXPECT_NE(arrays.out, res.out);
    EXPECT_EQ(split_lines(arrays.out)[2], "format arrays");
}

TEST(Cli, PermrepWritesOutputFiles) {
    const fs::path dir = fs::temp_directory_path() / "cliffperm_cli_outdir";
    fs::create_directories(dir);
    const fs::path target = dir / "perms.txt";
    const RunResult res = run_cli("permrep -n 1 --out " + target.string());
    ASSERT_EQ(res.code, 0);
    EXPECT_TRUE(res.out.empty());
    ASSERT_TRUE(fs::exists(target));
    ASSERT_TRUE(fs::exists(target.string() + ".manifest"));
    const auto perm_lines = split_lines(slurp(target));
    EXPECT_EQ(perm_lines.size(), 2u);
    const std::string manifest = slurp(target.string() + ".manifest");
    EXPECT_EQ(manifest.rfind("degree 6\n", 0), 0u);

    // stdout mode emits exactly manifest + blank + permutation lines.
    const RunResult streamed = run_cli("permrep -n 1");
    EXPECT_EQ(streamed.out, manifest + "\n" + slurp(target));
    fs::remove_all(dir);
}

TEST(Cli, PermrepGuardIsCapacityExit) {
    EXPECT_EQ(run_cli("permrep -n 2 --guard 10").code, 2);
    EXPECT_EQ(run_cli("permrep -n 17").code, 2);
    EXPECT_EQ(run_cli("permrep -n 1 --format rows").code, 2);
}

TEST(Cli, VerifyRewriteSuite) {
    const RunResult res = run_cli("verify rewrite -n 1");
    EXPECT_EQ(res.code, 0);
    const auto lines = split_lines(res.out);
    EXPECT_EQ(lines.size(), 88u);
    for (const auto& line : lines) EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
}

TEST(Cli, VerifyAllSingleQubit) {
    const RunResult res = run_cli("verify all -n 1");
    EXPECT_EQ(res.code, 0);
    const auto lines = split_lines(res.out);
    EXPECT_GE(lines.size(), 100u);
    for (const auto& line : lines) EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
}

TEST(Cli, VerifyCapacityExitOnCosetCap) {
    const RunResult res = run_cli("verify relations -n 2 --max-cosets 50");
    EXPECT_EQ(res.code, 2);
    EXPECT_NE(res.out.find("CapExceeded"), std::string::npos);
}

TEST(Cli, VerifyConfigErrors) {
    EXPECT_EQ(run_cli("verify centralizers -n 4").code, 2);
    EXPECT_EQ(run_cli("verify oracle -n 4").code, 2);
    EXPECT_EQ(run_cli("verify bogus -n 1").code, 2);
    EXPECT_EQ(run_cli("verify all -n 5").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    EXPECT_EQ(run_cli("--help").code, 0);
}

TEST(Cli, CacheDirectoryKeepsOutputIdentical) {
    const fs::path cache = fs::temp_directory_path() / "cliffperm_cli_cache";
    fs::remove_all(cache);
    fs::create_directories(cache);
    const std::string env = "CLIFFPERM_CACHE_DIR=" + cache.string() + " ";
    const RunResult cold = run_cli("permrep -n 1", env);
    ASSERT_EQ(cold.code, 0);
    EXPECT_TRUE(fs::exists(cache / "cliffperm-class-s1-n1.txt"));
    const RunResult warm = run_cli("permrep -n 1", env);
    EXPECT_EQ(warm.code, 0);
    EXPECT_EQ(warm.out, cold.out);
    EXPECT_EQ(run_cli("permrep -n 1").out, cold.out);
    fs::remove_all(cache);
}

}  // namespace
