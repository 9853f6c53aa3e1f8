// Command-line driver: exact order formulas, export of the permutation
// representation on the conjugacy class of s_1, and the verification suites.
//
// Exit codes (stable for CI): 0 success, 1 verification failure, 2 capacity
// or configuration error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cliffperm/class_index.hpp"
#include "cliffperm/orders.hpp"
#include "cliffperm/verify.hpp"

namespace {

using namespace cliffperm;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitCapacity = 2;

int fail_config(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitCapacity;
}

// Class of s_1, optionally cached under $CLIFFPERM_CACHE_DIR.  A loaded
// cache is revalidated (size, seed membership, closure) by the loader.
ClassIndex build_s_class(int n, std::size_t guard) {
    const char* dir = std::getenv("CLIFFPERM_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return enumerate_class(word_eval(Word(n).s(1)), guard);
    const std::filesystem::path path =
        std::filesystem::path(dir) / ("cliffperm-class-s1-n" + std::to_string(n) + ".txt");
    if (std::filesystem::exists(path)) return load_class_cache(path.string());
    ClassIndex idx = enumerate_class(word_eval(Word(n).s(1)), guard);
    std::filesystem::create_directories(path.parent_path());
    save_class_cache(idx, path.string());
    return idx;
}

int cmd_order(int n) {
    if (n < 1 || n > 16) return fail_config("order supports -n 1..16");
    std::cout << "n " << n << "\n"
              << "|C_n| " << order_Cn(n).str() << "\n"
              << "|IN_n| " << order_INn(n).str() << "\n"
              << "|IN_n|/2 " << order_Fn(n).str() << "\n"
              << "|V| " << class_size_s(n).str() << "\n"
              << "|P_n| " << order_Pn(n).str() << "\n";
    return kExitOk;
}

std::string manifest_text(const ClassIndex& idx, PermFormat format) {
    std::string out;
    out += "degree " + std::to_string(idx.size()) + "\n";
    out += "qubits " + std::to_string(idx.num_qubits()) + "\n";
    out += std::string("format ") + (format == PermFormat::Cycles ? "cycles" : "arrays") + "\n";
    out += "seed " + detail::to_hex(idx.seed().canonical_key()) + "\n";
    std::string names;
    for (const auto& [name, w] : standard_generators(idx.num_qubits())) {
        (void)w;
        if (!names.empty()) names += " ";
        names += name;
    }
    out += "generators " + names + "\n";
    for (std::size_t i = 1; i <= idx.size(); ++i)
        out += "label " + std::to_string(i) + " " +
               detail::to_hex(idx.element(static_cast<int>(i)).canonical_key()) + "\n";
    return out;
}

int cmd_permrep(int n, PermFormat format, const std::string& out_path, std::size_t guard) {
    const ClassIndex idx = build_s_class(n, guard);
    const std::string manifest = manifest_text(idx, format);
    const std::string perms = export_generators(idx, format);
    if (out_path.empty()) {
        std::cout << manifest << "\n" << perms;
        return kExitOk;
    }
    std::ofstream pf(out_path);
    if (!pf) return fail_config("cannot write " + out_path);
    pf << perms;
    std::ofstream mf(out_path + ".manifest");
    if (!mf) return fail_config("cannot write " + out_path + ".manifest");
    mf << manifest;
    return kExitOk;
}

int cmd_verify(int n, const std::string& suite, std::uint64_t seed, std::size_t max_cosets,
               std::size_t guard) {
    if (n < 1 || n > 4) return fail_config("verify supports -n 1..4");
    if (suite == "centralizers" && n > 3) return fail_config("centralizers suite supports n 1..3");
    if (suite == "oracle" && n > kMaxOracleQubits)
        return fail_config("oracle suite supports n 1.." + std::to_string(kMaxOracleQubits));
    const Report rep = verify_suite(suite, n, seed, max_cosets, guard);
    std::cout << report_lines(rep);
    for (const auto& c : rep.checks)
        if (c.computed == "CapExceeded") return kExitCapacity;
    return rep.all_pass() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"projective Clifford group engine"};
    app.require_subcommand(1);

    int n = 2;
    std::string format_name = "cycles";
    std::string out_path;
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::size_t max_cosets = 1000000;
    std::size_t guard = 1000000;

    CLI::App* order = app.add_subcommand("order", "print the exact order formulas");
    order->add_option("-n", n, "qubit count");

    CLI::App* permrep =
        app.add_subcommand("permrep", "export generator permutations on the class of s_1");
    permrep->add_option("-n", n, "qubit count");
    permrep->add_option("--format", format_name, "cycles|arrays");
    permrep->add_option("--out", out_path, "output path (default stdout)");
    permrep->add_option("--guard", guard, "orbit size cap");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "relations|centralizers|normalform|rewrite|oracle|all");
    verify->add_option("-n", n, "qubit count");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--max-cosets", max_cosets, "coset table cap");
    verify->add_option("--guard", guard, "orbit size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.exit(e) == 0) return kExitOk;  // --help and friends
        return kExitCapacity;
    }

    try {
        if (order->parsed()) return cmd_order(n);
        if (permrep->parsed()) {
            if (n < 1 || n > 16) return fail_config("permrep supports -n 1..16");
            return cmd_permrep(n, perm_format_from_string(format_name), out_path, guard);
        }
        return cmd_verify(n, suite, seed, max_cosets, guard);
    } catch (const capacity_error& e) {
        return fail_config(e.what());
    } catch (const std::invalid_argument& e) {
        return fail_config(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCapacity;
    }
}
