#pragma once

// Small pass/fail result accumulator shared by the verification drivers.

#include <string>
#include <utility>
#include <vector>

namespace cliffperm {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string computed;  // value the engine observed
    std::string expected;  // value the claim asserts
};

struct Report {
    std::vector<CheckResult> checks;

    void add(std::string name, bool pass, std::string computed = "", std::string expected = "") {
        checks.push_back({std::move(name), pass, std::move(computed), std::move(expected)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    int failures() const {
        int k = 0;
        for (const auto& c : checks)
            if (!c.pass) ++k;
        return k;
    }

    bool all_pass() const { return failures() == 0; }
};

namespace detail {
// Some recorded values (normal-form text) span several lines; flatten them
// so every check stays on one output line.
inline std::string one_line(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        if (ch == '\n')
            out += "; ";
        else
            out.push_back(ch);
    }
    return out;
}
}  // namespace detail

// "PASS/FAIL <name> <computed> <expected>" with one line per check.
inline std::string report_lines(const Report& rep) {
    std::string out;
    for (const auto& c : rep.checks) {
        out += c.pass ? "PASS " : "FAIL ";
        out += detail::one_line(c.name);
        if (!c.computed.empty()) out += " " + detail::one_line(c.computed);
        if (!c.expected.empty()) out += " " + detail::one_line(c.expected);
        out.push_back('\n');
    }
    return out;
}

}  // namespace cliffperm
