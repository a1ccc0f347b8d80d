#pragma once

#include <sgc/core.hpp>
#include <sgc/report.hpp>
#include <sgc/solver.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgc {

struct CheckConfig {
    std::uint64_t seed = 0;
    int max_n = 6;
    int trials = 100;
    // Per solver call.
    std::optional<std::uint64_t> node_budget;
    // Largest drop of psi allowed when a vertex is removed.  Only changed to
    // test that the harness catches a wrong bound.
    int vertex_removal_drop = 2;
};

struct Counterexample {
    std::string suite;
    int trial = 0;
    std::string detail;
    SignedGraph original;
    SignedGraph minimized;
};

struct SuiteResult {
    std::string name;
    long cases = 0;
    long violations = 0;
};

struct CheckResult {
    std::vector<SuiteResult> suites;
    std::vector<Counterexample> counterexamples;  // first one per suite
    int trials_run = 0;
    std::uint64_t nodes = 0;
    std::optional<std::string> exhausted;

    auto violations() const -> long;
};

// Names of the suites, in the order they run.
auto check_suites() -> std::vector<std::string>;

// Random signed graphs: order uniform in 1..max_n, each pair an edge with
// probability 1/2, signs uniform.  Every suite runs on every graph.
auto run_check(const CheckConfig & config) -> CheckResult;

auto check_report(const std::vector<std::string> & command, const CheckConfig & config, const CheckResult & result) -> Json;

}
