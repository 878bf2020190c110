#pragma once

#include "hv/rng.hpp"
#include "hv/submodules.hpp"
#include "hv/verma.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hv {

struct SuiteConfig {
    OrderSpec order = OrderSpec::lex();
    CentralCharge charge{1, 0, 0, 0};
    long long window = 6;
    int maxlen = 5;
    long long trials = 100;
    std::uint64_t seed = 0;
};

struct SuiteFailure {
    long long trial;
    std::uint64_t seed;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    long long trials = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteFailure> failures;
    bool pass() const { return failures.empty(); }
};

/// Named randomized suites; per-trial sub-seeds are seed XOR trial index.
/// Suites: jacobi, rep, grading, confluence, mu, orders, prop37, prop38.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

std::vector<std::string> suite_names();

// randomized helpers, reused by tests
Generator random_generator(Rng& rng, long long coord_bound, bool allow_central);
PBWMonomial random_monomial(Rng& rng, const OrderSpec& order, long long window, int maxlen);

/// Normal-order a word of negative generators by randomized adjacent
/// rewriting (test oracle for confluence); schedule driven by rng.
ModuleVector normal_order_randomized(const std::vector<Generator>& word,
                                     const CentralCharge& charge, const OrderSpec& order,
                                     Rng& rng);

} // namespace hv
