#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sg/core.hpp"
#include "sg/hoffman.hpp"

namespace sg::checks {

struct CheckCase {
    std::string name;
    bool passed = false;
    std::string detail;
    std::string replay;  // JSON of the failing instance, when applicable
};

struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckCase> cases;

    bool all_passed() const {
        for (const CheckCase& c : cases)
            if (!c.passed) return false;
        return true;
    }
};

std::vector<std::string> suite_names();

/// Runs one of the named property suites: switching, interlacing, hoffman,
/// trichotomy, catalog, convergence. Unknown names throw.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

// Reusable generators (deterministic given the engine state).
SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double edge_prob, double neg_prob);
SignedGraph random_connected_signed_graph(std::mt19937_64& rng, int n, double extra_prob,
                                          double neg_prob);
HoffmanSignedGraph random_hoffman_graph(std::mt19937_64& rng, int max_slim, int max_fat);
VertexSet random_subset(std::mt19937_64& rng, int n);

/// Fixed battery of small Hoffman graphs with mixed-sign fat attachments,
/// used by the expansion-convergence checks.
std::vector<HoffmanSignedGraph> convergence_battery();

/// Graphs certified {ktilde_zero(2), ktilde_minus(2)}-switching-free, each
/// containing a maximal positive clique with at least 4 vertices.
std::vector<SignedGraph> trichotomy_corpus(std::uint64_t seed, int count);

}  // namespace sg::checks
