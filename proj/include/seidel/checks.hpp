#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "seidel/coulson.hpp"
#include "seidel/graph.hpp"

namespace seidel {

// "SEIDEL" in hex-speak; override with --seed.
inline constexpr std::uint64_t kDefaultCheckSeed = 0x5E1DE1;

struct CheckOptions {
    std::uint64_t seed = kDefaultCheckSeed;
    int switch_subsets = 5;  // random subsets tried, in addition to {} and V
    QuadratureConfig quadrature;
    bool with_coulson = true;  // the one check that is not effectively instant
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // offending vertex/subset or the measured slack
};

// Runs the self-check battery against one graph: eigen residuals, S^2 diagonal,
// |S| consistency, energy partition, both bounds, Haemers, two-abs
// consistency, switching and complement invariance, Coulson agreement.
std::vector<CheckResult> run_checks(const Graph& g, const CheckOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

// Deterministic test-corpus helpers (mt19937_64 raw bits only, so the
// sequence is identical on every platform).
VertexSet random_subset(int n, std::mt19937_64& rng);
Graph random_graph(int n, std::mt19937_64& rng);

}  // namespace seidel
