#pragma once

#include <cstdint>
#include <string>

#include "dircut/graph.hpp"

namespace dircut {

struct GenConfig {
    int n = 6;
    int m = 10;
    int k = 1;
    ProblemKind kind = ProblemKind::MultiMultiway;
    int wmin = 1;
    int wmax = 10;
    int gmin = 2;  // mmw group size range
    int gmax = 3;
    std::uint64_t seed = 0;
};

// Pseudo-random instance in the text format: m distinct non-self-loop edges
// uniform over the n(n-1) ordered slots, integer weights uniform in
// [wmin, wmax], terminals sampled without replacement within each group/pair.
// Identical config -> byte-identical text, independent of platform (the
// sampler avoids std::uniform_int_distribution, whose mapping is
// implementation-defined). Throws std::invalid_argument on infeasible
// parameters.
std::string generate_text(const GenConfig& config);

// generate_text fed back through parse_instance.
Instance generate(const GenConfig& config);

}  // namespace dircut
