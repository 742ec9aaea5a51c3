#pragma once

#include <cstdint>

#include "tricut/binary_config.hpp"
#include "tricut/dynamics.hpp"
#include "tricut/graph.hpp"

namespace tricut {

struct MaxCutResult {
    std::int64_t cut = 0;
    BinaryConfig config;
};

/// Exact maximum cut by enumeration of 2^(n-1) configurations (node 0 fixed
/// by complement symmetry), walked in Gray-code order with O(deg) cut
/// updates per step. Rejects n > 24 to bound the runtime.
MaxCutResult brute_force_maxcut(const Graph& g);

/// Reference for the sweep rounding: evaluate round_at from scratch at the
/// 2N candidate centers v_i - 1 and v_i + 1 (wrapped) and take the best cut.
std::int64_t exhaustive_rounding(const ContinuousState& s, const Graph& g);

}  // namespace tricut
