#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tricut/binary_config.hpp"
#include "tricut/dynamics.hpp"
#include "tricut/graph.hpp"

namespace tricut {

/// Shortest arc length between two positions on the period-4 circle, in [0, 2].
double circular_distance(double a, double b);

/// Center position in [-1, 1) at which a node's spin flips as the rounding
/// center sweeps: v - 1 and v + 1 coincide modulo 2, so one reduction pins
/// the single in-sweep boundary. round_at, the sweep and the exhaustive
/// oracle all use this same value, which keeps their configurations
/// consistent down to the last floating-point bit.
double flip_center(double v);

/// Map a state to spins for rounding center t: node i is +1 exactly when the
/// center lies on the half-open arc [v_i - 1, v_i + 1) around the node.
/// Membership is evaluated against flip_center(v_i): a node with v_i >= 0
/// enters the +1 set at its boundary, a node with v_i < 0 leaves it there.
/// Centers t and t + 2 give complementary configurations with equal cut, so
/// sweeping a half period covers every partition.
BinaryConfig round_at(const ContinuousState& s, double t);

struct RoundingOutcome {
    BinaryConfig config;
    std::int64_t cut = 0;
    double center = 0.0;
};

/// Best cut over `num_centers` centers drawn uniformly from [-1, 1).
RoundingOutcome random_rounding(const ContinuousState& s, const Graph& g, int num_centers,
                                std::mt19937_64& rng);

/// Per-event record of the sweep; exposed so tests can replay the
/// incremental accumulation against from-scratch recounts.
struct SweepEvent {
    double position = 0.0;
    int node = 0;
    std::int64_t cut_after = 0;  // running cut after this single flip
};

/// Exact maximizer of the cut over all rounding centers. Sweeps t across
/// [-1, 1): each node flips exactly once, at t = v_i +- 1 reduced into the
/// sweep range, so the cut is maintained by single-node imbalance updates
/// in O(N log N + M). Events at equal positions are processed in node
/// order; nodes whose flip lands exactly at t = -1 are already reflected
/// in the sweep's initial configuration.
RoundingOutcome optimal_rounding(const ContinuousState& s, const Graph& g,
                                 std::vector<SweepEvent>* trace = nullptr);

/// Exact expectation of the cut under a uniformly random center:
/// sum over edges of w * (2/P) * circular_distance(v_i, v_j).
double expected_cut(const ContinuousState& s, const Graph& g);

}  // namespace tricut
