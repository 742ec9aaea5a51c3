#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tricut/binary_config.hpp"
#include "tricut/dynamics.hpp"
#include "tricut/graph.hpp"
#include "tricut/kernel.hpp"
#include "tricut/local_search.hpp"
#include "tricut/rounding.hpp"

namespace tricut {

enum class RoundingMode { Random, Optimal };
enum class RestartMode { FreshRandom, PerturbBest };

std::string to_string(RoundingMode mode);
std::string to_string(RestartMode mode);

/// Full solver hyperparameters. The two presets mirror the benchmark
/// protocols: `quality` runs 250 steps of length 140/N from fresh random
/// starts, 100 repetitions; `scaling` runs 50 steps of length 50/N from a
/// weak perturbation of the best configuration so far, 30 repetitions.
/// Both round optimally and post-process with NMR followed by EMR.
struct Schedule {
    int steps = 250;
    double dt_coef = 140.0;  // dt = dt_coef / N
    double anisotropy = 1.0;
    int repetitions = 100;
    RoundingMode rounding = RoundingMode::Optimal;
    int num_random_centers = 32;  // used when rounding == Random
    SearchMode post = SearchMode::NmrEmr;
    RestartMode restart = RestartMode::FreshRandom;
    double noise_amp = 0.1;  // perturbation half-width for PerturbBest
    std::uint64_t seed = 0;
    Kernel kernel = Kernel::triangular();
    int workers = 1;

    static Schedule quality();
    static Schedule scaling();
};

struct RunRecord {
    int run_index = 0;
    std::int64_t pre_cut = 0;    // cut straight out of rounding (C_R or C_O)
    std::int64_t final_cut = 0;  // after post-processing (C_F)
    double center = 0.0;
    double t_dynamics_s = 0.0;
    double t_rounding_s = 0.0;
    double t_post_s = 0.0;
    double energy = 0.0;       // Lyapunov value of the evolved state
    double relaxed_cut = 0.0;  // relaxed cut of the evolved state
};

struct SolveResult {
    BinaryConfig best_config;
    std::int64_t best_cut = 0;
    std::vector<RunRecord> records;
};

/// Lattice embedding of a configuration (+1 -> 0, -1 -> 2) plus uniform
/// noise of half-width `noise_amp`; round_at(embed_binary(c, 0), 0) == c.
ContinuousState embed_binary(const BinaryConfig& c, double noise_amp, std::mt19937_64& rng);

/// One pipeline pass: evolve -> round -> post-process, with stage timings.
/// `rng` drives random rounding; `out_config` receives the post-processed
/// configuration when non-null.
RunRecord run_once(const Graph& g, const Schedule& sch, const ContinuousState& init,
                   std::mt19937_64& rng, int run_index = 0, BinaryConfig* out_config = nullptr);

/// Repetition loop with best-so-far tracking. Fresh-random restarts draw
/// every run from its own (seed, run_index) stream, so results are
/// independent of worker count; perturb-best restarts are inherently
/// sequential (each run perturbs the best configuration found so far,
/// starting from all spins up) and ignore `workers`.
SolveResult solve(const Graph& g, const Schedule& sch);

}  // namespace tricut
