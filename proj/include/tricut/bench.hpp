#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tricut/local_search.hpp"
#include "tricut/solver.hpp"

namespace tricut {

/// Ensemble grid for the running-time scaling study: `replicas` random
/// graphs per (n, p) cell, each solved once per post-processing mode with
/// the scaling schedule.
struct BenchGrid {
    std::vector<int> n_values;
    std::vector<double> p_values;
    int replicas = 3;
    std::vector<SearchMode> post_modes = {SearchMode::Nmr, SearchMode::NmrEmr};
    std::uint64_t seed = 0;
    Schedule schedule = Schedule::scaling();
    int workers = 1;
};

/// Desk-scale default: N in 200..1600 step 200, p in {0.05, 0.1, 0.2, 0.35},
/// 3 replicas. Sized for minutes of runtime.
BenchGrid desk_scale_grid();

/// The benchmark ensemble at full scale: N in 200..4000 step 200,
/// p in {0.05, 0.1, ..., 0.35} plus {0.12, 0.17, ..., 0.32}, 5 replicas.
BenchGrid paper_scale_grid();

struct BenchRow {
    int n = 0;
    double p = 0.0;
    std::int64_t m = 0;
    std::uint64_t graph_seed = 0;
    SearchMode post = SearchMode::Nmr;
    std::int64_t best_cut = 0;
    double t_dynamics_s = 0.0;  // summed over repetitions
    double t_rounding_s = 0.0;
    double t_post_s = 0.0;
    double t_total_s = 0.0;  // wall time of the whole solve
};

/// Runs the grid; one row per (graph, post-mode), both modes sharing the
/// same replica graph. Rows come back in deterministic grid order
/// regardless of worker count. `on_row`, when set, is called as rows
/// complete (possibly out of order under parallelism).
std::vector<BenchRow> run_bench(const BenchGrid& grid,
                                const std::function<void(const BenchRow&)>& on_row = nullptr);

/// Least-squares slope of log(y) on log(x); the scaling exponent estimate.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tricut
