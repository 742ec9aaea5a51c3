#include "tricut/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tricut/rng.hpp"

namespace tricut {

namespace {

using Clock = std::chrono::steady_clock;

struct Cell {
    int n;
    double p;
    std::uint64_t graph_seed;
    SearchMode post;
};

}  // namespace

BenchGrid desk_scale_grid() {
    BenchGrid g;
    for (int n = 200; n <= 1600; n += 200) g.n_values.push_back(n);
    g.p_values = {0.05, 0.1, 0.2, 0.35};
    g.replicas = 3;
    return g;
}

BenchGrid paper_scale_grid() {
    BenchGrid g;
    for (int n = 200; n <= 4000; n += 200) g.n_values.push_back(n);
    for (int k = 1; k <= 7; ++k) g.p_values.push_back(0.05 * k);
    for (int k = 0; k <= 4; ++k) g.p_values.push_back(0.12 + 0.05 * k);
    g.replicas = 5;
    return g;
}

std::vector<BenchRow> run_bench(const BenchGrid& grid,
                                const std::function<void(const BenchRow&)>& on_row) {
    if (grid.replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    if (grid.n_values.empty() || grid.p_values.empty() || grid.post_modes.empty())
        throw std::invalid_argument("bench grid is empty");

    std::vector<Cell> cells;
    std::uint64_t graph_index = 0;
    for (int n : grid.n_values) {
        for (double p : grid.p_values) {
            for (int rep = 0; rep < grid.replicas; ++rep) {
                const std::uint64_t graph_seed = splitmix64(grid.seed ^ splitmix64(graph_index));
                ++graph_index;
                for (SearchMode mode : grid.post_modes) cells.push_back({n, p, graph_seed, mode});
            }
        }
    }

    std::vector<BenchRow> rows(cells.size());
    std::mutex emit_mutex;

    auto run_cell = [&](std::size_t idx) {
        const Cell& cell = cells[idx];
        Graph g = Graph::erdos_renyi({cell.n, cell.p, cell.graph_seed});

        Schedule sch = grid.schedule;
        sch.post = cell.post;
        sch.seed = cell.graph_seed;
        sch.workers = 1;  // parallelism is across cells

        const auto t0 = Clock::now();
        SolveResult result = solve(g, sch);
        const double wall = std::chrono::duration<double>(Clock::now() - t0).count();

        BenchRow row;
        row.n = cell.n;
        row.p = cell.p;
        row.m = g.num_edges();
        row.graph_seed = cell.graph_seed;
        row.post = cell.post;
        row.best_cut = result.best_cut;
        for (const RunRecord& rec : result.records) {
            row.t_dynamics_s += rec.t_dynamics_s;
            row.t_rounding_s += rec.t_rounding_s;
            row.t_post_s += rec.t_post_s;
        }
        row.t_total_s = wall;
        rows[idx] = row;
        if (on_row) {
            std::lock_guard<std::mutex> lock(emit_mutex);
            on_row(row);
        }
    };

    const int workers = std::max(1, grid.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t thread_count =
            std::min<std::size_t>(static_cast<std::size_t>(workers), cells.size());
        pool.reserve(thread_count);
        for (std::size_t w = 0; w < thread_count; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                    run_cell(i);
            });
        }
        for (std::thread& th : pool) th.join();
    }
    return rows;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("slope fit needs at least two points");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0) throw std::invalid_argument("log fit needs positive data");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace tricut
