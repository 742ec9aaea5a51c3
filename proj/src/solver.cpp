#include "tricut/solver.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "tricut/rng.hpp"

namespace tricut {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Schedule Schedule::quality() {
    Schedule s;
    s.steps = 250;
    s.dt_coef = 140.0;
    s.repetitions = 100;
    s.rounding = RoundingMode::Optimal;
    s.post = SearchMode::NmrEmr;
    s.restart = RestartMode::FreshRandom;
    return s;
}

Schedule Schedule::scaling() {
    Schedule s;
    s.steps = 50;
    s.dt_coef = 50.0;
    s.repetitions = 30;
    s.rounding = RoundingMode::Optimal;
    s.post = SearchMode::NmrEmr;
    s.restart = RestartMode::PerturbBest;
    return s;
}

std::string to_string(RoundingMode mode) {
    return mode == RoundingMode::Random ? "random" : "optimal";
}

std::string to_string(RestartMode mode) {
    return mode == RestartMode::FreshRandom ? "fresh_random" : "perturb_best";
}

ContinuousState embed_binary(const BinaryConfig& c, double noise_amp, std::mt19937_64& rng) {
    if (noise_amp < 0.0) throw std::invalid_argument("noise_amp must be >= 0");
    std::vector<double> v(static_cast<std::size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) {
        const double base = c[i] == 1 ? 0.0 : 2.0;
        const double noise = noise_amp > 0.0 ? uniform_double(rng, -noise_amp, noise_amp) : 0.0;
        v[static_cast<std::size_t>(i)] = base + noise;
    }
    return ContinuousState(std::move(v));
}

RunRecord run_once(const Graph& g, const Schedule& sch, const ContinuousState& init,
                   std::mt19937_64& rng, int run_index, BinaryConfig* out_config) {
    if (sch.steps < 0) throw std::invalid_argument("steps must be >= 0");

    DynParams params;
    params.anisotropy = sch.anisotropy;
    params.dt = sch.dt_coef / static_cast<double>(g.num_nodes());
    params.steps = sch.steps;
    params.kernel = sch.kernel;

    RunRecord rec;
    rec.run_index = run_index;

    auto t0 = Clock::now();
    ContinuousState final_state = evolve(init, g, params);
    rec.t_dynamics_s = seconds_since(t0);
    rec.energy = lyapunov_energy(final_state, g, sch.anisotropy, sch.kernel);
    rec.relaxed_cut = relaxed_cut(final_state, g, sch.kernel);

    t0 = Clock::now();
    RoundingOutcome rounded = sch.rounding == RoundingMode::Optimal
                                  ? optimal_rounding(final_state, g)
                                  : random_rounding(final_state, g, sch.num_random_centers, rng);
    rec.t_rounding_s = seconds_since(t0);
    rec.pre_cut = rounded.cut;
    rec.center = rounded.center;

    t0 = Clock::now();
    PostProcessResult post = post_process(g, rounded.config, sch.post);
    rec.t_post_s = seconds_since(t0);
    rec.final_cut = post.cut;

    if (out_config) *out_config = std::move(post.config);
    return rec;
}

SolveResult solve(const Graph& g, const Schedule& sch) {
    if (sch.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");

    const int reps = sch.repetitions;
    std::vector<RunRecord> records(static_cast<std::size_t>(reps));
    std::vector<BinaryConfig> configs(static_cast<std::size_t>(reps));

    if (sch.restart == RestartMode::FreshRandom) {
        auto run_one = [&](int r) {
            std::mt19937_64 rng = derive_stream(sch.seed, static_cast<std::uint64_t>(r));
            ContinuousState init = ContinuousState::uniform_random(g.num_nodes(), rng);
            records[r] = run_once(g, sch, init, rng, r, &configs[r]);
        };

        const int workers = std::max(1, sch.workers);
        if (workers == 1 || reps == 1) {
            for (int r = 0; r < reps; ++r) run_one(r);
        } else {
            std::atomic<int> next{0};
            std::vector<std::thread> pool;
            const int thread_count = std::min(workers, reps);
            pool.reserve(static_cast<std::size_t>(thread_count));
            for (int w = 0; w < thread_count; ++w) {
                pool.emplace_back([&] {
                    for (int r = next.fetch_add(1); r < reps; r = next.fetch_add(1)) run_one(r);
                });
            }
            for (std::thread& th : pool) th.join();
        }
    } else {
        // Each run perturbs the best configuration found so far; the first
        // run perturbs all-spins-up. Sequential by construction.
        BinaryConfig best = BinaryConfig::all_up(g.num_nodes());
        std::int64_t best_cut = -1;
        for (int r = 0; r < reps; ++r) {
            std::mt19937_64 rng = derive_stream(sch.seed, static_cast<std::uint64_t>(r));
            ContinuousState init = embed_binary(best, sch.noise_amp, rng);
            records[r] = run_once(g, sch, init, rng, r, &configs[r]);
            if (records[r].final_cut > best_cut) {
                best_cut = records[r].final_cut;
                best = configs[r];
            }
        }
    }

    SolveResult result;
    result.records = std::move(records);
    std::size_t best_index = 0;
    for (std::size_t r = 1; r < result.records.size(); ++r)
        if (result.records[r].final_cut > result.records[best_index].final_cut) best_index = r;
    result.best_cut = result.records[best_index].final_cut;
    result.best_config = std::move(configs[best_index]);
    return result;
}

}  // namespace tricut
