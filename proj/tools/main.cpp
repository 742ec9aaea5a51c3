#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricut/bench.hpp"
#include "tricut/graph.hpp"
#include "tricut/oracle.hpp"
#include "tricut/rng.hpp"
#include "tricut/solver.hpp"

namespace {

using tricut::BinaryConfig;
using tricut::ContinuousState;
using tricut::Graph;
using tricut::Kernel;
using tricut::Schedule;
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceOpts {
    std::string gset_path;
    std::string er_spec;
    std::uint64_t er_seed = 0;
    bool er_seed_given = false;
};

struct ScheduleOpts {
    std::string preset;
    int steps = 0;
    double dt_coef = 0.0;
    double ks = 0.0;
    int reps = 0;
    std::string rounding;
    std::string post;
    double noise_amp = 0.0;
    std::uint64_t seed = 0;
    int workers = 0;
    std::string kernel;
    std::string restart;
};

void add_instance_options(CLI::App* cmd, InstanceOpts& inst) {
    auto* gset = cmd->add_option("--gset", inst.gset_path, "GSet-format instance file");
    auto* er = cmd->add_option("--er", inst.er_spec,
                               "Erdos-Renyi instance as N:P, e.g. --er 800:0.06");
    cmd->add_option("--er-seed", inst.er_seed,
                    "RNG seed for --er generation (default: --seed value)")
        ->needs(er);
    gset->excludes(er);
    er->excludes(gset);
}

void add_schedule_options(CLI::App* cmd, ScheduleOpts& opts) {
    cmd->add_option("--preset", opts.preset, "Schedule preset: quality or scaling")
        ->check(CLI::IsMember({"quality", "scaling"}));
    cmd->add_option("--steps", opts.steps, "Euler steps per repetition");
    cmd->add_option("--dt-coef", opts.dt_coef, "Step length coefficient; dt = coef/N");
    cmd->add_option("--ks", opts.ks, "Anisotropy strength K_s");
    cmd->add_option("--reps", opts.reps, "Number of repetitions");
    cmd->add_option("--rounding", opts.rounding,
                    "Rounding: 'optimal' or 'random:NR' (NR centers per run)");
    cmd->add_option("--post", opts.post, "Post-processing: none, nmr or nmr+emr")
        ->check(CLI::IsMember({"none", "nmr", "nmr+emr"}));
    cmd->add_option("--noise-amp", opts.noise_amp, "Perturbation amplitude for restarts");
    cmd->add_option("--seed", opts.seed, "Global RNG seed");
    cmd->add_option("--workers", opts.workers, "Parallel workers");
    cmd->add_option("--kernel", opts.kernel, "Coupling kernel: tri or xy")
        ->check(CLI::IsMember({"tri", "xy"}));
    cmd->add_option("--restart", opts.restart, "Restart rule: fresh or perturb")
        ->check(CLI::IsMember({"fresh", "perturb"}));
}

Schedule build_schedule(const CLI::App* cmd, const ScheduleOpts& opts) {
    Schedule sch;
    if (opts.preset == "quality") sch = Schedule::quality();
    else if (opts.preset == "scaling") sch = Schedule::scaling();

    if (cmd->count("--steps")) sch.steps = opts.steps;
    if (cmd->count("--dt-coef")) sch.dt_coef = opts.dt_coef;
    if (cmd->count("--ks")) sch.anisotropy = opts.ks;
    if (cmd->count("--reps")) sch.repetitions = opts.reps;
    if (cmd->count("--rounding")) {
        if (opts.rounding == "optimal") {
            sch.rounding = tricut::RoundingMode::Optimal;
        } else if (opts.rounding.rfind("random", 0) == 0) {
            sch.rounding = tricut::RoundingMode::Random;
            const auto colon = opts.rounding.find(':');
            if (colon != std::string::npos)
                sch.num_random_centers = std::stoi(opts.rounding.substr(colon + 1));
        } else {
            throw CLI::ValidationError("--rounding", "expected 'optimal' or 'random:NR'");
        }
    }
    if (cmd->count("--post")) sch.post = tricut::search_mode_from_string(opts.post);
    if (cmd->count("--noise-amp")) sch.noise_amp = opts.noise_amp;
    if (cmd->count("--seed")) sch.seed = opts.seed;
    if (cmd->count("--workers")) sch.workers = std::max(1, opts.workers);
    if (cmd->count("--kernel")) sch.kernel = opts.kernel == "xy" ? Kernel::xy() : Kernel::triangular();
    if (cmd->count("--restart"))
        sch.restart = opts.restart == "perturb" ? tricut::RestartMode::PerturbBest
                                                : tricut::RestartMode::FreshRandom;
    return sch;
}

struct Instance {
    Graph graph;
    std::string label;
};

Instance load_instance(const CLI::App* cmd, const InstanceOpts& inst, std::uint64_t default_seed) {
    if (cmd->count("--gset")) {
        return {Graph::load_gset(inst.gset_path), inst.gset_path};
    }
    if (cmd->count("--er")) {
        const auto colon = inst.er_spec.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("--er expects N:P, got '" + inst.er_spec + "'");
        const int n = std::stoi(inst.er_spec.substr(0, colon));
        const double p = std::stod(inst.er_spec.substr(colon + 1));
        const std::uint64_t seed = cmd->count("--er-seed") ? inst.er_seed : default_seed;
        Graph g = Graph::erdos_renyi({n, p, seed});
        return {std::move(g), "er(" + std::to_string(n) + "," + std::to_string(p) +
                                  ",seed=" + std::to_string(seed) + ")"};
    }
    throw UsageError("no instance given; use --gset PATH or --er N:P");
}

json schedule_json(const Schedule& sch) {
    json j;
    j["steps"] = sch.steps;
    j["dt_coef"] = sch.dt_coef;
    j["ks"] = sch.anisotropy;
    j["repetitions"] = sch.repetitions;
    j["rounding"] = tricut::to_string(sch.rounding);
    if (sch.rounding == tricut::RoundingMode::Random)
        j["num_random_centers"] = sch.num_random_centers;
    j["post"] = tricut::to_string(sch.post);
    j["restart"] = tricut::to_string(sch.restart);
    j["noise_amp"] = sch.noise_amp;
    j["kernel"] = sch.kernel.name();
    j["workers"] = sch.workers;
    j["seed"] = sch.seed;
    return j;
}

json record_json(const tricut::RunRecord& rec, const Schedule& sch) {
    json j;
    j["run"] = rec.run_index;
    j[sch.rounding == tricut::RoundingMode::Optimal ? "cut_optimal" : "cut_random"] = rec.pre_cut;
    j["cut_final"] = rec.final_cut;
    j["center"] = rec.center;
    j["energy"] = rec.energy;
    j["relaxed_cut"] = rec.relaxed_cut;
    j["t_dynamics_s"] = rec.t_dynamics_s;
    j["t_rounding_s"] = rec.t_rounding_s;
    j["t_post_s"] = rec.t_post_s;
    return j;
}

int cmd_solve(const CLI::App* cmd, const InstanceOpts& inst, const ScheduleOpts& sopts,
              const std::string& format) {
    const Schedule sch = build_schedule(cmd, sopts);
    const Instance instance = load_instance(cmd, inst, sch.seed);
    const Graph& g = instance.graph;

    const auto t0 = std::chrono::steady_clock::now();
    tricut::SolveResult result = tricut::solve(g, sch);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (format == "json") {
        for (const tricut::RunRecord& rec : result.records)
            std::cout << record_json(rec, sch).dump() << '\n';
        json summary;
        summary["graph"] = instance.label;
        summary["n"] = g.num_nodes();
        summary["m"] = g.num_edges();
        summary["best_cut"] = result.best_cut;
        summary["total_wall_s"] = wall;
        summary["schedule"] = schedule_json(sch);
        summary["seed"] = sch.seed;
        std::cout << summary.dump() << '\n';
    } else {
        std::cout << "run,pre_cut,final_cut,center,energy,relaxed_cut,"
                     "t_dynamics_s,t_rounding_s,t_post_s\n";
        for (const tricut::RunRecord& rec : result.records) {
            std::cout << rec.run_index << ',' << rec.pre_cut << ',' << rec.final_cut << ','
                      << rec.center << ',' << rec.energy << ',' << rec.relaxed_cut << ','
                      << rec.t_dynamics_s << ',' << rec.t_rounding_s << ',' << rec.t_post_s
                      << '\n';
        }
        std::cerr << "best_cut=" << result.best_cut << " n=" << g.num_nodes()
                  << " m=" << g.num_edges() << " total_wall_s=" << wall << '\n';
    }
    return 0;
}

int cmd_bench(const CLI::App* cmd, const ScheduleOpts& sopts, bool full,
              const std::vector<int>& n_list, const std::vector<double>& p_list, int replicas) {
    tricut::BenchGrid grid = full ? tricut::paper_scale_grid() : tricut::desk_scale_grid();
    if (!n_list.empty()) grid.n_values = n_list;
    if (!p_list.empty()) grid.p_values = p_list;
    if (cmd->count("--replicas")) grid.replicas = replicas;
    if (cmd->count("--seed")) grid.seed = sopts.seed;
    if (cmd->count("--workers")) grid.workers = std::max(1, sopts.workers);

    // The per-cell schedule stays the scaling preset unless overridden;
    // a --post override restricts the grid to that single mode.
    Schedule base = Schedule::scaling();
    if (cmd->count("--steps")) base.steps = sopts.steps;
    if (cmd->count("--dt-coef")) base.dt_coef = sopts.dt_coef;
    if (cmd->count("--ks")) base.anisotropy = sopts.ks;
    if (cmd->count("--reps")) base.repetitions = sopts.reps;
    if (cmd->count("--noise-amp")) base.noise_amp = sopts.noise_amp;
    if (cmd->count("--kernel"))
        base.kernel = sopts.kernel == "xy" ? Kernel::xy() : Kernel::triangular();
    if (cmd->count("--restart"))
        base.restart = sopts.restart == "perturb" ? tricut::RestartMode::PerturbBest
                                                  : tricut::RestartMode::FreshRandom;
    if (cmd->count("--post")) grid.post_modes = {tricut::search_mode_from_string(sopts.post)};
    grid.schedule = base;

    std::cout << "n,p,m,graph_seed,post,best_cut,t_dynamics_s,t_rounding_s,t_post_s,t_total_s\n";
    tricut::run_bench(grid, [](const tricut::BenchRow& row) {
        std::cout << row.n << ',' << row.p << ',' << row.m << ',' << row.graph_seed << ','
                  << tricut::to_string(row.post) << ',' << row.best_cut << ','
                  << row.t_dynamics_s << ',' << row.t_rounding_s << ',' << row.t_post_s << ','
                  << row.t_total_s << '\n';
    });
    return 0;
}

int cmd_oracle(const CLI::App* cmd, const InstanceOpts& inst, std::uint64_t seed) {
    const Instance instance = load_instance(cmd, inst, seed);
    tricut::MaxCutResult result = tricut::brute_force_maxcut(instance.graph);

    std::string partition;
    partition.reserve(static_cast<std::size_t>(result.config.size()));
    for (int i = 0; i < result.config.size(); ++i)
        partition.push_back(result.config[i] == 1 ? '+' : '-');

    json out;
    out["graph"] = instance.label;
    out["n"] = instance.graph.num_nodes();
    out["m"] = instance.graph.num_edges();
    out["max_cut"] = result.cut;
    out["partition"] = partition;
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_trace(const CLI::App* cmd, const InstanceOpts& inst, const ScheduleOpts& sopts,
              int snapshot_every, int starts, int num_centers) {
    Schedule sch = build_schedule(cmd, sopts);
    const Instance instance = load_instance(cmd, inst, sch.seed);
    const Graph& g = instance.graph;
    if (snapshot_every < 1) throw std::runtime_error("--snapshot-every must be >= 1");
    if (starts < 1) throw std::runtime_error("--starts must be >= 1");

    tricut::DynParams params;
    params.anisotropy = sch.anisotropy;
    params.dt = sch.dt_coef / static_cast<double>(g.num_nodes());
    params.kernel = sch.kernel;

    std::cout << "run,step,energy,relaxed_cut,cut_random,cut_optimal\n";
    for (int run = 0; run < starts; ++run) {
        std::mt19937_64 rng = tricut::derive_stream(sch.seed, static_cast<std::uint64_t>(run));
        ContinuousState state = ContinuousState::uniform_random(g.num_nodes(), rng);

        auto emit = [&](int step) {
            const double energy = tricut::lyapunov_energy(state, g, sch.anisotropy, sch.kernel);
            const double relaxed = tricut::relaxed_cut(state, g, sch.kernel);
            const std::int64_t c_r = tricut::random_rounding(state, g, num_centers, rng).cut;
            const std::int64_t c_o = tricut::optimal_rounding(state, g).cut;
            std::cout << run << ',' << step << ',' << energy << ',' << relaxed << ',' << c_r
                      << ',' << c_o << '\n';
        };

        emit(0);
        int done = 0;
        while (done < sch.steps) {
            params.steps = std::min(snapshot_every, sch.steps - done);
            state = tricut::evolve(state, g, params);
            done += params.steps;
            emit(done);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-cut solver driven by a piecewise-linear gradient-flow spin machine"};
    app.require_subcommand(1);

    InstanceOpts inst;
    ScheduleOpts sopts;
    std::string format = "json";

    CLI::App* solve = app.add_subcommand("solve", "Run the solver on one instance");
    add_instance_options(solve, inst);
    add_schedule_options(solve, sopts);
    solve->add_option("--format", format, "Output format: json (one object per run) or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* bench = app.add_subcommand("bench", "Scaling study over an Erdos-Renyi ensemble");
    add_schedule_options(bench, sopts);
    bool full = false;
    std::vector<int> n_list;
    std::vector<double> p_list;
    int replicas = 3;
    bench->add_flag("--full", full, "Use the full-scale ensemble grid (hours, not minutes)");
    bench->add_option("--n", n_list, "Override the list of node counts");
    bench->add_option("--p", p_list, "Override the list of edge probabilities");
    bench->add_option("--replicas", replicas, "Graphs per (n, p) cell");

    CLI::App* oracle = app.add_subcommand("oracle", "Exact max cut by enumeration (n <= 24)");
    add_instance_options(oracle, inst);
    std::uint64_t oracle_seed = 0;
    oracle->add_option("--seed", oracle_seed, "Seed for --er generation");

    CLI::App* trace = app.add_subcommand("trace", "Emit energy/cut snapshots along free evolution");
    add_instance_options(trace, inst);
    add_schedule_options(trace, sopts);
    int snapshot_every = 10;
    int starts = 1;
    int trace_nr = 32;
    trace->add_option("--snapshot-every", snapshot_every, "Steps between snapshots");
    trace->add_option("--starts", starts, "Number of random initial states");
    trace->add_option("--nr", trace_nr, "Random-rounding centers per snapshot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors -> 1, --help -> 0
    }

    try {
        if (solve->parsed()) return cmd_solve(solve, inst, sopts, format);
        if (bench->parsed()) return cmd_bench(bench, sopts, full, n_list, p_list, replicas);
        if (oracle->parsed()) return cmd_oracle(oracle, inst, oracle_seed);
        if (trace->parsed()) return cmd_trace(trace, inst, sopts, snapshot_every, starts, trace_nr);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
