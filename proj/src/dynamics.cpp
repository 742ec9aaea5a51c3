#include "tricut/dynamics.hpp"

#include <stdexcept>

#include "tricut/rng.hpp"

namespace tricut {

namespace {

void check_dims(const ContinuousState& s, const Graph& g) {
    if (s.size() != g.num_nodes())
        throw std::invalid_argument("state size " + std::to_string(s.size()) +
                                    " does not match graph with " +
                                    std::to_string(g.num_nodes()) + " nodes");
}

}  // namespace

ContinuousState ContinuousState::uniform_random(int n, std::mt19937_64& rng) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = uniform_double(rng, -1.0, 1.0);
    return ContinuousState(std::move(v));
}

ContinuousState step_euler(const ContinuousState& s, const Graph& g, const DynParams& p) {
    check_dims(s, g);
    if (p.dt <= 0.0) throw std::invalid_argument("dt must be positive");

    const std::vector<double>& x = s.values();
    const int n = g.num_nodes();
    std::vector<double> drift(static_cast<std::size_t>(n), 0.0);

    for (const Edge& e : g.edges()) {
        // coupling is odd, so the reaction on v is the negated action on u
        const double c = static_cast<double>(e.w) * p.kernel.coupling(x[e.u] - x[e.v]);
        drift[e.u] -= c;
        drift[e.v] += c;
    }

    std::vector<double> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double d = drift[i] + p.anisotropy * p.kernel.coupling(2.0 * x[i]);
        next[i] = x[i] + p.dt * d;
    }
    return ContinuousState(std::move(next));
}

ContinuousState evolve(const ContinuousState& s0, const Graph& g, const DynParams& p,
                       std::vector<TracePoint>* trace) {
    check_dims(s0, g);
    if (p.steps < 0) throw std::invalid_argument("steps must be >= 0");

    ContinuousState s = s0;
    if (trace) {
        trace->clear();
        trace->push_back({0, lyapunov_energy(s, g, p.anisotropy, p.kernel),
                          relaxed_cut(s, g, p.kernel)});
    }
    for (int step = 1; step <= p.steps; ++step) {
        s = step_euler(s, g, p);
        if (trace)
            trace->push_back({step, lyapunov_energy(s, g, p.anisotropy, p.kernel),
                              relaxed_cut(s, g, p.kernel)});
    }
    return s;
}

double lyapunov_energy(const ContinuousState& s, const Graph& g, double anisotropy,
                       const Kernel& k) {
    check_dims(s, g);
    const std::vector<double>& x = s.values();
    double pair_term = 0.0;
    for (const Edge& e : g.edges())
        pair_term += static_cast<double>(e.w) * k.energy(x[e.u] - x[e.v]);
    double self_term = 0.0;
    for (double xi : x) self_term += k.energy(2.0 * xi);
    return pair_term - 0.5 * anisotropy * self_term;
}

double relaxed_cut(const ContinuousState& s, const Graph& g, const Kernel& k) {
    check_dims(s, g);
    const std::vector<double>& x = s.values();
    double pair_term = 0.0;
    for (const Edge& e : g.edges())
        pair_term += static_cast<double>(e.w) * k.energy(x[e.u] - x[e.v]);
    return 0.5 * static_cast<double>(g.total_weight()) - 0.5 * pair_term;
}

}  // namespace tricut
