#pragma once

#include <random>
#include <vector>

#include "tricut/binary_config.hpp"
#include "tricut/dynamics.hpp"
#include "tricut/graph.hpp"
#include "tricut/rng.hpp"

namespace test_helpers {

inline tricut::Graph random_graph(std::mt19937_64& rng, int n_min, int n_max,
                                  double p_min = 0.05, double p_max = 0.9) {
    const int n = n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
    const double p = tricut::uniform_double(rng, p_min, p_max);
    return tricut::Graph::erdos_renyi({n, p, rng()});
}

inline tricut::ContinuousState random_state(int n, std::mt19937_64& rng) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = tricut::uniform_double(rng, -2.0, 2.0);
    return tricut::ContinuousState(std::move(v));
}

inline tricut::BinaryConfig random_config(int n, std::mt19937_64& rng) {
    std::vector<std::int8_t> s(static_cast<std::size_t>(n));
    for (auto& x : s) x = (rng() & 1) ? std::int8_t{1} : std::int8_t{-1};
    return tricut::BinaryConfig(std::move(s));
}

inline tricut::Graph path3() {
    return tricut::Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}});
}

inline tricut::Graph triangle() {
    return tricut::Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
}

inline tricut::Graph cycle(int n) {
    std::vector<tricut::Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
    return tricut::Graph::from_edges(n, std::move(edges));
}

inline tricut::Graph complete(int n) {
    std::vector<tricut::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
    return tricut::Graph::from_edges(n, std::move(edges));
}

inline tricut::Graph single_edge() {
    return tricut::Graph::from_edges(2, {{0, 1, 1}});
}

}  // namespace test_helpers
