#include "tricut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tricut/local_search.hpp"
#include "tricut/rng.hpp"

namespace tricut {

namespace {

void check_dims(const ContinuousState& s, const Graph& g) {
    if (s.size() != g.num_nodes())
        throw std::invalid_argument("state size does not match graph");
}

}  // namespace

double circular_distance(double a, double b) {
    const double d = std::fmod(std::fabs(a - b), 4.0);
    return std::min(d, 4.0 - d);
}

double flip_center(double v) {
    return (v - 2.0 * std::floor(v * 0.5)) - 1.0;
}

BinaryConfig round_at(const ContinuousState& s, double t) {
    // reduce t onto the sweep window [-1, 1); an odd half-period shift
    // complements every spin
    double tr = wrap_period(t);
    bool complement = false;
    if (tr >= 1.0) {
        tr -= 2.0;
        complement = true;
    } else if (tr < -1.0) {
        tr += 2.0;
        complement = true;
    }

    std::vector<std::int8_t> spins(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) {
        const double x = s[i];
        const bool flipped = tr >= flip_center(x);
        bool plus = x >= 0.0 ? flipped : !flipped;
        if (complement) plus = !plus;
        spins[i] = plus ? std::int8_t{1} : std::int8_t{-1};
    }
    return BinaryConfig(std::move(spins));
}

RoundingOutcome random_rounding(const ContinuousState& s, const Graph& g, int num_centers,
                                std::mt19937_64& rng) {
    check_dims(s, g);
    if (num_centers < 1) throw std::invalid_argument("need at least one rounding center");

    RoundingOutcome best;
    best.cut = -1;
    for (int k = 0; k < num_centers; ++k) {
        const double t = uniform_double(rng, -1.0, 1.0);
        BinaryConfig c = round_at(s, t);
        const std::int64_t cut = cut_value(g, c);
        if (cut > best.cut) best = {std::move(c), cut, t};
    }
    return best;
}

RoundingOutcome optimal_rounding(const ContinuousState& s, const Graph& g,
                                 std::vector<SweepEvent>* trace) {
    check_dims(s, g);
    if (trace) trace->clear();

    const int n = g.num_nodes();
    struct Event {
        double pos;
        int node;
    };
    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double pos = flip_center(s[i]);
        if (pos == -1.0) continue;  // flip already reflected in the t = -1 config
        events.push_back({pos, i});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return a.pos != b.pos ? a.pos < b.pos : a.node < b.node;
    });

    BinaryConfig init = round_at(s, -1.0);
    std::vector<std::int8_t> spins = init.spins();
    std::int64_t cut = cut_value(g, init);

    std::int64_t best_cut = cut;
    double best_center = -1.0;

    std::size_t k = 0;
    while (k < events.size()) {
        const double pos = events[k].pos;
        // Coinciding positions flip together before the configuration becomes
        // reachable by a center, but each single flip is still accumulated
        // through its own imbalance term.
        while (k < events.size() && events[k].pos == pos) {
            const int p = events[k].node;
            spins[p] = static_cast<std::int8_t>(-spins[p]);
            std::int64_t f = 0;
            for (const Neighbor& nb : g.neighbors(p)) f -= nb.w * spins[p] * spins[nb.node];
            cut += f;
            if (trace) trace->push_back({pos, p, cut});
            ++k;
        }
        if (cut > best_cut) {
            best_cut = cut;
            best_center = pos;
        }
    }

    BinaryConfig best_config = round_at(s, best_center);
    const std::int64_t best_value = cut_value(g, best_config);
    return {std::move(best_config), best_value, best_center};
}

double expected_cut(const ContinuousState& s, const Graph& g) {
    check_dims(s, g);
    double total = 0.0;
    for (const Edge& e : g.edges())
        total += static_cast<double>(e.w) * 0.5 * circular_distance(s[e.u], s[e.v]);
    return total;
}

}  // namespace tricut
