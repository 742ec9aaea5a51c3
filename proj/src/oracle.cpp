#include "tricut/oracle.hpp"

#include <bit>
#include <stdexcept>

#include "tricut/local_search.hpp"
#include "tricut/rounding.hpp"

namespace tricut {

MaxCutResult brute_force_maxcut(const Graph& g) {
    const int n = g.num_nodes();
    if (n > 24) throw std::invalid_argument("brute force capped at 24 nodes");

    std::vector<std::int8_t> spins(static_cast<std::size_t>(n), 1);
    std::int64_t cut = 0;  // all-up configuration cuts nothing

    std::uint32_t mask = 0;  // bit i-1 set <=> spin i is down
    std::uint32_t best_mask = 0;
    std::int64_t best_cut = 0;

    const std::uint64_t count = n >= 1 ? (1ULL << (n - 1)) : 1;
    for (std::uint64_t k = 1; k < count; ++k) {
        // Gray-code walk: exactly one spin (never node 0) changes per step.
        const int p = std::countr_zero(k) + 1;
        std::int64_t f = 0;
        for (const Neighbor& nb : g.neighbors(p)) f -= nb.w * spins[p] * spins[nb.node];
        cut += -f;  // flip gain is -F_p of the pre-flip configuration
        spins[p] = static_cast<std::int8_t>(-spins[p]);
        mask ^= 1U << (p - 1);
        if (cut > best_cut) {
            best_cut = cut;
            best_mask = mask;
        }
    }

    std::vector<std::int8_t> best(static_cast<std::size_t>(n), 1);
    for (int i = 1; i < n; ++i)
        if (best_mask & (1U << (i - 1))) best[i] = -1;
    return {best_cut, BinaryConfig(std::move(best))};
}

std::int64_t exhaustive_rounding(const ContinuousState& s, const Graph& g) {
    // Candidate centers are the per-node flip boundaries (v_i -+ 1 reduced
    // onto the circle) plus the sweep start; every distinct rounding
    // configuration appears at one of them.
    std::int64_t best = cut_value(g, round_at(s, -1.0));
    for (int i = 0; i < s.size(); ++i) {
        const double boundary = flip_center(s[i]);
        for (const double t : {boundary, boundary + 2.0}) {
            const std::int64_t cut = cut_value(g, round_at(s, t));
            if (cut > best) best = cut;
        }
    }
    return best;
}

}  // namespace tricut
