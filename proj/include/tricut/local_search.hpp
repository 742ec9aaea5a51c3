#pragma once

#include <cstdint>
#include <string>

#include "tricut/binary_config.hpp"
#include "tricut/graph.hpp"

namespace tricut {

enum class SearchMode { None, Nmr, NmrEmr };

std::string to_string(SearchMode mode);
SearchMode search_mode_from_string(const std::string& name);

/// Cut weight of a configuration: sum over edges of w * (1 - s_i s_j) / 2.
std::int64_t cut_value(const Graph& g, const BinaryConfig& c);

/// Node imbalance F_p = (cut weight at p) - (uncut weight at p). Flipping p
/// changes the cut by exactly -F_p.
std::int64_t imbalance(const Graph& g, const BinaryConfig& c, int node);

struct SearchResult {
    BinaryConfig config;
    std::int64_t gain = 0;  // total cut increase over the input
};

/// Node majority rule: sweep nodes in index order, flipping any node with
/// F < 0, until a full sweep makes no flip. Output satisfies F_m >= 0 at
/// every node.
SearchResult apply_nmr(const Graph& g, const BinaryConfig& c);

/// Edge majority rule on top of NMR: for every cut edge (i,j) the pair flip
/// gains exactly 2 w_ij - F_i - F_j; apply it when positive, re-establish
/// NMR, and rescan until a full pass over the edges finds no improvement.
/// Output additionally satisfies F_i + F_j >= 2 w_ij on every cut edge.
SearchResult apply_emr(const Graph& g, const BinaryConfig& c);

struct PostProcessResult {
    BinaryConfig config;
    std::int64_t cut = 0;  // final cut C_F
};

PostProcessResult post_process(const Graph& g, const BinaryConfig& c, SearchMode mode);

}  // namespace tricut
