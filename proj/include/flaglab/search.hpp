#pragma once

#include "flaglab/graph.hpp"

namespace flaglab {

enum class SearchStatus { Optimal, LowerBound, TimedOut };

const char* search_status_name(SearchStatus s);

struct SearchResult {
  std::vector<int> set;  // parent-graph vertex indices, sorted ascending
  int size = 0;
  SearchStatus status = SearchStatus::LowerBound;
  uint64_t nodes_explored = 0;
  uint64_t seed = 0;
  uint64_t budget = 0;
};

/// Branch-and-bound maximum coclique over a view (<= 5000 vertices), run as
/// a max-clique search on the complement with greedy-coloring upper bounds.
/// Returns Optimal iff the tree was exhausted within the node budget,
/// TimedOut (carrying the incumbent) otherwise. The returned set is
/// re-verified against the view adjacency before returning. Deterministic
/// given (view, budget, incumbent). Progress lines `nodes=<N> best=<k>` go
/// to stderr every 10^6 nodes.
SearchResult max_coclique_exact(const GraphView& view, uint64_t node_budget,
                                const std::vector<int>* incumbent = nullptr);

/// Greedy (min-degree-in-remaining, lowest index on ties) start — or the
/// warm start — followed by seeded plateau/swap local search. The result
/// never shrinks below the warm start. Status is always LowerBound.
SearchResult max_coclique_heuristic(const FlagGraph& g, uint64_t seed,
                                    const std::vector<int>* warm_start = nullptr,
                                    uint64_t iterations = 20000);

}  // namespace flaglab
