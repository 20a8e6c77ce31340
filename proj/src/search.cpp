#include "flaglab/search.hpp"

#include <algorithm>
#include <cstdio>
#include <random>

namespace flaglab {

const char* search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Optimal: return "Optimal";
    case SearchStatus::LowerBound: return "LowerBound";
    case SearchStatus::TimedOut: return "TimedOut";
  }
  return "?";
}

namespace {

struct Bitset {
  std::vector<uint64_t> w;
  explicit Bitset(int words = 0) : w(words, 0) {}
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
};

// Max clique on the complement of the view = max coclique on the view.
// Tomita-style: candidates greedily colored, branched in reverse color
// order, pruned at size + color <= best.
class ExactSearch {
 public:
  ExactSearch(const GraphView& view, uint64_t budget)
      : view_(view), m_(view.vcount()), words_((m_ + 63) / 64), budget_(budget) {
    comp_.assign(size_t(m_) * words_, 0);
    for (int i = 0; i < m_; ++i) {
      uint64_t* row = comp_.data() + size_t(i) * words_;
      for (int j = 0; j < m_; ++j)
        if (j != i && !view_.adjacent(i, j)) row[j >> 6] |= uint64_t(1) << (j & 63);
    }
  }

  // returns true when exhausted (not aborted by budget)
  bool run(std::vector<int>& best) {
    best_ = std::move(best);
    aborted_ = false;
    std::vector<int> cand(m_);
    for (int i = 0; i < m_; ++i) cand[i] = i;
    cur_.clear();
    expand(cand);
    best = std::move(best_);
    return !aborted_;
  }

  uint64_t nodes() const { return nodes_; }

 private:
  const uint64_t* comp_row(int v) const { return comp_.data() + size_t(v) * words_; }

  void expand(const std::vector<int>& cand) {
    if (aborted_) return;
    if (++nodes_ >= budget_) { aborted_ = true; return; }
    if (nodes_ % 1000000 == 0)
      std::fprintf(stderr, "nodes=%llu best=%d\n", (unsigned long long)nodes_,
                   int(best_.size()));

    // greedy sequential coloring of the candidates (complement adjacency);
    // a clique uses at most one vertex per color class
    const int nc = int(cand.size());
    std::vector<std::pair<int, int>> ordered;  // (vertex, color), color ascending
    ordered.reserve(nc);
    {
      std::vector<Bitset> classes;
      std::vector<int> color(nc);
      for (int t = 0; t < nc; ++t) {
        int v = cand[t];
        const uint64_t* row = comp_row(v);
        int c = 0;
        for (;; ++c) {
          if (c == int(classes.size())) {
            classes.emplace_back(words_);
            break;
          }
          bool conflict = false;
          for (int w = 0; w < words_; ++w)
            if (classes[c].w[w] & row[w]) { conflict = true; break; }
          if (!conflict) break;
        }
        classes[c].set(v);
        color[t] = c + 1;
      }
      for (int t = 0; t < nc; ++t) ordered.emplace_back(cand[t], color[t]);
      std::stable_sort(ordered.begin(), ordered.end(),
                       [](const auto& x, const auto& y) { return x.second < y.second; });
    }

    // branch highest color first; candidates for the subtree are the
    // not-yet-branched vertices (positions before t) adjacent to v
    for (int t = nc - 1; t >= 0 && !aborted_; --t) {
      auto [v, c] = ordered[t];
      if (int(cur_.size()) + c <= int(best_.size())) return;  // bound prune
      const uint64_t* row = comp_row(v);
      std::vector<int> next;
      next.reserve(t);
      for (int s = 0; s < t; ++s) {
        int u = ordered[s].first;
        if ((row[u >> 6] >> (u & 63)) & 1) next.push_back(u);
      }
      cur_.push_back(v);
      if (next.empty()) {
        if (cur_.size() > best_.size()) best_ = cur_;
      } else {
        expand(next);
      }
      cur_.pop_back();
    }
  }

  const GraphView& view_;
  int m_, words_;
  uint64_t budget_;
  std::vector<uint64_t> comp_;
  std::vector<int> cur_, best_;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
};

void verify_independent_view(const GraphView& view, const std::vector<int>& local) {
  for (size_t i = 0; i < local.size(); ++i)
    for (size_t j = i + 1; j < local.size(); ++j)
      if (view.adjacent(local[i], local[j]))
        fail(Errc::NotACoclique, "internal: search returned adjacent vertices");
}

}  // namespace

SearchResult max_coclique_exact(const GraphView& view, uint64_t node_budget,
                                const std::vector<int>* incumbent) {
  const int m = view.vcount();
  if (m > 5000)
    fail(Errc::ViewTooLarge, "exact search is limited to 5000 vertices, view has " +
                                 std::to_string(m));
  SearchResult res;
  res.budget = node_budget;

  std::vector<int> best_local;
  if (incumbent) {
    // map parent indices into the view
    std::vector<int> local;
    for (int p : *incumbent) {
      auto it = std::find(view.vertices().begin(), view.vertices().end(), p);
      if (it == view.vertices().end())
        fail(Errc::IndexOutOfRange, "incumbent vertex " + std::to_string(p) +
                                        " is not in the view");
      local.push_back(int(it - view.vertices().begin()));
    }
    verify_independent_view(view, local);
    best_local = std::move(local);
  }

  ExactSearch search(view, node_budget == 0 ? UINT64_MAX : node_budget);
  bool exhausted = search.run(best_local);
  res.nodes_explored = search.nodes();
  res.status = exhausted ? SearchStatus::Optimal : SearchStatus::TimedOut;

  verify_independent_view(view, best_local);
  for (int i : best_local) res.set.push_back(view.parent_index(i));
  std::sort(res.set.begin(), res.set.end());
  res.size = int(res.set.size());
  return res;
}

SearchResult max_coclique_heuristic(const FlagGraph& g, uint64_t seed,
                                    const std::vector<int>* warm_start, uint64_t iterations) {
  const int V = g.vcount();
  const int W = g.row_words();
  SearchResult res;
  res.seed = seed;
  res.budget = iterations;
  if (V == 0) { res.status = SearchStatus::LowerBound; return res; }

  // adjacency rows (materialized once; modest at desk scale)
  std::vector<uint64_t> rows(size_t(V) * W);
  for (int v = 0; v < V; ++v) g.row_bits(v, rows.data() + size_t(v) * W);
  auto row = [&](int v) { return rows.data() + size_t(v) * W; };

  std::vector<char> in_set(V, 0);
  std::vector<int32_t> conf(V, 0);  // |N(v) ∩ S|
  std::vector<int> members;

  auto add = [&](int v) {
    in_set[v] = 1;
    members.push_back(v);
    const uint64_t* r = row(v);
    for (int w = 0; w < W; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        ++conf[(w << 6) | b];
      }
    }
  };
  auto remove = [&](int v) {
    in_set[v] = 0;
    members.erase(std::find(members.begin(), members.end(), v));
    const uint64_t* r = row(v);
    for (int w = 0; w < W; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        --conf[(w << 6) | b];
      }
    }
  };

  if (warm_start) {
    for (int v : *warm_start) {
      if (v < 0 || v >= V)
        fail(Errc::IndexOutOfRange, "warm-start vertex " + std::to_string(v));
      if (conf[v] != 0) fail(Errc::NotACoclique, "warm start is not independent");
      add(v);
    }
    // greedy completion of the warm start
    for (int v = 0; v < V; ++v)
      if (!in_set[v] && conf[v] == 0) add(v);
  } else {
    // greedy: repeatedly take the remaining vertex of minimum remaining
    // degree (lowest index on ties)
    std::vector<int32_t> rdeg(V);
    std::vector<char> alive(V, 1);
    for (int v = 0; v < V; ++v) rdeg[v] = g.degree(v);
    int left = V;
    while (left > 0) {
      int pick = -1;
      for (int v = 0; v < V; ++v)
        if (alive[v] && (pick < 0 || rdeg[v] < rdeg[pick])) pick = v;
      add(pick);
      // drop the pick and its neighbours from the remaining graph
      auto drop = [&](int u) {
        alive[u] = 0;
        --left;
        const uint64_t* r = row(u);
        for (int w = 0; w < W; ++w) {
          uint64_t bits = r[w];
          while (bits) {
            int b = __builtin_ctzll(bits);
            bits &= bits - 1;
            int x = (w << 6) | b;
            if (alive[x]) --rdeg[x];
          }
        }
      };
      drop(pick);
      const uint64_t* r = row(pick);
      for (int w = 0; w < W; ++w) {
        uint64_t bits = r[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          int x = (w << 6) | b;
          if (alive[x]) drop(x);
        }
      }
    }
  }

  std::vector<int> best = members;
  std::mt19937_64 rng(seed);

  // plateau/swap local search: replace a member by an outside vertex with a
  // single conflict, then re-extend greedily along the removed vertex's
  // neighbourhood (only vertices whose conflict count changed can free up)
  for (uint64_t it = 0; it < iterations; ++it) {
    int v = int(rng() % uint64_t(V));
    if (in_set[v]) continue;
    if (conf[v] == 0) {
      add(v);
    } else if (conf[v] == 1) {
      const uint64_t* r = row(v);
      int u = -1;
      for (int w = 0; w < W && u < 0; ++w) {
        uint64_t bits = r[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          int x = (w << 6) | b;
          if (in_set[x]) { u = x; break; }
        }
      }
      remove(u);
      add(v);
      const uint64_t* ru = row(u);
      for (int w = 0; w < W; ++w) {
        uint64_t bits = ru[w];
        while (bits) {
          int b = __builtin_ctzll(bits);
          bits &= bits - 1;
          int x = (w << 6) | b;
          if (!in_set[x] && conf[x] == 0) add(x);
        }
      }
    } else {
      continue;
    }
    if (members.size() > best.size()) best = members;
  }

  // independent re-verification against the adjacency itself
  std::sort(best.begin(), best.end());
  for (size_t i = 0; i < best.size(); ++i)
    for (size_t j = i + 1; j < best.size(); ++j)
      if (g.adjacent(best[i], best[j]))
        fail(Errc::NotACoclique, "internal: heuristic returned adjacent vertices");

  res.set = std::move(best);
  res.size = int(res.set.size());
  res.status = SearchStatus::LowerBound;
  return res;
}

}  // namespace flaglab
