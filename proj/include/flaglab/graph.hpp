#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>

#include "flaglab/projspace.hpp"

namespace flaglab {

enum class GraphMode { Dense, Streaming };

constexpr int64_t kDefaultMemoryBudget = int64_t(2) * 1024 * 1024 * 1024;  // 2 GiB

/// The opposition graph on the universe's flag list. Dense mode holds one
/// bit-packed adjacency row per vertex; streaming mode answers queries from
/// the skew tables and never materializes rows. Both modes agree on every
/// pair. Immutable after build; safe to share across threads.
class FlagGraph {
 public:
  static FlagGraph build(std::shared_ptr<const FlagUniverse> u, GraphMode mode,
                         int64_t memory_budget = kDefaultMemoryBudget, int threads = 1);

  const FlagUniverse& universe() const { return *u_; }
  std::shared_ptr<const FlagUniverse> universe_ptr() const { return u_; }
  GraphMode mode() const { return mode_; }
  int vcount() const { return u_->vcount(); }

  bool adjacent(int v, int w) const {
    if (mode_ == GraphMode::Dense)
      return (rows_[size_t(v) * words_ + (w >> 6)] >> (w & 63)) & 1;
    return v != w && u_->opposite(v, w);
  }

  int degree(int v) const;
  int64_t edge_count() const;

  /// Exact degree -> multiplicity map over all vertices.
  std::map<int64_t, int64_t> degree_histogram() const;

  /// `p edge V E` then one `e i j` line per edge, 1-based, i < j, ascending;
  /// byte-stable across runs. Returns the edge count written.
  int64_t export_dimacs(std::ostream& os) const;

  /// Copies the adjacency row of v into out (words 64-bit, vcount bits).
  void row_bits(int v, uint64_t* out) const;
  int row_words() const { return words_; }

 private:
  std::shared_ptr<const FlagUniverse> u_;
  GraphMode mode_ = GraphMode::Streaming;
  int words_ = 0;
  std::vector<uint64_t> rows_;
  int64_t edge_count_ = -1;
};

/// Induced subgraph on a subset of vertices (order preserved). Adjacency is
/// materialized locally, so views stay fast even over streaming graphs.
class GraphView {
 public:
  GraphView(const FlagGraph& g, std::vector<int> subset);

  int vcount() const { return int(verts_.size()); }
  const std::vector<int>& vertices() const { return verts_; }
  int parent_index(int i) const { return verts_[i]; }
  bool adjacent(int i, int j) const {
    return (rows_[size_t(i) * words_ + (j >> 6)] >> (j & 63)) & 1;
  }
  int degree(int i) const;
  int64_t edge_count() const;
  std::map<int64_t, int64_t> degree_histogram() const;
  int64_t export_dimacs(std::ostream& os) const;
  const uint64_t* row(int i) const { return rows_.data() + size_t(i) * words_; }
  int row_words() const { return words_; }

 private:
  std::vector<int> verts_;
  int words_ = 0;
  std::vector<uint64_t> rows_;
};

inline GraphView induced_subgraph(const FlagGraph& g, const std::vector<int>& subset) {
  return GraphView(g, subset);
}

}  // namespace flaglab
