#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "flaglab/enumerate.hpp"

namespace flaglab {

/// PG(2n,q): projective dimension 2n, ambient vector dimension 2n+1.
struct ProjSpace {
  int n;
  int q;
  int ambient() const { return 2 * n + 1; }
  const Field& field() const { return Field::get(q); }
  bool operator==(const ProjSpace&) const = default;
};

/// Incident pair: A of vector dimension n inside B of vector dimension n+1
/// (projective dimensions n-1 and n).
struct Flag {
  Subspace A, B;
  bool operator==(const Flag&) const = default;
};

/// Validates dimensions and incidence.
Flag make_flag(const ProjSpace& ps, Subspace A, Subspace B);

/// Flags are opposite iff A1 ∩ B2 and A2 ∩ B1 are both projectively empty.
/// Symmetric; never reflexive (A ⊆ B forces A ∩ B ≠ ∅).
bool is_opposite(const Flag& f1, const Flag& f2);

/// (B^⊥, A^⊥): an order-reversing involution that preserves opposition.
Flag dualize_flag(const Flag& f);

/// The canonical vertex set of the opposition graph: the A- and B-space
/// enumerations, the flag list sorted by (B index, A index), and the skew
/// lookup tables that accelerate every pairwise opposition scan.
///
/// Immutable after create() apart from the lazily built skew tables, which
/// are guarded by a mutex and safe for concurrent use once built.
class FlagUniverse {
 public:
  static std::shared_ptr<const FlagUniverse> create(ProjSpace ps,
                                                    const std::string& cache_dir = "",
                                                    int threads = 1);

  const ProjSpace& ps() const { return ps_; }
  const std::vector<Subspace>& aspaces() const { return aspaces_; }
  const std::vector<Subspace>& bspaces() const { return bspaces_; }
  /// (a index, b index) per vertex, sorted by (b, a).
  const std::vector<std::pair<int32_t, int32_t>>& flags() const { return flags_; }
  int vcount() const { return int(flags_.size()); }

  Flag flag_at(int v) const;
  int a_of(int v) const { return flags_[v].first; }
  int b_of(int v) const { return flags_[v].second; }

  /// -1 when the subspace is not in the respective enumeration.
  int a_index(const Subspace& s) const;
  int b_index(const Subspace& s) const;
  /// -1 when (a,b) is not an incident pair.
  int flag_index(int a_idx, int b_idx) const;
  int index_of(const Flag& f) const;

  /// Vertex index of the dualized flag.
  int dual_index(int v) const;

  /// FNV-1a content hash of the serialized flag list, as 16 hex digits.
  const std::string& vertex_hash() const { return vertex_hash_; }

  /// Builds the A×B skew tables if not present (idempotent, thread-safe).
  void ensure_skew_tables(int threads = 1) const;
  bool skew_ab(int a_idx, int b_idx) const {
    return (skew_[size_t(a_idx) * skew_words_ + (b_idx >> 6)] >> (b_idx & 63)) & 1;
  }
  /// Table-backed opposition test between vertices.
  bool opposite(int v, int w) const {
    return skew_ab(a_of(v), b_of(w)) && skew_ab(a_of(w), b_of(v));
  }

 private:
  FlagUniverse() = default;

  ProjSpace ps_{};
  std::vector<Subspace> aspaces_, bspaces_;
  std::vector<std::pair<int32_t, int32_t>> flags_;
  std::unordered_map<Subspace, int, SubspaceHash> a_index_, b_index_;
  std::unordered_map<uint64_t, int> flag_index_;
  std::string vertex_hash_;

  mutable std::mutex skew_mu_;
  mutable std::vector<uint64_t> skew_;  // aspaces × bspaces bit table
  mutable size_t skew_words_ = 0;
};

}  // namespace flaglab
