#pragma once

#include "flaglab/qcount.hpp"
#include "flaglab/weights.hpp"

namespace flaglab {

enum class IntersectMode { PointPencil, PointOrHyperplane };

/// Dichotomy data for a pairwise-intersecting family of (n-1)-spaces: the
/// common anchor when one exists, and the Hilton–Milner-type threshold the
/// family size should be compared against.
///   PointPencil       : families in GF(q)^(2n+1); threshold
///                       gauss(2n,n-1) - q^{n(n-1)} gauss(n,1).
///   PointOrHyperplane : families in GF(q)^(2n); threshold f(n,q) when
///                       defined.
struct IntersectingReport {
  enum class AnchorKind { None, Point, Hyperplane };
  AnchorKind kind = AnchorKind::None;
  std::optional<Subspace> anchor;
  int64_t size = 0;
  std::optional<BigInt> threshold;
};

IntersectingReport analyze_intersecting_family(const std::vector<Subspace>& C,
                                               IntersectMode mode);

/// Search for `target` pairwise-skew members of C: exact backtracking when
/// |C| <= exact_limit (certifies the maximum when it stays below target),
/// greedy with deterministic restarts above.
struct SkewReport {
  bool found = false;            // best >= target
  bool certified = false;        // exact search exhausted: best is the true maximum
  int best = 0;
  std::vector<int> witness;      // indices into C, pairwise skew, size == best
  BigInt em_bound;               // (target-1) * gauss(2n, n-1, q)
  bool em_bound_holds = false;   // |C| <= em_bound
};

SkewReport max_skew_subfamily(const std::vector<Subspace>& C, int target, int exact_limit);

/// Exact count of n-spaces meeting each of the n+1 pairwise-skew
/// (n-1)-spaces, by scanning the full n-space enumeration.
int64_t count_n_spaces_meeting_all(const FlagUniverse& u, const std::vector<Subspace>& A_list);

/// Number of distinct n-spaces B' over members (A',B') of F with A' skew
/// to B. B must occur in some member flag; red B is flagged (the count is
/// mainly of interest for yellow B) but still counted.
struct SkewToReport {
  int64_t distinct_b = 0;
  int64_t weight = 0;  // member flags containing B
  SpaceColor color = SpaceColor::Unused;
};

SkewToReport count_flags_skew_to(const FlagFamily& F, const Subspace& B);

}  // namespace flaglab
