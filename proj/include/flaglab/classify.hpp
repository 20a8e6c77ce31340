#pragma once

#include "flaglab/oracles.hpp"

namespace flaglab {

enum class Category { A, B, C };

const char* category_name(Category c);

/// Classification of a maximal coclique:
///   A: equal to an extremal construction; variant and both anchors are
///      recovered and verified by rebuilding.
///   B: not A, but some hyperplane H contributes all flags (A,B) with
///      B ⊆ H, or dually some point P contributes all flags with P ⊆ A.
///   C: neither.
/// bound_a is the extremal size; bound_b the category-B size ceiling
/// (present when f(n,q) is defined).
struct TrichotomyReport {
  Category category = Category::C;
  std::optional<Variant> variant;
  std::optional<Subspace> anchor1;  // A: H or P; B: the witness H or P
  std::optional<Subspace> anchor2;  // A: the recovered X
  bool witness_is_hyperplane = false;
  int64_t size = 0;
  BigInt bound_a;
  std::optional<BigInt> bound_b;
};

/// Throws NotMaximal (with the addable flag index in the message) when F is
/// extendable, NotACoclique when it has an opposite pair. Pass
/// assume_maximal=true to skip those scans when maximality was already
/// verified.
TrichotomyReport classify_maximal_coclique(const FlagFamily& F, int threads = 1,
                                           bool assume_maximal = false);

}  // namespace flaglab
