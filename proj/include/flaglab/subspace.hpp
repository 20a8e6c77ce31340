#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "flaglab/matgf.hpp"

namespace flaglab {

/// A subspace of GF(q)^ambient in canonical form: the basis matrix is the
/// unique RREF of the row space, so two Subspace values are equal exactly
/// when their entries are equal. Vector dimension k; projective dimension
/// k-1 (the empty projective space is k=0).
class Subspace {
 public:
  Subspace() = default;

  /// Canonicalizes the row space of m.
  static Subspace from_span(const MatGF& m) { return Subspace(m.cols, rref(m)); }
  static Subspace zero(const Field& f, int ambient) {
    return Subspace(ambient, MatGF(f, 0, ambient));
  }
  static Subspace full(const Field& f, int ambient);
  /// Coordinate subspace spanned by unit vectors e_i (1-based indices).
  static Subspace coordinate(const Field& f, int ambient, std::initializer_list<int> axes);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }  // vector dimension
  int proj_dim() const { return basis_.rows - 1; }
  const Field& field() const { return *basis_.field; }
  const MatGF& basis() const { return basis_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  /// Canonical order: ambient, then dimension, then entry sequence lex.
  std::strong_ordering operator<=>(const Subspace& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
    if (auto c = basis_.rows <=> o.basis_.rows; c != 0) return c;
    return basis_.a <=> o.basis_.a;
  }

  uint64_t hash() const;

  /// Textual form `d_v:k:q:` + row-major entries as base-36 digits, one row
  /// per `;`. Bit-exact across runs; inverse of parse().
  std::string serialize() const;
  static Subspace parse(const std::string& s);

 private:
  Subspace(int ambient, MatGF basis) : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_ = 0;
  MatGF basis_;
};

struct SubspaceHash {
  size_t operator()(const Subspace& s) const { return size_t(s.hash()); }
};

/// Vector dimension of s1 ∩ s2 = k1 + k2 - rank(stack). Projective
/// emptiness is meet_dim == 0.
int meet_dim(const Subspace& s1, const Subspace& s2);

Subspace join(const Subspace& s1, const Subspace& s2);

/// Actual intersection subspace, via (U ∩ W)^⊥ = U^⊥ + W^⊥.
Subspace meet(const Subspace& s1, const Subspace& s2);

/// {v : v·w = 0 for all w in s} under the standard bilinear form.
/// Involutive and order-reversing on containment.
Subspace ortho_complement(const Subspace& s);

/// small ⊆ big
bool contains(const Subspace& big, const Subspace& small);
/// s ⊆ t or t ⊆ s
bool incident(const Subspace& s, const Subspace& t);

}  // namespace flaglab
