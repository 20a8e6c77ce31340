#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flaglab/error.hpp"

namespace flaglab {

using Elem = uint8_t;

/// Finite field GF(q) for prime powers 2 <= q <= 16.
///
/// Elements are encoded as integers 0..q-1 read as base-p digit vectors of
/// polynomial coefficients (lowest degree first). Extension fields use a
/// fixed irreducible modulus per q, so element encodings and hence every
/// canonical subspace form are stable across runs and machines.
class Field {
 public:
  static const Field& get(int q);  // interned, immutable, thread-safe

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }
  /// Modulus coefficients over GF(p), degree e, lowest first (length e+1).
  const std::vector<int>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem inv(Elem a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(q_) + ")");
    return inv_[a];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Discrete log w.r.t. the generator; log(0) = -1 by convention.
  int log(Elem a) const { return log_[a]; }
  /// Powers of the generator: antilog(i) = g^i for 0 <= i < q-1.
  Elem antilog(int i) const { return alog_[i % (q_ - 1)]; }
  Elem generator() const { return alog_[1]; }

  /// Multiplication by direct polynomial arithmetic mod the modulus;
  /// used to cross-check the tables.
  Elem poly_mul(Elem a, Elem b) const;

 private:
  explicit Field(int q);
  static int idx(Elem a, Elem b) { return (int(a) << 4) | int(b); }

  int q_, p_, e_;
  std::vector<int> modulus_;
  std::array<Elem, 256> add_{}, mul_{};
  std::array<Elem, 16> neg_{}, inv_{};
  std::array<int, 16> log_{};
  std::array<Elem, 16> alog_{};
};

/// Constructs (or fetches) the field of order q. Throws NotAPrimePower for
/// q with two distinct prime factors, q < 2, or q > 16.
inline const Field& field_new(int q) { return Field::get(q); }

}  // namespace flaglab
