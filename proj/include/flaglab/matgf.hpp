#pragma once

#include <cstdint>
#include <vector>

#include "flaglab/gf.hpp"

namespace flaglab {

/// Dense row-major matrix over a fixed GF(q). Values are immutable in
/// spirit: operations return new matrices.
struct MatGF {
  const Field* field = nullptr;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> a;  // rows*cols entries, row-major

  MatGF() = default;
  MatGF(const Field& f, int r, int c) : field(&f), rows(r), cols(c), a(size_t(r) * c, 0) {}

  Elem& at(int r, int c) { return a[size_t(r) * cols + c]; }
  Elem at(int r, int c) const { return a[size_t(r) * cols + c]; }

  bool operator==(const MatGF& o) const {
    return rows == o.rows && cols == o.cols && field->q() == o.field->q() && a == o.a;
  }
};

/// Unique reduced row echelon form of the row space of m: pivots are 1,
/// pivot columns otherwise zero, pivot indices strictly increasing, zero
/// rows dropped (result has rank-many rows). Idempotent.
MatGF rref(const MatGF& m);

int rank(const MatGF& m);

/// Rank of the matrix obtained by stacking the rows of x and y.
int rank_stacked(const MatGF& x, const MatGF& y);

/// Basis of {v : m v^T = 0} in RREF (kernel of the row-space map).
MatGF kernel(const MatGF& m);

/// Matrix product (rows of r are coefficient vectors applied to rows of m).
MatGF mat_mul(const MatGF& r, const MatGF& m);

namespace detail {
/// Packed GF(2) fast path (cols <= 32): rank by bitword elimination.
/// Must agree with the generic path entry for entry; tested for agreement.
int rank2_stacked(const uint32_t* rows1, int n1, const uint32_t* rows2, int n2);
uint32_t pack_row2(const MatGF& m, int r);
}  // namespace detail

}  // namespace flaglab
