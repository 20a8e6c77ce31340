#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flaglab/subspace.hpp"

namespace flaglab {

/// Visits every k-dimensional subspace of GF(q)^d exactly once as a RREF
/// matrix (pivot columns chosen in lex order, free cells run through a
/// base-q odometer). The visitation order is deterministic but not the
/// canonical lex order; callers that need the canonical order sort the
/// materialized list. The matrix passed to the visitor is reused between
/// calls — copy it if it must outlive the call.
template <class Visitor>
void for_each_subspace(const Field& f, int d, int k, Visitor&& visit) {
  if (k < 0 || k > d) fail(Errc::OutOfRange, "k must be in [0, d]");
  if (k == 0) {
    MatGF m(f, 0, d);
    visit(static_cast<const MatGF&>(m));
    return;
  }
  const int q = f.q();
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  for (;;) {
    MatGF m(f, k, d);
    std::vector<bool> is_pivot(d, false);
    for (int i = 0; i < k; ++i) {
      m.at(i, pivots[i]) = 1;
      is_pivot[pivots[i]] = true;
    }
    std::vector<size_t> free_cells;
    for (int i = 0; i < k; ++i)
      for (int j = pivots[i] + 1; j < d; ++j)
        if (!is_pivot[j]) free_cells.push_back(size_t(i) * d + j);

    // odometer over the free cells
    for (;;) {
      visit(static_cast<const MatGF&>(m));
      size_t c = 0;
      while (c < free_cells.size()) {
        Elem& cell = m.a[free_cells[c]];
        if (int(cell) + 1 < q) {
          cell = Elem(cell + 1);
          break;
        }
        cell = 0;
        ++c;
      }
      if (c == free_cells.size()) break;
    }

    // next pivot pattern (lex combination)
    int i = k - 1;
    while (i >= 0 && pivots[i] == d - k + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

/// Streaming count (no materialization); equals gauss(d,k,q).
uint64_t count_subspaces(const Field& f, int d, int k);

/// All k-subspaces of GF(q)^d, each exactly once, sorted in canonical
/// order (lexicographic on the RREF entry sequence).
std::vector<Subspace> enumerate_subspaces(const Field& f, int d, int k);

/// Cache-backed variant: loads `PGCACHE v1` files from cache_dir (keyed by
/// q, d, k and the field modulus) and writes them on miss. Empty cache_dir
/// disables caching.
std::vector<Subspace> enumerate_subspaces_cached(const Field& f, int d, int k,
                                                 const std::string& cache_dir);

/// Cache file path for the given key (also used by the CLI to report it).
std::string cache_file_path(const Field& f, int d, int k, const std::string& cache_dir);

}  // namespace flaglab
