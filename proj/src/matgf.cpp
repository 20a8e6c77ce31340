#include "flaglab/matgf.hpp"

namespace flaglab {

namespace {

// In-place RREF; returns rank. Rows beyond the returned rank are zero.
int rref_inplace(MatGF& m) {
  const Field& f = *m.field;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Elem inv = f.inv(m.at(r, c));
    if (inv != 1)
      for (int j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Elem v = m.at(i, c);
      if (v == 0) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(v, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace

MatGF rref(const MatGF& m) {
  MatGF w = m;
  int r = rref_inplace(w);
  w.a.resize(size_t(r) * w.cols);
  w.rows = r;
  return w;
}

int rank(const MatGF& m) {
  if (m.field->q() == 2 && m.cols <= 32) {
    std::vector<uint32_t> rows(m.rows);
    for (int i = 0; i < m.rows; ++i) rows[i] = detail::pack_row2(m, i);
    return detail::rank2_stacked(rows.data(), m.rows, nullptr, 0);
  }
  MatGF w = m;
  return rref_inplace(w);
}

int rank_stacked(const MatGF& x, const MatGF& y) {
  if (x.field->q() == 2 && x.cols <= 32) {
    std::vector<uint32_t> r1(x.rows), r2(y.rows);
    for (int i = 0; i < x.rows; ++i) r1[i] = detail::pack_row2(x, i);
    for (int i = 0; i < y.rows; ++i) r2[i] = detail::pack_row2(y, i);
    return detail::rank2_stacked(r1.data(), x.rows, r2.data(), y.rows);
  }
  MatGF w(*x.field, x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), w.a.begin());
  std::copy(y.a.begin(), y.a.end(), w.a.begin() + x.a.size());
  return rref_inplace(w);
}

MatGF kernel(const MatGF& m) {
  const Field& f = *m.field;
  MatGF e = rref(m);
  std::vector<int> pivot_col(e.rows);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < e.rows; ++i) {
    int c = 0;
    while (e.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  MatGF k(f, m.cols - e.rows, m.cols);
  int out = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    k.at(out, j) = 1;
    for (int i = 0; i < e.rows; ++i)
      k.at(out, pivot_col[i]) = f.neg(e.at(i, j));
    ++out;
  }
  return rref(k);
}

MatGF mat_mul(const MatGF& r, const MatGF& m) {
  const Field& f = *m.field;
  MatGF out(f, r.rows, m.cols);
  for (int i = 0; i < r.rows; ++i)
    for (int t = 0; t < r.cols; ++t) {
      Elem c = r.at(i, t);
      if (c == 0) continue;
      for (int j = 0; j < m.cols; ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(c, m.at(t, j)));
    }
  return out;
}

namespace detail {

uint32_t pack_row2(const MatGF& m, int r) {
  uint32_t v = 0;
  for (int j = 0; j < m.cols; ++j)
    v = (v << 1) | uint32_t(m.at(r, j) & 1);
  return v;
}

int rank2_stacked(const uint32_t* rows1, int n1, const uint32_t* rows2, int n2) {
  uint32_t basis[33] = {0};
  int r = 0;
  auto insert = [&](uint32_t v) {
    while (v) {
      int h = 31 - __builtin_clz(v);
      if (basis[h]) {
        v ^= basis[h];
      } else {
        basis[h] = v;
        ++r;
        return;
      }
    }
  };
  for (int i = 0; i < n1; ++i) insert(rows1[i]);
  for (int i = 0; i < n2; ++i) insert(rows2[i]);
  return r;
}

}  // namespace detail

}  // namespace flaglab
