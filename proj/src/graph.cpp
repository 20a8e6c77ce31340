#include "flaglab/graph.hpp"

#include <atomic>
#include <ostream>
#include <thread>
#include <unordered_set>

namespace flaglab {

FlagGraph FlagGraph::build(std::shared_ptr<const FlagUniverse> u, GraphMode mode,
                           int64_t memory_budget, int threads) {
  FlagGraph g;
  g.u_ = std::move(u);
  g.mode_ = mode;
  const int V = g.u_->vcount();
  g.words_ = (V + 63) / 64;
  g.u_->ensure_skew_tables(threads);

  if (mode == GraphMode::Streaming) return g;

  const int64_t bytes = int64_t(V) * g.words_ * 8;
  if (bytes > memory_budget)
    fail(Errc::MemoryBudgetExceeded,
         "dense adjacency needs " + std::to_string(bytes) + " bytes for V=" + std::to_string(V) +
             " but the budget is " + std::to_string(memory_budget) +
             "; use streaming mode");

  const auto& flags = g.u_->flags();
  const int na = int(g.u_->aspaces().size());
  const int nb = int(g.u_->bspaces().size());
  const size_t W = size_t(g.words_);

  // mask_a[a] bit w  = skew(a, B(w));  mask_b[b] bit w = skew(A(w), b).
  // Row of v is then mask_a[A(v)] & mask_b[B(v)]: bit v stays clear because
  // a flag is never skew to its own B.
  std::vector<uint64_t> mask_a(size_t(na) * W, 0), mask_b(size_t(nb) * W, 0);
  const int nthreads = std::max(1, threads);
  {
    std::atomic<int> next{0};
    auto work = [&] {
      for (;;) {
        int a = next.fetch_add(1);
        if (a >= na) return;
        uint64_t* row = mask_a.data() + size_t(a) * W;
        for (int w = 0; w < V; ++w)
          if (g.u_->skew_ab(a, flags[w].second)) row[w >> 6] |= uint64_t(1) << (w & 63);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  {
    std::atomic<int> next{0};
    auto work = [&] {
      for (;;) {
        int b = next.fetch_add(1);
        if (b >= nb) return;
        uint64_t* row = mask_b.data() + size_t(b) * W;
        for (int w = 0; w < V; ++w)
          if (g.u_->skew_ab(flags[w].first, b)) row[w >> 6] |= uint64_t(1) << (w & 63);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  g.rows_.assign(size_t(V) * W, 0);
  std::vector<int64_t> partial(nthreads, 0);
  {
    std::atomic<int> next{0};
    auto work = [&](int tid) {
      int64_t bits = 0;
      for (;;) {
        int v = next.fetch_add(1);
        if (v >= V) break;
        const uint64_t* ma = mask_a.data() + size_t(flags[v].first) * W;
        const uint64_t* mb = mask_b.data() + size_t(flags[v].second) * W;
        uint64_t* row = g.rows_.data() + size_t(v) * W;
        for (size_t i = 0; i < W; ++i) {
          row[i] = ma[i] & mb[i];
          bits += __builtin_popcountll(row[i]);
        }
      }
      partial[tid] = bits;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  int64_t total = 0;
  for (int64_t b : partial) total += b;
  g.edge_count_ = total / 2;
  return g;
}

int FlagGraph::degree(int v) const {
  if (mode_ == GraphMode::Dense) {
    const uint64_t* row = rows_.data() + size_t(v) * words_;
    int d = 0;
    for (int i = 0; i < words_; ++i) d += __builtin_popcountll(row[i]);
    return d;
  }
  int d = 0;
  const int V = vcount();
  for (int w = 0; w < V; ++w)
    if (w != v && u_->opposite(v, w)) ++d;
  return d;
}

int64_t FlagGraph::edge_count() const {
  if (edge_count_ >= 0) return edge_count_;
  int64_t total = 0;
  for (int v = 0; v < vcount(); ++v) total += degree(v);
  return total / 2;
}

std::map<int64_t, int64_t> FlagGraph::degree_histogram() const {
  std::map<int64_t, int64_t> h;
  for (int v = 0; v < vcount(); ++v) ++h[degree(v)];
  return h;
}

void FlagGraph::row_bits(int v, uint64_t* out) const {
  if (mode_ == GraphMode::Dense) {
    const uint64_t* row = rows_.data() + size_t(v) * words_;
    std::copy(row, row + words_, out);
    return;
  }
  std::fill(out, out + words_, 0);
  const int V = vcount();
  for (int w = 0; w < V; ++w)
    if (w != v && u_->opposite(v, w)) out[w >> 6] |= uint64_t(1) << (w & 63);
}

int64_t FlagGraph::export_dimacs(std::ostream& os) const {
  const int V = vcount();
  const int64_t E = edge_count();
  os << "p edge " << V << ' ' << E << '\n';
  int64_t written = 0;
  for (int v = 0; v < V; ++v)
    for (int w = v + 1; w < V; ++w)
      if (adjacent(v, w)) {
        os << "e " << (v + 1) << ' ' << (w + 1) << '\n';
        ++written;
      }
  return written;
}

GraphView::GraphView(const FlagGraph& g, std::vector<int> subset) : verts_(std::move(subset)) {
  const int V = g.vcount();
  std::unordered_set<int> seen;
  for (int v : verts_) {
    if (v < 0 || v >= V)
      fail(Errc::IndexOutOfRange, "vertex " + std::to_string(v) + " outside [0," +
                                      std::to_string(V) + ")");
    if (!seen.insert(v).second)
      fail(Errc::DuplicateIndex, "vertex " + std::to_string(v) + " listed twice");
  }
  const int m = int(verts_.size());
  words_ = (m + 63) / 64;
  rows_.assign(size_t(m) * words_, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(verts_[i], verts_[j])) {
        rows_[size_t(i) * words_ + (j >> 6)] |= uint64_t(1) << (j & 63);
        rows_[size_t(j) * words_ + (i >> 6)] |= uint64_t(1) << (i & 63);
      }
}

int GraphView::degree(int i) const {
  const uint64_t* r = row(i);
  int d = 0;
  for (int t = 0; t < words_; ++t) d += __builtin_popcountll(r[t]);
  return d;
}

int64_t GraphView::edge_count() const {
  int64_t total = 0;
  for (int i = 0; i < vcount(); ++i) total += degree(i);
  return total / 2;
}

std::map<int64_t, int64_t> GraphView::degree_histogram() const {
  std::map<int64_t, int64_t> h;
  for (int i = 0; i < vcount(); ++i) ++h[degree(i)];
  return h;
}

int64_t GraphView::export_dimacs(std::ostream& os) const {
  const int m = vcount();
  os << "p edge " << m << ' ' << edge_count() << '\n';
  int64_t written = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adjacent(i, j)) {
        os << "e " << (i + 1) << ' ' << (j + 1) << '\n';
        ++written;
      }
  return written;
}

}  // namespace flaglab
