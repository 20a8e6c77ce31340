#include "flaglab/projspace.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace flaglab {

Flag make_flag(const ProjSpace& ps, Subspace A, Subspace B) {
  if (A.ambient() != ps.ambient() || B.ambient() != ps.ambient())
    fail(Errc::AmbientMismatch, "flag parts must live in GF(q)^" + std::to_string(ps.ambient()));
  if (A.dim() != ps.n || B.dim() != ps.n + 1)
    fail(Errc::WrongDimension, "flag needs dims (" + std::to_string(ps.n) + "," +
                                   std::to_string(ps.n + 1) + "), got (" +
                                   std::to_string(A.dim()) + "," + std::to_string(B.dim()) + ")");
  if (meet_dim(A, B) != ps.n)
    fail(Errc::SpecIncidenceViolation, "A must be contained in B");
  return Flag{std::move(A), std::move(B)};
}

bool is_opposite(const Flag& f1, const Flag& f2) {
  return meet_dim(f1.A, f2.B) == 0 && meet_dim(f2.A, f1.B) == 0;
}

Flag dualize_flag(const Flag& f) {
  return Flag{ortho_complement(f.B), ortho_complement(f.A)};
}

namespace {
uint64_t flag_key(int a_idx, int b_idx) {
  return (uint64_t(uint32_t(a_idx)) << 32) | uint32_t(b_idx);
}
}  // namespace

std::shared_ptr<const FlagUniverse> FlagUniverse::create(ProjSpace ps,
                                                         const std::string& cache_dir,
                                                         int threads) {
  if (ps.n < 1) fail(Errc::OutOfRange, "need n >= 1");
  const Field& f = Field::get(ps.q);
  auto u = std::shared_ptr<FlagUniverse>(new FlagUniverse());
  u->ps_ = ps;
  const int d = ps.ambient();
  u->aspaces_ = enumerate_subspaces_cached(f, d, ps.n, cache_dir);
  u->bspaces_ = enumerate_subspaces_cached(f, d, ps.n + 1, cache_dir);
  u->a_index_.reserve(u->aspaces_.size() * 2);
  for (size_t i = 0; i < u->aspaces_.size(); ++i) u->a_index_[u->aspaces_[i]] = int(i);
  u->b_index_.reserve(u->bspaces_.size() * 2);
  for (size_t i = 0; i < u->bspaces_.size(); ++i) u->b_index_[u->bspaces_[i]] = int(i);

  // A-parts of the flags of B = row spaces of R·basis(B) over the n-subspace
  // relations R of GF(q)^(n+1); cheaper than scanning all A against all B.
  std::vector<Subspace> rels = enumerate_subspaces(f, ps.n + 1, ps.n);
  const int nb = int(u->bspaces_.size());
  std::vector<std::vector<int32_t>> per_b(nb);
  const int nthreads = std::max(1, threads);
  {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto work = [&] {
      for (;;) {
        int bi = next.fetch_add(1);
        if (bi >= nb) return;
        std::vector<int32_t> as;
        as.reserve(rels.size());
        for (const Subspace& r : rels) {
          Subspace a = Subspace::from_span(mat_mul(r.basis(), u->bspaces_[bi].basis()));
          as.push_back(int32_t(u->a_index_.at(a)));
        }
        std::sort(as.begin(), as.end());
        per_b[bi] = std::move(as);
      }
    };
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (int bi = 0; bi < nb; ++bi)
    for (int32_t ai : per_b[bi]) u->flags_.emplace_back(ai, int32_t(bi));

  u->flag_index_.reserve(u->flags_.size() * 2);
  for (size_t v = 0; v < u->flags_.size(); ++v)
    u->flag_index_[flag_key(u->flags_[v].first, u->flags_[v].second)] = int(v);

  // content hash of the canonical flag list
  uint64_t h = 1469598103934665603ull;
  auto mix_str = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (auto [ai, bi] : u->flags_) {
    mix_str(u->aspaces_[ai].serialize());
    mix_str("|");
    mix_str(u->bspaces_[bi].serialize());
    mix_str("\n");
  }
  std::ostringstream os;
  os << std::hex;
  for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
  u->vertex_hash_ = os.str();
  return u;
}

Flag FlagUniverse::flag_at(int v) const {
  if (v < 0 || v >= vcount()) fail(Errc::IndexOutOfRange, "vertex " + std::to_string(v));
  return Flag{aspaces_[flags_[v].first], bspaces_[flags_[v].second]};
}

int FlagUniverse::a_index(const Subspace& s) const {
  auto it = a_index_.find(s);
  return it == a_index_.end() ? -1 : it->second;
}

int FlagUniverse::b_index(const Subspace& s) const {
  auto it = b_index_.find(s);
  return it == b_index_.end() ? -1 : it->second;
}

int FlagUniverse::flag_index(int a_idx, int b_idx) const {
  auto it = flag_index_.find(flag_key(a_idx, b_idx));
  return it == flag_index_.end() ? -1 : it->second;
}

int FlagUniverse::index_of(const Flag& f) const {
  int ai = a_index(f.A);
  int bi = b_index(f.B);
  if (ai < 0 || bi < 0) return -1;
  return flag_index(ai, bi);
}

int FlagUniverse::dual_index(int v) const {
  Flag d = dualize_flag(flag_at(v));
  int idx = index_of(d);
  if (idx < 0) fail(Errc::IndexOutOfRange, "dual flag missing from enumeration");
  return idx;
}

void FlagUniverse::ensure_skew_tables(int threads) const {
  std::lock_guard<std::mutex> lock(skew_mu_);
  if (!skew_.empty()) return;
  const int na = int(aspaces_.size());
  const int nb = int(bspaces_.size());
  skew_words_ = size_t((nb + 63) / 64);
  std::vector<uint64_t> table(size_t(na) * skew_words_, 0);
  const int full = ps_.ambient();  // dim A + dim B == 2n+1 exactly
  const bool two = ps_.q == 2;

  std::vector<uint32_t> pa, pbv;
  std::vector<int> arows(na), brows(nb);
  if (two) {
    // pre-packed GF(2) rows, one contiguous pool per side
    pa.reserve(size_t(na) * ps_.n);
    for (int i = 0; i < na; ++i)
      for (int r = 0; r < ps_.n; ++r) pa.push_back(detail::pack_row2(aspaces_[i].basis(), r));
    pbv.reserve(size_t(nb) * (ps_.n + 1));
    for (int j = 0; j < nb; ++j)
      for (int r = 0; r < ps_.n + 1; ++r) pbv.push_back(detail::pack_row2(bspaces_[j].basis(), r));
  }

  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      int a = next.fetch_add(1);
      if (a >= na) return;
      uint64_t* row = table.data() + size_t(a) * skew_words_;
      if (two) {
        const uint32_t* ar = pa.data() + size_t(a) * ps_.n;
        for (int b = 0; b < nb; ++b) {
          const uint32_t* br = pbv.data() + size_t(b) * (ps_.n + 1);
          if (detail::rank2_stacked(ar, ps_.n, br, ps_.n + 1) == full)
            row[b >> 6] |= uint64_t(1) << (b & 63);
        }
      } else {
        for (int b = 0; b < nb; ++b) {
          if (rank_stacked(aspaces_[a].basis(), bspaces_[b].basis()) == full)
            row[b >> 6] |= uint64_t(1) << (b & 63);
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  skew_ = std::move(table);
}

}  // namespace flaglab
