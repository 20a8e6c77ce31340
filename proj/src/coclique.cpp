#include "flaglab/coclique.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace flaglab {

FlagFamily::FlagFamily(std::shared_ptr<const FlagUniverse> u, std::vector<int> indices)
    : u_(std::move(u)), members_(std::move(indices)) {
  const int V = u_->vcount();
  bits_.assign(size_t((V + 63) / 64), 0);
  std::sort(members_.begin(), members_.end());
  for (int v : members_) {
    if (v < 0 || v >= V)
      fail(Errc::IndexOutOfRange,
           "flag index " + std::to_string(v) + " outside [0," + std::to_string(V) + ")");
    uint64_t& w = bits_[v >> 6];
    uint64_t bit = uint64_t(1) << (v & 63);
    if (w & bit) fail(Errc::DuplicateIndex, "flag index " + std::to_string(v) + " listed twice");
    w |= bit;
  }
}

std::optional<std::pair<int, int>> coclique_violation(const FlagFamily& F, int threads) {
  const FlagUniverse& u = F.universe();
  u.ensure_skew_tables(threads);
  const auto& m = F.members();
  const int sz = int(m.size());
  const int nthreads = std::max(1, std::min(threads, sz));
  if (sz < 2) return std::nullopt;

  // Each worker scans a contiguous block of first-indices in order and
  // reports the lowest pair it sees; the global minimum is deterministic.
  std::vector<std::pair<int, int>> found(nthreads, {-1, -1});
  auto work = [&](int tid) {
    int lo = int(int64_t(sz) * tid / nthreads);
    int hi = int(int64_t(sz) * (tid + 1) / nthreads);
    for (int i = lo; i < hi; ++i) {
      for (int j = i + 1; j < sz; ++j) {
        if (u.opposite(m[i], m[j])) {
          found[tid] = {m[i], m[j]};
          return;
        }
      }
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& p : found)
    if (p.first >= 0) return p;
  return std::nullopt;
}

MaximalityResult is_maximal_coclique(const FlagFamily& F, int threads) {
  if (auto bad = coclique_violation(F, threads))
    fail(Errc::NotACoclique, "members " + std::to_string(bad->first) + " and " +
                                 std::to_string(bad->second) + " are opposite");
  const FlagUniverse& u = F.universe();
  const auto& m = F.members();
  const int V = u.vcount();
  const int sz = int(m.size());
  const int nthreads = std::max(1, threads);

  std::vector<int> found(nthreads, -1);
  auto work = [&](int tid) {
    int lo = int(int64_t(V) * tid / nthreads);
    int hi = int(int64_t(V) * (tid + 1) / nthreads);
    for (int v = lo; v < hi; ++v) {
      if (F.contains(v)) continue;
      bool addable = true;
      for (int i = 0; i < sz; ++i) {
        if (u.opposite(v, m[i])) {
          addable = false;
          break;
        }
      }
      if (addable) {
        found[tid] = v;
        return;
      }
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (int v : found)
    if (v >= 0) return {false, v};
  return {true, -1};
}

namespace {

// Compatible = not opposite to any current member. Members stay compatible
// with each other, so candidates are compatible & ~member.
struct ClosureState {
  const FlagUniverse& u;
  std::vector<uint64_t> compatible;
  std::vector<int> members;
  std::vector<uint64_t> member_bits;
  int words;

  explicit ClosureState(const FlagFamily& F)
      : u(F.universe()),
        members(F.members()),
        member_bits(F.member_bits()),
        words(int(F.member_bits().size())) {
    u.ensure_skew_tables();
    const int V = u.vcount();
    compatible.assign(words, 0);
    for (int i = 0; i < V; ++i) compatible[i >> 6] |= uint64_t(1) << (i & 63);
    if (V & 63) compatible[words - 1] = (uint64_t(1) << (V & 63)) - 1;
    for (int m : members) restrict_to_nonopposite(m);
  }

  void restrict_to_nonopposite(int m) {
    const int V = u.vcount();
    for (int w = 0; w < words; ++w) {
      uint64_t bits = compatible[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        int v = (w << 6) | b;
        if (v < V && u.opposite(m, v)) compatible[w] &= ~(uint64_t(1) << b);
      }
    }
  }

  void add(int v) {
    members.push_back(v);
    member_bits[v >> 6] |= uint64_t(1) << (v & 63);
    restrict_to_nonopposite(v);
  }

  int candidate_count() const {
    int c = 0;
    for (int w = 0; w < words; ++w)
      c += __builtin_popcountll(compatible[w] & ~member_bits[w]);
    return c;
  }

  int nth_candidate(int r) const {
    for (int w = 0; w < words; ++w) {
      uint64_t bits = compatible[w] & ~member_bits[w];
      int pc = __builtin_popcountll(bits);
      if (r >= pc) {
        r -= pc;
        continue;
      }
      while (r--) bits &= bits - 1;
      return (w << 6) | __builtin_ctzll(bits);
    }
    return -1;
  }
};

void require_coclique(const FlagFamily& F) {
  if (auto bad = coclique_violation(F))
    fail(Errc::NotACoclique, "members " + std::to_string(bad->first) + " and " +
                                 std::to_string(bad->second) + " are opposite");
}

}  // namespace

FlagFamily greedy_closure(const FlagFamily& F) {
  require_coclique(F);
  ClosureState st(F);
  for (;;) {
    int v = st.nth_candidate(0);
    if (v < 0) break;
    st.add(v);
  }
  return FlagFamily(F.universe_ptr(), st.members);
}

FlagFamily random_closure(const FlagFamily& F, uint64_t seed) {
  require_coclique(F);
  ClosureState st(F);
  std::mt19937_64 rng(seed);
  for (;;) {
    int c = st.candidate_count();
    if (c == 0) break;
    st.add(st.nth_candidate(int(rng() % uint64_t(c))));
  }
  return FlagFamily(F.universe_ptr(), st.members);
}

FlagFamily dualize_family(const FlagFamily& F) {
  std::vector<int> duals;
  duals.reserve(F.size());
  for (int v : F.members()) duals.push_back(F.universe().dual_index(v));
  return FlagFamily(F.universe_ptr(), std::move(duals));
}

// ---------------------------------------------------------------- Example 1

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::a_i: return "a_i";
    case Variant::a_ii: return "a_ii";
    case Variant::b_i: return "b_i";
    case Variant::b_ii: return "b_ii";
  }
  return "?";
}

std::optional<Variant> variant_parse(const std::string& s) {
  if (s == "a_i") return Variant::a_i;
  if (s == "a_ii") return Variant::a_ii;
  if (s == "b_i") return Variant::b_i;
  if (s == "b_ii") return Variant::b_ii;
  return std::nullopt;
}

void validate_construction(const ConstructionSpec& spec, const ProjSpace& ps) {
  const int d = ps.ambient();
  const int n = ps.n;
  const Subspace& a1 = spec.anchor1;
  const Subspace& a2 = spec.anchor2;
  if (a1.ambient() != d || a2.ambient() != d || a1.field().q() != ps.q ||
      a2.field().q() != ps.q)
    fail(Errc::AmbientMismatch, "anchors must live in GF(" + std::to_string(ps.q) + ")^" +
                                    std::to_string(d));
  auto want = [&](const Subspace& s, int k, const char* what) {
    if (s.dim() != k)
      fail(Errc::SpecIncidenceViolation, std::string(what) + " must have vector dimension " +
                                             std::to_string(k) + ", got " +
                                             std::to_string(s.dim()));
  };
  switch (spec.variant) {
    case Variant::a_i:
      want(a1, 2 * n, "hyperplane H");
      want(a2, 1, "point X");
      if (!contains(a1, a2)) fail(Errc::SpecIncidenceViolation, "X must lie in H");
      break;
    case Variant::a_ii:
      want(a1, 2 * n, "hyperplane H");
      want(a2, 2 * n - 1, "X");
      if (!contains(a1, a2)) fail(Errc::SpecIncidenceViolation, "X must lie in H");
      break;
    case Variant::b_i:
      want(a1, 1, "point P");
      want(a2, 2 * n, "hyperplane X");
      if (!contains(a2, a1)) fail(Errc::SpecIncidenceViolation, "X must pass through P");
      break;
    case Variant::b_ii:
      want(a1, 1, "point P");
      want(a2, 2, "line X");
      if (!contains(a2, a1)) fail(Errc::SpecIncidenceViolation, "X must pass through P");
      break;
  }
}

FlagFamily build_example(std::shared_ptr<const FlagUniverse> u, const ConstructionSpec& spec) {
  const ProjSpace& ps = u->ps();
  validate_construction(spec, ps);
  const auto& as = u->aspaces();
  const auto& bs = u->bspaces();
  std::vector<char> okA(as.size(), 0), okB(bs.size(), 0);

  switch (spec.variant) {
    case Variant::a_i:
      for (size_t i = 0; i < bs.size(); ++i) okB[i] = contains(spec.anchor1, bs[i]);
      for (size_t i = 0; i < as.size(); ++i)
        okA[i] = contains(as[i], spec.anchor2) && contains(spec.anchor1, as[i]);
      break;
    case Variant::a_ii:
      for (size_t i = 0; i < bs.size(); ++i) okB[i] = contains(spec.anchor1, bs[i]);
      for (size_t i = 0; i < as.size(); ++i) okA[i] = contains(spec.anchor2, as[i]);
      break;
    case Variant::b_i:
      for (size_t i = 0; i < as.size(); ++i) okA[i] = contains(as[i], spec.anchor1);
      for (size_t i = 0; i < bs.size(); ++i)
        okB[i] = contains(spec.anchor2, bs[i]) && contains(bs[i], spec.anchor1);
      break;
    case Variant::b_ii:
      for (size_t i = 0; i < as.size(); ++i) okA[i] = contains(as[i], spec.anchor1);
      for (size_t i = 0; i < bs.size(); ++i) okB[i] = contains(bs[i], spec.anchor2);
      break;
  }

  std::vector<int> members;
  const auto& flags = u->flags();
  for (int v = 0; v < int(flags.size()); ++v)
    if (okA[flags[v].first] || okB[flags[v].second]) members.push_back(v);
  return FlagFamily(std::move(u), std::move(members));
}

Subspace random_subspace(const Field& f, int d, int k, std::mt19937_64& rng) {
  for (;;) {
    MatGF m(f, k, d);
    for (Elem& e : m.a) e = Elem(rng() % uint64_t(f.q()));
    if (rank(m) == k) return Subspace::from_span(m);
  }
}

Subspace random_subspace_inside(const Subspace& S, int k, std::mt19937_64& rng) {
  const Field& f = S.field();
  for (;;) {
    MatGF coeff(f, k, S.dim());
    for (Elem& e : coeff.a) e = Elem(rng() % uint64_t(f.q()));
    if (rank(coeff) != k) continue;
    return Subspace::from_span(mat_mul(coeff, S.basis()));
  }
}

Subspace random_subspace_containing(const Subspace& S, int k, std::mt19937_64& rng) {
  Subspace comp = ortho_complement(S);
  Subspace inner = random_subspace_inside(comp, S.ambient() - k, rng);
  return ortho_complement(inner);
}

ConstructionSpec random_construction(const ProjSpace& ps, Variant v, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Field& f = ps.field();
  const int d = ps.ambient();
  const int n = ps.n;
  ConstructionSpec spec;
  spec.variant = v;
  switch (v) {
    case Variant::a_i:
      spec.anchor1 = random_subspace(f, d, 2 * n, rng);
      spec.anchor2 = random_subspace_inside(spec.anchor1, 1, rng);
      break;
    case Variant::a_ii:
      spec.anchor1 = random_subspace(f, d, 2 * n, rng);
      spec.anchor2 = random_subspace_inside(spec.anchor1, 2 * n - 1, rng);
      break;
    case Variant::b_i:
      spec.anchor1 = random_subspace(f, d, 1, rng);
      spec.anchor2 = random_subspace_containing(spec.anchor1, 2 * n, rng);
      break;
    case Variant::b_ii:
      spec.anchor1 = random_subspace(f, d, 1, rng);
      spec.anchor2 = random_subspace_containing(spec.anchor1, 2, rng);
      break;
  }
  return spec;
}

}  // namespace flaglab
