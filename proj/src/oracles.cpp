#include "flaglab/oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace flaglab {

namespace {

void check_uniform(const std::vector<Subspace>& C) {
  if (C.empty()) fail(Errc::OutOfRange, "family of subspaces is empty");
  for (size_t i = 1; i < C.size(); ++i) {
    if (C[i].ambient() != C[0].ambient() || C[i].field().q() != C[0].field().q())
      fail(Errc::AmbientMismatch, "members live in different ambient spaces");
    if (C[i].dim() != C[0].dim())
      fail(Errc::MixedDimensions, "member " + std::to_string(i) + " has dimension " +
                                      std::to_string(C[i].dim()) + " but member 0 has " +
                                      std::to_string(C[0].dim()));
  }
}

}  // namespace

IntersectingReport analyze_intersecting_family(const std::vector<Subspace>& C,
                                               IntersectMode mode) {
  check_uniform(C);
  const int n = C[0].dim();
  const int d = C[0].ambient();
  const long q = C[0].field().q();
  if (mode == IntersectMode::PointPencil && d != 2 * n + 1)
    fail(Errc::OutOfRange, "point-pencil analysis expects (n-1)-spaces of PG(2n,q): ambient 2n+1");
  if (mode == IntersectMode::PointOrHyperplane && d != 2 * n)
    fail(Errc::OutOfRange,
         "point-or-hyperplane analysis expects (n-1)-spaces of PG(2n-1,q): ambient 2n");

  for (size_t i = 0; i < C.size(); ++i)
    for (size_t j = i + 1; j < C.size(); ++j)
      if (meet_dim(C[i], C[j]) < 1)
        fail(Errc::NotIntersecting, "members " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are skew: " + C[i].serialize() +
                                        " / " + C[j].serialize());

  IntersectingReport rep;
  rep.size = int64_t(C.size());
  if (mode == IntersectMode::PointPencil) {
    rep.threshold = gauss(2 * n, n - 1, q) - q_pow(q, long(n) * (n - 1)) * gauss(n, 1, q);
  } else if (n == 3 || (n >= 4 && q >= 4)) {
    rep.threshold = f_bound(n, q);
  }

  Subspace common = C[0];
  for (size_t i = 1; i < C.size() && common.dim() > 0; ++i) common = meet(common, C[i]);
  if (common.dim() >= 1) {
    rep.kind = IntersectingReport::AnchorKind::Point;
    rep.anchor = common;
    return rep;
  }

  if (mode == IntersectMode::PointOrHyperplane) {
    Subspace span = C[0];
    for (size_t i = 1; i < C.size() && span.dim() < d; ++i) span = join(span, C[i]);
    if (span.dim() <= d - 1) {
      // extend the span to a hyperplane: complement the canonically first
      // point of its orthogonal complement
      Subspace perp = ortho_complement(span);
      MatGF first(perp.field(), 1, d);
      for (int j = 0; j < d; ++j) first.at(0, j) = perp.basis().at(0, j);
      rep.kind = IntersectingReport::AnchorKind::Hyperplane;
      rep.anchor = ortho_complement(Subspace::from_span(first));
    }
  }
  return rep;
}

SkewReport max_skew_subfamily(const std::vector<Subspace>& C, int target, int exact_limit) {
  check_uniform(C);
  const int m = int(C.size());
  const int n = C[0].dim();
  const long q = C[0].field().q();

  // skew graph: edge = empty projective meet
  std::vector<std::vector<char>> skew(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      skew[i][j] = skew[j][i] = (meet_dim(C[i], C[j]) == 0);

  SkewReport rep;
  rep.em_bound = BigInt(target - 1) * gauss(2 * n, n - 1, q);
  rep.em_bound_holds = BigInt(m) <= rep.em_bound;

  std::vector<int> best, cur;
  if (m <= exact_limit) {
    // exact: depth-first over ordered candidate lists
    std::vector<int> cand(m);
    for (int i = 0; i < m; ++i) cand[i] = i;
    bool done = false;
    auto dfs = [&](auto&& self, const std::vector<int>& cands) -> void {
      if (done) return;
      if (int(cur.size()) > int(best.size())) {
        best = cur;
        if (int(best.size()) >= target) {
          done = true;  // early exit: target reached
          return;
        }
      }
      if (int(cur.size() + cands.size()) <= int(best.size())) return;
      for (size_t t = 0; t < cands.size() && !done; ++t) {
        int v = cands[t];
        if (int(cur.size() + (cands.size() - t)) <= int(best.size())) break;
        std::vector<int> next;
        for (size_t s = t + 1; s < cands.size(); ++s)
          if (skew[v][cands[s]]) next.push_back(cands[s]);
        cur.push_back(v);
        self(self, next);
        cur.pop_back();
      }
    };
    dfs(dfs, cand);
    rep.certified = !done;  // exhausted: best is the true maximum
  } else {
    // greedy with deterministic seeded restarts
    for (uint64_t seed = 0; seed < 24 && int(best.size()) < target; ++seed) {
      std::mt19937_64 rng(seed);
      std::vector<int> order(m);
      for (int i = 0; i < m; ++i) order[i] = i;
      for (int i = m - 1; i > 0; --i)
        std::swap(order[i], order[rng() % uint64_t(i + 1)]);
      std::vector<int> pick;
      for (int v : order) {
        bool ok = true;
        for (int u : pick)
          if (!skew[u][v]) { ok = false; break; }
        if (ok) pick.push_back(v);
      }
      if (pick.size() > best.size()) best = pick;
    }
  }

  std::sort(best.begin(), best.end());
  rep.best = int(best.size());
  rep.witness = std::move(best);
  rep.found = rep.best >= target;
  return rep;
}

int64_t count_n_spaces_meeting_all(const FlagUniverse& u, const std::vector<Subspace>& A_list) {
  const ProjSpace& ps = u.ps();
  if (int(A_list.size()) != ps.n + 1)
    fail(Errc::NotPairwiseSkew, "expected n+1 = " + std::to_string(ps.n + 1) +
                                    " pairwise skew (n-1)-spaces, got " +
                                    std::to_string(A_list.size()));
  for (const Subspace& s : A_list) {
    if (s.ambient() != ps.ambient() || s.field().q() != ps.q)
      fail(Errc::AmbientMismatch, "witness spaces must live in GF(q)^" +
                                      std::to_string(ps.ambient()));
    if (s.dim() != ps.n)
      fail(Errc::WrongDimension, "witness spaces must have vector dimension " +
                                     std::to_string(ps.n));
  }
  for (size_t i = 0; i < A_list.size(); ++i)
    for (size_t j = i + 1; j < A_list.size(); ++j)
      if (meet_dim(A_list[i], A_list[j]) != 0)
        fail(Errc::NotPairwiseSkew, "witness spaces " + std::to_string(i) + " and " +
                                        std::to_string(j) + " meet");

  int64_t count = 0;
  for (const Subspace& B : u.bspaces()) {
    bool all = true;
    for (const Subspace& A : A_list)
      if (meet_dim(B, A) < 1) { all = false; break; }
    if (all) ++count;
  }
  return count;
}

SkewToReport count_flags_skew_to(const FlagFamily& F, const Subspace& B) {
  const FlagUniverse& u = F.universe();
  const ProjSpace& ps = u.ps();
  if (B.ambient() != ps.ambient() || B.field().q() != ps.q)
    fail(Errc::AmbientMismatch, "B must live in GF(q)^" + std::to_string(ps.ambient()));
  if (B.dim() != ps.n + 1)
    fail(Errc::WrongDimension, "B must be an n-space (vector dimension " +
                                   std::to_string(ps.n + 1) + ")");
  int bi = u.b_index(B);
  SkewToReport rep;
  if (bi >= 0)
    for (int v : F.members())
      if (u.b_of(v) == bi) ++rep.weight;
  if (rep.weight == 0)
    fail(Errc::SpaceNotInFamily, "no member flag contains " + B.serialize());

  u.ensure_skew_tables();
  std::set<int> distinct;
  for (int v : F.members())
    if (u.skew_ab(u.a_of(v), bi)) distinct.insert(u.b_of(v));
  rep.distinct_b = int64_t(distinct.size());
  rep.color = classify_space_weight(F, B).color;
  return rep;
}

}  // namespace flaglab
