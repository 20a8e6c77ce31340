#include "flaglab/weights.hpp"

#include <algorithm>

#include "flaglab/qcount.hpp"

namespace flaglab {

const char* color_name(SpaceColor c) {
  switch (c) {
    case SpaceColor::Unused: return "unused";
    case SpaceColor::Yellow: return "yellow";
    case SpaceColor::Red: return "red";
    case SpaceColor::OffRange: return "off-range";
  }
  return "?";
}

namespace {

// gauss(k,1,q) fits comfortably in int64 for desk-scale parameters.
int64_t pencil_size(int k, int q) {
  int64_t v = 0, pw = 1;
  for (int i = 0; i < k; ++i) {
    v += pw;
    pw *= q;
  }
  return v;
}

struct Spectrum {
  int n, q;
  int64_t red_count;     // gauss(n+1,1)
  int64_t yellow_max;    // gauss(n,1)

  explicit Spectrum(const ProjSpace& ps)
      : n(ps.n), q(ps.q), red_count(pencil_size(ps.n + 1, ps.q)),
        yellow_max(pencil_size(ps.n, ps.q)) {}

  int k_of(int64_t count) const {
    for (int k = 1; k <= n + 1; ++k)
      if (pencil_size(k, q) == count) return k;
    return 0;
  }
  SpaceColor color_of(int64_t count) const {
    if (count == 0) return SpaceColor::Unused;
    if (count == red_count) return SpaceColor::Red;
    if (count <= yellow_max) return SpaceColor::Yellow;
    return SpaceColor::OffRange;
  }
};

// Core of an n-space B: for every member (A',B') with A' skew to B, the
// meet B ∩ B' is a single point (A' is a hyperplane of B' missing it);
// any member flag through B must contain their span.
std::optional<Subspace> b_side_core(const FlagFamily& F, const Subspace& B) {
  const FlagUniverse& u = F.universe();
  std::optional<Subspace> core;
  for (int v : F.members()) {
    const Subspace& Ap = u.aspaces()[u.a_of(v)];
    if (meet_dim(Ap, B) != 0) continue;
    Subspace p = meet(B, u.bspaces()[u.b_of(v)]);
    core = core ? join(*core, p) : p;
  }
  return core;
}

}  // namespace

WeightReport classify_space_weight(const FlagFamily& F, const Subspace& S) {
  const FlagUniverse& u = F.universe();
  const ProjSpace& ps = u.ps();
  if (S.ambient() != ps.ambient() || S.field().q() != ps.q)
    fail(Errc::AmbientMismatch, "space must live in GF(" + std::to_string(ps.q) + ")^" +
                                    std::to_string(ps.ambient()));
  Spectrum spec(ps);
  WeightReport rep;
  rep.space = S;

  if (S.dim() == ps.n + 1) {
    int bi = u.b_index(S);
    if (bi >= 0)
      for (int v : F.members())
        if (u.b_of(v) == bi) ++rep.count;
    rep.core = b_side_core(F, S);
  } else if (S.dim() == ps.n) {
    int ai = u.a_index(S);
    if (ai >= 0)
      for (int v : F.members())
        if (u.a_of(v) == ai) ++rep.count;
    // dual computation: complement, run the B-side rule on the dual family
    FlagFamily dual = dualize_family(F);
    auto dual_core = b_side_core(dual, ortho_complement(S));
    if (dual_core) rep.core = ortho_complement(*dual_core);
  } else {
    fail(Errc::WrongDimension, "expected an n-space (k=" + std::to_string(ps.n + 1) +
                                   ") or an (n-1)-space (k=" + std::to_string(ps.n) +
                                   "), got k=" + std::to_string(S.dim()));
  }

  rep.k = spec.k_of(rep.count);
  rep.color = spec.color_of(rep.count);
  return rep;
}

ColorMap color_map(const FlagFamily& F) {
  const FlagUniverse& u = F.universe();
  Spectrum spec(u.ps());
  std::vector<int64_t> cb(u.bspaces().size(), 0), ca(u.aspaces().size(), 0);
  for (int v : F.members()) {
    ++ca[u.a_of(v)];
    ++cb[u.b_of(v)];
  }
  ColorMap cm;
  auto place = [&](int idx, int64_t count, bool b_side) {
    if (count == 0) return;
    if (spec.k_of(count) == 0) {
      const Subspace& s = b_side ? u.bspaces()[idx] : u.aspaces()[idx];
      fail(Errc::NonMaximalWeightSpectrum,
           "space " + s.serialize() + " occurs in " + std::to_string(count) +
               " flags, which is not gauss(k,1) for any k (family is not a maximal coclique)");
    }
    auto& dst = count == spec.red_count ? (b_side ? cm.red_b : cm.red_a)
                                        : (b_side ? cm.yellow_b : cm.yellow_a);
    dst.emplace_back(idx, count);
  };
  for (size_t i = 0; i < cb.size(); ++i) place(int(i), cb[i], true);
  for (size_t i = 0; i < ca.size(); ++i) place(int(i), ca[i], false);
  return cm;
}

bool red_intersection_check(const FlagFamily& F) {
  return red_intersection_check(F, color_map(F));
}

bool red_intersection_check(const FlagFamily& F, const ColorMap& cm) {
  const FlagUniverse& u = F.universe();
  // red (n-1)-spaces pairwise meet
  for (size_t i = 0; i < cm.red_a.size(); ++i)
    for (size_t j = i + 1; j < cm.red_a.size(); ++j)
      if (meet_dim(u.aspaces()[cm.red_a[i].first], u.aspaces()[cm.red_a[j].first]) < 1)
        return false;
  // red n-spaces are never in general position: meet in >= a line
  for (size_t i = 0; i < cm.red_b.size(); ++i)
    for (size_t j = i + 1; j < cm.red_b.size(); ++j)
      if (meet_dim(u.bspaces()[cm.red_b[i].first], u.bspaces()[cm.red_b[j].first]) < 2)
        return false;
  return true;
}

}  // namespace flaglab
