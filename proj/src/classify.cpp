#include "flaglab/classify.hpp"

#include <algorithm>

namespace flaglab {

const char* category_name(Category c) {
  switch (c) {
    case Category::A: return "A";
    case Category::B: return "B";
    case Category::C: return "C";
  }
  return "?";
}

namespace {

// Members whose partner space on the other side is yellow: for a-variants
// the A-parts of flags with yellow B, for b-variants the B-parts of flags
// with yellow A. Their common meet or join recovers X.
std::vector<int> yellow_side_parts(const FlagFamily& F, const ColorMap& cm, bool b_yellow) {
  const FlagUniverse& u = F.universe();
  std::vector<char> yellow(b_yellow ? u.bspaces().size() : u.aspaces().size(), 0);
  for (auto& [idx, cnt] : (b_yellow ? cm.yellow_b : cm.yellow_a)) yellow[idx] = 1;
  std::vector<int> parts;
  for (int v : F.members()) {
    if (b_yellow) {
      if (yellow[u.b_of(v)]) parts.push_back(u.a_of(v));
    } else {
      if (yellow[u.a_of(v)]) parts.push_back(u.b_of(v));
    }
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return parts;
}

bool equal_members(const FlagFamily& x, const FlagFamily& y) {
  return x.members() == y.members();
}

std::optional<TrichotomyReport> try_rebuild(const FlagFamily& F, Variant var,
                                            const Subspace& anchor1, const Subspace& anchor2,
                                            TrichotomyReport base) {
  ConstructionSpec spec{var, anchor1, anchor2};
  try {
    validate_construction(spec, F.universe().ps());
  } catch (const Error&) {
    return std::nullopt;
  }
  FlagFamily rebuilt = build_example(F.universe_ptr(), spec);
  if (!equal_members(rebuilt, F)) return std::nullopt;
  base.category = Category::A;
  base.variant = var;
  base.anchor1 = anchor1;
  base.anchor2 = anchor2;
  return base;
}

// All flags (A,B) with B ⊆ H are members? (flags are grouped by B, so walk
// each contained B's contiguous block)
bool hyperplane_saturated(const FlagFamily& F, const Subspace& H) {
  const FlagUniverse& u = F.universe();
  const auto& flags = u.flags();
  const int nb = int(u.bspaces().size());
  for (int bi = 0; bi < nb; ++bi) {
    if (!contains(H, u.bspaces()[bi])) continue;
    auto lo = std::lower_bound(flags.begin(), flags.end(),
                               std::make_pair(INT32_C(0), int32_t(bi)),
                               [](const auto& f, const auto& key) { return f.second < key.second; });
    for (auto it = lo; it != flags.end() && it->second == bi; ++it)
      if (!F.contains(int(it - flags.begin()))) return false;
  }
  return true;
}

// All flags (A,B) with P ⊆ A are members?
bool point_saturated(const FlagFamily& F, const Subspace& P) {
  const FlagUniverse& u = F.universe();
  const auto& flags = u.flags();
  const int na = int(u.aspaces().size());
  std::vector<char> through(na, 0);
  for (int ai = 0; ai < na; ++ai) through[ai] = contains(u.aspaces()[ai], P);
  for (int v = 0; v < int(flags.size()); ++v)
    if (through[flags[v].first] && !F.contains(v)) return false;
  return true;
}

}  // namespace

TrichotomyReport classify_maximal_coclique(const FlagFamily& F, int threads,
                                           bool assume_maximal) {
  const FlagUniverse& u = F.universe();
  const ProjSpace& ps = u.ps();
  const long n = ps.n, q = ps.q;

  if (!assume_maximal) {
    MaximalityResult mr = is_maximal_coclique(F, threads);  // throws NotACoclique
    if (!mr.maximal)
      fail(Errc::NotMaximal, "flag " + std::to_string(mr.addable) +
                                 " is non-opposite to every member and can be added");
  }

  TrichotomyReport rep;
  rep.size = F.size();
  rep.bound_a = example_family_size(n, q);
  if (n == 3 || (n >= 4 && q >= 4))
    rep.bound_b = gauss(2 * n, n - 1, q) * gauss(n + 1, 1, q) + f_bound(n, q) * q_pow(q, n);

  ColorMap cm = color_map(F);

  // a-variants: the red n-spaces of an extremal family are exactly the
  // n-spaces of a hyperplane H; X is the meet (a_i) or join (a_ii) of the
  // A-parts of the flags with yellow B.
  if (!cm.red_b.empty()) {
    Subspace H = u.bspaces()[cm.red_b[0].first];
    for (size_t i = 1; i < cm.red_b.size() && H.dim() < ps.ambient(); ++i)
      H = join(H, u.bspaces()[cm.red_b[i].first]);
    if (H.dim() == 2 * n && BigInt(int64_t(cm.red_b.size())) == gauss(2 * n, n + 1, q)) {
      std::vector<int> parts = yellow_side_parts(F, cm, /*b_yellow=*/true);
      if (!parts.empty()) {
        Subspace meet_x = u.aspaces()[parts[0]];
        Subspace join_x = u.aspaces()[parts[0]];
        for (size_t i = 1; i < parts.size(); ++i) {
          if (meet_x.dim() > 0) meet_x = meet(meet_x, u.aspaces()[parts[i]]);
          if (join_x.dim() < ps.ambient()) join_x = join(join_x, u.aspaces()[parts[i]]);
        }
        if (meet_x.dim() == 1)
          if (auto r = try_rebuild(F, Variant::a_i, H, meet_x, rep)) return *r;
        if (join_x.dim() == 2 * n - 1)
          if (auto r = try_rebuild(F, Variant::a_ii, H, join_x, rep)) return *r;
      }
    }
  }

  // b-variants, dually: red (n-1)-spaces form the pencil through a point P;
  // X is the join (b_i) or meet (b_ii) of the B-parts of flags with yellow A.
  if (!cm.red_a.empty()) {
    Subspace P = u.aspaces()[cm.red_a[0].first];
    for (size_t i = 1; i < cm.red_a.size() && P.dim() > 0; ++i)
      P = meet(P, u.aspaces()[cm.red_a[i].first]);
    if (P.dim() == 1 && BigInt(int64_t(cm.red_a.size())) == gauss(2 * n, n - 1, q)) {
      std::vector<int> parts = yellow_side_parts(F, cm, /*b_yellow=*/false);
      if (!parts.empty()) {
        Subspace meet_x = u.bspaces()[parts[0]];
        Subspace join_x = u.bspaces()[parts[0]];
        for (size_t i = 1; i < parts.size(); ++i) {
          if (meet_x.dim() > 0) meet_x = meet(meet_x, u.bspaces()[parts[i]]);
          if (join_x.dim() < ps.ambient()) join_x = join(join_x, u.bspaces()[parts[i]]);
        }
        if (join_x.dim() == 2 * n)
          if (auto r = try_rebuild(F, Variant::b_i, P, join_x, rep)) return *r;
        if (meet_x.dim() == 2)
          if (auto r = try_rebuild(F, Variant::b_ii, P, meet_x, rep)) return *r;
      }
    }
  }

  // category B: a fully contributed hyperplane or point without the full
  // extremal structure
  const Field& f = Field::get(ps.q);
  for (const Subspace& H : enumerate_subspaces(f, ps.ambient(), 2 * ps.n)) {
    if (hyperplane_saturated(F, H)) {
      rep.category = Category::B;
      rep.anchor1 = H;
      rep.witness_is_hyperplane = true;
      return rep;
    }
  }
  for (const Subspace& P : enumerate_subspaces(f, ps.ambient(), 1)) {
    if (point_saturated(F, P)) {
      rep.category = Category::B;
      rep.anchor1 = P;
      rep.witness_is_hyperplane = false;
      return rep;
    }
  }

  rep.category = Category::C;
  return rep;
}

}  // namespace flaglab
