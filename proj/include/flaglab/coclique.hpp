#pragma once

#include <optional>
#include <random>

#include "flaglab/projspace.hpp"

namespace flaglab {

/// A set of flags given by vertex indices into the universe enumeration.
/// Indices are kept sorted; membership is O(1) via a bitset.
class FlagFamily {
 public:
  FlagFamily(std::shared_ptr<const FlagUniverse> u, std::vector<int> indices);

  const FlagUniverse& universe() const { return *u_; }
  std::shared_ptr<const FlagUniverse> universe_ptr() const { return u_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return int(members_.size()); }
  bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }
  const std::vector<uint64_t>& member_bits() const { return bits_; }

 private:
  std::shared_ptr<const FlagUniverse> u_;
  std::vector<int> members_;
  std::vector<uint64_t> bits_;
};

/// Lowest violating pair (opposite members), or nullopt when F is a
/// coclique. Deterministic regardless of thread count.
std::optional<std::pair<int, int>> coclique_violation(const FlagFamily& F, int threads = 1);

inline bool is_coclique(const FlagFamily& F, int threads = 1) {
  return !coclique_violation(F, threads).has_value();
}

struct MaximalityResult {
  bool maximal = false;
  int addable = -1;  // lowest-index flag non-opposite to every member, when not maximal
};

/// Scans every flag outside F. Throws NotACoclique when F has an opposite
/// pair. Deterministic regardless of thread count.
MaximalityResult is_maximal_coclique(const FlagFamily& F, int threads = 1);

/// Adds the lowest-index compatible flag until none remains. Deterministic;
/// the result is a maximal coclique containing F.
FlagFamily greedy_closure(const FlagFamily& F);

/// Seeded variant: each step picks uniformly among the compatible flags.
FlagFamily random_closure(const FlagFamily& F, uint64_t seed);

/// Member-wise image under flag duality (also a coclique; maximality is
/// preserved because duality is an automorphism of opposition).
FlagFamily dualize_family(const FlagFamily& F);

// ---------------------------------------------------------------- Example 1

enum class Variant { a_i, a_ii, b_i, b_ii };

const char* variant_name(Variant v);
std::optional<Variant> variant_parse(const std::string& s);

/// The two anchors of an extremal construction:
///   a_i : anchor1 = hyperplane H (k=2n),  anchor2 = point X in H (k=1)
///   a_ii: anchor1 = hyperplane H,         anchor2 = (2n-2)-space X in H (k=2n-1)
///   b_i : anchor1 = point P (k=1),        anchor2 = hyperplane X through P (k=2n)
///   b_ii: anchor1 = point P,              anchor2 = line X through P (k=2)
struct ConstructionSpec {
  Variant variant;
  Subspace anchor1, anchor2;
};

/// Throws SpecIncidenceViolation unless dimensions and incidences hold.
void validate_construction(const ConstructionSpec& spec, const ProjSpace& ps);

/// Exactly the flags (A,B) with, for a-variants, B ⊆ H or A incident with
/// X and H; for b-variants, P ⊆ A or B incident with X and P.
FlagFamily build_example(std::shared_ptr<const FlagUniverse> u, const ConstructionSpec& spec);

/// Seeded random anchors of the right shape for the variant.
ConstructionSpec random_construction(const ProjSpace& ps, Variant v, uint64_t seed);

/// Uniform-ish random k-subspace helpers (deterministic per rng state).
Subspace random_subspace(const Field& f, int d, int k, std::mt19937_64& rng);
Subspace random_subspace_inside(const Subspace& S, int k, std::mt19937_64& rng);
Subspace random_subspace_containing(const Subspace& S, int k, std::mt19937_64& rng);

}  // namespace flaglab
