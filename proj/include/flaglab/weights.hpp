#pragma once

#include <optional>

#include "flaglab/coclique.hpp"

namespace flaglab {

/// Red: the space occurs in gauss(n+1,1) member flags (the maximum).
/// Yellow: between 1 and gauss(n,1). OffRange: a positive count strictly
/// between the yellow ceiling and red (never happens for maximal cocliques).
enum class SpaceColor { Unused, Yellow, Red, OffRange };

const char* color_name(SpaceColor c);

struct WeightReport {
  Subspace space;
  int64_t count = 0;
  /// count == gauss(k,1,q); 0 when the count is not on the spectrum.
  int k = 0;
  /// For an n-space B with some member A' skew to it: the span of the
  /// forced points B ∩ B' over those members (every flag (A,B) must then
  /// have core ⊆ A). For an (n-1)-space the dual constraint: an overspace
  /// with B ⊆ core for every member through A. Absent when the count is
  /// the red maximum.
  std::optional<Subspace> core;
  SpaceColor color = SpaceColor::Unused;
};

/// Per-space flag count, the forced core subspace, and the color. S must
/// be an n-space (k = n+1) or an (n-1)-space (k = n) of the right ambient.
WeightReport classify_space_weight(const FlagFamily& F, const Subspace& S);

/// Full partition of the spaces occurring in F's flags, by index into the
/// universe enumerations, ascending. Throws NonMaximalWeightSpectrum when
/// some positive count is not gauss(k,1) for any k (which certifies F is
/// not a maximal coclique), naming the offending space.
struct ColorMap {
  std::vector<std::pair<int, int64_t>> red_b, yellow_b;  // n-spaces
  std::vector<std::pair<int, int64_t>> red_a, yellow_a;  // (n-1)-spaces
};

ColorMap color_map(const FlagFamily& F);

/// Any two red (n-1)-spaces meet; any two red n-spaces meet in at least a
/// projective line (vector dimension >= 2).
bool red_intersection_check(const FlagFamily& F);
bool red_intersection_check(const FlagFamily& F, const ColorMap& cm);

}  // namespace flaglab
