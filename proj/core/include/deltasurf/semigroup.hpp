#pragma once

#include <cstddef>
#include <vector>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/integer.hpp"

namespace deltasurf {

// Additive submonoid of N generated by positive integers whose gcd (the
// content) may exceed 1.  Membership is decided exactly: x belongs iff the
// content divides x and x/content lies in the normalized numerical semigroup,
// tested against its Apery set.
class SubSemigroup {
 public:
  explicit SubSemigroup(IntSequence generators);

  const IntSequence& generators() const { return gens_; }
  const Int& content() const { return content_; }
  bool contains(const Int& x) const;

 private:
  IntSequence gens_;        // deduplicated, ascending
  Int content_;
  IntSequence normalized_;  // gens_ / content_
  std::vector<Int> apery_;  // indexed by residue mod normalized multiplicity
};

// Numerical semigroup (content 1) with its canonical derived data.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(const IntSequence& generators);

  const IntSequence& minimal_generators() const { return minimal_; }
  const Int& multiplicity() const { return multiplicity_; }
  // apery()[r] is the least element congruent to r mod multiplicity().
  const std::vector<Int>& apery() const { return apery_; }
  const Int& frobenius() const { return frobenius_; }
  const Int& genus() const { return genus_; }
  bool contains(const Int& x) const;

 private:
  NumericalSemigroup() = default;

  IntSequence minimal_;
  Int multiplicity_;
  std::vector<Int> apery_;
  Int frobenius_;
  Int genus_;
};

// Least member of each residue class mod the smallest generator; generators
// must be positive with gcd 1.  Shortest-path relaxation over residues.
std::vector<Int> apery_set(const IntSequence& normalized_generators);

// The unique minimal generating set of <generators> (gcd must be 1).
IntSequence minimal_generators(const IntSequence& generators);

// Equality of generated semigroups, decided by minimal generating sets.
bool semigroups_equal(const IntSequence& a, const IntSequence& b);

// Whether the elements of d are a minimal generating set of S_d.  For g >= 2
// the factor-form criterion (a_i != a_{i-1} and a_i != a_l * prod n_k) and the
// direct minimal-generator computation are both evaluated and must agree.
bool is_mg_delta(const DeltaSequence& d);

}  // namespace deltasurf
