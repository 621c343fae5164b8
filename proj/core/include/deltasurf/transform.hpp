#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/integer.hpp"

namespace deltasurf {

// Indices 0 <= i < j <= g with delta_i = n_j * delta_j.
struct MultiplePair {
  std::size_t i;
  std::size_t j;
};

// All multiple pairs, ordered j descending then i descending (the rightmost
// multiple is attacked first; ties by larger i).
std::vector<MultiplePair> find_multiples(const DeltaSequence& d);

// Removal-theorem hypothesis: vacuous when j = g, otherwise
// delta_{j+1} < n_{j-1} * delta_{j-1}.
bool removal_hypothesis_holds(const DeltaSequence& d, MultiplePair pair);

// The raw removal recipe: replace delta_i by delta_j and drop position j;
// when i = 0 and delta_j < delta_1 the first two entries are swapped.
IntSequence removal_recipe(const DeltaSequence& d, MultiplePair pair);

// Hypothesis holds and the recipe yields a delta-sequence.  The second check
// matters for the pair (0, 1): removing delta_0 = n_1*delta_1 shifts delta_2
// to the second slot, and delta_2 < delta_1 is not implied by the hypothesis
// ((4,2,3) is the smallest sequence where it fails).
bool removal_applicable(const DeltaSequence& d, MultiplePair pair);

// Removes the multiple delta_i = n_j * delta_j.  Requires the hypothesis
// (code "removal_hypothesis") and a valid result (code "removal_invalid");
// the result generates the same semigroup.
DeltaSequence shorten(const DeltaSequence& d, MultiplePair pair);

// d'/n'-sequences of the removal recipe predicted case-by-case without
// recomputing gcds (i >= 1; i = 0 split by principality and delta_1 vs delta_j).
DNProfile predict_profile(const DeltaSequence& d, MultiplePair pair);

enum class RefinementKind {
  prepend_multiple,     // (alpha*delta_0, delta_0, ...), the infinite family
  prepend_nonmultiple,  // new first element that is not a multiple of delta_0
  insert_interior,      // insertion between two existing entries
};

const char* to_string(RefinementKind k);

struct RefinementCertificate {
  DeltaSequence child;
  Int inserted_value;
  std::size_t insertion_position;  // 0 = prepend
  RefinementKind kind;
};

struct RefinementSet {
  // Finite part: every order-one refinement with the same semigroup whose new
  // first element is not a multiple of delta_0, plus all interior insertions.
  std::vector<RefinementCertificate> certificates;
  // (alpha*delta_0, delta_0, ..., delta_g) works for every alpha > 1; the
  // family is infinite and reported symbolically instead of being enumerated.
  bool prepend_multiple_family = true;
};

// Complete finite list of order-one same-semigroup refinements.  Candidates
// are beta = t * delta_j with t > 1 a divisor of n_j; each one is verified by
// validation plus semigroup equality.
RefinementSet refine_order_one(const DeltaSequence& d);

// (alpha*delta_0, delta_0, ..., delta_g); valid and semigroup-preserving for
// every alpha >= 2.
DeltaSequence prepend_multiple(const DeltaSequence& d, const Int& alpha);

enum class InsertionReject {
  none,
  element_in_prefix_semigroup,  // chain value already in <delta_0..delta_r>
  gcd_ladder_broken,            // prefix gcds fail the divisibility ladder
  bound_exceeded,               // a chain value violates its condition-(3) bound
  not_delta_sequence,           // interleaved sequence fails validation
  semigroup_changed,            // valid, but the generated semigroup grew
};

const char* to_string(InsertionReject r);

struct InsertionOutcome {
  InsertionReject reject = InsertionReject::none;
  // The accepted sequence, or (for semigroup_changed) the valid-but-rejected one.
  std::optional<DeltaSequence> sequence;
  std::string detail;
  bool ok() const { return reject == InsertionReject::none; }
};

// Insert a chain between delta_r and delta_{r+1}; fast rejections first, then
// full validation and the semigroup-preservation check.  The gcd ladder
// restricts to chains whose running prefix gcds interleave the parent's
// d-sequence (d_{r+2} | ... | d_{r+1}); order-one refinements outside that
// ladder are found by refine_order_one instead.
InsertionOutcome insert_chain(const DeltaSequence& d, std::size_t r, const IntSequence& chain);

struct NestedChain {
  std::vector<DeltaSequence> sequences;  // Delta_0, Delta_1, ... (order-one steps)
};

// All maximal chains of order-one refinements with constant semigroup in which
// no first element is a multiple of its predecessor's first element.
std::vector<NestedChain> nested_families(const DeltaSequence& d);

struct SearchBudget {
  std::size_t max_permutations = 50000;  // per rearrangement / deletion round
  std::size_t max_candidates = 200000;   // certification candidate orderings
  std::optional<Int> element_bound;      // default: max element of the input
};

enum class SearchStatus { reduced, no_reduction_found, certified_primitive };

const char* to_string(SearchStatus s);

enum class TrailStepKind {
  remove_multiple,     // removal theorem applied directly
  rearrange_suffix,    // suffix permuted, then the theorem applied
  delete_and_permute,  // multiple deleted outright, remainder re-ordered
  multiple_blocked,    // multiple could not be removed by any move
};

const char* to_string(TrailStepKind k);

struct TrailStep {
  TrailStepKind kind;
  MultiplePair pair;
  IntSequence before;
  IntSequence after;  // empty for multiple_blocked
  std::string note;
};

struct PrimitiveSearchResult {
  DeltaSequence sequence;
  SearchStatus status;
  std::vector<TrailStep> trail;
  std::string certification;  // what the primitivity claim rests on
};

// Greedy shortening, suffix rearrangement, outright deletion with re-ordering,
// then a bounded exhaustive check that no shorter delta-sequence generates the
// same semigroup.
PrimitiveSearchResult primitive_search(const DeltaSequence& d, const SearchBudget& budget = {});

// Number of elements added if parent embeds into child as an order-preserving
// subsequence, nullopt otherwise.
std::optional<std::size_t> refinement_order(const DeltaSequence& parent,
                                            const DeltaSequence& child);

// Literal evaluation of the order-one refinement characterization (prepend and
// interior cases) for cross-validation against validate + semigroup equality.
// child is parent with one value inserted at insert_pos.
bool refinement_theorem_conditions(const DeltaSequence& parent, const IntSequence& child,
                                   std::size_t insert_pos);

}  // namespace deltasurf
