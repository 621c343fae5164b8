#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/integer.hpp"

namespace deltasurf {

// Gluing of two delta-sequences through alpha = mu * delta_0(right) and
// beta in S_left, coprime to alpha, with beta < mu * n_{g1}(left) * delta_{g1}.
// Result: (alpha*left_0, ..., alpha*left_{g1}, beta*right_0, ..., beta*right_{g2}).
// Each violated hypothesis raises a DomainError named after it.
DeltaSequence glue(const DeltaSequence& left, const DeltaSequence& right, const Int& mu,
                   const Int& beta);

// One step of the pair-construction algorithm: scale a delta-sequence by alpha
// and append beta.  Failures are values naming the failing check.
enum class Algorithm1Failure {
  none,
  alpha_not_greater_one,    // alpha <= 1
  common_factor,            // gcd(alpha, beta) > 1
  beta_outside_semigroup,   // beta not in S_delta
  bound_exceeded,           // beta >= n * alpha * delta_g
};

const char* to_string(Algorithm1Failure f);

struct Algorithm1Result {
  std::optional<DeltaSequence> sequence;
  Algorithm1Failure failure = Algorithm1Failure::none;
  std::string detail;
  bool ok() const { return sequence.has_value(); }
};

Algorithm1Result glue_trivial(const DeltaSequence& d, const Int& alpha, const Int& beta);

struct GluingStep {
  Int mu;     // the multiplier; against the trivial sequence alpha == mu
  Int alpha;  // mu * delta_0(right)
  Int beta;
};

// Every delta-sequence arises from a two-element seed (n_1, a_1) by repeated
// gluing against the trivial sequence with alpha = n_k, beta = a_k.
struct GluingDecomposition {
  DeltaSequence seed;
  std::vector<GluingStep> steps;
};

GluingDecomposition decompose(const DeltaSequence& d);

// Replays a decomposition through glue_trivial; a failing step is a defect.
DeltaSequence replay(const GluingDecomposition& decomposition);

// Ordered factorizations of n into factors > 1, in lexicographic order.
std::vector<std::vector<Int>> ordered_factorizations(const Int& n);

// The complete, duplicate-free, lexicographically sorted list of
// delta-sequences with first element delta0.  jobs > 1 fans the factorization
// branches out to that many workers; the output order does not change.
std::vector<DeltaSequence> enumerate_delta0(const Int& delta0, unsigned jobs = 1);

}  // namespace deltasurf
