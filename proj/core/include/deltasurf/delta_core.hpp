#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltasurf/integer.hpp"

namespace deltasurf {

// Prefix-gcd data of a sequence (delta_0, ..., delta_g):
//   d_k = gcd(delta_0, ..., delta_{k-1})   for k = 1..g+1,
//   n_i = d_i / d_{i+1}                    for i = 1..g, with n_0 = 1.
struct DNProfile {
  std::vector<Int> d;  // d[k-1] holds d_k
  std::vector<Int> n;  // n[i] holds n_i, n[0] == 1

  const Int& d_at(std::size_t k) const { return d.at(k - 1); }  // 1-based
  const Int& n_at(std::size_t i) const { return n.at(i); }      // 0-based

  // The n-sequence in its customary printed form: (n_1, ..., n_g), and (1)
  // for the one-element sequence whose n-sequence is just the appended n_0.
  std::vector<Int> display_n() const;
};

DNProfile compute_profile(const IntSequence& seq);

struct ConditionViolation {
  int condition;      // 1, 2 or 3
  std::size_t index;  // first failing index for that condition
  std::string detail;
};

struct ValidationReport {
  std::vector<ConditionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// A validated delta-sequence: positive integers (delta_0, ..., delta_g) with
//   (1) d_{g+1} = 1 and n_i > 1 for every i in 1..g,
//   (2) n_i * delta_i in <delta_0, ..., delta_{i-1}> for every i in 1..g,
//   (3) delta_i < n_{i-1} * delta_{i-1} for every i in 1..g.
// The one-element sequence (1) is the trivial delta-sequence.
class DeltaSequence {
 public:
  struct ValidationOutcome;  // defined below; carries the sequence or a report

  static ValidationOutcome validate(const IntSequence& seq);

  // Validate-or-throw, for places where validity is guaranteed by a theorem.
  static DeltaSequence require(const IntSequence& seq);

  const IntSequence& values() const { return values_; }
  const DNProfile& profile() const { return profile_; }
  bool principal() const { return principal_; }
  bool degenerate() const { return degenerate_; }

  std::size_t g() const { return values_.size() - 1; }
  std::size_t size() const { return values_.size(); }
  bool trivial() const { return values_.size() == 1 && values_[0] == 1; }
  const Int& operator[](std::size_t i) const { return values_[i]; }
  const Int& front() const { return values_.front(); }
  const Int& back() const { return values_.back(); }

  friend bool operator==(const DeltaSequence& a, const DeltaSequence& b) {
    return a.values_ == b.values_;
  }
  friend bool operator<(const DeltaSequence& a, const DeltaSequence& b) {
    return a.values_ < b.values_;
  }

 private:
  DeltaSequence(IntSequence values, DNProfile profile, bool principal, bool degenerate)
      : values_(std::move(values)),
        profile_(std::move(profile)),
        principal_(principal),
        degenerate_(degenerate) {}

  IntSequence values_;
  DNProfile profile_;
  bool principal_;
  bool degenerate_;
};

struct DeltaSequence::ValidationOutcome {
  std::optional<DeltaSequence> sequence;
  ValidationReport report;
  bool ok() const { return sequence.has_value(); }
};

using ValidationOutcome = DeltaSequence::ValidationOutcome;

// Factor form of a delta-sequence: delta_i = a_i * n_{i+1} * ... * n_g with
// n_0 = a_0 = 1, n_i > 1, gcd(n_i, a_i) = 1, a_i < n_i * n_{i-1} * a_{i-1},
// and a_i (i >= 2) in the semigroup generated by a_{i-1} and the values
// a_l * n_{l+1} * ... * n_{i-1}.
struct FactorForm {
  std::vector<Int> n;  // index 0..g, n[0] == 1
  std::vector<Int> a;  // index 0..g, a[0] == 1
};

FactorForm to_factor_form(const DeltaSequence& d);

// Rebuilds the sequence; throws DomainError naming the violated constraint.
DeltaSequence from_factor_form(const FactorForm& form);

}  // namespace deltasurf
