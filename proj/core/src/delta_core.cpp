#include "deltasurf/delta_core.hpp"

#include <utility>

#include "deltasurf/error.hpp"
#include "deltasurf/semigroup.hpp"

namespace deltasurf {

std::vector<Int> DNProfile::display_n() const {
  if (n.size() == 1) return {Int(1)};
  return std::vector<Int>(n.begin() + 1, n.end());
}

DNProfile compute_profile(const IntSequence& seq) {
  if (seq.empty()) fail("empty_sequence", "a sequence must contain at least one entry");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] <= 0) {
      fail("nonpositive_entry",
           "entry " + seq[k].str() + " at index " + std::to_string(k) + " is not positive");
    }
  }
  DNProfile p;
  p.d.reserve(seq.size());
  Int running = 0;
  for (const Int& v : seq) {
    running = gcd(running, v);
    p.d.push_back(running);
  }
  p.n.reserve(seq.size());
  p.n.push_back(1);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    p.n.push_back(p.d[i - 1] / p.d[i]);
  }
  return p;
}

DeltaSequence::ValidationOutcome DeltaSequence::validate(const IntSequence& seq) {
  DNProfile profile = compute_profile(seq);
  const std::size_t g = seq.size() - 1;

  ValidationReport report;
  auto record = [&report](int condition, std::size_t index, std::string detail) {
    for (const auto& v : report.violations) {
      if (v.condition == condition) return;  // first failing index per condition
    }
    report.violations.push_back({condition, index, std::move(detail)});
  };

  // (1) d_{g+1} = 1 and n_i > 1.
  for (std::size_t i = 1; i <= g; ++i) {
    if (profile.n_at(i) == 1) {
      record(1, i, "n_" + std::to_string(i) + " = 1");
      break;
    }
  }
  if (profile.d_at(g + 1) != 1) {
    record(1, g, "d_" + std::to_string(g + 1) + " = " + profile.d_at(g + 1).str() + " != 1");
  }

  // (3) delta_i < n_{i-1} * delta_{i-1}.
  for (std::size_t i = 1; i <= g; ++i) {
    Int bound = profile.n_at(i - 1) * seq[i - 1];
    if (seq[i] >= bound) {
      record(3, i,
             "delta_" + std::to_string(i) + " = " + seq[i].str() + " >= n_" +
                 std::to_string(i - 1) + "*delta_" + std::to_string(i - 1) + " = " + bound.str());
      break;
    }
  }

  // (2) n_i * delta_i in <delta_0, ..., delta_{i-1}>.
  for (std::size_t i = 1; i <= g; ++i) {
    IntSequence prefix(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
    SubSemigroup prefix_semigroup(std::move(prefix));
    Int value = profile.n_at(i) * seq[i];
    if (!prefix_semigroup.contains(value)) {
      record(2, i,
             "n_" + std::to_string(i) + "*delta_" + std::to_string(i) + " = " + value.str() +
                 " is not in the prefix semigroup");
      break;
    }
  }

  if (!report.ok()) return {std::nullopt, std::move(report)};

  bool principal = true;
  bool degenerate = true;  // the trivial sequence carries both flags by convention
  if (g >= 1) {
    principal = seq[0] % seq[1] == 0;
    degenerate = seq[0] % (seq[0] - seq[1]) == 0;
  }
  return {DeltaSequence(seq, std::move(profile), principal, degenerate), std::move(report)};
}

DeltaSequence DeltaSequence::require(const IntSequence& seq) {
  auto outcome = validate(seq);
  if (!outcome.ok()) {
    std::string what = "sequence (" + to_string(seq) + ") is not a delta-sequence:";
    for (const auto& v : outcome.report.violations) {
      what += " [condition " + std::to_string(v.condition) + "] " + v.detail + ";";
    }
    fail("not_delta_sequence", what);
  }
  return *std::move(outcome.sequence);
}

FactorForm to_factor_form(const DeltaSequence& d) {
  const std::size_t g = d.g();
  const DNProfile& p = d.profile();
  FactorForm form;
  form.n = p.n;
  form.a.reserve(g + 1);
  for (std::size_t i = 0; i <= g; ++i) {
    // prod_{j > i} n_j equals d_{i+1} because d_{g+1} = 1.
    const Int& tail = (i == g) ? p.d_at(g + 1) : p.d_at(i + 1);
    form.a.push_back(d[i] / tail);
  }
  return form;
}

DeltaSequence from_factor_form(const FactorForm& form) {
  if (form.n.size() != form.a.size() || form.n.empty()) {
    fail("factor_form_shape", "the n and a sequences must be nonempty and equally long");
  }
  const std::size_t g = form.n.size() - 1;
  if (form.n[0] != 1 || form.a[0] != 1) {
    fail("factor_form_head", "n_0 and a_0 must both equal 1");
  }
  for (std::size_t i = 1; i <= g; ++i) {
    if (form.n[i] <= 1) {
      fail("factor_form_n", "n_" + std::to_string(i) + " = " + form.n[i].str() + " must exceed 1");
    }
    if (form.a[i] <= 0) {
      fail("factor_form_a", "a_" + std::to_string(i) + " must be positive");
    }
    if (gcd(form.n[i], form.a[i]) != 1) {
      fail("factor_form_coprime",
           "gcd(n_" + std::to_string(i) + ", a_" + std::to_string(i) + ") = " +
               gcd(form.n[i], form.a[i]).str() + " != 1");
    }
    Int bound = form.n[i] * form.n[i - 1] * form.a[i - 1];
    if (form.a[i] >= bound) {
      fail("factor_form_bound",
           "a_" + std::to_string(i) + " = " + form.a[i].str() + " >= n_" + std::to_string(i) +
               "*n_" + std::to_string(i - 1) + "*a_" + std::to_string(i - 1) + " = " + bound.str());
    }
  }
  // a_i must lie in the semigroup generated by a_{i-1} and the scaled earlier
  // values a_l * n_{l+1} * ... * n_{i-1}; those values are rebuilt on the fly.
  for (std::size_t i = 2; i <= g; ++i) {
    IntSequence gens;
    gens.reserve(i);
    for (std::size_t l = 0; l + 1 <= i - 1; ++l) {
      Int scaled = form.a[l];
      for (std::size_t j = l + 1; j <= i - 1; ++j) scaled *= form.n[j];
      gens.push_back(std::move(scaled));
    }
    gens.push_back(form.a[i - 1]);
    if (!SubSemigroup(std::move(gens)).contains(form.a[i])) {
      fail("factor_form_membership",
           "a_" + std::to_string(i) + " = " + form.a[i].str() +
               " is not in the semigroup of the earlier scaled values");
    }
  }
  IntSequence seq;
  seq.reserve(g + 1);
  for (std::size_t i = 0; i <= g; ++i) {
    Int v = form.a[i];
    for (std::size_t j = i + 1; j <= g; ++j) v *= form.n[j];
    seq.push_back(std::move(v));
  }
  return DeltaSequence::require(seq);
}

}  // namespace deltasurf
