#include "deltasurf/gluing.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <utility>

#include "deltasurf/error.hpp"
#include "deltasurf/semigroup.hpp"

namespace deltasurf {

DeltaSequence glue(const DeltaSequence& left, const DeltaSequence& right, const Int& mu,
                   const Int& beta) {
  if (mu < 2) fail("mu_too_small", "the gluing multiplier mu = " + mu.str() + " must be >= 2");
  if (beta <= 0) fail("beta_not_positive", "beta must be a positive integer");
  const Int alpha = mu * right.front();
  if (!SubSemigroup(left.values()).contains(beta)) {
    fail("beta_not_member",
         "beta = " + beta.str() + " is not in <" + to_string(left.values()) + ">");
  }
  if (gcd(alpha, beta) != 1) {
    fail("not_coprime", "gcd(alpha, beta) = gcd(" + alpha.str() + ", " + beta.str() + ") = " +
                            gcd(alpha, beta).str());
  }
  const Int bound = mu * left.profile().n_at(left.g()) * left.back();
  if (beta >= bound) {
    fail("bound_violation", "beta = " + beta.str() + " >= mu*n_g1*delta_g1 = " + bound.str());
  }
  IntSequence out;
  out.reserve(left.size() + right.size());
  for (const Int& v : left.values()) out.push_back(alpha * v);
  for (const Int& v : right.values()) out.push_back(beta * v);
  return DeltaSequence::require(out);
}

const char* to_string(Algorithm1Failure f) {
  switch (f) {
    case Algorithm1Failure::none: return "none";
    case Algorithm1Failure::alpha_not_greater_one: return "alpha_not_greater_one";
    case Algorithm1Failure::common_factor: return "common_factor";
    case Algorithm1Failure::beta_outside_semigroup: return "beta_outside_semigroup";
    case Algorithm1Failure::bound_exceeded: return "bound_exceeded";
  }
  return "unknown";
}

Algorithm1Result glue_trivial(const DeltaSequence& d, const Int& alpha, const Int& beta) {
  if (alpha <= 1) {
    return {std::nullopt, Algorithm1Failure::alpha_not_greater_one,
            "alpha = " + alpha.str() + " <= 1"};
  }
  if (gcd(alpha, beta) > 1) {
    return {std::nullopt, Algorithm1Failure::common_factor,
            "gcd(" + alpha.str() + ", " + beta.str() + ") = " + gcd(alpha, beta).str()};
  }
  if (beta <= 0 || !SubSemigroup(d.values()).contains(beta)) {
    return {std::nullopt, Algorithm1Failure::beta_outside_semigroup,
            "beta = " + beta.str() + " is not in <" + to_string(d.values()) + ">"};
  }
  // n := gcd(delta_0, ..., delta_{g-1}); the empty prefix of the trivial
  // sequence contributes n := 1, so the bound check reads beta < alpha.
  const Int n = d.g() == 0 ? Int(1) : d.profile().d_at(d.g());
  const Int bound = n * alpha * d.back();
  if (beta >= bound) {
    return {std::nullopt, Algorithm1Failure::bound_exceeded,
            "beta = " + beta.str() + " >= n*alpha*delta_g = " + bound.str()};
  }
  IntSequence out;
  out.reserve(d.size() + 1);
  for (const Int& v : d.values()) out.push_back(alpha * v);
  out.push_back(beta);
  return {DeltaSequence::require(out), Algorithm1Failure::none, ""};
}

GluingDecomposition decompose(const DeltaSequence& d) {
  if (d.trivial()) return {d, {}};
  const FactorForm form = to_factor_form(d);
  DeltaSequence seed = DeltaSequence::require({form.n[1], form.a[1]});
  std::vector<GluingStep> steps;
  steps.reserve(d.g() >= 1 ? d.g() - 1 : 0);
  for (std::size_t k = 2; k <= d.g(); ++k) {
    steps.push_back({form.n[k], form.n[k], form.a[k]});
  }
  return {std::move(seed), std::move(steps)};
}

DeltaSequence replay(const GluingDecomposition& decomposition) {
  DeltaSequence current = decomposition.seed;
  for (const GluingStep& step : decomposition.steps) {
    Algorithm1Result r = glue_trivial(current, step.alpha, step.beta);
    if (!r.ok()) {
      throw std::logic_error("replay: gluing step (alpha=" + step.alpha.str() +
                             ", beta=" + step.beta.str() + ") failed: " + r.detail);
    }
    current = *std::move(r.sequence);
  }
  return current;
}

std::vector<std::vector<Int>> ordered_factorizations(const Int& n) {
  if (n <= 0) fail("domain", "ordered_factorizations requires a positive integer");
  std::vector<std::vector<Int>> out;
  std::vector<Int> current;
  // Recursive descent over divisors in ascending order keeps the output
  // lexicographic.
  auto descend = [&](auto&& self, const Int& remaining) -> void {
    if (remaining == 1) {
      if (!current.empty()) out.push_back(current);
      return;
    }
    for (const Int& f : divisors(remaining)) {
      if (f == 1) continue;
      current.push_back(f);
      self(self, remaining / f);
      current.pop_back();
    }
  };
  descend(descend, n);
  return out;
}

namespace {

// Elements of <gens> in [1, bound), by a reachability sieve.
std::vector<Int> semigroup_elements_below(const IntSequence& gens, const Int& bound) {
  const std::size_t limit = to_index(bound, "enumeration bound");
  std::vector<char> member(limit, 0);
  if (limit > 0) member[0] = 1;
  std::vector<std::size_t> small;
  for (const Int& v : gens) {
    if (v < bound) small.push_back(v.convert_to<std::size_t>());
  }
  for (std::size_t v = 1; v < limit; ++v) {
    for (std::size_t s : small) {
      if (s <= v && member[v - s]) {
        member[v] = 1;
        break;
      }
    }
  }
  std::vector<Int> out;
  for (std::size_t v = 1; v < limit; ++v) {
    if (member[v]) out.push_back(Int(v));
  }
  return out;
}

// All choices of (a_1, ..., a_g) for a fixed n-sequence, per the factor-form
// characterization; emits the assembled delta-sequences.
void collect_for_factorization(const std::vector<Int>& n_seq, std::vector<DeltaSequence>& out) {
  const std::size_t g = n_seq.size();
  std::vector<Int> a(g + 1);
  a[0] = 1;
  std::vector<Int> n(g + 1);
  n[0] = 1;
  for (std::size_t i = 1; i <= g; ++i) n[i] = n_seq[i - 1];

  // gens(i) = values a_l * n_{l+1} ... n_{i-1} for l = 0..i-1; maintained
  // incrementally while descending.
  auto descend = [&](auto&& self, std::size_t i, const IntSequence& gens) -> void {
    if (i > g) {
      IntSequence seq(g + 1);
      for (std::size_t k = 0; k <= g; ++k) {
        Int v = a[k];
        for (std::size_t j = k + 1; j <= g; ++j) v *= n[j];
        seq[k] = std::move(v);
      }
      out.push_back(DeltaSequence::require(seq));
      return;
    }
    const Int bound = n[i] * n[i - 1] * a[i - 1];
    std::vector<Int> candidates;
    if (i == 1) {
      for (Int v = 1; v < bound; ++v) candidates.push_back(v);  // bound = n_1
    } else {
      candidates = semigroup_elements_below(gens, bound);
    }
    for (const Int& v : candidates) {
      if (gcd(v, n[i]) != 1) continue;
      a[i] = v;
      IntSequence next_gens;
      next_gens.reserve(gens.size() + 1);
      for (const Int& gval : gens) next_gens.push_back(gval * n[i]);
      next_gens.push_back(v);
      self(self, i + 1, next_gens);
    }
  };
  descend(descend, 1, {Int(1)});
}

}  // namespace

std::vector<DeltaSequence> enumerate_delta0(const Int& delta0, unsigned jobs) {
  if (delta0 < 1) fail("domain", "delta0 must be a positive integer");
  if (delta0 == 1) return {DeltaSequence::require({Int(1)})};

  const auto factorizations = ordered_factorizations(delta0);
  std::vector<DeltaSequence> all;
  if (jobs <= 1 || factorizations.size() <= 1) {
    for (const auto& f : factorizations) collect_for_factorization(f, all);
  } else {
    std::vector<std::future<std::vector<DeltaSequence>>> futures;
    futures.reserve(factorizations.size());
    for (const auto& f : factorizations) {
      futures.push_back(std::async(std::launch::async, [&f] {
        std::vector<DeltaSequence> part;
        collect_for_factorization(f, part);
        return part;
      }));
    }
    for (auto& fut : futures) {
      auto part = fut.get();
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace deltasurf
