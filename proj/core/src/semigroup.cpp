#include "deltasurf/semigroup.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

#include "deltasurf/error.hpp"

namespace deltasurf {

namespace {

IntSequence canonicalize(IntSequence gens) {
  if (gens.empty()) fail("empty_generators", "a semigroup needs at least one generator");
  for (const Int& v : gens) {
    if (v <= 0) fail("nonpositive_generator", "generator " + v.str() + " is not positive");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

Int content_of(const IntSequence& gens) {
  Int c = 0;
  for (const Int& v : gens) c = gcd(c, v);
  return c;
}

}  // namespace

std::vector<Int> apery_set(const IntSequence& gens) {
  const std::size_t m = to_index(gens.front(), "semigroup multiplicity");
  std::vector<Int> dist(m, Int(-1));
  std::vector<std::size_t> residues;
  residues.reserve(gens.size());
  for (const Int& v : gens) residues.push_back((v % Int(m)).convert_to<std::size_t>());

  using Node = std::pair<Int, std::size_t>;
  auto cmp = [](const Node& a, const Node& b) { return a.first > b.first; };
  std::priority_queue<Node, std::vector<Node>, decltype(cmp)> queue(cmp);
  dist[0] = 0;
  queue.push({Int(0), 0});
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[residue]) continue;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t next = residue + residues[k];
      if (next >= m) next -= m;
      Int candidate = value + gens[k];
      if (dist[next] < 0 || candidate < dist[next]) {
        dist[next] = candidate;
        queue.push({std::move(candidate), next});
      }
    }
  }
  // gcd 1 makes every residue reachable
  for (const Int& v : dist) {
    if (v < 0) throw std::logic_error("apery_set: unreachable residue (content != 1?)");
  }
  return dist;
}

SubSemigroup::SubSemigroup(IntSequence generators) : gens_(canonicalize(std::move(generators))) {
  content_ = content_of(gens_);
  normalized_.reserve(gens_.size());
  for (const Int& v : gens_) normalized_.push_back(v / content_);
  apery_ = apery_set(normalized_);
}

bool SubSemigroup::contains(const Int& x) const {
  if (x == 0) return true;
  if (x < 0 || x % content_ != 0) return false;
  Int q = x / content_;
  const Int m = normalized_.front();
  std::size_t r = (q % m).convert_to<std::size_t>();
  return q >= apery_[r];
}

NumericalSemigroup NumericalSemigroup::from_generators(const IntSequence& generators) {
  IntSequence gens = canonicalize(generators);
  if (content_of(gens) != 1) {
    fail("content_not_one",
         "generators (" + to_string(gens) + ") have gcd " + content_of(gens).str());
  }
  NumericalSemigroup s;
  s.multiplicity_ = gens.front();
  s.apery_ = apery_set(gens);
  s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - s.multiplicity_;
  s.genus_ = 0;
  for (const Int& w : s.apery_) s.genus_ += w / s.multiplicity_;
  s.minimal_ = ::deltasurf::minimal_generators(gens);
  return s;
}

bool NumericalSemigroup::contains(const Int& x) const {
  if (x == 0) return true;
  if (x < 0) return false;
  std::size_t r = (x % multiplicity_).convert_to<std::size_t>();
  return x >= apery_[r];
}

IntSequence minimal_generators(const IntSequence& generators) {
  IntSequence gens = canonicalize(generators);
  if (content_of(gens) != 1) {
    fail("content_not_one",
         "generators (" + to_string(gens) + ") have gcd " + content_of(gens).str());
  }
  if (gens.size() == 1) return gens;  // <1> = N
  // A generator is redundant exactly when the others already produce it; one
  // pass suffices because any sum expressing g uses only smaller generators.
  IntSequence kept;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    IntSequence others;
    others.reserve(gens.size() - 1);
    for (std::size_t l = 0; l < gens.size(); ++l) {
      if (l != k) others.push_back(gens[l]);
    }
    if (!SubSemigroup(std::move(others)).contains(gens[k])) kept.push_back(gens[k]);
  }
  return kept;
}

bool semigroups_equal(const IntSequence& a, const IntSequence& b) {
  return minimal_generators(a) == minimal_generators(b);
}

bool is_mg_delta(const DeltaSequence& d) {
  IntSequence sorted = d.values();
  std::sort(sorted.begin(), sorted.end());
  const bool direct = minimal_generators(d.values()) == sorted;
  if (d.g() <= 1) return direct;

  const FactorForm form = to_factor_form(d);
  bool criterion = true;
  for (std::size_t i = 1; i <= d.g() && criterion; ++i) {
    if (form.a[i] == form.a[i - 1]) criterion = false;
    for (std::size_t l = 0; i >= 2 && l + 2 <= i && criterion; ++l) {
      Int scaled = form.a[l];
      for (std::size_t k = l + 1; k <= i - 1; ++k) scaled *= form.n[k];
      if (form.a[i] == scaled) criterion = false;
    }
  }
  if (criterion != direct) {
    throw std::logic_error("is_mg_delta: factor-form criterion disagrees with the direct "
                           "minimal-generator computation on (" + to_string(d.values()) + ")");
  }
  return direct;
}

}  // namespace deltasurf
