#include "deltasurf/transform.hpp"

#include <algorithm>
#include <utility>

#include "deltasurf/error.hpp"
#include "deltasurf/semigroup.hpp"

namespace deltasurf {

std::vector<MultiplePair> find_multiples(const DeltaSequence& d) {
  std::vector<MultiplePair> out;
  for (std::size_t j = 1; j <= d.g(); ++j) {
    const Int value = d.profile().n_at(j) * d[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (d[i] == value) out.push_back({i, j});
    }
  }
  std::sort(out.begin(), out.end(), [](const MultiplePair& a, const MultiplePair& b) {
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  });
  return out;
}

namespace {

void check_pair(const DeltaSequence& d, MultiplePair pair) {
  if (pair.i >= pair.j || pair.j > d.g()) {
    fail("bad_pair", "indices (i, j) = (" + std::to_string(pair.i) + ", " +
                         std::to_string(pair.j) + ") are out of range");
  }
  if (d[pair.i] != d.profile().n_at(pair.j) * d[pair.j]) {
    fail("not_multiple", "delta_" + std::to_string(pair.i) + " = " + d[pair.i].str() +
                             " != n_" + std::to_string(pair.j) + "*delta_" +
                             std::to_string(pair.j) + " = " +
                             (d.profile().n_at(pair.j) * d[pair.j]).str());
  }
}

}  // namespace

bool removal_hypothesis_holds(const DeltaSequence& d, MultiplePair pair) {
  check_pair(d, pair);
  if (pair.j == d.g()) return true;
  return d[pair.j + 1] < d.profile().n_at(pair.j - 1) * d[pair.j - 1];
}

IntSequence removal_recipe(const DeltaSequence& d, MultiplePair pair) {
  check_pair(d, pair);
  const IntSequence& v = d.values();
  IntSequence out;
  out.reserve(v.size() - 1);
  if (pair.i == 0 && v[pair.j] < v[1]) {
    // (delta_1, delta_j, delta_2, ..., delta_j omitted, ..., delta_g)
    out.push_back(v[1]);
    out.push_back(v[pair.j]);
    for (std::size_t k = 2; k < v.size(); ++k) {
      if (k != pair.j) out.push_back(v[k]);
    }
  } else {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k == pair.j) continue;
      out.push_back(k == pair.i ? v[pair.j] : v[k]);
    }
  }
  return out;
}

bool removal_applicable(const DeltaSequence& d, MultiplePair pair) {
  return removal_hypothesis_holds(d, pair) &&
         DeltaSequence::validate(removal_recipe(d, pair)).ok();
}

DeltaSequence shorten(const DeltaSequence& d, MultiplePair pair) {
  check_pair(d, pair);
  if (pair.j < d.g()) {
    const Int bound = d.profile().n_at(pair.j - 1) * d[pair.j - 1];
    if (d[pair.j + 1] >= bound) {
      fail("removal_hypothesis",
           "delta_" + std::to_string(pair.j + 1) + " = " + d[pair.j + 1].str() + " >= n_" +
               std::to_string(pair.j - 1) + "*delta_" + std::to_string(pair.j - 1) + " = " +
               bound.str());
    }
  }
  IntSequence recipe = removal_recipe(d, pair);
  auto validated = DeltaSequence::validate(recipe);
  if (!validated.ok()) {
    // only reachable for the pair (0, 1) with delta_2 >= delta_1
    fail("removal_invalid", "removing delta_" + std::to_string(pair.i) + " leaves (" +
                                to_string(recipe) + "), which is not a delta-sequence");
  }
  return *std::move(validated.sequence);
}

DNProfile predict_profile(const DeltaSequence& d, MultiplePair pair) {
  check_pair(d, pair);
  const std::size_t g = d.g();
  const std::size_t i = pair.i, j = pair.j;
  const DNProfile& p = d.profile();
  const Int& nj = p.n_at(j);

  DNProfile out;
  out.d.assign(g, Int(0));
  out.n.assign(g, Int(0));
  out.n[0] = 1;
  auto set_d = [&out](std::size_t k, Int v) { out.d[k - 1] = std::move(v); };
  auto set_n = [&out](std::size_t k, Int v) { out.n[k] = std::move(v); };

  if (i >= 1) {
    for (std::size_t k = 1; k <= i; ++k) set_d(k, p.d_at(k));
    for (std::size_t k = i + 1; k <= j; ++k) set_d(k, p.d_at(k) / nj);
    for (std::size_t k = j + 1; k <= g; ++k) set_d(k, p.d_at(k + 1));
    for (std::size_t k = 1; k + 1 <= i; ++k) set_n(k, p.n_at(k));
    set_n(i, nj * p.n_at(i));
    for (std::size_t k = i + 1; k + 1 <= j; ++k) set_n(k, p.n_at(k));
    for (std::size_t k = j; k + 1 <= g; ++k) set_n(k, p.n_at(k + 1));
    return out;
  }

  // i = 0.  The removal recipe starts with delta_j when j = 1 or delta_j >
  // delta_1, and with delta_1 otherwise; the gcd bookkeeping follows the
  // recipe shape (the principal case is exactly the pair (0, 1)).
  if (j == 1) {
    for (std::size_t k = 1; k <= g; ++k) set_d(k, p.d_at(k + 1));
    for (std::size_t k = 1; k + 1 <= g; ++k) set_n(k, p.n_at(k + 1));
    return out;
  }
  if (d[1] < d[j]) {
    for (std::size_t k = 1; k <= j; ++k) set_d(k, p.d_at(k) / nj);
    for (std::size_t k = j + 1; k <= g; ++k) set_d(k, p.d_at(k + 1));
    for (std::size_t k = 1; k + 1 <= j; ++k) set_n(k, p.n_at(k));
    for (std::size_t k = j; k + 1 <= g; ++k) set_n(k, p.n_at(k + 1));
    return out;
  }
  // delta_j < delta_1: the sequence now leads with delta_1.
  const FactorForm form = to_factor_form(d);
  set_d(1, d[1]);
  for (std::size_t k = 2; k <= j; ++k) set_d(k, p.d_at(k) / nj);
  for (std::size_t k = j + 1; k <= g; ++k) set_d(k, p.d_at(k + 1));
  set_n(1, form.a[1] * nj);
  for (std::size_t k = 2; k + 1 <= j; ++k) set_n(k, p.n_at(k));
  for (std::size_t k = j; k + 1 <= g; ++k) set_n(k, p.n_at(k + 1));
  return out;
}

const char* to_string(RefinementKind k) {
  switch (k) {
    case RefinementKind::prepend_multiple: return "prepend_multiple";
    case RefinementKind::prepend_nonmultiple: return "prepend_nonmultiple";
    case RefinementKind::insert_interior: return "insert_interior";
  }
  return "unknown";
}

RefinementSet refine_order_one(const DeltaSequence& d) {
  if (d.trivial()) fail("trivial_sequence", "refinements require a non-trivial delta-sequence");
  RefinementSet out;
  const std::size_t g = d.g();
  const IntSequence& v = d.values();

  auto consider = [&](const Int& beta, std::size_t position, RefinementKind kind) {
    IntSequence child;
    child.reserve(v.size() + 1);
    child.insert(child.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(position));
    child.push_back(beta);
    child.insert(child.end(), v.begin() + static_cast<std::ptrdiff_t>(position), v.end());
    auto validated = DeltaSequence::validate(child);
    if (!validated.ok()) return;
    if (!semigroups_equal(child, v)) return;
    for (const auto& cert : out.certificates) {
      if (cert.child.values() == child) return;
    }
    out.certificates.push_back({*std::move(validated.sequence), beta, position, kind});
  };

  for (std::size_t j = 1; j <= g; ++j) {
    for (const Int& t : divisors(d.profile().n_at(j))) {
      if (t == 1) continue;
      const Int beta = t * v[j];
      // Prepends that are multiples of delta_0 belong to the symbolic family.
      if (beta % v[0] != 0) consider(beta, 0, RefinementKind::prepend_nonmultiple);
      for (std::size_t h = 1; h <= j; ++h) consider(beta, h, RefinementKind::insert_interior);
    }
  }
  std::sort(out.certificates.begin(), out.certificates.end(),
            [](const RefinementCertificate& a, const RefinementCertificate& b) {
              if (a.insertion_position != b.insertion_position) {
                return a.insertion_position < b.insertion_position;
              }
              return a.child.values() < b.child.values();
            });
  return out;
}

DeltaSequence prepend_multiple(const DeltaSequence& d, const Int& alpha) {
  if (alpha < 2) fail("alpha_too_small", "alpha = " + alpha.str() + " must be >= 2");
  IntSequence child;
  child.reserve(d.size() + 1);
  child.push_back(alpha * d.front());
  child.insert(child.end(), d.values().begin(), d.values().end());
  return DeltaSequence::require(child);
}

const char* to_string(InsertionReject r) {
  switch (r) {
    case InsertionReject::none: return "none";
    case InsertionReject::element_in_prefix_semigroup: return "element_in_prefix_semigroup";
    case InsertionReject::gcd_ladder_broken: return "gcd_ladder_broken";
    case InsertionReject::bound_exceeded: return "bound_exceeded";
    case InsertionReject::not_delta_sequence: return "not_delta_sequence";
    case InsertionReject::semigroup_changed: return "semigroup_changed";
  }
  return "unknown";
}

InsertionOutcome insert_chain(const DeltaSequence& d, std::size_t r, const IntSequence& chain) {
  if (r + 1 > d.g()) {
    fail("position_out_of_range",
         "the insertion slot r = " + std::to_string(r) + " must satisfy 0 <= r <= g-1");
  }
  if (chain.empty()) fail("empty_chain", "the chain must contain at least one value");
  for (const Int& c : chain) {
    if (c <= 0) fail("nonpositive_entry", "chain entry " + c.str() + " is not positive");
  }
  const IntSequence& v = d.values();

  // A chain value inside <delta_0..delta_r> cannot lower the running gcd.
  SubSemigroup prefix(IntSequence(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r) + 1));
  for (const Int& c : chain) {
    if (prefix.contains(c)) {
      return {InsertionReject::element_in_prefix_semigroup, std::nullopt,
              c.str() + " already lies in <" + to_string(prefix.generators()) + ">"};
    }
  }

  // Running gcds must descend properly and stay above d_{r+2}.
  std::vector<Int> ladder;  // ladder[0] = d_{r+1}, then after each chain value
  ladder.push_back(d.profile().d_at(r + 1));
  for (std::size_t k = 0; k < chain.size(); ++k) {
    Int next = gcd(ladder.back(), chain[k]);
    if (next == ladder.back()) {
      return {InsertionReject::gcd_ladder_broken, std::nullopt,
              "the running gcd does not drop at chain position " + std::to_string(k + 1)};
    }
    ladder.push_back(std::move(next));
  }
  if (ladder.back() % d.profile().d_at(r + 2) != 0) {
    return {InsertionReject::gcd_ladder_broken, std::nullopt,
            "d_{r+2} = " + d.profile().d_at(r + 2).str() + " does not divide the chain gcd " +
                ladder.back().str()};
  }

  // Condition-(3) shaped bounds along the inserted block.
  Int bound = d.profile().n_at(r) * v[r];
  if (chain[0] >= bound) {
    return {InsertionReject::bound_exceeded, std::nullopt,
            chain[0].str() + " >= n_r*delta_r = " + bound.str()};
  }
  for (std::size_t k = 1; k < chain.size(); ++k) {
    bound = (ladder[k - 1] / ladder[k]) * chain[k - 1];
    if (chain[k] >= bound) {
      return {InsertionReject::bound_exceeded, std::nullopt,
              chain[k].str() + " >= " + bound.str() + " at chain position " + std::to_string(k + 1)};
    }
  }

  IntSequence child;
  child.reserve(v.size() + chain.size());
  child.insert(child.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r) + 1);
  child.insert(child.end(), chain.begin(), chain.end());
  child.insert(child.end(), v.begin() + static_cast<std::ptrdiff_t>(r) + 1, v.end());
  auto validated = DeltaSequence::validate(child);
  if (!validated.ok()) {
    std::string detail = "the interleaved sequence is not a delta-sequence:";
    for (const auto& violation : validated.report.violations) {
      detail += " [condition " + std::to_string(violation.condition) + "] " + violation.detail + ";";
    }
    return {InsertionReject::not_delta_sequence, std::nullopt, std::move(detail)};
  }
  if (!semigroups_equal(child, v)) {
    SubSemigroup whole(v);
    std::string witness;
    for (const Int& c : chain) {
      if (!whole.contains(c)) {
        witness = c.str();
        break;
      }
    }
    return {InsertionReject::semigroup_changed, std::move(validated.sequence),
            "the result is a delta-sequence but generates a strictly larger semigroup"
            " (witness: " + witness + " is not in <" + to_string(v) + ">)"};
  }
  return {InsertionReject::none, std::move(validated.sequence), ""};
}

std::vector<NestedChain> nested_families(const DeltaSequence& d) {
  std::vector<NestedChain> out;
  std::vector<DeltaSequence> chain{d};
  std::size_t chain_count = 0;

  auto children_of = [](const DeltaSequence& cur) {
    std::vector<DeltaSequence> children;
    if (cur.trivial()) return children;
    for (const auto& cert : refine_order_one(cur).certificates) {
      // New first elements that are multiples of the previous first element
      // are forbidden; interior insertions keep delta_0 and are filtered too.
      if (cert.child.front() % cur.front() == 0) continue;
      children.push_back(cert.child);
    }
    std::sort(children.begin(), children.end());
    children.erase(std::unique(children.begin(), children.end()), children.end());
    return children;
  };

  auto dfs = [&](auto&& self, const DeltaSequence& cur) -> void {
    if (chain.size() > 64) fail("resource_limit", "nested chain depth exceeds 64");
    auto children = children_of(cur);
    if (children.empty()) {
      out.push_back({chain});
      if (++chain_count > 100000) fail("resource_limit", "nested family count exceeds cap");
      return;
    }
    for (const auto& child : children) {
      chain.push_back(child);
      self(self, child);
      chain.pop_back();
    }
  };
  dfs(dfs, d);
  return out;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::reduced: return "reduced";
    case SearchStatus::no_reduction_found: return "no_reduction_found";
    case SearchStatus::certified_primitive: return "certified_primitive";
  }
  return "unknown";
}

const char* to_string(TrailStepKind k) {
  switch (k) {
    case TrailStepKind::remove_multiple: return "remove_multiple";
    case TrailStepKind::rearrange_suffix: return "rearrange_suffix";
    case TrailStepKind::delete_and_permute: return "delete_and_permute";
    case TrailStepKind::multiple_blocked: return "multiple_blocked";
  }
  return "unknown";
}

namespace {

// Rightmost multiple element first: the sketch rearranges after the last
// existing multiple, so order by i descending (ties by j descending).
std::vector<MultiplePair> by_rightmost_element(std::vector<MultiplePair> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const MultiplePair& a, const MultiplePair& b) {
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  });
  return pairs;
}

struct Countdown {
  std::size_t remaining;
  bool spend() {
    if (remaining == 0) return false;
    --remaining;
    return true;
  }
};

struct RearrangeMove {
  DeltaSequence arranged;
  MultiplePair pair;
  DeltaSequence result;
};

// Tries suffix rearrangements that make the removal theorem applicable to the
// multiple at position i.
std::optional<RearrangeMove> rearrange_and_remove(const DeltaSequence& cur, std::size_t i,
                                                  Countdown& permutations) {
  const IntSequence& v = cur.values();
  IntSequence prefix(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  IntSequence suffix(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, v.end());
  std::sort(suffix.begin(), suffix.end());
  do {
    if (!permutations.spend()) return std::nullopt;
    IntSequence candidate = prefix;
    candidate.insert(candidate.end(), suffix.begin(), suffix.end());
    if (candidate == v) continue;
    auto validated = DeltaSequence::validate(candidate);
    if (!validated.ok()) continue;
    const DeltaSequence& arranged = *validated.sequence;
    for (const MultiplePair& pair : find_multiples(arranged)) {
      if (pair.i != i) continue;
      if (!removal_applicable(arranged, pair)) continue;
      return RearrangeMove{arranged, pair, shorten(arranged, pair)};
    }
  } while (std::next_permutation(suffix.begin(), suffix.end()));
  return std::nullopt;
}

// Deletes position i outright and looks for any ordering of the remainder
// that is a delta-sequence (the semigroup is unchanged because the deleted
// value is n_j * delta_j of a surviving element).
std::optional<DeltaSequence> delete_and_reorder(const DeltaSequence& cur, std::size_t i,
                                                Countdown& permutations) {
  IntSequence rest;
  rest.reserve(cur.size() - 1);
  for (std::size_t k = 0; k < cur.size(); ++k) {
    if (k != i) rest.push_back(cur[k]);
  }
  std::sort(rest.begin(), rest.end());
  do {
    if (!permutations.spend()) return std::nullopt;
    auto validated = DeltaSequence::validate(rest);
    if (validated.ok()) return *std::move(validated.sequence);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

struct CertificationResult {
  bool completed = false;                 // search ran to the end of its space
  std::optional<DeltaSequence> shorter;   // found a shorter generating sequence
  std::string note;
};

CertificationResult certify_primitive(const DeltaSequence& cur, const Int& element_bound,
                                      Countdown& candidates) {
  CertificationResult result;
  const IntSequence minimal = minimal_generators(cur.values());
  const std::size_t len = cur.size();
  if (len <= minimal.size()) {
    result.completed = true;
    result.note = "every generating set contains the " + std::to_string(minimal.size()) +
                  " minimal generators, so no shorter delta-sequence can generate the semigroup";
    return result;
  }

  // By the multiples lemma, every member of a generating delta-sequence is a
  // positive multiple of some minimal generator; the pool collects those up to
  // the element bound.
  std::vector<Int> pool;
  for (const Int& m : minimal) {
    for (Int c = 2; c * m <= element_bound; ++c) {
      pool.push_back(c * m);
      if (pool.size() > 10000) {
        result.note = "certification abandoned: candidate pool for element bound " +
                      element_bound.str() + " is too large";
        return result;
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  pool.erase(std::remove_if(pool.begin(), pool.end(),
                            [&minimal](const Int& v) {
                              return std::binary_search(minimal.begin(), minimal.end(), v);
                            }),
             pool.end());

  for (std::size_t target = minimal.size(); target < len; ++target) {
    const std::size_t extras = target - minimal.size();
    if (extras > pool.size()) continue;
    std::vector<std::size_t> pick(extras);
    for (std::size_t k = 0; k < extras; ++k) pick[k] = k;
    bool more = true;
    while (more) {
      IntSequence candidate = minimal;
      for (std::size_t k : pick) candidate.push_back(pool[k]);
      std::sort(candidate.begin(), candidate.end());
      // Extras lie in the semigroup, so <candidate> equals it automatically.
      do {
        if (!candidates.spend()) {
          result.note = "certification abandoned: candidate budget exhausted";
          return result;
        }
        if (DeltaSequence::validate(candidate).ok()) {
          result.shorter = DeltaSequence::require(candidate);
          result.note = "exhaustive search found a shorter generating delta-sequence";
          return result;
        }
      } while (std::next_permutation(candidate.begin(), candidate.end()));
      // next combination
      if (extras == 0) break;
      std::size_t k = extras;
      while (k > 0) {
        --k;
        if (pick[k] + (extras - k) < pool.size()) {
          ++pick[k];
          for (std::size_t l = k + 1; l < extras; ++l) pick[l] = pick[l - 1] + 1;
          break;
        }
        if (k == 0) more = false;
      }
    }
  }
  result.completed = true;
  result.note = "no shorter generating delta-sequence with elements at most " +
                element_bound.str() + " exists";
  if (len - 1 == minimal.size()) {
    result.note += " (complete: a shorter sequence could only consist of the minimal generators)";
  }
  return result;
}

}  // namespace

PrimitiveSearchResult primitive_search(const DeltaSequence& d, const SearchBudget& budget) {
  const Int element_bound =
      budget.element_bound.value_or(*std::max_element(d.values().begin(), d.values().end()));
  DeltaSequence current = d;
  std::vector<TrailStep> trail;

  for (;;) {
    const auto multiples = find_multiples(current);
    if (multiples.empty()) break;
    bool progressed = false;

    // Step 1: the removal theorem, rightmost multiple first.
    for (const MultiplePair& pair : multiples) {
      if (!removal_applicable(current, pair)) continue;
      DeltaSequence next = shorten(current, pair);
      trail.push_back({TrailStepKind::remove_multiple, pair, current.values(), next.values(),
                       "removal theorem applied"});
      current = next;
      progressed = true;
      break;
    }
    if (progressed) continue;

    // Steps 2 and 3 attack each surviving multiple, rightmost element first.
    for (const MultiplePair& pair : by_rightmost_element(multiples)) {
      Countdown permutations{budget.max_permutations};
      if (auto moved = rearrange_and_remove(current, pair.i, permutations)) {
        trail.push_back({TrailStepKind::rearrange_suffix, pair, current.values(),
                         moved->arranged.values(), "suffix after the multiple rearranged"});
        trail.push_back({TrailStepKind::remove_multiple, moved->pair, moved->arranged.values(),
                         moved->result.values(), "removal theorem applied after rearrangement"});
        current = moved->result;
        progressed = true;
        break;
      }
      Countdown deletions{budget.max_permutations};
      if (auto reduced = delete_and_reorder(current, pair.i, deletions)) {
        trail.push_back({TrailStepKind::delete_and_permute, pair, current.values(),
                         reduced->values(), "multiple deleted and the remainder re-ordered"});
        current = *reduced;
        progressed = true;
        break;
      }
    }
    if (progressed) continue;

    for (const MultiplePair& pair : by_rightmost_element(multiples)) {
      trail.push_back({TrailStepKind::multiple_blocked, pair, current.values(), {},
                       "no_reduction_found: the removal theorem, suffix rearrangements and "
                       "deletion re-orderings all fail for this multiple"});
    }
    break;
  }

  // A surviving multiple does not settle primitivity; the certification search
  // reasons about lengths directly and is the authority either way.
  Countdown candidates{budget.max_candidates};
  CertificationResult certification = certify_primitive(current, element_bound, candidates);

  PrimitiveSearchResult out{current, SearchStatus::no_reduction_found, std::move(trail), ""};
  if (certification.shorter) {
    out.sequence = *certification.shorter;
    out.status = SearchStatus::reduced;
    out.certification = certification.note;
    return out;
  }
  if (certification.completed) {
    out.status = SearchStatus::certified_primitive;
    out.certification = certification.note;
    return out;
  }
  out.status =
      current.size() < d.size() ? SearchStatus::reduced : SearchStatus::no_reduction_found;
  out.certification = certification.note.empty()
                          ? "search budget exhausted before certification finished"
                          : certification.note;
  return out;
}

std::optional<std::size_t> refinement_order(const DeltaSequence& parent,
                                            const DeltaSequence& child) {
  const IntSequence& p = parent.values();
  const IntSequence& c = child.values();
  if (p.size() > c.size()) return std::nullopt;
  std::size_t pos = 0;
  for (const Int& needed : p) {
    while (pos < c.size() && c[pos] != needed) ++pos;
    if (pos == c.size()) return std::nullopt;
    ++pos;
  }
  return c.size() - p.size();
}

namespace {

Int product_of_n(const FactorForm& form, std::size_t from, std::size_t to_inclusive) {
  Int out = 1;
  for (std::size_t k = from; k <= to_inclusive && k < form.n.size(); ++k) out *= form.n[k];
  return out;
}

}  // namespace

bool refinement_theorem_conditions(const DeltaSequence& parent, const IntSequence& child,
                                   std::size_t insert_pos) {
  const std::size_t g = parent.g();
  const IntSequence& v = parent.values();
  if (child.size() != v.size() + 1 || insert_pos >= child.size()) {
    fail("bad_refinement", "child must be parent with one value inserted");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (child[k < insert_pos ? k : k + 1] != v[k]) {
      fail("bad_refinement", "child must be parent with one value inserted");
    }
  }
  const Int beta = child[insert_pos];
  const FactorForm form = to_factor_form(parent);
  const DNProfile child_profile = compute_profile(child);
  auto np = [&child_profile](std::size_t k) -> const Int& { return child_profile.n_at(k); };
  const DNProfile& pp = parent.profile();

  if (insert_pos == 0) {
    // Prepend case: beta = n'_{j+1} * delta_j for some j in [1, g].
    for (std::size_t j = 1; j <= g; ++j) {
      if (beta != np(j + 1) * v[j]) continue;
      bool ok = true;
      // strictly descending gcd chain gcd(a_j, n_s...n_{j-1}) down to > 1
      Int prev = 0;
      for (std::size_t s = 1; s + 1 <= j && ok; ++s) {
        Int term = gcd(form.a[j], product_of_n(form, s, j - 1));
        if (s > 1 && term >= prev) ok = false;
        if (s + 1 == j && term <= 1) ok = false;
        prev = term;
      }
      if (ok && (np(1) <= 1 || form.a[j] % np(1) != 0)) ok = false;
      for (std::size_t k = 1; k <= j && ok; ++k) {
        if (np(k + 1) <= 1 || form.n[k] % np(k + 1) != 0) ok = false;
      }
      if (ok) {
        bool strict_somewhere = false;
        for (std::size_t k = 1; k <= j; ++k) {
          if (np(k + 1) != form.n[k]) strict_somewhere = true;
        }
        if (!strict_somewhere) ok = false;
      }
      for (std::size_t k = j + 1; k <= g && ok; ++k) {
        if (np(k + 1) != pp.n_at(k)) ok = false;
      }
      if (ok && beta <= v[0]) ok = false;
      for (std::size_t k = 2; k <= std::min(j + 1, g) && ok; ++k) {
        if (v[k] >= np(k) * v[k - 1]) ok = false;
      }
      if (ok && (np(1) * v[0]) % beta != 0) ok = false;
      for (std::size_t k = 1; k <= j && ok; ++k) {
        IntSequence gens{beta};
        gens.insert(gens.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
        if (!SubSemigroup(std::move(gens)).contains(np(k + 1) * v[k])) ok = false;
      }
      if (ok) return true;
    }
    return false;
  }

  // Interior case: child = (delta_0..delta_{h-1}, beta, delta_h..delta_g).
  const std::size_t h = insert_pos;
  for (std::size_t j = h; j <= g; ++j) {
    if (beta != np(j + 1) * v[j]) continue;
    bool ok = true;
    for (std::size_t k = 1; k + 1 <= h && ok; ++k) {
      if (np(k) != pp.n_at(k)) ok = false;
    }
    const Int leading = product_of_n(form, h, j);
    Int prev = leading;
    for (std::size_t s = h; s + 1 <= j && ok; ++s) {
      Int term = gcd(form.a[j], product_of_n(form, s, j - 1));
      if (term >= prev) ok = false;
      if (s + 1 == j && term <= 1) ok = false;
      prev = term;
    }
    if (ok && (np(h) <= 1 || leading % np(h) != 0)) ok = false;
    for (std::size_t k = h; k <= j && ok; ++k) {
      if (np(k + 1) <= 1 || form.n[k] % np(k + 1) != 0) ok = false;
    }
    if (ok) {
      bool strict_somewhere = false;
      for (std::size_t k = h; k <= j; ++k) {
        if (np(k + 1) != form.n[k]) strict_somewhere = true;
      }
      if (!strict_somewhere) ok = false;
    }
    // the n'-tail matches n from j+1 on
    for (std::size_t k = j + 1; k <= g && ok; ++k) {
      if (np(k + 1) != pp.n_at(k)) ok = false;
    }
    if (ok && !(v[h] < np(h) * beta && np(h) * beta < np(h) * pp.n_at(h - 1) * v[h - 1])) {
      ok = false;
    }
    for (std::size_t k = h + 1; k <= std::min(j + 1, g) && ok; ++k) {
      if (v[k] >= np(k) * v[k - 1]) ok = false;
    }
    if (ok) {
      IntSequence head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(h));
      if (!SubSemigroup(head).contains(np(h) * beta)) ok = false;
      if (ok) {
        IntSequence gens = head;
        gens.push_back(beta);
        if (!SubSemigroup(gens).contains(np(h + 1) * v[h])) ok = false;
        for (std::size_t k = h + 2; k <= j + 1 && k <= g && ok; ++k) {
          gens = head;
          gens.push_back(beta);
          gens.insert(gens.end(), v.begin() + static_cast<std::ptrdiff_t>(h),
                      v.begin() + static_cast<std::ptrdiff_t>(k) - 1);
          if (!SubSemigroup(gens).contains(np(k) * v[k - 1])) ok = false;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace deltasurf
