// deltasurf: exact computations with delta-sequences, their numerical
// semigroups, and the intersection combinatorics of the associated surfaces.
//
// Every subcommand prints a deterministic rendering of one structured result;
// --format json emits the same structure as JSON.  Exit codes: 0 success,
// 1 domain error, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/error.hpp"
#include "deltasurf/geometry.hpp"
#include "deltasurf/gluing.hpp"
#include "deltasurf/integer.hpp"
#include "deltasurf/semigroup.hpp"
#include "deltasurf/transform.hpp"

using json = nlohmann::json;
using namespace deltasurf;

namespace {

struct UsageError {
  std::string message;
};

// Integers that fit in int64 are emitted as JSON numbers, anything larger as
// a decimal string; both re-parse losslessly.
json enc(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

json enc(const IntSequence& seq) {
  json out = json::array();
  for (const Int& v : seq) out.push_back(enc(v));
  return out;
}

json enc(const Fraction& f) { return json{{"num", enc(f.num)}, {"den", enc(f.den)}}; }

IntSequence parse_seq_or_throw(const std::string& literal) {
  std::string offending;
  auto seq = parse_sequence(literal, &offending);
  if (!seq) {
    throw UsageError{"malformed sequence literal: offending token \"" + offending + "\" in \"" +
                     literal + "\""};
  }
  return *seq;
}

DeltaSequence require_delta(const std::string& literal) {
  return DeltaSequence::require(parse_seq_or_throw(literal));
}

Int parse_int_or_throw(const std::string& literal, const char* what) {
  auto v = parse_integer(literal);
  if (!v) throw UsageError{std::string("malformed ") + what + ": \"" + literal + "\""};
  return *v;
}

std::string render_seq(const IntSequence& seq) { return to_string(seq); }

enum class Format { text, json_format, dot };

Format parse_format(const std::string& name, bool dot_allowed) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json_format;
  if (name == "dot" && dot_allowed) return Format::dot;
  throw UsageError{"unsupported format \"" + name + "\""};
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json profile_json(const DeltaSequence& d) {
  return json{{"d", enc(d.profile().d)},
              {"n", enc(d.profile().display_n())},
              {"principal", d.principal()},
              {"degenerate", d.degenerate()}};
}

json semigroup_json(const NumericalSemigroup& s) {
  return json{{"minimal_generators", enc(s.minimal_generators())},
              {"multiplicity", enc(s.multiplicity())},
              {"frobenius", enc(s.frobenius())},
              {"genus", enc(s.genus())},
              {"apery", enc(s.apery())}};
}

// ---------------------------------------------------------------------------
// subcommand handlers

int run_validate(const std::string& seq_literal, Format format) {
  IntSequence seq = parse_seq_or_throw(seq_literal);
  auto outcome = DeltaSequence::validate(seq);
  json doc{{"input", enc(seq)}, {"valid", outcome.ok()}};
  json violations = json::array();
  for (const auto& v : outcome.report.violations) {
    violations.push_back(
        {{"condition", v.condition}, {"index", v.index}, {"detail", v.detail}});
  }
  doc["violations"] = violations;
  if (outcome.ok()) {
    const DeltaSequence& d = *outcome.sequence;
    doc.update(profile_json(d));
  }
  if (format == Format::json_format) {
    emit_json(doc);
  } else if (outcome.ok()) {
    const DeltaSequence& d = *outcome.sequence;
    std::cout << "valid delta-sequence (" << render_seq(seq) << ")\n"
              << "  d-sequence: " << render_seq(d.profile().d) << "\n"
              << "  n-sequence: " << render_seq(d.profile().display_n()) << "\n"
              << "  principal: " << (d.principal() ? "yes" : "no")
              << ", degenerate: " << (d.degenerate() ? "yes" : "no") << "\n";
  } else {
    std::cout << "not a delta-sequence (" << render_seq(seq) << ")\n";
    for (const auto& v : outcome.report.violations) {
      std::cout << "  condition (" << v.condition << ") fails at index " << v.index << ": "
                << v.detail << "\n";
    }
  }
  return 0;
}

int run_semigroup(const std::string& seq_literal, Format format) {
  IntSequence gens = parse_seq_or_throw(seq_literal);
  NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
  json doc{{"generators", enc(gens)}};
  doc.update(semigroup_json(s));
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << "numerical semigroup <" << render_seq(gens) << ">\n"
              << "  minimal generators: " << render_seq(s.minimal_generators()) << "\n"
              << "  multiplicity: " << s.multiplicity() << "\n"
              << "  frobenius: " << s.frobenius() << ", genus: " << s.genus() << "\n"
              << "  apery set: " << render_seq(s.apery()) << "\n";
  }
  return 0;
}

int run_glue_pair(const std::string& left_lit, const std::string& right_lit, const Int& mu,
                  const Int& beta, Format format) {
  DeltaSequence left = require_delta(left_lit);
  DeltaSequence right = require_delta(right_lit);
  DeltaSequence glued = glue(left, right, mu, beta);
  json doc{{"mode", "pair"},
           {"left", enc(left.values())},
           {"right", enc(right.values())},
           {"mu", enc(mu)},
           {"alpha", enc(mu * right.front())},
           {"beta", enc(beta)},
           {"result", enc(glued.values())}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << render_seq(glued.values()) << "\n";
  }
  return 0;
}

int run_glue_trivial(const std::string& seq_lit, const Int& alpha, const Int& beta,
                     Format format) {
  DeltaSequence base = require_delta(seq_lit);
  Algorithm1Result result = glue_trivial(base, alpha, beta);
  if (!result.ok()) {
    fail(to_string(result.failure), result.detail);
  }
  json doc{{"mode", "algorithm1"},
           {"sequence", enc(base.values())},
           {"alpha", enc(alpha)},
           {"beta", enc(beta)},
           {"result", enc(result.sequence->values())}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << render_seq(result.sequence->values()) << "\n";
  }
  return 0;
}

int run_decompose(const std::string& seq_lit, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  GluingDecomposition decomposition = decompose(d);
  DeltaSequence replayed = replay(decomposition);
  json steps = json::array();
  for (const auto& s : decomposition.steps) {
    steps.push_back({{"alpha", enc(s.alpha)}, {"beta", enc(s.beta)}});
  }
  json doc{{"input", enc(d.values())},
           {"seed", enc(decomposition.seed.values())},
           {"steps", steps},
           {"replay_ok", replayed == d}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << "seed: " << render_seq(decomposition.seed.values()) << "\n";
    for (const auto& s : decomposition.steps) {
      std::cout << "  glue alpha=" << s.alpha << " beta=" << s.beta << "\n";
    }
    std::cout << "replay " << (replayed == d ? "reproduces the input" : "FAILED") << "\n";
  }
  return 0;
}

int run_enumerate(const Int& delta0, std::optional<std::size_t> limit, unsigned jobs,
                  Format format) {
  auto all = enumerate_delta0(delta0, jobs);
  std::size_t shown = limit ? std::min(*limit, all.size()) : all.size();
  json list = json::array();
  for (std::size_t k = 0; k < shown; ++k) list.push_back(enc(all[k].values()));
  json doc{{"delta0", enc(delta0)}, {"count", all.size()}, {"returned", shown},
           {"sequences", list}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << all.size() << " delta-sequences with first element " << delta0 << "\n";
    for (std::size_t k = 0; k < shown; ++k) {
      std::cout << "  " << render_seq(all[k].values()) << "\n";
    }
    if (shown < all.size()) std::cout << "  ... (" << all.size() - shown << " more)\n";
  }
  return 0;
}

int run_multiples(const std::string& seq_lit, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  json list = json::array();
  for (const MultiplePair& pair : find_multiples(d)) {
    list.push_back({{"i", pair.i},
                    {"j", pair.j},
                    {"delta_i", enc(d[pair.i])},
                    {"n_j", enc(d.profile().n_at(pair.j))},
                    {"delta_j", enc(d[pair.j])},
                    {"removable", removal_applicable(d, pair)}});
  }
  json doc{{"input", enc(d.values())}, {"multiples", list}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else if (list.empty()) {
    std::cout << "no multiples: every element is a minimal generator candidate\n";
  } else {
    for (const auto& item : list) {
      std::cout << "delta_" << item["i"] << " = n_" << item["j"] << " * delta_" << item["j"]
                << " (" << item["delta_i"] << " = " << item["n_j"] << " * " << item["delta_j"]
                << ")" << (item["removable"].get<bool>() ? "" : " [hypothesis fails]") << "\n";
    }
  }
  return 0;
}

int run_shorten(const std::string& seq_lit, std::optional<std::size_t> i,
                std::optional<std::size_t> j, bool all, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  json steps = json::array();
  DeltaSequence current = d;
  if (i && j) {
    DeltaSequence next = shorten(current, {*i, *j});
    steps.push_back({{"i", *i}, {"j", *j}, {"result", enc(next.values())}});
    current = next;
  } else {
    bool did_anything = false;
    do {
      bool progressed = false;
      for (const MultiplePair& pair : find_multiples(current)) {
        if (!removal_applicable(current, pair)) continue;
        DeltaSequence next = shorten(current, pair);
        steps.push_back({{"i", pair.i}, {"j", pair.j}, {"result", enc(next.values())}});
        current = next;
        progressed = did_anything = true;
        break;
      }
      if (!progressed) break;
    } while (all);
    if (!did_anything) {
      fail("no_removable_multiple", "no multiple satisfies the removal hypothesis");
    }
  }
  json doc{{"input", enc(d.values())}, {"steps", steps}, {"result", enc(current.values())}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    for (const auto& s : steps) {
      std::cout << "remove delta_" << s["i"] << " via j=" << s["j"] << " -> "
                << s["result"].dump() << "\n";
    }
    std::cout << render_seq(current.values()) << "\n";
  }
  return 0;
}

int run_primitive(const std::string& seq_lit, std::optional<Int> bound, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  SearchBudget budget;
  budget.element_bound = bound;
  PrimitiveSearchResult result = primitive_search(d, budget);
  json trail = json::array();
  for (const TrailStep& step : result.trail) {
    trail.push_back({{"kind", to_string(step.kind)},
                     {"i", step.pair.i},
                     {"j", step.pair.j},
                     {"before", enc(step.before)},
                     {"after", enc(step.after)},
                     {"note", step.note},
                     {"outcome", step.kind == TrailStepKind::multiple_blocked
                                     ? "no_reduction_found"
                                     : "removed"}});
  }
  json doc{{"input", enc(d.values())},
           {"status", to_string(result.status)},
           {"result", enc(result.sequence.values())},
           {"trail", trail},
           {"certification", result.certification}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    for (const TrailStep& step : result.trail) {
      std::cout << to_string(step.kind) << ": " << render_seq(step.before);
      if (!step.after.empty()) std::cout << " -> " << render_seq(step.after);
      std::cout << "\n";
    }
    std::cout << "status: " << to_string(result.status) << "\n"
              << "result: " << render_seq(result.sequence.values()) << "\n"
              << "certification: " << result.certification << "\n";
  }
  return 0;
}

int run_refine(const std::string& seq_lit, std::optional<std::size_t> at, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  RefinementSet set = refine_order_one(d);
  json list = json::array();
  for (const auto& cert : set.certificates) {
    if (at && cert.insertion_position != *at) continue;
    list.push_back({{"position", cert.insertion_position},
                    {"value", enc(cert.inserted_value)},
                    {"kind", to_string(cert.kind)},
                    {"result", enc(cert.child.values())},
                    {"n", enc(cert.child.profile().display_n())}});
  }
  json doc{{"input", enc(d.values())},
           {"prepend_multiple_family",
            "(k*" + d.front().str() + ", " + render_seq(d.values()) + ") for every integer k >= 2"},
           {"refinements", list}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << "infinite family: prepend k*" << d.front() << " for any k >= 2\n";
    if (list.empty()) std::cout << "no further order-one refinements\n";
    for (const auto& item : list) {
      std::cout << "insert " << item["value"] << " at position " << item["position"] << " -> "
                << item["result"].dump() << "\n";
    }
  }
  return 0;
}

int run_nested(const std::string& seq_lit, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  auto chains = nested_families(d);
  json list = json::array();
  for (const NestedChain& chain : chains) {
    json seqs = json::array();
    for (const DeltaSequence& s : chain.sequences) seqs.push_back(enc(s.values()));
    list.push_back({{"length", chain.sequences.size() - 1}, {"sequences", seqs}});
  }
  json doc{{"input", enc(d.values())}, {"chains", list}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << chains.size() << " maximal chain(s)\n";
    for (const NestedChain& chain : chains) {
      for (std::size_t k = 0; k < chain.sequences.size(); ++k) {
        std::cout << (k == 0 ? "  " : "  -> ") << render_seq(chain.sequences[k].values()) << "\n";
      }
    }
  }
  return 0;
}

int run_insert(const std::string& seq_lit, std::size_t at, const std::string& chain_lit,
               Format format) {
  DeltaSequence d = require_delta(seq_lit);
  IntSequence chain = parse_seq_or_throw(chain_lit);
  InsertionOutcome outcome = insert_chain(d, at, chain);
  if (!outcome.ok()) {
    std::string message = outcome.detail;
    if (outcome.sequence) {
      message += "; rejected sequence: (" + render_seq(outcome.sequence->values()) + ")";
    }
    fail(to_string(outcome.reject), message);
  }
  json doc{{"input", enc(d.values())},
           {"position", at},
           {"chain", enc(chain)},
           {"result", enc(outcome.sequence->values())},
           {"same_semigroup", true}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << render_seq(outcome.sequence->values()) << "\n";
  }
  return 0;
}

int run_puiseux(const std::string& seq_lit, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  PuiseuxData data = puiseux(d);
  std::vector<Int> mults = multiplicity_sequence(data);
  json pairs = json::array();
  for (const auto& [m, e] : data.pairs) pairs.push_back({{"m", enc(m)}, {"e", enc(e)}});
  json exponents = json::array();
  for (const Fraction& f : data.exponents) exponents.push_back(enc(f));
  json doc{{"input", enc(d.values())},
           {"case", data.degenerate ? "degenerate" : "non-degenerate"},
           {"pairs", pairs},
           {"exponents", exponents},
           {"multiplicity_sequence", enc(mults)},
           {"resolution_length", mults.size()}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << "case: " << (data.degenerate ? "degenerate" : "non-degenerate") << "\n";
    std::cout << "pairs:";
    for (const auto& [m, e] : data.pairs) std::cout << " (" << m << "," << e << ")";
    std::cout << "\nexponents:";
    for (const Fraction& f : data.exponents) std::cout << " " << f.num << "/" << f.den;
    std::cout << "\nmultiplicity sequence: " << render_seq(mults) << " (m = " << mults.size()
              << ")\n";
  }
  return 0;
}

int run_cf(const std::string& num_lit, const std::string& den_lit, Format format) {
  Int num = parse_int_or_throw(num_lit, "numerator");
  Int den = parse_int_or_throw(den_lit, "denominator");
  auto quotients = continued_fraction(num, den);
  if (format == Format::json_format) {
    emit_json(json{{"num", enc(num)}, {"den", enc(den)}, {"quotients", enc(quotients)}});
  } else {
    std::cout << render_seq(quotients) << "\n";
  }
  return 0;
}

int run_typea(const std::string& seq_lit, const Int& last, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  TypeASequence t = make_type_a(d, last);
  NumericalSemigroup s = semigroup_at_infinity(t);
  json doc{{"delta", enc(d.values())},
           {"last", enc(last)},
           {"m", t.m},
           {"n", enc(t.n)},
           {"boundary_case", t.last == d.profile().n_at(d.g()) * d.back()},
           {"semigroup_at_infinity", semigroup_json(s)}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << "type-A sequence (" << render_seq(d.values()) << ", " << last << ")\n"
              << "  resolution length m = " << t.m << ", blowup centers n = " << t.n << "\n"
              << "  semigroup at infinity minimally generated by "
              << render_seq(s.minimal_generators()) << "\n";
    if (t.last == d.profile().n_at(d.g()) * d.back()) {
      std::cout << "  boundary case delta_{g+1} = n_g*delta_g: bare resolution cluster\n";
    }
  }
  return 0;
}

json cluster_json(const Cluster& cl) {
  json prox = json::array();
  for (std::size_t jdx = 0; jdx < cl.size(); ++jdx) {
    if (cl.proximate_to[jdx].empty()) continue;
    json targets = json::array();
    for (std::size_t i : cl.proximate_to[jdx]) targets.push_back(i + 1);
    prox.push_back({{"point", jdx + 1}, {"proximate_to", targets}});
  }
  json satellites = json::array();
  for (std::size_t jdx = 0; jdx < cl.size(); ++jdx) {
    if (cl.satellite[jdx]) satellites.push_back(jdx + 1);
  }
  return json{{"n", cl.size()},
              {"multiplicities", enc(cl.mults)},
              {"l_prefix", cl.l_prefix},
              {"proximities", prox},
              {"satellites", satellites}};
}

int run_cluster(const std::string& seq_lit, const Int& last, Format format) {
  TypeASequence t = make_type_a(require_delta(seq_lit), last);
  Cluster cl = cluster(t);
  if (format == Format::dot) {
    std::cout << "digraph cluster {\n";
    for (std::size_t k = 0; k < cl.size(); ++k) {
      std::cout << "  p" << k + 1 << " [label=\"p" << k + 1 << " (" << cl.mults[k] << ")\"];\n";
    }
    for (std::size_t jdx = 0; jdx < cl.size(); ++jdx) {
      for (std::size_t i : cl.proximate_to[jdx]) {
        std::cout << "  p" << jdx + 1 << " -> p" << i + 1 << ";\n";
      }
    }
    std::cout << "}\n";
  } else if (format == Format::json_format) {
    emit_json(cluster_json(cl));
  } else {
    std::cout << "n = " << cl.size() << ", points on the line at infinity: " << cl.l_prefix
              << "\nmultiplicities: " << render_seq(cl.mults) << "\n";
  }
  return 0;
}

json dual_graph_json(const IntersectionData& data) {
  json edges = json::array();
  for (const auto& [a, b] : data.edges) {
    edges.push_back(json::array({"E" + std::to_string(a), "E" + std::to_string(b)}));
  }
  json selfs = json::array();
  for (const Int& v : data.self_intersections) selfs.push_back(enc(v));
  return json{{"n", data.n},
              {"ltilde_self", enc(data.ltilde_self)},
              {"ltilde_meets", "E" + std::to_string(data.ltilde_meets)},
              {"self_intersections", selfs},
              {"edges", edges},
              {"boundary_case", data.boundary_case}};
}

void print_dual_graph_dot(const IntersectionData& data) {
  // nodes first, then edges
  std::cout << "graph dual_graph {\n";
  std::cout << "  Ltilde [label=\"Ltilde (" << data.ltilde_self << ")\"];\n";
  for (std::size_t k = 1; k <= data.n; ++k) {
    std::cout << "  E" << k << " [label=\"E" << k << " (" << data.self_intersections[k - 1]
              << ")\"];\n";
  }
  std::cout << "  Ltilde -- E" << data.ltilde_meets << ";\n";
  for (const auto& [a, b] : data.edges) {
    std::cout << "  E" << a << " -- E" << b << ";\n";
  }
  std::cout << "}\n";
}

int run_dualgraph(const std::string& seq_lit, const Int& last, Format format) {
  TypeASequence t = make_type_a(require_delta(seq_lit), last);
  IntersectionData data = dual_graph(t);
  if (format == Format::dot) {
    print_dual_graph_dot(data);
  } else if (format == Format::json_format) {
    emit_json(dual_graph_json(data));
  } else {
    std::cout << "n = " << data.n << ", Ltilde^2 = " << data.ltilde_self << ", Ltilde meets E"
              << data.ltilde_meets << "\n";
    for (const auto& [a, b] : data.edges) std::cout << "  E" << a << " -- E" << b << "\n";
  }
  return 0;
}

int run_intersections(const std::string& seq_lit, const Int& last, Format format) {
  TypeASequence t = make_type_a(require_delta(seq_lit), last);
  IntersectionData data = dual_graph(t);
  if (format == Format::dot) {
    print_dual_graph_dot(data);
    return 0;
  }
  auto gram = data.gram();
  json basis = json::array();
  basis.push_back("Ltilde");
  for (std::size_t k = 1; k <= data.n; ++k) basis.push_back("E" + std::to_string(k));
  json rows = json::array();
  for (const auto& row : gram) {
    json r = json::array();
    for (long long v : row) r.push_back(v);
    rows.push_back(r);
  }
  json doc{{"basis", basis}, {"gram", rows}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    for (const auto& row : gram) {
      for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? " " : "") << row[c];
      std::cout << "\n";
    }
  }
  return 0;
}

int run_nef(const std::string& seq_lit, const Int& last, Format format) {
  TypeASequence t = make_type_a(require_delta(seq_lit), last);
  NefReport report = nef_effective_check(t);
  json doc{{"delta", enc(t.delta.values())},
           {"last", enc(last)},
           {"d_dot_ltilde", enc(report.d_dot_ltilde)},
           {"d_dot_e", enc(report.d_dot_e)},
           {"ltilde_coefficient", enc(report.ltilde_coefficient)},
           {"coefficients", enc(report.coefficients)},
           {"d_squared", enc(report.d_squared)},
           {"nef", report.nef},
           {"effective", report.effective}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    std::cout << "D.Ltilde = " << report.d_dot_ltilde << ", D^2 = " << report.d_squared << "\n"
              << "nef: " << (report.nef ? "yes" : "no")
              << ", effective: " << (report.effective ? "yes" : "no") << "\n";
  }
  return 0;
}

std::string monomial_text(long long ex, long long ey) {
  std::string out;
  if (ex > 0) {
    out += "x";
    if (ex > 1) out += "^" + std::to_string(ex);
  }
  if (ey > 0) {
    if (!out.empty()) out += "*";
    out += "y";
    if (ey > 1) out += "^" + std::to_string(ey);
  }
  if (out.empty()) out = "1";
  return out;
}

std::string poly_text(const CurvePolynomial::Poly& poly) {
  // highest y first, then highest x
  std::vector<std::pair<CurvePolynomial::Monomial, Int>> terms(poly.begin(), poly.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [mono, coeff] : terms) {
    const bool negative = coeff < 0;
    Int magnitude = negative ? -coeff : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body = monomial_text(mono.first, mono.second);
    if (magnitude != 1 || body == "1") {
      out += magnitude.str();
      if (body != "1") out += "*";
    }
    if (body != "1") out += body;
  }
  if (out.empty()) out = "0";
  return out;
}

int run_curve(const std::string& seq_lit, Format format) {
  DeltaSequence d = require_delta(seq_lit);
  CurvePolynomial family = curve_polynomial(d);
  const std::size_t g = d.g();

  json members = json::array();
  members.push_back({{"name", "q0"}, {"text", "x"}});
  members.push_back({{"name", "q1"}, {"text", "y"}});
  for (std::size_t i = 1; i <= g; ++i) {
    std::string recurrence = "q" + std::to_string(i) + "^" + d.profile().n_at(i).str() + " - ";
    std::string product;
    for (std::size_t j = 0; j < family.exponents[i - 1].size(); ++j) {
      const Int& e = family.exponents[i - 1][j];
      if (e == 0) continue;
      if (!product.empty()) product += "*";
      product += (j == 0 ? "x" : (j == 1 ? "y" : "q" + std::to_string(j)));
      if (e != 1) product += "^" + e.str();
    }
    recurrence += product.empty() ? "1" : product;
    members.push_back({{"name", "q" + std::to_string(i + 1)},
                       {"recurrence", recurrence},
                       {"exponents", enc(family.exponents[i - 1])}});
  }
  json terms = json::array();
  {
    std::vector<std::pair<CurvePolynomial::Monomial, Int>> sorted(family.q.back().begin(),
                                                                  family.q.back().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      if (a.first.second != b.first.second) return a.first.second > b.first.second;
      return a.first.first > b.first.first;
    });
    for (const auto& [mono, coeff] : sorted) {
      terms.push_back({{"coeff", enc(coeff)}, {"x", mono.first}, {"y", mono.second}});
    }
  }
  json doc{{"input", enc(d.values())},
           {"family", members},
           {"expanded", json{{"terms", terms}, {"text", poly_text(family.q.back())}}}};
  if (format == Format::json_format) {
    emit_json(doc);
  } else {
    for (const auto& member : members) {
      std::cout << member["name"].get<std::string>();
      if (member.contains("recurrence")) {
        std::cout << " = " << member["recurrence"].get<std::string>();
      } else {
        std::cout << " = " << member["text"].get<std::string>();
      }
      std::cout << "\n";
    }
    std::cout << "q" << g + 1 << " expanded: " << poly_text(family.q.back()) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact delta-sequence calculus and surface-at-infinity combinatorics"};
  app.require_subcommand(1);

  // shared option storage
  std::string seq, seq2, left, right, num, den, format_name = "text";
  std::string mu_lit, beta_lit, alpha_lit, delta0_lit, last_lit = "0", bound_lit, ij_i, ij_j,
              at_lit, limit_lit, jobs_lit = "1";
  bool all = false, trivial_mode = false;

  auto add_format = [&format_name](CLI::App* cmd, bool dot = false) {
    cmd->add_option("--format", format_name,
                    dot ? "output format: text, json or dot" : "output format: text or json");
  };

  auto* c_validate = app.add_subcommand("validate", "check the delta-sequence conditions");
  c_validate->add_option("seq", seq, "comma-separated positive integers")->required();
  add_format(c_validate);

  auto* c_semigroup = app.add_subcommand("semigroup", "numerical-semigroup data of generators");
  c_semigroup->add_option("seq", seq, "generators")->required();
  add_format(c_semigroup);

  auto* c_glue = app.add_subcommand("glue", "glue two delta-sequences, or one against N");
  c_glue->add_option("--left", left, "left delta-sequence");
  c_glue->add_option("--right", right, "right delta-sequence");
  c_glue->add_option("--mu", mu_lit, "gluing multiplier (>= 2)");
  c_glue->add_option("--beta", beta_lit, "element of the left semigroup");
  c_glue->add_option("--trivial", seq2, "delta-sequence for the pair construction");
  c_glue->add_option("--alpha", alpha_lit, "scale factor for the pair construction");
  add_format(c_glue);

  auto* c_decompose = app.add_subcommand("decompose", "gluing decomposition with replay check");
  c_decompose->add_option("seq", seq, "delta-sequence")->required();
  add_format(c_decompose);

  auto* c_enumerate = app.add_subcommand("enumerate", "all delta-sequences with a fixed delta0");
  c_enumerate->add_option("--delta0", delta0_lit, "first element")->required();
  c_enumerate->add_option("--limit", limit_lit, "print at most this many sequences");
  c_enumerate->add_option("--jobs", jobs_lit, "parallel workers (output order is unchanged)");
  add_format(c_enumerate);

  auto* c_multiples = app.add_subcommand("multiples", "elements of the form n_j*delta_j");
  c_multiples->add_option("seq", seq, "delta-sequence")->required();
  add_format(c_multiples);

  auto* c_shorten = app.add_subcommand("shorten", "remove multiples via the removal theorem");
  c_shorten->add_option("seq", seq, "delta-sequence")->required();
  c_shorten->add_option("--i", ij_i, "index of the multiple");
  c_shorten->add_option("--j", ij_j, "index with delta_i = n_j*delta_j");
  c_shorten->add_flag("--all", all, "apply greedily until no multiple is removable");
  add_format(c_shorten);

  auto* c_primitive = app.add_subcommand("primitive", "search for a primitive delta-sequence");
  c_primitive->add_option("seq", seq, "delta-sequence")->required();
  c_primitive->add_option("--exhaustive-bound", bound_lit,
                          "element bound for the certification search");
  add_format(c_primitive);

  auto* c_refine = app.add_subcommand("refine", "order-one same-semigroup refinements");
  c_refine->add_option("seq", seq, "delta-sequence")->required();
  c_refine->add_option("--at", at_lit, "only insertions at this position (0 = prepend)");
  add_format(c_refine);

  auto* c_nested = app.add_subcommand("nested", "maximal nested refinement chains");
  c_nested->add_option("seq", seq, "delta-sequence")->required();
  add_format(c_nested);

  auto* c_insert = app.add_subcommand("insert", "insert a chain between two elements");
  c_insert->add_option("seq", seq, "delta-sequence")->required();
  c_insert->add_option("--at", at_lit, "slot r: chain goes between delta_r and delta_{r+1}")
      ->required();
  c_insert->add_option("--chain", seq2, "comma-separated chain")->required();
  add_format(c_insert);

  auto* c_puiseux = app.add_subcommand("puiseux", "Puiseux pairs and exponents");
  c_puiseux->add_option("seq", seq, "delta-sequence")->required();
  add_format(c_puiseux);

  auto* c_cf = app.add_subcommand("cf", "continued-fraction quotients of num/den");
  c_cf->add_option("num", num, "numerator")->required();
  c_cf->add_option("den", den, "denominator")->required();
  add_format(c_cf);

  auto* c_typea = app.add_subcommand("typea", "type-A data: m, n, semigroup at infinity");
  c_typea->add_option("seq", seq, "delta-sequence")->required();
  c_typea->add_option("--last", last_lit, "final value delta_{g+1}")->required();
  add_format(c_typea);

  auto* c_cluster = app.add_subcommand("cluster", "blowup cluster of a type-A sequence");
  c_cluster->add_option("seq", seq, "delta-sequence")->required();
  c_cluster->add_option("--last", last_lit, "final value delta_{g+1}")->required();
  add_format(c_cluster, true);

  auto* c_dualgraph = app.add_subcommand("dualgraph", "dual graph of the exceptional divisors");
  c_dualgraph->add_option("seq", seq, "delta-sequence")->required();
  c_dualgraph->add_option("--last", last_lit, "final value delta_{g+1}")->required();
  add_format(c_dualgraph, true);

  auto* c_intersections =
      app.add_subcommand("intersections", "Gram matrix of [Ltilde], [E_1], ..., [E_n]");
  c_intersections->add_option("seq", seq, "delta-sequence")->required();
  c_intersections->add_option("--last", last_lit, "final value delta_{g+1}")->required();
  add_format(c_intersections, true);

  auto* c_curve = app.add_subcommand("curve", "defining polynomial family q_0..q_{g+1}");
  c_curve->add_option("seq", seq, "delta-sequence")->required();
  add_format(c_curve);

  auto* c_nef = app.add_subcommand("nef", "nef/effective report for the divisor D");
  c_nef->add_option("seq", seq, "delta-sequence")->required();
  c_nef->add_option("--last", last_lit, "final value delta_{g+1}")->required();
  add_format(c_nef);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const bool graph_cmd = c_cluster->parsed() || c_dualgraph->parsed() || c_intersections->parsed();
    Format format = parse_format(format_name, graph_cmd);

    if (c_validate->parsed()) return run_validate(seq, format);
    if (c_semigroup->parsed()) return run_semigroup(seq, format);
    if (c_glue->parsed()) {
      trivial_mode = !seq2.empty();
      if (trivial_mode) {
        if (alpha_lit.empty() || beta_lit.empty()) {
          throw UsageError{"glue --trivial requires --alpha and --beta"};
        }
        return run_glue_trivial(seq2, parse_int_or_throw(alpha_lit, "--alpha"),
                                parse_int_or_throw(beta_lit, "--beta"), format);
      }
      if (left.empty() || right.empty() || mu_lit.empty() || beta_lit.empty()) {
        throw UsageError{"glue requires --left, --right, --mu and --beta"};
      }
      return run_glue_pair(left, right, parse_int_or_throw(mu_lit, "--mu"),
                           parse_int_or_throw(beta_lit, "--beta"), format);
    }
    if (c_decompose->parsed()) return run_decompose(seq, format);
    if (c_enumerate->parsed()) {
      std::optional<std::size_t> limit;
      if (!limit_lit.empty()) {
        limit = to_index(parse_int_or_throw(limit_lit, "--limit"), "limit");
      }
      unsigned jobs = static_cast<unsigned>(to_index(parse_int_or_throw(jobs_lit, "--jobs"), "jobs"));
      if (jobs == 0) throw UsageError{"--jobs must be at least 1"};
      return run_enumerate(parse_int_or_throw(delta0_lit, "--delta0"), limit, jobs, format);
    }
    if (c_multiples->parsed()) return run_multiples(seq, format);
    if (c_shorten->parsed()) {
      std::optional<std::size_t> i, j;
      if (!ij_i.empty()) i = to_index(parse_int_or_throw(ij_i, "--i"), "index i");
      if (!ij_j.empty()) j = to_index(parse_int_or_throw(ij_j, "--j"), "index j");
      if (i.has_value() != j.has_value()) throw UsageError{"--i and --j must be given together"};
      return run_shorten(seq, i, j, all, format);
    }
    if (c_primitive->parsed()) {
      std::optional<Int> bound;
      if (!bound_lit.empty()) bound = parse_int_or_throw(bound_lit, "--exhaustive-bound");
      return run_primitive(seq, bound, format);
    }
    if (c_refine->parsed()) {
      std::optional<std::size_t> at;
      if (!at_lit.empty()) at = to_index(parse_int_or_throw(at_lit, "--at"), "position");
      return run_refine(seq, at, format);
    }
    if (c_nested->parsed()) return run_nested(seq, format);
    if (c_insert->parsed()) {
      return run_insert(seq, to_index(parse_int_or_throw(at_lit, "--at"), "position"), seq2,
                        format);
    }
    if (c_puiseux->parsed()) return run_puiseux(seq, format);
    if (c_cf->parsed()) return run_cf(num, den, format);
    if (c_typea->parsed()) return run_typea(seq, parse_int_or_throw(last_lit, "--last"), format);
    if (c_cluster->parsed()) {
      return run_cluster(seq, parse_int_or_throw(last_lit, "--last"), format);
    }
    if (c_dualgraph->parsed()) {
      return run_dualgraph(seq, parse_int_or_throw(last_lit, "--last"), format);
    }
    if (c_intersections->parsed()) {
      return run_intersections(seq, parse_int_or_throw(last_lit, "--last"), format);
    }
    if (c_curve->parsed()) return run_curve(seq, format);
    if (c_nef->parsed()) return run_nef(seq, parse_int_or_throw(last_lit, "--last"), format);
    throw UsageError{"no subcommand selected"};
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.message << "\n";
    return 2;
  } catch (const DomainError& e) {
    json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
