#include "deltasurf/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "deltasurf/error.hpp"

namespace deltasurf {

PuiseuxData puiseux(const DeltaSequence& d) {
  if (d.trivial()) fail("smooth_at_infinity", "the trivial sequence has a smooth germ");
  const std::size_t g = d.g();
  const DNProfile& p = d.profile();
  const IntSequence& v = d.values();

  PuiseuxData out;
  out.degenerate = d.degenerate();
  if (out.degenerate) {
    if (g < 2) fail("smooth_at_infinity",
                    "(" + to_string(v) + ") has an empty Puiseux pair list; the germ is smooth");
    out.pairs.emplace_back(v[0] + p.n_at(1) * v[1] - v[2], p.d_at(2));
    for (std::size_t i = 1; i + 2 <= g; ++i) {
      out.pairs.emplace_back(p.n_at(i + 1) * v[i + 1] - v[i + 2], p.d_at(i + 2));
    }
  } else {
    out.pairs.emplace_back(v[0], v[0] - v[1]);
    for (std::size_t i = 1; i + 1 <= g; ++i) {
      out.pairs.emplace_back(p.n_at(i) * v[i] - v[i + 1], p.d_at(i + 1));
    }
  }

  // gcd(m_i, e_i) = e_{i+1} and the last pair is coprime; anything else means
  // the case formulas were applied to a non-delta-sequence.
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    const auto& [m, e] = out.pairs[i];
    if (m <= 0 || e <= 0) throw std::logic_error("puiseux: nonpositive pair entry");
    const Int link = gcd(m, e);
    const Int expected = i + 1 < out.pairs.size() ? out.pairs[i + 1].second : Int(1);
    if (link != expected) throw std::logic_error("puiseux: broken gcd chain between pairs");
  }

  out.exponents.push_back({Int(1), Int(1)});
  out.exponents.push_back({out.pairs[0].first, out.pairs[0].second});
  for (std::size_t i = 1; i < out.pairs.size(); ++i) {
    out.exponents.push_back({out.pairs[i].second + out.pairs[i].first, out.pairs[i].second});
  }
  return out;
}

std::vector<Int> continued_fraction(const Int& num, const Int& den) {
  if (num <= 0 || den <= 0) fail("domain", "continued_fraction requires positive integers");
  std::vector<Int> out;
  Int a = num, b = den;
  while (b > 0) {
    out.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  return out;
}

std::vector<Int> multiplicity_sequence(const PuiseuxData& p) {
  if (p.pairs.empty()) fail("smooth_at_infinity", "empty Puiseux pair list");
  std::vector<Int> out;
  for (const auto& [m, e] : p.pairs) {
    Int a = m, b = e;
    while (b > 0) {
      const Int q = a / b;
      for (Int k = 0; k < q; ++k) out.push_back(b);
      Int r = a % b;
      a = b;
      b = r;
    }
  }
  for (std::size_t k = 1; k < out.size(); ++k) {
    if (out[k] > out[k - 1]) throw std::logic_error("multiplicity sequence not non-increasing");
  }
  if (out.empty() || out.back() != 1) {
    throw std::logic_error("multiplicity sequence does not end at 1");
  }
  return out;
}

TypeASequence make_type_a(const DeltaSequence& d, const Int& last) {
  PuiseuxData pairs = puiseux(d);  // rejects smooth germs
  const Int bound = d.profile().n_at(d.g()) * d.back();
  if (last < 0 || last > bound) {
    fail("last_out_of_range", "delta_{g+1} = " + last.str() + " must satisfy 0 <= delta_{g+1} <= " +
                                  "n_g*delta_g = " + bound.str());
  }
  std::vector<Int> germ = multiplicity_sequence(pairs);
  TypeASequence t{d, last, germ.size(), bound + Int(germ.size()) - last, std::move(germ)};
  return t;
}

std::vector<std::vector<std::size_t>> Cluster::proximate_children() const {
  std::vector<std::vector<std::size_t>> children(mults.size());
  for (std::size_t j = 0; j < mults.size(); ++j) {
    for (std::size_t i : proximate_to[j]) children[i].push_back(j);
  }
  return children;
}

Cluster cluster(const TypeASequence& t) {
  const std::size_t n = to_index(t.n, "cluster size");
  Cluster cl;
  cl.delta0 = t.delta.front();
  cl.mults = t.germ_multiplicities;
  cl.mults.resize(n, Int(1));

  // p_j is proximate to p_i (j > i) iff mult_{i+1} + ... + mult_j <= mult_i.
  cl.proximate_to.assign(n, {});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Int cumulative = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      cumulative += cl.mults[j];
      if (cumulative > cl.mults[i]) break;
      cl.proximate_to[j].push_back(i);
    }
  }
  for (auto& targets : cl.proximate_to) std::sort(targets.begin(), targets.end());
  cl.satellite.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (cl.proximate_to[j].size() >= 2) cl.satellite[j] = 1;
  }

  // The points on the line at infinity are the initial block whose
  // multiplicities sum to delta_0 exactly.
  Int sum = 0;
  std::size_t k = 0;
  while (k < n && sum < cl.delta0) {
    sum += cl.mults[k];
    ++k;
  }
  if (sum != cl.delta0) {
    throw std::logic_error("cluster: the multiplicity prefix does not sum to delta_0");
  }
  cl.l_prefix = k;
  return cl;
}

IntersectionData dual_graph(const TypeASequence& t) {
  IntersectionData data;
  data.cl = cluster(t);
  const Cluster& cl = data.cl;
  const std::size_t n = cl.size();
  data.n = n;
  data.boundary_case = (t.last == t.delta.profile().n_at(t.delta.g()) * t.delta.back());

  const auto children = cl.proximate_children();
  data.self_intersections.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    data.self_intersections.push_back(Int(-1) - Int(children[i].size()));
  }
  data.ltilde_self = Int(1) - Int(cl.l_prefix);

  // Ltilde.E_i = [i <= l] - #{j <= l : p_j -> p_i}; exactly one positive entry.
  data.ltilde_meets = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Int value = i < cl.l_prefix ? 1 : 0;
    for (std::size_t j : children[i]) {
      if (j < cl.l_prefix) value -= 1;
    }
    if (value != 0) {
      if (value != 1 || data.ltilde_meets != 0) {
        throw std::logic_error("dual_graph: Ltilde row is not a single unit entry");
      }
      data.ltilde_meets = i + 1;
    }
  }
  if (data.ltilde_meets == 0) throw std::logic_error("dual_graph: Ltilde meets no divisor");

  // E_i.E_j = [p_j -> p_i] - #{k : p_k -> p_i and p_k -> p_j}: an edge exactly
  // when p_j -> p_i and no later point is proximate to both.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i : cl.proximate_to[j]) {
      bool shared = false;
      for (std::size_t k : children[j]) {
        if (std::binary_search(children[i].begin(), children[i].end(), k)) {
          shared = true;
          break;
        }
      }
      if (!shared) data.edges.emplace_back(i + 1, j + 1);
    }
  }
  std::sort(data.edges.begin(), data.edges.end());
  return data;
}

std::vector<std::vector<long long>> IntersectionData::gram() const {
  if (n > 2000) {
    fail("resource_limit", "dense Gram matrix with n = " + std::to_string(n) +
                               " exceeds the supported size; use the dual graph form");
  }
  const auto children = cl.proximate_children();
  std::vector<std::vector<long long>> m(n + 1, std::vector<long long>(n + 1, 0));
  m[0][0] = 1 - static_cast<long long>(cl.l_prefix);
  for (std::size_t i = 0; i < n; ++i) {
    long long v = i < cl.l_prefix ? 1 : 0;
    for (std::size_t j : children[i]) {
      if (j < cl.l_prefix) v -= 1;
    }
    m[0][i + 1] = m[i + 1][0] = v;
  }
  for (std::size_t i = 0; i < n; ++i) {
    m[i + 1][i + 1] = -1 - static_cast<long long>(children[i].size());
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i : cl.proximate_to[j]) {
      long long v = 1;
      for (std::size_t k : children[j]) {
        if (std::binary_search(children[i].begin(), children[i].end(), k)) v -= 1;
      }
      m[i + 1][j + 1] = m[j + 1][i + 1] = v;
    }
  }
  return m;
}

std::vector<std::vector<int>> IntersectionData::proximity_matrix() const {
  if (n > 2000) {
    fail("resource_limit", "dense proximity matrix with n = " + std::to_string(n) +
                               " exceeds the supported size");
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    m[j][j] = 1;
    for (std::size_t i : cl.proximate_to[j]) m[j][i] = -1;
  }
  return m;
}

NumericalSemigroup semigroup_at_infinity(const TypeASequence& t) {
  IntSequence gens = t.delta.values();
  if (t.last > 0) gens.push_back(t.last);
  return NumericalSemigroup::from_generators(gens);
}

NefReport nef_effective_check(const Cluster& cl) {
  const std::size_t n = cl.size();
  const auto children = cl.proximate_children();
  // phi = (line . germ at p) = sum of the multiplicities of the points on L.
  Int phi = 0;
  for (std::size_t i = 0; i < cl.l_prefix; ++i) phi += cl.mults[i];

  NefReport report;
  report.d_dot_ltilde = phi;
  for (std::size_t i = 0; i < cl.l_prefix; ++i) report.d_dot_ltilde -= cl.mults[i];
  report.d_dot_e.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int v = cl.mults[i];
    for (std::size_t j : children[i]) v -= cl.mults[j];
    report.d_dot_e.push_back(std::move(v));
  }

  // D = phi*Ltilde-coefficient expansion: c_j = phi*[j on L] + sum of the
  // coefficients of the points p_j is proximate to, minus mult_j.
  report.ltilde_coefficient = phi;
  report.coefficients.assign(n, Int(0));
  for (std::size_t j = 0; j < n; ++j) {
    Int c = j < cl.l_prefix ? phi : Int(0);
    for (std::size_t i : cl.proximate_to[j]) c += report.coefficients[i];
    c -= cl.mults[j];
    report.coefficients[j] = std::move(c);
  }

  report.d_squared = phi * phi;
  for (const Int& m : cl.mults) report.d_squared -= m * m;

  report.nef = report.d_dot_ltilde >= 0;
  for (const Int& v : report.d_dot_e) report.nef = report.nef && v >= 0;
  report.effective = report.ltilde_coefficient >= 0;
  for (const Int& v : report.coefficients) report.effective = report.effective && v >= 0;
  return report;
}

NefReport nef_effective_check(const TypeASequence& t) { return nef_effective_check(cluster(t)); }

namespace {

using Poly = CurvePolynomial::Poly;

constexpr std::size_t kMaxPolyTerms = 500000;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      CurvePolynomial::Monomial m{ma.first + mb.first, ma.second + mb.second};
      Int& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
    if (out.size() > kMaxPolyTerms) {
      fail("resource_limit", "curve polynomial exceeds the supported term count");
    }
  }
  return out;
}

Poly poly_pow(const Poly& base, Int exponent) {
  Poly result{{{0, 0}, Int(1)}};
  Poly cur = base;
  while (exponent > 0) {
    if ((exponent & 1) == 1) result = poly_mul(result, cur);
    exponent >>= 1;
    if (exponent > 0) cur = poly_mul(cur, cur);
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b) {
  for (const auto& [m, c] : b) {
    Int& slot = a[m];
    slot -= c;
    if (slot == 0) a.erase(m);
  }
  return a;
}

}  // namespace

CurvePolynomial curve_polynomial(const DeltaSequence& d) {
  if (d.trivial()) fail("trivial_sequence", "the trivial sequence has no curve family");
  const std::size_t g = d.g();
  const DNProfile& p = d.profile();
  const IntSequence& v = d.values();
  const FactorForm form = to_factor_form(d);

  CurvePolynomial out;
  out.q.push_back({{{1, 0}, Int(1)}});  // q_0 = x
  out.q.push_back({{{0, 1}, Int(1)}});  // q_1 = y

  for (std::size_t i = 1; i <= g; ++i) {
    // Canonical digits of n_i*delta_i over (delta_0, ..., delta_{i-1}) with
    // 0 <= a_ij < n_j for j >= 1: solve t * (delta_j/d_{j+1}) = value/d_{j+1}
    // modulo n_j from the top down, then a_i0 = remainder / delta_0.
    std::vector<Int> digits(i, Int(0));
    Int value = p.n_at(i) * v[i];
    for (std::size_t j = i - 1; j >= 1; --j) {
      const Int& unit = p.d_at(j + 1);
      const Int& n_j = p.n_at(j);
      Int t = ((value / unit) % n_j) * mod_inverse(form.a[j] % n_j, n_j) % n_j;
      digits[j] = t;
      value -= t * v[j];
      if (value < 0) throw std::logic_error("curve_polynomial: negative remainder");
    }
    if (value % v[0] != 0 || value < 0) {
      throw std::logic_error("curve_polynomial: canonical digits do not close at delta_0");
    }
    digits[0] = value / v[0];

    Int balance = 0;
    for (std::size_t j = 0; j < i; ++j) balance += digits[j] * v[j];
    if (balance != p.n_at(i) * v[i]) {
      throw std::logic_error("curve_polynomial: weight balance violated");
    }

    Poly product{{{0, 0}, Int(1)}};
    for (std::size_t j = 0; j < i; ++j) {
      if (digits[j] > 0) product = poly_mul(product, poly_pow(out.q[j], digits[j]));
    }
    out.q.push_back(poly_sub(poly_pow(out.q[i], p.n_at(i)), product));
    out.exponents.push_back(std::move(digits));
  }
  return out;
}

}  // namespace deltasurf
