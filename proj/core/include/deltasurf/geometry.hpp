#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "deltasurf/delta_core.hpp"
#include "deltasurf/integer.hpp"
#include "deltasurf/semigroup.hpp"

namespace deltasurf {

// num/den, kept unreduced so printed exponents match their defining data
// (405/60 stays 405/60).
struct Fraction {
  Int num;
  Int den;
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Puiseux pairs (m_i, e_i), i = 0..r, and the exponents
// beta'_0 = 1/1, beta'_1 = m_0/e_0, beta'_i = (e_{i-1}+m_{i-1})/e_{i-1}.
// Non-degenerate: r = g-1, e_0 = delta_0-delta_1, m_0 = delta_0,
//                 e_i = d_{i+1}, m_i = n_i*delta_i - delta_{i+1}.
// Degenerate:     r = g-2, e_0 = d_2 = delta_0-delta_1,
//                 m_0 = delta_0 + n_1*delta_1 - delta_2,
//                 e_i = d_{i+2}, m_i = n_{i+1}*delta_{i+1} - delta_{i+2}.
struct PuiseuxData {
  std::vector<std::pair<Int, Int>> pairs;  // (m_i, e_i)
  std::vector<Fraction> exponents;         // indices 0..r+1, unreduced
  bool degenerate;
};

// Throws DomainError("smooth_at_infinity") when the pair list would be empty
// (degenerate two-element sequences).
PuiseuxData puiseux(const DeltaSequence& d);

// Plain Euclid quotients of num/den; integers yield a single quotient.
std::vector<Int> continued_fraction(const Int& num, const Int& den);

// Multiplicity sequence of the germ: for each pair (m, e) the Euclidean
// remainder blocks (e repeated q_1 times, r_1 repeated q_2 times, ...).
// Non-increasing, ends in 1s; its length is the resolution length.
std::vector<Int> multiplicity_sequence(const PuiseuxData& p);

// A delta-sequence of type A: a non-trivial delta-sequence plus a final value
// delta_{g+1} with 0 <= delta_{g+1} <= n_g * delta_g.  m is the resolution
// length of the germ; n = n_g * delta_g + m - delta_{g+1} counts the blowup
// centers.
struct TypeASequence {
  DeltaSequence delta;
  Int last;
  std::size_t m;
  Int n;
  std::vector<Int> germ_multiplicities;  // length m
};

TypeASequence make_type_a(const DeltaSequence& d, const Int& last);

// Blowup cluster: multiplicities of the n infinitely near points (germ
// sequence extended by n-m trailing 1s), the proximity relation, and the
// count of initial points on the line at infinity.
struct Cluster {
  Int delta0;
  std::vector<Int> mults;                           // index k <-> point p_{k+1}
  std::vector<std::vector<std::size_t>> proximate_to;  // 0-based targets, ascending
  std::vector<char> satellite;
  std::size_t l_prefix;

  std::size_t size() const { return mults.size(); }
  // Inverse relation: for each point, the points proximate to it.
  std::vector<std::vector<std::size_t>> proximate_children() const;
};

Cluster cluster(const TypeASequence& t);

// Intersection data of the NE(X) generators over the ordered basis
// ([Ltilde], [E_1], ..., [E_n]).
struct IntersectionData {
  std::size_t n;
  Cluster cl;
  std::vector<Int> self_intersections;  // [E_i]^2, index 0 <-> E_1
  Int ltilde_self;                      // [Ltilde]^2 = 1 - l_prefix
  std::size_t ltilde_meets;             // 1-based index i with Ltilde.E_i = 1
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // 1-based, i < j
  bool boundary_case;                   // delta_{g+1} = n_g*delta_g, so n = m

  // Dense Gram matrix; guarded against very large n.
  std::vector<std::vector<long long>> gram() const;
  // Classical proximity matrix (1 on the diagonal, -1 at (j, i) for p_j -> p_i).
  std::vector<std::vector<int>> proximity_matrix() const;
};

IntersectionData dual_graph(const TypeASequence& t);

// Semigroup generated by the type-A sequence (delta_{g+1} = 0 adds nothing).
NumericalSemigroup semigroup_at_infinity(const TypeASequence& t);

// Report on D = phi*E_0^* - sum mult_j*E_j^* with phi the intersection of the
// line with the general germ (= delta_0): D against the cone generators, its
// coordinates in the ([Ltilde], [E_i]) basis, and D^2.
struct NefReport {
  Int d_dot_ltilde;
  std::vector<Int> d_dot_e;
  Int ltilde_coefficient;
  std::vector<Int> coefficients;
  Int d_squared;
  bool nef;
  bool effective;
};

NefReport nef_effective_check(const Cluster& cl);
NefReport nef_effective_check(const TypeASequence& t);

// The polynomial family q_0 = x, q_1 = y,
// q_{i+1} = q_i^{n_i} - prod_j q_j^{a_ij}  with  sum_j a_ij*delta_j = n_i*delta_i
// and 0 <= a_ij < n_j for j >= 1 (lambda_i fixed to 1).
struct CurvePolynomial {
  using Monomial = std::pair<long long, long long>;  // (x exponent, y exponent)
  using Poly = std::map<Monomial, Int>;

  std::vector<Poly> q;                   // q_0 .. q_{g+1}, fully expanded
  std::vector<std::vector<Int>> exponents;  // row i-1 holds (a_{i,0}, ..., a_{i,i-1})
};

CurvePolynomial curve_polynomial(const DeltaSequence& d);

}  // namespace deltasurf
