#pragma once

// Dual-torus side of the seed data: monomial mutation of X-coordinates,
// pullbacks of the coordinate monomial z^{-e_f} attached to a frozen vertex f
// from a chart where f is a sink, the potentials assembled from one such
// pullback per frozen vertex, and their tropicalization into integer
// inequality systems.

#include <map>
#include <string>
#include <vector>

#include "clustercones/errors.hpp"
#include "clustercones/exactalg.hpp"
#include "clustercones/quiver.hpp"

namespace cc {

// A lattice exponent on the dual torus: integer coordinates in the basis
// {e_v} indexed by quiver vertices.  z^m is the corresponding monomial.
using XMonomial = std::map<VLabel, int>;

LaurentPoly z_monomial(const XMonomial& m);
XMonomial x_exponent(const Monomial& t);  // Error unless all vars are X-kind

// Pullback of a Laurent polynomial along the dual-torus mutation at k.  The
// input is written in the coordinates of the seed obtained by mutating q at
// k; the output is written in the coordinates of q itself.  Each monomial
// z^m picks up the factor (1 + z^{e_k})^c with c = -sum_v m_v eps(v, k)
// evaluated in q after the basis change e'_v = e_v + max(eps(v,k), 0) e_k,
// e'_k = -e_k.  A negative c would leave the Laurent ring.
// Errors: FrozenVertex, UnknownVertex, NonLaurentPullback.
LaurentPoly x_mutate(const LaurentPoly& poly, const VLabel& k, const Quiver& q);

// Shortest mutation plan found that turns the frozen vertex f into a sink.
// Looks for an induced outgoing path of simple arrows through unfrozen
// vertices first (mutating along such a path reroutes all of f's outgoing
// arrows into a single returning one), then falls back to a breadth-first
// search over unfrozen mutation sequences of length <= 12.
// Errors: FrozenVertex if f is mutable, NoOptimizedSeedFound on exhaustion.
MutationPlan optimized_plan(const Quiver& q, const VLabel& f);

struct ThetaFunction {
  LaurentPoly poly;    // in the X-coordinates of the seed named by seed_tag
  VLabel frozen_index;
  std::string seed_tag;
};

bool all_unit_coefficients(const ThetaFunction& t);

// Pull the monomial z^{-e_f} back from the end of `plan` -- where f must be
// a sink -- to the coordinates of `target`, one mutation at a time in
// reverse order.  The result carries positive coefficients and contains the
// pure term z^{-e_f} exactly once; both are checked.
ThetaFunction theta_at_seed(const VLabel& f, const Quiver& target,
                            const MutationPlan& plan,
                            const std::string& seed_tag = "");

struct Potential {
  Quiver quiver;  // the common seed whose coordinates the summands use
  std::vector<ThetaFunction> summands;
};

// Potential of the unipotent quiver in its arrow-reversed orientation (the
// one reached by the reflection plan), one theta per frozen vertex (i;n):
//   theta_{i;n} = sum_{j=0}^{i-1} z^{-e_{i;n} - e_{i-1;n-1} - ... - e_{i-j;n-j}}.
Potential potential_U(int n);

// Potential of the full-cell quiver in its initial orientation, with
// summands for every frozen vertex:
//   theta_{i;n} = sum_{j=0}^{n-i-1} z^{-e_{i;n} - e_{i;n-1} - ... - e_{i;n-j}},
//   theta_{i;i} = sum_{j=0}^{i-1}   z^{-e_{i;i} - e_{i-1;i} - ... - e_{i-j;i}},
// plus the isolated z^{-e_{n;n}} when include_nn.
Potential potential_GmodU(int n, bool include_nn);

struct IneqSystem {
  std::vector<VLabel> order;           // coordinate order (lexicographic)
  std::vector<std::vector<int>> rows;  // each row r imposes <r, x> >= 0
};

// Drop zero rows, divide each row by its content, and deduplicate keeping
// first occurrences.
IneqSystem normalized(IneqSystem sys);

// One row per monomial z^m of the potential: the row is -m written out in
// the coordinate order of the potential's quiver, so that the tropicalized
// potential is nonnegative exactly on {x : all rows >= 0}.  Rows are
// normalized.  Errors: Error on a non-positive coefficient.
IneqSystem tropicalize(const Potential& p);

}  // namespace cc
