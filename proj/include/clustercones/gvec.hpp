#pragma once

// Weight vectors of cluster variables, computed with principal coefficients:
// every unfrozen vertex v[i;j] gets a frozen companion w[i;j] carrying a
// coefficient variable X[i;j], and the weight of a variable is read off the
// single term of its Laurent expansion that carries no X factor.  Also the
// closed form for the variables met along the reflection plan, the iterative
// rules for the minors D[1..i|J], their 0/1 triangular patterns, and the
// change of basis identifying the two cone presentations.

#include <map>
#include <string>
#include <vector>

#include "clustercones/cluster.hpp"
#include "clustercones/errors.hpp"
#include "clustercones/exactalg.hpp"
#include "clustercones/quiver.hpp"

namespace cc {

// Companion vertices are encoded as negative label pairs so they can live in
// the same quiver as the base vertices.
inline VLabel wl(int i, int j) { return vl(-i, -j); }
inline bool is_companion(const VLabel& v) { return v.i < 0; }

// Integer weight vector in the basis dual to the vertex basis; zero
// coordinates are never stored.
using GVector = std::map<VLabel, int>;
std::string to_string(const GVector& g);  // "-e*[1;2] + e*[1;3] + e*[2;2]"

struct PrincipalSeed {
  Seed seed;  // extended quiver; X variables sit at the companion labels
  std::vector<VLabel> base_vertices;
};

// Adjoin w[i;j] (frozen, variable X[i;j]) and an arrow v[i;j] -> w[i;j] for
// every unfrozen vertex of s.  The variables of s are replaced by fresh
// indeterminates A[i;j] named after the vertex labels: weights are defined
// relative to the seed's own cluster, not to whatever data its variables
// happened to be expressed in.
PrincipalSeed with_principal_coefficients(const Seed& s);

// Seed mutation on the extended quiver.  Every arrow between k and the
// companion set must point away from k before mutating -- this is what makes
// exactly one exchange term X-free -- and a violation throws Error.
PrincipalSeed mutate_principal(const PrincipalSeed& ps, const VLabel& k);

// Specialize every X variable to 1, recovering the plain variable.
LaurentPoly project_x_to_one(const LaurentPoly& p);
RationalFn project_x_to_one(const RationalFn& f);
// Base-quiver seed with all X variables set to 1; inverse of the extension.
Seed project_principal(const PrincipalSeed& ps);

// Drop every Laurent term of the variable at v containing an X factor;
// exactly one term must survive, and its exponent vector is returned.
GVector gvector_of(const PrincipalSeed& ps, const VLabel& v);  // CentralFiberAmbiguous

// Weight, at the reflection plan's final seed, of the variable created by the
// k-th mutation at v[i;j] (k = 0 names the initial variable; k = n-j the
// final one).  The _cell form keeps coordinates at the frozen diagonal
// vertices; the _U form zeroes them, matching the quiver without a diagonal.
GVector closed_form_cell(int n, int i, int j, int k);  // OutOfRange
GVector closed_form_U(int n, int i, int j, int k);     // OutOfRange

// Weight at the initial seed of D[1..i|J], by the iterative rules: contiguous
// J is a seed variable; {1} u contiguous is the three-term base case; a
// uniform column shift moves every second index; and a leading 1 with gaps
// substitutes the base-case vectors coefficient by coefficient.
GVector gvector_minor(int n, const std::vector<int>& J);  // InvalidIndexSet

// 0/1 triangular pattern attached to D[1..i|J]: entry (k;l) = 1 iff k <= i
// and J[i-k] >= n+1-l.  Only the 1-entries are stored.
GVector gt_pattern(int n, const std::vector<int>& J);  // InvalidIndexSet

// Change of basis on the triangle {(i;j) : 1 <= i <= j <= n} carrying the
// pattern cone onto the tropical cone: x[n;n] = y[n;n], x[i;i] =
// y[i;n] - y[i;n-1], x[i;n] = y[i;i] - y[i+1;i+1], and for i < j < n
// x[i;j] = y[i;n-j+i] - y[i+1;n-j+i+1] + y[i+1;n-j+i] - y[i;n-j+i-1].
// Inputs may omit zero coordinates but must not use labels off the triangle.
GVector psi(int n, const GVector& y);          // DimensionMismatch
GVector psi_inverse(int n, const GVector& x);  // DimensionMismatch
std::map<VLabel, Rat> psi(int n, const std::map<VLabel, Rat>& y);
std::map<VLabel, Rat> psi_inverse(int n, const std::map<VLabel, Rat>& x);
// Determinant of the change of basis (always +-1).
Rat psi_det(int n);

}  // namespace cc
