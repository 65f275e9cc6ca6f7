#pragma once

// Seeds carry a quiver together with a symbolic cluster variable at every
// vertex, written as a rational function of the initial variables A[i;j].
// The initial variables are interpreted as the contiguous minors
// A[i;j] = D[1..i | j-i+1..j]; identities between variables hold as
// functions of a matrix, not in the free rational-function field, so they
// are certified by evaluation at random determinant-1 matrices.

#include <map>
#include <string>
#include <vector>

#include "clustercones/exactalg.hpp"
#include "clustercones/matrices.hpp"
#include "clustercones/quiver.hpp"

namespace cc {

struct Seed {
  Quiver quiver;
  std::map<VLabel, RationalFn> vars;
};

struct MinorSpec {
  std::vector<int> rows, cols;  // 1-based, strictly increasing, equal sizes

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

std::string to_string(const MinorSpec& m);  // "D[1,2|1,3]"

Rat evaluate_minor(const MinorSpec& m, const RatMatrix& M);

// Seed of the extended quiver (diagonal and last-column vertices frozen)
// with the variable A[i;j] at v[i;j].
Seed initial_seed(int n);

// Point evaluation of the initial variables: A[i;j] -> D[1..i|j-i+1..j](M)
// for all 1 <= i <= j <= n.
std::map<VarId, Rat> initial_minor_point(const RatMatrix& M);

// Exchange relation A_k * A'_k = prod_{arrows out of k} A + prod_{in} A;
// mutates the quiver alongside and replaces only the variable at k.
Seed mutate_seed(const Seed& s, const VLabel& k);  // FrozenVertex, UnknownVertex

// Minor the variable at v[i;j] pulls back to after its k-th mutation in the
// reflection plan: rows 1..k+i, columns {1..k} u {k+j-i+1..k+j}.  k = 0
// returns the initial minor.
MinorSpec predicted_minor(int i, int j, int k, int n);  // OutOfRange

struct ReflectionStep {
  int step{0};      // 1-based position in the plan
  VLabel vertex;    // mutated vertex
  int count{0};     // this was the count-th mutation at that vertex
  MinorSpec minor;  // certified pullback of the new variable
  Seed seed;        // seed after the mutation
};

// Runs reflection_plan(n) from initial_seed(n).  Before each mutation the
// expected two-out/two-in arrow pattern at the mutating vertex is asserted;
// after it, the new variable is certified equal to predicted_minor by
// evaluation at `points` random determinant-1 matrices (matrices with a
// vanishing initial minor are resampled).  Throws Error on any mismatch.
std::vector<ReflectionStep> run_reflection(int n, int points = 20);

// Three-term identity on a generic n x (n+1) matrix: with J = {1..n+1} and
// column choices j1 < j2 < j3,
//   D[1..n-1|J-{j2,j3}] D[1..n|J-{j1}] - D[1..n-1|J-{j1,j3}] D[1..n|J-{j2}]
//     + D[1..n-1|J-{j1,j2}] D[1..n|J-{j3}] = 0.
// Returns whether the full symbolic expansion vanishes.
bool check_minor_identity(int n, int j1, int j2, int j3);  // InvalidIndices

// Mutation plan producing D[1..|J| | J] from the initial seed: a descending
// chain of sub-triangle sweeps, one per leading element of J, stopping at
// the first sweep whose remaining tail of J is a consecutive run.  The minor
// lands at minor_plan_target(n, J); for a contiguous J the plan is empty.
MutationPlan minor_plan(int n, const std::vector<int>& J);  // InvalidIndexSet
VLabel minor_plan_target(int n, const std::vector<int>& J);

}  // namespace cc
