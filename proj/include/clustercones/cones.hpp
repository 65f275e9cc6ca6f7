#pragma once

// Polyhedral layer: integer inequality systems as cones, exact extreme-ray
// enumeration by the double description method, ray-set comparison across a
// change of basis, the interlacing cone of triangular arrays, affine slices
// fixing the row sums of a point, exhaustive lattice-point enumeration over a
// bounded slice, and the product-formula dimension oracle the counts must
// reproduce.

#include <functional>
#include <string>
#include <vector>

#include "clustercones/errors.hpp"
#include "clustercones/exactalg.hpp"
#include "clustercones/quiver.hpp"
#include "clustercones/tropic.hpp"

namespace cc {

// {x : <row, x> >= 0 for every row of ineq}; dim is the ambient coordinate
// count, always equal to ineq.order.size().
struct Cone {
  IneqSystem ineq;
  int dim = 0;
};

// Normalizes the rows (primitive, deduplicated) and records the dimension.
Cone make_cone(IneqSystem sys);

// The cone of triangular arrays y[i;j], 1 <= i <= j <= n, weakly decreasing
// along each row and down each right-leaning diagonal and nonnegative at the
// corner: y[i;j] - y[i;j-1] >= 0 for i < j, y[i;j] - y[i+1;j+1] >= 0 for
// j < n, and y[n;n] >= 0.  Coordinates in label order; n(n-1)+1 rows.
Cone gt_cone(int n);  // OutOfRange unless n >= 1

// Primitive generators of the extreme rays, sorted lexicographically.
struct RaySet {
  std::vector<std::vector<Int>> rays;
};

// Extreme rays by incremental double description with exact arithmetic.  The
// cone must be pointed (its rows must span the ambient space).
RaySet rays(const Cone& c);  // DimensionTooLarge above 21 coordinates

// Maps a vector given in the first cone's coordinate order to the coordinate
// order of the cone it is compared against.
using BasisChange = std::function<std::vector<Int>(const std::vector<Int>&)>;

// True iff the extreme-ray sets coincide once a's rays are pushed through
// basis_change (identity when empty).
bool cone_equal(const Cone& a, const Cone& b,
                const BasisChange& basis_change = {});  // DimensionMismatch

// What simplicial_check establishes: as many extreme rays as coordinates,
// exactly the expected generators, and a pairing matrix between the
// inequality rows and the expected rays that is a permutation matrix -- the
// rows and the rays are then dual bases up to reordering.
struct SimplicialReport {
  bool ray_count_is_dim = false;
  bool rays_are_expected = false;
  bool pairing_is_permutation = false;
  bool ok() const {
    return ray_count_is_dim && rays_are_expected && pairing_is_permutation;
  }
  std::string str() const;
};

SimplicialReport simplicial_check(const Cone& c, const RaySet& expected);

// Dominant integral weight (lambda_1 >= ... >= lambda_{n-1} >= 0); the n-th
// entry is implicitly 0.
struct Weight {
  std::vector<int> lambda;
};

// <coeffs, x> = rhs
struct AffineRow {
  std::vector<int> coeffs;
  int rhs = 0;
};

struct WeightSlice {
  Cone cone;
  std::vector<AffineRow> equalities;
};

// Intersects c with the planes "sum of the coordinates in row i equals
// lambda_i - lambda_{i+1}" for i = 1..n-1, the sums running over whichever
// labels with first index i are present in c.  Real infeasibility of the
// slice is detected up front by eliminating every variable.
WeightSlice weight_slice(int n, const Weight& lambda, const Cone& c);
// SizeMismatch (wrong length), InvalidIndices (not dominant), InfeasibleSlice

// Every integer point of the slice, sorted lexicographically.  Bounds for
// each coordinate come from exact Fourier-Motzkin elimination; the search is
// a depth-first walk over the integers in those bounds with incremental
// feasibility pruning, parallelized over the first coordinate's range (the
// CLUSTERCONES_THREADS environment variable caps the worker count) and
// merged deterministically.
std::vector<std::vector<Int>> lattice_points(const WeightSlice& s);
// UnboundedSlice; InfeasibleSlice on a hand-built inconsistent slice

// dim of the irreducible representation of highest weight lambda:
// prod_{i<j} (l_i - l_j) / (j - i) with l_i = lambda_i + n - i, lambda_n = 0.
Int weyl_dim(int n, const Weight& lambda);  // SizeMismatch, InvalidIndices

}  // namespace cc
