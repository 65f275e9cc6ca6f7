#pragma once

// Symbolic and numeric matrix-minor helpers shared by the network and
// cluster modules.  Row/column index lists are 1-based and strictly
// increasing, matching the Δ^I_J notation used throughout.

#include <random>
#include <vector>

#include "clustercones/exactalg.hpp"

namespace cc {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// nrows x ncols matrix of independent variables m[r,c], 1-based labels.
PolyMatrix generic_matrix(int nrows, int ncols);

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_identity(int n);

// Determinant of the square submatrix picked out by rows/cols, computed by
// column-subset dynamic programming (Laplace expansion along rows).
LaurentPoly sym_minor(const PolyMatrix& M, const std::vector<int>& rows,
                      const std::vector<int>& cols);

Rat num_minor(const RatMatrix& M, const std::vector<int>& rows,
              const std::vector<int>& cols);

RatMatrix evaluate_matrix(const PolyMatrix& M, const std::map<VarId, Rat>& point);

// Random element of SL_n(Z) built as a product of `shears` elementary shear
// operations row_i += c * row_j with c in [-bound, bound]; determinant is 1
// by construction.
RatMatrix random_unideterminant_matrix(int n, std::mt19937_64& rng,
                                       int shears = 30, int bound = 2);

// Random unipotent upper-triangular matrix with integer entries above the
// diagonal drawn from [-bound, bound].
RatMatrix random_unipotent_upper(int n, std::mt19937_64& rng, int bound = 5);

// Evaluation point assigning each m[r,c] the matrix entry M[r-1][c-1].
std::map<VarId, Rat> matrix_point(const RatMatrix& M);

}  // namespace cc
