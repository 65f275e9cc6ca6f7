#include "clustercones/matrices.hpp"

#include <algorithm>
#include <bit>

namespace cc {

PolyMatrix generic_matrix(int nrows, int ncols) {
  PolyMatrix M(nrows, std::vector<LaurentPoly>(ncols));
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c)
      M[r][c] = LaurentPoly::variable(var_m(r + 1, c + 1));
  return M;
}

PolyMatrix poly_identity(int n) {
  PolyMatrix M(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) M[i][i] = LaurentPoly(Int(1));
  return M;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw SizeMismatch("matrix product shape mismatch");
  PolyMatrix out(a.size(), std::vector<LaurentPoly>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j)
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

static void validate_indices(const std::vector<int>& idx, size_t bound,
                             const char* what) {
  int prev = 0;
  for (int v : idx) {
    if (v <= prev || static_cast<size_t>(v) > bound)
      throw InvalidIndices(std::string(what) + " indices must be strictly increasing and in range");
    prev = v;
  }
}

LaurentPoly sym_minor(const PolyMatrix& M, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw SizeMismatch("minor needs |I| = |J|");
  const size_t k = rows.size();
  if (M.empty()) throw SizeMismatch("empty matrix");
  validate_indices(rows, M.size(), "row");
  validate_indices(cols, M[0].size(), "column");
  if (k == 0) return LaurentPoly(Int(1));
  if (k > 20) throw DimensionTooLarge("minor size > 20");
  // D[mask] = det of submatrix on rows[0..popcount(mask)-1] and the column
  // subset encoded by mask.  Expansion along the last selected row.
  std::vector<LaurentPoly> D(size_t(1) << k);
  D[0] = LaurentPoly(Int(1));
  for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
    const int i = std::popcount(mask);  // 1-based row position
    const auto& row = M[rows[i - 1] - 1];
    LaurentPoly acc;
    int p = 0;  // 1-based column position within the mask
    for (uint32_t rest = mask; rest; rest &= rest - 1) {
      ++p;
      const int c = std::countr_zero(rest);
      const LaurentPoly& entry = row[cols[c] - 1];
      if (entry.is_zero()) continue;
      LaurentPoly term = entry * D[mask & ~(uint32_t(1) << c)];
      acc = ((i + p) % 2 == 0) ? acc + term : acc - term;
    }
    D[mask] = std::move(acc);
  }
  return D[(size_t(1) << k) - 1];
}

Rat num_minor(const RatMatrix& M, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw SizeMismatch("minor needs |I| = |J|");
  if (M.empty()) throw SizeMismatch("empty matrix");
  validate_indices(rows, M.size(), "row");
  validate_indices(cols, M[0].size(), "column");
  const size_t k = rows.size();
  if (k == 0) return Rat(1);
  RatMatrix S(k, std::vector<Rat>(k));
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) S[r][c] = M[rows[r] - 1][cols[c] - 1];
  // Gaussian elimination with exact rational arithmetic.
  Rat det = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && S[piv][col] == 0) ++piv;
    if (piv == k) return Rat(0);
    if (piv != col) {
      std::swap(S[piv], S[col]);
      det = -det;
    }
    det *= S[col][col];
    for (size_t r = col + 1; r < k; ++r) {
      if (S[r][col] == 0) continue;
      Rat f = S[r][col] / S[col][col];
      for (size_t c = col; c < k; ++c) S[r][c] -= f * S[col][c];
    }
  }
  return det;
}

RatMatrix evaluate_matrix(const PolyMatrix& M, const std::map<VarId, Rat>& point) {
  RatMatrix out(M.size());
  for (size_t r = 0; r < M.size(); ++r) {
    out[r].reserve(M[r].size());
    for (const auto& e : M[r]) out[r].push_back(e.evaluate(point));
  }
  return out;
}

RatMatrix random_unideterminant_matrix(int n, std::mt19937_64& rng, int shears,
                                       int bound) {
  RatMatrix M(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (int s = 0; s < shears; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) {
      --s;
      continue;
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    for (int col = 0; col < n; ++col) M[i][col] += Rat(c) * M[j][col];
  }
  return M;
}

RatMatrix random_unipotent_upper(int n, std::mt19937_64& rng, int bound) {
  RatMatrix M(n, std::vector<Rat>(n, Rat(0)));
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (int i = 0; i < n; ++i) {
    M[i][i] = 1;
    for (int j = i + 1; j < n; ++j) M[i][j] = coef(rng);
  }
  return M;
}

std::map<VarId, Rat> matrix_point(const RatMatrix& M) {
  std::map<VarId, Rat> pt;
  for (size_t r = 0; r < M.size(); ++r)
    for (size_t c = 0; c < M[r].size(); ++c) pt[var_m(int(r + 1), int(c + 1))] = M[r][c];
  return pt;
}

}  // namespace cc
