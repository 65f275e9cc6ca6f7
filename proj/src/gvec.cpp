#include "clustercones/gvec.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace cc {

namespace {

void bump(GVector& g, int r, int s, int coeff) {
  VLabel v = vl(r, s);
  int& c = g[v];
  c += coeff;
  if (c == 0) g.erase(v);
}

// Vertex tests for the two ambient quivers: the full cell keeps the diagonal
// (r;r) for r < n, the unipotent quiver does not.
bool cell_vertex(int n, int r, int s) {
  return 1 <= r && r <= s && s <= n && !(r == n && s == n);
}
bool u_vertex(int n, int r, int s) { return 1 <= r && r < s && s <= n; }

GVector closed_form(int n, int i, int j, int k, bool diagonal) {
  if (n < 2 || i < 1 || i >= j || j > n || k < 0 || k > n - j) {
    std::ostringstream os;
    os << "no reflection-plan variable (" << i << ";" << j << ")_" << k
       << " for n=" << n;
    throw OutOfRange(os.str());
  }
  GVector g;
  if (k == n - j) {  // the final seed's own variable
    g[vl(i, j)] = 1;
    return g;
  }
  auto add = [&](int r, int s, int coeff) {
    if (diagonal ? cell_vertex(n, r, s) : u_vertex(n, r, s))
      bump(g, r, s, coeff);
  };
  add(n + i - j - k, n - k, 1);
  add(n - j - k, n - k - i, -1);
  add(i + k, i + k, 1);
  return g;
}

void validate_J(int n, const std::vector<int>& J) {
  if (J.empty() || static_cast<int>(J.size()) >= n)
    throw InvalidIndexSet("column set must be a nonempty proper subset");
  for (size_t t = 0; t < J.size(); ++t) {
    if (J[t] < 1 || J[t] > n)
      throw InvalidIndexSet("column index out of range");
    if (t > 0 && J[t] <= J[t - 1])
      throw InvalidIndexSet("column indices must strictly increase");
  }
}

bool is_contiguous(const std::vector<int>& J) {
  return J.back() - J.front() == static_cast<int>(J.size()) - 1;
}

// Weight of D[1..k+1|1, l-k+2..l+1]; collapses to e*[k+1;k+1] when l = k.
GVector base_case(int k, int l) {
  GVector g;
  bump(g, k, k + 1, -1);
  bump(g, k, l + 1, 1);
  bump(g, k + 1, k + 1, 1);
  return g;
}

std::vector<VLabel> triangle_labels(int n) {
  std::vector<VLabel> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(vl(i, j));
  return out;
}

template <typename T>
void check_triangle_keys(int n, const std::map<VLabel, T>& v) {
  if (n < 1) throw DimensionMismatch("triangle size must be positive");
  for (const auto& [lbl, val] : v) {
    (void)val;
    if (!(1 <= lbl.i && lbl.i <= lbl.j && lbl.j <= n))
      throw DimensionMismatch("label " + to_string(lbl) +
                              " lies outside the size-" + std::to_string(n) +
                              " triangle");
  }
}

template <typename T>
std::map<VLabel, T> psi_apply(int n, const std::map<VLabel, T>& y) {
  check_triangle_keys(n, y);
  auto get = [&](int a, int b) -> T {
    auto it = y.find(vl(a, b));
    return it == y.end() ? T(0) : it->second;
  };
  std::map<VLabel, T> x;
  auto set = [&](int a, int b, T val) {
    if (!(val == T(0))) x[vl(a, b)] = val;
  };
  set(n, n, get(n, n));
  for (int i = 1; i < n; ++i) {
    set(i, i, get(i, n) - get(i, n - 1));
    set(i, n, get(i, i) - get(i + 1, i + 1));
    for (int j = i + 1; j < n; ++j)
      set(i, j, get(i, n - j + i) - get(i + 1, n - j + i + 1) +
                    get(i + 1, n - j + i) - get(i, n - j + i - 1));
  }
  return x;
}

// Dense matrix of psi in lexicographic coordinates, built column by column.
std::vector<std::vector<Rat>> psi_matrix(int n) {
  auto labels = triangle_labels(n);
  int d = static_cast<int>(labels.size());
  std::map<VLabel, int> index;
  for (int t = 0; t < d; ++t) index[labels[t]] = t;
  std::vector<std::vector<Rat>> P(d, std::vector<Rat>(d, Rat(0)));
  for (int c = 0; c < d; ++c) {
    std::map<VLabel, Rat> unit{{labels[c], Rat(1)}};
    for (const auto& [lbl, val] : psi_apply<Rat>(n, unit))
      P[index.at(lbl)][c] = val;
  }
  return P;
}

// Gauss-Jordan elimination; returns the determinant and, when rhs is given,
// overwrites it with the solution of P * sol = rhs.
Rat gauss(std::vector<std::vector<Rat>> P, std::vector<Rat>* rhs) {
  int d = static_cast<int>(P.size());
  Rat det(1);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (P[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("change-of-basis matrix is singular");
    if (piv != col) {
      std::swap(P[piv], P[col]);
      if (rhs) std::swap((*rhs)[piv], (*rhs)[col]);
      det = -det;
    }
    Rat lead = P[col][col];
    det *= lead;
    for (int c = col; c < d; ++c) P[col][c] /= lead;
    if (rhs) (*rhs)[col] /= lead;
    for (int r = 0; r < d; ++r) {
      if (r == col || P[r][col] == 0) continue;
      Rat f = P[r][col];
      for (int c = col; c < d; ++c) P[r][c] -= f * P[col][c];
      if (rhs) (*rhs)[r] -= f * (*rhs)[col];
    }
  }
  return det;
}

std::map<VLabel, Rat> psi_unapply(int n, const std::map<VLabel, Rat>& x) {
  check_triangle_keys(n, x);
  auto labels = triangle_labels(n);
  int d = static_cast<int>(labels.size());
  std::vector<Rat> rhs(d, Rat(0));
  for (int t = 0; t < d; ++t) {
    auto it = x.find(labels[t]);
    if (it != x.end()) rhs[t] = it->second;
  }
  gauss(psi_matrix(n), &rhs);
  std::map<VLabel, Rat> y;
  for (int t = 0; t < d; ++t)
    if (rhs[t] != 0) y[labels[t]] = rhs[t];
  return y;
}

GVector to_int_vector(const std::map<VLabel, Rat>& v) {
  GVector out;
  for (const auto& [lbl, val] : v) {
    if (boost::multiprecision::denominator(val) != 1)
      throw Error("expected an integer vector, got " + val.str() + " at " +
                  to_string(lbl));
    out[lbl] = boost::multiprecision::numerator(val).convert_to<int>();
  }
  return out;
}

}  // namespace

std::string to_string(const GVector& g) {
  if (g.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : g) {
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (std::abs(c) != 1) os << std::abs(c) << " ";
    os << "e*[" << v.i << ";" << v.j << "]";
  }
  return first ? "0" : os.str();
}

PrincipalSeed with_principal_coefficients(const Seed& s) {
  std::vector<std::pair<VLabel, bool>> verts;
  for (const auto& v : s.quiver.labels())
    verts.emplace_back(v, s.quiver.frozen(v));
  auto unfrozen = s.quiver.unfrozen_labels();
  for (const auto& v : unfrozen) verts.emplace_back(wl(v.i, v.j), true);
  Quiver q(verts);
  for (const auto& ar : s.quiver.arrows()) q.add_arrow(ar.from, ar.to, ar.mult);
  for (const auto& v : unfrozen) q.add_arrow(v, wl(v.i, v.j), 1);

  PrincipalSeed ps;
  ps.seed.quiver = std::move(q);
  // The seed's own cluster becomes the reference data: whatever expressions
  // the variables carried are discarded and each vertex restarts as a fresh
  // indeterminate.  Weights are always read relative to this cluster.
  for (const auto& v : s.quiver.labels())
    ps.seed.vars[v] = RationalFn::variable(var_A(v.i, v.j));
  for (const auto& v : unfrozen)
    ps.seed.vars[wl(v.i, v.j)] = RationalFn::variable(var_X(v.i, v.j));
  ps.base_vertices = s.quiver.labels();
  return ps;
}

PrincipalSeed mutate_principal(const PrincipalSeed& ps, const VLabel& k) {
  const Quiver& q = ps.seed.quiver;
  int ki = q.index_of(k);
  for (int a = 0; a < q.size(); ++a) {
    if (!is_companion(q.label(a))) continue;
    if (q.eps(a, ki) > 0)
      throw Error("arrow " + to_string(q.label(a)) + " -> " + to_string(k) +
                  " points into the vertex of mutation; the exchange would "
                  "not separate coefficients");
  }
  return PrincipalSeed{mutate_seed(ps.seed, k), ps.base_vertices};
}

LaurentPoly project_x_to_one(const LaurentPoly& p) {
  std::vector<Monomial> terms;
  for (const auto& t : p.terms()) {
    ExpVec kept;
    for (const auto& [id, e] : t.exps)
      if (id.kind != VarKind::X) kept.emplace_back(id, e);
    terms.push_back(Monomial{t.coeff, std::move(kept)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

RationalFn project_x_to_one(const RationalFn& f) {
  return RationalFn(project_x_to_one(f.num()), project_x_to_one(f.den()));
}

Seed project_principal(const PrincipalSeed& ps) {
  Seed out;
  out.quiver = induced_subquiver(ps.seed.quiver, ps.base_vertices);
  for (const auto& v : ps.base_vertices)
    out.vars[v] = project_x_to_one(ps.seed.vars.at(v));
  return out;
}

GVector gvector_of(const PrincipalSeed& ps, const VLabel& v) {
  auto it = ps.seed.vars.find(v);
  if (it == ps.seed.vars.end())
    throw UnknownVertex("no variable at " + to_string(v));
  auto lp = monomial_denominator(it->second);
  if (!lp)
    throw Error("variable at " + to_string(v) +
                " is not Laurent in the extended initial data");
  const Monomial* survivor = nullptr;
  int count = 0;
  for (const auto& t : lp->terms()) {
    bool has_x = false;
    for (const auto& [id, e] : t.exps)
      if (id.kind == VarKind::X && e != 0) has_x = true;
    if (!has_x) {
      ++count;
      survivor = &t;
    }
  }
  if (count != 1)
    throw CentralFiberAmbiguous(std::to_string(count) +
                                " coefficient-free terms in the variable at " +
                                to_string(v));
  if (survivor->coeff != 1)
    throw CentralFiberAmbiguous("coefficient-free term of the variable at " +
                                to_string(v) + " has coefficient " +
                                survivor->coeff.str());
  GVector g;
  for (const auto& [id, e] : survivor->exps) {
    if (id.kind != VarKind::A)
      throw Error("unexpected variable " + to_string(id) +
                  " in a seed variable");
    g[vl(id.a, id.b)] = e;
  }
  return g;
}

GVector closed_form_cell(int n, int i, int j, int k) {
  return closed_form(n, i, j, k, true);
}

GVector closed_form_U(int n, int i, int j, int k) {
  return closed_form(n, i, j, k, false);
}

GVector gvector_minor(int n, const std::vector<int>& J) {
  validate_J(n, J);
  int i = static_cast<int>(J.size());
  if (is_contiguous(J)) {
    GVector g;
    g[vl(i, J.back())] = 1;
    return g;
  }
  if (J.front() > 1) {
    // Uniform column shift: compute one column to the left, then move every
    // second index up by one.
    std::vector<int> down(J);
    for (int& c : down) --c;
    GVector shifted;
    for (const auto& [v, c] : gvector_minor(n, down)) shifted[vl(v.i, v.j + 1)] = c;
    return shifted;
  }
  // Leading column 1 with gaps: substitute the base-case vector of each
  // coordinate of the gap-closed minor one column to the left.
  std::vector<int> inner(J.begin() + 1, J.end());
  for (int& c : inner) --c;
  GVector g;
  for (const auto& [v, c] : gvector_minor(n, inner))
    for (const auto& [bv, bc] : base_case(v.i, v.j)) bump(g, bv.i, bv.j, c * bc);
  return g;
}

GVector gt_pattern(int n, const std::vector<int>& J) {
  validate_J(n, J);
  int i = static_cast<int>(J.size());
  GVector pat;
  for (int k = 1; k <= i; ++k)
    for (int l = k; l <= n; ++l)
      if (J[i - k] >= n + 1 - l) pat[vl(k, l)] = 1;
  return pat;
}

GVector psi(int n, const GVector& y) { return psi_apply<int>(n, y); }

std::map<VLabel, Rat> psi(int n, const std::map<VLabel, Rat>& y) {
  return psi_apply<Rat>(n, y);
}

std::map<VLabel, Rat> psi_inverse(int n, const std::map<VLabel, Rat>& x) {
  return psi_unapply(n, x);
}

GVector psi_inverse(int n, const GVector& x) {
  std::map<VLabel, Rat> rx;
  for (const auto& [lbl, c] : x) rx[lbl] = Rat(c);
  return to_int_vector(psi_unapply(n, rx));
}

Rat psi_det(int n) {
  if (n < 1) throw DimensionMismatch("triangle size must be positive");
  return gauss(psi_matrix(n), nullptr);
}

}  // namespace cc
