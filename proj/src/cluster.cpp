#include "clustercones/cluster.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cc {

namespace {

std::vector<int> consecutive(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  return out.str();
}

}  // namespace

std::string to_string(const MinorSpec& m) {
  return "D[" + join(m.rows) + "|" + join(m.cols) + "]";
}

Rat evaluate_minor(const MinorSpec& m, const RatMatrix& M) {
  return num_minor(M, m.rows, m.cols);
}

Seed initial_seed(int n) {
  Seed s{build_Gew0_quiver(n, false), {}};
  for (const auto& v : s.quiver.labels())
    s.vars.emplace(v, RationalFn::variable(var_A(v.i, v.j)));
  return s;
}

std::map<VarId, Rat> initial_minor_point(const RatMatrix& M) {
  const int n = static_cast<int>(M.size());
  std::map<VarId, Rat> point;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      point[var_A(i, j)] =
          num_minor(M, consecutive(1, i), consecutive(j - i + 1, j));
  return point;
}

Seed mutate_seed(const Seed& s, const VLabel& k) {
  const Quiver& q = s.quiver;
  const int ki = q.index_of(k);
  if (q.frozen(ki)) throw FrozenVertex("cannot mutate frozen " + to_string(k));
  RationalFn out(Int(1)), in(Int(1));
  for (int u = 0; u < q.size(); ++u) {
    const int e = q.eps(ki, u);
    if (e == 0) continue;
    const RationalFn& a = s.vars.at(q.label(u));
    for (int c = 0; c < e; ++c) out = out * a;
    for (int c = 0; c < -e; ++c) in = in * a;
  }
  Seed t{mutate_quiver(q, k), s.vars};
  t.vars.at(k) = rf_divide(out + in, s.vars.at(k));
  return t;
}

MinorSpec predicted_minor(int i, int j, int k, int n) {
  if (!(1 <= i && i < j && j <= n - 1))
    throw OutOfRange("predicted minor needs an unfrozen vertex, 1 <= i < j <= n-1");
  if (k < 0 || k > n - j)
    throw OutOfRange("vertex v[" + std::to_string(i) + ";" + std::to_string(j) +
                     "] is mutated between 0 and " + std::to_string(n - j) + " times");
  MinorSpec m;
  m.rows = consecutive(1, k + i);
  m.cols = consecutive(1, k);
  for (int c = k + j - i + 1; c <= k + j; ++c) m.cols.push_back(c);
  return m;
}

namespace {

// Neighbor sets the reflection plan guarantees at the k-th mutation of
// v[i;j]: two outgoing arrows (to v[i+1;j+1], and to v[i-1;j-1], or to the
// diagonal v[k;k] when i = 1) and two incoming (from v[i;j+1], and from
// v[i;j-1], or from the diagonal v[k+i;k+i] when j = i+1), all simple.
void assert_arrow_pattern(const Quiver& q, const VLabel& v, int k) {
  std::vector<VLabel> out_expect{vl(v.i + 1, v.j + 1),
                                 v.i != 1 ? vl(v.i - 1, v.j - 1) : vl(k, k)};
  std::vector<VLabel> in_expect{vl(v.i, v.j + 1),
                                v.j != v.i + 1 ? vl(v.i, v.j - 1) : vl(k + v.i, k + v.i)};
  std::vector<VLabel> out_actual, in_actual;
  const int vi = q.index_of(v);
  for (int u = 0; u < q.size(); ++u) {
    const int e = q.eps(vi, u);
    for (int c = 0; c < e; ++c) out_actual.push_back(q.label(u));
    for (int c = 0; c < -e; ++c) in_actual.push_back(q.label(u));
  }
  std::sort(out_expect.begin(), out_expect.end());
  std::sort(in_expect.begin(), in_expect.end());
  std::sort(out_actual.begin(), out_actual.end());
  std::sort(in_actual.begin(), in_actual.end());
  if (out_actual != out_expect || in_actual != in_expect)
    throw Error("unexpected arrow pattern at " + to_string(v) + ", mutation " +
                std::to_string(k));
}

}  // namespace

std::vector<ReflectionStep> run_reflection(int n, int points) {
  if (n < 3) throw OutOfRange("reflection runs need n >= 3");
  Seed s = initial_seed(n);
  const MutationPlan plan = reflection_plan(n);

  std::mt19937_64 rng(9001);
  std::vector<RatMatrix> mats;
  std::vector<std::map<VarId, Rat>> pts;
  int attempts = 0;
  while (static_cast<int>(mats.size()) < points) {
    if (++attempts > 100 * points)
      throw Error("could not sample matrices with nonvanishing initial minors");
    RatMatrix M = random_unideterminant_matrix(n, rng);
    auto pt = initial_minor_point(M);
    bool ok = true;
    for (const auto& [id, val] : pt) {
      (void)id;
      if (val == 0) ok = false;
    }
    if (!ok) continue;
    mats.push_back(std::move(M));
    pts.push_back(std::move(pt));
  }

  std::vector<ReflectionStep> steps;
  std::map<VLabel, int> counts;
  int stepno = 0;
  for (const VLabel& v : plan) {
    ++stepno;
    const int k = ++counts[v];
    assert_arrow_pattern(s.quiver, v, k);
    s = mutate_seed(s, v);
    MinorSpec pred = predicted_minor(v.i, v.j, k, n);
    for (size_t p = 0; p < mats.size(); ++p) {
      if (evaluate(s.vars.at(v), pts[p]) != evaluate_minor(pred, mats[p]))
        throw Error("variable after mutation " + std::to_string(k) + " at " +
                    to_string(v) + " does not equal " + to_string(pred));
    }
    steps.push_back({stepno, v, k, std::move(pred), s});
  }
  return steps;
}

bool check_minor_identity(int n, int j1, int j2, int j3) {
  if (n < 2) throw InvalidIndices("identity needs n >= 2");
  if (!(1 <= j1 && j1 < j2 && j2 < j3 && j3 <= n + 1))
    throw InvalidIndices("need 1 <= j1 < j2 < j3 <= n+1");
  const PolyMatrix M = generic_matrix(n, n + 1);
  auto cols_without = [&](int a, int b) {
    std::vector<int> cols;
    for (int c = 1; c <= n + 1; ++c)
      if (c != a && c != b) cols.push_back(c);
    return cols;
  };
  const auto rows_small = consecutive(1, n - 1);
  const auto rows_full = consecutive(1, n);
  LaurentPoly sum = sym_minor(M, rows_small, cols_without(j2, j3)) *
                        sym_minor(M, rows_full, cols_without(j1, 0)) -
                    sym_minor(M, rows_small, cols_without(j1, j3)) *
                        sym_minor(M, rows_full, cols_without(j2, 0)) +
                    sym_minor(M, rows_small, cols_without(j1, j2)) *
                        sym_minor(M, rows_full, cols_without(j3, 0));
  return sum.is_zero();
}

namespace {

struct PlanShape {
  int stop{0};     // first sweep whose remaining tail of J is consecutive
  VLabel target;   // vertex where the minor lands
};

PlanShape plan_shape(const std::vector<int>& J) {
  const int i = static_cast<int>(J.size());
  const int ji = J.back();
  for (int r = 1; r < i; ++r) {
    // Tail J[r..i-1] (0-based) is consecutive iff it spans exactly its length.
    if (ji - J[r] == i - 1 - r) return {r, vl(i - r, ji - r)};
  }
  throw Error("unreachable: contiguous J handled by caller");
}

void validate_J(int n, const std::vector<int>& J) {
  if (J.empty() || static_cast<int>(J.size()) >= n)
    throw InvalidIndexSet("column set must be a nonempty proper subset of 1..n");
  for (size_t r = 0; r < J.size(); ++r) {
    if (J[r] < 1 || J[r] > n) throw InvalidIndexSet("column index out of range");
    if (r > 0 && J[r] <= J[r - 1])
      throw InvalidIndexSet("column set must be strictly increasing");
  }
}

bool is_contiguous(const std::vector<int>& J) {
  return J.back() - J.front() == static_cast<int>(J.size()) - 1;
}

}  // namespace

MutationPlan minor_plan(int n, const std::vector<int>& J) {
  validate_J(n, J);
  MutationPlan plan;
  if (is_contiguous(J)) return plan;
  const PlanShape shape = plan_shape(J);
  const int ji = J.back();
  for (int r = 1; r <= shape.stop; ++r) {
    const int top = J[r - 1] - r + 2;  // apex column of the r-th sub-triangle
    const int bot = ji - r;            // its bottom row
    for (int b = top; b <= bot; ++b) {
      for (int a = 1; a <= b - top + 1; ++a) {
        plan.push_back(vl(a, b));
        if (r == shape.stop && vl(a, b) == shape.target) return plan;
      }
    }
  }
  throw Error("unreachable: target lies inside the final sweep");
}

VLabel minor_plan_target(int n, const std::vector<int>& J) {
  validate_J(n, J);
  if (is_contiguous(J)) return vl(static_cast<int>(J.size()), J.back());
  return plan_shape(J).target;
}

}  // namespace cc
