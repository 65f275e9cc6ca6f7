#include "clustercones/cones.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

namespace cc {

namespace {

using Vec = std::vector<Int>;

Int idot(const std::vector<int>& a, const Vec& x) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Int(a[i]) * x[i];
  return s;
}

void make_primitive(Vec& v) {
  Int g = 0;
  for (const auto& e : v) g = boost::multiprecision::gcd(g, e);
  if (g > 1)
    for (auto& e : v) e /= g;
}

// Indices of up to `want` linearly independent rows, chosen greedily in row
// order by exact rational elimination.
std::vector<int> independent_rows(const std::vector<std::vector<int>>& rows,
                                  int d, int want) {
  std::vector<std::vector<Rat>> ech;
  std::vector<int> pivots;
  std::vector<int> chosen;
  for (int r = 0; r < static_cast<int>(rows.size()) &&
                  static_cast<int>(chosen.size()) < want;
       ++r) {
    std::vector<Rat> v(d);
    for (int c = 0; c < d; ++c) v[c] = rows[r][c];
    for (size_t e = 0; e < ech.size(); ++e) {
      Rat f = v[pivots[e]];
      if (f == 0) continue;
      for (int c = 0; c < d; ++c) v[c] -= f * ech[e][c];
    }
    int p = -1;
    for (int c = 0; c < d; ++c)
      if (v[c] != 0) {
        p = c;
        break;
      }
    if (p < 0) continue;
    Rat lead = v[p];
    for (int c = 0; c < d; ++c) v[c] /= lead;
    ech.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(r);
  }
  return chosen;
}

// Columns of the inverse of the square matrix rows[idx], as primitive
// integer vectors.  These are the rays of the simplicial cone cut out by
// exactly those rows.
std::vector<Vec> inverse_columns(const std::vector<std::vector<int>>& rows,
                                 const std::vector<int>& idx) {
  const int d = static_cast<int>(idx.size());
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(2 * d));
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) a[r][c] = rows[idx[r]][c];
    a[r][d + r] = 1;
  }
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    std::swap(a[col], a[piv]);
    Rat lead = a[col][col];
    for (int c = 0; c < 2 * d; ++c) a[col][c] /= lead;
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      Rat f = a[r][col];
      if (f == 0) continue;
      for (int c = 0; c < 2 * d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Vec> cols(d, Vec(d));
  for (int j = 0; j < d; ++j) {
    Int mult = 1;
    for (int i = 0; i < d; ++i)
      mult = boost::multiprecision::lcm(
          mult, boost::multiprecision::denominator(a[i][d + j]));
    for (int i = 0; i < d; ++i)
      cols[j][i] = boost::multiprecision::numerator(Rat(a[i][d + j] * mult));
    make_primitive(cols[j]);
  }
  return cols;
}

struct DDRay {
  Vec v;
  std::vector<uint64_t> tight;  // bit per row, in processing order
};

bool subset_of(const std::vector<uint64_t>& s, const std::vector<uint64_t>& t) {
  for (size_t w = 0; w < s.size(); ++w)
    if ((s[w] & ~t[w]) != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin machinery shared by the feasibility check and the
// lattice-point walk.

struct ARow {  // <a, x> >= b
  Vec a;
  Int b;
};

void normalize_arow(ARow& r) {
  Int g = 0;
  for (const auto& e : r.a) g = boost::multiprecision::gcd(g, e);
  g = boost::multiprecision::gcd(g, r.b);
  if (g > 1) {
    for (auto& e : r.a) e /= g;
    r.b /= g;
  }
}

// levels[k] describes the exact projection of the solution set onto the
// first k coordinates; levels[d] is the input system.  A constant
// contradiction anywhere proves the real solution set empty.
std::vector<std::vector<ARow>> fm_levels(std::vector<ARow> sys, int d) {
  auto clean = [](std::vector<ARow>& v) {
    std::set<std::pair<Vec, Int>> seen;
    std::vector<ARow> kept;
    for (auto& r : v) {
      bool zero = std::all_of(r.a.begin(), r.a.end(),
                              [](const Int& e) { return e == 0; });
      if (zero) {
        if (r.b > 0) throw InfeasibleSlice("the slice has no real points");
        continue;
      }
      normalize_arow(r);
      if (seen.insert({r.a, r.b}).second) kept.push_back(std::move(r));
    }
    v = std::move(kept);
  };
  std::vector<std::vector<ARow>> levels(d + 1);
  clean(sys);
  levels[d] = std::move(sys);
  for (int k = d; k >= 1; --k) {
    std::vector<ARow> next;
    const auto& cur = levels[k];
    for (const auto& r : cur) {
      if (r.a[k - 1] != 0) continue;
      ARow s;
      s.a.assign(r.a.begin(), r.a.begin() + (k - 1));
      s.b = r.b;
      next.push_back(std::move(s));
    }
    for (const auto& p : cur) {
      if (p.a[k - 1] <= 0) continue;
      for (const auto& q : cur) {
        if (q.a[k - 1] >= 0) continue;
        ARow s;
        s.a.resize(k - 1);
        for (int c = 0; c + 1 < k; ++c)
          s.a[c] = -q.a[k - 1] * p.a[c] + p.a[k - 1] * q.a[c];
        s.b = -q.a[k - 1] * p.b + p.a[k - 1] * q.b;
        next.push_back(std::move(s));
      }
    }
    clean(next);
    levels[k - 1] = std::move(next);
  }
  return levels;
}

Int floor_div(const Int& a, const Int& b) {  // b > 0
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {  // b > 0
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::vector<ARow> assemble(const WeightSlice& s) {
  const int d = s.cone.dim;
  std::vector<ARow> sys;
  for (const auto& row : s.cone.ineq.rows) {
    ARow r;
    r.a.assign(row.begin(), row.end());
    r.b = 0;
    sys.push_back(std::move(r));
  }
  for (const auto& eq : s.equalities) {
    if (static_cast<int>(eq.coeffs.size()) != d)
      throw SizeMismatch("equality row has " +
                         std::to_string(eq.coeffs.size()) + " entries in a " +
                         std::to_string(d) + "-coordinate slice");
    ARow ge, le;
    ge.a.assign(eq.coeffs.begin(), eq.coeffs.end());
    ge.b = eq.rhs;
    le.a.resize(d);
    for (int c = 0; c < d; ++c) le.a[c] = -eq.coeffs[c];
    le.b = -eq.rhs;
    sys.push_back(std::move(ge));
    sys.push_back(std::move(le));
  }
  return sys;
}

size_t worker_count(size_t tasks) {
  if (tasks <= 1) return tasks;
  size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("CLUSTERCONES_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) cap = std::min<size_t>(cap, v);
  }
  return std::min(cap, tasks);
}

void validate_weight(int n, const Weight& w) {
  if (static_cast<int>(w.lambda.size()) != n - 1)
    throw SizeMismatch("expected " + std::to_string(n - 1) +
                       " weight entries, got " +
                       std::to_string(w.lambda.size()));
  for (size_t i = 0; i < w.lambda.size(); ++i) {
    if (w.lambda[i] < 0)
      throw InvalidIndices("weight entries must be nonnegative");
    if (i + 1 < w.lambda.size() && w.lambda[i] < w.lambda[i + 1])
      throw InvalidIndices("weight entries must be weakly decreasing");
  }
}

}  // namespace

Cone make_cone(IneqSystem sys) {
  Cone c;
  c.ineq = normalized(std::move(sys));
  c.dim = static_cast<int>(c.ineq.order.size());
  return c;
}

Cone gt_cone(int n) {
  if (n < 1)
    throw OutOfRange("triangular arrays need n >= 1, got " +
                     std::to_string(n));
  IneqSystem sys;
  std::map<VLabel, int> col;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      col[vl(i, j)] = static_cast<int>(sys.order.size());
      sys.order.push_back(vl(i, j));
    }
  const int d = static_cast<int>(sys.order.size());
  auto add = [&](const VLabel& plus, const VLabel& minus, bool has_minus) {
    std::vector<int> row(d, 0);
    row[col[plus]] = 1;
    if (has_minus) row[col[minus]] = -1;
    sys.rows.push_back(std::move(row));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) add(vl(i, j), vl(i, j - 1), true);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n - 1; ++j) add(vl(i, j), vl(i + 1, j + 1), true);
  add(vl(n, n), vl(n, n), false);
  return make_cone(std::move(sys));
}

RaySet rays(const Cone& c) {
  const int d = c.dim;
  if (d > 21)
    throw DimensionTooLarge("ray enumeration supports at most 21 coordinates, got " +
                            std::to_string(d));
  RaySet out;
  if (d == 0) return out;
  const auto& rows = c.ineq.rows;
  auto idx = independent_rows(rows, d, d);
  if (static_cast<int>(idx.size()) < d)
    throw Error("cone is not pointed; extreme rays are not defined");

  // Processing order: an independent spanning set first (its simplicial cone
  // is the starting point), then every remaining row as a cut.
  std::vector<int> order = idx;
  std::set<int> started(idx.begin(), idx.end());
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    if (!started.count(r)) order.push_back(r);

  const int m = static_cast<int>(order.size());
  const size_t words = (m + 63) / 64;
  auto set_bit = [](std::vector<uint64_t>& bits, int t) {
    bits[t / 64] |= uint64_t(1) << (t % 64);
  };

  std::vector<DDRay> cur;
  for (auto& col : inverse_columns(rows, idx)) {
    DDRay r{std::move(col), std::vector<uint64_t>(words, 0)};
    for (int t = 0; t < d; ++t)
      if (idot(rows[order[t]], r.v) == 0) set_bit(r.tight, t);
    cur.push_back(std::move(r));
  }

  for (int t = d; t < m; ++t) {
    const auto& row = rows[order[t]];
    std::vector<Int> val(cur.size());
    bool any_neg = false;
    for (size_t i = 0; i < cur.size(); ++i) {
      val[i] = idot(row, cur[i].v);
      if (val[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (size_t i = 0; i < cur.size(); ++i)
        if (val[i] == 0) set_bit(cur[i].tight, t);
      continue;
    }
    std::vector<DDRay> next;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (val[i] < 0) continue;
      DDRay keep = cur[i];
      if (val[i] == 0) set_bit(keep.tight, t);
      next.push_back(std::move(keep));
    }
    for (size_t p = 0; p < cur.size(); ++p) {
      if (val[p] <= 0) continue;
      for (size_t q = 0; q < cur.size(); ++q) {
        if (val[q] >= 0) continue;
        // p and q span a 2-face exactly when no third ray is tight on
        // everything they are both tight on
        std::vector<uint64_t> common(words);
        for (size_t w = 0; w < words; ++w)
          common[w] = cur[p].tight[w] & cur[q].tight[w];
        bool adjacent = true;
        for (size_t r = 0; r < cur.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (subset_of(common, cur[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay combo;
        combo.v.resize(d);
        for (int cx = 0; cx < d; ++cx)
          combo.v[cx] = val[p] * cur[q].v[cx] - val[q] * cur[p].v[cx];
        make_primitive(combo.v);
        combo.tight.assign(words, 0);
        for (int s = 0; s <= t; ++s)
          if (idot(rows[order[s]], combo.v) == 0) set_bit(combo.tight, s);
        next.push_back(std::move(combo));
      }
    }
    cur = std::move(next);
  }

  for (auto& r : cur) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()),
                 out.rays.end());
  return out;
}

bool cone_equal(const Cone& a, const Cone& b, const BasisChange& basis_change) {
  if (a.dim != b.dim)
    throw DimensionMismatch("cannot compare cones in ambient dimensions " +
                            std::to_string(a.dim) + " and " +
                            std::to_string(b.dim));
  auto ra = rays(a).rays;
  auto rb = rays(b).rays;
  if (basis_change) {
    for (auto& r : ra) {
      r = basis_change(r);
      if (static_cast<int>(r.size()) != b.dim)
        throw DimensionMismatch("basis change produced a vector of length " +
                                std::to_string(r.size()));
      make_primitive(r);
    }
    std::sort(ra.begin(), ra.end());
  }
  return ra == rb;
}

std::string SimplicialReport::str() const {
  std::ostringstream os;
  os << "rays=dim: " << (ray_count_is_dim ? "yes" : "no")
     << "; expected rays: " << (rays_are_expected ? "yes" : "no")
     << "; dual-basis pairing: " << (pairing_is_permutation ? "yes" : "no");
  return os.str();
}

SimplicialReport simplicial_check(const Cone& c, const RaySet& expected) {
  SimplicialReport rep;
  auto got = rays(c).rays;
  rep.ray_count_is_dim = (static_cast<int>(got.size()) == c.dim);
  auto want = expected.rays;
  std::sort(want.begin(), want.end());
  rep.rays_are_expected = (got == want);
  const auto& rws = c.ineq.rows;
  bool perm = !rws.empty() && rws.size() == expected.rays.size();
  if (perm) {
    std::vector<int> row_hits(rws.size(), 0), ray_hits(expected.rays.size(), 0);
    for (size_t r = 0; r < rws.size() && perm; ++r)
      for (size_t k = 0; k < expected.rays.size(); ++k) {
        Int p = idot(rws[r], expected.rays[k]);
        if (p == 1) {
          ++row_hits[r];
          ++ray_hits[k];
        } else if (p != 0) {
          perm = false;
          break;
        }
      }
    for (int h : row_hits) perm = perm && h == 1;
    for (int h : ray_hits) perm = perm && h == 1;
  }
  rep.pairing_is_permutation = perm;
  return rep;
}

WeightSlice weight_slice(int n, const Weight& lambda, const Cone& c) {
  validate_weight(n, lambda);
  WeightSlice s;
  s.cone = c;
  const auto& order = c.ineq.order;
  for (int i = 1; i <= n - 1; ++i) {
    AffineRow eq;
    eq.coeffs.assign(order.size(), 0);
    bool any = false;
    for (size_t t = 0; t < order.size(); ++t)
      if (order[t].i == i) {
        eq.coeffs[t] = 1;
        any = true;
      }
    eq.rhs = lambda.lambda[i - 1] - (i < n - 1 ? lambda.lambda[i] : 0);
    if (!any) {
      if (eq.rhs != 0)
        throw InfeasibleSlice("row " + std::to_string(i) +
                              " has no coordinates but a nonzero required sum");
      continue;
    }
    s.equalities.push_back(std::move(eq));
  }
  fm_levels(assemble(s), c.dim);  // InfeasibleSlice on contradiction
  return s;
}

std::vector<std::vector<Int>> lattice_points(const WeightSlice& s) {
  const int d = s.cone.dim;
  auto levels = fm_levels(assemble(s), d);
  if (d == 0) return {Vec{}};

  for (int k = 1; k <= d; ++k) {
    bool lower = false, upper = false;
    for (const auto& r : levels[k]) {
      if (r.a[k - 1] > 0) lower = true;
      if (r.a[k - 1] < 0) upper = true;
    }
    if (!lower || !upper)
      throw UnboundedSlice("coordinate " + std::to_string(k) +
                           " of the slice is unbounded");
  }

  // Bounds for x_k once x_1..x_{k-1} are fixed; exact by construction, so
  // every prefix explored extends to a real point of the slice.
  auto bounds = [&levels](int k, const Vec& x) {
    bool has_lo = false, has_hi = false;
    Int lo = 0, hi = 0;
    for (const auto& r : levels[k]) {
      const Int& ak = r.a[k - 1];
      if (ak == 0) continue;
      Int partial = 0;
      for (int c = 0; c + 1 < k; ++c)
        if (r.a[c] != 0) partial += r.a[c] * x[c];
      if (ak > 0) {
        Int v = ceil_div(r.b - partial, ak);
        if (!has_lo || v > lo) lo = v, has_lo = true;
      } else {
        Int v = floor_div(partial - r.b, -ak);
        if (!has_hi || v < hi) hi = v, has_hi = true;
      }
    }
    return std::make_pair(lo, hi);
  };

  std::function<void(int, Vec&, std::vector<Vec>&)> walk;
  walk = [&](int k, Vec& x, std::vector<Vec>& out) {
    if (k > d) {
      out.push_back(x);
      return;
    }
    auto [lo, hi] = bounds(k, x);
    for (Int v = lo; v <= hi; ++v) {
      x[k - 1] = v;
      walk(k + 1, x, out);
    }
  };

  auto [lo1, hi1] = bounds(1, Vec(static_cast<size_t>(d), 0));
  std::vector<Int> firsts;
  for (Int v = lo1; v <= hi1; ++v) firsts.push_back(v);
  std::vector<std::vector<Vec>> per(firsts.size());
  size_t nworkers = worker_count(firsts.size());
  if (nworkers <= 1) {
    for (size_t t = 0; t < firsts.size(); ++t) {
      Vec x(static_cast<size_t>(d), 0);
      x[0] = firsts[t];
      walk(2, x, per[t]);
    }
  } else {
    std::atomic<size_t> task{0};
    auto body = [&]() {
      for (;;) {
        size_t t = task.fetch_add(1);
        if (t >= per.size()) return;
        Vec x(static_cast<size_t>(d), 0);
        x[0] = firsts[t];
        walk(2, x, per[t]);
      }
    };
    std::vector<std::thread> pool;
    for (size_t w = 0; w < nworkers; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }

  std::vector<Vec> out;
  for (auto& chunk : per)
    for (auto& p : chunk) out.push_back(std::move(p));
  return out;
}

Int weyl_dim(int n, const Weight& lambda) {
  validate_weight(n, lambda);
  std::vector<Int> l(n);
  for (int i = 1; i <= n; ++i)
    l[i - 1] = (i < n ? Int(lambda.lambda[i - 1]) : Int(0)) + (n - i);
  Int num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= l[i] - l[j];
      den *= j - i;
    }
  return num / den;
}

}  // namespace cc
