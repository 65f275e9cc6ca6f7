#include "clustercones/tropic.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <utility>

namespace cc {

namespace {

// Flattened exchange matrix; mutation never changes the label set, so this
// keys a quiver within one mutation class.
std::vector<int> eps_key(const Quiver& q) {
  std::vector<int> key;
  key.reserve(q.size() * q.size());
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) key.push_back(q.eps(a, b));
  return key;
}

Int binomial(int c, int r) {
  Int out(1);
  for (int t = 1; t <= r; ++t) {
    out *= c - t + 1;
    out /= t;
  }
  return out;
}

ExpVec to_expvec(const std::map<VarId, int>& m) {
  ExpVec out;
  for (const auto& [id, e] : m)
    if (e != 0) out.emplace_back(id, e);
  return out;
}

}  // namespace

LaurentPoly z_monomial(const XMonomial& m) {
  std::map<VarId, int> exps;
  for (const auto& [v, e] : m) exps[var_X(v.i, v.j)] = e;
  return LaurentPoly::monomial(Int(1), to_expvec(exps));
}

XMonomial x_exponent(const Monomial& t) {
  XMonomial m;
  for (const auto& [id, e] : t.exps) {
    if (id.kind != VarKind::X)
      throw Error("exponent of " + to_string(id) +
                  " is not a dual-torus coordinate");
    if (e != 0) m[vl(id.a, id.b)] = e;
  }
  return m;
}

LaurentPoly x_mutate(const LaurentPoly& poly, const VLabel& k, const Quiver& q) {
  int ki = q.index_of(k);
  if (q.frozen(ki))
    throw FrozenVertex("cannot mutate at frozen vertex " + to_string(k));
  std::vector<Monomial> out;
  for (const auto& t : poly.terms()) {
    // exponent in the mutated seed's basis -> exponent in q's basis
    XMonomial m;
    int mk = 0;
    for (const auto& [id, e] : t.exps) {
      if (id.kind != VarKind::X)
        throw Error("exponent of " + to_string(id) +
                    " is not a dual-torus coordinate");
      VLabel v = vl(id.a, id.b);
      int vi = q.index_of(v);
      if (vi == ki) {
        mk -= e;
      } else {
        m[v] += e;
        mk += e * std::max(q.eps(vi, ki), 0);
      }
    }
    if (mk != 0) m[k] = mk;
    long c = 0;
    for (const auto& [v, e] : m) c -= static_cast<long>(e) * q.eps(v, k);
    if (c < 0)
      throw NonLaurentPullback("monomial " + LaurentPoly::monomial(Int(1), t.exps).str() +
                               " pairs positively with e_" + to_string(k) +
                               "; its pullback has a true denominator");
    for (long r = 0; r <= c; ++r) {
      XMonomial shifted = m;
      int& ek = shifted[k];
      ek += static_cast<int>(r);
      if (ek == 0) shifted.erase(k);
      std::map<VarId, int> exps;
      for (const auto& [v, e] : shifted) exps[var_X(v.i, v.j)] = e;
      out.push_back(Monomial{t.coeff * binomial(static_cast<int>(c),
                                                static_cast<int>(r)),
                             to_expvec(exps)});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

MutationPlan optimized_plan(const Quiver& q, const VLabel& f) {
  int fi = q.index_of(f);
  if (!q.frozen(fi))
    throw FrozenVertex("optimized seeds are sought for frozen vertices; " +
                       to_string(f) + " is mutable");
  if (is_sink(q, f)) return {};

  // Induced outgoing paths of simple arrows, shortest first.
  std::vector<std::vector<int>> frontier{{fi}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& path : frontier) {
      for (int b = 0; b < q.size(); ++b) {
        if (q.frozen(b) || q.eps(path.back(), b) != 1) continue;
        if (std::find(path.begin(), path.end(), b) != path.end()) continue;
        bool chord = false;
        for (size_t t = 0; t + 1 < path.size(); ++t)
          if (q.eps(static_cast<int>(path[t]), b) != 0) chord = true;
        if (chord) continue;
        auto cand = path;
        cand.push_back(b);
        MutationPlan plan;
        for (size_t t = 1; t < cand.size(); ++t) plan.push_back(q.label(cand[t]));
        if (is_sink(apply_plan(q, plan), f)) return plan;
        next.push_back(std::move(cand));
      }
    }
    frontier = std::move(next);
  }

  // Fallback: breadth-first over all unfrozen mutation sequences.
  constexpr int kMaxDepth = 12;
  std::set<std::vector<int>> seen{eps_key(q)};
  std::deque<std::pair<Quiver, MutationPlan>> queue;
  queue.emplace_back(q, MutationPlan{});
  while (!queue.empty()) {
    auto [cur, plan] = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(plan.size()) >= kMaxDepth) continue;
    for (const auto& u : cur.unfrozen_labels()) {
      Quiver nxt = mutate_quiver(cur, u);
      if (!seen.insert(eps_key(nxt)).second) continue;
      MutationPlan nplan = plan;
      nplan.push_back(u);
      if (is_sink(nxt, f)) return nplan;
      queue.emplace_back(std::move(nxt), std::move(nplan));
    }
  }
  throw NoOptimizedSeedFound("no mutation sequence of length <= " +
                             std::to_string(kMaxDepth) + " makes " +
                             to_string(f) + " a sink");
}

bool all_unit_coefficients(const ThetaFunction& t) {
  for (const auto& term : t.poly.terms())
    if (term.coeff != 1) return false;
  return true;
}

ThetaFunction theta_at_seed(const VLabel& f, const Quiver& target,
                            const MutationPlan& plan,
                            const std::string& seed_tag) {
  std::vector<Quiver> charts{target};
  for (const auto& k : plan) charts.push_back(mutate_quiver(charts.back(), k));
  if (!is_sink(charts.back(), f))
    throw Error("plan does not make " + to_string(f) + " a sink");

  LaurentPoly p = z_monomial(XMonomial{{f, -1}});
  for (size_t t = plan.size(); t-- > 0;) p = x_mutate(p, plan[t], charts[t]);

  int pure = 0;
  for (const auto& term : p.terms()) {
    if (term.coeff <= 0)
      throw Error("pullback of the coordinate at " + to_string(f) +
                  " has a non-positive coefficient");
    if (term.exps == ExpVec{{var_X(f.i, f.j), -1}} && term.coeff == 1) ++pure;
  }
  if (pure != 1)
    throw Error("pullback of the coordinate at " + to_string(f) +
                " does not contain its pure term exactly once");
  return ThetaFunction{std::move(p), f, seed_tag};
}

Potential potential_U(int n) {
  Potential pot;
  pot.quiver = reversed(build_U_quiver(n));
  for (const auto& f : pot.quiver.labels()) {
    if (!pot.quiver.frozen(f)) continue;
    pot.summands.push_back(theta_at_seed(
        f, pot.quiver, optimized_plan(pot.quiver, f), "U:reversed"));
  }
  return pot;
}

Potential potential_GmodU(int n, bool include_nn) {
  Potential pot;
  pot.quiver = build_Gew0_quiver(n, include_nn);
  for (const auto& f : pot.quiver.labels()) {
    if (!pot.quiver.frozen(f)) continue;
    pot.summands.push_back(theta_at_seed(
        f, pot.quiver, optimized_plan(pot.quiver, f), "GmodU:initial"));
  }
  return pot;
}

IneqSystem normalized(IneqSystem sys) {
  std::vector<std::vector<int>> rows;
  std::set<std::vector<int>> seen;
  for (auto& row : sys.rows) {
    int g = 0;
    for (int x : row) g = std::gcd(g, x);
    if (g == 0) continue;
    if (g > 1)
      for (int& x : row) x /= g;
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  sys.rows = std::move(rows);
  return sys;
}

IneqSystem tropicalize(const Potential& p) {
  IneqSystem sys;
  sys.order = p.quiver.labels();
  std::map<VLabel, int> col;
  for (size_t t = 0; t < sys.order.size(); ++t)
    col[sys.order[t]] = static_cast<int>(t);
  for (const auto& theta : p.summands) {
    for (const auto& term : theta.poly.terms()) {
      if (term.coeff <= 0)
        throw Error("potential has a non-positive coefficient; its "
                    "tropicalization is not a min of linear forms over the "
                    "monomials");
      std::vector<int> row(sys.order.size(), 0);
      for (const auto& [v, e] : x_exponent(term)) row[col.at(v)] = -e;
      sys.rows.push_back(std::move(row));
    }
  }
  return normalized(std::move(sys));
}

}  // namespace cc
