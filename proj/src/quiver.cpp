#include "clustercones/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace cc {

std::string to_string(const VLabel& v) {
  std::ostringstream os;
  if (v.i < 0 && v.j < 0)
    os << "w[" << -v.i << ";" << -v.j << "]";
  else
    os << "v[" << v.i << ";" << v.j << "]";
  return os.str();
}

Quiver::Quiver(std::vector<std::pair<VLabel, bool>> vertices) {
  std::sort(vertices.begin(), vertices.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [lbl, fr] : vertices) {
    if (index_.count(lbl)) throw Error("duplicate vertex " + to_string(lbl));
    index_[lbl] = static_cast<int>(labels_.size());
    labels_.push_back(lbl);
    frozen_.push_back(fr ? 1 : 0);
  }
  eps_.assign(labels_.size(), std::vector<int>(labels_.size(), 0));
}

int Quiver::index_of(const VLabel& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw UnknownVertex("unknown vertex " + to_string(v));
  return it->second;
}

std::vector<VLabel> Quiver::unfrozen_labels() const {
  std::vector<VLabel> out;
  for (int a = 0; a < size(); ++a)
    if (!frozen(a)) out.push_back(labels_[a]);
  return out;
}

void Quiver::add_arrow(const VLabel& from, const VLabel& to, int mult) {
  int a = index_of(from), b = index_of(to);
  if (frozen(a) && frozen(b)) return;
  eps_[a][b] += mult;
  eps_[b][a] -= mult;
}

std::vector<Quiver::Arrow> Quiver::arrows() const {
  std::vector<Arrow> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (eps_[a][b] > 0) out.push_back(Arrow{labels_[a], labels_[b], eps_[a][b]});
  return out;
}

int Quiver::max_multiplicity() const {
  int m = 0;
  for (const auto& row : eps_)
    for (int e : row) m = std::max(m, std::abs(e));
  return m;
}

bool Quiver::skew_symmetric() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b)
      if (eps_[a][b] != -eps_[b][a]) return false;
    if (eps_[a][a] != 0) return false;
  }
  return true;
}

bool operator==(const Quiver& a, const Quiver& b) {
  return a.labels_ == b.labels_ && a.frozen_ == b.frozen_ && a.eps_ == b.eps_;
}

Quiver mutate_quiver(const Quiver& q, const VLabel& kl) {
  const int k = q.index_of(kl);
  if (q.frozen(k)) throw FrozenVertex("cannot mutate frozen vertex " + to_string(kl));
  const int n = q.size();
  Quiver out = q;
  auto pos = [](int v) { return v > 0 ? v : 0; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == k || b == k) {
        out.eps_[a][b] = -q.eps_[a][b];
      } else {
        out.eps_[a][b] = q.eps_[a][b] + pos(q.eps_[a][k]) * pos(q.eps_[k][b]) -
                         pos(-q.eps_[a][k]) * pos(-q.eps_[k][b]);
      }
    }
  }
  // Frozen-frozen arrows never survive.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (out.frozen(a) && out.frozen(b)) out.eps_[a][b] = 0;
  return out;
}

bool is_sink(const Quiver& q, const VLabel& v) {
  int a = q.index_of(v);
  for (int b = 0; b < q.size(); ++b)
    if (q.eps(a, b) > 0) return false;
  return true;
}

Quiver reversed(const Quiver& q) {
  Quiver out = q;
  for (auto& row : out.eps_)
    for (int& e : row) e = -e;
  return out;
}

Quiver apply_plan(const Quiver& q, const MutationPlan& plan) {
  Quiver cur = q;
  for (const VLabel& v : plan) cur = mutate_quiver(cur, v);
  return cur;
}

Quiver induced_subquiver(const Quiver& q, const std::vector<VLabel>& keep) {
  std::vector<std::pair<VLabel, bool>> verts;
  for (const VLabel& v : keep) verts.emplace_back(v, q.frozen(q.index_of(v)));
  Quiver out(std::move(verts));
  for (const VLabel& a : keep)
    for (const VLabel& b : keep) {
      int e = q.eps(q.index_of(a), q.index_of(b));
      if (e > 0) out.add_arrow(a, b, e);
    }
  return out;
}

Quiver build_U_quiver(int n) {
  if (n < 2) throw OutOfRange("need n >= 2");
  std::vector<std::pair<VLabel, bool>> verts;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) verts.emplace_back(vl(i, j), j == n);
  Quiver q(std::move(verts));
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (j + 1 <= n) q.add_arrow(vl(i, j + 1), vl(i, j));        // horizontal
      if (i + 1 < j) q.add_arrow(vl(i + 1, j), vl(i, j));         // vertical
      if (j + 1 <= n) q.add_arrow(vl(i, j), vl(i + 1, j + 1));    // diagonal
    }
  }
  return q;
}

Quiver build_Gew0_quiver(int n, bool include_nn) {
  if (n < 2) throw OutOfRange("need n >= 2");
  std::vector<std::pair<VLabel, bool>> verts;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      if (i == n && j == n && !include_nn) continue;
      verts.emplace_back(vl(i, j), j == n || i == j);
    }
  Quiver q(std::move(verts));
  auto add = [&](VLabel a, VLabel b) {
    if (q.has_vertex(a) && q.has_vertex(b)) q.add_arrow(a, b);
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (j + 1 <= n) add(vl(i, j + 1), vl(i, j));        // horizontal
      if (i + 1 <= j) add(vl(i + 1, j), vl(i, j));        // vertical
      if (j + 1 <= n) add(vl(i, j), vl(i + 1, j + 1));    // diagonal
    }
  }
  return q;
}

Quiver build_triangle_quiver(int m) {
  if (m < 1) throw OutOfRange("need m >= 1");
  std::vector<std::pair<VLabel, bool>> verts;
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= k; ++l) verts.emplace_back(vl(k, l), false);
  Quiver q(std::move(verts));
  for (int k = 1; k <= m; ++k) {
    for (int l = 1; l <= k; ++l) {
      if (l + 1 <= k) q.add_arrow(vl(k, l + 1), vl(k, l));  // horizontal
      if (l <= k - 1) {
        q.add_arrow(vl(k, l), vl(k - 1, l));      // up
        q.add_arrow(vl(k - 1, l), vl(k, l + 1));  // down-right
      }
    }
  }
  return q;
}

MutationPlan reflection_plan(int n) {
  if (n < 3) throw OutOfRange("need n >= 3");
  MutationPlan plan;
  for (int jmax = n - 1; jmax >= 2; --jmax)
    for (int j = 2; j <= jmax; ++j)
      for (int i = 1; i < j; ++i) plan.push_back(vl(i, j));
  return plan;
}

MutationPlan triangle_lex_plan(int m) {
  MutationPlan plan;
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= k; ++l) plan.push_back(vl(k, l));
  return plan;
}

MutationPlan triangle_nested_plan(int m) {
  MutationPlan plan;
  for (int r = m; r >= 1; --r)
    for (int k = 1; k <= r; ++k)
      for (int l = 1; l <= k; ++l) plan.push_back(vl(k, l));
  return plan;
}

}  // namespace cc
