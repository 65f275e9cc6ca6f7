#pragma once

// Quivers with frozen vertices and the mutation rule, plus the named quiver
// families and mutation plans used throughout the project.
//
// Sign convention: eps[a][b] > 0 means eps[a][b] arrows a -> b.  The exchange
// relation's first binomial term then ranges over arrows OUT of the mutating
// vertex.  Arrows between two frozen vertices are never stored.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "clustercones/errors.hpp"

namespace cc {

struct VLabel {
  int i{0}, j{0};
  friend auto operator<=>(const VLabel&, const VLabel&) = default;
};

inline VLabel vl(int i, int j) { return VLabel{i, j}; }
// "v[1;3]"; negative label pairs render as companion vertices, "w[1;3]".
std::string to_string(const VLabel& v);

using MutationPlan = std::vector<VLabel>;

class Quiver {
 public:
  Quiver() = default;
  // Vertices are sorted into canonical lexicographic label order.
  explicit Quiver(std::vector<std::pair<VLabel, bool>> vertices);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<VLabel>& labels() const { return labels_; }
  const VLabel& label(int idx) const { return labels_.at(idx); }
  int index_of(const VLabel& v) const;  // throws UnknownVertex
  bool has_vertex(const VLabel& v) const { return index_.count(v) != 0; }
  bool frozen(int idx) const { return frozen_.at(idx) != 0; }
  bool frozen(const VLabel& v) const { return frozen(index_of(v)); }
  std::vector<VLabel> unfrozen_labels() const;

  int eps(int a, int b) const { return eps_.at(a).at(b); }
  int eps(const VLabel& a, const VLabel& b) const {
    return eps_.at(index_of(a)).at(index_of(b));
  }

  // Adds mult arrows from -> to; arrows between two frozen vertices are
  // dropped on the spot.
  void add_arrow(const VLabel& from, const VLabel& to, int mult = 1);

  struct Arrow {
    VLabel from, to;
    int mult;
  };
  // Positive eps entries in canonical (from, to) order.
  std::vector<Arrow> arrows() const;
  int max_multiplicity() const;
  bool skew_symmetric() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  friend Quiver mutate_quiver(const Quiver& q, const VLabel& k);
  friend Quiver reversed(const Quiver& q);
  std::vector<VLabel> labels_;
  std::vector<char> frozen_;
  std::vector<std::vector<int>> eps_;
  std::map<VLabel, int> index_;
};

Quiver mutate_quiver(const Quiver& q, const VLabel& k);  // FrozenVertex, UnknownVertex
bool is_sink(const Quiver& q, const VLabel& v);
Quiver reversed(const Quiver& q);
Quiver apply_plan(const Quiver& q, const MutationPlan& plan);
// Subquiver on the given vertices with all arrows among them.
Quiver induced_subquiver(const Quiver& q, const std::vector<VLabel>& keep);

// Quiver of the unipotent subgroup: vertices {(i;j) : 1 <= i < j <= n},
// frozen iff j = n, with the triangular horizontal/vertical/diagonal arrow
// pattern.
Quiver build_U_quiver(int n);

// Extended quiver for the full big cell: vertices {(i;j) : 1 <= i <= j <= n}
// minus (n;n) unless include_nn; frozen iff j = n or i = j; the same three
// arrow families extended to the diagonal vertices; (n;n) isolated.
Quiver build_Gew0_quiver(int n, bool include_nn);

// All-unfrozen triangular quiver on {(k;l) : 1 <= l <= k <= m}: horizontal
// (k;l+1)->(k;l), up (k;l)->(k-1;l), down-right (k-1;l)->(k;l+1).
Quiver build_triangle_quiver(int m);

// Nested lexicographic sweeps of the unfrozen vertices: all (i;j) with j < n
// in (j, i) order, then j < n-1, ..., finishing with the single sweep [(1;2)].
MutationPlan reflection_plan(int n);  // n >= 3

// One full lexicographic sweep of the triangle quiver's vertices.
MutationPlan triangle_lex_plan(int m);
// Sweeps of the rows k <= r for r = m, m-1, ..., 1, each in lexicographic
// order; realizes full arrow reversal on the triangle quiver.
MutationPlan triangle_nested_plan(int m);

}  // namespace cc
