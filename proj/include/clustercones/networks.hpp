#pragma once

// Planar networks encoding products of elementary unipotent matrices
// E_h(t) = I + t e_{h,h+1}.  Sources sit on the left at heights 1..n, sinks
// on the right; a slant at level h lets a path climb from height h to h+1
// while picking up the slant's weight.  Entry (a,b) of the encoded product
// is the total weight of all left-to-right paths from a to b.

#include <map>
#include <string>
#include <vector>

#include "clustercones/exactalg.hpp"
#include "clustercones/matrices.hpp"
#include "clustercones/words.hpp"

namespace cc {

struct Slant {
  int position{0};  // 1-based letter index within the word
  int level{0};
  VarId weight;

  friend bool operator==(const Slant&, const Slant&) = default;
};

struct PlanarNetwork {
  int n{0};
  std::vector<Slant> slants;  // ordered left to right
};

// One slant per letter, in word order, with weights t_1..t_m.  The word must
// use upper-triangular generators only and be reduced of full length
// n(n-1)/2.
PlanarNetwork network_from_word(const DoubleWord& w);  // NotReduced

// The n x n unipotent path-weight matrix of the network.
PolyMatrix path_matrix(const PlanarNetwork& net);

// Minor of the path-weight matrix on the given rows and columns.
LaurentPoly minor_via_paths(const PlanarNetwork& net, const std::vector<int>& rows,
                            const std::vector<int>& cols);  // SizeMismatch

// t_l -> tau[j;k] where letter l is the j-th occurrence of its level h and
// k = n+1-h.  For the lexicographically minimal word this is a bijection
// onto {tau[j;k] : 1 <= j < k <= n}.
std::map<VarId, VarId> tau_relabel(const DoubleWord& w);  // NotReduced

// prod_{k=1..i} prod_{l=k+1..k+j-i} tau[k;l] -- the factored form taken by
// the reflected contiguous minor (rows n+1-j..n+i-j, columns n+1-i..n) on
// the relabeled network.
Monomial whitney_factorization(int n, int i, int j);  // InvalidIndices

// Debug rendering; highlight lists slant positions to emphasize.
std::string network_svg(const PlanarNetwork& net,
                        const std::vector<int>& highlight = {});

}  // namespace cc
