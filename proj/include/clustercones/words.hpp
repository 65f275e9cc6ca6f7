#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "clustercones/errors.hpp"
#include "clustercones/quiver.hpp"

namespace cc {

// One crossing letter of a double word: a color (red or blue) and a level
// in 1..n-1.  Blue letters build the "positive" wiring diagram read left to
// right; red letters act on the second family of strands.
struct Letter {
  bool red{false};
  int level{0};
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct DoubleWord {
  int n{0};
  std::vector<Letter> letters;
  friend bool operator==(const DoubleWord&, const DoubleWord&) = default;
};

DoubleWord blue_word(int n, const std::vector<int>& levels);  // OutOfRange
// (1, 2,1, 3,2,1, ..., n-1,...,1), all blue: the lexicographically minimal
// reduced word for the longest permutation.
DoubleWord lex_min_word(int n);
// Parse "1,2,1" / "B1 R2 B1" style input.  Bare numbers are blue.
DoubleWord parse_word(int n, const std::string& text);
std::string to_string(const DoubleWord& w);

// A chamber of the wiring diagram: I = ids of red strands passing below it,
// J = ids of blue strands passing below it.  |I| == |J| == band height.
// Chambers cut off by the left or right boundary are unbounded.
struct Chamber {
  std::vector<int> I, J;
  bool unbounded{false};
  friend auto operator<=>(const Chamber&, const Chamber&) = default;
};
std::string to_string(const Chamber& c);

struct Arrangement {
  int n{0};
  DoubleWord word;
  // bands[h-1] lists the chambers of band h (heights h..h+1), left to right.
  std::vector<std::vector<Chamber>> bands;

  std::vector<Chamber> all() const;
  bool has_chamber(const std::vector<int>& I, const std::vector<int>& J) const;
};

// Trace the strands of w and collect all chambers.  Throws NotReduced if a
// pair of same-colored strands crosses twice.
Arrangement build_arrangement(const DoubleWord& w);

// Quiver whose vertices are the chambers of a word's arrangement (identity:
// the (I, J) pair).  Unbounded chambers are frozen; arrows between two
// frozen chambers are dropped.
struct ChamberQuiver {
  std::vector<Chamber> chambers;  // band by band, left to right
  std::vector<char> frozen;
  std::vector<std::vector<int>> eps;  // eps[a][b] > 0: arrows a -> b

  int size() const { return static_cast<int>(chambers.size()); }
  int index_of(const Chamber& c) const;  // -1 if absent
};

ChamberQuiver bfz_quiver(const DoubleWord& w);  // NotReduced

// Standard two-term exchange on the eps matrix; the mutated chamber keeps
// its slot but acquires the identity `relabel` (the minor swapped in by a
// braid move).  Throws FrozenVertex on unbounded chambers.
ChamberQuiver mutate_chamber_quiver(const ChamberQuiver& q, int k,
                                    const Chamber& relabel);
// Same quiver with chambers sorted by identity (for comparisons across
// different words).
ChamberQuiver canonical_chamber_order(const ChamberQuiver& q);
bool operator==(const ChamberQuiver& a, const ChamberQuiver& b);

// Relabel chambers (I = {1..i}, J = {j-i+1..j}) as vertices v[i;j].  Only
// possible when every chamber has that form (true for lex_min_word).
Quiver as_vertex_quiver(const ChamberQuiver& q, int n);

// A reduced blue word for the longest permutation whose arrangement contains
// the chamber (I = {1..|J|}, J).  J must be a nonempty proper subset of
// {1..n}, strictly increasing.  Throws InvalidIndexSet.
DoubleWord word_for_minor(int n, const std::vector<int>& J);

// All reduced blue words for the longest permutation (small n only).
std::vector<DoubleWord> all_blue_w0_words(int n);
DoubleWord random_blue_w0_word(int n, std::mt19937_64& rng);

// Braid moves.  Return the rewritten word, or nothing if the move does not
// apply at position pos (0-based).  2-move: swap adjacent letters whose
// levels differ by >= 2.  3-move: same color (a, b, a) with |a - b| == 1
// becomes (b, a, b).
std::optional<DoubleWord> apply_2move(const DoubleWord& w, int pos);
std::optional<DoubleWord> apply_3move(const DoubleWord& w, int pos);

}  // namespace cc
