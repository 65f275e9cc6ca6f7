#include "clustercones/words.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <numeric>
#include <set>
#include <utility>

namespace cc {

namespace {

// Strand ids by height (bottom = index 0) after each prefix of the word.
// Red strand i enters at height i; blue strand j enters at height n+1-j.
struct Trace {
  std::vector<std::vector<int>> red, blue;
};

Trace trace_strands(const DoubleWord& w) {
  const int n = w.n;
  if (n < 2) throw OutOfRange("need n >= 2");
  std::vector<int> red(n), blue(n);
  for (int h = 0; h < n; ++h) {
    red[h] = h + 1;
    blue[h] = n - h;
  }
  Trace tr;
  tr.red.push_back(red);
  tr.blue.push_back(blue);
  std::set<std::pair<int, int>> crossed_red, crossed_blue;
  for (const Letter& l : w.letters) {
    if (l.level < 1 || l.level >= n) throw OutOfRange("letter level out of range");
    auto& st = l.red ? red : blue;
    auto& seen = l.red ? crossed_red : crossed_blue;
    auto [lo, hi] = std::minmax(st[l.level - 1], st[l.level]);
    if (!seen.insert({lo, hi}).second)
      throw NotReduced("strands " + std::to_string(lo) + "," + std::to_string(hi) +
                       " cross twice");
    std::swap(st[l.level - 1], st[l.level]);
    tr.red.push_back(red);
    tr.blue.push_back(blue);
  }
  return tr;
}

std::vector<int> ids_below(const std::vector<int>& state, int h) {
  std::vector<int> out(state.begin(), state.begin() + h);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DoubleWord blue_word(int n, const std::vector<int>& levels) {
  DoubleWord w;
  w.n = n;
  for (int l : levels) {
    if (l < 1 || l >= n) throw OutOfRange("letter level out of range");
    w.letters.push_back({false, l});
  }
  return w;
}

DoubleWord lex_min_word(int n) {
  std::vector<int> levels;
  for (int j = 2; j <= n; ++j)
    for (int l = j - 1; l >= 1; --l) levels.push_back(l);
  return blue_word(n, levels);
}

DoubleWord parse_word(int n, const std::string& text) {
  DoubleWord w;
  w.n = n;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    bool red = false;
    size_t at = 0;
    if (tok[0] == 'B' || tok[0] == 'b') {
      at = 1;
    } else if (tok[0] == 'R' || tok[0] == 'r') {
      red = true;
      at = 1;
    }
    if (at >= tok.size()) throw Error("bad letter token: " + tok);
    int lvl = 0;
    for (; at < tok.size(); ++at) {
      if (!std::isdigit(static_cast<unsigned char>(tok[at])))
        throw Error("bad letter token: " + tok);
      lvl = lvl * 10 + (tok[at] - '0');
    }
    if (lvl < 1 || lvl >= n) throw OutOfRange("letter level out of range: " + tok);
    w.letters.push_back({red, lvl});
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n')
      flush();
    else
      tok += ch;
  }
  flush();
  return w;
}

std::string to_string(const DoubleWord& w) {
  std::string s;
  for (const Letter& l : w.letters) {
    if (!s.empty()) s += ' ';
    s += l.red ? 'R' : 'B';
    s += std::to_string(l.level);
  }
  return s;
}

std::string to_string(const Chamber& c) {
  std::string s = "D[";
  for (size_t t = 0; t < c.I.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(c.I[t]);
  }
  s += '|';
  for (size_t t = 0; t < c.J.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(c.J[t]);
  }
  s += ']';
  return s;
}

std::vector<Chamber> Arrangement::all() const {
  std::vector<Chamber> out;
  for (const auto& band : bands) out.insert(out.end(), band.begin(), band.end());
  return out;
}

bool Arrangement::has_chamber(const std::vector<int>& I, const std::vector<int>& J) const {
  for (const auto& band : bands)
    for (const Chamber& c : band)
      if (c.I == I && c.J == J) return true;
  return false;
}

Arrangement build_arrangement(const DoubleWord& w) {
  Trace tr = trace_strands(w);
  const int n = w.n;
  Arrangement arr;
  arr.n = n;
  arr.word = w;
  arr.bands.resize(n - 1);
  for (int h = 1; h < n; ++h) {
    std::vector<int> ps;
    for (int p = 0; p < static_cast<int>(w.letters.size()); ++p)
      if (w.letters[p].level == h) ps.push_back(p + 1);
    auto& band = arr.bands[h - 1];
    for (int r = 0; r <= static_cast<int>(ps.size()); ++r) {
      const int snap = (r == 0) ? 0 : ps[r - 1];
      Chamber c;
      c.I = ids_below(tr.red[snap], h);
      c.J = ids_below(tr.blue[snap], h);
      c.unbounded = (r == 0 || r == static_cast<int>(ps.size()));
      band.push_back(std::move(c));
    }
  }
  return arr;
}

int ChamberQuiver::index_of(const Chamber& c) const {
  for (int a = 0; a < size(); ++a)
    if (chambers[a].I == c.I && chambers[a].J == c.J) return a;
  return -1;
}

namespace {

struct Xing {
  long long pos;
  bool red;
  bool fict;
};

}  // namespace

ChamberQuiver bfz_quiver(const DoubleWord& w) {
  const Arrangement arr = build_arrangement(w);
  const int n = w.n;

  ChamberQuiver q;
  std::vector<int> offset(n - 1, 0);
  for (int h = 1; h < n; ++h) {
    offset[h - 1] = q.size();
    for (const Chamber& c : arr.bands[h - 1]) {
      q.chambers.push_back(c);
      q.frozen.push_back(c.unbounded ? 1 : 0);
    }
  }
  const int m = q.size();
  q.eps.assign(m, std::vector<int>(m, 0));

  // Crossings by level, in diagram order.  A descending run of fictitious
  // red crossings (one per level, leftmost first) precedes the word: it
  // bounds no chamber but participates in the adjacency scans below.
  std::vector<std::vector<long long>> ps(n - 1);
  std::vector<std::vector<Xing>> lvl(n - 1);
  for (int h = 1; h < n; ++h) lvl[h - 1].push_back({-h, true, true});
  for (int p = 0; p < static_cast<int>(w.letters.size()); ++p) {
    const Letter& l = w.letters[p];
    ps[l.level - 1].push_back(p + 1);
    lvl[l.level - 1].push_back({p + 1, l.red, false});
  }

  // Chamber of band h just right / just left of diagram position x.
  auto idx_after = [&](int h, long long x) {
    const auto& v = ps[h - 1];
    return offset[h - 1] +
           static_cast<int>(std::upper_bound(v.begin(), v.end(), x) - v.begin());
  };
  auto idx_before = [&](int h, long long x) {
    const auto& v = ps[h - 1];
    return offset[h - 1] +
           static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  auto add_arrow = [&](int from, int to) {
    ++q.eps[from][to];
    --q.eps[to][from];
  };

  // Each real crossing points across its own band: left to right when blue,
  // right to left when red.
  for (int h = 1; h < n; ++h)
    for (const Xing& x : lvl[h - 1]) {
      if (x.fict) continue;
      const int left = idx_before(h, x.pos), right = idx_after(h, x.pos);
      if (x.red)
        add_arrow(right, left);
      else
        add_arrow(left, right);
    }

  // Scan each chamber window: consecutive crossings X1 < X2 on level j (X2
  // may be the right boundary) against the crossings of an adjacent level
  // strictly between them.  The first such crossing Y, when it continues a
  // pseudoline of X1's color and is not the opening crossing of its level,
  // closes a chamber whose lifespan interleaves the window's: these get the
  // inclined arrows.  An opposite-colored consecutive pair inside the window
  // bounds a nested chamber that points at (or away from) the window's.
  for (int j = 1; j < n; ++j) {
    const auto& xs = lvl[j - 1];
    for (int t = 0; t < static_cast<int>(xs.size()); ++t) {
      const Xing& x1 = xs[t];
      const long long hi =
          (t + 1 < static_cast<int>(xs.size())) ? xs[t + 1].pos : LLONG_MAX;
      const int c = idx_after(j, x1.pos);
      for (int jp : {j - 1, j + 1}) {
        if (jp < 1 || jp >= n) continue;
        std::vector<int> ys;
        for (int u = 0; u < static_cast<int>(lvl[jp - 1].size()); ++u) {
          const Xing& y = lvl[jp - 1][u];
          if (y.pos > x1.pos && y.pos < hi) ys.push_back(u);
        }
        if (!ys.empty() && ys.front() > 0 &&
            lvl[jp - 1][ys.front()].red == x1.red) {
          const int d = idx_before(jp, lvl[jp - 1][ys.front()].pos);
          if (x1.red)
            add_arrow(d, c);
          else
            add_arrow(c, d);
        }
        for (int u = 0; u + 1 < static_cast<int>(ys.size()); ++u) {
          const Xing &y1 = lvl[jp - 1][ys[u]], &y2 = lvl[jp - 1][ys[u + 1]];
          if (y1.red == y2.red) continue;
          const int e = idx_before(jp, y2.pos);
          if (y1.red)
            add_arrow(c, e);
          else
            add_arrow(e, c);
        }
      }
    }
  }

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (q.frozen[a] && q.frozen[b]) q.eps[a][b] = 0;
  return q;
}

ChamberQuiver mutate_chamber_quiver(const ChamberQuiver& q, int k,
                                    const Chamber& relabel) {
  if (k < 0 || k >= q.size()) throw OutOfRange("chamber index out of range");
  if (q.frozen[k]) throw FrozenVertex("cannot mutate unbounded chamber");
  ChamberQuiver out = q;
  const int m = q.size();
  auto pos = [](int v) { return v > 0 ? v : 0; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == k || b == k)
        out.eps[a][b] = -q.eps[a][b];
      else
        out.eps[a][b] = q.eps[a][b] + pos(q.eps[a][k]) * pos(q.eps[k][b]) -
                        pos(-q.eps[a][k]) * pos(-q.eps[k][b]);
    }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (out.frozen[a] && out.frozen[b]) out.eps[a][b] = 0;
  out.chambers[k] = relabel;
  return out;
}

ChamberQuiver canonical_chamber_order(const ChamberQuiver& q) {
  std::vector<int> ord(q.size());
  std::iota(ord.begin(), ord.end(), 0);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    if (q.chambers[a].I.size() != q.chambers[b].I.size())
      return q.chambers[a].I.size() < q.chambers[b].I.size();
    return q.chambers[a] < q.chambers[b];
  });
  ChamberQuiver out;
  out.eps.assign(q.size(), std::vector<int>(q.size(), 0));
  for (int a = 0; a < q.size(); ++a) {
    out.chambers.push_back(q.chambers[ord[a]]);
    out.frozen.push_back(q.frozen[ord[a]]);
    for (int b = 0; b < q.size(); ++b) out.eps[a][b] = q.eps[ord[a]][ord[b]];
  }
  return out;
}

bool operator==(const ChamberQuiver& a, const ChamberQuiver& b) {
  return a.chambers == b.chambers && a.frozen == b.frozen && a.eps == b.eps;
}

Quiver as_vertex_quiver(const ChamberQuiver& q, int n) {
  std::vector<std::pair<VLabel, bool>> verts;
  std::vector<VLabel> labels;
  for (int a = 0; a < q.size(); ++a) {
    const Chamber& c = q.chambers[a];
    const int i = static_cast<int>(c.I.size());
    if (static_cast<int>(c.J.size()) != i || i == 0)
      throw Error("cannot label chamber " + to_string(c));
    const int j = c.J.back();
    if (j > n) throw Error("cannot label chamber " + to_string(c));
    for (int t = 0; t < i; ++t)
      if (c.I[t] != t + 1 || c.J[t] != j - i + 1 + t)
        throw Error("cannot label chamber " + to_string(c));
    labels.push_back(vl(i, j));
    verts.emplace_back(vl(i, j), q.frozen[a] != 0);
  }
  Quiver out(std::move(verts));
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b)
      if (q.eps[a][b] > 0) out.add_arrow(labels[a], labels[b], q.eps[a][b]);
  return out;
}

DoubleWord word_for_minor(int n, const std::vector<int>& J) {
  if (n < 2) throw OutOfRange("need n >= 2");
  if (J.empty() || static_cast<int>(J.size()) >= n)
    throw InvalidIndexSet("need a nonempty proper column set");
  for (size_t t = 0; t < J.size(); ++t) {
    if (J[t] < 1 || J[t] > n) throw InvalidIndexSet("column out of range");
    if (t > 0 && J[t] <= J[t - 1])
      throw InvalidIndexSet("columns must strictly increase");
  }
  const int i = static_cast<int>(J.size());
  std::vector<int> s(n + 1);
  for (int h = 1; h <= n; ++h) s[h] = n + 1 - h;
  std::vector<int> levels;
  auto sink_to = [&](int value, int target) {
    int p = target;
    while (s[p] != value) ++p;
    for (; p > target; --p) {
      levels.push_back(p - 1);
      std::swap(s[p - 1], s[p]);
    }
  };
  // Park the requested columns at the bottom (largest deepest), then finish
  // sorting.  Every swap removes an inversion, so the word stays reduced and
  // has full length; the parked state realizes the chamber.
  for (int h = 1; h <= i; ++h) sink_to(J[i - h], h);
  for (int v = 1; v <= n; ++v) sink_to(v, v);
  return blue_word(n, levels);
}

namespace {

void enum_words(int n, std::vector<int>& s, std::vector<int>& acc,
                std::vector<DoubleWord>& out) {
  bool moved = false;
  for (int h = 1; h < n; ++h) {
    if (s[h - 1] <= s[h]) continue;
    moved = true;
    std::swap(s[h - 1], s[h]);
    acc.push_back(h);
    enum_words(n, s, acc, out);
    acc.pop_back();
    std::swap(s[h - 1], s[h]);
  }
  if (!moved) out.push_back(blue_word(n, acc));
}

}  // namespace

std::vector<DoubleWord> all_blue_w0_words(int n) {
  if (n < 2 || n > 5) throw OutOfRange("word enumeration supported for n in 2..5");
  std::vector<int> s(n);
  for (int h = 0; h < n; ++h) s[h] = n - h;
  std::vector<int> acc;
  std::vector<DoubleWord> out;
  enum_words(n, s, acc, out);
  return out;
}

DoubleWord random_blue_w0_word(int n, std::mt19937_64& rng) {
  if (n < 2) throw OutOfRange("need n >= 2");
  std::vector<int> s(n);
  for (int h = 0; h < n; ++h) s[h] = n - h;
  std::vector<int> levels;
  while (true) {
    std::vector<int> opts;
    for (int h = 1; h < n; ++h)
      if (s[h - 1] > s[h]) opts.push_back(h);
    if (opts.empty()) break;
    const int h = opts[rng() % opts.size()];
    std::swap(s[h - 1], s[h]);
    levels.push_back(h);
  }
  return blue_word(n, levels);
}

std::optional<DoubleWord> apply_2move(const DoubleWord& w, int pos) {
  if (pos < 0 || pos + 1 >= static_cast<int>(w.letters.size())) return std::nullopt;
  const Letter &a = w.letters[pos], &b = w.letters[pos + 1];
  if (std::abs(a.level - b.level) < 2) return std::nullopt;
  DoubleWord out = w;
  std::swap(out.letters[pos], out.letters[pos + 1]);
  return out;
}

std::optional<DoubleWord> apply_3move(const DoubleWord& w, int pos) {
  if (pos < 0 || pos + 2 >= static_cast<int>(w.letters.size())) return std::nullopt;
  const Letter &a = w.letters[pos], &b = w.letters[pos + 1], &c = w.letters[pos + 2];
  if (a.red != b.red || b.red != c.red) return std::nullopt;
  if (a.level != c.level || std::abs(a.level - b.level) != 1) return std::nullopt;
  DoubleWord out = w;
  out.letters[pos] = b;
  out.letters[pos + 1] = a;
  out.letters[pos + 2] = b;
  return out;
}

}  // namespace cc
