#include "clustercones/networks.hpp"

#include <algorithm>
#include <sstream>

namespace cc {

namespace {

void require_blue_w0(const DoubleWord& w) {
  for (const auto& l : w.letters)
    if (l.red) throw NotReduced("network words use upper-triangular generators only");
  build_arrangement(w);  // validates reducedness
  if (static_cast<int>(w.letters.size()) != w.n * (w.n - 1) / 2)
    throw NotReduced("word does not reach the longest permutation");
}

}  // namespace

PlanarNetwork network_from_word(const DoubleWord& w) {
  require_blue_w0(w);
  PlanarNetwork net{w.n, {}};
  for (size_t l = 0; l < w.letters.size(); ++l) {
    int pos = static_cast<int>(l) + 1;
    net.slants.push_back({pos, w.letters[l].level, var_t(pos)});
  }
  return net;
}

PolyMatrix path_matrix(const PlanarNetwork& net) {
  const int n = net.n;
  PolyMatrix M(n, std::vector<LaurentPoly>(n));
  for (int a = 0; a < n; ++a) {
    // v[h] accumulates the weight of all partial paths from source a+1 that
    // sit at height h+1 after the slants processed so far.
    std::vector<LaurentPoly> v(n);
    v[a] = LaurentPoly(Int(1));
    for (const auto& s : net.slants)
      v[s.level] = v[s.level] + v[s.level - 1] * LaurentPoly::variable(s.weight);
    M[a] = std::move(v);
  }
  return M;
}

LaurentPoly minor_via_paths(const PlanarNetwork& net, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  return sym_minor(path_matrix(net), rows, cols);
}

std::map<VarId, VarId> tau_relabel(const DoubleWord& w) {
  require_blue_w0(w);
  std::map<int, int> occurrences;
  std::map<VarId, VarId> sub;
  for (size_t l = 0; l < w.letters.size(); ++l) {
    int lvl = w.letters[l].level;
    int j = ++occurrences[lvl];
    sub[var_t(static_cast<int>(l) + 1)] = var_tau(j, w.n + 1 - lvl);
  }
  return sub;
}

Monomial whitney_factorization(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n))
    throw InvalidIndices("whitney factorization needs 1 <= i < j <= n");
  ExpVec exps;
  for (int k = 1; k <= i; ++k)
    for (int l = k + 1; l <= k + j - i; ++l)
      exps.emplace_back(var_tau(k, l), 1);
  std::sort(exps.begin(), exps.end());
  return Monomial{Int(1), std::move(exps)};
}

std::string network_svg(const PlanarNetwork& net, const std::vector<int>& highlight) {
  const int m = static_cast<int>(net.slants.size());
  const int width = 60 * (m + 2);
  const int height = 50 * (net.n + 1);
  auto y = [&](int h) { return height - 50 * h; };
  std::ostringstream out;
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='"
      << height << "'>\n";
  for (int h = 1; h <= net.n; ++h) {
    out << "  <line x1='20' y1='" << y(h) << "' x2='" << width - 20 << "' y2='" << y(h)
        << "' stroke='black'/>\n";
    out << "  <text x='4' y='" << y(h) + 4 << "' font-size='12'>" << h << "</text>\n";
  }
  for (const auto& s : net.slants) {
    bool hot = std::find(highlight.begin(), highlight.end(), s.position) != highlight.end();
    int x = 40 + 60 * s.position;
    out << "  <line x1='" << x << "' y1='" << y(s.level) << "' x2='" << x + 40 << "' y2='"
        << y(s.level + 1) << "' stroke='" << (hot ? "red" : "blue") << "' stroke-width='"
        << (hot ? 3 : 1) << "'/>\n";
    out << "  <text x='" << x + 6 << "' y='" << (y(s.level) + y(s.level + 1)) / 2
        << "' font-size='11'>" << to_string(s.weight) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cc
