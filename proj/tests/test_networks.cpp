#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <vector>

#include "clustercones/networks.hpp"
#include "doctest.h"

namespace {

cc::LaurentPoly T(int l) { return cc::LaurentPoly::variable(cc::var_t(l)); }
cc::LaurentPoly Tau(int j, int k) { return cc::LaurentPoly::variable(cc::var_tau(j, k)); }

// Oracle: explicit product of the elementary matrices the word spells out.
cc::PolyMatrix elementary_product(const cc::DoubleWord& w) {
  cc::PolyMatrix M = cc::poly_identity(w.n);
  for (size_t l = 0; l < w.letters.size(); ++l) {
    cc::PolyMatrix E = cc::poly_identity(w.n);
    E[w.letters[l].level - 1][w.letters[l].level] = T(static_cast<int>(l) + 1);
    M = cc::poly_mat_mul(M, E);
  }
  return M;
}

std::vector<int> range_set(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

// Column subsets of {1..n} of size k, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    std::vector<int> s;
    for (int v = 1; v <= n; ++v)
      if (mask & (1 << (v - 1))) s.push_back(v);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("network construction from reduced words") {
  auto net4 = cc::network_from_word(cc::lex_min_word(4));
  REQUIRE(net4.n == 4);
  REQUIRE(net4.slants.size() == 6);
  std::vector<int> levels;
  for (const auto& s : net4.slants) levels.push_back(s.level);
  CHECK(levels == std::vector<int>{1, 2, 1, 3, 2, 1});
  for (int l = 0; l < 6; ++l) {
    CHECK(net4.slants[l].position == l + 1);
    CHECK(net4.slants[l].weight == cc::var_t(l + 1));
  }

  auto net2 = cc::network_from_word(cc::lex_min_word(2));
  REQUIRE(net2.slants.size() == 1);
  CHECK(net2.slants[0].level == 1);
  CHECK(net2.slants[0].weight == cc::var_t(1));

  auto net3 = cc::network_from_word(cc::lex_min_word(3));
  REQUIRE(net3.slants.size() == 3);
  CHECK(net3.slants[0].level == 1);
  CHECK(net3.slants[1].level == 2);
  CHECK(net3.slants[2].level == 1);

  CHECK_THROWS_AS(cc::network_from_word(cc::parse_word(3, "1,2")), cc::NotReduced);
  CHECK_THROWS_AS(cc::network_from_word(cc::parse_word(3, "1,1,2")), cc::NotReduced);
  CHECK_THROWS_AS(cc::network_from_word(cc::parse_word(2, "B1 R1")), cc::NotReduced);
}

TEST_CASE("pinned path-weight minors on the n=4 network") {
  auto net = cc::network_from_word(cc::lex_min_word(4));

  CHECK(cc::minor_via_paths(net, {1}, {3}) == T(1) * T(2) + T(1) * T(5) + T(3) * T(5));
  CHECK(cc::minor_via_paths(net, {3}, {3}) == cc::LaurentPoly(cc::Int(1)));
  CHECK(cc::minor_via_paths(net, {4}, {3}).is_zero());

  // 2x2 minor against the explicit matrix product, symbolically and at a point.
  auto lhs = cc::minor_via_paths(net, {1, 2}, {3, 4});
  auto rhs = cc::sym_minor(elementary_product(cc::lex_min_word(4)), {1, 2}, {3, 4});
  CHECK(lhs == rhs);
  std::map<cc::VarId, cc::Rat> point;
  for (int l = 1; l <= 6; ++l) point[cc::var_t(l)] = cc::Rat(l + 1);
  CHECK(lhs.evaluate(point) == rhs.evaluate(point));

  // Path weights only ever multiply, so minors are honest polynomials.
  for (const auto& [v, e] : lhs.min_exponents()) {
    (void)v;
    CHECK(e >= 0);
  }

  CHECK_THROWS_AS(cc::minor_via_paths(net, {1}, {1, 2}), cc::SizeMismatch);
}

TEST_CASE("path matrix equals the product of elementary matrices") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& w : cc::all_blue_w0_words(n)) {
      auto M = cc::path_matrix(cc::network_from_word(w));
      auto P = elementary_product(w);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) CHECK(M[r][c] == P[r][c]);
    }
  }

  // All top-aligned minors for n = 4, on a non-lexicographic word too.
  for (const auto& w : {cc::lex_min_word(4), cc::parse_word(4, "3,2,3,1,2,3")}) {
    auto M = cc::path_matrix(cc::network_from_word(w));
    auto P = elementary_product(w);
    for (int k = 1; k <= 4; ++k)
      for (const auto& J : subsets_of_size(4, k))
        CHECK(cc::sym_minor(M, range_set(1, k), J) == cc::sym_minor(P, range_set(1, k), J));
  }
}

TEST_CASE("path matrix matches matrix product numerically for n=5") {
  std::mt19937_64 rng(20260815);
  std::vector<cc::DoubleWord> words{cc::lex_min_word(5)};
  for (int s = 0; s < 3; ++s) words.push_back(cc::random_blue_w0_word(5, rng));

  for (const auto& w : words) {
    auto M = cc::path_matrix(cc::network_from_word(w));
    auto P = elementary_product(w);
    std::map<cc::VarId, cc::Rat> point;
    for (size_t l = 1; l <= w.letters.size(); ++l)
      point[cc::var_t(static_cast<int>(l))] = cc::Rat(1 + static_cast<int>(rng() % 9));
    auto Mv = cc::evaluate_matrix(M, point);
    auto Pv = cc::evaluate_matrix(P, point);
    CHECK(Mv == Pv);
    CHECK(cc::num_minor(Mv, {1, 2, 3}, {2, 3, 5}) == cc::num_minor(Pv, {1, 2, 3}, {2, 3, 5}));
  }
}

TEST_CASE("occurrence-count relabeling of slant weights") {
  auto sub4 = cc::tau_relabel(cc::lex_min_word(4));
  REQUIRE(sub4.size() == 6);
  CHECK(sub4.at(cc::var_t(1)) == cc::var_tau(1, 4));
  CHECK(sub4.at(cc::var_t(2)) == cc::var_tau(1, 3));
  CHECK(sub4.at(cc::var_t(3)) == cc::var_tau(2, 4));
  CHECK(sub4.at(cc::var_t(4)) == cc::var_tau(1, 2));
  CHECK(sub4.at(cc::var_t(5)) == cc::var_tau(2, 3));
  CHECK(sub4.at(cc::var_t(6)) == cc::var_tau(3, 4));

  auto sub2 = cc::tau_relabel(cc::lex_min_word(2));
  REQUIRE(sub2.size() == 1);
  CHECK(sub2.at(cc::var_t(1)) == cc::var_tau(1, 2));

  auto sub3 = cc::tau_relabel(cc::lex_min_word(3));
  REQUIRE(sub3.size() == 3);
  CHECK(sub3.at(cc::var_t(1)) == cc::var_tau(1, 3));
  CHECK(sub3.at(cc::var_t(2)) == cc::var_tau(1, 2));
  CHECK(sub3.at(cc::var_t(3)) == cc::var_tau(2, 3));

  // On lexicographic words the relabeling is a bijection onto the tau grid.
  for (int n = 2; n <= 6; ++n) {
    auto sub = cc::tau_relabel(cc::lex_min_word(n));
    std::set<cc::VarId> image;
    for (const auto& [t, tau] : sub) {
      (void)t;
      image.insert(tau);
    }
    REQUIRE(static_cast<int>(image.size()) == n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int k = j + 1; k <= n; ++k) CHECK(image.count(cc::var_tau(j, k)) == 1);
  }

  CHECK_THROWS_AS(cc::tau_relabel(cc::parse_word(3, "1,2")), cc::NotReduced);
}

TEST_CASE("whitney factorization monomials") {
  auto m24 = cc::whitney_factorization(4, 2, 4);
  CHECK(cc::LaurentPoly::monomial(m24.coeff, m24.exps) ==
        Tau(1, 2) * Tau(1, 3) * Tau(2, 3) * Tau(2, 4));

  auto m12 = cc::whitney_factorization(4, 1, 2);
  CHECK(cc::LaurentPoly::monomial(m12.coeff, m12.exps) == Tau(1, 2));

  CHECK_THROWS_AS(cc::whitney_factorization(4, 0, 2), cc::InvalidIndices);
  CHECK_THROWS_AS(cc::whitney_factorization(4, 2, 2), cc::InvalidIndices);
  CHECK_THROWS_AS(cc::whitney_factorization(4, 2, 1), cc::InvalidIndices);
  CHECK_THROWS_AS(cc::whitney_factorization(4, 1, 5), cc::InvalidIndices);
}

TEST_CASE("reflected minors factor as whitney monomials") {
  for (int n = 2; n <= 5; ++n) {
    auto net = cc::network_from_word(cc::lex_min_word(n));
    auto M = cc::path_matrix(net);
    auto sub = cc::tau_relabel(cc::lex_min_word(n));
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        auto rows = range_set(n + 1 - j, n + i - j);
        auto cols = range_set(n + 1 - i, n);
        auto minor = cc::rename_vars(cc::sym_minor(M, rows, cols), sub);
        auto m = cc::whitney_factorization(n, i, j);
        CHECK(minor == cc::LaurentPoly::monomial(m.coeff, m.exps));
      }
    }
  }
}

TEST_CASE("factored coordinates invert triangularly") {
  std::mt19937_64 rng(4242);
  for (int n = 4; n <= 5; ++n) {
    auto word = cc::lex_min_word(n);
    auto M = cc::path_matrix(cc::network_from_word(word));
    auto sub = cc::tau_relabel(word);

    std::map<cc::VarId, cc::Rat> tau_point;
    for (int j = 1; j < n; ++j)
      for (int k = j + 1; k <= n; ++k)
        tau_point[cc::var_tau(j, k)] =
            cc::Rat(1 + static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 5));
    std::map<cc::VarId, cc::Rat> t_point;
    for (const auto& [t, tau] : sub) t_point[t] = tau_point.at(tau);

    // Walk the reflected minors in lexicographic (i,j) order, peeling off the
    // single new factor each one introduces.
    std::map<cc::VarId, cc::Rat> known;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        cc::Rat a = cc::sym_minor(M, range_set(n + 1 - j, n + i - j), range_set(n + 1 - i, n))
                        .evaluate(t_point);
        auto m = cc::whitney_factorization(n, i, j);
        cc::Rat rest(1);
        int unknowns = 0;
        for (const auto& [v, e] : m.exps) {
          if (known.count(v)) {
            for (int p = 0; p < e; ++p) rest *= known.at(v);
          } else {
            ++unknowns;
            CHECK(v == cc::var_tau(i, j));
            CHECK(e == 1);
          }
        }
        REQUIRE(unknowns == 1);
        known[cc::var_tau(i, j)] = a / rest;
        CHECK(known.at(cc::var_tau(i, j)) == tau_point.at(cc::var_tau(i, j)));
      }
    }
    CHECK(known.size() == tau_point.size());
  }
}

TEST_CASE("svg rendering smoke") {
  auto net = cc::network_from_word(cc::lex_min_word(3));
  auto svg = cc::network_svg(net);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  size_t lines = 0;
  for (size_t at = svg.find("<line"); at != std::string::npos; at = svg.find("<line", at + 1))
    ++lines;
  CHECK(lines == 3 + 3);  // three strands plus three slants
  CHECK(svg.find("stroke='red'") == std::string::npos);
  CHECK(cc::network_svg(net, {2}).find("stroke='red'") != std::string::npos);
}
