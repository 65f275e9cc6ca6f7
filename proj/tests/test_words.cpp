#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <vector>

#include "clustercones/matrices.hpp"
#include "clustercones/words.hpp"
#include "doctest.h"

namespace {

cc::Chamber ch(std::vector<int> I, std::vector<int> J) {
  return {std::move(I), std::move(J), false};
}

// Arrow set of a chamber quiver as index pairs looked up by identity.
bool has_arrow(const cc::ChamberQuiver& q, const cc::Chamber& from,
               const cc::Chamber& to) {
  int a = q.index_of(from), b = q.index_of(to);
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  return q.eps[a][b] == 1 && q.eps[b][a] == -1;
}

int arrow_count(const cc::ChamberQuiver& q) {
  int total = 0;
  for (const auto& row : q.eps)
    for (int e : row)
      if (e > 0) total += e;
  return total;
}

void check_skew(const cc::ChamberQuiver& q) {
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      REQUIRE(q.eps[a][b] == -q.eps[b][a]);
      if (q.frozen[a] && q.frozen[b]) REQUIRE(q.eps[a][b] == 0);
    }
}

void check_2move_pair(const cc::DoubleWord& w1, const cc::DoubleWord& w2) {
  auto q1 = cc::canonical_chamber_order(cc::bfz_quiver(w1));
  auto q2 = cc::canonical_chamber_order(cc::bfz_quiver(w2));
  CHECK(q1 == q2);
}

void check_3move_pair(const cc::DoubleWord& w1, const cc::DoubleWord& w2) {
  auto q1 = cc::bfz_quiver(w1);
  auto q2 = cc::bfz_quiver(w2);
  REQUIRE(q1.size() == q2.size());
  int old_idx = -1, lost = 0, gained = 0;
  cc::Chamber incoming;
  for (int a = 0; a < q1.size(); ++a)
    if (q2.index_of(q1.chambers[a]) < 0) {
      old_idx = a;
      ++lost;
    }
  for (int b = 0; b < q2.size(); ++b)
    if (q1.index_of(q2.chambers[b]) < 0) {
      incoming = q2.chambers[b];
      ++gained;
    }
  REQUIRE(lost == 1);
  REQUIRE(gained == 1);
  REQUIRE(!q1.frozen[old_idx]);
  auto mut = cc::mutate_chamber_quiver(q1, old_idx, incoming);
  CHECK(cc::canonical_chamber_order(mut) == cc::canonical_chamber_order(q2));
}

void check_all_moves(const cc::DoubleWord& w) {
  check_skew(cc::bfz_quiver(w));
  for (int p = 0; p < static_cast<int>(w.letters.size()); ++p) {
    if (auto w2 = cc::apply_2move(w, p)) check_2move_pair(w, *w2);
    if (auto w3 = cc::apply_3move(w, p)) check_3move_pair(w, *w3);
  }
}

}  // namespace

TEST_CASE("lexicographically minimal words") {
  CHECK(cc::lex_min_word(2) == cc::blue_word(2, {1}));
  CHECK(cc::lex_min_word(3) == cc::blue_word(3, {1, 2, 1}));
  CHECK(cc::lex_min_word(5) == cc::blue_word(5, {1, 2, 1, 3, 2, 1, 4, 3, 2, 1}));
  for (const auto& l : cc::lex_min_word(6).letters) CHECK(!l.red);
}

TEST_CASE("word parsing") {
  CHECK(cc::parse_word(3, "1,2,1") == cc::lex_min_word(3));
  CHECK(cc::parse_word(3, "B1 B2 B1") == cc::lex_min_word(3));
  auto mixed = cc::parse_word(3, "b1 r1 B2 B1");
  REQUIRE(mixed.letters.size() == 4);
  CHECK(!mixed.letters[0].red);
  CHECK(mixed.letters[1].red);
  CHECK(cc::to_string(mixed) == "B1 R1 B2 B1");
  CHECK(cc::parse_word(12, "B11").letters[0].level == 11);
  CHECK_THROWS_AS(cc::parse_word(3, "3"), cc::OutOfRange);
  CHECK_THROWS_AS(cc::parse_word(3, "B"), cc::Error);
  CHECK_THROWS_AS(cc::parse_word(3, "1,x"), cc::Error);
}

TEST_CASE("reducedness is a twice-crossing check per color") {
  CHECK_THROWS_AS(cc::build_arrangement(cc::blue_word(3, {1, 1})), cc::NotReduced);
  CHECK_THROWS_AS(cc::build_arrangement(cc::blue_word(3, {1, 2, 1, 2})),
                  cc::NotReduced);
  CHECK_THROWS_AS(cc::build_arrangement(cc::parse_word(3, "R1 B1 R1")),
                  cc::NotReduced);
  CHECK_NOTHROW(cc::build_arrangement(cc::parse_word(3, "B1 R1 B2 B1")));
  CHECK_THROWS_AS(cc::build_arrangement(cc::blue_word(4, {1, 2, 1, 3, 2, 1, 3})),
                  cc::NotReduced);
}

TEST_CASE("two-strand arrangement") {
  auto arr = cc::build_arrangement(cc::blue_word(2, {1}));
  REQUIRE(arr.bands.size() == 1);
  REQUIRE(arr.bands[0].size() == 2);
  CHECK(arr.bands[0][0] == cc::Chamber{{1}, {2}, true});
  CHECK(arr.bands[0][1] == cc::Chamber{{1}, {1}, true});
  // Both chambers are unbounded, so the one rule-1 arrow is dropped.
  CHECK(arrow_count(cc::bfz_quiver(cc::blue_word(2, {1}))) == 0);
}

TEST_CASE("chambers of the worked mixed word") {
  auto w = cc::parse_word(3, "B1 R1 B2 B1");
  auto arr = cc::build_arrangement(w);
  REQUIRE(arr.bands.size() == 2);
  REQUIRE(arr.bands[0].size() == 4);
  REQUIRE(arr.bands[1].size() == 2);
  CHECK(arr.bands[0][0] == cc::Chamber{{1}, {3}, true});
  CHECK(arr.bands[0][1] == cc::Chamber{{1}, {2}, false});
  CHECK(arr.bands[0][2] == cc::Chamber{{2}, {2}, false});
  CHECK(arr.bands[0][3] == cc::Chamber{{2}, {1}, true});
  CHECK(arr.bands[1][0] == cc::Chamber{{1, 2}, {2, 3}, true});
  CHECK(arr.bands[1][1] == cc::Chamber{{1, 2}, {1, 2}, true});
}

TEST_CASE("chamber quiver of the worked mixed word") {
  auto q = cc::bfz_quiver(cc::parse_word(3, "B1 R1 B2 B1"));
  check_skew(q);
  CHECK(arrow_count(q) == 5);
  CHECK(has_arrow(q, ch({1}, {3}), ch({1}, {2})));
  CHECK(has_arrow(q, ch({2}, {2}), ch({1}, {2})));
  CHECK(has_arrow(q, ch({2}, {2}), ch({2}, {1})));
  CHECK(has_arrow(q, ch({1}, {2}), ch({1, 2}, {2, 3})));
  CHECK(has_arrow(q, ch({1, 2}, {1, 2}), ch({2}, {2})));
}

TEST_CASE("mixed-word exchange relations are determinant identities") {
  // The two bounded chambers above exchange according to their arrows:
  // product over arrows out + product over arrows in.  Both identities are
  // classical minor relations, checked on a fully generic 3x3 matrix.
  auto m = cc::generic_matrix(3, 3);
  auto d = [&](std::vector<int> rows, std::vector<int> cols) {
    return cc::sym_minor(m, rows, cols);
  };
  CHECK(d({1}, {2}) * d({2}, {3}) == d({1, 2}, {2, 3}) + d({1}, {3}) * d({2}, {2}));
  CHECK(d({2}, {2}) * d({1}, {1}) == d({1}, {2}) * d({2}, {1}) + d({1, 2}, {1, 2}));
}

TEST_CASE("lex-min word chambers are the contiguous minors") {
  for (int n = 2; n <= 6; ++n) {
    auto arr = cc::build_arrangement(cc::lex_min_word(n));
    std::set<std::pair<std::vector<int>, std::vector<int>>> got, expect;
    int count = 0;
    for (const auto& band : arr.bands)
      for (const auto& c : band) {
        got.insert({c.I, c.J});
        ++count;
        CHECK(c.unbounded == (c.J.back() == n || c.J.front() == 1));
      }
    CHECK(count == n * (n + 1) / 2 - 1);
    CHECK(static_cast<int>(got.size()) == count);
    for (int i = 1; i < n; ++i)
      for (int j = i; j <= n; ++j) {
        std::vector<int> I, J;
        for (int t = 1; t <= i; ++t) I.push_back(t);
        for (int t = j - i + 1; t <= j; ++t) J.push_back(t);
        expect.insert({I, J});
      }
    CHECK(got == expect);
  }
}

TEST_CASE("chamber quiver of the lex-min word matches the triangular constructor") {
  for (int n = 2; n <= 6; ++n) {
    auto cq = cc::bfz_quiver(cc::lex_min_word(n));
    check_skew(cq);
    CHECK(cc::as_vertex_quiver(cq, n) == cc::build_Gew0_quiver(n, false));
  }
}

TEST_CASE("dropping identity chambers leaves the unipotent quiver") {
  for (int n = 3; n <= 6; ++n) {
    auto q = cc::as_vertex_quiver(cc::bfz_quiver(cc::lex_min_word(n)), n);
    std::vector<cc::VLabel> keep;
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) keep.push_back(cc::vl(i, j));
    CHECK(cc::induced_subquiver(q, keep) == cc::build_U_quiver(n));
  }
}

TEST_CASE("vertex labels require contiguous chambers") {
  // (2,1,2) has the bounded chamber with columns {1,3}.
  auto q = cc::bfz_quiver(cc::blue_word(3, {2, 1, 2}));
  CHECK(q.index_of(ch({1, 2}, {1, 3})) >= 0);
  CHECK_THROWS_AS(cc::as_vertex_quiver(q, 3), cc::Error);
}

TEST_CASE("braid moves act by chamber mutation") {
  auto words3 = cc::all_blue_w0_words(3);
  REQUIRE(words3.size() == 2);
  for (const auto& w : words3) check_all_moves(w);

  std::mt19937_64 rng(20260815);
  for (int n : {4, 5})
    for (int t = 0; t < 50; ++t) check_all_moves(cc::random_blue_w0_word(n, rng));
}

TEST_CASE("braid move primitives") {
  auto w = cc::blue_word(4, {1, 3, 2, 1, 3, 2});
  auto s = cc::apply_2move(w, 0);
  REQUIRE(s.has_value());
  CHECK(*s == cc::blue_word(4, {3, 1, 2, 1, 3, 2}));
  CHECK(!cc::apply_2move(w, 1).has_value());  // levels 3,2 are adjacent
  auto b = cc::apply_3move(cc::blue_word(3, {1, 2, 1}), 0);
  REQUIRE(b.has_value());
  CHECK(*b == cc::blue_word(3, {2, 1, 2}));
  CHECK(!cc::apply_3move(cc::parse_word(3, "B1 R2 B1"), 0).has_value());
  CHECK(!cc::apply_3move(cc::blue_word(4, {1, 3, 1}), 0).has_value());
}

TEST_CASE("word enumeration and sampling") {
  auto words4 = cc::all_blue_w0_words(4);
  CHECK(words4.size() == 16);
  std::set<std::vector<cc::Letter>> distinct;
  for (const auto& w : words4) {
    distinct.insert(w.letters);
    CHECK(w.letters.size() == 6);
    CHECK_NOTHROW(cc::build_arrangement(w));
  }
  CHECK(distinct.size() == 16);

  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      auto w = cc::random_blue_w0_word(n, rng);
      CHECK(static_cast<int>(w.letters.size()) == n * (n - 1) / 2);
      auto arr = cc::build_arrangement(w);
      CHECK(static_cast<int>(arr.all().size()) == n * (n + 1) / 2 - 1);
    }
}

TEST_CASE("word_for_minor realizes the requested chamber") {
  for (int n = 2; n <= 6; ++n)
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
      std::vector<int> J;
      for (int b = 0; b < n; ++b)
        if (mask & (1 << b)) J.push_back(b + 1);
      auto w = cc::word_for_minor(n, J);
      CHECK(static_cast<int>(w.letters.size()) == n * (n - 1) / 2);
      auto arr = cc::build_arrangement(w);
      std::vector<int> I;
      for (int t = 1; t <= static_cast<int>(J.size()); ++t) I.push_back(t);
      CHECK(arr.has_chamber(I, J));
    }

  CHECK(cc::word_for_minor(3, {3}) == cc::blue_word(3, {2, 1, 2}));
  CHECK(cc::word_for_minor(3, {1, 3}) == cc::blue_word(3, {2, 1, 2}));
  // {2,3} needs no detour: it is already a chamber of the lex-min word.
  CHECK(cc::build_arrangement(cc::lex_min_word(3)).has_chamber({1, 2}, {2, 3}));

  CHECK_THROWS_AS(cc::word_for_minor(3, {}), cc::InvalidIndexSet);
  CHECK_THROWS_AS(cc::word_for_minor(3, {1, 2, 3}), cc::InvalidIndexSet);
  CHECK_THROWS_AS(cc::word_for_minor(3, {0, 2}), cc::InvalidIndexSet);
  CHECK_THROWS_AS(cc::word_for_minor(3, {2, 2}), cc::InvalidIndexSet);
  CHECK_THROWS_AS(cc::word_for_minor(3, {4}), cc::InvalidIndexSet);
}
