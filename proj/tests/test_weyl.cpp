#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "itrails/weyl.hpp"

using namespace itrails;

namespace {

// independent oracle: braid-move closure from a single reduced word
std::set<Word> braid_closure(const CartanData& c, const Word& start) {
  std::set<Word> seen{start};
  std::vector<Word> stack{start};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    int l = static_cast<int>(cur.size());
    for (int pos = 0; pos + 1 < l; ++pos) {
      int x = cur[pos], y = cur[pos + 1];
      if (x == y) continue;
      int d = braid_order(c, x, y);
      if (pos + d > l) continue;
      bool ok = true;
      for (int k = 0; k < d; ++k)
        if (cur[pos + k] != ((k % 2 == 0) ? x : y)) ok = false;
      if (!ok) continue;
      Word nxt(cur);
      for (int k = 0; k < d; ++k) nxt[pos + k] = (k % 2 == 0) ? y : x;
      if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("lengths and longest elements") {
  CHECK(weyl_length(cartan("A2"), longest_element(cartan("A2"))) == 3);
  CHECK(weyl_length(cartan("B2"), longest_element(cartan("B2"))) == 4);
  CHECK(weyl_length(cartan("G2"), longest_element(cartan("G2"))) == 6);
  CHECK(weyl_length(cartan("A3"), longest_element(cartan("A3"))) == 6);
  CHECK(weyl_length(cartan("B3"), longest_element(cartan("B3"))) == 9);
  CHECK(weyl_length(cartan("D4"), longest_element(cartan("D4"))) == 12);
}

TEST_CASE("group orders") {
  CHECK(weyl_group_elements(cartan("A2")).size() == 6);
  CHECK(weyl_group_elements(cartan("B2")).size() == 8);
  CHECK(weyl_group_elements(cartan("G2")).size() == 12);
  CHECK(weyl_group_elements(cartan("A3")).size() == 24);
  CHECK(weyl_group_elements(cartan("D4")).size() == 192);
}

TEST_CASE("reduced word sets") {
  auto a2 = cartan("A2");
  auto words = reduced_words(a2, longest_element(a2));
  CHECK(words == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});

  auto a1 = cartan("A1");
  CHECK(reduced_words(a1, longest_element(a1)) == std::vector<Word>{{1}});

  // closure oracle counts
  for (auto name : {"A2", "B2", "A3", "G2"}) {
    auto c = cartan(name);
    auto wo = longest_element(c);
    auto words_c = reduced_words(c, wo);
    auto closure = braid_closure(c, words_c.front());
    CHECK(words_c.size() == closure.size());
    for (const auto& w : words_c) CHECK(closure.count(w) == 1);
  }
  CHECK(reduced_words(cartan("A3"), longest_element(cartan("A3"))).size() == 16);
  CHECK(reduced_words(cartan("G2"), longest_element(cartan("G2"))).size() == 2);
  CHECK(reduced_words(cartan("B2"), longest_element(cartan("B2"))).size() == 2);
}

TEST_CASE("canonical reduced word is lex-min and reduced") {
  for (auto name : {"A3", "B3"}) {
    auto c = cartan(name);
    auto wo = longest_element(c);
    Word cw = canonical_reduced_word(c, wo);
    CHECK(is_reduced_word(c, cw));
    CHECK(weyl_from_word(c, cw) == wo);
    auto all = reduced_words(c, wo);
    CHECK(cw == all.front());
  }
}

TEST_CASE("tits paths") {
  auto a2 = cartan("A2");
  auto path = tits_path(a2, {1, 2, 1}, {2, 1, 2});
  REQUIRE(path.size() == 1);
  CHECK(path[0].pos == 0);
  CHECK(path[0].d == 3);

  CHECK(tits_path(a2, {1, 2, 1}, {1, 2, 1}).empty());

  auto b2 = cartan("B2");
  auto p4 = tits_path(b2, {1, 2, 1, 2}, {2, 1, 2, 1});
  REQUIRE(p4.size() == 1);
  CHECK(p4[0].d == 4);

  CHECK_THROWS_AS(tits_path(a2, {1, 2, 1}, {2, 1, 1}), InputError);
  CHECK_THROWS_AS(tits_path(a2, {1, 2}, {2, 1}), InputError);

  // replay check, exhaustive for small ranks
  for (auto name : {"A2", "B2", "A3", "G2"}) {
    auto c = cartan(name);
    auto words = reduced_words(c, longest_element(c));
    for (const auto& from : words)
      for (const auto& to : words) {
        Word cur = from;
        for (const auto& mv : tits_path(c, from, to)) cur = apply_move(c, cur, mv);
        CHECK(cur == to);
      }
  }
  // D4 samples
  auto d4 = cartan("D4");
  auto wo = longest_element(d4);
  auto words = reduced_words(d4, wo);
  REQUIRE(words.size() > 100);
  for (size_t k = 0; k < words.size(); k += words.size() / 7) {
    Word cur = words.front();
    for (const auto& mv : tits_path(d4, words.front(), words[k])) cur = apply_move(d4, cur, mv);
    CHECK(cur == words[k]);
  }
}

TEST_CASE("star involution") {
  auto a2 = cartan("A2");
  CHECK(star(a2, 1) == 2);
  CHECK(star(a2, 2) == 1);
  auto b2 = cartan("B2");
  CHECK(star(b2, 1) == 1);
  CHECK(star(b2, 2) == 2);
  for (auto name : {"A3", "B3", "D4", "G2"}) {
    auto c = cartan(name);
    for (int i = 1; i <= c.rank; ++i) CHECK(star(c, star(c, i)) == i);
  }
  // (i*)^op and reversal preserve R(w_o)
  for (auto name : {"A2", "A3", "B2"}) {
    auto c = cartan(name);
    auto wo = longest_element(c);
    auto words = reduced_words(c, wo);
    std::set<Word> set(words.begin(), words.end());
    for (const auto& w : words) {
      CHECK(set.count(word_star(c, w)) == 1);
      CHECK(set.count(word_reverse(w)) == 1);
    }
  }
  // A2: (1,2,1)* = (2,1,2), a palindrome, so ((1,2,1)*)^op = (2,1,2)
  CHECK(word_star(a2, {1, 2, 1}) == Word{2, 1, 2});
  CHECK(word_reverse(word_star(a2, {1, 2, 1})) == Word{2, 1, 2});
}

TEST_CASE("full commutativity and minuscule coset reps") {
  auto a2 = cartan("A2");
  CHECK(!is_fully_commutative(a2, longest_element(a2)));
  CHECK(is_fully_commutative(a2, weyl_simple(a2, 1)));
  CHECK(is_fully_commutative(a2, weyl_from_word(a2, {1, 2})));

  auto a3 = cartan("A3");
  CHECK(minuscule_coset_rep(a3, 2) == weyl_from_word(a3, {2, 1, 3}));
  CHECK(weyl_from_word(a3, {2, 1, 3}) == weyl_from_word(a3, {2, 3, 1}));
  CHECK(minuscule_coset_rep(a3, 1) == weyl_from_word(a3, {1, 2}));
  CHECK(minuscule_coset_rep(a3, 3) == weyl_from_word(a3, {3, 2}));
}

TEST_CASE("parabolic longest elements") {
  auto a3 = cartan("A3");
  auto w12 = longest_element_parabolic(a3, {1, 2});
  CHECK(weyl_length(a3, w12) == 3);
  CHECK(w12 == weyl_from_word(a3, {1, 2, 1}));
  auto we = longest_element_parabolic(a3, {});
  CHECK(we == weyl_identity(a3));
}

TEST_CASE("orbit witness and minimal coset reps") {
  auto b2 = cartan("B2");
  Weight om1 = fundamental_weight(b2, 1);
  auto wo = longest_element(b2);
  Weight low = weyl_apply(wo, om1);
  auto u = orbit_witness(b2, om1, low);
  REQUIRE(u.has_value());
  CHECK(weyl_apply(*u, om1) == low);
  CHECK(!orbit_witness(b2, om1, fundamental_weight(b2, 2)).has_value());
  // minimal rep length equals orbit distance
  auto a3 = cartan("A3");
  Weight om2 = fundamental_weight(a3, 2);
  auto v = orbit_witness(a3, om2, weyl_apply(longest_element(a3), om2));
  REQUIRE(v.has_value());
  CHECK(weyl_length(a3, *v) == 4);  // w_o omega_2 at depth 4 in the 6-element orbit

  // witness maps the dominant weight to gamma, over whole orbits
  for (auto name : {"A2", "B2", "A3", "G2"}) {
    auto c = cartan(name);
    for (int i = 1; i <= c.rank; ++i) {
      Weight om = fundamental_weight(c, i);
      for (const auto& w : weyl_group_elements(c)) {
        Weight gamma = weyl_apply(w, om);
        auto u = orbit_witness(c, om, gamma);
        REQUIRE(u.has_value());
        CHECK(weyl_apply(*u, om) == gamma);
      }
    }
  }
}

TEST_CASE("inverse and word element identities") {
  for (auto name : {"A3", "B3"}) {
    auto c = cartan(name);
    auto words = std::vector<Word>{{1, 2}, {2, 1, 3}, {1, 2, 3, 2}};
    for (const auto& w : words) {
      auto el = weyl_from_word(c, w);
      CHECK(weyl_mul(el, weyl_inverse(c, el)) == weyl_identity(c));
    }
  }
}
