#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "itrails/trails.hpp"

using namespace itrails;

namespace {

// unpruned oracle: try every exponent vector with the right weight drop and test the
// divided-power product matrix on V(delta) directly
std::vector<IntVec> brute_force_cvectors(const FundModule& m, const Weight& gamma,
                                         const Weight& delta, const Word& word) {
  const CartanData& c = m.cartan;
  int l = static_cast<int>(word.size());
  std::vector<IntVec> out;
  IntVec cs(l, 0);
  auto max_pow = [&](int i) { return static_cast<int>(m.e_pow[i - 1].size()) - 1; };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == l) {
      Weight acc = delta;
      for (int t = 0; t < l; ++t)
        for (int j = 0; j < c.rank; ++j) acc[j] += cs[t] * c.entry(j + 1, word[t]);
      if (acc != gamma) return;
      // product e_{i_1}^{(c_1)} ... e_{i_l}^{(c_l)} restricted to V(delta)
      auto [b, e] = m.space(delta);
      RatMat img(m.dim, e - b);
      for (int t = b; t < e; ++t) img.at(t, t - b) = 1;
      for (int t = l - 1; t >= 0; --t) {
        RatMat next(m.dim, img.cols);
        const SparseMat& dp = m.e_divided(word[t], static_cast<int>(cs[t]));
        for (int col = 0; col < img.cols; ++col) {
          std::vector<Rat> x(m.dim);
          for (int r = 0; r < m.dim; ++r) x[r] = img.at(r, col);
          auto y = dp.apply(x);
          for (int r = 0; r < m.dim; ++r) next.at(r, col) = y[r];
        }
        img = next;
      }
      if (!img.is_zero()) out.push_back(cs);
      return;
    }
    for (int v = 0; v <= max_pow(word[k]); ++v) {
      cs[k] = v;
      self(self, k + 1);
    }
    cs[k] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> cvectors(const std::vector<Trail>& trails) {
  std::vector<IntVec> out;
  for (const auto& t : trails) out.push_back(t.c);
  return out;
}

}  // namespace

TEST_CASE("A2 worked trail examples") {
  auto a2 = cartan("A2");
  auto m = build_module(a2, 1);
  Weight om = {1, 0};
  Weight s1om = reflect(a2, om, 1);
  Weight low = weyl_apply(longest_element(a2), om);

  auto ts = enumerate_trails(m, s1om, low, {1, 2, 1});
  REQUIRE(ts.size() == 1);
  CHECK(ts[0].c == IntVec{0, 1, 0});
  CHECK(ts[0].d == IntVec{-1, 0, 0});

  auto two = enumerate_trails(m, om, s1om, {1, 2, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].c == IntVec{0, 0, 1});
  CHECK(two[1].c == IntVec{1, 0, 0});

  auto empty_word = enumerate_trails(m, om, om, {});
  REQUIRE(empty_word.size() == 1);
  CHECK(empty_word[0].weights == std::vector<Weight>{om});

  CHECK(enumerate_trails(m, om, om, {1}).size() == 1);  // constant trail, c = 0
  CHECK(enumerate_trails(m, low, om, {1, 2, 1}).empty());
}

TEST_CASE("pruned enumeration equals brute force on A2 and B2") {
  for (auto name : {"A2", "B2"}) {
    auto c = cartan(name);
    std::vector<Word> words = reduced_words(c, longest_element(c));
    words.push_back({1, 2});
    words.push_back({2, 1, 1, 2});
    for (int fi = 1; fi <= 2; ++fi) {
      auto m = build_module(c, fi);
      std::vector<Weight> wts;
      for (const auto& [w, rng] : m.spaces) wts.push_back(w);
      for (const auto& gamma : wts)
        for (const auto& delta : wts)
          for (const auto& word : words) {
            auto fast = cvectors(enumerate_trails(m, gamma, delta, word));
            auto slow = brute_force_cvectors(m, gamma, delta, word);
            CHECK(fast == slow);
          }
    }
  }
}

TEST_CASE("e-form and f-form conditions agree") {
  for (auto name : {"A2", "B2", "G2"}) {
    auto c = cartan(name);
    auto words = reduced_words(c, longest_element(c));
    auto m = build_module(c, 1);
    std::vector<Weight> wts;
    for (const auto& [w, rng] : m.spaces) wts.push_back(w);
    for (const auto& gamma : wts)
      for (const auto& delta : wts) {
        auto e = cvectors(enumerate_trails(m, gamma, delta, words.front()));
        auto f = cvectors(enumerate_trails(m, gamma, delta, words.front(), TrailCondition::FImage));
        CHECK(e == f);
      }
  }
}

TEST_CASE("trail identities") {
  auto b2 = cartan("B2");
  auto m = build_module(b2, 1);
  Weight om = {1, 0};
  Weight low = weyl_apply(longest_element(b2), om);
  for (const auto& word : reduced_words(b2, longest_element(b2)))
    for (const auto& t : enumerate_trails(m, om, low, word)) {
      // sum c_k alpha_{i_k} = gamma - delta
      Weight acc = t.weights.back();
      for (size_t k = 0; k < word.size(); ++k)
        acc = weight_add(acc, [&] {
          Weight s = simple_root_weight(b2, word[k]);
          for (auto& x : s) x *= t.c[k];
          return s;
        }());
      CHECK(acc == t.weights.front());
      // d_k = gamma_k(alpha^vee) + c_k = gamma_{k-1}(alpha^vee) - c_k
      for (size_t k = 0; k < word.size(); ++k) {
        CHECK(t.d[k] == t.weights[k + 1][word[k] - 1] + t.c[k]);
        CHECK(t.d[k] == t.weights[k][word[k] - 1] - t.c[k]);
      }
      // monotone in dominance order
      for (size_t k = 0; k + 1 < t.weights.size(); ++k)
        CHECK(dominance_geq(b2, t.weights[k], t.weights[k + 1]));
    }
}

TEST_CASE("extremal trails") {
  // minuscule: extremal set equals the full set
  auto a3 = cartan("A3");
  auto m1 = build_module(a3, 1);
  auto words = reduced_words(a3, longest_element(a3));
  std::vector<Weight> orbit;
  for (const auto& [w, rng] : m1.spaces) orbit.push_back(w);
  for (const auto& gamma : orbit)
    for (const auto& delta : orbit)
      for (size_t wi = 0; wi < words.size(); wi += 5) {
        auto ext = extremal_trails(m1, gamma, delta, words[wi]);
        auto all = enumerate_trails(m1, gamma, delta, words[wi]);
        REQUIRE(ext.size() == all.size());
        for (size_t t = 0; t < ext.size(); ++t) CHECK(ext[t].weights == all[t].weights);
      }

  // u = v: single constant trail
  auto a2 = cartan("A2");
  auto m = build_module(a2, 1);
  auto one = extremal_trails(m, {1, 0}, {1, 0}, {1, 2, 1});
  REQUIRE(one.size() == 1);
  for (const auto& w : one[0].weights) CHECK(w == Weight{1, 0});

  // A2, omega_1 -> s_1 omega_1 along (1,2,1): subwords at positions 1 and 3
  auto two = extremal_trails(m, {1, 0}, reflect(a2, {1, 0}, 1), {1, 2, 1});
  REQUIRE(two.size() == 2);
  CHECK(two[0].c == IntVec{0, 0, 1});
  CHECK(two[1].c == IntVec{1, 0, 0});

  // extremal trails are always a subset, non-minuscule case
  auto b2 = cartan("B2");
  auto mv = build_module(b2, 1);  // 5-dim vector module, zero weight not extremal
  Weight om = {1, 0};
  Weight low = weyl_apply(longest_element(b2), om);
  for (const auto& word : reduced_words(b2, longest_element(b2))) {
    auto ext = cvectors(extremal_trails(mv, om, low, word));
    auto all = cvectors(enumerate_trails(mv, om, low, word));
    for (const auto& cv : ext) CHECK(std::count(all.begin(), all.end(), cv) == 1);
  }
}

TEST_CASE("trail bounds") {
  auto a2 = cartan("A2");
  auto m = build_module(a2, 1);
  Weight om = {1, 0};
  Weight low = weyl_apply(longest_element(a2), om);

  // empty word
  auto [lo0, hi0] = trail_bounds(m, om, low, {});
  CHECK(lo0 == std::vector<Weight>{om});
  CHECK(hi0 == std::vector<Weight>{low});

  // monotone chain: bounds collapse and the unique trail has d = 0
  auto [lo, hi] = trail_bounds(m, om, low, {1, 2, 1});
  CHECK(lo == hi);
  auto unique_t = enumerate_trails(m, om, low, {1, 2, 1});
  REQUIRE(unique_t.size() == 1);
  CHECK(unique_t[0].c == IntVec{1, 1, 0});  // bounds pin c_2 = 1
  CHECK(unique_t[0].d == IntVec{0, 0, 0});
  // c_k = gamma(s_{i_1}...s_{i_{k-1}} alpha_{i_k}^vee)
  Word word = {1, 2, 1};
  WeylElement pre = weyl_identity(a2);
  for (size_t k = 0; k < word.size(); ++k) {
    Weight moved = weyl_apply(weyl_inverse(a2, pre), om);
    CHECK(unique_t[0].c[k] == moved[word[k] - 1]);
    pre = weyl_mul(pre, weyl_simple(a2, word[k]));
  }

  // every enumerated trail lies within the bounds
  for (auto name : {"B2", "G2"}) {
    auto c = cartan(name);
    auto mm = build_module(c, 1);
    Weight top = fundamental_weight(c, 1);
    Weight bot = weyl_apply(longest_element(c), top);
    for (const auto& w : reduced_words(c, longest_element(c))) {
      auto [l, h] = trail_bounds(mm, top, bot, w);
      for (const auto& t : enumerate_trails(mm, top, bot, w))
        for (size_t k = 0; k < t.weights.size(); ++k) {
          CHECK(dominance_geq(c, t.weights[k], l[k]));
          CHECK(dominance_geq(c, h[k], t.weights[k]));
        }
    }
  }
}

TEST_CASE("splitting indices") {
  // decreasing chain with a simple-root gap: k returned by construction
  auto a2 = cartan("A2");
  auto m8 = build_simple_module(a2, {1, 1});  // adjoint, contains alpha_1 as a weight
  Weight th = {1, 1};
  // gamma = theta, delta = s_1 theta = theta - alpha... chain of length 1 at position 0:
  // delta + alpha_2 = ... choose word (2), gamma = s_2-стартовое... use direct case:
  Weight g = th;
  Weight d = reflect(a2, th, 2);
  auto idx = splitting_indices(m8, g, d, {2});
  // difference gamma_suffix - gamma_prefix at k=0: s_2 delta - gamma = 0: not simple;
  // at k=1: delta vs s_2... validated against the independent recheck below instead
  auto recheck = [&](const FundModule& mod, const Weight& gamma, const Weight& delta,
                     const Word& word) {
    const auto& c = mod.cartan;
    std::vector<int> out;
    int l = static_cast<int>(word.size());
    for (int k = 0; k <= l; ++k) {
      bool ok = true;
      Weight cur = gamma;
      for (int j = 1; j <= k; ++j) {
        if (cur[word[j - 1] - 1] < 0) ok = false;
        cur = reflect(c, cur, word[j - 1]);
      }
      Weight tail = delta;
      for (int j = l; j > k; --j) {
        if (tail[word[j - 1] - 1] > 0) ok = false;
        tail = reflect(c, tail, word[j - 1]);
      }
      if (!ok) continue;
      Weight diff = weight_sub(tail, cur);
      bool simple = false;
      for (int i = 1; i <= c.rank; ++i)
        if (diff == simple_root_weight(c, i)) simple = true;
      if (simple) out.push_back(k);
    }
    return out;
  };
  CHECK(idx == recheck(m8, g, d, {2}));

  // flag concatenation A2 in A3: k = l(w_o(I1)) is splitting for i in I1
  auto a3 = cartan("A3");
  auto dual = langlands_dual(a3);
  Word w1 = canonical_reduced_word(a3, longest_element_parabolic(a3, {1, 2}));
  Word full = canonical_reduced_word(a3, longest_element(a3));
  // a word of w_o extending w1: w1 concatenated with a word of w_o(I1)^{-1} w_o
  WeylElement rest = weyl_mul(weyl_inverse(a3, longest_element_parabolic(a3, {1, 2})),
                              longest_element(a3));
  Word w2 = canonical_reduced_word(a3, rest);
  Word concat = w1;
  concat.insert(concat.end(), w2.begin(), w2.end());
  REQUIRE(is_reduced_word(a3, concat));
  for (int i : {1, 2}) {
    auto mod = build_module(dual, i);
    Weight gamma = fundamental_weight(dual, i);
    Weight delta = weyl_apply(weyl_from_word(dual, concat), reflect(dual, gamma, i));
    // delta = w_o s_i omega_i^vee
    auto ks = splitting_indices(mod, gamma, delta, concat);
    CHECK(std::count(ks.begin(), ks.end(), static_cast<int>(w1.size())) == 1);
    CHECK(ks == recheck(mod, gamma, delta, concat));
  }

  // A2 (1,2,1) omega_1 -> w_o omega_1: filter finds no splitting index
  auto m = build_module(a2, 1);
  Weight om = {1, 0};
  Weight low = weyl_apply(longest_element(a2), om);
  auto none = splitting_indices(m, om, low, {1, 2, 1});
  CHECK(none == recheck(m, om, low, {1, 2, 1}));
  CHECK(none.empty());
}

TEST_CASE("cached trails") {
  auto a2 = cartan("A2");
  auto m = build_module(a2, 1);
  const auto& t1 = cached_trails(m, {1, 0}, {0, -1}, {1, 2, 1});
  const auto& t2 = cached_trails(m, {1, 0}, {0, -1}, {1, 2, 1});
  CHECK(&t1 == &t2);
  CHECK(t1.size() == 1);
}
