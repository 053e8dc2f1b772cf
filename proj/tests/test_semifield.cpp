#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "itrails/semifield.hpp"
#include "test_util.hpp"

using namespace itrails;

namespace {

using testutil::valuation;

std::vector<SFValue> prime_powers(const IntVec& t, Int q) {
  std::vector<SFValue> out;
  for (Int e : t) out.push_back(SFValue::rational(testutil::prime_power(e, q)));
  return out;
}

const std::vector<std::pair<int, int>> kRank2Cases = {{0, 0}, {-1, -1}, {-2, -1}, {-1, -2},
                                                      {-3, -1}, {-1, -3}};

}  // namespace

TEST_CASE("semifield values and evaluation") {
  SFBuilder b;
  SFExpr sum = b.expr(b.add(b.var(1), b.var(3)));
  auto r = sf_eval(sum, sf_rational_vec({Rat(1, 2), Rat(1), Rat(3)}),
                   SemifieldTag::PositiveRational);
  CHECK(r.rat == Rat(7, 2));
  auto tr = sf_eval(sum, sf_tropical_vec({2, 0, 5}), SemifieldTag::Tropical);
  CHECK(tr == SFValue::tropical(2));

  // t2 t3 / (t1 + t3) tropically at (1,0,2) -> 1
  SFExpr q = sf_parse("t2 * t3 / (t1 + t3)");
  CHECK(sf_eval(q, sf_tropical_vec({1, 0, 2}), SemifieldTag::Tropical) == SFValue::tropical(1));

  // constants tropicalize to 0
  SFExpr c = sf_parse("3");
  CHECK(sf_eval(c, {}, SemifieldTag::Tropical) == SFValue::tropical(0));
  CHECK(sf_eval(c, {}, SemifieldTag::PositiveRational).rat == 3);

  CHECK_THROWS_AS(sf_eval(sum, sf_tropical_vec({1}), SemifieldTag::Tropical), InputError);
  CHECK_THROWS_AS(SFValue::rational(Rat(0)), InputError);
  CHECK_THROWS_AS(SFValue::rational(Rat(-1)), InputError);
}

TEST_CASE("tropical infinity") {
  auto inf = SFValue::tropical_infinity();
  auto five = SFValue::tropical(5);
  CHECK(sf_add(inf, five) == five);
  CHECK(sf_add(inf, inf) == inf);
  CHECK(sf_mul(inf, five) == inf);
  CHECK(sf_div(inf, five) == inf);
  CHECK_THROWS_AS(sf_div(five, inf), ComputeError);
}

TEST_CASE("tropical overflow is an error") {
  Int big = std::numeric_limits<Int>::max() - 1;
  CHECK_THROWS_AS(sf_mul(SFValue::tropical(big), SFValue::tropical(big)), ComputeError);
}

TEST_CASE("expression printing and parsing") {
  for (auto text : {"t1 + t3", "t2 * t3 / (t1 + t3)", "(t1 + 2 * t2) / (t3 * t3 + 1)"}) {
    SFExpr e = sf_parse(text);
    SFExpr back = sf_parse(sf_print(e));
    // semantic round trip on sample points
    for (IntVec t : {IntVec{0, 1, 2}, IntVec{3, -1, 0}, IntVec{-2, 2, 1}}) {
      auto a = sf_eval(e, sf_tropical_vec(t), SemifieldTag::Tropical);
      auto b2 = sf_eval(back, sf_tropical_vec(t), SemifieldTag::Tropical);
      CHECK(a == b2);
    }
  }
  CHECK_THROWS_AS(sf_parse("t1 +"), InputError);
  CHECK_THROWS_AS(sf_parse("t1 ) t2"), InputError);
}

TEST_CASE("rank-2 transition worked examples") {
  // A1 x A1, any sign: swap
  for (auto sign : {MoveSign::Positive, MoveSign::Negative}) {
    auto out = rank2_transition(0, 0, sign, sf_tropical_vec({4, 9}));
    CHECK(out[0] == SFValue::tropical(9));
    CHECK(out[1] == SFValue::tropical(4));
  }
  auto mixed = rank2_transition(0, 0, MoveSign::Mixed,
                                sf_rational_vec({Rat(4), Rat(9)}));
  CHECK(mixed[0].rat == 9);
  CHECK(mixed[1].rat == 4);

  // A2 positive at (1,1,1): (1/2, 2, 1/2)
  auto p = rank2_transition(-1, -1, MoveSign::Positive, sf_rational_vec({Rat(1), Rat(1), Rat(1)}));
  CHECK(p[0].rat == Rat(1, 2));
  CHECK(p[1].rat == 2);
  CHECK(p[2].rat == Rat(1, 2));

  // A2 negative at (1,1,1): p1 = 1/2, p2 = 1, p3 = 2
  auto n = rank2_transition(-1, -1, MoveSign::Negative, sf_rational_vec({Rat(1), Rat(1), Rat(1)}));
  CHECK(n[0].rat == Rat(1, 2));
  CHECK(n[1].rat == 1);
  CHECK(n[2].rat == 2);
}

TEST_CASE("involutivity of rank-2 moves") {
  std::mt19937_64 rng(12345);
  auto rand_rat = [&]() { return testutil::random_positive_rat(rng); };
  for (auto [aij, aji] : kRank2Cases) {
    int d = aij * aji == 0 ? 2 : aij * aji == 1 ? 3 : aij * aji == 2 ? 4 : 6;
    for (auto sign : {MoveSign::Positive, MoveSign::Negative}) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rat> in;
        for (int k = 0; k < d; ++k) in.push_back(rand_rat());
        auto mid = rank2_transition(aij, aji, sign, sf_rational_vec(in));
        auto back = rank2_transition(aji, aij, sign, mid);
        for (int k = 0; k < d; ++k) CHECK(back[k].rat == in[k]);
      }
      for (int trial = 0; trial < 25; ++trial) {
        IntVec in;
        for (int k = 0; k < d; ++k) in.push_back(static_cast<Int>(rng() % 9) - 4);
        auto mid = rank2_transition(aij, aji, sign, sf_tropical_vec(in));
        auto back = rank2_transition(aji, aij, sign, mid);
        CHECK(sf_to_tropical_vec(back) == in);
      }
    }
  }
}

TEST_CASE("G2 negative product relations") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rat> in;
    for (int k = 0; k < 6; ++k) in.push_back(testutil::make_rat(1 + static_cast<Int>(rng() % 7), 1 + static_cast<Int>(rng() % 7)));
    auto p = rank2_transition(-1, -3, MoveSign::Negative, sf_rational_vec(in));
    CHECK(p[0].rat * p[2].rat * p[4].rat == in[1] * in[3] * in[5]);
    CHECK(p[1].rat * p[3].rat * p[5].rat == in[0] * in[2] * in[4]);
  }
}

TEST_CASE("tropicalization agrees with prime-power valuation") {
  // constants in the tables are 1,2,3; use q = 5 so their valuation is 0
  const Int q = 5;
  std::mt19937_64 rng(999);
  for (auto [aij, aji] : kRank2Cases) {
    int d = aij * aji == 0 ? 2 : aij * aji == 1 ? 3 : aij * aji == 2 ? 4 : 6;
    for (auto sign : {MoveSign::Positive, MoveSign::Negative}) {
      for (int trial = 0; trial < 20; ++trial) {
        IntVec t;
        for (int k = 0; k < d; ++k) t.push_back(static_cast<Int>(rng() % 7) - 3);
        auto trop = rank2_transition(aij, aji, sign, sf_tropical_vec(t));
        auto rat = rank2_transition(aij, aji, sign, prime_powers(t, q));
        for (int k = 0; k < d; ++k) CHECK(trop[k].trop == valuation(rat[k].rat, q));
      }
    }
  }
  // mixed moves as well
  for (int a : {2, 0, -1, -2}) {
    for (int trial = 0; trial < 20; ++trial) {
      IntVec t = {static_cast<Int>(rng() % 7) - 3, static_cast<Int>(rng() % 7) - 3};
      auto trop = rank2_transition(a, a == 2 ? 2 : -1, MoveSign::Mixed, sf_tropical_vec(t));
      auto rat = rank2_transition(a, a == 2 ? 2 : -1, MoveSign::Mixed, prime_powers(t, q));
      for (int k = 0; k < 2; ++k) CHECK(trop[k].trop == valuation(rat[k].rat, q));
    }
  }
}

TEST_CASE("parameter count mismatch") {
  CHECK_THROWS_AS(rank2_transition(-1, -1, MoveSign::Positive, sf_tropical_vec({1, 2})),
                  InputError);
  CHECK_THROWS_AS(rank2_transition(-2, -1, MoveSign::Negative, sf_tropical_vec({1, 2, 3})),
                  InputError);
}
