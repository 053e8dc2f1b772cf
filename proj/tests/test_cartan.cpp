#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "itrails/cartan.hpp"

using namespace itrails;

TEST_CASE("standard Cartan matrices") {
  auto a2 = cartan(Family::A, 2);
  CHECK(a2.matrix == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  CHECK(a2.d == std::vector<int>{1, 1});

  auto g2 = cartan(Family::G, 2);
  CHECK(g2.matrix == std::vector<std::vector<int>>{{2, -3}, {-1, 2}});
  CHECK(g2.d == std::vector<int>{1, 3});

  auto b2 = cartan(Family::B, 2);
  auto c2 = cartan(Family::C, 2);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) CHECK(b2.entry(i, j) == c2.entry(j, i));

  CHECK_THROWS_AS(cartan(Family::G, 3), InputError);
  CHECK_THROWS_AS(cartan(Family::F, 2), InputError);
  CHECK_THROWS_AS(cartan(Family::E, 9), InputError);
}

TEST_CASE("symmetrizers symmetrize") {
  for (auto name : {"A3", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    auto c = cartan(name);
    for (int i = 1; i <= c.rank; ++i)
      for (int j = 1; j <= c.rank; ++j)
        CHECK(c.d[i - 1] * c.entry(i, j) == c.d[j - 1] * c.entry(j, i));
  }
}

TEST_CASE("langlands dual") {
  auto a3 = cartan("A3");
  CHECK(langlands_dual(a3).matrix == a3.matrix);

  auto b3 = cartan("B3");
  auto c3 = cartan("C3");
  CHECK(langlands_dual(b3).matrix == c3.matrix);
  CHECK(langlands_dual(b3).family == Family::C);

  for (auto name : {"A2", "B2", "C3", "D4", "G2", "F4"}) {
    auto c = cartan(name);
    auto dd = langlands_dual(langlands_dual(c));
    CHECK(dd.matrix == c.matrix);
    CHECK(dd.d == c.d);
    CHECK(dd.family == c.family);
  }
}

TEST_CASE("reflection on weights") {
  auto a2 = cartan("A2");
  Weight w1 = {1, 0};
  CHECK(reflect(a2, w1, 1) == Weight{-1, 1});
  CHECK(reflect(a2, w1, 2) == Weight{1, 0});

  for (auto name : {"A2", "B2", "G2", "B3"}) {
    auto c = cartan(name);
    Weight w(c.rank);
    for (int k = 0; k < c.rank; ++k) w[k] = (k * 7 + 3) % 5 - 2;
    for (int i = 1; i <= c.rank; ++i) CHECK(reflect(c, reflect(c, w, i), i) == w);
  }
}

TEST_CASE("basis conversions round-trip on the root lattice") {
  for (auto name : {"A2", "B2", "C3", "G2", "D4"}) {
    auto c = cartan(name);
    IntVec rc(c.rank);
    for (int k = 0; k < c.rank; ++k) rc[k] = (k * 3 + 1) % 4 - 1;
    Weight w = weight_from_root_coords(c, rc);
    auto back = root_coords_integral(c, w);
    REQUIRE(back.has_value());
    CHECK(*back == rc);
  }
  // fundamental weights of A2 are not in the root lattice
  auto a2 = cartan("A2");
  CHECK(!root_coords_integral(a2, fundamental_weight(a2, 1)).has_value());
}

TEST_CASE("positive roots counts") {
  CHECK(positive_roots(cartan("A2")).size() == 3);
  CHECK(positive_roots(cartan("B2")).size() == 4);
  CHECK(positive_roots(cartan("G2")).size() == 6);
  CHECK(positive_roots(cartan("A3")).size() == 6);
  CHECK(positive_roots(cartan("B3")).size() == 9);
  CHECK(positive_roots(cartan("D4")).size() == 12);
  CHECK(positive_roots(cartan("F4")).size() == 24);
}

TEST_CASE("Weyl dimension formula on known modules") {
  auto a2 = cartan("A2");
  CHECK(weyl_dimension(a2, {1, 0}) == 3);
  CHECK(weyl_dimension(a2, {1, 1}) == 8);
  auto c2 = cartan("C2");
  CHECK(weyl_dimension(c2, {1, 0}) == 4);
  auto g2 = cartan("G2");
  CHECK(weyl_dimension(g2, {1, 0}) == 7);
  CHECK(weyl_dimension(g2, {0, 1}) == 14);
  auto b3 = cartan("B3");
  CHECK(weyl_dimension(b3, {0, 0, 1}) == 8);  // spin
}

TEST_CASE("dominance order") {
  auto a2 = cartan("A2");
  Weight hi = {1, 1};
  CHECK(dominance_geq(a2, hi, weight_zero(a2)));
  CHECK(!dominance_geq(a2, weight_zero(a2), hi));
  CHECK(dominance_geq(a2, hi, hi));
  CHECK(!dominance_geq(a2, hi, {1, 0}));  // difference not in root lattice
}
