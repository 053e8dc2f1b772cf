#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "itrails/ineq.hpp"

using namespace itrails;

TEST_CASE("basic enumeration") {
  IneqSystem s;
  s.num_vars = 1;
  s.add_ge({1}, 0);
  s.add_eq({1}, 1);
  CHECK(enumerate_lattice(s) == std::vector<IntVec>{{1}});
  CHECK(count_lattice(s) == 1);

  IneqSystem empty;
  CHECK(enumerate_lattice(empty) == std::vector<IntVec>{{}});
  CHECK(count_lattice(empty) == 1);

  auto inf = IneqSystem::infeasible(2);
  CHECK(count_lattice(inf) == 0);
}

TEST_CASE("unbounded feasible set detected") {
  IneqSystem s;
  s.num_vars = 2;
  s.add_ge({1, 0}, 0);
  s.add_ge({0, 1}, 0);
  CHECK_THROWS_AS(enumerate_lattice(s), ComputeError);
}

TEST_CASE("canonicalization") {
  IneqSystem s;
  s.num_vars = 2;
  s.add_ge({2, 0}, 1);   // 2t1 >= 1  ==>  t1 >= 1 over the integers
  s.add_ge({2, 0}, 1);   // duplicate
  s.add_eq({0, 3}, 6);   // t2 = 2
  s.add_ge({0, 0}, -5);  // trivial
  s.canonicalize();
  CHECK(s.rows.size() == 2);
  CHECK(s.satisfied({1, 2}));
  CHECK(!s.satisfied({0, 2}));

  IneqSystem bad;
  bad.num_vars = 1;
  bad.add_eq({2}, 3);  // no integer solutions
  bad.canonicalize();
  CHECK(count_lattice(bad) == 0);
}

TEST_CASE("enumeration equals brute-force box filtering") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    IneqSystem s;
    s.num_vars = n;
    for (int k = 0; k < n; ++k) {
      IntVec row(n, 0);
      row[k] = 1;
      s.add_ge(std::move(row), 0);
    }
    // a positive-coefficient equality bounds the feasible set
    IntVec eq(n);
    for (int k = 0; k < n; ++k) eq[k] = 1 + static_cast<Int>(rng() % 3);
    Int target = static_cast<Int>(rng() % 9);
    s.add_eq(std::move(eq), target);
    for (int extra = 0; extra < 2; ++extra) {
      IntVec row(n);
      for (int k = 0; k < n; ++k) row[k] = static_cast<Int>(rng() % 5) - 2;
      s.add_ge(std::move(row), static_cast<Int>(rng() % 4) - 2);
    }
    auto fast = enumerate_lattice(s);
    auto slow = lattice_points_in_box(s, 0, target);
    CHECK(fast == slow);
  }
}

TEST_CASE("json round trip") {
  IneqSystem s;
  s.num_vars = 3;
  s.add_ge({1, -2, 0}, -1);
  s.add_eq({0, 1, 1}, 4);
  auto text = s.to_json();
  auto back = IneqSystem::from_json(text);
  CHECK(back.num_vars == 3);
  CHECK(back.rows == s.rows);
  CHECK(back.to_json() == text);
}
