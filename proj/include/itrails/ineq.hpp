#pragma once

#include <string>
#include <vector>

#include "itrails/linalg.hpp"

namespace itrails {

// integer linear constraint sum_k coeffs[k] t_k  REL  rhs
struct LinRow {
  IntVec coeffs;
  bool eq = false;  // false: >=, true: ==
  Int rhs = 0;
  bool operator==(const LinRow& o) const = default;
  bool operator<(const LinRow& o) const {
    return std::tie(eq, coeffs, rhs) < std::tie(o.eq, o.coeffs, o.rhs);
  }
};

struct IneqSystem {
  int num_vars = 0;
  std::vector<LinRow> rows;

  void add_ge(IntVec coeffs, Int rhs);
  void add_eq(IntVec coeffs, Int rhs);
  bool satisfied(const IntVec& t) const;

  // gcd-reduce rows (integer-equivalently), drop trivial rows, dedupe, sort
  void canonicalize();

  static IneqSystem infeasible(int nvars);

  std::string to_json() const;
  static IneqSystem from_json(const std::string& text);
};

// complete sorted list of integer solutions; throws when the feasible set is unbounded
std::vector<IntVec> enumerate_lattice(const IneqSystem& s);
Int count_lattice(const IneqSystem& s);

// lattice points of the system inside the box [lo, hi]^n
std::vector<IntVec> lattice_points_in_box(const IneqSystem& s, Int lo, Int hi);

}  // namespace itrails
