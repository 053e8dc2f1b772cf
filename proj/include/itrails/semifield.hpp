#pragma once

#include <memory>
#include <string>
#include <vector>

#include "itrails/linalg.hpp"

namespace itrails {

enum class SemifieldTag { PositiveRational, Tropical };

// element of the positive rationals or of the tropical integers (min, +), with +infinity
struct SFValue {
  SemifieldTag tag = SemifieldTag::Tropical;
  Rat rat = 0;
  Int trop = 0;
  bool trop_inf = false;

  static SFValue rational(Rat v);
  static SFValue tropical(Int v);
  static SFValue tropical_infinity();
  bool operator==(const SFValue& o) const;
};

SFValue sf_add(const SFValue& a, const SFValue& b);
SFValue sf_mul(const SFValue& a, const SFValue& b);
SFValue sf_div(const SFValue& a, const SFValue& b);
SFValue sf_inv(const SFValue& a);
std::string sf_to_string(const SFValue& v);

std::vector<SFValue> sf_tropical_vec(const IntVec& v);
std::vector<SFValue> sf_rational_vec(const std::vector<Rat>& v);
IntVec sf_to_tropical_vec(const std::vector<SFValue>& v);  // throws on +infinity entries

// subtraction-free expression DAG over variables t1, t2, ... and positive integer constants
struct SFExpr {
  enum class Op { Var, Const, Add, Mul, Div };
  struct Node {
    Op op;
    int var = 0;   // 1-based variable index
    Int cval = 0;  // constant value, >= 1
    int lhs = -1, rhs = -1;
  };
  std::shared_ptr<const std::vector<Node>> nodes;
  int root = -1;
};

// builder producing expressions over a shared node arena
class SFBuilder {
 public:
  int var(int index);
  int cst(Int value);
  int add(int a, int b);
  int mul(int a, int b);
  int div(int a, int b);
  int pow(int a, int n);          // n >= 1
  int monomial(const std::vector<std::pair<int, int>>& var_exponents);  // (var, exp != 0)
  SFExpr expr(int node) const;

 private:
  std::shared_ptr<std::vector<SFExpr::Node>> nodes_ =
      std::make_shared<std::vector<SFExpr::Node>>();
};

// exact evaluation; over the tropical semifield integer constants evaluate to 0
SFValue sf_eval(const SFExpr& e, const std::vector<SFValue>& assignment, SemifieldTag tag);

// parenthesized textual form; grammar documented in the repository README
std::string sf_print(const SFExpr& e);
SFExpr sf_parse(const std::string& text);

enum class MoveSign { Positive, Negative, Mixed };

// the rank-2 transition tables for x_i(t1) x_j(t2) ... = x_j(p1) x_i(p2) ... and their
// negative / mixed counterparts; the returned expressions are in the input parameters
struct Rank2Table {
  int d = 0;
  std::vector<SFExpr> p;
};

// base tables as printed (positive: a_ij in {0,-1,-2,-3}; negative: a_ij in {0,-1})
const Rank2Table& rank2_table(int a_ij, int a_ji, MoveSign sign);

// full transition, including the interchange rule when (a_ij, a_ji) is the swapped pair;
// mixed moves take a_ij = 2 to mean both letters equal
std::vector<SFValue> rank2_transition(int a_ij, int a_ji, MoveSign sign,
                                      const std::vector<SFValue>& t);

}  // namespace itrails
