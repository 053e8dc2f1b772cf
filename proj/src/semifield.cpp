#include "itrails/semifield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace itrails {

SFValue SFValue::rational(Rat v) {
  if (v <= 0) throw InputError("positive-rational semifield excludes nonpositive values");
  SFValue x;
  x.tag = SemifieldTag::PositiveRational;
  x.rat = std::move(v);
  return x;
}

SFValue SFValue::tropical(Int v) {
  SFValue x;
  x.tag = SemifieldTag::Tropical;
  x.trop = v;
  return x;
}

SFValue SFValue::tropical_infinity() {
  SFValue x;
  x.tag = SemifieldTag::Tropical;
  x.trop_inf = true;
  return x;
}

bool SFValue::operator==(const SFValue& o) const {
  if (tag != o.tag) return false;
  if (tag == SemifieldTag::PositiveRational) return rat == o.rat;
  if (trop_inf || o.trop_inf) return trop_inf == o.trop_inf;
  return trop == o.trop;
}

namespace {

void check_same(const SFValue& a, const SFValue& b) {
  if (a.tag != b.tag) throw InputError("mixed semifield operands");
}

}  // namespace

SFValue sf_add(const SFValue& a, const SFValue& b) {
  check_same(a, b);
  if (a.tag == SemifieldTag::PositiveRational) return SFValue::rational(a.rat + b.rat);
  if (a.trop_inf) return b;
  if (b.trop_inf) return a;
  return SFValue::tropical(std::min(a.trop, b.trop));
}

SFValue sf_mul(const SFValue& a, const SFValue& b) {
  check_same(a, b);
  if (a.tag == SemifieldTag::PositiveRational) return SFValue::rational(a.rat * b.rat);
  if (a.trop_inf || b.trop_inf) return SFValue::tropical_infinity();
  return SFValue::tropical(checked_add(a.trop, b.trop));
}

SFValue sf_div(const SFValue& a, const SFValue& b) {
  check_same(a, b);
  if (a.tag == SemifieldTag::PositiveRational) return SFValue::rational(a.rat / b.rat);
  if (b.trop_inf) throw ComputeError("tropical division by +infinity");
  if (a.trop_inf) return SFValue::tropical_infinity();
  return SFValue::tropical(checked_add(a.trop, -b.trop));
}

SFValue sf_inv(const SFValue& a) {
  if (a.tag == SemifieldTag::PositiveRational) return SFValue::rational(Rat(1) / a.rat);
  if (a.trop_inf) throw ComputeError("tropical inverse of +infinity");
  return SFValue::tropical(-a.trop);
}

std::string sf_to_string(const SFValue& v) {
  if (v.tag == SemifieldTag::PositiveRational) return v.rat.get_str();
  if (v.trop_inf) return "inf";
  return std::to_string(v.trop);
}

std::vector<SFValue> sf_tropical_vec(const IntVec& v) {
  std::vector<SFValue> out;
  out.reserve(v.size());
  for (Int x : v) out.push_back(SFValue::tropical(x));
  return out;
}

std::vector<SFValue> sf_rational_vec(const std::vector<Rat>& v) {
  std::vector<SFValue> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(SFValue::rational(x));
  return out;
}

IntVec sf_to_tropical_vec(const std::vector<SFValue>& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.tag != SemifieldTag::Tropical || x.trop_inf)
      throw ComputeError("expected finite tropical values");
    out.push_back(x.trop);
  }
  return out;
}

int SFBuilder::var(int index) {
  if (index < 1) throw InputError("variable index must be positive");
  nodes_->push_back({SFExpr::Op::Var, index, 0, -1, -1});
  return static_cast<int>(nodes_->size()) - 1;
}

int SFBuilder::cst(Int value) {
  if (value < 1) throw InputError("constants in a subtraction-free expression must be >= 1");
  nodes_->push_back({SFExpr::Op::Const, 0, value, -1, -1});
  return static_cast<int>(nodes_->size()) - 1;
}

int SFBuilder::add(int a, int b) {
  nodes_->push_back({SFExpr::Op::Add, 0, 0, a, b});
  return static_cast<int>(nodes_->size()) - 1;
}

int SFBuilder::mul(int a, int b) {
  nodes_->push_back({SFExpr::Op::Mul, 0, 0, a, b});
  return static_cast<int>(nodes_->size()) - 1;
}

int SFBuilder::div(int a, int b) {
  nodes_->push_back({SFExpr::Op::Div, 0, 0, a, b});
  return static_cast<int>(nodes_->size()) - 1;
}

int SFBuilder::pow(int a, int n) {
  if (n < 1) throw InputError("pow exponent must be >= 1");
  int acc = a;
  for (int k = 1; k < n; ++k) acc = mul(acc, a);
  return acc;
}

int SFBuilder::monomial(const std::vector<std::pair<int, int>>& var_exponents) {
  int num = -1, den = -1;
  for (const auto& [v, e] : var_exponents) {
    if (e == 0) continue;
    int p = pow(var(v), std::abs(e));
    int& slot = e > 0 ? num : den;
    slot = slot < 0 ? p : mul(slot, p);
  }
  if (num < 0) num = cst(1);
  return den < 0 ? num : div(num, den);
}

SFExpr SFBuilder::expr(int node) const { return SFExpr{nodes_, node}; }

SFValue sf_eval(const SFExpr& e, const std::vector<SFValue>& assignment, SemifieldTag tag) {
  if (!e.nodes || e.root < 0) throw InputError("empty expression");
  const auto& nodes = *e.nodes;
  std::vector<SFValue> memo(nodes.size());
  std::vector<char> done(nodes.size(), 0);
  auto rec = [&](auto&& self, int id) -> const SFValue& {
    if (done[id]) return memo[id];
    const auto& n = nodes[id];
    SFValue v;
    switch (n.op) {
      case SFExpr::Op::Var:
        if (n.var > static_cast<int>(assignment.size()))
          throw InputError("unbound variable t" + std::to_string(n.var));
        v = assignment[n.var - 1];
        if (v.tag != tag) throw InputError("assignment value in the wrong semifield");
        break;
      case SFExpr::Op::Const:
        v = tag == SemifieldTag::Tropical ? SFValue::tropical(0)
                                          : SFValue::rational(rat_of(n.cval));
        break;
      case SFExpr::Op::Add: v = sf_add(self(self, n.lhs), self(self, n.rhs)); break;
      case SFExpr::Op::Mul: v = sf_mul(self(self, n.lhs), self(self, n.rhs)); break;
      case SFExpr::Op::Div: v = sf_div(self(self, n.lhs), self(self, n.rhs)); break;
    }
    memo[id] = std::move(v);
    done[id] = 1;
    return memo[id];
  };
  return rec(rec, e.root);
}

namespace {

int prec_of(SFExpr::Op op) {
  switch (op) {
    case SFExpr::Op::Add: return 1;
    case SFExpr::Op::Mul:
    case SFExpr::Op::Div: return 2;
    default: return 3;
  }
}

void print_rec(const std::vector<SFExpr::Node>& nodes, int id, int parent_prec,
               std::string& out) {
  const auto& n = nodes[id];
  int prec = prec_of(n.op);
  bool paren = prec < parent_prec;
  if (paren) out += "(";
  switch (n.op) {
    case SFExpr::Op::Var:
      out += "t" + std::to_string(n.var);
      break;
    case SFExpr::Op::Const:
      out += std::to_string(n.cval);
      break;
    case SFExpr::Op::Add:
      print_rec(nodes, n.lhs, prec, out);
      out += " + ";
      print_rec(nodes, n.rhs, prec, out);
      break;
    case SFExpr::Op::Mul:
      print_rec(nodes, n.lhs, prec, out);
      out += " * ";
      print_rec(nodes, n.rhs, prec + 0, out);
      break;
    case SFExpr::Op::Div:
      print_rec(nodes, n.lhs, prec, out);
      out += " / ";
      print_rec(nodes, n.rhs, prec + 1, out);  // right operand binds tighter
      break;
  }
  if (paren) out += ")";
}

struct Parser {
  const std::string& s;
  size_t pos = 0;
  SFBuilder b;

  explicit Parser(const std::string& text) : s(text) {}

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw InputError("expected integer at position " + std::to_string(pos));
    return std::stoll(s.substr(start, pos - start));
  }
  int factor() {
    skip();
    if (eat('(')) {
      int e = expr();
      if (!eat(')')) throw InputError("missing closing parenthesis");
      return e;
    }
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      return b.var(static_cast<int>(integer()));
    }
    return b.cst(integer());
  }
  int term() {
    int e = factor();
    while (true) {
      skip();
      if (eat('*'))
        e = b.mul(e, factor());
      else if (eat('/'))
        e = b.div(e, factor());
      else
        return e;
    }
  }
  int expr() {
    int e = term();
    while (true) {
      skip();
      if (eat('+'))
        e = b.add(e, term());
      else
        return e;
    }
  }
};

}  // namespace

std::string sf_print(const SFExpr& e) {
  std::string out;
  print_rec(*e.nodes, e.root, 0, out);
  return out;
}

SFExpr sf_parse(const std::string& text) {
  Parser p(text);
  int root = p.expr();
  p.skip();
  if (p.pos != text.size()) throw InputError("trailing input in expression");
  return p.b.expr(root);
}

namespace {

Rank2Table make_positive(int a_ij, int a_ji) {
  SFBuilder b;
  Rank2Table tab;
  if (a_ij == 0 && a_ji == 0) {
    tab.d = 2;
    tab.p = {b.expr(b.var(2)), b.expr(b.var(1))};
    return tab;
  }
  if (a_ij == -1 && a_ji == -1) {
    tab.d = 3;
    int t1 = b.var(1), t2 = b.var(2), t3 = b.var(3);
    int s = b.add(t1, t3);
    tab.p = {b.expr(b.div(b.mul(t2, t3), s)), b.expr(s), b.expr(b.div(b.mul(t1, t2), s))};
    return tab;
  }
  if (a_ij == -2 && a_ji == -1) {
    tab.d = 4;
    int t1 = b.var(1), t2 = b.var(2), t3 = b.var(3), t4 = b.var(4);
    int s13 = b.add(t1, t3);
    int pi1 = b.add(b.mul(t1, t2), b.mul(s13, t4));
    int pi2 = b.add(b.mul(b.pow(t1, 2), t2), b.mul(b.pow(s13, 2), t4));
    tab.p = {b.expr(b.div(b.mul(t2, b.mul(b.pow(t3, 2), t4)), pi2)), b.expr(b.div(pi2, pi1)),
             b.expr(b.div(b.pow(pi1, 2), pi2)), b.expr(b.div(b.mul(t1, b.mul(t2, t3)), pi1))};
    return tab;
  }
  if (a_ij == -3 && a_ji == -1) {
    tab.d = 6;
    int t1 = b.var(1), t2 = b.var(2), t3 = b.var(3), t4 = b.var(4), t5 = b.var(5), t6 = b.var(6);
    int s13 = b.add(t1, t3);
    int s35 = b.add(t3, t5);
    int t12 = b.mul(t1, t2);
    auto mono = [&](std::initializer_list<int> factors) {
      int acc = -1;
      for (int f : factors) acc = acc < 0 ? f : b.mul(acc, f);
      return acc;
    };
    int pi1 = b.add(b.add(mono({t12, b.pow(t3, 2), t4}), mono({t12, b.pow(s35, 2), t6})),
                    mono({s13, t4, b.pow(t5, 2), t6}));
    // 3 t1 t3 + 2 t3^2 + 2 t3 t5 + 2 t1 t5
    int q2 = b.add(b.add(b.mul(b.cst(3), b.mul(t1, t3)), b.mul(b.cst(2), b.pow(t3, 2))),
                   b.add(b.mul(b.cst(2), b.mul(t3, t5)), b.mul(b.cst(2), b.mul(t1, t5))));
    // 3 t1 t3 + 3 t3^2 + 3 t3 t5 + 2 t1 t5
    int q3 = b.add(b.add(b.mul(b.cst(3), b.mul(t1, t3)), b.mul(b.cst(3), b.pow(t3, 2))),
                   b.add(b.mul(b.cst(3), b.mul(t3, t5)), b.mul(b.cst(2), b.mul(t1, t5))));
    int pi2 = b.add(
        b.add(mono({b.pow(t1, 2), b.pow(t2, 2), b.pow(t3, 3), t4}),
              mono({b.pow(t1, 2), b.pow(t2, 2), b.pow(s35, 3), t6})),
        b.add(mono({b.pow(s13, 2), b.pow(t4, 2), b.pow(t5, 3), t6}),
              mono({t12, t4, b.pow(t5, 2), t6, q2})));
    int pi3 = b.add(
        b.add(mono({b.pow(t1, 3), b.pow(t2, 2), b.pow(t3, 3), t4}),
              mono({b.pow(t1, 3), b.pow(t2, 2), b.pow(s35, 3), t6})),
        b.add(mono({b.pow(s13, 3), b.pow(t4, 2), b.pow(t5, 3), t6}),
              mono({b.pow(t1, 2), t2, t4, b.pow(t5, 2), t6, q3})));
    int pi4 = b.add(
        b.mul(mono({b.pow(t1, 2), b.pow(t2, 2), b.pow(t3, 3), t4}),
              b.add(b.add(mono({t12, b.pow(t3, 3), t4}),
                          b.mul(b.cst(2), mono({t12, b.pow(s35, 3), t6}))),
                    mono({q3, t4, b.pow(t5, 2), t6}))),
        b.mul(b.pow(t6, 2),
              b.pow(b.add(mono({t12, b.pow(s35, 2)}), mono({s13, t4, b.pow(t5, 2)})), 3)));
    tab.p = {b.expr(b.div(mono({t2, b.pow(t3, 3), b.pow(t4, 2), b.pow(t5, 3), t6}), pi3)),
             b.expr(b.div(pi3, pi2)),
             b.expr(b.div(b.pow(pi2, 3), b.mul(pi3, pi4))),
             b.expr(b.div(pi4, b.mul(pi1, pi2))),
             b.expr(b.div(b.pow(pi1, 3), pi4)),
             b.expr(b.div(mono({t1, t2, b.pow(t3, 2), t4, t5}), pi1))};
    return tab;
  }
  throw InputError("no base positive rank-2 table for these Cartan entries");
}

Rank2Table make_negative(int a_ij, int a_ji) {
  SFBuilder b;
  Rank2Table tab;
  if (a_ij == 0 && a_ji == 0) {
    tab.d = 2;
    tab.p = {b.expr(b.var(2)), b.expr(b.var(1))};
    return tab;
  }
  if (a_ij == -1 && a_ji == -1) {
    tab.d = 3;
    int t1 = b.var(1), t2 = b.var(2), t3 = b.var(3);
    int inv_p1 = b.add(b.div(b.cst(1), t3), b.div(t1, t2));
    tab.p = {b.expr(b.div(b.cst(1), inv_p1)), b.expr(b.mul(t1, t3)),
             b.expr(b.add(t1, b.div(t2, t3)))};
    return tab;
  }
  if (a_ij == -1 && a_ji == -2) {
    tab.d = 4;
    int t1 = b.var(1), t2 = b.var(2), t3 = b.var(3), t4 = b.var(4);
    int u = b.add(b.div(t2, t3), b.div(b.cst(1), t4));  // t2/t3 + 1/t4
    int inv_p1 = b.add(b.add(b.div(t1, t2), b.div(t2, t3)), b.div(b.cst(1), t4));
    int inv_p2 = b.add(b.div(b.pow(u, 2), t1), b.div(b.cst(1), t3));
    int p3 = b.add(b.add(t2, b.mul(t1, t4)), b.div(b.mul(b.pow(t2, 2), t4), t3));
    int p4 = b.add(t1, b.mul(t3, b.pow(u, 2)));
    tab.p = {b.expr(b.div(b.cst(1), inv_p1)), b.expr(b.div(b.cst(1), inv_p2)), b.expr(p3),
             b.expr(p4)};
    return tab;
  }
  if (a_ij == -1 && a_ji == -3) {
    tab.d = 6;
    int t1 = b.var(1), t2 = b.var(2), t3 = b.var(3), t4 = b.var(4), t5 = b.var(5), t6 = b.var(6);
    int u = b.add(b.div(t2, t3), b.div(b.cst(1), t4));   // t2/t3 + 1/t4
    int v = b.add(b.div(t4, t5), b.div(b.cst(1), t6));   // t4/t5 + 1/t6
    int inv_p1 =
        b.add(b.add(b.div(t1, t2), b.mul(t3, b.pow(u, 2))), b.add(b.div(t4, t5), b.div(b.cst(1), t6)));
    int inner = b.add(b.mul(t3, b.pow(u, 2)), v);  // t3 u^2 + t4/t5 + 1/t6
    int inv_p2 = b.add(
        b.add(b.div(t1, t3), b.mul(b.cst(2), b.mul(t3, b.pow(u, 3)))),
        b.add(b.add(b.div(b.pow(inner, 3), t1),
                    b.add(b.div(b.mul(b.cst(3), b.mul(t2, t4)), b.mul(t3, t5)),
                          b.div(b.mul(b.cst(3), t2), b.mul(t3, t6)))),
              b.add(b.div(b.cst(3), b.mul(t4, t6)), b.div(b.cst(2), t5))));
    int p5 = b.add(
        b.add(b.add(b.mul(t1, t6), b.mul(b.mul(b.pow(t3, 2), t6), b.pow(u, 3))),
              b.add(b.mul(b.mul(t4, t6), b.pow(v, 2)), b.mul(b.cst(2), t2))),
        b.add(b.add(b.div(b.mul(b.cst(2), t3), t4), b.div(b.mul(b.cst(3), b.mul(t2, b.mul(t4, t6))), t5)),
              b.div(b.mul(b.cst(2), b.mul(t3, t6)), t5)));
    int p6 = b.add(
        b.add(b.add(t1, b.mul(b.pow(t3, 2), b.pow(u, 3))), b.mul(t5, b.pow(v, 3))),
        b.add(b.add(b.div(b.mul(b.cst(3), b.mul(t2, t4)), t5), b.div(b.mul(b.cst(3), t2), t6)),
              b.add(b.div(b.mul(b.cst(3), t3), b.mul(t4, t6)), b.div(b.mul(b.cst(2), t3), t5))));
    // middle components from p1 p3 p5 = t2 t4 t6 and p2 p4 p6 = t1 t3 t5
    int p1 = b.div(b.cst(1), inv_p1);
    int p2 = b.div(b.cst(1), inv_p2);
    int p3 = b.div(b.mul(t2, b.mul(t4, t6)), b.mul(p1, p5));
    int p4 = b.div(b.mul(t1, b.mul(t3, t5)), b.mul(p2, p6));
    tab.p = {b.expr(p1), b.expr(p2), b.expr(p3), b.expr(p4), b.expr(p5), b.expr(p6)};
    return tab;
  }
  throw InputError("no base negative rank-2 table for these Cartan entries");
}

Rank2Table make_mixed(int a_ij) {
  SFBuilder b;
  Rank2Table tab;
  tab.d = 2;
  int t1 = b.var(1), t2 = b.var(2);
  if (a_ij == 2) {
    // same letter: 1/p1 = t1 + 1/t2, 1/p2 = (1/t2)(1 + 1/(t1 t2))
    int p = b.add(b.mul(t1, t2), b.cst(1));  // t1 t2 + 1
    tab.p = {b.expr(b.div(t2, p)), b.expr(b.div(b.mul(t1, b.pow(t2, 2)), p))};
    return tab;
  }
  int p2 = t1;
  for (int k = 0; k < -a_ij; ++k) p2 = b.div(p2, t2);
  tab.p = {b.expr(t2), b.expr(p2)};
  return tab;
}

std::map<std::tuple<int, int, MoveSign>, Rank2Table> g_tables;
std::mutex g_tables_mutex;

}  // namespace

const Rank2Table& rank2_table(int a_ij, int a_ji, MoveSign sign) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto key = std::make_tuple(a_ij, a_ji, sign);
  auto it = g_tables.find(key);
  if (it != g_tables.end()) return it->second;
  Rank2Table tab;
  switch (sign) {
    case MoveSign::Positive: tab = make_positive(a_ij, a_ji); break;
    case MoveSign::Negative: tab = make_negative(a_ij, a_ji); break;
    case MoveSign::Mixed: tab = make_mixed(a_ij); break;
  }
  return g_tables.emplace(key, std::move(tab)).first->second;
}

std::vector<SFValue> rank2_transition(int a_ij, int a_ji, MoveSign sign,
                                      const std::vector<SFValue>& t) {
  if (sign == MoveSign::Mixed) {
    if (t.size() != 2) throw InputError("mixed move takes two parameters");
    const Rank2Table& tab = rank2_table(a_ij, a_ji, sign);
    SemifieldTag tag = t.front().tag;
    return {sf_eval(tab.p[0], t, tag), sf_eval(tab.p[1], t, tag)};
  }
  int prod = a_ij * a_ji;
  int d = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
  if (static_cast<int>(t.size()) != d)
    throw InputError("rank-2 move parameter count does not match the braid order");
  SemifieldTag tag = t.front().tag;
  bool base = (a_ij <= a_ji);  // printed tables have a_ij <= a_ji in all four cases
  if (sign == MoveSign::Negative) base = (a_ij >= a_ji);
  if (base) {
    const Rank2Table& tab = rank2_table(a_ij, a_ji, sign);
    std::vector<SFValue> out;
    out.reserve(d);
    for (const auto& e : tab.p) out.push_back(sf_eval(e, t, tag));
    return out;
  }
  // interchange rule: positive  p_k -> p_{d+1-k}, t_k -> t_{d+1-k};
  //                   negative  p_k -> 1/p_{d+1-k}, t_k -> 1/t_{d+1-k}
  std::vector<SFValue> rin(t.rbegin(), t.rend());
  if (sign == MoveSign::Negative)
    for (auto& x : rin) x = sf_inv(x);
  const Rank2Table& tab = rank2_table(a_ji, a_ij, sign);
  std::vector<SFValue> out(d, SFValue::tropical(0));
  for (int k = 0; k < d; ++k) {
    SFValue v = sf_eval(tab.p[d - 1 - k], rin, tag);
    out[k] = sign == MoveSign::Negative ? sf_inv(v) : v;
  }
  return out;
}

}  // namespace itrails
