#include "itrails/ineq.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include <json.hpp>

namespace itrails {

void IneqSystem::add_ge(IntVec coeffs, Int rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars) throw InputError("row arity mismatch");
  rows.push_back({std::move(coeffs), false, rhs});
}

void IneqSystem::add_eq(IntVec coeffs, Int rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars) throw InputError("row arity mismatch");
  rows.push_back({std::move(coeffs), true, rhs});
}

bool IneqSystem::satisfied(const IntVec& t) const {
  if (static_cast<int>(t.size()) != num_vars) throw InputError("point arity mismatch");
  for (const auto& row : rows) {
    Int s = 0;
    for (int k = 0; k < num_vars; ++k) s = checked_add(s, checked_mul(row.coeffs[k], t[k]));
    if (row.eq ? s != row.rhs : s < row.rhs) return false;
  }
  return true;
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}  // namespace

void IneqSystem::canonicalize() {
  std::vector<LinRow> out;
  bool infeasible_row = false;
  for (auto row : rows) {
    Int g = 0;
    for (Int c : row.coeffs) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) {
      // constant row
      if (row.eq ? row.rhs != 0 : row.rhs > 0) infeasible_row = true;
      continue;
    }
    if (g > 1) {
      for (auto& c : row.coeffs) c /= g;
      if (row.eq) {
        if (row.rhs % g != 0) {
          infeasible_row = true;
          continue;
        }
        row.rhs /= g;
      } else {
        row.rhs = ceil_div(row.rhs, g);
      }
    }
    out.push_back(std::move(row));
  }
  if (infeasible_row) {
    IntVec zero(num_vars, 0);
    out.push_back({zero, true, 1});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  rows = std::move(out);
}

IneqSystem IneqSystem::infeasible(int nvars) {
  IneqSystem s;
  s.num_vars = nvars;
  s.rows.push_back({IntVec(nvars, 0), true, 1});
  return s;
}

std::string IneqSystem::to_json() const {
  nlohmann::ordered_json j;
  j["num_vars"] = num_vars;
  auto rws = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    rws.push_back({{"coeffs", r.coeffs}, {"rel", r.eq ? "==" : ">="}, {"rhs", r.rhs}});
  j["rows"] = rws;
  return j.dump();
}

IneqSystem IneqSystem::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  IneqSystem s;
  s.num_vars = j.at("num_vars").get<int>();
  for (const auto& r : j.at("rows")) {
    LinRow row;
    row.coeffs = r.at("coeffs").get<IntVec>();
    if (static_cast<int>(row.coeffs.size()) != s.num_vars) throw InputError("row arity mismatch");
    std::string rel = r.at("rel").get<std::string>();
    if (rel == "==")
      row.eq = true;
    else if (rel == ">=")
      row.eq = false;
    else
      throw InputError("unknown relation: " + rel);
    row.rhs = r.at("rhs").get<Int>();
    s.rows.push_back(std::move(row));
  }
  return s;
}

namespace {

using OptInt = std::optional<Int>;

struct Box {
  std::vector<OptInt> lo, hi;
  bool empty = false;
};

// one sweep of interval propagation; returns true if anything tightened
bool propagate_once(const IneqSystem& s, Box& b) {
  bool changed = false;
  for (const auto& row : s.rows) {
    bool constant = true;
    for (Int c : row.coeffs)
      if (c != 0) constant = false;
    if (constant) {
      if (row.eq ? row.rhs != 0 : row.rhs > 0) {
        b.empty = true;
        return true;
      }
      continue;
    }
  }
  for (const auto& row : s.rows) {
    // handle >= (and for eq also <=)
    for (int pass = 0; pass < (row.eq ? 2 : 1); ++pass) {
      // pass 0: sum >= rhs; pass 1: -sum >= -rhs
      for (int k = 0; k < s.num_vars; ++k) {
        Int a = row.coeffs[k] * (pass == 0 ? 1 : -1);
        if (a == 0) continue;
        // max possible contribution of the other variables
        Int others = 0;
        bool bounded = true;
        for (int t = 0; t < s.num_vars && bounded; ++t) {
          if (t == k) continue;
          Int c = row.coeffs[t] * (pass == 0 ? 1 : -1);
          if (c == 0) continue;
          const OptInt& lim = c > 0 ? b.hi[t] : b.lo[t];
          if (!lim)
            bounded = false;
          else
            others = checked_add(others, checked_mul(c, *lim));
        }
        if (!bounded) continue;
        Int rhs = (pass == 0 ? row.rhs : -row.rhs);
        Int need = checked_add(rhs, -others);  // a * t_k >= need
        if (a > 0) {
          Int nl = ceil_div(need, a);
          if (!b.lo[k] || *b.lo[k] < nl) {
            b.lo[k] = nl;
            changed = true;
          }
        } else {
          Int nh = floor_div(need, a);
          if (!b.hi[k] || *b.hi[k] > nh) {
            b.hi[k] = nh;
            changed = true;
          }
        }
        if (b.lo[k] && b.hi[k] && *b.lo[k] > *b.hi[k]) {
          b.empty = true;
          return true;
        }
      }
    }
  }
  return changed;
}

void propagate(const IneqSystem& s, Box& b) {
  int guard = 0;
  while (propagate_once(s, b)) {
    if (b.empty) return;
    if (++guard > 1000) throw ComputeError("interval propagation did not converge");
  }
}

void dfs_enumerate(const IneqSystem& s, Box b, int var, IntVec& point,
                   std::vector<IntVec>& out) {
  propagate(s, b);
  if (b.empty) return;
  if (var == s.num_vars) {
    if (s.satisfied(point)) out.push_back(point);
    return;
  }
  if (!b.lo[var] || !b.hi[var]) throw ComputeError("unbounded feasible set detected");
  for (Int v = *b.lo[var]; v <= *b.hi[var]; ++v) {
    Box child = b;
    child.lo[var] = v;
    child.hi[var] = v;
    point[var] = v;
    dfs_enumerate(s, std::move(child), var + 1, point, out);
  }
  point[var] = 0;
}

}  // namespace

std::vector<IntVec> enumerate_lattice(const IneqSystem& s) {
  std::vector<IntVec> out;
  if (s.num_vars == 0) {
    // empty product: the empty tuple, if the constant rows allow it
    bool ok = true;
    for (const auto& row : s.rows)
      if (row.eq ? row.rhs != 0 : row.rhs > 0) ok = false;
    if (ok) out.push_back({});
    return out;
  }
  Box b;
  b.lo.assign(s.num_vars, std::nullopt);
  b.hi.assign(s.num_vars, std::nullopt);
  IntVec point(s.num_vars, 0);
  dfs_enumerate(s, std::move(b), 0, point, out);
  std::sort(out.begin(), out.end());
  return out;
}

Int count_lattice(const IneqSystem& s) { return static_cast<Int>(enumerate_lattice(s).size()); }

std::vector<IntVec> lattice_points_in_box(const IneqSystem& s, Int lo, Int hi) {
  std::vector<IntVec> out;
  IntVec t(s.num_vars, lo);
  while (true) {
    if (s.satisfied(t)) out.push_back(t);
    int k = 0;
    while (k < s.num_vars && t[k] == hi) {
      t[k] = lo;
      ++k;
    }
    if (k == s.num_vars) break;
    ++t[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace itrails
