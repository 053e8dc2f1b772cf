#include "itrails/counting.hpp"

#include <algorithm>
#include <set>

#include "itrails/oracle.hpp"

namespace itrails {

MultMethod mult_method_from_string(const std::string& s) {
  if (s == "lusztig-trails") return MultMethod::LusztigTrails;
  if (s == "string-trails") return MultMethod::StringTrails;
  if (s == "plucker-lusztig") return MultMethod::PluckerLusztig;
  if (s == "plucker-strings") return MultMethod::PluckerStrings;
  if (s == "classical") return MultMethod::Classical;
  if (s == "oracle") return MultMethod::Oracle;
  throw InputError("unknown method: " + s);
}

std::string mult_method_name(MultMethod m) {
  switch (m) {
    case MultMethod::LusztigTrails: return "lusztig-trails";
    case MultMethod::StringTrails: return "string-trails";
    case MultMethod::PluckerLusztig: return "plucker-lusztig";
    case MultMethod::PluckerStrings: return "plucker-strings";
    case MultMethod::Classical: return "classical";
    case MultMethod::Oracle: return "oracle";
  }
  throw InputError("unknown method");
}

namespace {

IntVec coweight_int_coords(const CartanData& c, const Weight& w) {
  auto rc = root_coords_integral(c, w);
  if (!rc) throw ComputeError("weight unexpectedly outside the root lattice");
  return *rc;
}

// positive roots s_{i_1}...s_{i_{k-1}} alpha_{i_k} as root-coordinate vectors
std::vector<IntVec> word_roots(const CartanData& c, const Word& word) {
  std::vector<IntVec> out;
  WeylElement pre = weyl_identity(c);
  for (int letter : word) {
    IntVec alpha(c.rank, 0);
    alpha[letter - 1] = 1;
    out.push_back(weyl_apply_root(pre, alpha));
    pre = weyl_mul(pre, weyl_simple(c, letter));
  }
  return out;
}

void add_trail_rows(IneqSystem& sys, const std::vector<Trail>& trails, bool use_d, Int rhs) {
  for (const auto& tr : trails) {
    sys.add_ge(use_d ? tr.d : tr.c, rhs);
  }
}

// unique trail expected (monotone chain); returns its coefficient vector
const Trail& single_trail(const std::vector<Trail>& trails, const char* what) {
  if (trails.size() != 1)
    throw ComputeError(std::string("expected a unique trail for ") + what + ", found " +
                       std::to_string(trails.size()));
  return trails.front();
}

struct DualContext {
  CartanData dual;
  WeylElement wo;
  explicit DualContext(const CartanData& c) : dual(langlands_dual(c)), wo(longest_element(dual)) {}
  const FundModule& mod(int i) const { return cached_module(dual, i); }
  Weight om(int i) const { return fundamental_weight(dual, i); }
  Weight w_o(const Weight& w) const { return weyl_apply(wo, w); }
};

}  // namespace

IneqSystem build_system(const MultiplicityQuery& q) {
  const CartanData& c = q.cartan;
  if (!is_dominant(q.lambda) || !is_dominant(q.nu) || !is_dominant(q.mu))
    throw InputError("multiplicity query needs dominant weights");
  if (q.method == MultMethod::Classical) return classical_system(c, q.lambda, q.mu, q.nu);
  if (q.method == MultMethod::Oracle)
    throw InputError("the oracle method has no inequality system");
  const Word& word = q.word;
  if (!is_reduced_word(c, word) || !(weyl_from_word(c, word) == longest_element(c)))
    throw InputError("word must be a reduced word of the longest element");
  int m = static_cast<int>(word.size());
  Weight target = weight_sub(weight_add(q.lambda, q.nu), q.mu);
  auto rc = root_coords_integral(c, target);
  if (!rc) return IneqSystem::infeasible(m);

  DualContext d(c);
  IneqSystem sys;
  sys.num_vars = m;

  auto eq_rows_word_roots = [&]() {
    auto roots = word_roots(c, word);
    for (int j = 0; j < c.rank; ++j) {
      IntVec row(m, 0);
      for (int k = 0; k < m; ++k) row[k] = roots[k][j];
      sys.add_eq(std::move(row), (*rc)[j]);
    }
  };
  auto eq_rows_letters = [&]() {
    for (int j = 1; j <= c.rank; ++j) {
      IntVec row(m, 0);
      for (int k = 0; k < m; ++k)
        if (word[k] == j) row[k] = 1;
      sys.add_eq(std::move(row), (*rc)[j - 1]);
    }
  };

  switch (q.method) {
    case MultMethod::LusztigTrails: {
      for (int k = 0; k < m; ++k) {
        IntVec row(m, 0);
        row[k] = 1;
        sys.add_ge(std::move(row), 0);
      }
      eq_rows_word_roots();
      for (int i = 1; i <= c.rank; ++i) {
        Weight om = d.om(i);
        add_trail_rows(sys, cached_trails(d.mod(i), reflect(d.dual, om, i), d.w_o(om), word),
                       false, (*rc)[i - 1] - q.lambda[i - 1]);
        add_trail_rows(sys, cached_trails(d.mod(i), om, d.w_o(reflect(d.dual, om, i)), word),
                       false, (*rc)[i - 1] - q.nu[i - 1]);
      }
      break;
    }
    case MultMethod::StringTrails: {
      for (int i = 1; i <= c.rank; ++i) {
        Weight om = d.om(i);
        add_trail_rows(sys, cached_trails(d.mod(i), om, d.w_o(reflect(d.dual, om, i)), word),
                       true, 0);
        add_trail_rows(sys, cached_trails(d.mod(i), reflect(d.dual, om, i), d.w_o(om), word),
                       true, -q.lambda[i - 1]);
      }
      eq_rows_letters();
      for (int k = 0; k < m; ++k) {
        IntVec row(m, 0);
        row[k] = -1;
        for (int l = k + 1; l < m; ++l) row[l] -= c.entry(word[k], word[l]);
        sys.add_ge(std::move(row), -q.nu[word[k] - 1]);
      }
      break;
    }
    case MultMethod::PluckerLusztig: {
      // conditions on the tuple (M_{omega_i^vee, gamma}) in the p+ model:
      // every coordinate is a minimum of trail forms at x_i(t)
      for (int i = 1; i <= c.rank; ++i) {
        Weight om = d.om(i);
        Weight si_om = reflect(d.dual, om, i);
        // (1) M_{omega, s_i omega} >= 0
        add_trail_rows(sys, cached_trails(d.mod(i), om, si_om, word), false, 0);
        // (2) M_{omega, w_o omega} = (lambda+nu-mu)(omega_i^vee): single monotone trail
        const Trail& tr = single_trail(cached_trails(d.mod(i), om, d.w_o(om), word),
                                       "M_{omega, w_o omega}");
        sys.add_eq(tr.c, (*rc)[i - 1]);
        // (3) M_{s_i omega, w_o omega} >= (s_i lambda + nu - mu)(omega_i^vee)
        add_trail_rows(sys, cached_trails(d.mod(i), si_om, d.w_o(om), word), false,
                       (*rc)[i - 1] - q.lambda[i - 1]);
        // (4) M_{omega, w_o s_i omega} >= (lambda + s_i nu - mu)(omega_i^vee)
        add_trail_rows(sys, cached_trails(d.mod(i), om, d.w_o(si_om), word), false,
                       (*rc)[i - 1] - q.nu[i - 1]);
      }
      break;
    }
    case MultMethod::PluckerStrings: {
      // p- model: M_{gamma', delta'} corresponds to Delta_{delta', gamma'}(x_{-i}(t)),
      // a minimum of d-forms over trails from -delta' to -gamma' in V_{omega_{i*}^vee}
      for (int i = 1; i <= c.rank; ++i) {
        int is = star(c, i);
        Weight oms = d.om(is);
        Weight w_o_oms = d.w_o(oms);
        // (0) M_{omega, w_o omega} = 0: the unique monotone trail has d = 0
        const Trail& tr0 =
            single_trail(cached_trails(d.mod(is), oms, w_o_oms, word), "M_{omega, w_o omega}");
        for (Int dk : tr0.d)
          if (dk != 0) throw ComputeError("normalization trail has nonzero d-statistics");
        // (1) M_{s_i omega, w_o omega} >= 0
        add_trail_rows(sys,
                       cached_trails(d.mod(is), oms, d.w_o(reflect(d.dual, oms, is)), word),
                       true, 0);
        // (2) M_{omega, omega} = -(lambda+nu-mu)(omega_i^vee): constant trail
        const Trail& tr2 =
            single_trail(cached_trails(d.mod(is), w_o_oms, w_o_oms, word), "M_{omega, omega}");
        sys.add_eq(tr2.d, -(*rc)[i - 1]);
        // (3) M_{omega, w_o s_i omega} >= -lambda(alpha_{i*}^vee)
        add_trail_rows(sys, cached_trails(d.mod(is), reflect(d.dual, oms, is), w_o_oms, word),
                       true, -q.lambda[is - 1]);
        // (4) M_{omega, s_i omega} >= -(s_i lambda + nu - s_i mu)(omega_i^vee)
        add_trail_rows(
            sys,
            cached_trails(d.mod(is), d.w_o(reflect(d.dual, oms, is)), w_o_oms, word), true,
            -((*rc)[i - 1] - q.lambda[i - 1] + q.mu[i - 1]));
      }
      break;
    }
    default: throw InputError("unsupported method in build_system");
  }
  sys.canonicalize();
  return sys;
}

namespace {

SFValue trail_min_tropical(const std::vector<Trail>& trails, const IntVec& t, bool use_d) {
  SFValue best = SFValue::tropical_infinity();
  for (const auto& tr : trails) {
    const IntVec& coeff = use_d ? tr.d : tr.c;
    Int s = 0;
    for (size_t k = 0; k < coeff.size(); ++k) s = checked_add(s, checked_mul(coeff[k], t[k]));
    best = sf_add(best, SFValue::tropical(s));
  }
  return best;
}

bool plucker_conditions_hold(const MultiplicityQuery& q, const IntVec& point) {
  const CartanData& c = q.cartan;
  CartanData dual = langlands_dual(c);
  WeylElement wo = longest_element(dual);
  IntVec rc = coweight_int_coords(c, weight_sub(weight_add(q.lambda, q.nu), q.mu));
  ParamSide side =
      q.method == MultMethod::PluckerLusztig ? ParamSide::Lusztig : ParamSide::String;
  PluckerTuple tuple = plucker_coordinates(c, q.word, point, side);
  auto finite = [](const SFValue& v) { return !v.trop_inf; };
  for (int i = 1; i <= c.rank; ++i) {
    Weight om = fundamental_weight(dual, i);
    Weight si_om = reflect(dual, om, i);
    Weight wo_om = weyl_apply(wo, om);
    Weight wo_si_om = weyl_apply(wo, si_om);
    const auto& coord = tuple.orbit[i - 1];
    const auto& der = tuple.derived[i - 1];
    if (side == ParamSide::Lusztig) {
      if (!(coord.at(om) == SFValue::tropical(0))) return false;                       // (0)
      if (!finite(coord.at(si_om)) || coord.at(si_om).trop < 0) return false;          // (1)
      if (!(coord.at(wo_om) == SFValue::tropical(rc[i - 1]))) return false;            // (2)
      const SFValue& d3 = der.at(wo_om);                                               // (3)
      if (!finite(d3) || d3.trop < rc[i - 1] - q.lambda[i - 1]) return false;
      const SFValue& d4 = coord.at(wo_si_om);                                          // (4)
      if (!finite(d4) || d4.trop < rc[i - 1] - q.nu[i - 1]) return false;
    } else {
      if (!(coord.at(wo_om) == SFValue::tropical(0))) return false;                    // (0)
      const SFValue& d1 = der.at(wo_om);                                               // (1)
      if (!finite(d1) || d1.trop < 0) return false;
      if (!(coord.at(om) == SFValue::tropical(-rc[i - 1]))) return false;              // (2)
      const SFValue& d3 = coord.at(wo_si_om);                                          // (3)
      if (!finite(d3) || d3.trop < -q.lambda[star(c, i) - 1]) return false;
      const SFValue& d4 = coord.at(si_om);                                             // (4)
      if (!finite(d4) || d4.trop < -(rc[i - 1] - q.lambda[i - 1] + q.mu[i - 1])) return false;
    }
  }
  return true;
}

}  // namespace

Int multiplicity_count(const MultiplicityQuery& q) {
  if (q.method == MultMethod::Oracle)
    return tensor_multiplicity_oracle(q.cartan, q.lambda, q.nu, q.mu);
  IneqSystem sys = build_system(q);
  auto points = enumerate_lattice(sys);
  if (q.method == MultMethod::PluckerLusztig || q.method == MultMethod::PluckerStrings) {
    for (const auto& t : points)
      if (!plucker_conditions_hold(q, t))
        throw ComputeError("lattice point fails the tropical Plucker conditions");
  }
  return static_cast<Int>(points.size());
}

// ---------------------------------------------------------------------------
// classical B/C/D systems

namespace {

struct ClassicalVars {
  // vid(i, j) with the paper's index ranges; -1 outside the range (treated as 0)
  bool is_d;
  int r;
  int id(int i, int j) const {
    if (j < (is_d ? 1 : 0) || j >= r || std::abs(i) > j) return -1;
    if (is_d && i == 0) return -1;
    if (is_d) {
      int offset = j * (j - 1);
      return offset + (i < 0 ? i + j : j - 1 + i);
    }
    int offset = j * j;
    return offset + i + j;
  }
  int total() const { return is_d ? r * (r - 1) : r * r; }
};

}  // namespace

std::map<std::string, int> classical_index_map(const CartanData& c) {
  std::map<std::string, int> out;
  int r = c.rank;
  if (c.family == Family::B || c.family == Family::C) {
    out["0"] = r;
    for (int j = 1; j < r; ++j) out[std::to_string(j)] = r - j;
  } else if (c.family == Family::D) {
    out["-1"] = r;
    for (int j = 1; j < r; ++j) out[std::to_string(j)] = r - j;
  } else {
    throw InputError("classical systems exist for types B, C and D only");
  }
  return out;
}

Word classical_designated_word(const CartanData& c) {
  int r = c.rank;
  Word word;
  if (c.family == Family::B || c.family == Family::C) {
    auto pmap = [&](int j) { return j == 0 ? r : r - j; };
    for (int j = 0; j < r; ++j) {
      for (int i = j; i >= 1; --i) word.push_back(pmap(i));
      word.push_back(pmap(0));
      for (int i = 1; i <= j; ++i) word.push_back(pmap(i));
    }
  } else if (c.family == Family::D) {
    auto pmap = [&](int i) { return i == -1 ? r : r - i; };
    for (int j = 1; j < r; ++j) {
      for (int i = j; i >= 2; --i) word.push_back(pmap(i));
      word.push_back(pmap(-1));
      for (int i = 1; i <= j; ++i) word.push_back(pmap(i));
    }
  } else {
    throw InputError("classical systems exist for types B, C and D only");
  }
  return word;
}

IneqSystem classical_system(const CartanData& c, const Weight& lambda, const Weight& mu,
                            const Weight& nu) {
  int r = c.rank;
  bool is_d = c.family == Family::D;
  if (c.family == Family::B || c.family == Family::C) {
    if (r < 2) throw InputError("B/C classical system needs rank >= 2");
  } else if (is_d) {
    if (r < 3) throw InputError("D classical system needs rank >= 3");
  } else {
    throw InputError("classical systems exist for types B, C and D only");
  }
  if (!is_dominant(lambda) || !is_dominant(nu) || !is_dominant(mu))
    throw InputError("multiplicity query needs dominant weights");

  ClassicalVars vars{is_d, r};
  int n = vars.total();
  Weight target = weight_sub(weight_add(lambda, nu), mu);
  auto rc_opt = root_coords_integral(c, target);
  if (!rc_opt) return IneqSystem::infeasible(n);
  const IntVec& rc = *rc_opt;

  // pairing with the paper-indexed simple coroots
  auto lam_at = [&](int paper) { return lambda[(paper <= 0 ? r : r - paper) - 1]; };
  auto nu_at = [&](int paper) { return nu[(paper <= 0 ? r : r - paper) - 1]; };

  IneqSystem sys;
  sys.num_vars = n;
  // rows are built as coefficient maps over (i, j) pairs; ids outside range drop out
  auto add_row = [&](const std::vector<std::tuple<int, int, Int>>& terms, Int rhs, bool eq) {
    IntVec row(n, 0);
    for (const auto& [i, j, coeff] : terms) {
      int id = vars.id(i, j);
      if (id >= 0) row[id] += coeff;
    }
    if (eq)
      sys.add_eq(std::move(row), rhs);
    else
      sys.add_ge(std::move(row), rhs);
  };
  using Terms = std::vector<std::tuple<int, int, Int>>;

  if (!is_d) {
    Int a = c.family == Family::B ? 1 : 2;
    // (1) 2 t_{-j} >= ... >= 2 t_{-1} >= a t_0 >= 2 t_1 >= ... >= 2 t_j >= 0
    for (int j = 0; j < r; ++j) {
      for (int i = -j; i < 0; ++i) {
        if (i + 1 < 0)
          add_row({{i, j, 2}, {i + 1, j, -2}}, 0, false);
        else
          add_row({{i, j, 2}, {0, j, -a}}, 0, false);
      }
      for (int i = 0; i < j; ++i) {
        if (i == 0)
          add_row({{0, j, a}, {1, j, -2}}, 0, false);
        else
          add_row({{i, j, 2}, {i + 1, j, -2}}, 0, false);
      }
      add_row({{j, j, 2}}, 0, false);
    }
    // (2) sum t_i^{(j)} alpha_{|i|} = lambda + nu - mu
    for (int b = 1; b <= r; ++b) {
      Terms terms;
      for (int j = 0; j < r; ++j)
        for (int i = -j; i <= j; ++i) {
          int paper = std::abs(i);
          int bourbaki = paper == 0 ? r : r - paper;
          if (bourbaki == b) terms.push_back({i, j, 1});
        }
      IntVec row(n, 0);
      for (const auto& [i, j, coeff] : terms) row[vars.id(i, j)] += coeff;
      sys.add_eq(std::move(row), rc[b - 1]);
    }
    // (3) lambda rows
    add_row({{0, 0, -1}}, -lam_at(0), false);
    for (int j = 1; j < r; ++j) {
      Int lj = lam_at(j);
      add_row({{j, j, -1}}, -lj, false);
      add_row({{0, j, -a}, {1, j - 1, 1}, {-1, j, 1}}, -lj, false);
      add_row({{1, j - 1, -1}, {-1, j, -1}, {0, j - 1, a}}, -lj, false);
      for (int i = 1; i < j; ++i) {
        add_row({{i, j, -1}, {-i, j, -1}, {i + 1, j - 1, 1}, {-i - 1, j, 1}}, -lj, false);
        add_row({{i + 1, j - 1, -1}, {-i - 1, j, -1}, {-i, j - 1, 1}, {i, j - 1, 1}}, -lj, false);
        add_row({{i, j, -1}, {i, j - 1, 1}}, -lj, false);
        add_row({{-i, j, -1}, {-i, j - 1, 1}}, -lj, false);
      }
    }
    // (4) nu rows
    if (2 % a != 0) throw ComputeError("non-integral coefficient 2/a");
    Int two_over_a = 2 / a;
    for (int j = 0; j < r; ++j) {
      Terms terms{{0, j, -1}};
      for (int k = j + 1; k <= r; ++k) {
        terms.push_back({0, k, -two_over_a * a});
        terms.push_back({-1, k, two_over_a});
        terms.push_back({1, k - 1, two_over_a});
      }
      add_row(terms, -nu_at(0), false);
    }
    for (int j = 1; j < r; ++j) {
      Terms t1{{-1, j, -1}}, t2{{1, j, -1}};
      for (int k = j + 1; k <= r; ++k) {
        t1.push_back({-1, k, -2});
        t1.push_back({1, k - 1, -2});
        t1.push_back({0, k - 1, a});
        t1.push_back({-2, k, 1});
        t1.push_back({2, k - 1, 1});
        t2.push_back({-1, k, -2});
        t2.push_back({1, k, -2});
        t2.push_back({0, k, a});
        t2.push_back({-2, k, 1});
        t2.push_back({2, k - 1, 1});
      }
      add_row(t1, -nu_at(1), false);
      add_row(t2, -nu_at(1), false);
    }
    for (int i = 2; i < r; ++i)
      for (int j = i; j < r; ++j) {
        Terms t1{{-i, j, -1}}, t2{{i, j, -1}};
        for (int k = j + 1; k <= r; ++k) {
          t1.push_back({-i, k, -2});
          t1.push_back({i, k - 1, -2});
          t1.push_back({-i + 1, k - 1, 1});
          t1.push_back({i - 1, k - 1, 1});
          t1.push_back({-i - 1, k, 1});
          t1.push_back({i + 1, k - 1, 1});
          t2.push_back({-i, k, -2});
          t2.push_back({i, k, -2});
          t2.push_back({-i + 1, k, 1});
          t2.push_back({i - 1, k, 1});
          t2.push_back({-i - 1, k, 1});
          t2.push_back({i + 1, k - 1, 1});
        }
        add_row(t1, -nu_at(i), false);
        add_row(t2, -nu_at(i), false);
      }
  } else {
    // type D
    // (1) t_{-j} >= ... >= t_{-2} >= max(t_{-1}, t_1) >= min >= t_2 >= ... >= t_j >= 0
    for (int j = 1; j < r; ++j) {
      for (int i = -j; i <= -3; ++i) add_row({{i, j, 1}, {i + 1, j, -1}}, 0, false);
      if (j >= 2) {
        add_row({{-2, j, 1}, {-1, j, -1}}, 0, false);
        add_row({{-2, j, 1}, {1, j, -1}}, 0, false);
        add_row({{-1, j, 1}, {2, j, -1}}, 0, false);
        add_row({{1, j, 1}, {2, j, -1}}, 0, false);
        for (int i = 2; i < j; ++i) add_row({{i, j, 1}, {i + 1, j, -1}}, 0, false);
        add_row({{j, j, 1}}, 0, false);
      } else {
        add_row({{-1, 1, 1}}, 0, false);
        add_row({{1, 1, 1}}, 0, false);
      }
    }
    // (2)
    for (int b = 1; b <= r; ++b) {
      IntVec row(n, 0);
      for (int j = 1; j < r; ++j)
        for (int i = -j; i <= j; ++i) {
          if (i == 0) continue;
          int bourbaki;
          if (i == -1)
            bourbaki = r;
          else if (i == 1)
            bourbaki = r - 1;
          else
            bourbaki = r - std::abs(i);
          if (bourbaki == b) row[vars.id(i, j)] += 1;
        }
      sys.add_eq(std::move(row), rc[b - 1]);
    }
    auto lam_d = [&](int paper) {
      int b = paper == -1 ? r : r - paper;
      return lambda[b - 1];
    };
    auto nu_d = [&](int paper) {
      int b = paper == -1 ? r : r - paper;
      return nu[b - 1];
    };
    // (3)
    add_row({{-1, 1, -1}}, -lam_d(-1), false);
    add_row({{1, 1, -1}}, -lam_d(1), false);
    for (int j = 2; j < r; ++j) {
      Int lj = lam_d(j);
      add_row({{j, j, -1}}, -lj, false);
      add_row({{1, j, -1}, {-1, j - 1, 1}}, -lj, false);
      add_row({{-1, j, -1}, {1, j - 1, 1}}, -lj, false);
      add_row({{1, j, -1}, {-1, j, -1}, {-2, j, 1}, {2, j - 1, 1}}, -lj, false);
      add_row({{-2, j, -1}, {2, j - 1, -1}, {1, j - 1, 1}, {-1, j - 1, 1}}, -lj, false);
      for (int i = 2; i < j; ++i) {
        add_row({{i, j, -1}, {-i, j, -1}, {i + 1, j - 1, 1}, {-i - 1, j, 1}}, -lj, false);
        add_row({{i + 1, j - 1, -1}, {-i - 1, j, -1}, {-i, j - 1, 1}, {i, j - 1, 1}}, -lj, false);
        add_row({{i, j, -1}, {i, j - 1, 1}}, -lj, false);
        add_row({{-i, j, -1}, {-i, j - 1, 1}}, -lj, false);
      }
    }
    // (4)
    for (int sgn : {-1, 1}) {
      for (int j = 1; j < r; ++j) {
        Terms terms{{sgn, j, -1}};
        for (int k = j + 1; k <= r; ++k) {
          terms.push_back({sgn, k, -2});
          terms.push_back({-2, k, 1});
          terms.push_back({2, k - 1, 1});
        }
        add_row(terms, -nu_d(sgn), false);
      }
    }
    for (int i = 2; i < r; ++i)
      for (int j = i; j < r; ++j) {
        Terms t1{{-i, j, -1}}, t2{{i, j, -1}};
        for (int k = j + 1; k <= r; ++k) {
          t1.push_back({-i, k, -2});
          t1.push_back({i, k - 1, -2});
          t1.push_back({-i + 1, k - 1, 1});
          t1.push_back({i - 1, k - 1, 1});
          t1.push_back({-i - 1, k, 1});
          t1.push_back({i + 1, k - 1, 1});
          t2.push_back({-i, k, -2});
          t2.push_back({i, k, -2});
          t2.push_back({-i + 1, k, 1});
          t2.push_back({i - 1, k, 1});
          t2.push_back({-i - 1, k, 1});
          t2.push_back({i + 1, k - 1, 1});
        }
        add_row(t1, -nu_d(i), false);
        add_row(t2, -nu_d(i), false);
      }
  }
  sys.canonicalize();
  return sys;
}

// ---------------------------------------------------------------------------
// reduction systems

Word reduction_default_word(const CartanData& c, const std::vector<int>& I) {
  WeylElement woI = longest_element_parabolic(c, I);
  WeylElement rest = weyl_mul(weyl_inverse(c, woI), longest_element(c));
  return canonical_reduced_word(c, rest);
}

IneqSystem build_reduction_system(const ReductionQuery& q) {
  const CartanData& c = q.cartan;
  if (!is_dominant(q.nu)) throw InputError("reduction needs nu dominant");
  for (int i : q.I)
    if (q.beta[i - 1] < 0) throw InputError("beta must be dominant for the Levi of I");
  WeylElement woI = longest_element_parabolic(c, q.I);
  WeylElement target_el = weyl_mul(weyl_inverse(c, woI), longest_element(c));
  if (!is_reduced_word(c, q.word) || !(weyl_from_word(c, q.word) == target_el))
    throw InputError("word must be a reduced word of w_o(I)^{-1} w_o");
  int nvars = static_cast<int>(q.word.size());
  Weight diff = weight_sub(q.nu, q.beta);
  auto rc = root_coords_integral(c, diff);
  if (!rc) return IneqSystem::infeasible(nvars);

  DualContext d(c);
  WeylElement woI_dual = weyl_from_word(d.dual, canonical_reduced_word(c, woI));
  IneqSystem sys;
  sys.num_vars = nvars;
  if (!q.string_method) {
    for (int k = 0; k < nvars; ++k) {
      IntVec row(nvars, 0);
      row[k] = 1;
      sys.add_ge(std::move(row), 0);
    }
    // sum t_k beta_k = w_o(I)(nu - beta)
    auto roots = word_roots(c, q.word);
    IntVec lhs_target = coweight_int_coords(c, weyl_apply(woI, diff));
    for (int j = 0; j < c.rank; ++j) {
      IntVec row(nvars, 0);
      for (int k = 0; k < nvars; ++k) row[k] = roots[k][j];
      sys.add_eq(std::move(row), lhs_target[j]);
    }
    for (int i = 1; i <= c.rank; ++i) {
      Weight om = d.om(i);
      add_trail_rows(
          sys,
          cached_trails(d.mod(i), weyl_apply(woI_dual, om), d.w_o(reflect(d.dual, om, i)),
                        q.word),
          false, (*rc)[i - 1] - q.nu[i - 1]);
    }
  } else {
    for (int i = 1; i <= c.rank; ++i) {
      Weight om = d.om(i);
      add_trail_rows(
          sys,
          cached_trails(d.mod(i), weyl_apply(woI_dual, om), d.w_o(reflect(d.dual, om, i)),
                        q.word),
          true, 0);
    }
    for (int j = 1; j <= c.rank; ++j) {
      IntVec row(nvars, 0);
      for (int k = 0; k < nvars; ++k)
        if (q.word[k] == j) row[k] = 1;
      sys.add_eq(std::move(row), (*rc)[j - 1]);
    }
    for (int k = 0; k < nvars; ++k) {
      IntVec row(nvars, 0);
      row[k] = -1;
      for (int l = k + 1; l < nvars; ++l) row[l] -= c.entry(q.word[k], q.word[l]);
      sys.add_ge(std::move(row), -q.nu[q.word[k] - 1]);
    }
  }
  sys.canonicalize();
  return sys;
}

Int reduction_count(const ReductionQuery& q) { return count_lattice(build_reduction_system(q)); }

Word reduction_pq_word(int p, int q) {
  Word word;
  for (int row = 0; row < p; ++row)
    for (int col = 0; col < q; ++col) word.push_back(p - row + col);
  return word;
}

IneqSystem reduction_pq(int p, int q, const Weight& nu, const Weight& beta, bool string_method) {
  int r = p + q - 1;
  CartanData c = cartan(Family::A, r);
  if (static_cast<int>(nu.size()) != r || static_cast<int>(beta.size()) != r)
    throw InputError("weight rank mismatch for the p x q reduction");
  if (!is_dominant(nu)) throw InputError("reduction needs nu dominant");
  int n = p * q;
  auto vid = [&](int i, int j) { return (i - 1) * q + (j - 1); };
  auto in_range = [&](int i, int j) { return i >= 1 && i <= p && j >= 1 && j <= q; };
  Weight diff = weight_sub(nu, beta);
  auto rc = root_coords_integral(c, diff);
  if (!rc) return IneqSystem::infeasible(n);

  IneqSystem sys;
  sys.num_vars = n;
  auto add_terms = [&](const std::vector<std::tuple<int, int, Int>>& terms, Int rhs, bool eq) {
    IntVec row(n, 0);
    for (const auto& [i, j, coeff] : terms)
      if (in_range(i, j)) row[vid(i, j)] += coeff;
    if (eq)
      sys.add_eq(std::move(row), rhs);
    else
      sys.add_ge(std::move(row), rhs);
  };

  if (!string_method) {
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= q; ++j) add_terms({{i, j, 1}}, 0, false);
    // (2) sum_{i<=l, j<=p+q-l} t_ij = (nu-beta)(omega_l^vee)
    for (int l = 1; l <= r; ++l) {
      std::vector<std::tuple<int, int, Int>> terms;
      for (int i = 1; i <= std::min(p, l); ++i)
        for (int j = 1; j <= std::min(q, p + q - l); ++j) terms.push_back({i, j, 1});
      add_terms(terms, (*rc)[l - 1], true);
    }
    // (3)
    for (int i = 1; i < p; ++i)
      for (int j = 1; j <= q; ++j) {
        std::vector<std::tuple<int, int, Int>> terms;
        for (int k = 0; k <= q; ++k) {
          terms.push_back({i, j + k, -1});
          terms.push_back({i + 1, j + k + 1, 1});
        }
        add_terms(terms, -nu[i - 1], false);
      }
    add_terms({{p, q, -1}}, -nu[p - 1], false);
    for (int j = 1; j < q; ++j)
      for (int i = 1; i <= p; ++i) {
        std::vector<std::tuple<int, int, Int>> terms;
        for (int k = 0; k <= p; ++k) {
          terms.push_back({i + k, j, -1});
          terms.push_back({i + k + 1, j + 1, 1});
        }
        add_terms(terms, -nu[p + q - j - 1], false);
      }
  } else {
    // (1) plane partition
    for (int i = 1; i <= p; ++i)
      for (int j = 1; j <= q; ++j) {
        add_terms({{i, j, 1}, {i + 1, j, -1}}, 0, false);
        add_terms({{i, j, 1}, {i, j + 1, -1}}, 0, false);
      }
    // (2) diagonal sums
    for (int l = 1; l <= r; ++l) {
      std::vector<std::tuple<int, int, Int>> terms;
      for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j)
          if (j - i == l - p) terms.push_back({i, j, 1});
      add_terms(terms, (*rc)[l - 1], true);
    }
    // (3), reading the printed double minus as a single subtraction
    for (int l = 1; l <= r; ++l)
      for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
          if (j - i != l - p) continue;
          std::vector<std::tuple<int, int, Int>> terms{{i, j, -1}};
          for (int k = 1; k <= std::max(p, q); ++k) {
            terms.push_back({i + k, j + k, -2});
            terms.push_back({i + k - 1, j + k, 1});
            terms.push_back({i + k, j + k - 1, 1});
          }
          add_terms(terms, -nu[l - 1], false);
        }
  }
  sys.canonicalize();
  return sys;
}

// ---------------------------------------------------------------------------
// tropical Plucker coordinates

PluckerTuple plucker_coordinates(const CartanData& c, const Word& i, const IntVec& t,
                                 ParamSide side) {
  if (!is_reduced_word(c, i) || !(weyl_from_word(c, i) == longest_element(c)))
    throw InputError("word must be a reduced word of the longest element");
  if (t.size() != i.size()) throw InputError("parameter count does not match the word");
  if (side == ParamSide::Lusztig) {
    for (Int v : t)
      if (v < 0) throw InputError("Lusztig parameters must be nonnegative");
  } else {
    if (!in_string_cone(c, i, t)) throw InputError("string parameters must lie in the cone");
  }

  PluckerTuple out;
  out.dual = langlands_dual(c);
  const CartanData& dual = out.dual;
  WeylElement wo = longest_element(dual);
  out.orbit.resize(c.rank);
  out.derived.resize(c.rank);

  // orbit coordinates
  for (int fi = 1; fi <= c.rank; ++fi) {
    Weight om = fundamental_weight(dual, fi);
    std::set<Weight> orbit;
    for (const auto& w : weyl_group_elements(dual)) orbit.insert(weyl_apply(w, om));
    for (const Weight& gamma : orbit) {
      SFValue v = SFValue::tropical_infinity();
      if (side == ParamSide::Lusztig) {
        v = trail_min_tropical(cached_trails(cached_module(dual, fi), om, gamma, i), t, false);
      } else {
        int fs = star(c, fi);
        const FundModule& mod = cached_module(dual, fs);
        v = trail_min_tropical(cached_trails(mod, weight_neg(gamma), weight_neg(om), i), t, true);
      }
      out.orbit[fi - 1][gamma] = v;
    }
    // normalization
    Weight norm_at = side == ParamSide::Lusztig ? om : weyl_apply(wo, om);
    if (!(out.orbit[fi - 1].at(norm_at) == SFValue::tropical(0)))
      throw ComputeError("Plucker normalization coordinate is not 0");
  }

  // derived coordinates M_{s_i omega_i^vee, gamma} via the tropicalized
  // subflag-minor formula; the boundary value at gamma = omega is +infinity
  for (int fi = 1; fi <= c.rank; ++fi) {
    Weight om = fundamental_weight(dual, fi);
    for (const auto& [gamma, mval] : out.orbit[fi - 1]) {
      if (gamma == om) {
        out.derived[fi - 1][gamma] = SFValue::tropical_infinity();
        continue;
      }
      auto u = orbit_witness(dual, om, gamma);
      if (!u) throw ComputeError("orbit coordinate outside the orbit");
      Word uw = canonical_reduced_word(dual, *u);
      if (uw.back() != fi) throw ComputeError("minimal representative does not end in i");
      SFValue acc = SFValue::tropical_infinity();
      WeylElement pre = weyl_identity(dual);
      for (size_t k = 0; k < uw.size(); ++k) {
        WeylElement pre_next = weyl_mul(pre, weyl_simple(dual, uw[k]));
        if (uw[k] == fi) {
          // term: 1 / (M_{om, pre_next om} M_{om, pre om}) * prod_{j != fi} M_{om_j, pre_next om_j}^{-a^vee(j, fi)}
          SFValue term = sf_inv(sf_mul(out.orbit[fi - 1].at(weyl_apply(pre_next, om)),
                                       out.orbit[fi - 1].at(weyl_apply(pre, om))));
          for (int j = 1; j <= c.rank; ++j) {
            if (j == fi) continue;
            int e = -dual.entry(j, fi);
            if (e == 0) continue;
            const SFValue& mj =
                out.orbit[j - 1].at(weyl_apply(pre_next, fundamental_weight(dual, j)));
            for (int rep = 0; rep < e; ++rep) term = sf_mul(term, mj);
          }
          acc = sf_add(acc, term);
        }
        pre = pre_next;
      }
      out.derived[fi - 1][gamma] = sf_mul(mval, acc);
    }
  }
  return out;
}

}  // namespace itrails
