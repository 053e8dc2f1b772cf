#include "itrails/param.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace itrails {

namespace {

constexpr Int kNoValue = std::numeric_limits<Int>::max();

void check_reduced_wo(const CartanData& c, const Word& w) {
  if (!is_reduced_word(c, w)) throw InputError("word is not reduced");
  if (!(weyl_from_word(c, w) == longest_element(c)))
    throw InputError("word is not a reduced word of the longest element");
}

Int trail_form_min(const std::vector<Trail>& trails, const IntVec& t, bool use_d) {
  if (trails.empty()) throw ComputeError("empty trail set in a trail-formula minimum");
  Int best = kNoValue;
  for (const auto& tr : trails) {
    const IntVec& coeff = use_d ? tr.d : tr.c;
    Int s = 0;
    for (size_t k = 0; k < coeff.size(); ++k) s = checked_add(s, checked_mul(coeff[k], t[k]));
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

std::vector<SFValue> transition_along(const CartanData& c, ParamSide side, const Word& from,
                                      const std::vector<BraidMove>& path,
                                      const std::vector<SFValue>& t) {
  if (t.size() != from.size()) throw InputError("parameter count does not match the word");
  SemifieldTag tag = t.empty() ? SemifieldTag::Tropical : t.front().tag;
  bool dualize = (tag == SemifieldTag::Tropical);
  MoveSign sign = side == ParamSide::Lusztig ? MoveSign::Positive : MoveSign::Negative;
  Word word = from;
  std::vector<SFValue> cur = t;
  for (const auto& mv : path) {
    int x = word[mv.pos], y = word[mv.pos + 1];
    int axy = dualize ? c.entry(y, x) : c.entry(x, y);
    int ayx = dualize ? c.entry(x, y) : c.entry(y, x);
    std::vector<SFValue> seg(cur.begin() + mv.pos, cur.begin() + mv.pos + mv.d);
    auto out = rank2_transition(axy, ayx, sign, seg);
    std::copy(out.begin(), out.end(), cur.begin() + mv.pos);
    word = apply_move(c, word, mv);
  }
  return cur;
}

std::vector<SFValue> transition(const CartanData& c, ParamSide side, const Word& from,
                                const Word& to, const std::vector<SFValue>& t) {
  if (from == to) {
    if (t.size() != from.size()) throw InputError("parameter count does not match the word");
    return t;
  }
  return transition_along(c, side, from, tits_path(c, from, to), t);
}

IntVec lusztig_to_string(const CartanData& c, const Word& i, const Word& iprime,
                         const IntVec& tprime) {
  check_reduced_wo(c, i);
  check_reduced_wo(c, iprime);
  if (tprime.size() != iprime.size()) throw InputError("parameter count does not match the word");
  for (Int v : tprime)
    if (v < 0) throw InputError("Lusztig parameters must be nonnegative");
  CartanData dual = langlands_dual(c);
  WeylElement wo = longest_element(dual);
  int m = static_cast<int>(i.size());
  IntVec out(m, 0);
  WeylElement prefix = weyl_identity(dual);
  for (int k = 1; k <= m; ++k) {
    int fund = i[k - 1];
    const FundModule& mod = cached_module(dual, fund);
    Weight om = fundamental_weight(dual, fund);
    Weight delta = weyl_apply(wo, om);
    Weight g1 = weyl_apply(prefix, om);
    prefix = weyl_mul(prefix, weyl_simple(dual, fund));
    Weight g2 = weyl_apply(prefix, om);
    Int m1 = trail_form_min(cached_trails(mod, g1, delta, iprime), tprime, false);
    Int m2 = trail_form_min(cached_trails(mod, g2, delta, iprime), tprime, false);
    out[k - 1] = m1 - m2;
  }
  return out;
}

Int l_i_value(const CartanData& c, int i0, const Word& i, const IntVec& t) {
  check_reduced_wo(c, i);
  if (t.size() != i.size()) throw InputError("parameter count does not match the word");
  for (Int v : t)
    if (v < 0) throw InputError("Lusztig parameters must be nonnegative");
  CartanData dual = langlands_dual(c);
  const FundModule& mod = cached_module(dual, i0);
  Weight om = fundamental_weight(dual, i0);
  Weight gamma = reflect(dual, om, i0);
  Weight delta = weyl_apply(longest_element(dual), om);
  const auto& trails = cached_trails(mod, gamma, delta, i);
  if (trails.empty()) throw ComputeError("no trails for the l_i formula");
  // beta_k(omega_{i0}^vee) for beta_k = s_{i_1}...s_{i_{k-1}} alpha_{i_k}, in g
  int m = static_cast<int>(i.size());
  IntVec beta_coeff(m, 0);
  WeylElement prefix = weyl_identity(c);
  for (int k = 1; k <= m; ++k) {
    Weight beta = weyl_apply(prefix, simple_root_weight(c, i[k - 1]));
    Rat coeff = pair_fundamental_coweight(c, beta, i0);
    if (coeff.get_den() != 1) throw ComputeError("non-integer coweight pairing");
    beta_coeff[k - 1] = static_cast<Int>(coeff.get_num().get_si());
    prefix = weyl_mul(prefix, weyl_simple(c, i[k - 1]));
  }
  Int best = std::numeric_limits<Int>::min();
  for (const auto& tr : trails) {
    Int s = 0;
    for (int k = 0; k < m; ++k)
      s = checked_add(s, checked_mul(beta_coeff[k] - tr.c[k], t[k]));
    best = std::max(best, s);
  }
  return best;
}

std::pair<Int, Int> endpoints_from_string(const CartanData& c, const Word& i, const Word& iprime,
                                          const IntVec& t) {
  check_reduced_wo(c, i);
  check_reduced_wo(c, iprime);
  if (t.size() != i.size()) throw InputError("parameter count does not match the word");
  CartanData dual = langlands_dual(c);
  int m = static_cast<int>(i.size());

  int first = iprime.front();
  const FundModule& mod = cached_module(dual, first);
  Weight om = fundamental_weight(dual, first);
  Weight gamma = reflect(dual, om, first);
  Weight delta = weyl_apply(longest_element(dual), om);
  const auto& trails = cached_trails(mod, gamma, delta, i);
  Int t1 = -trail_form_min(trails, t, true);

  int last = iprime.back();
  Int tm = kNoValue;
  bool found = false;
  for (int k = 1; k <= m; ++k) {
    if (star(c, i[k - 1]) != last) continue;
    found = true;
    Int s = t[k - 1];
    for (int l = k + 1; l <= m; ++l)
      s = checked_add(s, checked_mul(c.entry(i[k - 1], i[l - 1]), t[l - 1]));
    tm = found && tm != kNoValue ? std::max(tm, s) : s;
  }
  if (!found) throw ComputeError("no position with i_k^* equal to the last letter of i'");
  return {t1, tm};
}

std::vector<std::vector<int>> reduced_subwords(const CartanData& c, const Word& word,
                                               const WeylElement& u) {
  int p = weyl_length(c, u);
  int l = static_cast<int>(word.size());
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int pos, const WeylElement& y, int q) -> void {
    if (q == p) {
      if (y == u) out.push_back(chosen);
      return;
    }
    if (pos > l || p - q > l - pos + 1) return;
    int letter = word[pos - 1];
    if (!is_right_descent(y, letter)) {
      chosen.push_back(pos);
      self(self, pos + 1, weyl_mul(y, weyl_simple(c, letter)), q + 1);
      chosen.pop_back();
    }
    self(self, pos + 1, y, q);
  };
  rec(rec, 1, weyl_identity(c), 0);
  return out;
}

namespace {

// rows of C_{i}(u, v): trails from u omega_{i0}^vee to v s_{i0} omega_{i0}^vee, d-form >= 0
void cone_rows(const CartanData& dual, const Word& word, const WeylElement& u,
               const WeylElement& v, int offset, IneqSystem& sys) {
  for (int i0 = 1; i0 <= dual.rank; ++i0) {
    const FundModule& mod = cached_module(dual, i0);
    Weight om = fundamental_weight(dual, i0);
    Weight gamma = weyl_apply(u, om);
    Weight delta = weyl_apply(v, reflect(dual, om, i0));
    for (const auto& tr : cached_trails(mod, gamma, delta, word)) {
      IntVec row(sys.num_vars, 0);
      for (size_t k = 0; k < word.size(); ++k) row[offset + k] = tr.d[k];
      sys.add_ge(std::move(row), 0);
    }
  }
}

struct FlagSegment {
  Word word;
  int offset;
  WeylElement u, v;  // w_o(I_{j-1}), w_o(I_j)
};

std::vector<FlagSegment> split_flag(const CartanData& c, const Word& i,
                                    const std::vector<std::vector<int>>& flag) {
  if (flag.empty()) throw InputError("split mode needs a flag of subsets");
  std::vector<int> full(c.rank);
  for (int k = 0; k < c.rank; ++k) full[k] = k + 1;
  if (std::set<int>(flag.back().begin(), flag.back().end()) !=
      std::set<int>(full.begin(), full.end()))
    throw InputError("flag must end at the full index set");
  std::vector<FlagSegment> segs;
  WeylElement prev = weyl_identity(c);
  int prev_len = 0, offset = 0;
  for (const auto& I : flag) {
    WeylElement wi = longest_element_parabolic(c, I);
    int len = weyl_length(c, wi);
    FlagSegment seg;
    seg.offset = offset;
    seg.u = prev;
    seg.v = wi;
    seg.word = Word(i.begin() + offset, i.begin() + offset + (len - prev_len));
    // the segment must be a reduced word of w_o(I_{j-1})^{-1} w_o(I_j)
    WeylElement target = weyl_mul(weyl_inverse(c, prev), wi);
    if (!is_reduced_word(c, seg.word) || !(weyl_from_word(c, seg.word) == target))
      throw InputError("word is not a concatenation adapted to the flag");
    segs.push_back(seg);
    offset += len - prev_len;
    prev = wi;
    prev_len = len;
  }
  if (offset != static_cast<int>(i.size()))
    throw InputError("flag does not exhaust the word");
  return segs;
}

void fc_factor_rows(const CartanData& c, const Word& seg, int offset, IneqSystem& sys) {
  int l = static_cast<int>(seg.size());
  auto row_at = [&](std::initializer_list<std::pair<int, Int>> entries, Int rhs) {
    IntVec row(sys.num_vars, 0);
    for (const auto& [k, v] : entries) row[offset + k - 1] = v;
    sys.add_ge(std::move(row), rhs);
  };
  // (1) last variable nonnegative
  row_at({{l, 1}}, 0);
  // (2) A2 pairs
  for (int k1 = 1; k1 <= l; ++k1)
    for (int k2 = k1 + 1; k2 <= l; ++k2) {
      int a = seg[k1 - 1], b = seg[k2 - 1];
      if (a == b || c.entry(a, b) * c.entry(b, a) != 1) continue;
      bool clean = true;
      for (int k = k1 + 1; k < k2; ++k)
        if (seg[k - 1] == a || seg[k - 1] == b) clean = false;
      if (clean) row_at({{k1, 1}, {k2, -1}}, 0);
    }
  // (3) B2 triples j, i, j
  for (int k1 = 1; k1 <= l; ++k1)
    for (int k2 = k1 + 1; k2 <= l; ++k2)
      for (int k3 = k2 + 1; k3 <= l; ++k3) {
        int j = seg[k1 - 1], i = seg[k2 - 1];
        if (seg[k3 - 1] != j || i == j) continue;
        if (c.entry(i, j) * c.entry(j, i) != 2) continue;
        bool clean = true;
        for (int k = k1 + 1; k < k3; ++k)
          if (k != k2 && c.entry(seg[k - 1], j) != 0) clean = false;
        if (!clean) continue;
        Int aij = std::abs(c.entry(i, j));
        row_at({{k1, aij}, {k2, -1}}, 0);
        row_at({{k2, 1}, {k3, -aij}}, 0);
      }
  // (4) G2 quintuples j, i, j, i, j
  for (int k1 = 1; k1 <= l; ++k1)
    for (int k2 = k1 + 1; k2 <= l; ++k2)
      for (int k3 = k2 + 1; k3 <= l; ++k3)
        for (int k4 = k3 + 1; k4 <= l; ++k4)
          for (int k5 = k4 + 1; k5 <= l; ++k5) {
            int j = seg[k1 - 1], i = seg[k2 - 1];
            if (i == j || seg[k3 - 1] != j || seg[k4 - 1] != i || seg[k5 - 1] != j) continue;
            if (c.entry(i, j) * c.entry(j, i) != 3) continue;
            Int aij = std::abs(c.entry(i, j));
            row_at({{k1, 2 * aij}, {k2, -2}}, 0);
            row_at({{k2, 2}, {k3, -aij}}, 0);
            row_at({{k3, aij}, {k4, -2}}, 0);
            row_at({{k4, 2}, {k5, -2 * aij}}, 0);
          }
}

}  // namespace

IneqSystem string_cone(const CartanData& c, const Word& i, ConeMode mode,
                       const std::vector<std::vector<int>>& flag) {
  check_reduced_wo(c, i);
  CartanData dual = langlands_dual(c);
  IneqSystem sys;
  sys.num_vars = static_cast<int>(i.size());
  switch (mode) {
    case ConeMode::General:
      cone_rows(dual, i, weyl_identity(dual), longest_element(dual), 0, sys);
      break;
    case ConeMode::Split: {
      // the flag elements are the same abstract Weyl elements; rebuild them over the
      // dual Cartan matrix before acting on coweights
      for (const auto& seg : split_flag(c, i, flag))
        cone_rows(dual, seg.word, weyl_from_word(dual, canonical_reduced_word(c, seg.u)),
                  weyl_from_word(dual, canonical_reduced_word(c, seg.v)), seg.offset, sys);
      break;
    }
    case ConeMode::FullyCommutative: {
      auto segs = split_flag(c, i, flag);
      std::set<int> prev;
      for (size_t j = 0; j < segs.size(); ++j) {
        std::set<int> curset(flag[j].begin(), flag[j].end());
        if (curset.size() != prev.size() + 1)
          throw InputError("fully-commutative mode needs single-step flag growth");
        WeylElement factor = weyl_mul(weyl_inverse(c, segs[j].u), segs[j].v);
        if (!is_fully_commutative(c, factor))
          throw InputError("flag factor is not fully commutative");
        fc_factor_rows(c, segs[j].word, segs[j].offset, sys);
        prev = std::move(curset);
      }
      break;
    }
    case ConeMode::TypeA: {
      CartanData std_a = cartan(Family::A, c.rank);
      if (c.matrix != std_a.matrix) throw InputError("typeA mode needs a type A Cartan matrix");
      int m = static_cast<int>(i.size());
      for (int i0 = 1; i0 <= c.rank; ++i0) {
        WeylElement u = minuscule_coset_rep(c, i0);
        for (const auto& pos : reduced_subwords(c, i, u)) {
          IntVec row(m, 0);
          WeylElement pre = weyl_identity(c);
          size_t j = 0;  // count of chosen positions passed
          for (int k = 1; k <= m; ++k) {
            if (j < pos.size() && pos[j] == k) {
              pre = weyl_mul(pre, weyl_simple(c, i[k - 1]));
              ++j;
              continue;
            }
            Weight moved = weyl_apply(pre, simple_root_weight(c, i[k - 1]));
            Rat coeff = pair_fundamental_coweight(c, moved, i0);
            if (coeff.get_den() != 1) throw ComputeError("non-integer coweight pairing");
            row[k - 1] = static_cast<Int>(coeff.get_num().get_si());
          }
          sys.add_ge(std::move(row), 0);
        }
      }
      break;
    }
  }
  sys.canonicalize();
  return sys;
}

bool in_string_cone(const CartanData& c, const Word& i, const IntVec& t) {
  return string_cone(c, i, ConeMode::General).satisfied(t);
}

IntVec crystal_apply(const CartanData& c, const Word& i, const IntVec& t, int i0, Int n) {
  if (t.size() != i.size()) throw InputError("parameter count does not match the word");
  if (n < 1) throw InputError("crystal power must be positive");
  int m = static_cast<int>(i.size());
  // T_k^vee(t) = -t_k - sum_{l>k} a_{i_k, i_l} t_l
  IntVec tv(m, 0);
  for (int k = 1; k <= m; ++k) {
    Int s = -t[k - 1];
    for (int l = k + 1; l <= m; ++l)
      s = checked_add(s, -checked_mul(c.entry(i[k - 1], i[l - 1]), t[l - 1]));
    tv[k - 1] = s;
  }
  auto min_over = [&](int from, int to_excl) -> std::optional<Int> {
    std::optional<Int> best;
    for (int l = from; l < to_excl; ++l) {
      if (i[l] != i0) continue;
      if (!best || tv[l] < *best) best = tv[l];
    }
    return best;
  };
  auto opt_min = [](std::optional<Int> a, std::optional<Int> b) -> std::optional<Int> {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  };
  auto shift = [&](std::optional<Int> a, Int d) -> std::optional<Int> {
    if (!a) return a;
    return checked_add(*a, d);
  };
  IntVec out = t;
  for (int k = 0; k < m; ++k) {
    if (i[k] != i0) continue;
    auto first = opt_min(min_over(0, k), shift(min_over(k, m), n));
    auto second = opt_min(min_over(0, k + 1), shift(min_over(k + 1, m), n));
    if (!first || !second) throw ComputeError("crystal formula minima are both empty");
    out[k] = checked_add(t[k], checked_add(*first, -*second));
  }
  return out;
}

std::vector<Rat> geom_crystal_apply(const CartanData& c, const Word& i,
                                    const std::vector<Rat>& t, int i0, const Rat& cc) {
  if (t.size() != i.size()) throw InputError("parameter count does not match the word");
  if (cc <= 0) throw InputError("scaling factor must be positive");
  for (const auto& x : t)
    if (x <= 0) throw InputError("geometric parameters must be positive");
  int m = static_cast<int>(i.size());
  // T_k = t_k^{-1} prod_{l>k} t_l^{-a_{i_l, i_k}}
  std::vector<Rat> tv(m);
  for (int k = 1; k <= m; ++k) {
    Rat v = Rat(1) / t[k - 1];
    for (int l = k + 1; l <= m; ++l) {
      int a = c.entry(i[l - 1], i[k - 1]);
      for (int rep = 0; rep < std::abs(a); ++rep) {
        if (a < 0)
          v *= t[l - 1];
        else
          v /= t[l - 1];
      }
    }
    tv[k - 1] = v;
  }
  std::vector<Rat> out = t;
  for (int k = 0; k < m; ++k) {
    if (i[k] != i0) continue;
    Rat before = 0, from_k = 0, upto_k = 0, after = 0;
    for (int l = 0; l < m; ++l) {
      if (i[l] != i0) continue;
      if (l < k) before += tv[l];
      if (l >= k) from_k += tv[l];
      if (l <= k) upto_k += tv[l];
      if (l > k) after += tv[l];
    }
    out[k] = t[k] * (before + cc * from_k) / (upto_k + cc * after);
  }
  return out;
}

}  // namespace itrails
