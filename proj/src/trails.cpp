#include "itrails/trails.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace itrails {

Trail trail_from_weights(const CartanData& cartan, const Word& word,
                         std::vector<Weight> weights) {
  Trail t;
  t.word = word;
  t.weights = std::move(weights);
  size_t l = word.size();
  t.c.resize(l);
  t.d.resize(l);
  for (size_t k = 0; k < l; ++k) {
    int i = word[k];
    Int lo = t.weights[k][i - 1], hi = t.weights[k + 1][i - 1];
    if ((lo - hi) % 2 != 0 || (lo + hi) % 2 != 0)
      throw ComputeError("trail statistics are not integral");
    t.c[k] = (lo - hi) / 2;
    t.d[k] = (lo + hi) / 2;
  }
  return t;
}

namespace {

// columns of the identity on the weight space V(delta)
RatMat space_columns(const FundModule& m, const Weight& w) {
  auto [b, e] = m.space(w);
  RatMat cols(m.dim, e - b);
  for (int t = b; t < e; ++t) cols.at(t, t - b) = 1;
  return cols;
}

RatMat sparse_apply_mat(const SparseMat& s, const RatMat& x) {
  RatMat out(s.rows, x.cols);
  for (int c = 0; c < s.cols && c < x.rows; ++c)
    for (const auto& [r, v] : s.col[c])
      for (int j = 0; j < x.cols; ++j) {
        const Rat& xv = x.at(c, j);
        if (xv != 0) out.at(r, j) += v * xv;
      }
  return out;
}

int max_power(const FundModule& m, char gen, int i) {
  return static_cast<int>((gen == 'e' ? m.e_pow : m.f_pow)[i - 1].size()) - 1;
}

struct Dfs {
  const FundModule& m;
  const CartanData& c;
  const Word& word;
  Weight target;  // far endpoint to reach
  bool use_bounds = false;
  std::vector<Weight> lower, upper;
  std::vector<std::vector<int>> letter_count_prefix;  // occurrences of each letter in word[0..k)
  std::vector<Trail> out;
  bool fform = false;

  Dfs(const FundModule& mm, const Word& w) : m(mm), c(mm.cartan), word(w) {}

  bool weight_bounds_ok(int k, const Weight& wgt) const {
    if (!use_bounds) return true;
    return dominance_geq(c, wgt, lower[k]) && dominance_geq(c, upper[k], wgt);
  }

  // can target - wgt still be written as sum over the unused part of the word?
  bool reachable(int unused_end, const Weight& wgt) const {
    auto rc = root_coords_integral(c, fform ? weight_sub(wgt, target) : weight_sub(target, wgt));
    if (!rc) return false;
    for (int j = 1; j <= c.rank; ++j) {
      Int need = (*rc)[j - 1];
      if (need < 0) return false;
      int avail = letter_count_prefix[unused_end][j - 1];
      int cap = max_power(m, fform ? 'f' : 'e', j);
      if (need > static_cast<Int>(avail) * cap) return false;
    }
    return true;
  }

  // e-form: walk k = l..1 keeping the image of V(delta) under e_{i_k}^{(c_k)} ... e_{i_l}^{(c_l)}
  void run_e(int k, const Weight& wgt, const RatMat& img, std::vector<Weight>& weights) {
    if (k == 0) {
      if (wgt == target && !img.is_zero()) {
        std::vector<Weight> ws(weights.rbegin(), weights.rend());
        out.push_back(trail_from_weights(c, word, std::move(ws)));
      }
      return;
    }
    int i = word[k - 1];
    int cap = max_power(m, 'e', i);
    for (int ck = 0; ck <= cap; ++ck) {
      Weight up = wgt;
      for (int t = 0; t < c.rank; ++t) up[t] += ck * c.entry(t + 1, i);
      if (!m.has_weight(up)) {
        if (ck == 0) continue;  // zero step keeps the weight
        break;                  // higher powers leave the weight polytope too
      }
      if (!weight_bounds_ok(k - 1, up) || !reachable(k - 1, up)) continue;
      RatMat next = ck == 0 ? img : sparse_apply_mat(m.e_divided(i, ck), img);
      if (next.is_zero()) continue;
      weights.push_back(up);
      run_e(k - 1, up, next, weights);
      weights.pop_back();
    }
  }

  // f-form: walk k = 1..l keeping the image of V(gamma) under f_{i_k}^{(c_k)} ... f_{i_1}^{(c_1)}
  void run_f(int k, const Weight& wgt, const RatMat& img, std::vector<Weight>& weights) {
    int l = static_cast<int>(word.size());
    if (k == l) {
      if (wgt == target && !img.is_zero())
        out.push_back(trail_from_weights(c, word, weights));
      return;
    }
    int i = word[k];
    int cap = max_power(m, 'f', i);
    for (int ck = 0; ck <= cap; ++ck) {
      Weight down = wgt;
      for (int t = 0; t < c.rank; ++t) down[t] -= ck * c.entry(t + 1, i);
      if (!m.has_weight(down)) {
        if (ck == 0) continue;
        break;
      }
      if (!weight_bounds_ok(k + 1, down) || !reachable_f(k + 1, down)) continue;
      RatMat next = ck == 0 ? img : sparse_apply_mat(m.f_divided(i, ck), img);
      if (next.is_zero()) continue;
      weights.push_back(down);
      run_f(k + 1, down, next, weights);
      weights.pop_back();
    }
  }

  bool reachable_f(int used, const Weight& wgt) const {
    auto rc = root_coords_integral(c, weight_sub(wgt, target));
    if (!rc) return false;
    int l = static_cast<int>(word.size());
    for (int j = 1; j <= c.rank; ++j) {
      Int need = (*rc)[j - 1];
      if (need < 0) return false;
      int avail = letter_count_prefix[l][j - 1] - letter_count_prefix[used][j - 1];
      if (need > static_cast<Int>(avail) * max_power(m, 'f', j)) return false;
    }
    return true;
  }
};

std::mutex g_trails_mutex;
std::map<std::tuple<std::vector<std::vector<int>>, Weight, Weight, Weight, Word>,
         std::unique_ptr<std::vector<Trail>>>
    g_trails_cache;

}  // namespace

std::vector<Trail> enumerate_trails(const FundModule& m, const Weight& gamma, const Weight& delta,
                                    const Word& word, TrailCondition cond) {
  const CartanData& c = m.cartan;
  if (!m.has_weight(gamma) || !m.has_weight(delta))
    throw InputError("trail endpoints must be weights of the module");
  for (int i : word)
    if (i < 1 || i > c.rank) throw InputError("word letter out of range");
  if (word.empty()) {
    std::vector<Trail> out;
    if (gamma == delta) out.push_back(trail_from_weights(c, word, {gamma}));
    return out;
  }

  Dfs dfs(m, word);
  int l = static_cast<int>(word.size());
  dfs.letter_count_prefix.assign(l + 1, std::vector<int>(c.rank, 0));
  for (int k = 0; k < l; ++k) {
    dfs.letter_count_prefix[k + 1] = dfs.letter_count_prefix[k];
    dfs.letter_count_prefix[k + 1][word[k] - 1] += 1;
  }
  // the bound chains are proved for extremal endpoints of V_lambda and reduced words
  bool extremal = orbit_witness(c, m.highest, gamma).has_value() &&
                  orbit_witness(c, m.highest, delta).has_value();
  if (extremal && is_reduced_word(c, word)) {
    auto [lo, hi] = trail_bounds(m, gamma, delta, word);
    dfs.use_bounds = true;
    dfs.lower = std::move(lo);
    dfs.upper = std::move(hi);
  }

  std::vector<Weight> weights;
  if (cond == TrailCondition::EImage) {
    dfs.target = gamma;
    weights.push_back(delta);
    dfs.run_e(l, delta, space_columns(m, delta), weights);
  } else {
    dfs.fform = true;
    dfs.target = delta;
    weights.push_back(gamma);
    dfs.run_f(0, gamma, space_columns(m, gamma), weights);
  }
  std::sort(dfs.out.begin(), dfs.out.end(),
            [](const Trail& a, const Trail& b) { return a.c < b.c; });
  return dfs.out;
}

std::vector<Trail> extremal_trails(const FundModule& m, const Weight& gamma, const Weight& delta,
                                   const Word& word) {
  const CartanData& c = m.cartan;
  auto u = orbit_witness(c, m.highest, gamma);
  auto v = orbit_witness(c, m.highest, delta);
  if (!u || !v) throw InputError("extremal_trails needs extremal endpoints");
  WeylElement w = weyl_mul(*u, weyl_inverse(c, *v));
  int p = weyl_length(c, w);
  if (p != weyl_length(c, *v) - weyl_length(c, *u)) return {};

  std::vector<Trail> out;
  int l = static_cast<int>(word.size());
  std::vector<int> chosen;
  // subwords of `word` that are reduced words for u v^{-1}
  auto rec = [&](auto&& self, int pos, const WeylElement& y, int q) -> void {
    if (q == p) {
      if (!(y == w)) return;
      std::vector<Weight> weights{gamma};
      Weight cur = gamma;
      size_t ci = 0;
      for (int k = 1; k <= l; ++k) {
        if (ci < chosen.size() && chosen[ci] == k) {
          cur = reflect(c, cur, word[k - 1]);
          ++ci;
        }
        weights.push_back(cur);
      }
      if (cur != delta) throw ComputeError("extremal subword does not reach delta");
      out.push_back(trail_from_weights(c, word, std::move(weights)));
      return;
    }
    if (pos > l || p - q > l - pos + 1) return;
    // take word[pos-1] if it extends a reduced word
    int letter = word[pos - 1];
    if (!is_right_descent(y, letter)) {
      chosen.push_back(pos);
      self(self, pos + 1, weyl_mul(y, weyl_simple(c, letter)), q + 1);
      chosen.pop_back();
    }
    self(self, pos + 1, y, q);
  };
  rec(rec, 1, weyl_identity(c), 0);
  std::sort(out.begin(), out.end(), [](const Trail& a, const Trail& b) { return a.c < b.c; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Trail& a, const Trail& b) { return a.weights == b.weights; }),
            out.end());
  return out;
}

std::pair<std::vector<Weight>, std::vector<Weight>> trail_bounds(const FundModule& m,
                                                                 const Weight& gamma,
                                                                 const Weight& delta,
                                                                 const Word& word) {
  const CartanData& c = m.cartan;
  int l = static_cast<int>(word.size());
  std::vector<Weight> lower(l + 1), upper(l + 1);
  lower[0] = gamma;
  for (int k = 1; k <= l; ++k) {
    const Weight& prev = lower[k - 1];
    lower[k] = prev[word[k - 1] - 1] > 0 ? reflect(c, prev, word[k - 1]) : prev;
  }
  upper[l] = delta;
  for (int k = l; k >= 1; --k) {
    const Weight& nxt = upper[k];
    upper[k - 1] = nxt[word[k - 1] - 1] < 0 ? reflect(c, nxt, word[k - 1]) : nxt;
  }
  return {lower, upper};
}

std::vector<int> splitting_indices(const FundModule& m, const Weight& gamma, const Weight& delta,
                                   const Word& word) {
  const CartanData& c = m.cartan;
  int l = static_cast<int>(word.size());
  // prefix chain from gamma and suffix chain from delta with monotonicity flags
  std::vector<Weight> pre(l + 1), suf(l + 2);
  std::vector<bool> pre_ok(l + 1), suf_ok(l + 2);
  pre[0] = gamma;
  pre_ok[0] = true;
  for (int k = 1; k <= l; ++k) {
    pre_ok[k] = pre_ok[k - 1] && pre[k - 1][word[k - 1] - 1] >= 0;
    pre[k] = reflect(c, pre[k - 1], word[k - 1]);
  }
  suf[l + 1] = delta;
  suf_ok[l + 1] = true;
  for (int k = l; k >= 1; --k) {
    suf_ok[k] = suf_ok[k + 1] && suf[k + 1][word[k - 1] - 1] <= 0;
    suf[k] = reflect(c, suf[k + 1], word[k - 1]);
  }
  std::vector<int> out;
  for (int k = 0; k <= l; ++k) {
    if (!pre_ok[k] || !suf_ok[k + 1]) continue;
    Weight diff = weight_sub(suf[k + 1], pre[k]);
    bool simple = false;
    for (int i = 1; i <= c.rank && !simple; ++i)
      if (diff == simple_root_weight(c, i)) simple = true;
    if (simple) out.push_back(k);
  }
  return out;
}

const std::vector<Trail>& cached_trails(const FundModule& m, const Weight& gamma,
                                        const Weight& delta, const Word& word) {
  std::lock_guard<std::mutex> lock(g_trails_mutex);
  auto key = std::make_tuple(m.cartan.matrix, m.highest, gamma, delta, word);
  auto it = g_trails_cache.find(key);
  if (it != g_trails_cache.end()) return *it->second;
  auto trails = std::make_unique<std::vector<Trail>>(enumerate_trails(m, gamma, delta, word));
  auto* p = trails.get();
  g_trails_cache.emplace(std::move(key), std::move(trails));
  return *p;
}

}  // namespace itrails
