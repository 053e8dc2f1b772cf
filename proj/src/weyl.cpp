#include "itrails/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace itrails {

namespace {

bool root_is_negative(const IntVec& rc) {
  for (Int x : rc) {
    if (x < 0) return true;
    if (x > 0) return false;
  }
  return false;
}

IntVec flatten(const WeylElement& w) {
  IntVec key;
  for (const auto& col : w.rt) key.insert(key.end(), col.begin(), col.end());
  return key;
}

}  // namespace

WeylElement weyl_identity(const CartanData& c) {
  int r = c.rank;
  WeylElement w;
  w.wt.assign(r, IntVec(r, 0));
  w.rt.assign(r, IntVec(r, 0));
  for (int j = 0; j < r; ++j) {
    w.wt[j][j] = 1;
    w.rt[j][j] = 1;
  }
  return w;
}

WeylElement weyl_simple(const CartanData& c, int i) {
  int r = c.rank;
  WeylElement w = weyl_identity(c);
  // s_i(omega_j) = omega_j - delta_{ij} alpha_i;  s_i(alpha_j) = alpha_j - a(i,j) alpha_i
  for (int k = 1; k <= r; ++k) w.wt[i - 1][k - 1] -= c.entry(k, i);
  for (int j = 1; j <= r; ++j) w.rt[j - 1][i - 1] -= c.entry(i, j);
  return w;
}

WeylElement weyl_mul(const WeylElement& u, const WeylElement& v) {
  size_t r = u.wt.size();
  WeylElement w;
  w.wt.assign(r, IntVec(r, 0));
  w.rt.assign(r, IntVec(r, 0));
  for (size_t j = 0; j < r; ++j) {
    for (size_t k = 0; k < r; ++k) {
      Int cw = v.wt[j][k];
      if (cw != 0)
        for (size_t t = 0; t < r; ++t) w.wt[j][t] += cw * u.wt[k][t];
      Int cr = v.rt[j][k];
      if (cr != 0)
        for (size_t t = 0; t < r; ++t) w.rt[j][t] += cr * u.rt[k][t];
    }
  }
  return w;
}

WeylElement weyl_from_word(const CartanData& c, const Word& w) {
  WeylElement e = weyl_identity(c);
  for (int i : w) e = weyl_mul(e, weyl_simple(c, i));
  return e;
}

Weight weyl_apply(const WeylElement& w, const Weight& gamma) {
  size_t r = gamma.size();
  Weight out(r, 0);
  for (size_t j = 0; j < r; ++j) {
    if (gamma[j] == 0) continue;
    for (size_t t = 0; t < r; ++t) out[t] += gamma[j] * w.wt[j][t];
  }
  return out;
}

IntVec weyl_apply_root(const WeylElement& w, const IntVec& rc) {
  size_t r = rc.size();
  IntVec out(r, 0);
  for (size_t j = 0; j < r; ++j) {
    if (rc[j] == 0) continue;
    for (size_t t = 0; t < r; ++t) out[t] += rc[j] * w.rt[j][t];
  }
  return out;
}

bool is_right_descent(const WeylElement& w, int i) { return root_is_negative(w.rt[i - 1]); }

int weyl_length(const CartanData& c, const WeylElement& w) {
  WeylElement v = w;
  WeylElement id = weyl_identity(c);
  int len = 0;
  while (!(v == id)) {
    bool found = false;
    for (int i = 1; i <= c.rank; ++i) {
      if (is_right_descent(v, i)) {
        v = weyl_mul(v, weyl_simple(c, i));
        ++len;
        found = true;
        break;
      }
    }
    if (!found) throw ComputeError("no descent found; invalid Weyl element");
  }
  return len;
}

bool is_reduced_word(const CartanData& c, const Word& w) {
  WeylElement v = weyl_identity(c);
  for (int i : w) {
    if (i < 1 || i > c.rank) throw InputError("word letter out of range");
    if (is_right_descent(v, i)) return false;  // length would drop
    v = weyl_mul(v, weyl_simple(c, i));
  }
  return true;
}

Word canonical_reduced_word(const CartanData& c, const WeylElement& w) {
  // lexicographically smallest: peel smallest left descent, i.e. right descent of w^{-1}
  Word out;
  WeylElement v = w;
  WeylElement vinv = weyl_inverse(c, w);
  WeylElement id = weyl_identity(c);
  while (!(v == id)) {
    int pick = -1;
    for (int i = 1; i <= c.rank; ++i)
      if (is_right_descent(vinv, i)) {
        pick = i;
        break;
      }
    if (pick < 0) throw ComputeError("no left descent; invalid Weyl element");
    out.push_back(pick);
    WeylElement s = weyl_simple(c, pick);
    v = weyl_mul(s, v);
    vinv = weyl_mul(vinv, s);
  }
  return out;
}

WeylElement weyl_inverse(const CartanData& c, const WeylElement& w) {
  Word cw;
  WeylElement v = w;
  WeylElement id = weyl_identity(c);
  while (!(v == id)) {
    for (int i = 1; i <= c.rank; ++i) {
      if (is_right_descent(v, i)) {
        cw.push_back(i);
        v = weyl_mul(v, weyl_simple(c, i));
        break;
      }
    }
  }
  // w = e * s_{cw reversed...}: v*s_i strips from the right, so w = (... ) ; rebuild reversed
  WeylElement inv = weyl_identity(c);
  for (int i : cw) inv = weyl_mul(inv, weyl_simple(c, i));
  return inv;
}

WeylElement longest_element(const CartanData& c) {
  std::vector<int> all(c.rank);
  std::iota(all.begin(), all.end(), 1);
  return longest_element_parabolic(c, all);
}

WeylElement longest_element_parabolic(const CartanData& c, const std::vector<int>& I) {
  WeylElement w = weyl_identity(c);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : I) {
      if (!is_right_descent(w, i)) {
        w = weyl_mul(w, weyl_simple(c, i));
        progress = true;
      }
    }
  }
  return w;
}

namespace {

void reduced_words_rec(const CartanData& c, const WeylElement& w,
                       std::map<IntVec, std::vector<Word>>& memo, const WeylElement& id,
                       std::vector<Word>& out) {
  IntVec key = flatten(w);
  auto it = memo.find(key);
  if (it != memo.end()) {
    out = it->second;
    return;
  }
  if (w == id) {
    out = {Word{}};
    memo.emplace(std::move(key), out);
    return;
  }
  out.clear();
  for (int i = 1; i <= c.rank; ++i) {
    if (!is_right_descent(w, i)) continue;
    std::vector<Word> sub;
    reduced_words_rec(c, weyl_mul(w, weyl_simple(c, i)), memo, id, sub);
    for (auto word : sub) {
      word.push_back(i);
      out.push_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  memo.emplace(std::move(key), out);
}

}  // namespace

std::vector<Word> reduced_words(const CartanData& c, const WeylElement& w, int materialize_limit) {
  if (weyl_length(c, w) > materialize_limit)
    throw InputError("element too long to materialize R(w); use for_each_reduced_word");
  std::map<IntVec, std::vector<Word>> memo;
  std::vector<Word> out;
  reduced_words_rec(c, w, memo, weyl_identity(c), out);
  return out;
}

namespace {

bool for_each_rec(const CartanData& c, const WeylElement& w, const WeylElement& id, Word& prefix,
                  const std::function<bool(const Word&)>& fn) {
  if (w == id) {
    Word word(prefix.rbegin(), prefix.rend());
    return fn(word);
  }
  for (int i = 1; i <= c.rank; ++i) {
    if (!is_right_descent(w, i)) continue;
    prefix.push_back(i);
    bool keep = for_each_rec(c, weyl_mul(w, weyl_simple(c, i)), id, prefix, fn);
    prefix.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace

void for_each_reduced_word(const CartanData& c, const WeylElement& w,
                           const std::function<bool(const Word&)>& fn) {
  Word prefix;
  for_each_rec(c, w, weyl_identity(c), prefix, fn);
}

int braid_order(const CartanData& c, int i, int j) {
  int p = c.entry(i, j) * c.entry(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw InputError("Cartan product a_ij*a_ji > 3 is not finite type");
  }
}

Word apply_move(const CartanData& c, const Word& w, const BraidMove& mv) {
  int x = w[mv.pos], y = w[mv.pos + 1];
  if (braid_order(c, x, y) != mv.d) throw InputError("braid move order mismatch");
  Word out(w);
  for (int k = 0; k < mv.d; ++k) out[mv.pos + k] = (k % 2 == 0) ? y : x;
  return out;
}

namespace {

std::vector<BraidMove> moves_at(const CartanData& c, const Word& w) {
  std::vector<BraidMove> out;
  int l = static_cast<int>(w.size());
  for (int pos = 0; pos < l - 1; ++pos) {
    int x = w[pos], y = w[pos + 1];
    if (x == y) continue;
    int d = braid_order(c, x, y);
    if (pos + d > l) continue;
    bool ok = true;
    for (int k = 0; k < d; ++k)
      if (w[pos + k] != ((k % 2 == 0) ? x : y)) ok = false;
    if (ok) out.push_back({pos, d});
  }
  return out;
}

}  // namespace

std::vector<BraidMove> tits_path(const CartanData& c, const Word& from, const Word& to) {
  if (!is_reduced_word(c, from) || !is_reduced_word(c, to))
    throw InputError("tits_path arguments must be reduced words");
  if (!(weyl_from_word(c, from) == weyl_from_word(c, to)))
    throw InputError("tits_path arguments are words for different elements");
  if (from == to) return {};
  // BFS over the reduced-word graph; moves explored in ascending position order
  std::map<Word, std::pair<Word, BraidMove>> parent;
  std::deque<Word> queue{from};
  parent.emplace(from, std::make_pair(Word{}, BraidMove{}));
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (const auto& mv : moves_at(c, cur)) {
      Word nxt = apply_move(c, cur, mv);
      if (parent.count(nxt)) continue;
      parent.emplace(nxt, std::make_pair(cur, mv));
      if (nxt == to) {
        std::vector<BraidMove> path;
        Word node = to;
        while (node != from) {
          auto& [prev, move] = parent.at(node);
          path.push_back(move);
          node = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(nxt);
    }
  }
  throw ComputeError("reduced-word graph is disconnected (should not happen)");
}

int star(const CartanData& c, int i) {
  WeylElement wo = longest_element(c);
  IntVec im = wo.rt[i - 1];  // root coords of w_o(alpha_i) = -alpha_{i*}
  for (int j = 0; j < c.rank; ++j) {
    IntVec neg(c.rank, 0);
    neg[j] = -1;
    if (im == neg) return j + 1;
  }
  throw ComputeError("w_o(alpha_i) is not minus a simple root");
}

Word word_star(const CartanData& c, const Word& w) {
  Word out(w);
  for (auto& x : out) x = star(c, x);
  return out;
}

Word word_reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_fully_commutative(const CartanData& c, const WeylElement& w) {
  // commutation class of one reduced word, scanning each member for a braid factor
  Word start = canonical_reduced_word(c, w);
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    int l = static_cast<int>(cur.size());
    for (int pos = 0; pos + 1 < l; ++pos) {
      int x = cur[pos], y = cur[pos + 1];
      if (x == y) continue;
      int d = braid_order(c, x, y);
      if (d >= 3 && pos + d <= l) {
        bool factor = true;
        for (int k = 0; k < d; ++k)
          if (cur[pos + k] != ((k % 2 == 0) ? x : y)) factor = false;
        if (factor) return false;
      }
      if (d == 2) {
        Word nxt(cur);
        std::swap(nxt[pos], nxt[pos + 1]);
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
  }
  return true;
}

WeylElement minuscule_coset_rep(const CartanData& c, int i) {
  WeylElement u = weyl_mul(weyl_simple(c, i), longest_element(c));
  // strip left descents from [1,r] \ {i}
  bool progress = true;
  while (progress) {
    progress = false;
    WeylElement uinv = weyl_inverse(c, u);
    for (int j = 1; j <= c.rank; ++j) {
      if (j == i) continue;
      if (is_right_descent(uinv, j)) {  // left descent j of u
        u = weyl_mul(weyl_simple(c, j), u);
        progress = true;
        break;
      }
    }
  }
  return u;
}

WeylElement minimal_coset_rep(const CartanData& c, const WeylElement& w, const Weight& dominant) {
  // strip right descents that stabilize the weight
  WeylElement u = w;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= c.rank; ++i) {
      if (dominant[i - 1] != 0) continue;  // s_i moves the weight
      if (is_right_descent(u, i)) {
        u = weyl_mul(u, weyl_simple(c, i));
        progress = true;
        break;
      }
    }
  }
  return u;
}

std::optional<WeylElement> orbit_witness(const CartanData& c, const Weight& dominant,
                                         const Weight& gamma) {
  // walk gamma up to the dominant chamber, recording reflections
  Weight g = gamma;
  Word word;
  while (true) {
    int neg = 0;
    for (int i = 1; i <= c.rank; ++i)
      if (g[i - 1] < 0) {
        neg = i;
        break;
      }
    if (neg == 0) break;
    g = reflect(c, g, neg);
    word.push_back(neg);
  }
  if (g != dominant) return std::nullopt;
  // gamma = s_{word_1} s_{word_2} ... (dominant), reflections in recorded order
  WeylElement u = weyl_identity(c);
  for (int i : word) u = weyl_mul(u, weyl_simple(c, i));
  return minimal_coset_rep(c, u, dominant);
}

std::vector<WeylElement> weyl_group_elements(const CartanData& c, size_t cap) {
  std::vector<int> all(c.rank);
  std::iota(all.begin(), all.end(), 1);
  return parabolic_elements(c, all, cap);
}

std::vector<WeylElement> parabolic_elements(const CartanData& c, const std::vector<int>& I,
                                            size_t cap) {
  std::set<IntVec> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue{weyl_identity(c)};
  seen.insert(flatten(queue.front()));
  while (!queue.empty()) {
    WeylElement cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    if (out.size() > cap) throw ComputeError("Weyl group enumeration exceeds cap");
    for (int i : I) {
      WeylElement nxt = weyl_mul(cur, weyl_simple(c, i));
      if (seen.insert(flatten(nxt)).second) queue.push_back(nxt);
    }
  }
  return out;
}

}  // namespace itrails
