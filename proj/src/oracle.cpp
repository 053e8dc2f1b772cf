#include "itrails/oracle.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>

namespace itrails {

Int CharacterTable::dimension() const {
  Int d = 0;
  for (const auto& [w, m] : mult) d += m;
  return d;
}

namespace {

Weight dominant_representative(const CartanData& c, Weight w) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= c.rank; ++i)
      if (w[i - 1] < 0) {
        w = reflect(c, w, i);
        moved = true;
      }
  }
  return w;
}

std::map<std::pair<std::vector<std::vector<int>>, Weight>, std::unique_ptr<CharacterTable>>
    g_tables;
std::mutex g_tables_mutex;

CharacterTable compute_table(const CartanData& c, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InputError("character table needs a dominant highest weight");
  Weight rho = weight_rho(c);
  Rat lam_norm = inner_product(c, weight_add(lambda, rho), weight_add(lambda, rho));

  // candidate weights: lambda - Q_+ within the norm ball, collected by BFS
  std::set<Weight> ball;
  std::deque<Weight> queue{lambda};
  ball.insert(lambda);
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= c.rank; ++i) {
      Weight nxt = weight_sub(cur, simple_root_weight(c, i));
      if (ball.count(nxt)) continue;
      if (inner_product(c, nxt, nxt) > lam_norm) continue;
      ball.insert(nxt);
      queue.push_back(nxt);
    }
  }

  std::vector<Weight> dominant;
  for (const auto& w : ball)
    if (is_dominant(w)) dominant.push_back(w);
  // decreasing order of height of lambda - mu, so dependencies are ready
  auto height = [&](const Weight& w) {
    auto rc = root_coords(c, weight_sub(lambda, w));
    Rat h = 0;
    for (const auto& x : rc) h += x;
    return h;
  };
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& x, const Weight& y) {
    Rat hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });

  std::map<Weight, Int> dom_mult;
  auto mult_at = [&](const Weight& w) -> Int {
    auto it = dom_mult.find(dominant_representative(c, w));
    return it == dom_mult.end() ? 0 : it->second;
  };

  const auto& pos = positive_roots(c);
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      dom_mult[mu] = 1;
      continue;
    }
    if (!root_coords_integral(c, weight_sub(lambda, mu))) continue;
    Rat mu_norm = inner_product(c, weight_add(mu, rho), weight_add(mu, rho));
    Rat denom = lam_norm - mu_norm;
    Rat sum = 0;
    for (const auto& rc : pos) {
      Weight beta = weight_from_root_coords(c, rc);
      for (Int k = 1;; ++k) {
        Weight w = mu;
        for (int t = 0; t < c.rank; ++t) w[t] += k * beta[t];
        if (inner_product(c, w, w) > lam_norm) break;
        Int m = mult_at(w);
        if (m != 0) sum += Rat(2) * inner_product(c, w, beta) * rat_of(m);
      }
    }
    Rat m = sum / denom;
    if (m.get_den() != 1) throw ComputeError("Freudenthal recursion produced a non-integer");
    Int mi = static_cast<Int>(m.get_num().get_si());
    if (mi > 0) dom_mult[mu] = mi;
  }

  CharacterTable tab;
  tab.highest = lambda;
  for (const auto& [mu, m] : dom_mult) {
    // spread over the W-orbit
    std::set<Weight> orbit{mu};
    std::deque<Weight> q{mu};
    while (!q.empty()) {
      Weight cur = q.front();
      q.pop_front();
      tab.mult[cur] = m;
      for (int i = 1; i <= c.rank; ++i) {
        Weight im = reflect(c, cur, i);
        if (orbit.insert(im).second) q.push_back(im);
      }
    }
  }
  return tab;
}

}  // namespace

const CharacterTable& character_table(const CartanData& c, const Weight& lambda) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto key = std::make_pair(c.matrix, lambda);
  auto it = g_tables.find(key);
  if (it != g_tables.end()) return *it->second;
  auto tab = std::make_unique<CharacterTable>(compute_table(c, lambda));
  auto* p = tab.get();
  g_tables.emplace(std::move(key), std::move(tab));
  return *p;
}

Int weight_multiplicity(const CartanData& c, const Weight& lambda, const Weight& mu) {
  const auto& tab = character_table(c, lambda);
  auto it = tab.mult.find(mu);
  return it == tab.mult.end() ? 0 : it->second;
}

Int tensor_multiplicity_oracle(const CartanData& c, const Weight& lambda, const Weight& nu,
                               const Weight& mu, size_t weyl_cap) {
  if (!is_dominant(lambda) || !is_dominant(nu) || !is_dominant(mu))
    throw InputError("tensor multiplicity needs dominant weights");
  Weight rho = weight_rho(c);
  Weight shift = weight_add(mu, rho);
  Weight base = weight_add(lambda, rho);
  Int total = 0;
  for (const auto& w : weyl_group_elements(c, weyl_cap)) {
    Weight arg = weight_sub(weyl_apply(w, shift), base);
    Int m = weight_multiplicity(c, nu, arg);
    if (m == 0) continue;
    int len = weyl_length(c, w);
    total += (len % 2 == 0) ? m : -m;
  }
  return total;
}

Int branching_oracle(const CartanData& c, const std::vector<int>& I, const Weight& nu,
                     const Weight& beta) {
  if (!is_dominant(nu)) throw InputError("branching needs nu dominant");
  for (int i : I)
    if (beta[i - 1] < 0) throw InputError("beta must be dominant for the Levi of I");
  Weight rho = weight_rho(c);
  Int total = 0;
  for (const auto& w : parabolic_elements(c, I)) {
    Weight arg = weight_sub(weyl_apply(w, weight_add(beta, rho)), rho);
    Int m = weight_multiplicity(c, nu, arg);
    if (m == 0) continue;
    int len = weyl_length(c, w);
    total += (len % 2 == 0) ? m : -m;
  }
  return total;
}

std::map<Weight, Int> branching_decomposition(const CartanData& c, const std::vector<int>& I,
                                              const Weight& nu) {
  std::map<Weight, Int> out;
  for (const auto& [w, m] : character_table(c, nu).mult) {
    bool dom = true;
    for (int i : I)
      if (w[i - 1] < 0) dom = false;
    if (!dom) continue;
    Int b = branching_oracle(c, I, nu, w);
    if (b != 0) out[w] = b;
  }
  return out;
}

Rat parabolic_weyl_dimension(const CartanData& c, const std::vector<int>& I, const Weight& beta) {
  for (int i : I)
    if (beta[i - 1] < 0) throw InputError("beta must be dominant for the Levi of I");
  std::set<int> iset(I.begin(), I.end());
  Weight rho = weight_rho(c);
  Weight br = weight_add(beta, rho);
  Rat num = 1, den = 1;
  for (const auto& rc : positive_roots(c)) {
    bool in_levi = true;
    for (int j = 0; j < c.rank; ++j)
      if (rc[j] != 0 && !iset.count(j + 1)) in_levi = false;
    if (!in_levi) continue;
    Weight root = weight_from_root_coords(c, rc);
    num *= inner_product(c, br, root);
    den *= inner_product(c, rho, root);
  }
  return num / den;
}

}  // namespace itrails
