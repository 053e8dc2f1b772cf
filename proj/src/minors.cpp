#include "itrails/minors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "itrails/semifield.hpp"

namespace itrails {

namespace {

Rat rat_pow(const Rat& t, Int e) {
  if (e == 0) return 1;
  if (t == 0) throw ComputeError("torus factor needs a nonzero parameter");
  Rat base = e > 0 ? t : Rat(1) / t;
  Rat acc = 1;
  for (Int k = 0; k < (e > 0 ? e : -e); ++k) acc *= base;
  return acc;
}

}  // namespace

RatMat factor_matrix(const FundModule& m, const GroupFactor& f) {
  int n = m.dim;
  switch (f.kind) {
    case GroupFactor::Kind::XPlus:
    case GroupFactor::Kind::XMinus: {
      bool plus = f.kind == GroupFactor::Kind::XPlus;
      // x_i(t) = sum_n t^n e_i^{(n)};  y_i(t) likewise with f
      const auto& pows = (plus ? m.e_pow : m.f_pow)[f.index - 1];
      RatMat out(n, n);
      Rat tn = 1;
      for (size_t p = 0; p < pows.size(); ++p) {
        for (int c = 0; c < n; ++c)
          for (const auto& [r, v] : pows[p].col[c]) out.at(r, c) += tn * v;
        tn *= f.t;
      }
      if (!plus) {
        // x_{-i}(t) = y_i(t) t^{-alpha_i^vee}
        RatMat torus(n, n);
        for (int b = 0; b < n; ++b) torus.at(b, b) = rat_pow(f.t, -m.weight_of[b][f.index - 1]);
        out = out.mul(torus);
      }
      return out;
    }
    case GroupFactor::Kind::Torus: {
      RatMat out(n, n);
      for (int b = 0; b < n; ++b) out.at(b, b) = rat_pow(f.t, m.weight_of[b][f.index - 1]);
      return out;
    }
    case GroupFactor::Kind::SBar: {
      GroupWord w = {GroupFactor::x_plus(f.index, Rat(-1)), GroupFactor::x_minus(f.index, Rat(1))};
      // x_{-i}(1) = y_i(1) * 1^{-alpha^vee} = y_i(1)
      RatMat a = factor_matrix(m, w[0]);
      RatMat b = factor_matrix(m, w[1]);
      return a.mul(b).mul(a);
    }
  }
  throw ComputeError("unreachable");
}

RatMat product_matrix(const FundModule& m, const GroupWord& x) {
  RatMat acc = RatMat::identity(m.dim);
  for (const auto& f : x) acc = acc.mul(factor_matrix(m, f));
  return acc;
}

namespace {

RatMat weyl_rep_matrix(const FundModule& m, const WeylElement& w) {
  RatMat acc = RatMat::identity(m.dim);
  for (int i : canonical_reduced_word(m.cartan, w))
    acc = acc.mul(factor_matrix(m, GroupFactor::sbar(i)));
  return acc;
}

}  // namespace

Rat generalized_minor(const CartanData& c, int i, const Weight& gamma, const Weight& delta,
                      const GroupWord& x) {
  const FundModule& m = cached_module(c, i);
  auto u = orbit_witness(c, m.highest, gamma);
  auto v = orbit_witness(c, m.highest, delta);
  if (!u || !v) throw InputError("minor weights must be extremal in the fundamental module");
  RatMat mat = weyl_rep_matrix(m, *u).inverse().mul(product_matrix(m, x)).mul(
      weyl_rep_matrix(m, *v));
  std::vector<Rat> vplus(m.dim, Rat(0));
  vplus[0] = 1;
  return mat.apply(vplus)[0];
}

Rat MinorPolynomial::eval(const std::vector<Rat>& t) const {
  Rat acc = 0;
  for (const auto& [exps, coeff] : terms) {
    Rat mono = coeff;
    for (size_t k = 0; k < exps.size(); ++k) mono *= rat_pow(t[k], exps[k]);
    acc += mono;
  }
  return acc;
}

Int MinorPolynomial::eval_tropical(const IntVec& t) const {
  if (terms.empty()) throw ComputeError("tropical evaluation of the zero polynomial");
  Int best = std::numeric_limits<Int>::max();
  for (const auto& [exps, coeff] : terms) {
    Int s = 0;
    for (size_t k = 0; k < exps.size(); ++k) s = checked_add(s, checked_mul(exps[k], t[k]));
    best = std::min(best, s);
  }
  return best;
}

namespace {

// weight-graded vector of Laurent polynomials over the module basis
using MPoly = std::map<IntVec, Rat>;

void mpoly_add(MPoly& into, const IntVec& mono, const Rat& coeff) {
  auto it = into.find(mono);
  if (it == into.end()) {
    if (coeff != 0) into.emplace(mono, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) into.erase(it);
}

}  // namespace

MinorPolynomial minor_poly_positive(const CartanData& c, int i, const Weight& gamma,
                                    const Weight& delta, const Word& word) {
  const FundModule& m = cached_module(c, i);
  auto u = orbit_witness(c, m.highest, gamma);
  auto v = orbit_witness(c, m.highest, delta);
  if (!u || !v) throw InputError("minor weights must be extremal in the fundamental module");
  int l = static_cast<int>(word.size());

  RatMat vbar = weyl_rep_matrix(m, *v);
  RatMat uinv = weyl_rep_matrix(m, *u).inverse();
  // start from vbar v+, apply x_{i_l}(t_l) first
  std::vector<MPoly> vec(m.dim);
  for (int b = 0; b < m.dim; ++b)
    if (vbar.at(b, 0) != 0) vec[b].emplace(IntVec(l, 0), vbar.at(b, 0));
  for (int k = l; k >= 1; --k) {
    const auto& pows = m.e_pow[word[k - 1] - 1];
    std::vector<MPoly> next(m.dim);
    for (size_t p = 0; p < pows.size(); ++p)
      for (int col = 0; col < m.dim; ++col) {
        if (vec[col].empty()) continue;
        for (const auto& [row, coeff] : pows[p].col[col])
          for (const auto& [mono, mc] : vec[col]) {
            IntVec shifted = mono;
            shifted[k - 1] += static_cast<Int>(p);
            mpoly_add(next[row], shifted, mc * coeff);
          }
      }
    vec = std::move(next);
  }
  MPoly out;
  for (int b = 0; b < m.dim; ++b) {
    if (uinv.at(0, b) == 0) continue;
    for (const auto& [mono, mc] : vec[b]) mpoly_add(out, mono, mc * uinv.at(0, b));
  }

  MinorPolynomial poly;
  poly.fund_index = i;
  poly.gamma = gamma;
  poly.delta = delta;
  poly.word = word;
  for (const auto& [mono, coeff] : out) poly.terms.emplace_back(mono, coeff);
  return poly;
}

std::vector<Rat> negative_word_params_to_positive(const CartanData& c, const Word& word,
                                                  const std::vector<Rat>& t) {
  // t'_k = t_k prod_{l<k} t_l^{a_{i_l, i_k}}
  std::vector<Rat> tp(t.size());
  for (size_t k = 0; k < word.size(); ++k) {
    Rat v = t[k];
    for (size_t l = 0; l < k; ++l) v *= rat_pow(t[l], c.entry(word[l], word[k]));
    tp[k] = v;
  }
  return tp;
}

std::vector<Rat> positive_word_params_to_negative(const CartanData& c, const Word& word,
                                                  const std::vector<Rat>& tp) {
  // t_k = t'_k prod_{l<k} t'_l^{-alpha_{i_k}(s_{i_{k-1}} ... s_{i_{l+1}} alpha_{i_l}^vee)}
  CartanData dual = langlands_dual(c);
  std::vector<Rat> t(tp.size());
  for (size_t k = 0; k < word.size(); ++k) {
    Rat v = tp[k];
    for (size_t l = 0; l < k; ++l) {
      // move the coroot alpha_{i_l}^vee by s_{i_{k-1}} ... s_{i_{l+1}} (dual root coords)
      IntVec rc(c.rank, 0);
      rc[word[l] - 1] = 1;
      WeylElement mover = weyl_identity(dual);
      for (size_t j = k - 1; j >= l + 1; --j) {
        mover = weyl_mul(mover, weyl_simple(dual, word[j]));
        if (j == l + 1) break;
      }
      IntVec moved = weyl_apply_root(mover, rc);
      // alpha_{i_k}(moved coroot) = sum_j moved_j a(j, i_k)
      Int pairing = 0;
      for (int j = 1; j <= c.rank; ++j) pairing += moved[j - 1] * c.entry(j, word[k]);
      v *= rat_pow(tp[l], -pairing);
    }
    t[k] = v;
  }
  return t;
}

MinorPolynomial minor_poly_negative(const CartanData& c, int i, const Weight& gamma,
                                    const Weight& delta, const Word& word) {
  int l = static_cast<int>(word.size());
  // Delta_{gamma,delta}(x_{-i}(t)) = prod_k t_k^{-delta(alpha_{i_k}^vee)}
  //                                  * Delta_{delta,gamma}(x_{i_l}(t'_l) ... x_{i_1}(t'_1))
  MinorPolynomial pos = minor_poly_positive(c, i, delta, gamma, word_reverse(word));
  // exponent vector of t'_k over the t variables
  std::vector<IntVec> prime_exp(l);
  for (int k = 0; k < l; ++k) {
    IntVec e(l, 0);
    e[k] = 1;
    for (int j = 0; j < k; ++j) e[j] += c.entry(word[j], word[k]);
    prime_exp[k] = e;
  }
  IntVec prefactor(l, 0);
  for (int k = 0; k < l; ++k) prefactor[k] = -delta[word[k] - 1];

  MPoly out;
  for (const auto& [mono, coeff] : pos.terms) {
    // variable j of pos corresponds to t'_{l-j} (positions of the reversed word)
    IntVec exps = prefactor;
    for (int j = 0; j < l; ++j) {
      Int n = mono[j];
      if (n == 0) continue;
      const IntVec& pe = prime_exp[l - 1 - j];
      for (int k = 0; k < l; ++k) exps[k] = checked_add(exps[k], checked_mul(n, pe[k]));
    }
    mpoly_add(out, exps, coeff);
  }
  MinorPolynomial poly;
  poly.fund_index = i;
  poly.gamma = gamma;
  poly.delta = delta;
  poly.word = word;
  for (const auto& [mono, coeff] : out) poly.terms.emplace_back(mono, coeff);
  return poly;
}

// ---------------------------------------------------------------------------
// identity verification

namespace {

struct TrialRng {
  std::mt19937_64 rng;
  explicit TrialRng(Int seed, int trial) : rng(static_cast<uint64_t>(seed) * 0x9e3779b97f4a7c15ULL + trial) {}
  Rat positive() {
    Rat r(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 9));
    r.canonicalize();
    return r;
  }
  size_t pick(size_t n) { return rng() % n; }
};

GroupWord random_group_word(const CartanData& c, TrialRng& rng, int len) {
  GroupWord out;
  for (int k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng.pick(c.rank));
    out.push_back(rng.pick(2) == 0 ? GroupFactor::x_plus(i, rng.positive())
                                   : GroupFactor::x_minus(i, rng.positive()));
  }
  return out;
}

std::string describe(const GroupWord& x) {
  std::ostringstream os;
  for (const auto& f : x) {
    switch (f.kind) {
      case GroupFactor::Kind::XPlus: os << "x" << f.index << "(" << f.t.get_str() << ") "; break;
      case GroupFactor::Kind::XMinus: os << "x-" << f.index << "(" << f.t.get_str() << ") "; break;
      case GroupFactor::Kind::Torus: os << "h" << f.index << "(" << f.t.get_str() << ") "; break;
      case GroupFactor::Kind::SBar: os << "sbar" << f.index << " "; break;
    }
  }
  return os.str();
}

void run_dodgson(const CartanData& c, int trials, Int seed, IdentityReport& rep) {
  auto elements = weyl_group_elements(c);
  // eligible (u, v, i)
  std::vector<std::tuple<WeylElement, WeylElement, int>> eligible;
  for (const auto& u : elements)
    for (const auto& v : elements)
      for (int i = 1; i <= c.rank; ++i)
        if (!is_right_descent(u, i) && !is_right_descent(v, i)) eligible.push_back({u, v, i});
  for (int trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    auto [u, v, i] = eligible[rng.pick(eligible.size())];
    GroupWord x = random_group_word(c, rng, 6);
    WeylElement us = weyl_mul(u, weyl_simple(c, i));
    WeylElement vs = weyl_mul(v, weyl_simple(c, i));
    auto minor = [&](const WeylElement& a, const WeylElement& b, int fi) {
      return generalized_minor(c, fi, weyl_apply(a, fundamental_weight(c, fi)),
                               weyl_apply(b, fundamental_weight(c, fi)), x);
    };
    Rat lhs = minor(u, v, i) * minor(us, vs, i);
    Rat rhs = minor(us, v, i) * minor(u, vs, i);
    Rat prod = 1;
    for (int j = 1; j <= c.rank; ++j) {
      if (j == i) continue;
      int e = -c.entry(j, i);
      for (int rep2 = 0; rep2 < e; ++rep2) prod *= minor(u, v, j);
    }
    rhs += prod;
    if (lhs != rhs)
      rep.failures.push_back("dodgson trial " + std::to_string(trial) + " at " + describe(x));
  }
}

void run_plucker(const CartanData& c, int caseno, int trials, Int seed, IdentityReport& rep) {
  // pairs (i, j) of the required subdiagram type
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= c.rank; ++i)
    for (int j = 1; j <= c.rank; ++j) {
      if (i == j) continue;
      if (caseno == 1 && c.entry(i, j) == -1 && c.entry(j, i) == -1) pairs.push_back({i, j});
      if (caseno == 2 && c.entry(i, j) == -2 && c.entry(j, i) == -1) pairs.push_back({i, j});
    }
  if (pairs.empty())
    throw InputError("no rank-2 pair of the required type inside the diagram");
  auto elements = weyl_group_elements(c);
  for (int trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    auto [i, j] = pairs[rng.pick(pairs.size())];
    // v with the required length increase
    std::vector<WeylElement> good;
    Word pattern = caseno == 1 ? Word{i, j, i} : Word{i, j, i, j};
    for (const auto& v : elements) {
      WeylElement w = v;
      bool ok = true;
      for (int s : pattern) {
        if (is_right_descent(w, s)) ok = false;
        w = weyl_mul(w, weyl_simple(c, s));
      }
      if (ok) good.push_back(v);
    }
    if (good.empty()) continue;
    WeylElement v = good[rng.pick(good.size())];
    WeylElement u = elements[rng.pick(elements.size())];
    GroupWord x = random_group_word(c, rng, 6);
    auto minor = [&](const WeylElement& a, const Word& bw, int fi) {
      WeylElement b = weyl_mul(v, weyl_from_word(c, bw));
      return generalized_minor(c, fi, weyl_apply(a, fundamental_weight(c, fi)),
                               weyl_apply(b, fundamental_weight(c, fi)), x);
    };
    if (caseno == 1) {
      Rat lhs = minor(u, {i}, i) * minor(u, {j}, j);
      Rat rhs = minor(u, {}, i) * minor(u, {i, j}, j) + minor(u, {j, i}, i) * minor(u, {}, j);
      if (lhs != rhs)
        rep.failures.push_back("plucker1 trial " + std::to_string(trial) + " at " + describe(x));
    } else {
      Rat m_i_e = minor(u, {}, i), m_j_e = minor(u, {}, j);
      Rat m_i_si = minor(u, {i}, i), m_j_sj = minor(u, {j}, j);
      Rat m_i_ji = minor(u, {j, i}, i);
      Rat m_i_iji = minor(u, {i, j, i}, i);
      Rat m_j_ij = minor(u, {i, j}, j);
      Rat m_j_jij = minor(u, {j, i, j}, j);
      Rat lhs1 = m_i_si * m_i_ji * m_j_sj;
      Rat rhs1 = m_i_ji * m_i_ji * m_j_e + m_i_e * (m_i_e * m_j_jij + m_i_iji * m_j_sj);
      Rat lhs2 = m_j_ij * m_i_ji * m_i_ji * m_j_sj;
      Rat inner = m_i_e * m_j_jij + m_i_iji * m_j_sj;
      Rat rhs2 = m_j_jij * m_i_ji * m_i_ji * m_j_e + inner * inner;
      if (lhs1 != rhs1)
        rep.failures.push_back("plucker2(a) trial " + std::to_string(trial) + " at " +
                               describe(x));
      if (lhs2 != rhs2)
        rep.failures.push_back("plucker2(b) trial " + std::to_string(trial) + " at " +
                               describe(x));
    }
  }
}

void run_endpoints(const CartanData& c, int trials, Int seed, IdentityReport& rep) {
  auto words = reduced_words(c, longest_element(c));
  WeylElement wo = longest_element(c);
  for (int trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    const Word& w = words[rng.pick(words.size())];
    int m = static_cast<int>(w.size());
    std::vector<Rat> t;
    for (int k = 0; k < m; ++k) t.push_back(rng.positive());

    // negative product
    GroupWord xn, xp;
    for (int k = 0; k < m; ++k) {
      xn.push_back(GroupFactor::x_minus(w[k], t[k]));
      xp.push_back(GroupFactor::x_plus(w[k], t[k]));
    }
    int i1 = w.front(), im = w.back();
    int i1s = star(c, i1), ims = star(c, im);
    {
      Weight om = fundamental_weight(c, i1s);
      Weight g = weyl_apply(weyl_mul(weyl_simple(c, i1), wo), om);
      Rat denom = generalized_minor(c, i1s, g, om, xn);
      if (t[0] != Rat(1) / denom)
        rep.failures.push_back("endpoints neg t1 trial " + std::to_string(trial));
      Weight omm = fundamental_weight(c, im);
      Rat tm = generalized_minor(c, im, weyl_apply(wo, omm), reflect(c, omm, im), xn);
      if (t[m - 1] != tm)
        rep.failures.push_back("endpoints neg tm trial " + std::to_string(trial));
    }
    {
      Weight om1 = fundamental_weight(c, i1);
      Rat num = generalized_minor(c, i1, om1, weyl_apply(wo, om1), xp);
      Rat den = generalized_minor(c, i1, reflect(c, om1, i1), weyl_apply(wo, om1), xp);
      if (t[0] != num / den)
        rep.failures.push_back("endpoints pos t1 trial " + std::to_string(trial));
      Weight oms = fundamental_weight(c, ims);
      Rat num2 = generalized_minor(c, ims, oms, weyl_apply(wo, oms), xp);
      Rat den2 = generalized_minor(c, ims, oms,
                                   weyl_apply(weyl_mul(weyl_simple(c, im), wo), oms), xp);
      if (t[m - 1] != num2 / den2)
        rep.failures.push_back("endpoints pos tm trial " + std::to_string(trial));
    }
  }
}

void run_braid(const CartanData& c, int trials, Int seed, IdentityReport& rep) {
  // all adjacent pairs and both orders
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= c.rank; ++i)
    for (int j = 1; j <= c.rank; ++j)
      if (i != j) pairs.push_back({i, j});
  for (int trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    auto [i, j] = pairs[rng.pick(pairs.size())];
    int d = braid_order(c, i, j);
    std::vector<Rat> t;
    for (int k = 0; k < d; ++k) t.push_back(rng.positive());
    for (auto sign : {MoveSign::Positive, MoveSign::Negative}) {
      auto p = rank2_transition(c.entry(i, j), c.entry(j, i), sign, sf_rational_vec(t));
      GroupWord lhs, rhs;
      for (int k = 0; k < d; ++k) {
        int li = (k % 2 == 0) ? i : j;
        int ri = (k % 2 == 0) ? j : i;
        lhs.push_back(sign == MoveSign::Positive ? GroupFactor::x_plus(li, t[k])
                                                 : GroupFactor::x_minus(li, t[k]));
        rhs.push_back(sign == MoveSign::Positive ? GroupFactor::x_plus(ri, p[k].rat)
                                                 : GroupFactor::x_minus(ri, p[k].rat));
      }
      for (int fi = 1; fi <= c.rank; ++fi) {
        const FundModule& mod = cached_module(c, fi);
        if (!(product_matrix(mod, lhs) == product_matrix(mod, rhs)))
          rep.failures.push_back("braid " + std::string(sign == MoveSign::Positive ? "pos" : "neg") +
                                 " (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") in module " + std::to_string(fi) + " trial " +
                                 std::to_string(trial));
      }
    }
    // mixed moves: x_j(t1) x_{-i}(t2) = x_{-i}(p1) x_j(p2), both i != j and i == j
    {
      Rat t1 = rng.positive(), t2 = rng.positive();
      auto pm = rank2_transition(c.entry(i, j), c.entry(j, i), MoveSign::Mixed,
                                 sf_rational_vec({t1, t2}));
      GroupWord lhs = {GroupFactor::x_plus(j, t1), GroupFactor::x_minus(i, t2)};
      GroupWord rhs = {GroupFactor::x_minus(i, pm[0].rat), GroupFactor::x_plus(j, pm[1].rat)};
      auto pm2 = rank2_transition(2, 2, MoveSign::Mixed, sf_rational_vec({t1, t2}));
      GroupWord lhs2 = {GroupFactor::x_plus(i, t1), GroupFactor::x_minus(i, t2)};
      GroupWord rhs2 = {GroupFactor::x_minus(i, pm2[0].rat), GroupFactor::x_plus(i, pm2[1].rat)};
      for (int fi = 1; fi <= c.rank; ++fi) {
        const FundModule& mod = cached_module(c, fi);
        if (!(product_matrix(mod, lhs) == product_matrix(mod, rhs)))
          rep.failures.push_back("mixed move (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") trial " + std::to_string(trial));
        if (!(product_matrix(mod, lhs2) == product_matrix(mod, rhs2)))
          rep.failures.push_back("mixed same-letter move " + std::to_string(i) + " trial " +
                                 std::to_string(trial));
      }
    }
  }
}

}  // namespace

IdentityReport verify_identity(const std::string& id, const CartanData& c, int trials, Int seed) {
  IdentityReport rep;
  rep.id = id;
  rep.type = c.name();
  rep.seed = seed;
  rep.trials = trials;
  if (id == "dodgson")
    run_dodgson(c, trials, seed, rep);
  else if (id == "plucker1")
    run_plucker(c, 1, trials, seed, rep);
  else if (id == "plucker2")
    run_plucker(c, 2, trials, seed, rep);
  else if (id == "endpoints")
    run_endpoints(c, trials, seed, rep);
  else if (id == "braid")
    run_braid(c, trials, seed, rep);
  else
    throw InputError("unknown identity id: " + id);
  return rep;
}

}  // namespace itrails
