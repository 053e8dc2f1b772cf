#include <chrono>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "itrails/counting.hpp"
#include "itrails/engine.hpp"
#include "itrails/minors.hpp"
#include "itrails/oracle.hpp"

namespace itrails {

namespace {

std::vector<Weight> dominant_box(int rank, Int cap) {
  std::vector<Weight> out;
  Weight w(rank, 0);
  while (true) {
    out.push_back(w);
    int k = 0;
    while (k < rank && w[k] == cap) {
      w[k] = 0;
      ++k;
    }
    if (k == rank) break;
    ++w[k];
  }
  return out;
}

std::vector<IntVec> box_points(int n, Int lo, Int hi) {
  std::vector<IntVec> out;
  IntVec t(n, lo);
  while (true) {
    out.push_back(t);
    int k = 0;
    while (k < n && t[k] == hi) {
      t[k] = lo;
      ++k;
    }
    if (k == n) break;
    ++t[k];
  }
  return out;
}

Weight lusztig_weight(const CartanData& c, const Word& i, const IntVec& t) {
  Weight acc = weight_zero(c);
  WeylElement pre = weyl_identity(c);
  for (size_t k = 0; k < i.size(); ++k) {
    Weight beta = weyl_apply(pre, simple_root_weight(c, i[k]));
    for (int j = 0; j < c.rank; ++j) acc[j] += t[k] * beta[j];
    pre = weyl_mul(pre, weyl_simple(c, i[k]));
  }
  return acc;
}

Weight string_weight(const CartanData& c, const Word& i, const IntVec& t) {
  Weight acc = weight_zero(c);
  for (size_t k = 0; k < i.size(); ++k)
    for (int j = 0; j < c.rank; ++j) acc[j] += t[k] * simple_root_weight(c, i[k])[j];
  return acc;
}

Int height_of(const CartanData& c, const Weight& w) {
  auto rc = root_coords_integral(c, w);
  if (!rc) return -1;
  Int h = 0;
  for (Int x : *rc) h += x;
  return h;
}

IntVec trop_transition(const CartanData& c, ParamSide side, const Word& from, const Word& to,
                       const IntVec& t) {
  return sf_to_tropical_vec(transition(c, side, from, to, sf_tropical_vec(t)));
}

Rat prime_power(Int e, Int q) {
  Rat v = 1;
  for (Int k = 0; k < (e >= 0 ? e : -e); ++k) v *= rat_of(q);
  return e >= 0 ? v : Rat(1) / v;
}

Int valuation(const Rat& x, Int q) {
  Int v = 0;
  mpz_class num = x.get_num(), den = x.get_den(), qq(static_cast<long>(q));
  while (num % qq == 0) {
    num /= qq;
    ++v;
  }
  while (den % qq == 0) {
    den /= qq;
    --v;
  }
  return v;
}

struct Check {
  long long total = 0;
  long long failed = 0;
  std::string first_failure;
  void record(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      ++failed;
      if (first_failure.empty()) first_failure = what;
    }
  }
  std::string summary(const std::string& unit) const {
    std::ostringstream os;
    os << total << " " << unit;
    if (failed) os << ", " << failed << " FAILED (first: " << first_failure << ")";
    return os.str();
  }
};

// ---- criterion 1 & 2: multiplicity agreement -------------------------------

void criterion_multiplicity_agreement(Check& chk) {
  struct Sweep {
    const char* type;
    Int cap;
  };
  const std::vector<Sweep> sweeps = {{"A1", 2}, {"A2", 2}, {"B2", 2}, {"G2", 2},
                                     {"A3", 1}, {"B3", 1}, {"C3", 1}};
  const MultMethod methods[] = {MultMethod::LusztigTrails, MultMethod::StringTrails,
                                MultMethod::PluckerLusztig, MultMethod::PluckerStrings};
  for (const auto& sweep : sweeps) {
    auto c = cartan(sweep.type);
    std::vector<Word> words;
    if (c.rank == 1) {
      words = {{1}};
    } else {
      auto wo = longest_element(c);
      auto all = reduced_words(c, wo);
      words = {all.front(), all.back()};
    }
    auto doms = dominant_box(c.rank, sweep.cap);
    for (const auto& la : doms)
      for (const auto& nu : doms)
        for (const auto& mu : doms) {
          Int expect = tensor_multiplicity_oracle(c, la, nu, mu);
          for (const auto& w : words)
            for (auto m : methods) {
              MultiplicityQuery q{c, la, nu, mu, w, m};
              Int got = multiplicity_count(q);
              chk.record(got == expect, std::string(sweep.type) + " " + mult_method_name(m) +
                                            " la=" + weight_to_string(la) +
                                            " nu=" + weight_to_string(nu) +
                                            " mu=" + weight_to_string(mu) + " got " +
                                            std::to_string(got) + " want " +
                                            std::to_string(expect));
            }
        }
  }
}

void criterion_worked_value(Check& chk) {
  auto a2 = cartan("A2");
  Weight rho = {1, 1};
  chk.record(tensor_multiplicity_oracle(a2, rho, rho, rho) == 2, "oracle rho cubed");
  for (const Word& w : reduced_words(a2, longest_element(a2)))
    for (auto m : {MultMethod::LusztigTrails, MultMethod::StringTrails,
                   MultMethod::PluckerLusztig, MultMethod::PluckerStrings}) {
      MultiplicityQuery q{a2, rho, rho, rho, w, m};
      chk.record(multiplicity_count(q) == 2, mult_method_name(m));
    }
}

// ---- criterion 3: A3 string cone -------------------------------------------

void criterion_string_cone_a3(Check& chk) {
  auto a3 = cartan("A3");
  Word w = {2, 1, 3, 2, 1, 3};
  auto general = string_cone(a3, w, ConeMode::General);
  IneqSystem example;
  example.num_vars = 6;
  example.add_ge({1, 0, 0, 0, 0, 0}, 0);
  example.add_ge({0, 1, 0, 0, 0, -1}, 0);
  example.add_ge({0, 0, 0, 0, 0, 1}, 0);
  example.add_ge({0, 0, 1, 0, -1, 0}, 0);
  example.add_ge({0, 0, 0, 0, 1, 0}, 0);
  example.add_ge({0, 1, 1, -1, 0, 0}, 0);
  example.add_ge({0, 0, 0, 1, -1, -1}, 0);
  auto pg = lattice_points_in_box(general, 0, 5);
  auto pe = lattice_points_in_box(example, 0, 5);
  chk.record(pg == pe, "general mode vs worked system on [0,5]^6");
  auto pa = lattice_points_in_box(string_cone(a3, w, ConeMode::TypeA), 0, 5);
  chk.record(pg == pa, "typeA mode vs worked system on [0,5]^6");
}

// ---- criterion 4: A2 closed-form transitions --------------------------------

void criterion_a2_transitions(Check& chk) {
  auto a2 = cartan("A2");
  Word i = {1, 2, 1}, ip = {2, 1, 2};
  for (const auto& t : box_points(3, 0, 5)) {
    Int mn = std::min(t[0], t[2]);
    IntVec expect = {t[1] + t[2] - mn, mn, t[0] + t[1] - mn};
    chk.record(trop_transition(a2, ParamSide::Lusztig, i, ip, t) == expect, "lusztig closed form");
    if (in_string_cone(a2, i, t)) {
      IntVec es = {std::max(t[2], t[1] - t[0]), t[0] + t[2], std::min(t[0], t[1] - t[2])};
      chk.record(trop_transition(a2, ParamSide::String, i, ip, t) == es, "string closed form");
    }
  }
}

// ---- criterion 5: path independence -----------------------------------------

void criterion_path_independence(Check& chk) {
  for (auto name : {"A2", "B2", "G2", "A3"}) {
    auto c = cartan(name);
    auto words = reduced_words(c, longest_element(c));
    int m = static_cast<int>(words.front().size());
    // deterministic sample grids
    std::vector<IntVec> trop_samples;
    std::vector<std::vector<Rat>> rat_samples;
    for (int s = 0; s < 3; ++s) {
      IntVec t(m);
      std::vector<Rat> r(m);
      for (int k = 0; k < m; ++k) {
        t[k] = ((k + 1) * (s + 2)) % 5 - 2;
        Rat x(static_cast<long>((k + s) % 3 + 1), static_cast<long>((2 * k + s) % 3 + 1));
        x.canonicalize();
        r[k] = x;
      }
      trop_samples.push_back(t);
      rat_samples.push_back(r);
    }
    for (size_t a = 0; a < words.size(); ++a)
      for (size_t b = 0; b < words.size(); ++b) {
        const Word& from = words[a];
        const Word& to = words[b];
        const Word& via = words[(a + b) / 2];
        for (auto side : {ParamSide::Lusztig, ParamSide::String}) {
          for (const auto& t : trop_samples) {
            auto direct = trop_transition(c, side, from, to, t);
            auto detour =
                trop_transition(c, side, via, to, trop_transition(c, side, from, via, t));
            chk.record(direct == detour, std::string(name) + " tropical path independence");
            chk.record(trop_transition(c, side, to, from, direct) == t,
                       std::string(name) + " tropical round trip");
          }
          for (const auto& r : rat_samples) {
            auto rv = sf_rational_vec(r);
            auto direct = transition(c, side, from, to, rv);
            auto detour = transition(c, side, via, to, transition(c, side, from, via, rv));
            bool same = true, back_ok = true;
            auto back = transition(c, side, to, from, direct);
            for (int k = 0; k < m; ++k) {
              if (!(direct[k].rat == detour[k].rat)) same = false;
              if (!(back[k].rat == r[k])) back_ok = false;
            }
            chk.record(same, std::string(name) + " rational path independence");
            chk.record(back_ok, std::string(name) + " rational round trip");
          }
        }
      }
  }
}

// ---- criterion 6: graded bijectivity ----------------------------------------

void criterion_bijectivity(Check& chk) {
  for (auto name : {"A2", "B2"}) {
    auto c = cartan(name);
    auto words = reduced_words(c, longest_element(c));
    Word i = words.front(), ip = words.back();
    int m = static_cast<int>(i.size());
    std::map<Weight, std::set<IntVec>> lus, str;
    for (const auto& t : box_points(m, 0, 6)) {
      Weight w = lusztig_weight(c, ip, t);
      Int h = height_of(c, w);
      if (h >= 0 && h <= 6) lus[w].insert(t);
      if (in_string_cone(c, i, t)) {
        Weight sw = string_weight(c, i, t);
        Int sh = height_of(c, sw);
        if (sh >= 0 && sh <= 6) str[sw].insert(t);
      }
    }
    for (const auto& [w, ts] : lus) {
      std::set<IntVec> image;
      for (const auto& t : ts) image.insert(lusztig_to_string(c, i, ip, t));
      chk.record(image.size() == ts.size(),
                 std::string(name) + " injectivity on slice " + weight_to_string(w));
      auto it = str.find(w);
      chk.record(it != str.end() && image == it->second,
                 std::string(name) + " image equals the string slice " + weight_to_string(w));
    }
    chk.record(lus.size() == str.size(), std::string(name) + " same slice collection");
  }
}

// ---- criterion 7: l_i and endpoint formulas ----------------------------------

void criterion_li_endpoints(Check& chk) {
  for (auto name : {"A2", "B2", "A3"}) {
    auto c = cartan(name);
    auto words = reduced_words(c, longest_element(c));
    Word i = words.front(), ip = words.back();
    int m = static_cast<int>(i.size());
    // word starting with each index, for the transition route to l_i
    std::map<int, Word> starts;
    for (const auto& w : words)
      if (!starts.count(w.front())) starts[w.front()] = w;
    for (const auto& tp : box_points(m, 0, 3)) {
      for (int i0 = 1; i0 <= c.rank; ++i0) {
        auto moved = trop_transition(c, ParamSide::Lusztig, ip, starts.at(i0), tp);
        chk.record(l_i_value(c, i0, ip, tp) == moved[0],
                   std::string(name) + " l_i vs transition");
      }
      auto s = lusztig_to_string(c, i, ip, tp);
      auto [t1, tm] = endpoints_from_string(c, i, ip, s);
      chk.record(t1 == tp.front() && tm == tp.back(), std::string(name) + " endpoints");
    }
  }
}

// ---- criterion 8: minor trail expansion --------------------------------------

void criterion_minor_expansion(Check& chk) {
  struct Case {
    const char* type;
    std::vector<int> funds;
  };
  const std::vector<Case> cases = {
      {"A2", {1, 2}}, {"C2", {1, 2}}, {"B2", {1, 2}}, {"A3", {1, 2, 3}}, {"G2", {1}}};
  for (const auto& cs : cases) {
    auto c = cartan(cs.type);
    auto all = reduced_words(c, longest_element(c));
    std::vector<Word> words = {all.front(), all.back()};
    int m = static_cast<int>(words.front().size());
    auto grid = box_points(m, -3, 3);
    for (int fi : cs.funds) {
      const FundModule& mod = cached_module(c, fi);
      std::set<Weight> orbit;
      for (const auto& w : weyl_group_elements(c))
        orbit.insert(weyl_apply(w, fundamental_weight(c, fi)));
      for (const auto& word : words)
        for (const auto& gamma : orbit)
          for (const auto& delta : orbit) {
            auto poly = minor_poly_positive(c, fi, gamma, delta, word);
            const auto& trails = cached_trails(mod, gamma, delta, word);
            std::set<IntVec> sup, expected;
            for (const auto& [e, coeff] : poly.terms) {
              sup.insert(e);
              if (!(coeff > 0 && coeff.get_den() == 1)) {
                chk.record(false, std::string(cs.type) + " non-positive-integer coefficient");
              }
            }
            for (const auto& tr : trails) expected.insert(tr.c);
            chk.record(sup == expected, std::string(cs.type) + " fund " + std::to_string(fi) +
                                            " support equals trail set");
            if (trails.empty()) continue;
            bool trop_ok = true;
            for (const auto& t : grid) {
              Int best = std::numeric_limits<Int>::max();
              for (const auto& tr : trails) {
                Int s = 0;
                for (int k = 0; k < m; ++k) s += tr.c[k] * t[k];
                best = std::min(best, s);
              }
              if (poly.eval_tropical(t) != best) {
                trop_ok = false;
                break;
              }
            }
            chk.record(trop_ok, std::string(cs.type) + " tropical evaluation on the box");
          }
    }
  }
}

// ---- criterion 9: identity suites --------------------------------------------

void criterion_identities(Check& chk) {
  auto record_report = [&](const IdentityReport& r) {
    chk.record(r.ok(), r.id + " on " + r.type +
                           (r.failures.empty() ? "" : (": " + r.failures.front())));
  };
  auto a2 = cartan("A2");
  auto b2 = cartan("B2");
  record_report(verify_identity("dodgson", a2, 20, 20260810));
  record_report(verify_identity("dodgson", b2, 20, 20260810));
  record_report(verify_identity("plucker1", a2, 20, 20260811));
  record_report(verify_identity("plucker2", b2, 20, 20260812));
  record_report(verify_identity("endpoints", a2, 20, 20260813));
  record_report(verify_identity("endpoints", b2, 20, 20260813));
  record_report(verify_identity("braid", a2, 10, 20260814));
  record_report(verify_identity("braid", b2, 10, 20260814));
  record_report(verify_identity("braid", cartan("G2"), 6, 20260815));
  record_report(verify_identity("braid", cartan("A3"), 10, 20260816));
}

// ---- criterion 10: crystal consistency ----------------------------------------

void criterion_crystal(Check& chk) {
  for (auto name : {"A2", "B2"}) {
    auto c = cartan(name);
    auto words = reduced_words(c, longest_element(c));
    for (const Word& istr : {words.front(), words.back()})
      for (const Word& ip : words)
        for (int i0 = 1; i0 <= c.rank; ++i0) {
          if (ip.back() != star(c, i0)) continue;
          for (const auto& tp : box_points(static_cast<int>(ip.size()), 0, 2)) {
            IntVec bumped = tp;
            bumped.back() += 1;
            auto lhs = lusztig_to_string(c, istr, ip, bumped);
            auto rhs = crystal_apply(c, istr, lusztig_to_string(c, istr, ip, tp), i0, 1);
            chk.record(lhs == rhs, std::string(name) + " transport of the last coordinate");
          }
        }
    // composition law and valuation compatibility; the string formula is the
    // tropicalization of the geometric one on the Langlands dual group
    CartanData dual = langlands_dual(c);
    const Word& i = words.front();
    int m = static_cast<int>(i.size());
    const Int q = 5;
    for (const auto& t : box_points(m, 0, 2)) {
      if (!in_string_cone(c, i, t)) continue;
      for (int i0 = 1; i0 <= c.rank; ++i0) {
        auto two = crystal_apply(c, i, crystal_apply(c, i, t, i0, 1), i0, 2);
        chk.record(two == crystal_apply(c, i, t, i0, 3),
                   std::string(name) + " composition n1+n2");
        std::vector<Rat> rt;
        for (Int e : t) rt.push_back(prime_power(e, q));
        for (Int n : {1, 2}) {
          auto geo = geom_crystal_apply(dual, i, rt, i0, prime_power(n, q));
          auto trop = crystal_apply(c, i, t, i0, n);
          bool ok = true;
          for (int k = 0; k < m; ++k)
            if (valuation(geo[k], q) != trop[k]) ok = false;
          chk.record(ok, std::string(name) + " geometric/tropical valuation");
        }
      }
    }
  }
}

// ---- criterion 11: classical specializations ----------------------------------

void criterion_classical(Check& chk) {
  struct Sweep {
    const char* type;
    Int cap;
  };
  for (auto sweep : {Sweep{"B2", 2}, Sweep{"B3", 1}, Sweep{"C3", 1}, Sweep{"D4", 1}}) {
    auto c = cartan(sweep.type);
    Word w = classical_designated_word(c);
    auto doms = dominant_box(c.rank, sweep.cap);
    for (const auto& la : doms)
      for (const auto& nu : doms)
        for (const auto& mu : doms) {
          auto cls = enumerate_lattice(classical_system(c, la, mu, nu));
          MultiplicityQuery q{c, la, nu, mu, w, MultMethod::StringTrails};
          auto ref = enumerate_lattice(build_system(q));
          chk.record(cls == ref, std::string(sweep.type) + " la=" + weight_to_string(la) +
                                     " nu=" + weight_to_string(nu) +
                                     " mu=" + weight_to_string(mu));
        }
  }
}

// ---- criterion 12: reduction ----------------------------------------------------

void criterion_reduction(Check& chk) {
  struct Case {
    const char* type;
    std::vector<std::vector<int>> subsets;
    Int cap;
  };
  const std::vector<Case> cases = {
      {"A2", {{}, {1}, {2}, {1, 2}}, 2},
      {"B2", {{}, {1}, {2}, {1, 2}}, 2},
      {"A3", {{}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}, 2},
  };
  for (const auto& cs : cases) {
    auto c = cartan(cs.type);
    for (const auto& I : cs.subsets) {
      Word w = reduction_default_word(c, I);
      for (const auto& nu : dominant_box(c.rank, cs.cap)) {
        auto dec = branching_decomposition(c, I, nu);
        std::set<Weight> betas;
        for (const auto& [b, m] : dec) betas.insert(b);
        betas.insert(nu);
        for (const auto& beta : betas) {
          Int expect = branching_oracle(c, I, nu, beta);
          ReductionQuery ql{c, I, nu, beta, w, false};
          ReductionQuery qs{c, I, nu, beta, w, true};
          chk.record(reduction_count(ql) == expect,
                     std::string(cs.type) + " lusztig reduction vs branching oracle");
          chk.record(reduction_count(qs) == expect,
                     std::string(cs.type) + " string reduction vs branching oracle");
        }
      }
    }
  }

  // p x q corollaries
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
    int r = p + q - 1;
    auto c = cartan(Family::A, r);
    std::vector<int> I;
    for (int i = 1; i <= r; ++i)
      if (i != p) I.push_back(i);
    for (const auto& nu : dominant_box(r, 2)) {
      for (const auto& [beta, expect] : branching_decomposition(c, I, nu)) {
        auto sys_l = reduction_pq(p, q, nu, beta, false);
        auto sys_s = reduction_pq(p, q, nu, beta, true);
        auto pts_l = enumerate_lattice(sys_l);
        auto pts_s = enumerate_lattice(sys_s);
        chk.record(static_cast<Int>(pts_l.size()) == expect, "pq lusztig count");
        chk.record(static_cast<Int>(pts_s.size()) == expect, "pq string count");
        // plane-partition characterization: string points = plane partitions with the
        // diagonal sums and row condition, filtered independently in a box
        auto rc = root_coords_integral(c, weight_sub(nu, beta));
        Int cap2 = 0;
        for (Int x : *rc) cap2 = std::max(cap2, x);
        std::set<IntVec> direct;
        for (const auto& t : box_points(p * q, 0, cap2)) {
          auto at = [&](int i, int j) -> Int {
            if (i < 1 || i > p || j < 1 || j > q) return 0;
            return t[(i - 1) * q + (j - 1)];
          };
          bool pp = true;
          for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= q; ++j)
              if (at(i, j) < at(i + 1, j) || at(i, j) < at(i, j + 1)) pp = false;
          if (!pp) continue;
          bool sums = true;
          for (int l = 1; l <= r; ++l) {
            Int s = 0;
            for (int i = 1; i <= p; ++i)
              for (int j = 1; j <= q; ++j)
                if (j - i == l - p) s += at(i, j);
            if (s != (*rc)[l - 1]) sums = false;
          }
          if (!sums) continue;
          bool cond3 = true;
          for (int l = 1; l <= r; ++l)
            for (int i = 1; i <= p; ++i)
              for (int j = 1; j <= q; ++j) {
                if (j - i != l - p) continue;
                Int s = at(i, j);
                for (int k = 1; k <= std::max(p, q); ++k)
                  s += 2 * at(i + k, j + k) - at(i + k - 1, j + k) - at(i + k, j + k - 1);
                if (s > nu[l - 1]) cond3 = false;
              }
          if (cond3) direct.insert(t);
        }
        chk.record(direct == std::set<IntVec>(pts_s.begin(), pts_s.end()),
                   "pq plane-partition characterization");
      }
    }
  }

  // reduction equals c_{lambda,nu}^{lambda+beta} for lambda large off I
  struct Big {
    const char* type;
    std::vector<int> I;
  };
  for (const auto& cs : {Big{"A2", {1}}, Big{"B2", {2}}, Big{"A3", {1, 3}}}) {
    auto c = cartan(cs.type);
    std::set<int> iset(cs.I.begin(), cs.I.end());
    Weight nu(c.rank, 1);
    for (const auto& [beta, expect] : branching_decomposition(c, cs.I, nu)) {
      Int count10 = -1;
      for (Int big : {10, 12}) {
        Weight lambda(c.rank, 0);
        for (int i = 1; i <= c.rank; ++i)
          if (!iset.count(i)) lambda[i - 1] = big;
        Weight mu = weight_add(lambda, beta);
        if (!is_dominant(mu)) continue;
        Int got = tensor_multiplicity_oracle(c, lambda, nu, mu);
        chk.record(got == expect, std::string(cs.type) + " tensor consistency at " +
                                      std::to_string(big));
        if (big == 10)
          count10 = got;
        else if (count10 >= 0)
          chk.record(got == count10, "stability from 10 to 12");
      }
    }
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  struct Entry {
    int id;
    const char* name;
    void (*fn)(Check&);
  };
  const std::vector<Entry> entries = {
      {1, "multiplicity methods agree with the Klimyk oracle", criterion_multiplicity_agreement},
      {2, "A2 rho/rho/rho count is 2 by every method", criterion_worked_value},
      {3, "A3 string cone matches the worked system", criterion_string_cone_a3},
      {4, "A2 tropical transitions match the closed forms", criterion_a2_transitions},
      {5, "transition path independence and round trips", criterion_path_independence},
      {6, "graded bijectivity of the Lusztig-string bridge", criterion_bijectivity},
      {7, "l_i and endpoint formulas agree with transitions", criterion_li_endpoints},
      {8, "minor expansions match trail sets and tropical minima", criterion_minor_expansion},
      {9, "Dodgson, Plucker, braid and endpoint identities", criterion_identities},
      {10, "crystal operator consistency", criterion_crystal},
      {11, "classical B/C/D systems equal string-trails", criterion_classical},
      {12, "reduction systems equal the branching oracle", criterion_reduction},
  };
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    Check chk;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      e.fn(chk);
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    auto end = std::chrono::steady_clock::now();
    CriterionResult res;
    res.id = e.id;
    res.name = e.name;
    res.pass = chk.failed == 0 && error.empty();
    res.details = error.empty() ? chk.summary("checks") : ("exception: " + error);
    res.millis = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    if (progress)
      (*progress) << (res.pass ? "PASS" : "FAIL") << "  [" << res.id << "/12] " << res.name
                  << " (" << res.details << ", " << res.millis << " ms)" << std::endl;
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace itrails
