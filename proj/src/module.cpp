#include "itrails/module.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include <json.hpp>

namespace itrails {

using SparseVec = std::map<int, Rat>;

std::pair<int, int> FundModule::space(const Weight& w) const {
  auto it = spaces.find(w);
  if (it == spaces.end()) return {0, 0};
  return it->second;
}

int FundModule::weight_dim(const Weight& w) const {
  auto [b, e] = space(w);
  return e - b;
}

const SparseMat& FundModule::e_divided(int i, int n) const {
  const auto& pows = e_pow[i - 1];
  return n < static_cast<int>(pows.size()) ? pows[n] : zero_mat;
}

const SparseMat& FundModule::f_divided(int i, int n) const {
  const auto& pows = f_pow[i - 1];
  return n < static_cast<int>(pows.size()) ? pows[n] : zero_mat;
}

ModVector mod_zero(const FundModule& m) { return ModVector(m.dim, Rat(0)); }

ModVector highest_vector(const FundModule& m) {
  ModVector v = mod_zero(m);
  v[0] = 1;
  return v;
}

bool mod_is_zero(const ModVector& v) { return vec_is_zero(v); }

ModVector divided_power(const FundModule& m, char gen, int j, int n, const ModVector& v) {
  if (n < 0) throw InputError("divided power exponent must be nonnegative");
  const SparseMat& mat = (gen == 'e') ? m.e_divided(j, n) : m.f_divided(j, n);
  return mat.apply(v);
}

namespace {

struct Builder {
  const CartanData& c;
  int dim_cap;
  std::vector<Weight> basis_weight;
  std::map<Weight, std::pair<int, int>> spaces;
  std::vector<std::vector<SparseVec>> e_cols, f_cols;  // [letter-1][global index]
  std::map<Weight, RatMat> gram;

  explicit Builder(const CartanData& cc, int cap) : c(cc), dim_cap(cap) {
    e_cols.assign(c.rank, {});
    f_cols.assign(c.rank, {});
  }

  int dim() const { return static_cast<int>(basis_weight.size()); }

  SparseVec apply_col(const std::vector<SparseVec>& cols, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [idx, val] : v)
      for (const auto& [r, cv] : cols[idx]) {
        Rat x = out[r] += val * cv;
        if (x == 0) out.erase(r);
      }
    return out;
  }

  // <basis b, x> with x in the same weight space, via the stored Gram matrix
  Rat pair_with_basis(int b, const SparseVec& x) const {
    const Weight& w = basis_weight[b];
    auto [begin, end] = spaces.at(w);
    const RatMat& g = gram.at(w);
    Rat s = 0;
    for (const auto& [idx, val] : x) {
      if (idx < begin || idx >= end) throw ComputeError("inner product across weight spaces");
      s += val * g.at(b - begin, idx - begin);
    }
    return s;
  }

  void build(const Weight& lambda) {
    basis_weight.push_back(lambda);
    spaces[lambda] = {0, 1};
    for (int j = 0; j < c.rank; ++j) {
      e_cols[j].push_back({});
      f_cols[j].push_back({});
    }
    RatMat g0(1, 1);
    g0.at(0, 0) = 1;
    gram[lambda] = g0;

    std::vector<int> level = {0};
    while (!level.empty()) {
      // target weights one root lower
      std::set<Weight> targets;
      for (int b : level)
        for (int j = 1; j <= c.rank; ++j)
          targets.insert(weight_sub(basis_weight[b], simple_root_weight(c, j)));

      std::vector<int> next_level;
      for (const Weight& mu : targets) {
        // candidates f_j b, ordered by (j, b)
        std::vector<std::pair<int, int>> cand;
        for (int j = 1; j <= c.rank; ++j) {
          Weight up = weight_add(mu, simple_root_weight(c, j));
          auto it = spaces.find(up);
          if (it == spaces.end()) continue;
          for (int b = it->second.first; b < it->second.second; ++b) cand.emplace_back(j, b);
        }
        if (cand.empty()) continue;
        int n = static_cast<int>(cand.size());

        // Shapovalov Gram on the candidate span
        RatMat g(n, n);
        for (int x = 0; x < n; ++x) {
          auto [j, b] = cand[x];
          for (int y = 0; y < n; ++y) {
            auto [k, bp] = cand[y];
            SparseVec v = apply_col(f_cols[k - 1], e_cols[j - 1][bp]);
            Rat s = pair_with_basis(b, v);
            if (j == k) {
              Rat diag = rat_of(weight_add(mu, simple_root_weight(c, j))[j - 1]);
              s += diag * pair_with_basis(b, SparseVec{{bp, Rat(1)}});
            }
            g.at(x, y) = s;
          }
        }

        // greedy selection of a full-rank subset in candidate order
        std::vector<int> sel;
        for (int x = 0; x < n; ++x) {
          std::vector<int> trial(sel);
          trial.push_back(x);
          RatMat sub(static_cast<int>(trial.size()), static_cast<int>(trial.size()));
          for (size_t p = 0; p < trial.size(); ++p)
            for (size_t q = 0; q < trial.size(); ++q) sub.at(p, q) = g.at(trial[p], trial[q]);
          if (rank_of(sub) == static_cast<int>(trial.size())) sel.push_back(x);
        }
        if (sel.empty()) continue;

        int base = dim();
        int ns = static_cast<int>(sel.size());
        if (base + ns > dim_cap) throw ComputeError("module dimension exceeds the configured cap");
        spaces[mu] = {base, base + ns};
        RatMat gsel(ns, ns);
        for (int p = 0; p < ns; ++p)
          for (int q = 0; q < ns; ++q) gsel.at(p, q) = g.at(sel[p], sel[q]);
        gram[mu] = gsel;

        for (int p = 0; p < ns; ++p) {
          auto [j, b] = cand[sel[p]];
          basis_weight.push_back(mu);
          int idx = base + p;
          next_level.push_back(idx);
          for (int k = 1; k <= c.rank; ++k) {
            // e_k(f_j b) = f_j(e_k b) + delta_{kj} (mu+alpha_j)(alpha_k^vee) b
            SparseVec img = apply_col(f_cols[j - 1], e_cols[k - 1][b]);
            if (k == j) {
              Rat diag = rat_of(weight_add(mu, simple_root_weight(c, j))[j - 1]);
              Rat x = img[b] += diag;
              if (x == 0) img.erase(b);
            }
            e_cols[k - 1].push_back(std::move(img));
            f_cols[k - 1].push_back({});
          }
        }

        // express every candidate over the selected basis: solve G_SS x = G_S,cand
        for (int x = 0; x < n; ++x) {
          auto [j, b] = cand[x];
          std::vector<Rat> rhs(ns);
          for (int p = 0; p < ns; ++p) rhs[p] = g.at(sel[p], x);
          std::vector<Rat> coeff;
          if (!solve_linear(gsel, rhs, coeff))
            throw ComputeError("Shapovalov expression solve failed");
          SparseVec colv;
          for (int p = 0; p < ns; ++p)
            if (coeff[p] != 0) colv[base + p] = coeff[p];
          f_cols[j - 1][b] = std::move(colv);
        }
      }
      level = std::move(next_level);
    }
  }

  FundModule finish(const Weight& lambda, int fund_index) {
    FundModule m;
    m.cartan = c;
    m.fund_index = fund_index;
    m.highest = lambda;
    m.dim = dim();
    m.weight_of = basis_weight;
    m.spaces = spaces;
    m.e_mat.assign(c.rank, SparseMat(m.dim, m.dim));
    m.f_mat.assign(c.rank, SparseMat(m.dim, m.dim));
    for (int j = 0; j < c.rank; ++j)
      for (int b = 0; b < m.dim; ++b) {
        for (const auto& [r, v] : e_cols[j][b]) m.e_mat[j].col[b].emplace_back(r, v);
        for (const auto& [r, v] : f_cols[j][b]) m.f_mat[j].col[b].emplace_back(r, v);
      }
    // divided powers until nilpotency
    auto powers = [&](const SparseMat& g) {
      std::vector<SparseMat> p{SparseMat::identity(m.dim)};
      Rat fact = 1;
      SparseMat acc = SparseMat::identity(m.dim);
      for (int n = 1; n <= m.dim + 1; ++n) {
        acc = g.mul(acc);
        fact *= n;
        SparseMat dp = acc.scaled(Rat(1) / fact);
        if (dp.is_zero()) break;
        p.push_back(std::move(dp));
      }
      return p;
    };
    for (int j = 0; j < c.rank; ++j) {
      m.e_pow.push_back(powers(m.e_mat[j]));
      m.f_pow.push_back(powers(m.f_mat[j]));
    }
    m.gram = gram;
    m.zero_mat = SparseMat(m.dim, m.dim);
    return m;
  }
};

std::map<std::pair<std::vector<std::vector<int>>, int>, std::unique_ptr<FundModule>> g_modules;
std::mutex g_modules_mutex;

}  // namespace

FundModule build_simple_module(const CartanData& c, const Weight& lambda, int dim_cap) {
  if (!is_dominant(lambda)) throw InputError("highest weight must be dominant");
  Rat expect = weyl_dimension(c, lambda);
  if (expect > dim_cap) throw ComputeError("module dimension exceeds the configured cap");
  Builder b(c, dim_cap);
  b.build(lambda);
  FundModule m = b.finish(lambda, 0);
  if (rat_of(m.dim) != expect)
    throw ComputeError("constructed dimension disagrees with the Weyl formula");
  return m;
}

FundModule build_module(const CartanData& c, int i, int dim_cap) {
  if (i < 1 || i > c.rank) throw InputError("fundamental index out of range");
  FundModule m = build_simple_module(c, fundamental_weight(c, i), dim_cap);
  m.fund_index = i;
  return m;
}

ModVector extremal_vector(const FundModule& m, const Weight& gamma) {
  auto u = orbit_witness(m.cartan, m.highest, gamma);
  if (!u) throw InputError("weight is not extremal");
  if (weyl_apply(*u, m.highest) != gamma) throw ComputeError("orbit witness mismatch");
  return extremal_vector_along(m, canonical_reduced_word(m.cartan, *u));
}

ModVector extremal_vector_along(const FundModule& m, const Word& word) {
  ModVector v = highest_vector(m);
  Weight cur = m.highest;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Int n = cur[*it - 1];
    if (n < 0) throw InputError("word is not adapted to the extremal chain");
    v = divided_power(m, 'f', *it, static_cast<int>(n), v);
    cur = reflect(m.cartan, cur, *it);
  }
  if (mod_is_zero(v)) throw ComputeError("extremal chain produced zero");
  return v;
}

RatMat shapovalov_gram(const FundModule& m, const Weight& mu) {
  auto it = m.gram.find(mu);
  if (it == m.gram.end()) throw InputError("not a weight of the module");
  return it->second;
}

std::string module_to_json(const FundModule& m) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["family"] = std::string(1, static_cast<char>(m.cartan.family));
  j["rank"] = m.cartan.rank;
  j["matrix"] = m.cartan.matrix;
  j["symmetrizers"] = m.cartan.d;
  j["fund_index"] = m.fund_index;
  j["highest"] = m.highest;
  j["dim"] = m.dim;
  j["weights"] = m.weight_of;
  auto mats = [&](const std::vector<SparseMat>& v) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& mat : v) {
      nlohmann::ordered_json triplets = nlohmann::ordered_json::array();
      for (int c = 0; c < mat.cols; ++c)
        for (const auto& [r, val] : mat.col[c])
          triplets.push_back({r, c, val.get_str()});
      out.push_back(triplets);
    }
    return out;
  };
  j["e"] = mats(m.e_mat);
  j["f"] = mats(m.f_mat);
  nlohmann::ordered_json grams = nlohmann::ordered_json::array();
  for (const auto& [w, g] : m.gram) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& x : g.v) entries.push_back(x.get_str());
    grams.push_back({{"weight", w}, {"n", g.rows}, {"entries", entries}});
  }
  j["gram"] = grams;
  return j.dump();
}

FundModule module_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.at("format_version").get<int>() != 1) throw InputError("unsupported module format version");
  CartanData c;
  c.family = family_from_char(j.at("family").get<std::string>().at(0));
  c.rank = j.at("rank").get<int>();
  c.matrix = j.at("matrix").get<std::vector<std::vector<int>>>();
  c.d = j.at("symmetrizers").get<std::vector<int>>();
  validate_cartan(c);
  FundModule m;
  m.cartan = c;
  m.fund_index = j.at("fund_index").get<int>();
  m.highest = j.at("highest").get<Weight>();
  m.dim = j.at("dim").get<int>();
  m.weight_of = j.at("weights").get<std::vector<Weight>>();
  for (int b = 0; b < m.dim; ++b) {
    auto it = m.spaces.find(m.weight_of[b]);
    if (it == m.spaces.end())
      m.spaces[m.weight_of[b]] = {b, b + 1};
    else
      it->second.second = b + 1;
  }
  auto mats = [&](const nlohmann::json& arr) {
    std::vector<SparseMat> out;
    for (const auto& triplets : arr) {
      SparseMat mat(m.dim, m.dim);
      for (const auto& t : triplets)
        mat.col[t.at(1).get<int>()].emplace_back(t.at(0).get<int>(),
                                                 Rat(t.at(2).get<std::string>()));
      out.push_back(std::move(mat));
    }
    return out;
  };
  m.e_mat = mats(j.at("e"));
  m.f_mat = mats(j.at("f"));
  auto powers = [&](const SparseMat& g) {
    std::vector<SparseMat> p{SparseMat::identity(m.dim)};
    Rat fact = 1;
    SparseMat acc = SparseMat::identity(m.dim);
    for (int n = 1; n <= m.dim + 1; ++n) {
      acc = g.mul(acc);
      fact *= n;
      SparseMat dp = acc.scaled(Rat(1) / fact);
      if (dp.is_zero()) break;
      p.push_back(std::move(dp));
    }
    return p;
  };
  for (int k = 0; k < c.rank; ++k) {
    m.e_pow.push_back(powers(m.e_mat[k]));
    m.f_pow.push_back(powers(m.f_mat[k]));
  }
  for (const auto& entry : j.at("gram")) {
    int n = entry.at("n").get<int>();
    RatMat g(n, n);
    const auto& es = entry.at("entries");
    for (int t = 0; t < n * n; ++t) g.v[t] = Rat(es.at(t).get<std::string>());
    m.gram[entry.at("weight").get<Weight>()] = g;
  }
  m.zero_mat = SparseMat(m.dim, m.dim);
  return m;
}

const FundModule& cached_module(const CartanData& c, int i) {
  std::lock_guard<std::mutex> lock(g_modules_mutex);
  auto key = std::make_pair(c.matrix, i);
  auto it = g_modules.find(key);
  if (it != g_modules.end()) return *it->second;
  auto m = std::make_unique<FundModule>(build_module(c, i));
  auto* p = m.get();
  g_modules.emplace(std::move(key), std::move(m));
  return *p;
}

}  // namespace itrails
