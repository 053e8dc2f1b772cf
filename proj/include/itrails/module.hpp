#pragma once

#include <map>
#include <string>
#include <vector>

#include "itrails/cartan.hpp"
#include "itrails/weyl.hpp"

namespace itrails {

using ModVector = std::vector<Rat>;  // coefficients over the module basis

// Exact-rational simple highest-weight module with Chevalley generator matrices.
// Basis vectors are grouped contiguously by weight; index 0 is the highest vector.
struct FundModule {
  CartanData cartan;
  int fund_index = 0;  // 0 when built from a non-fundamental highest weight
  Weight highest;
  int dim = 0;
  std::vector<Weight> weight_of;                       // per basis index
  std::map<Weight, std::pair<int, int>> spaces;        // weight -> [begin, end)
  std::vector<SparseMat> e_mat, f_mat;                 // one per letter, dim x dim
  std::vector<std::vector<SparseMat>> e_pow, f_pow;    // divided powers e^(n)/f^(n) until zero
  std::map<Weight, RatMat> gram;                       // Shapovalov form per weight space
  SparseMat zero_mat;

  bool has_weight(const Weight& w) const { return spaces.count(w) != 0; }
  std::pair<int, int> space(const Weight& w) const;
  int weight_dim(const Weight& w) const;
  const SparseMat& e_divided(int i, int n) const;  // zero matrix beyond nilpotency
  const SparseMat& f_divided(int i, int n) const;
};

inline constexpr int kDefaultDimCap = 2000;

// simple module with highest weight lambda (Weyl-formula dimension asserted internally)
FundModule build_simple_module(const CartanData& c, const Weight& lambda,
                               int dim_cap = kDefaultDimCap);
// fundamental module V_{omega_i}
FundModule build_module(const CartanData& c, int i, int dim_cap = kDefaultDimCap);

ModVector mod_zero(const FundModule& m);
ModVector highest_vector(const FundModule& m);
bool mod_is_zero(const ModVector& v);

// e_j^{(n)} v or f_j^{(n)} v
ModVector divided_power(const FundModule& m, char gen, int j, int n, const ModVector& v);

// normalized extremal vector: divided-power f-chain from the highest vector along the
// canonical reduced word of the minimal coset representative
ModVector extremal_vector(const FundModule& m, const Weight& gamma);
// same chain along a caller-supplied reduced word of the minimal representative
ModVector extremal_vector_along(const FundModule& m, const Word& word);

// versioned JSON serialization for caching constructed modules
std::string module_to_json(const FundModule& m);
FundModule module_from_json(const std::string& text);

// per-weight-space Shapovalov Gram matrix of the constructed basis
RatMat shapovalov_gram(const FundModule& m, const Weight& mu);

// process-wide cache of fundamental modules
const FundModule& cached_module(const CartanData& c, int i);

}  // namespace itrails
