#pragma once

#include <map>
#include <vector>

#include "itrails/cartan.hpp"
#include "itrails/weyl.hpp"

namespace itrails {

// weight multiplicities of a simple module, computed by the Freudenthal recursion
struct CharacterTable {
  Weight highest;
  std::map<Weight, Int> mult;  // every weight of V_lambda, multiplicity > 0
  Int dimension() const;
};

const CharacterTable& character_table(const CartanData& c, const Weight& lambda);

Int weight_multiplicity(const CartanData& c, const Weight& lambda, const Weight& mu);

// c_{lambda,nu}^mu by the alternating Weyl sum over weight multiplicities
Int tensor_multiplicity_oracle(const CartanData& c, const Weight& lambda, const Weight& nu,
                               const Weight& mu, size_t weyl_cap = 100000);

// multiplicity of the g(I)-module V_beta^{(I)} in V_nu restricted to the Levi of I
Int branching_oracle(const CartanData& c, const std::vector<int>& I, const Weight& nu,
                     const Weight& beta);

// all g(I)-dominant beta with nonzero multiplicity
std::map<Weight, Int> branching_decomposition(const CartanData& c, const std::vector<int>& I,
                                              const Weight& nu);

// Weyl dimension formula for the Levi subalgebra of I
Rat parabolic_weyl_dimension(const CartanData& c, const std::vector<int>& I, const Weight& beta);

}  // namespace itrails
