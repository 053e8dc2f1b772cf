#pragma once

#include <utility>
#include <vector>

#include "itrails/module.hpp"

namespace itrails {

// weight path gamma_0 .. gamma_l along a word, with step statistics
// c_k = (gamma_{k-1} - gamma_k)/2 (alpha_{i_k}^vee), d_k = (gamma_{k-1} + gamma_k)/2 (alpha_{i_k}^vee)
struct Trail {
  Word word;
  std::vector<Weight> weights;
  IntVec c, d;
};

Trail trail_from_weights(const CartanData& cartan, const Word& word,
                         std::vector<Weight> weights);

enum class TrailCondition { EImage, FImage };

// complete duplicate-free list of trails from gamma to delta, sorted by c-vector;
// the nonvanishing condition is checked exactly on divided-power matrix products
std::vector<Trail> enumerate_trails(const FundModule& m, const Weight& gamma, const Weight& delta,
                                    const Word& word,
                                    TrailCondition cond = TrailCondition::EImage);

// extremal trails via subwords of `word` that are reduced words for u v^{-1};
// empty when l(u v^{-1}) != l(v) - l(u)
std::vector<Trail> extremal_trails(const FundModule& m, const Weight& gamma, const Weight& delta,
                                   const Word& word);

// lower and upper weight chains; every trail lies between them in dominance order
std::pair<std::vector<Weight>, std::vector<Weight>> trail_bounds(const FundModule& m,
                                                                 const Weight& gamma,
                                                                 const Weight& delta,
                                                                 const Word& word);

std::vector<int> splitting_indices(const FundModule& m, const Weight& gamma, const Weight& delta,
                                   const Word& word);

// process-wide memoized enumeration keyed by (module, gamma, delta, word)
const std::vector<Trail>& cached_trails(const FundModule& m, const Weight& gamma,
                                        const Weight& delta, const Word& word);

}  // namespace itrails
