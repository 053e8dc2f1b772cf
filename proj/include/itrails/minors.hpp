#pragma once

#include <string>
#include <vector>

#include "itrails/module.hpp"
#include "itrails/trails.hpp"

namespace itrails {

// one-parameter or torus factor of a group element, acting in each fundamental module
struct GroupFactor {
  enum class Kind { XPlus, XMinus, Torus, SBar };
  Kind kind = Kind::XPlus;
  int index = 0;  // 1..r
  Rat t = 0;      // parameter; unused for SBar

  static GroupFactor x_plus(int i, Rat t) { return {Kind::XPlus, i, std::move(t)}; }
  static GroupFactor x_minus(int i, Rat t) { return {Kind::XMinus, i, std::move(t)}; }
  static GroupFactor torus(int i, Rat t) { return {Kind::Torus, i, std::move(t)}; }
  static GroupFactor sbar(int i) { return {Kind::SBar, i, Rat(1)}; }
};

using GroupWord = std::vector<GroupFactor>;

RatMat factor_matrix(const FundModule& m, const GroupFactor& f);
RatMat product_matrix(const FundModule& m, const GroupWord& x);

// Delta_{gamma, delta}(x) as the v+ coordinate of ubar^{-1} x vbar applied to v+,
// for gamma = u omega_i, delta = v omega_i with minimal representatives
Rat generalized_minor(const CartanData& c, int i, const Weight& gamma, const Weight& delta,
                      const GroupWord& x);

// exact Laurent-polynomial minor along a product of one-parameter subgroups
struct MinorPolynomial {
  int fund_index = 0;
  Weight gamma, delta;
  Word word;
  // sorted (exponent vector, coefficient) pairs; exponents may be negative for the
  // negative-word expansion
  std::vector<std::pair<IntVec, Rat>> terms;

  Rat eval(const std::vector<Rat>& t) const;         // t entries nonzero
  Int eval_tropical(const IntVec& t) const;          // min over exponent forms
  bool zero() const { return terms.empty(); }
};

MinorPolynomial minor_poly_positive(const CartanData& c, int i, const Weight& gamma,
                                    const Weight& delta, const Word& word);
MinorPolynomial minor_poly_negative(const CartanData& c, int i, const Weight& gamma,
                                    const Weight& delta, const Word& word);

// parameter transforms between x_{-i} products and reversed positive products
std::vector<Rat> negative_word_params_to_positive(const CartanData& c, const Word& word,
                                                  const std::vector<Rat>& t);
std::vector<Rat> positive_word_params_to_negative(const CartanData& c, const Word& word,
                                                  const std::vector<Rat>& tp);

struct IdentityReport {
  std::string id;
  std::string type;
  Int seed = 0;
  int trials = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// id in {dodgson, plucker1, plucker2, endpoints, braid}; exact evaluation at seeded
// random positive-rational points, every counterexample reported
IdentityReport verify_identity(const std::string& id, const CartanData& c, int trials, Int seed);

}  // namespace itrails
