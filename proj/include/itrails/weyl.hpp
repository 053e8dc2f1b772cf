#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "itrails/cartan.hpp"

namespace itrails {

// Weyl group element stored by its action matrices, so equality is coordinate-wise.
// wt[j-1] = omega-coordinates of w(omega_j); rt[j-1] = root coordinates of w(alpha_j).
struct WeylElement {
  std::vector<IntVec> wt;
  std::vector<IntVec> rt;

  bool operator==(const WeylElement& o) const { return rt == o.rt; }
  bool operator<(const WeylElement& o) const { return rt < o.rt; }
};

WeylElement weyl_identity(const CartanData& c);
WeylElement weyl_simple(const CartanData& c, int i);
WeylElement weyl_mul(const WeylElement& u, const WeylElement& v);
WeylElement weyl_from_word(const CartanData& c, const Word& w);
WeylElement weyl_inverse(const CartanData& c, const WeylElement& w);

Weight weyl_apply(const WeylElement& w, const Weight& gamma);
IntVec weyl_apply_root(const WeylElement& w, const IntVec& rc);

// true iff w(alpha_i) is a negative root
bool is_right_descent(const WeylElement& w, int i);

int weyl_length(const CartanData& c, const WeylElement& w);
bool is_reduced_word(const CartanData& c, const Word& w);

// lexicographically smallest reduced word
Word canonical_reduced_word(const CartanData& c, const WeylElement& w);

WeylElement longest_element(const CartanData& c);
// longest element of the parabolic subgroup generated by {s_i : i in I}
WeylElement longest_element_parabolic(const CartanData& c, const std::vector<int>& I);

// complete duplicate-free R(w), sorted; refuses lengths > materialize_limit
std::vector<Word> reduced_words(const CartanData& c, const WeylElement& w, int materialize_limit = 16);
// streaming enumeration in the same order, for long elements
void for_each_reduced_word(const CartanData& c, const WeylElement& w,
                           const std::function<bool(const Word&)>& fn);

// d-move replacing word[pos..pos+d-1] = (x,y,x,...) by (y,x,y,...); pos is 0-based
struct BraidMove {
  int pos = 0;
  int d = 0;
};

int braid_order(const CartanData& c, int i, int j);  // order of s_i s_j: 2,3,4 or 6
Word apply_move(const CartanData& c, const Word& w, const BraidMove& mv);

// shortest d-move path from `from` to `to`; both must be reduced words for the same element
std::vector<BraidMove> tits_path(const CartanData& c, const Word& from, const Word& to);

// the involution i -> i* with w_o(alpha_i) = -alpha_{i*}
int star(const CartanData& c, int i);
Word word_star(const CartanData& c, const Word& w);
Word word_reverse(const Word& w);

bool is_fully_commutative(const CartanData& c, const WeylElement& w);

// minimal representative of the coset W_{[1,r] \ {i}} s_i w_o
WeylElement minuscule_coset_rep(const CartanData& c, int i);

// minimal-length representative of w modulo the stabilizer of a dominant weight
WeylElement minimal_coset_rep(const CartanData& c, const WeylElement& w, const Weight& dominant);

// minimal u with u(dominant) = gamma; nullopt if gamma is not in the orbit
std::optional<WeylElement> orbit_witness(const CartanData& c, const Weight& dominant,
                                         const Weight& gamma);

std::vector<WeylElement> weyl_group_elements(const CartanData& c, size_t cap = 100000);
std::vector<WeylElement> parabolic_elements(const CartanData& c, const std::vector<int>& I,
                                            size_t cap = 100000);

}  // namespace itrails
