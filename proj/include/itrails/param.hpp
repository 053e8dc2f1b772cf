#pragma once

#include <utility>
#include <vector>

#include "itrails/ineq.hpp"
#include "itrails/semifield.hpp"
#include "itrails/trails.hpp"

namespace itrails {

enum class ParamSide { Lusztig, String };

// parameter vector over a semifield attached to a reduced word of w_o
struct ParamVector {
  Word word;
  ParamSide side = ParamSide::Lusztig;
  std::vector<SFValue> values;
};

// transition along the Tits path between two reduced words of w_o; Lusztig side uses
// positive rank-2 moves, string side negative ones.  Tropical values are canonical-basis
// parameters, so the tables are built from the transposed Cartan matrix.
std::vector<SFValue> transition(const CartanData& c, ParamSide side, const Word& from,
                                const Word& to, const std::vector<SFValue>& t);

// same, along a caller-supplied move path starting at `from`
std::vector<SFValue> transition_along(const CartanData& c, ParamSide side, const Word& from,
                                      const std::vector<BraidMove>& path,
                                      const std::vector<SFValue>& t);

// string in direction i of the canonical-basis vector with Lusztig parameters t' along i';
// computed from the trail formula over fundamental modules of the Langlands dual
IntVec lusztig_to_string(const CartanData& c, const Word& i, const Word& iprime,
                         const IntVec& tprime);

// largest n with b in E_{i0}^n U^+, from Lusztig parameters along i
Int l_i_value(const CartanData& c, int i0, const Word& i, const IntVec& t);

// first and last Lusztig components along i' of the vector with string t along i
std::pair<Int, Int> endpoints_from_string(const CartanData& c, const Word& i, const Word& iprime,
                                          const IntVec& t);

enum class ConeMode { General, Split, FullyCommutative, TypeA };

// inequality system cutting out the string cone C_i; flag subsets are required for the
// split and fully-commutative modes (nested, ending at [1,r])
IneqSystem string_cone(const CartanData& c, const Word& i, ConeMode mode,
                       const std::vector<std::vector<int>>& flag = {});

bool in_string_cone(const CartanData& c, const Word& i, const IntVec& t);

// string parameters of (f~_{i0}^iota)^n applied to the vector with string t along i
IntVec crystal_apply(const CartanData& c, const Word& i, const IntVec& t, int i0, Int n);

// geometric counterpart over positive rationals, scaling factor cc > 0
std::vector<Rat> geom_crystal_apply(const CartanData& c, const Word& i, const std::vector<Rat>& t,
                                    int i0, const Rat& cc);

// positions (1-based) of subwords of `word` that are reduced words for u
std::vector<std::vector<int>> reduced_subwords(const CartanData& c, const Word& word,
                                               const WeylElement& u);

}  // namespace itrails
