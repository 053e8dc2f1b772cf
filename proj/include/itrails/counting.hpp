#pragma once

#include <map>
#include <string>
#include <vector>

#include "itrails/ineq.hpp"
#include "itrails/param.hpp"
#include "itrails/trails.hpp"

namespace itrails {

enum class MultMethod {
  LusztigTrails,
  StringTrails,
  PluckerLusztig,
  PluckerStrings,
  Classical,
  Oracle,
};

MultMethod mult_method_from_string(const std::string& s);
std::string mult_method_name(MultMethod m);

struct MultiplicityQuery {
  CartanData cartan;
  Weight lambda, nu, mu;
  Word word;  // reduced word of w_o; unused for Classical / Oracle
  MultMethod method = MultMethod::LusztigTrails;
};

// the polytope whose lattice points count c_{lambda,nu}^mu for the query's method
IneqSystem build_system(const MultiplicityQuery& q);

// number of lattice points; Plucker methods additionally re-check every point
// through the tropical Plucker coordinates, Oracle dispatches to the Weyl-sum oracle
Int multiplicity_count(const MultiplicityQuery& q);

// B/C/D systems in the t_i^{(j)} variables (the paper's nonstandard index sets are
// mapped onto the Bourbaki one internally)
IneqSystem classical_system(const CartanData& c, const Weight& lambda, const Weight& mu,
                            const Weight& nu);
// the reduced word whose string-trails system the classical one specializes, with
// variables in matching order
Word classical_designated_word(const CartanData& c);
// paper index -> Bourbaki index table (paper indices as strings: "0", "-1", ...)
std::map<std::string, int> classical_index_map(const CartanData& c);

struct ReductionQuery {
  CartanData cartan;
  std::vector<int> I;
  Weight nu, beta;
  Word word;  // reduced word of w_o(I)^{-1} w_o
  bool string_method = false;
};

IneqSystem build_reduction_system(const ReductionQuery& q);
Int reduction_count(const ReductionQuery& q);
Word reduction_default_word(const CartanData& c, const std::vector<int>& I);

// p x q matrix systems for type A_{p+q-1} with I = [1,r] \ {p}
IneqSystem reduction_pq(int p, int q, const Weight& nu, const Weight& beta, bool string_method);
Word reduction_pq_word(int p, int q);

// tropical Plucker coordinates of a parameter tuple, including the derived
// coordinates M_{s_i omega_i^vee, gamma} from the iterated Dodgson-type identity
struct PluckerTuple {
  CartanData dual;
  // orbit[i-1]: gamma -> M_{omega_i^vee, gamma};  derived[i-1]: gamma -> M_{s_i omega_i^vee, gamma}
  std::vector<std::map<Weight, SFValue>> orbit;
  std::vector<std::map<Weight, SFValue>> derived;
};

PluckerTuple plucker_coordinates(const CartanData& c, const Word& i, const IntVec& t,
                                 ParamSide side);

}  // namespace itrails
