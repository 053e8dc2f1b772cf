#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "itrails/linalg.hpp"

namespace itrails {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

// Cartan matrix with symmetrizers; entry(i,j) = alpha_j(alpha_i^vee), indices 1..r.
struct CartanData {
  Family family = Family::A;
  int rank = 0;
  std::vector<std::vector<int>> matrix;  // matrix[i-1][j-1]
  std::vector<int> d;                    // d[i-1] * a(i,j) == d[j-1] * a(j,i)

  int entry(int i, int j) const { return matrix[i - 1][j - 1]; }
  bool operator==(const CartanData& o) const { return matrix == o.matrix; }
  bool operator<(const CartanData& o) const { return matrix < o.matrix; }
  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
};

CartanData cartan(Family family, int rank);
CartanData cartan(const std::string& name);  // "A2", "B3", ...
CartanData langlands_dual(const CartanData& c);

// validates invariants: diagonal 2, off-diagonal <= 0, zero symmetry, positive-definite symmetrization
void validate_cartan(const CartanData& c);

// Weights are integer vectors of fundamental-weight coordinates; gamma(alpha_i^vee) = w[i-1].
using Weight = IntVec;

Weight weight_zero(const CartanData& c);
Weight fundamental_weight(const CartanData& c, int i);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
Weight weight_rho(const CartanData& c);
bool is_dominant(const Weight& w);

// s_i(gamma) = gamma - gamma(alpha_i^vee) alpha_i
Weight reflect(const CartanData& c, const Weight& w, int i);

// omega-coordinates of alpha_i
Weight simple_root_weight(const CartanData& c, int i);

// omega-coordinates of a root-lattice element given by root coordinates
Weight weight_from_root_coords(const CartanData& c, const IntVec& rc);

// exact simple-root coordinates of a weight (rational in general)
std::vector<Rat> root_coords(const CartanData& c, const Weight& w);

// integer root coordinates; nullopt when the weight is not in the root lattice
std::optional<IntVec> root_coords_integral(const CartanData& c, const Weight& w);

// gamma(omega_i^vee), the coefficient of alpha_i in the root-basis expansion
Rat pair_fundamental_coweight(const CartanData& c, const Weight& w, int i);

// dominance order: a >= b iff a-b is a nonnegative integer combination of simple roots
bool dominance_geq(const CartanData& c, const Weight& a, const Weight& b);

// positive roots as root-coordinate vectors, sorted by (height, lex)
const std::vector<IntVec>& positive_roots(const CartanData& c);

// W-invariant inner product: (alpha_i, alpha_j) = d_i a(i,j)
Rat inner_product(const CartanData& c, const Weight& a, const Weight& b);

// dim V_lambda by the Weyl dimension formula
Rat weyl_dimension(const CartanData& c, const Weight& lambda);

std::string weight_to_string(const Weight& w);

}  // namespace itrails
