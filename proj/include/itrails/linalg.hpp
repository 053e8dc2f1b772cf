#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itrails {

using Rat = mpq_class;
using Int = long long;
using IntVec = std::vector<Int>;
// letters of a word are 1..r; negative letters appear only in double words
using Word = std::vector<int>;

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat rat_of(Int n) { return Rat(static_cast<long>(n)); }

// dense exact-rational matrix, row-major
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> v;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  RatMat mul(const RatMat& o) const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  bool is_zero() const;
  RatMat inverse() const;  // throws ComputeError if singular
  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && v == o.v; }
};

// solve a*x = b exactly; false if inconsistent or underdetermined
bool solve_linear(RatMat a, std::vector<Rat> b, std::vector<Rat>& x);

int rank_of(RatMat a);

// column-oriented sparse exact-rational matrix
struct SparseMat {
  int rows = 0, cols = 0;
  // per column: (row, value) pairs sorted by row, values nonzero
  std::vector<std::vector<std::pair<int, Rat>>> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

  void set(int r, int c, Rat val);
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  SparseMat mul(const SparseMat& o) const;
  SparseMat plus(const SparseMat& o) const;
  SparseMat scaled(const Rat& s) const;
  bool is_zero() const;
  size_t nnz() const;
  RatMat dense() const;
  static SparseMat from_dense(const RatMat& m);
  static SparseMat identity(int n);
  bool operator==(const SparseMat& o) const;
};

inline bool vec_is_zero(const std::vector<Rat>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace itrails
