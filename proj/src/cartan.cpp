#include "itrails/cartan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace itrails {

RatMat RatMat::mul(const RatMat& o) const {
  if (cols != o.rows) throw ComputeError("matrix shape mismatch");
  RatMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != cols) throw ComputeError("matrix/vector shape mismatch");
  std::vector<Rat> r(rows, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
  return r;
}

bool RatMat::is_zero() const {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatMat RatMat::inverse() const {
  if (rows != cols) throw ComputeError("inverse of non-square matrix");
  int n = rows;
  RatMat a = *this, inv = RatMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) throw ComputeError("singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    Rat piv = a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) /= piv;
      inv.at(c, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a.at(r, c) == 0) continue;
      Rat f = a.at(r, c);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        inv.at(r, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

bool solve_linear(RatMat a, std::vector<Rat> b, std::vector<Rat>& x) {
  int n = a.rows, m = a.cols;
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < m && row < n; ++c) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m; ++j) std::swap(a.at(p, j), a.at(row, j));
      std::swap(b[p], b[row]);
    }
    Rat piv = a.at(row, c);
    for (int j = 0; j < m; ++j) a.at(row, j) /= piv;
    b[row] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == row || a.at(r, c) == 0) continue;
      Rat f = a.at(r, c);
      for (int j = 0; j < m; ++j) a.at(r, j) -= f * a.at(row, j);
      b[r] -= f * b[row];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (b[r] != 0) return false;
  if (static_cast<int>(pivot_col.size()) != m) return false;
  x.assign(m, Rat(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  return true;
}

int rank_of(RatMat a) {
  int n = a.rows, m = a.cols, row = 0;
  for (int c = 0; c < m && row < n; ++c) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (a.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m; ++j) std::swap(a.at(p, j), a.at(row, j));
    for (int r = row + 1; r < n; ++r) {
      if (a.at(r, c) == 0) continue;
      Rat f = a.at(r, c) / a.at(row, c);
      for (int j = c; j < m; ++j) a.at(r, j) -= f * a.at(row, j);
    }
    ++row;
  }
  return row;
}

void SparseMat::set(int r, int c, Rat val) {
  auto& column = col[c];
  auto it = std::lower_bound(column.begin(), column.end(), r,
                             [](const std::pair<int, Rat>& e, int row) { return e.first < row; });
  if (it != column.end() && it->first == r) {
    if (val == 0)
      column.erase(it);
    else
      it->second = std::move(val);
  } else if (val != 0) {
    column.insert(it, {r, std::move(val)});
  }
}

std::vector<Rat> SparseMat::apply(const std::vector<Rat>& x) const {
  std::vector<Rat> r(rows, Rat(0));
  for (int c = 0; c < cols; ++c) {
    if (x[c] == 0) continue;
    for (const auto& [row, val] : col[c]) r[row] += val * x[c];
  }
  return r;
}

SparseMat SparseMat::mul(const SparseMat& o) const {
  if (cols != o.rows) throw ComputeError("sparse shape mismatch");
  SparseMat r(rows, o.cols);
  for (int c = 0; c < o.cols; ++c) {
    std::map<int, Rat> acc;
    for (const auto& [k, bv] : o.col[c])
      for (const auto& [row, av] : col[k]) acc[row] += av * bv;
    for (auto& [row, val] : acc)
      if (val != 0) r.col[c].emplace_back(row, std::move(val));
  }
  return r;
}

SparseMat SparseMat::plus(const SparseMat& o) const {
  if (rows != o.rows || cols != o.cols) throw ComputeError("sparse shape mismatch");
  SparseMat r(rows, cols);
  for (int c = 0; c < cols; ++c) {
    std::map<int, Rat> acc;
    for (const auto& [row, val] : col[c]) acc[row] += val;
    for (const auto& [row, val] : o.col[c]) acc[row] += val;
    for (auto& [row, val] : acc)
      if (val != 0) r.col[c].emplace_back(row, std::move(val));
  }
  return r;
}

SparseMat SparseMat::scaled(const Rat& s) const {
  SparseMat r(rows, cols);
  if (s == 0) return r;
  for (int c = 0; c < cols; ++c)
    for (const auto& [row, val] : col[c]) r.col[c].emplace_back(row, val * s);
  return r;
}

bool SparseMat::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

size_t SparseMat::nnz() const {
  size_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

RatMat SparseMat::dense() const {
  RatMat m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (const auto& [row, val] : col[c]) m.at(row, c) = val;
  return m;
}

SparseMat SparseMat::from_dense(const RatMat& m) {
  SparseMat r(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (int row = 0; row < m.rows; ++row)
      if (m.at(row, c) != 0) r.col[c].emplace_back(row, m.at(row, c));
  return r;
}

SparseMat SparseMat::identity(int n) {
  SparseMat r(n, n);
  for (int i = 0; i < n; ++i) r.col[i].emplace_back(i, Rat(1));
  return r;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && cols == o.cols && col == o.col;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ComputeError("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ComputeError("integer overflow in multiplication");
  return r;
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw InputError(std::string("unknown family letter: ") + c);
  }
}

namespace {

std::vector<int> solve_symmetrizers(const std::vector<std::vector<int>>& a) {
  int r = static_cast<int>(a.size());
  // propagate d_j/d_i = a(i,j)/a(j,i) along edges of the Dynkin graph
  std::vector<Rat> d(r, Rat(0));
  std::vector<int> stack;
  for (int start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rat dj = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw InputError("matrix is not symmetrizable");
        }
      }
    }
  }
  mpz_class l(1);
  for (const auto& x : d) l = lcm(l, x.get_den());
  std::vector<mpz_class> num(r);
  for (int i = 0; i < r; ++i) num[i] = d[i].get_num() * (l / d[i].get_den());
  mpz_class g = num[0];
  for (int i = 1; i < r; ++i) g = gcd(g, num[i]);
  std::vector<int> out(r);
  for (int i = 0; i < r; ++i) out[i] = static_cast<int>(mpz_class(num[i] / g).get_si());
  return out;
}

struct CartanInfo {
  RatMat a;             // matrix as RatMat (a[i][j] = entry(i+1,j+1))
  RatMat a_inv;
  std::vector<IntVec> pos_roots;
};

std::map<std::vector<std::vector<int>>, std::unique_ptr<CartanInfo>> g_info;
std::mutex g_info_mutex;

const CartanInfo& info(const CartanData& c) {
  std::lock_guard<std::mutex> lock(g_info_mutex);
  auto it = g_info.find(c.matrix);
  if (it != g_info.end()) return *it->second;
  auto ci = std::make_unique<CartanInfo>();
  int r = c.rank;
  ci->a = RatMat(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) ci->a.at(i, j) = c.matrix[i][j];
  ci->a_inv = ci->a.inverse();

  // roots = W-orbit closure of the simple roots, in root coordinates
  std::set<IntVec> all;
  std::vector<IntVec> frontier;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& rc : frontier) {
      for (int i = 1; i <= r; ++i) {
        // s_i(alpha_j) = alpha_j - a(i,j) alpha_i, extended linearly
        IntVec im(rc);
        Int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += rc[j] * c.matrix[i - 1][j];
        im[i - 1] -= pairing;
        if (all.insert(im).second) next.push_back(im);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& rc : all) {
    bool pos = true;
    for (Int x : rc)
      if (x < 0) pos = false;
    if (pos) ci->pos_roots.push_back(rc);
  }
  std::sort(ci->pos_roots.begin(), ci->pos_roots.end(), [](const IntVec& x, const IntVec& y) {
    Int hx = std::accumulate(x.begin(), x.end(), Int(0));
    Int hy = std::accumulate(y.begin(), y.end(), Int(0));
    if (hx != hy) return hx < hy;
    return x < y;
  });
  auto* p = ci.get();
  g_info.emplace(c.matrix, std::move(ci));
  return *p;
}

}  // namespace

CartanData cartan(Family family, int rank) {
  if (rank < 1) throw InputError("rank must be positive");
  auto bad = [&]() {
    throw InputError("invalid family/rank pair: " + std::string(1, static_cast<char>(family)) +
                     std::to_string(rank));
  };
  int r = rank;
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
      break;
    case Family::B:
      if (r < 2) bad();
      for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
      a[r - 1][r - 2] = -2;  // alpha_r short
      break;
    case Family::C:
      if (r < 2) bad();
      for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
      a[r - 2][r - 1] = -2;  // alpha_r long
      break;
    case Family::D:
      if (r < 3) bad();
      for (int i = 0; i + 1 < r - 1; ++i) chain(i, i + 1);
      chain(r - 3, r - 1);
      break;
    case Family::E:
      if (r < 6 || r > 8) bad();
      chain(0, 2);
      chain(1, 3);
      for (int i = 2; i + 1 < r; ++i) chain(i, i + 1);
      break;
    case Family::F:
      if (r != 4) bad();
      chain(0, 1);
      chain(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      if (r != 2) bad();
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  CartanData c{family, rank, a, solve_symmetrizers(a)};
  validate_cartan(c);
  return c;
}

CartanData cartan(const std::string& name) {
  if (name.size() < 2) throw InputError("type name too short: " + name);
  Family f = family_from_char(name[0]);
  int rank = 0;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw InputError("bad rank in type name: " + name);
  }
  return cartan(f, rank);
}

CartanData langlands_dual(const CartanData& c) {
  CartanData d = c;
  for (int i = 0; i < c.rank; ++i)
    for (int j = 0; j < c.rank; ++j) d.matrix[i][j] = c.matrix[j][i];
  d.d = solve_symmetrizers(d.matrix);
  if (c.family == Family::B)
    d.family = Family::C;
  else if (c.family == Family::C)
    d.family = Family::B;
  validate_cartan(d);
  return d;
}

void validate_cartan(const CartanData& c) {
  int r = c.rank;
  if (static_cast<int>(c.matrix.size()) != r) throw InputError("matrix size mismatch");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(c.matrix[i].size()) != r) throw InputError("matrix size mismatch");
    if (c.matrix[i][i] != 2) throw InputError("diagonal Cartan entry must be 2");
    for (int j = 0; j < r; ++j) {
      if (i != j && c.matrix[i][j] > 0) throw InputError("off-diagonal Cartan entry must be <= 0");
      if ((c.matrix[i][j] == 0) != (c.matrix[j][i] == 0))
        throw InputError("Cartan zero pattern must be symmetric");
    }
  }
  if (static_cast<int>(c.d.size()) != r) throw InputError("symmetrizer size mismatch");
  // positive-definite symmetrization via leading principal minors
  RatMat s(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) s.at(i, j) = Rat(c.d[i]) * Rat(c.matrix[i][j]);
  for (int k = 1; k <= r; ++k) {
    RatMat m(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m.at(i, j) = s.at(i, j);
    // determinant by fraction-free elimination
    Rat det = 1;
    for (int col = 0; col < k; ++col) {
      int p = -1;
      for (int row = col; row < k; ++row)
        if (m.at(row, col) != 0) {
          p = row;
          break;
        }
      if (p < 0) {
        det = 0;
        break;
      }
      if (p != col) {
        for (int j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(col, j));
        det = -det;
      }
      det *= m.at(col, col);
      for (int row = col + 1; row < k; ++row) {
        if (m.at(row, col) == 0) continue;
        Rat f = m.at(row, col) / m.at(col, col);
        for (int j = col; j < k; ++j) m.at(row, j) -= f * m.at(col, j);
      }
    }
    if (det <= 0) throw InputError("Cartan matrix is not of finite type");
  }
}

Weight weight_zero(const CartanData& c) { return Weight(c.rank, 0); }

Weight fundamental_weight(const CartanData& c, int i) {
  Weight w(c.rank, 0);
  w[i - 1] = 1;
  return w;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

Weight weight_rho(const CartanData& c) { return Weight(c.rank, 1); }

bool is_dominant(const Weight& w) {
  for (Int x : w)
    if (x < 0) return false;
  return true;
}

Weight reflect(const CartanData& c, const Weight& w, int i) {
  Weight r(w);
  Int p = w[i - 1];
  for (int k = 1; k <= c.rank; ++k) r[k - 1] -= p * c.entry(k, i);
  return r;
}

Weight simple_root_weight(const CartanData& c, int i) {
  Weight r(c.rank, 0);
  for (int k = 1; k <= c.rank; ++k) r[k - 1] = c.entry(k, i);
  return r;
}

Weight weight_from_root_coords(const CartanData& c, const IntVec& rc) {
  Weight r(c.rank, 0);
  for (int k = 1; k <= c.rank; ++k)
    for (int i = 1; i <= c.rank; ++i) r[k - 1] += rc[i - 1] * c.entry(k, i);
  return r;
}

std::vector<Rat> root_coords(const CartanData& c, const Weight& w) {
  const auto& ci = info(c);
  std::vector<Rat> x(c.rank);
  for (int i = 0; i < c.rank; ++i) x[i] = rat_of(w[i]);
  // omega-coords = A * root-coords, so invert
  return ci.a_inv.apply(x);
}

std::optional<IntVec> root_coords_integral(const CartanData& c, const Weight& w) {
  auto rc = root_coords(c, w);
  IntVec out(c.rank);
  for (int i = 0; i < c.rank; ++i) {
    if (rc[i].get_den() != 1) return std::nullopt;
    out[i] = static_cast<Int>(rc[i].get_num().get_si());
  }
  return out;
}

Rat pair_fundamental_coweight(const CartanData& c, const Weight& w, int i) {
  return root_coords(c, w)[i - 1];
}

bool dominance_geq(const CartanData& c, const Weight& a, const Weight& b) {
  auto rc = root_coords_integral(c, weight_sub(a, b));
  if (!rc) return false;
  for (Int x : *rc)
    if (x < 0) return false;
  return true;
}

const std::vector<IntVec>& positive_roots(const CartanData& c) { return info(c).pos_roots; }

Rat inner_product(const CartanData& c, const Weight& a, const Weight& b) {
  // (gamma, alpha_j) = d_j * gamma(alpha_j^vee); expand b over simple roots
  auto rc = root_coords(c, b);
  Rat s = 0;
  for (int j = 1; j <= c.rank; ++j) s += rc[j - 1] * Rat(c.d[j - 1]) * rat_of(a[j - 1]);
  return s;
}

Rat weyl_dimension(const CartanData& c, const Weight& lambda) {
  if (!is_dominant(lambda)) throw InputError("weyl_dimension needs a dominant weight");
  Weight rho = weight_rho(c);
  Weight lr = weight_add(lambda, rho);
  Rat num = 1, den = 1;
  for (const auto& rc : positive_roots(c)) {
    Weight beta = weight_from_root_coords(c, rc);
    num *= inner_product(c, lr, beta);
    den *= inner_product(c, rho, beta);
  }
  return num / den;
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << "]";
  return os.str();
}

}  // namespace itrails
