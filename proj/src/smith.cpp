#include "levelmcg/smith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace levelmcg {

std::string InvariantFactors::to_string() const {
  if (factors.empty() && free_rank == 0) return "trivial";
  std::ostringstream out;
  bool first = true;
  // factors are divisibility-ordered; group equal ones into powers
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    if (!first) out << " x ";
    first = false;
    out << "Z_" << factors[i];
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  if (free_rank > 0) {
    if (!first) out << " x ";
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
  }
  return out.str();
}

BigInt InvariantFactors::order() const {
  if (free_rank > 0) throw Error("group is infinite, order undefined");
  BigInt r = 1;
  for (const auto& f : factors) r *= f;
  return r;
}

namespace {

BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

struct Elim {
  Mat& a;
  Mat* left;  // optional row-op mirror
  std::size_t rows, cols;

  Elim(Mat& m, Mat* l) : a(m), left(l), rows(m.size()), cols(m.empty() ? 0 : m[0].size()) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    if (left) std::swap((*left)[i], (*left)[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
  }
  // row i += c * row j
  void row_axpy(std::size_t i, std::size_t j, const BigInt& c) {
    for (std::size_t k = 0; k < cols; ++k) a[i][k] += c * a[j][k];
    if (left)
      for (std::size_t k = 0; k < left->front().size(); ++k) (*left)[i][k] += c * (*left)[j][k];
  }
  // col i += c * col j
  void col_axpy(std::size_t i, std::size_t j, const BigInt& c) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] += c * a[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    if (left)
      for (auto& x : (*left)[i]) x = -x;
  }

  void run() {
    std::size_t t = 0;
    while (t < rows && t < cols) {
      // deterministic pivot: smallest |entry|, first (row, col) on ties
      std::size_t pi = rows, pj = cols;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          BigInt av = abs(a[i][j]);
          if (pi == rows || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // remaining block is zero
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        if (!clear_cross(t)) continue;  // a swap shrank the pivot; re-clear
        // pivot must divide the rest of the block, else absorb an offending row
        std::size_t oi = rows, oj = cols;
        for (std::size_t i = t + 1; i < rows && oi == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi == rows) break;
        (void)oj;
        row_axpy(t, oi, 1);
      }
      if (a[t][t] < 0) negate_row(t);
      ++t;
    }
  }

  // Reduce column t then row t against the pivot; returns false when a swap
  // changed the pivot (caller restarts).
  bool clear_cross(std::size_t t) {
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = fdiv(a[i][t], a[t][t]);
      if (q != 0) row_axpy(i, t, -q);
      if (a[i][t] != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = fdiv(a[t][j], a[t][t]);
      if (q != 0) col_axpy(j, t, -q);
      if (a[t][j] != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }
};

std::vector<BigInt> diag_of(const Mat& a) {
  std::size_t n = std::min(a.size(), a.empty() ? 0 : a[0].size());
  std::vector<BigInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i][i];
  return d;
}

// Diagonalization over Z/8.  Every nonzero residue is unit * 2^v with the
// unit self-inverse mod 8, so a minimal-valuation pivot divides every other
// entry and one elimination pass clears its column; implicit column ops
// (automorphisms of (Z_8)^n) would clear its row without touching the rest.
// Returns the pivot valuations and the number of pivot-free columns.
struct Mod8Diag {
  std::vector<int> pivot_vals;  // each in {0, 1, 2}
  std::size_t free_cols = 0;
};

Mod8Diag mod8_diagonalize(const Mat& rows, std::size_t cols) {
  std::vector<std::vector<int>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error("relation length does not match generator count");
    std::vector<int> v(cols);
    bool nz = false;
    for (std::size_t j = 0; j < cols; ++j) {
      v[j] = static_cast<int>(emod(r[j], 8));
      nz = nz || v[j] != 0;
    }
    if (nz) a.push_back(std::move(v));
  }
  std::vector<char> row_done(a.size(), 0), col_done(cols, 0);
  Mod8Diag out;
  for (;;) {
    int best_v = 3;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < a.size() && best_v > 0; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_done[j] || a[i][j] == 0) continue;
        int v = a[i][j] % 2 ? 0 : (a[i][j] % 4 ? 1 : 2);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best_v == 3) break;  // all remaining entries are 0 mod 8
    int unit = a[bi][bj] >> best_v;
    for (std::size_t j = 0; j < cols; ++j) a[bi][j] = (a[bi][j] * unit) & 7;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == bi || a[i][bj] == 0) continue;
      int m = a[i][bj] >> best_v;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] - m * a[bi][j]) & 7;
    }
    row_done[bi] = 1;
    col_done[bj] = 1;
    out.pivot_vals.push_back(best_v);
  }
  for (std::size_t j = 0; j < cols; ++j)
    if (!col_done[j]) ++out.free_cols;
  return out;
}

}  // namespace

std::vector<BigInt> snf_diagonal(Mat a) {
  Elim e(a, nullptr);
  e.run();
  return diag_of(a);
}

SnfLeft snf_with_left(Mat a) {
  std::size_t r = a.size();
  Mat left(r, std::vector<BigInt>(r, 0));
  for (std::size_t i = 0; i < r; ++i) left[i][i] = 1;
  Elim e(a, &left);
  e.run();
  return {diag_of(a), std::move(left)};
}

InvariantFactors cokernel(const Mat& rows, std::size_t cols) {
  Mat a = rows;
  for (const auto& r : a)
    if (r.size() != cols) throw Error("relation length does not match generator count");
  auto d = snf_diagonal(std::move(a));
  InvariantFactors out;
  long long rank = 0;
  for (const auto& x : d)
    if (x != 0) {
      ++rank;
      if (x > 1) out.factors.push_back(x);
    }
  out.free_rank = static_cast<long long>(cols) - rank;
  return out;
}

InvariantFactors cokernel_mod8(const Mat& rows, std::size_t cols) {
  Mod8Diag d = mod8_diagonalize(rows, cols);
  std::vector<BigInt> fs;
  for (int v : d.pivot_vals)
    if (v > 0) fs.push_back(BigInt(1) << v);  // Z_8 / 2^v Z_8
  for (std::size_t j = 0; j < d.free_cols; ++j) fs.push_back(8);
  std::sort(fs.begin(), fs.end());
  return InvariantFactors{std::move(fs), 0};
}

InvariantFactors subgroup_mod8(const Mat& gens, std::size_t n) {
  // A diagonal pivot 2^v spans 2^v Z_8, cyclic of order 2^{3-v}.
  Mod8Diag d = mod8_diagonalize(gens, n);
  std::vector<BigInt> fs;
  for (int v : d.pivot_vals) fs.push_back(BigInt(1) << (3 - v));
  std::sort(fs.begin(), fs.end());
  return InvariantFactors{std::move(fs), 0};
}

bool in_span_mod8(const Mat& gens, std::size_t n, const std::vector<BigInt>& v) {
  Mat with = gens;
  with.push_back(v);
  return subgroup_mod8(gens, n) == subgroup_mod8(with, n);
}

bool solvable_mod(const Mat& a, const std::vector<BigInt>& v, const BigInt& d) {
  if (a.size() != v.size()) throw Error("dimension mismatch in solvable_mod");
  if (d < 2) throw Error("modulus must be >= 2");
  auto s = snf_with_left(a);
  std::size_t r = a.size();
  for (std::size_t i = 0; i < r; ++i) {
    BigInt wi = 0;
    for (std::size_t k = 0; k < r; ++k) wi += s.left[i][k] * v[k];
    BigInt pivot = i < s.diag.size() ? s.diag[i] : BigInt(0);
    BigInt g = gcd(pivot, d);  // gcd(0, d) = d handles empty rows
    if (emod(wi, g) != 0) return false;
  }
  return true;
}

}  // namespace levelmcg
