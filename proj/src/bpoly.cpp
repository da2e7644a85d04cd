#include "levelmcg/bpoly.hpp"

#include <bit>

namespace levelmcg {

BPoly bp_zero(int g) { return BPoly{g, {}}; }

BPoly bp_one(int g) { return BPoly{g, {0u}}; }

BPoly bp_var(int g, int l) {
  if (l < 0 || l >= 2 * g) throw Error("variable index out of range");
  return BPoly{g, {1u << l}};
}

BPoly bp_add(const BPoly& a, const BPoly& b) {
  if (a.g != b.g) throw GenusMismatch();
  BPoly r = a;
  for (auto m : b.support) {
    auto it = r.support.find(m);
    if (it == r.support.end())
      r.support.insert(m);
    else
      r.support.erase(it);
  }
  return r;
}

BPoly reduce_symbol(const Z2Class& x) {
  BPoly r = bp_zero(x.g);
  for (int l = 0; l < 2 * x.g; ++l)
    if ((x.bits >> l) & 1) r = bp_add(r, bp_var(x.g, l));
  // constant term: number of handles with both partners present, mod 2
  std::uint32_t m = (1u << x.g) - 1u;
  if (std::popcount(x.bits & (x.bits >> x.g) & m) & 1) r = bp_add(r, bp_one(x.g));
  return r;
}

BPoly mul_truncated(const BPoly& a, const BPoly& b) {
  if (a.g != b.g) throw GenusMismatch();
  BPoly r = bp_zero(a.g);
  for (auto ma : a.support)
    for (auto mb : b.support) {
      std::uint32_t u = ma | mb;
      if (std::popcount(u) > 3) throw DegreeOverflow();
      r = bp_add(r, BPoly{a.g, {u}});
    }
  return r;
}

BPoly alpha_element(int g) {
  BPoly r = bp_zero(g);
  for (int i = 0; i < g; ++i) r = bp_add(r, BPoly{g, {(1u << i) | (1u << (g + i))}});
  return r;
}

long long b3_dim(int g) { return 1 + 2 * g + binom_ll(2 * g, 2) + binom_ll(2 * g, 3); }

std::vector<std::uint32_t> b3_basis(int g) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t m = 0; m < (1u << (2 * g)); ++m)
    if (std::popcount(m) <= 3) basis.push_back(m);
  return basis;
}

Mat alpha_multiplication_map(int g) {
  auto basis = b3_basis(g);
  std::vector<BPoly> inputs;
  inputs.push_back(bp_one(g));
  for (int l = 0; l < 2 * g; ++l) inputs.push_back(bp_var(g, l));
  BPoly alpha = alpha_element(g);
  Mat m(basis.size(), std::vector<BigInt>(inputs.size(), 0));
  for (std::size_t c = 0; c < inputs.size(); ++c) {
    BPoly prod = mul_truncated(inputs[c], alpha);
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (prod.support.count(basis[r])) m[r][c] = 1;
  }
  return m;
}

long long alpha_map_rank(int g) {
  // rank over Z_2 by elimination on column bitmasks of the transpose
  Mat m = alpha_multiplication_map(g);
  std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<int>> colv(cols, std::vector<int>(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) colv[c][r] = static_cast<int>(m[r][c]);
  long long rank = 0;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t piv = cols;
    for (std::size_t c = lead; c < cols; ++c)
      if (colv[c][r]) {
        piv = c;
        break;
      }
    if (piv == cols) continue;
    std::swap(colv[lead], colv[piv]);
    for (std::size_t c = 0; c < cols; ++c)
      if (c != lead && colv[c][r])
        for (std::size_t i = 0; i < rows; ++i) colv[c][i] ^= colv[lead][i];
    ++lead;
    ++rank;
  }
  return rank;
}

std::pair<BigInt, BigInt> b3_orders(int g) {
  long long dim = b3_dim(g);
  return {pow2(dim), pow2(dim - 1)};
}

}  // namespace levelmcg
