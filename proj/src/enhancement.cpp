#include "levelmcg/enhancement.hpp"

#include <bit>

namespace levelmcg {

Enhancement::Enhancement(std::vector<std::vector<int>> p, std::vector<int> values)
    : n(static_cast<int>(values.size())), pairing(std::move(p)), basis_values(std::move(values)) {
  if (n > 24) throw SizeLimit("enhancement dimension limited to 24");
  if (pairing.size() != static_cast<std::size_t>(n)) throw Error("pairing size mismatch");
  for (int i = 0; i < n; ++i) {
    if (pairing[i].size() != static_cast<std::size_t>(n)) throw Error("pairing size mismatch");
    if (basis_values[i] < 0 || basis_values[i] > 3) throw Error("values must be in Z_4");
    for (int j = 0; j < n; ++j) {
      if (pairing[i][j] != 0 && pairing[i][j] != 1) throw Error("pairing must be over Z_2");
      if (pairing[i][j] != pairing[j][i]) throw Error("pairing must be symmetric");
    }
    if (pairing[i][i] != basis_values[i] % 2)
      throw Error("pairing diagonal must equal the value parity");
  }
}

int qhat_eval(const Enhancement& e, std::uint32_t subset) {
  if (e.n < 32 && (subset >> e.n)) throw Error("subset has bits beyond the dimension");
  int v = 0;
  for (int i = 0; i < e.n; ++i) {
    if (!((subset >> i) & 1)) continue;
    v += e.basis_values[i];
    for (int j = i + 1; j < e.n; ++j)
      if ((subset >> j) & 1) v += 2 * e.pairing[i][j];
  }
  return v & 3;
}

GaussianInt gauss_sum(const Enhancement& e) {
  // row masks let the value be extended one basis vector at a time
  std::vector<std::uint32_t> rows(e.n, 0);
  for (int i = 0; i < e.n; ++i)
    for (int j = 0; j < e.n; ++j)
      if (e.pairing[i][j]) rows[i] |= 1u << j;
  std::size_t total = std::size_t(1) << e.n;
  std::vector<std::uint8_t> val(total);
  BigInt count[4] = {0, 0, 0, 0};
  count[0] = 1;  // empty class
  for (std::size_t x = 1; x < total; ++x) {
    int k = std::countr_zero(x);
    std::size_t rest = x ^ (std::size_t(1) << k);
    int cross = std::popcount(static_cast<std::uint32_t>(rest) & rows[k]) & 1;
    val[x] = static_cast<std::uint8_t>((val[rest] + e.basis_values[k] + 2 * cross) & 3);
    ++count[val[x]];
  }
  return {count[0] - count[2], count[1] - count[3]};
}

int brown_invariant(const Enhancement& e) {
  GaussianInt g = gauss_sum(e);
  if (g.re == 0 && g.im == 0) throw DegenerateEnhancement("gauss sum vanishes");
  if (e.n % 2 == 0) {
    BigInt m = pow2(e.n / 2);
    if (g.re == m && g.im == 0) return 0;
    if (g.re == 0 && g.im == m) return 2;
    if (g.re == -m && g.im == 0) return 4;
    if (g.re == 0 && g.im == -m) return 6;
  } else {
    BigInt m = pow2((e.n - 1) / 2);
    if (g.re == m && g.im == m) return 1;
    if (g.re == -m && g.im == m) return 3;
    if (g.re == -m && g.im == -m) return 5;
    if (g.re == m && g.im == -m) return 7;
  }
  throw DegenerateEnhancement("gauss sum carries no eighth-root phase");
}

bool pairing_nondegenerate(const Enhancement& e) {
  std::vector<std::uint32_t> rows(e.n, 0);
  for (int i = 0; i < e.n; ++i)
    for (int j = 0; j < e.n; ++j)
      if (e.pairing[i][j]) rows[i] |= 1u << j;
  int rank = 0;
  for (int col = 0; col < e.n; ++col) {
    int piv = -1;
    for (int i = rank; i < e.n; ++i)
      if ((rows[i] >> col) & 1) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < e.n; ++i)
      if (i != rank && ((rows[i] >> col) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank == e.n;
}

Enhancement doubled(const SpinForm& s) {
  int n = 2 * s.g;
  std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
  for (int i = 0; i < s.g; ++i) p[i][s.g + i] = p[s.g + i][i] = 1;
  std::vector<int> vals(n);
  for (int l = 0; l < n; ++l) vals[l] = 2 * ((s.basis_values >> l) & 1);
  return Enhancement(std::move(p), std::move(vals));
}

Enhancement direct_sum(const Enhancement& a, const Enhancement& b) {
  int n = a.n + b.n;
  std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) p[i][j] = a.pairing[i][j];
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) p[a.n + i][a.n + j] = b.pairing[i][j];
  std::vector<int> vals = a.basis_values;
  vals.insert(vals.end(), b.basis_values.begin(), b.basis_values.end());
  return Enhancement(std::move(p), std::move(vals));
}

}  // namespace levelmcg
