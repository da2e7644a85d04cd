#include "levelmcg/symplectic.hpp"

namespace levelmcg {

namespace {

Mat mat_identity(int n) {
  Mat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Mat r(n, std::vector<BigInt>(c, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      const BigInt& aij = a[i][j];
      for (std::size_t l = 0; l < c; ++l) r[i][l] += aij * b[j][l];
    }
  return r;
}

Mat mat_transpose(const Mat& a) {
  std::size_t n = a.size(), c = a.empty() ? 0 : a[0].size();
  Mat r(c, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < c; ++j) r[j][i] = a[i][j];
  return r;
}

bool is_symplectic(int g, const Mat& m) {
  if (static_cast<int>(m.size()) != 2 * g) return false;
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != 2 * g) return false;
  Mat j = form_matrix(g);
  return mat_mul(mat_transpose(m), mat_mul(j, m)) == j;
}

}  // namespace

Mat form_matrix(int g) {
  Mat j(2 * g, std::vector<BigInt>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    j[i][g + i] = 1;
    j[g + i][i] = -1;
  }
  return j;
}

BigInt sform(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw GenusMismatch();
  int g = static_cast<int>(x.size()) / 2;
  BigInt r = 0;
  for (int i = 0; i < g; ++i) r += x[i] * y[g + i] - x[g + i] * y[i];
  return r;
}

SympElement::SympElement(int genus, Mat entries) : g(genus), m(std::move(entries)) {
  if (g < 1) throw Error("genus must be >= 1");
  if (!is_symplectic(g, m)) throw NotSymplectic();
}

SympElement SympElement::identity(int genus) { return SympElement(genus, mat_identity(2 * genus)); }

SympElement transvection(const IntVec& y) { return transvection_power(y, 1); }

SympElement transvection_power(const IntVec& y, const BigInt& k) {
  if (y.size() % 2 != 0 || y.empty()) throw GenusMismatch("vector length must be even");
  int g = static_cast<int>(y.size()) / 2;
  int n = 2 * g;
  Mat m = mat_identity(n);
  // (y^T J)_j = -y_{j+g} for j < g, +y_{j-g} for j >= g
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt w = j < g ? -y[j + g] : y[j - g];
      m[i][j] += k * y[i] * w;
    }
  return SympElement(g, std::move(m));
}

SympElement mul(const SympElement& a, const SympElement& b) {
  if (a.g != b.g) throw GenusMismatch();
  return SympElement(a.g, mat_mul(a.m, b.m));
}

SympElement inverse(const SympElement& a) {
  // M^{-1} = J^{-1} M^T J with J^{-1} = -J
  Mat j = form_matrix(a.g);
  Mat jinv = j;
  for (auto& row : jinv)
    for (auto& x : row) x = -x;
  return SympElement(a.g, mat_mul(jinv, mat_mul(mat_transpose(a.m), j)));
}

SympElement power(const SympElement& a, const BigInt& k) {
  if (k < 0) return power(inverse(a), -k);
  SympElement base = a, acc = SympElement::identity(a.g);
  BigInt e = k;
  while (e > 0) {
    if ((e & 1) != 0) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

BlockDecomposition block_decompose(const SympElement& a, const BigInt& d) {
  if (d < 1) throw Error("level must be >= 1");
  int g = a.g, n = 2 * g;
  Mat ap(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt e = a.m[i][j] - (i == j ? 1 : 0);
      if (e % d != 0) throw NotInLevel();
      ap[i][j] = e / d;
    }
  BlockDecomposition b;
  b.g = g;
  b.p = b.q = b.r = b.s = Mat(g, std::vector<BigInt>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      b.p[i][j] = ap[i][j];
      b.q[i][j] = ap[i][g + j];
      b.r[i][j] = ap[g + i][j];
      b.s[i][j] = ap[g + i][g + j];
    }
  return b;
}

bool in_level(const SympElement& a, const BigInt& d) {
  int n = 2 * a.g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((a.m[i][j] - (i == j ? 1 : 0)) % d != 0) return false;
  return true;
}

bool in_igusa(const SympElement& a, const BigInt& d) {
  if (d % 2 != 0) throw OddLevelIgusa();
  if (!in_level(a, d)) return false;
  auto b = block_decompose(a, d);
  for (int i = 0; i < a.g; ++i)
    if (b.q[i][i] % 2 != 0 || b.r[i][i] % 2 != 0) return false;
  return true;
}

std::vector<BigInt> m_map(const SympElement& a, const BigInt& d) {
  if (!in_level(a, d)) throw NotInLevel();
  auto b = block_decompose(a, d);
  int g = a.g;
  std::vector<BigInt> out;
  out.reserve(2 * g * g + g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) out.push_back(emod(b.p[i][j], d));
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) out.push_back(emod(b.q[i][j], d));
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) out.push_back(emod(b.r[i][j], d));
  return out;
}

std::vector<BigInt> m1_map(const SympElement& a, const BigInt& d) {
  BigInt d2 = d * d;
  if (!in_level(a, d2)) throw NotInLevel();
  auto b = block_decompose(a, d2);
  int g = a.g;
  std::vector<BigInt> out;
  out.reserve(2 * g);
  for (int i = 0; i < g; ++i) out.push_back(emod(b.q[i][i], 2));
  for (int i = 0; i < g; ++i) out.push_back(emod(b.r[i][i], 2));
  return out;
}

std::vector<BigInt> m2_map(const SympElement& a, const BigInt& d) {
  BigInt d2 = d * d;
  if (!in_igusa(a, d2)) throw NotInIgusa();
  auto b = block_decompose(a, d2);
  int g = a.g;
  std::vector<BigInt> out;
  out.reserve(2 * g * g - g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) out.push_back(emod(b.p[i][j], 2));
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) out.push_back(emod(b.q[i][j], 2));
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) out.push_back(emod(b.r[i][j], 2));
  return out;
}

IntVec basis_vector(int g, int i) {
  IntVec v(2 * g, 0);
  v[i] = 1;
  return v;
}

bool verify_transvection_product(long long a1, long long b1, long long a2, long long d, int g) {
  if (g < 2 || d < 1) throw Error("verify_transvection_product requires g >= 2, d >= 1");
  IntVec va1 = basis_vector(g, 0), vb1 = basis_vector(g, g), va2 = basis_vector(g, 1);
  auto combo = [&](long long ca1, long long cb1, long long ca2) {
    IntVec v(2 * g, 0);
    v[0] = ca1;
    v[g] = cb1;
    v[1] = ca2;
    return v;
  };
  SympElement lhs = transvection_power(combo(a1, b1, a2), d);

  BigInt lead = (BigInt(d) * a1 * b1 + 1) * a2 * a2;
  SympElement t1 = power(transvection_power(va2, d), lead);
  SympElement f2 = mul(mul(transvection_power(combo(0, 1, 1), d), transvection_power(va2, -d)),
                       transvection_power(vb1, -d));
  SympElement t2 = power(f2, BigInt(b1) * a2);
  SympElement f3 = mul(mul(transvection_power(combo(1, 0, 1), d), transvection_power(va1, -d)),
                       transvection_power(va2, -d));
  SympElement t3 = power(f3, BigInt(a1) * a2);
  SympElement t4 = transvection_power(combo(a1, b1, 0), d);
  SympElement rhs = mul(mul(mul(t1, t2), t3), t4);
  return lhs == rhs;
}

bool verify_lantern(const IntVec& x, const IntVec& y) {
  if (sform(x, y) != 0) throw NonOrthogonal();
  IntVec xpy(x.size()), xmy(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    xpy[i] = x[i] + y[i];
    xmy[i] = x[i] - y[i];
  }
  SympElement lhs = mul(transvection(xpy), transvection(xmy));
  SympElement rhs = mul(transvection_power(x, 2), transvection_power(y, 2));
  return lhs == rhs;
}

bool verify_commutator_congruence(const Mat& aprime, const Mat& bprime, const BigInt& d) {
  if (aprime.empty() || aprime.size() != bprime.size() || aprime.size() % 2 != 0)
    throw GenusMismatch("matrices must share an even dimension");
  int n = static_cast<int>(aprime.size());
  int g = n / 2;
  Mat am = mat_identity(n), bm = mat_identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      am[i][j] += d * aprime[i][j];
      bm[i][j] += d * bprime[i][j];
    }
  SympElement a(g, am), b(g, bm);
  SympElement c = mul(mul(a, b), mul(inverse(a), inverse(b)));
  Mat diff = mat_mul(aprime, bprime);
  Mat ba = mat_mul(bprime, aprime);
  BigInt d2 = d * d, d3 = d2 * d;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BigInt want = (i == j ? 1 : 0) + d2 * (diff[i][j] - ba[i][j]);
      if ((c.m[i][j] - want) % d3 != 0) return false;
    }
  return true;
}

InvariantFactors abelianization_formula(int g, const BigInt& d) {
  if (g < 2 || d < 2) throw Error("abelianization_formula requires g >= 2, d >= 2");
  InvariantFactors out;
  long long n = 2LL * g * g + g;
  if (d % 2 != 0) {
    out.factors.assign(n, d);
  } else {
    out.factors.assign(2LL * g * g - g, d);
    for (int i = 0; i < 2 * g; ++i) out.factors.push_back(2 * d);
  }
  return out;
}

SympElement random_symplectic(int g, Rng& rng, int len) {
  SympElement s = SympElement::identity(g);
  for (int i = 0; i < len; ++i) {
    int idx = static_cast<int>(rng() % (2 * g));
    int sign = (rng() % 2 == 0) ? 1 : -1;
    s = mul(s, transvection_power(basis_vector(g, idx), sign));
  }
  return s;
}

SympElement sample_level_element(int g, const BigInt& d, Rng& rng) {
  int nfac = 1 + static_cast<int>(rng() % 12);
  SympElement out = SympElement::identity(g);
  for (int i = 0; i < nfac; ++i) {
    SympElement s = random_symplectic(g, rng, static_cast<int>(rng() % 7));
    int idx = static_cast<int>(rng() % (2 * g));
    BigInt e = (rng() % 2 == 0) ? d : -d;
    SympElement t = transvection_power(basis_vector(g, idx), e);
    out = mul(out, mul(mul(s, t), inverse(s)));
  }
  return out;
}

}  // namespace levelmcg
