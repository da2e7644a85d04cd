#include "levelmcg/magnus.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace levelmcg {

FreeWord word_reduce(FreeWord w) {
  FreeWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord word_inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

FreeWord word_mul(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return word_reduce(std::move(out));
}

FreeWord word_parse(const std::string& s, int g) {
  FreeWord out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw Error("bad word token: " + tok);
    char c = tok[0];
    int idx = 0;
    try {
      idx = std::stoi(tok.substr(1));
    } catch (...) {
      throw Error("bad word token: " + tok);
    }
    if (idx < 1 || idx > g) throw Error("token index out of range: " + tok);
    int l;
    switch (c) {
      case 'a': l = idx; break;
      case 'A': l = -idx; break;
      case 'b': l = g + idx; break;
      case 'B': l = -(g + idx); break;
      default: throw Error("bad word token: " + tok);
    }
    out.push_back(l);
  }
  return out;
}

std::string word_format(const FreeWord& w, int g) {
  std::string s;
  for (int l : w) {
    if (!s.empty()) s += ' ';
    int a = l > 0 ? l : -l;
    if (a < 1 || a > 2 * g) throw Error("letter out of range");
    bool bgen = a > g;
    char c = bgen ? (l > 0 ? 'b' : 'B') : (l > 0 ? 'a' : 'A');
    s += c;
    s += std::to_string(bgen ? a - g : a);
  }
  return s;
}

std::vector<BigInt> abelianize(const FreeWord& w, int g) {
  std::vector<BigInt> v(2 * g, 0);
  for (int l : w) {
    int a = l > 0 ? l : -l;
    if (a < 1 || a > 2 * g) throw Error("letter out of range");
    v[a - 1] += l > 0 ? 1 : -1;
  }
  return v;
}

TruncTensor2 tt_one(int g, long long d) {
  TruncTensor2 t;
  t.g = g;
  t.d = d;
  t.c0 = 1;
  t.c1.assign(2 * g, 0);
  t.c2.assign(2 * g, std::vector<long long>(2 * g, 0));
  return t;
}

TruncTensor2 tt_mul(const TruncTensor2& a, const TruncTensor2& b) {
  if (a.g != b.g || a.d != b.d) throw Error("truncation mismatch");
  int n = 2 * a.g;
  long long d = a.d;
  TruncTensor2 r = tt_one(a.g, d);
  r.c0 = emod_ll(a.c0 * b.c0, d);
  for (int i = 0; i < n; ++i) r.c1[i] = emod_ll(a.c0 * b.c1[i] + a.c1[i] * b.c0, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.c2[i][j] =
          emod_ll(a.c0 * b.c2[i][j] + a.c2[i][j] * b.c0 + a.c1[i] * b.c1[j], d);
  return r;
}

TruncTensor2 magnus(const FreeWord& w, int g, long long d) {
  if (d < 2) throw Error("modulus must be >= 2");
  TruncTensor2 r = tt_one(g, d);
  for (int l : w) {
    int a = l > 0 ? l : -l;
    if (a < 1 || a > 2 * g) throw Error("letter out of range");
    TruncTensor2 t = tt_one(g, d);
    int i = a - 1;
    if (l > 0) {
      t.c1[i] = 1;
    } else {
      t.c1[i] = emod_ll(-1, d);
      t.c2[i][i] = 1;
    }
    r = tt_mul(r, t);
  }
  return r;
}

std::vector<std::vector<long long>> theta2_on_kernel(const FreeWord& w, int g, long long d) {
  auto ab = abelianize(w, g);
  for (const auto& x : ab)
    if (x % d != 0) throw NotInKernel();
  return magnus(w, g, d).c2;
}

EndoF::EndoF(int genus, long long level, std::vector<FreeWord> imgs)
    : g(genus), d(level), images(std::move(imgs)) {
  if (g < 1) throw Error("genus must be >= 1");
  if (d < 1) throw Error("level must be >= 1");
  if (images.size() != static_cast<std::size_t>(2 * g)) throw Error("need one image per generator");
  for (auto& w : images) {
    for (int l : w) {
      int a = l > 0 ? l : -l;
      if (a < 1 || a > 2 * g) throw Error("image letter out of range");
    }
    w = word_reduce(w);
  }
}

bool check_ia(const EndoF& e) {
  for (int i = 0; i < 2 * e.g; ++i) {
    auto ab = abelianize(e.images[i], e.g);
    for (int j = 0; j < 2 * e.g; ++j) {
      BigInt want = (j == i) ? 1 : 0;
      if ((ab[j] - want) % e.d != 0) return false;
    }
  }
  return true;
}

FreeWord apply_endo(const EndoF& e, const FreeWord& w) {
  FreeWord out;
  for (int l : w) {
    int a = l > 0 ? l : -l;
    const FreeWord& img = e.images[a - 1];
    if (l > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      FreeWord inv = word_inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return word_reduce(std::move(out));
}

EndoF compose(const EndoF& a, const EndoF& b) {
  if (a.g != b.g || a.d != b.d) throw Error("endomorphism mismatch");
  std::vector<FreeWord> imgs;
  for (const auto& w : b.images) imgs.push_back(apply_endo(a, w));
  return EndoF(a.g, a.d, std::move(imgs));
}

EndoF endo_identity(int g, long long d) {
  std::vector<FreeWord> imgs;
  for (int l = 1; l <= 2 * g; ++l) imgs.push_back({l});
  return EndoF(g, d, std::move(imgs));
}

EndoF endo_power(const EndoF& e, long long k) {
  if (k < 0) throw Error("endo_power needs k >= 0");
  EndoF r = endo_identity(e.g, e.d);
  for (long long i = 0; i < k; ++i) r = compose(r, e);
  return r;
}

bool JohnsonValue::is_zero() const {
  for (const auto& mat : m)
    for (const auto& row : mat)
      for (auto x : row)
        if (x != 0) return false;
  return true;
}

JohnsonValue jv_add(const JohnsonValue& a, const JohnsonValue& b) {
  if (a.g != b.g || a.d != b.d) throw Error("value mismatch");
  JohnsonValue r = a;
  int n = 2 * a.g;
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.m[l][i][j] = emod_ll(r.m[l][i][j] + b.m[l][i][j], a.d);
  return r;
}

JohnsonValue tau(const EndoF& e) {
  if (!check_ia(e)) throw NotIA();
  JohnsonValue v;
  v.g = e.g;
  v.d = e.d;
  int n = 2 * e.g;
  for (int l = 0; l < n; ++l) {
    FreeWord w = word_mul(FreeWord{-(l + 1)}, e.images[l]);
    auto m = theta2_on_kernel(w, e.g, e.d);
    if (e.d % 2 == 1)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (emod_ll(m[i][j] + m[j][i], e.d) != 0)
            throw Error("degree-2 part is not skew at an odd modulus");
    v.m.push_back(std::move(m));
  }
  return v;
}

namespace {

// Ordered triple index tables for the trivector basis.
std::vector<std::array<int, 3>> triples(int n) {
  std::vector<std::array<int, 3>> t;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) t.push_back({a, b, c});
  return t;
}

// Row index of coordinate (i, j<k) in H (x) Lambda^2 H.
long long coord_index(int n, int i, int j, int k) {
  long long pair_count = static_cast<long long>(n) * (n - 1) / 2;
  long long pidx =
      static_cast<long long>(j) * n - static_cast<long long>(j) * (j + 1) / 2 + (k - j - 1);
  return i * pair_count + pidx;
}

// Columns: embedded trivectors a^b^c -> a(x)(b^c) + b(x)(c^a) + c(x)(a^b).
Mat lambda3_embedding(int n) {
  auto ts = triples(n);
  long long rows = static_cast<long long>(n) * n * (n - 1) / 2;
  Mat m(rows, std::vector<BigInt>(ts.size(), 0));
  for (std::size_t c = 0; c < ts.size(); ++c) {
    auto [a, b, cc] = ts[c];
    m[coord_index(n, a, b, cc)][c] += 1;
    m[coord_index(n, b, a, cc)][c] += -1;  // e_c ^ e_a = -(e_a ^ e_c)
    m[coord_index(n, cc, a, b)][c] += 1;
  }
  return m;
}

// The H (x) Lambda^2 H coordinates of a JohnsonValue after dualizing
// e_l* -> J e_l (A_i* -> -B_i, B_i* -> A_i).
std::vector<BigInt> dualized_coordinates(const JohnsonValue& v) {
  int g = v.g, n = 2 * g;
  long long pair_count = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<BigInt> t(n * pair_count, 0);
  for (int l = 0; l < n; ++l) {
    int target = l < g ? g + l : l - g;  // index of +-e_target
    long long sign = l < g ? -1 : 1;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        long long lam = emod_ll(v.m[l][j][k], v.d);  // skew: coefficient of e_j ^ e_k
        if (lam == 0) continue;
        t[coord_index(n, target, j, k)] += sign * lam;
      }
  }
  for (auto& x : t) x = emod(x, v.d);
  return t;
}

}  // namespace

bool in_lambda3(const JohnsonValue& v) {
  if (v.d % 2 == 0) throw EvenModulus();
  int n = 2 * v.g;
  return solvable_mod(lambda3_embedding(n), dualized_coordinates(v), v.d);
}

JohnsonValue trivector_value(int g, long long d, int a, int b, int c) {
  if (!(0 <= a && a < b && b < c && c < 2 * g)) throw Error("need 0 <= a < b < c < 2g");
  int n = 2 * g;
  JohnsonValue v;
  v.g = g;
  v.d = d;
  v.m.assign(n, std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0)));
  // e_x (x) (e_y ^ e_z) lands in the matrix for the generator dual to e_x
  // under e_l* -> J e_l: the preimage of +e_x is l = x - g (x >= g, sign +)
  // or l = x + g (x < g, sign -).
  auto add_term = [&](int x, int y, int z, long long sgn) {
    int l = x >= g ? x - g : x + g;
    long long s = x >= g ? -sgn : sgn;
    v.m[l][y][z] = emod_ll(v.m[l][y][z] + s, d);
    v.m[l][z][y] = emod_ll(v.m[l][z][y] - s, d);
  };
  add_term(a, b, c, 1);
  add_term(b, c, a, 1);
  add_term(c, a, b, 1);
  return v;
}

FreeWord boundary_word(int g) {
  FreeWord w;
  for (int i = 1; i <= g; ++i) {
    int a = i, b = g + i;
    w.push_back(a);
    w.push_back(b);
    w.push_back(-a);
    w.push_back(-b);
  }
  return w;
}

namespace {

FreeWord cyclic_reduce(FreeWord w) {
  w = word_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = word_reduce(std::move(w));
  }
  return w;
}

}  // namespace

bool boundary_preserved(const EndoF& e) {
  FreeWord img = cyclic_reduce(apply_endo(e, boundary_word(e.g)));
  FreeWord ref = cyclic_reduce(boundary_word(e.g));
  if (img.size() != ref.size()) return false;
  for (std::size_t r = 0; r < img.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < img.size() && ok; ++i)
      if (img[(r + i) % img.size()] != ref[i]) ok = false;
    if (ok) return true;
  }
  return ref.empty();
}

RankResult odd_level_rank_formula(int g, long long d, bool closed) {
  if (d % 2 == 0) throw EvenModulus();
  if (d < 3) throw Error("level must be >= 3");
  if (g < 1) throw Error("genus must be >= 1");
  RankResult r;
  r.small_genus = g < 3;
  long long n = 2LL * g;
  long long lam3 = binom_ll(n, 3);
  long long sp = 2LL * g * g + g;
  if (!closed) {
    r.exponent = lam3 + sp;
    if (3 * r.exponent != 4LL * g * g * g + 5LL * g)
      throw Error("bounded rank closed form mismatch");
    return r;
  }
  // wedge-with-alpha embedding of H into the trivectors must be injective
  // mod d before its image is quotiented away
  auto ts = triples(n);
  Mat embed(ts.size(), std::vector<BigInt>(n, 0));
  for (int mcol = 0; mcol < n; ++mcol) {
    for (int i = 0; i < g; ++i) {
      int a = i, b = g + i;
      if (mcol == a || mcol == b) continue;
      int v[3] = {a, b, mcol};
      // bubble sort the triple, tracking the permutation sign
      long long sgn = 1;
      for (int s = 0; s < 2; ++s)
        for (int t2 = 0; t2 < 2 - s; ++t2)
          if (v[t2] > v[t2 + 1]) {
            std::swap(v[t2], v[t2 + 1]);
            sgn = -sgn;
          }
      long long row = 0;
      {
        // index of (v0 < v1 < v2) in the ordered triple list
        auto it = std::lower_bound(ts.begin(), ts.end(),
                                   std::array<int, 3>{v[0], v[1], v[2]});
        row = it - ts.begin();
      }
      embed[row][mcol] += sgn;
    }
  }
  auto diag = snf_diagonal(embed);
  long long rank = 0;
  for (const auto& x : diag)
    if (x != 0) {
      ++rank;
      if (gcd(x, BigInt(d)) != 1) throw Error("wedge embedding degenerates at this modulus");
    }
  if (rank != n) throw Error("wedge embedding rank deficient");
  r.exponent = lam3 - n + sp;
  if (3 * r.exponent != 4LL * g * g * g - g) throw Error("closed rank closed form mismatch");
  return r;
}

FreeWord random_word(int g, Rng& rng, int len) {
  FreeWord w;
  for (int i = 0; i < len; ++i) {
    int l = 1 + static_cast<int>(rng() % (2 * g));
    w.push_back(rng() % 2 ? l : -l);
  }
  return word_reduce(std::move(w));
}

FreeWord random_kernel_word(int g, long long d, Rng& rng) {
  FreeWord w;
  int nfac = 1 + static_cast<int>(rng() % 5);
  for (int f = 0; f < nfac; ++f) {
    FreeWord c = random_word(g, rng, static_cast<int>(rng() % 4));
    FreeWord core;
    if (rng() % 2) {
      FreeWord u = random_word(g, rng, 2 + static_cast<int>(rng() % 3));
      FreeWord v = random_word(g, rng, 2 + static_cast<int>(rng() % 3));
      core = word_mul(word_mul(u, v), word_mul(word_inverse(u), word_inverse(v)));
    } else {
      int l = 1 + static_cast<int>(rng() % (2 * g));
      int sign = rng() % 2 ? 1 : -1;
      for (long long i = 0; i < d; ++i) core.push_back(sign * l);
    }
    w = word_mul(w, word_mul(word_mul(c, core), word_inverse(c)));
  }
  return w;
}

}  // namespace levelmcg
