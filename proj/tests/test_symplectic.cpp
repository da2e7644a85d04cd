#include <doctest.h>

#include "levelmcg/symplectic.hpp"

using namespace levelmcg;

namespace {

Mat identity_mat(int n) {
  Mat m(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool vec_eq_mod(const std::vector<BigInt>& a, const std::vector<BigInt>& b, const BigInt& d) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (emod(a[i] - b[i], d) != 0) return false;
  return true;
}

std::vector<BigInt> vec_sum(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

TEST_SUITE("symplectic") {
  TEST_CASE("form matrix pairs each handle with sign") {
    Mat j = form_matrix(2);
    CHECK(j[0][2] == 1);
    CHECK(j[1][3] == 1);
    CHECK(j[2][0] == -1);
    CHECK(j[0][1] == 0);
    CHECK(sform(basis_vector(2, 0), basis_vector(2, 2)) == 1);   // A_1 . B_1
    CHECK(sform(basis_vector(2, 2), basis_vector(2, 0)) == -1);  // B_1 . A_1
    CHECK(sform(basis_vector(2, 0), basis_vector(2, 1)) == 0);   // A_1 . A_2
  }

  TEST_CASE("basic transvections") {
    Mat ta = identity_mat(4);
    ta[0][2] = 1;
    CHECK(transvection(basis_vector(2, 0)).m == ta);  // along A_1: I + E_{1,3}
    Mat tb = identity_mat(4);
    tb[2][0] = -1;
    CHECK(transvection(basis_vector(2, 2)).m == tb);  // along B_1: I - E_{3,1}
  }

  TEST_CASE("transvection along a mixed class matches the defining formula") {
    IntVec y = vec_sum(basis_vector(2, 0), basis_vector(2, 2));  // A_1 + B_1
    SympElement t = transvection(y);
    for (int c = 0; c < 4; ++c) {
      IntVec x = basis_vector(2, c);
      BigInt coeff = sform(y, x);
      for (int r = 0; r < 4; ++r) {
        BigInt expect = (r == c ? 1 : 0) + coeff * y[r];
        CHECK(t.m[r][c] == expect);
      }
    }
  }

  TEST_CASE("inverse and integer powers of a transvection") {
    SympElement t = transvection(basis_vector(2, 0));
    Mat inv = identity_mat(4);
    inv[0][2] = -1;
    CHECK(inverse(t).m == inv);
    Mat p = identity_mat(4);
    p[0][2] = 5;
    CHECK(power(t, 5).m == p);
    CHECK(transvection_power(basis_vector(2, 0), 5).m == p);
    CHECK(transvection_power(basis_vector(2, 0), -3) == power(t, -3));
  }

  TEST_CASE("transvections along orthogonal classes commute") {
    Rng rng(5);
    std::uniform_int_distribution<int> u(-3, 3);
    int done = 0;
    while (done < 50) {
      IntVec x(6), y1(6), y2(6), y(6);
      for (auto& e : x) e = u(rng);
      for (auto& e : y1) e = u(rng);
      for (auto& e : y2) e = u(rng);
      BigInt c1 = sform(x, y2), c2 = sform(x, y1);
      for (int i = 0; i < 6; ++i) y[i] = c1 * y1[i] - c2 * y2[i];
      CHECK(sform(x, y) == 0);
      SympElement tx = transvection(x), ty = transvection(y);
      CHECK(mul(tx, ty) == mul(ty, tx));
      ++done;
    }
  }

  TEST_CASE("constructor rejects non-symplectic matrices") {
    Mat m = identity_mat(4);
    m[0][0] = 2;
    CHECK_THROWS_AS(SympElement(2, m), NotSymplectic);
    CHECK_THROWS_AS(mul(SympElement::identity(2), SympElement::identity(3)), GenusMismatch);
  }

  TEST_CASE("inverse of random products is exact") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      SympElement a = random_symplectic(3, rng, 8);
      CHECK(mul(a, inverse(a)) == SympElement::identity(3));
      CHECK(mul(inverse(a), a) == SympElement::identity(3));
    }
  }

  TEST_CASE("block decomposition of twist powers") {
    const BigInt d = 3;
    auto bd = block_decompose(transvection_power(basis_vector(2, 0), d), d);
    CHECK(bd.q[0][0] == 1);
    CHECK(bd.q[0][1] == 0);
    CHECK(bd.p == Mat(2, std::vector<BigInt>(2, 0)));
    CHECK(bd.r == Mat(2, std::vector<BigInt>(2, 0)));
    CHECK(bd.s == Mat(2, std::vector<BigInt>(2, 0)));

    auto bi = block_decompose(SympElement::identity(2), d);
    CHECK(bi.q == Mat(2, std::vector<BigInt>(2, 0)));

    // Lower-left block of the power along B_1: sign -1 under this form
    // convention (magnitude 1 regardless of convention).
    auto br = block_decompose(transvection_power(basis_vector(2, 2), d), d);
    CHECK(br.r[0][0] == -1);
    CHECK(br.q == Mat(2, std::vector<BigInt>(2, 0)));

    CHECK_THROWS_AS(block_decompose(transvection(basis_vector(2, 0)), 2), NotInLevel);
  }

  TEST_CASE("level membership") {
    CHECK(in_level(transvection_power(basis_vector(2, 0), 6), 2));
    CHECK(in_level(transvection_power(basis_vector(2, 0), 6), 3));
    CHECK(in_level(transvection_power(basis_vector(2, 0), 6), 6));
    CHECK(!in_level(transvection_power(basis_vector(2, 0), 3), 2));
    CHECK(in_level(SympElement::identity(2), 100));
  }

  TEST_CASE("refined membership needs even diagonals") {
    const BigInt d = 2;
    CHECK(in_igusa(transvection_power(basis_vector(2, 0), 2 * d), d));
    CHECK(!in_igusa(transvection_power(basis_vector(2, 0), d), d));
    CHECK_THROWS_AS(in_igusa(SympElement::identity(2), 3), OddLevelIgusa);
  }

  TEST_CASE("commutators of level-2 samples land in the refined level-4 group") {
    Rng rng(21);
    for (int trial = 0; trial < 20; ++trial) {
      SympElement a = sample_level_element(2, 2, rng);
      SympElement b = sample_level_element(2, 2, rng);
      SympElement c = mul(mul(a, b), mul(inverse(a), inverse(b)));
      CHECK(in_igusa(c, 4));
    }
  }

  TEST_CASE("coordinate map on twist powers and the identity") {
    const BigInt d = 3;
    const int g = 2;
    auto v = m_map(transvection_power(basis_vector(g, 0), d), d);
    REQUIRE(v.size() == static_cast<std::size_t>(2 * g * g + g));
    // layout: p row-major (4), then upper q (3), then upper r (3)
    std::vector<BigInt> expect(10, 0);
    expect[4] = 1;  // q_11 slot
    CHECK(v == expect);
    CHECK(vec_eq_mod(m_map(SympElement::identity(g), d), std::vector<BigInt>(10, 0), d));
  }

  TEST_CASE("coordinate map is additive on level samples") {
    Rng rng(33);
    const BigInt d = 3;
    for (int trial = 0; trial < 25; ++trial) {
      SympElement a = sample_level_element(2, d, rng);
      SympElement b = sample_level_element(2, d, rng);
      CHECK(vec_eq_mod(m_map(mul(a, b), d), vec_sum(m_map(a, d), m_map(b, d)), d));
    }
  }

  TEST_CASE("coordinate map kernel is the squared level") {
    Rng rng(35);
    const BigInt d = 2;
    for (int trial = 0; trial < 25; ++trial) {
      SympElement a = sample_level_element(2, d, rng);
      bool zero = vec_eq_mod(m_map(a, d), std::vector<BigInt>(10, 0), d);
      CHECK(zero == in_level(a, d * d));
      SympElement deep = sample_level_element(2, d * d, rng);
      CHECK(vec_eq_mod(m_map(deep, d), std::vector<BigInt>(10, 0), d));
    }
  }

  TEST_CASE("diagonal parity map at the squared level") {
    const long long d = 2;
    const int g = 2;
    auto v = m1_map(transvection_power(basis_vector(g, 0), d * d), d);
    REQUIRE(v.size() == static_cast<std::size_t>(2 * g));
    std::vector<BigInt> expect(2 * g, 0);
    expect[0] = 1;  // first q-diagonal slot
    CHECK(v == expect);
    CHECK_THROWS_AS(m1_map(transvection_power(basis_vector(g, 0), d), d), NotInLevel);
  }

  TEST_CASE("diagonal parity kernel is the refined subgroup") {
    Rng rng(37);
    const BigInt d = 2;
    for (int trial = 0; trial < 25; ++trial) {
      SympElement a = sample_level_element(2, d * d, rng);
      auto v = m1_map(a, d);
      bool zero = true;
      for (const auto& e : v)
        if (emod(e, 2) != 0) zero = false;
      CHECK(zero == in_igusa(a, d * d));
    }
  }

  TEST_CASE("full parity map vanishes on the identity") {
    const int g = 2;
    auto v = m2_map(SympElement::identity(g), 2);
    CHECK(v == std::vector<BigInt>(2 * g * g - g, 0));
    // level-4 twist power is outside the refined subgroup: rejected
    CHECK_THROWS_AS(m2_map(transvection_power(basis_vector(g, 0), 4), 2), NotInIgusa);
  }

  TEST_CASE("twist-power class has order 4 modulo the refined level-4 subgroup") {
    const long long d = 2;
    for (long long k = 1; k <= 2 * d; ++k) {
      bool member = in_igusa(transvection_power(basis_vector(2, 0), d * k), d * d);
      CHECK(member == (k == 2 * d));
    }
  }

  TEST_CASE("transvection product identity instances") {
    CHECK(verify_transvection_product(1, 0, -1, 2, 2));
    CHECK(verify_transvection_product(0, 0, 0, 2, 2));
    CHECK(verify_transvection_product(2, 2, 1, 3, 2));
    CHECK(verify_transvection_product(3, -2, 2, 5, 3));
  }

  TEST_CASE("two-orthogonal-twist identity") {
    CHECK(verify_lantern(basis_vector(2, 0), basis_vector(2, 1)));
    CHECK(verify_lantern(IntVec(4, 0), IntVec(4, 0)));
    CHECK_THROWS_AS(verify_lantern(basis_vector(2, 0), basis_vector(2, 2)), NonOrthogonal);
  }

  TEST_CASE("commutator congruence instances") {
    const int g = 2;
    Mat zero(2 * g, std::vector<BigInt>(2 * g, 0));
    Mat a1 = zero, b1 = zero;
    a1[0][g] = 1;
    b1[g][0] = 1;
    CHECK(verify_commutator_congruence(a1, b1, 2));
    CHECK(verify_commutator_congruence(a1, a1, 5));  // equal arguments: commutator is I
    Mat a2 = zero, b2 = zero;
    a2[0][1] = 1;
    a2[g + 1][g] = -1;
    b2[1][g + 1] = 1;
    CHECK(verify_commutator_congruence(a2, b2, 3));
  }

  TEST_CASE("closed-form level abelianization") {
    CHECK(abelianization_formula(2, 3).to_string() == "Z_3^10");
    CHECK(abelianization_formula(2, 2).to_string() == "Z_2^6 x Z_4^4");
    CHECK(abelianization_formula(3, 2).to_string() == "Z_2^15 x Z_4^6");
    CHECK(abelianization_formula(3, 5).to_string() == "Z_5^21");
  }

  TEST_CASE("level samples are in the level subgroup") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
      SympElement a = sample_level_element(3, 3, rng);
      CHECK(in_level(a, 3));
    }
  }
}
