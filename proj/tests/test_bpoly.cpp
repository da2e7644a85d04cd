#include <doctest.h>

#include <bit>

#include "levelmcg/bpoly.hpp"

using namespace levelmcg;

TEST_SUITE("bpoly") {
  TEST_CASE("symbol reduction on basis and mixed classes") {
    const int g = 2;
    CHECK(reduce_symbol(z2_class(g, 1)) == bp_var(g, 0));
    // A_1 + B_1 picks up the constant from the self-intersecting handle.
    BPoly mixed = reduce_symbol(z2_class(g, 0b0101));
    BPoly expect = bp_add(bp_add(bp_var(g, 0), bp_var(g, 2)), bp_one(g));
    CHECK(mixed == expect);
    // A_1 + A_2: no pairing, no constant.
    CHECK(reduce_symbol(z2_class(g, 0b0011)) == bp_add(bp_var(g, 0), bp_var(g, 1)));
    CHECK(reduce_symbol(z2_class(g, 0)) == bp_zero(g));
  }

  TEST_CASE("reduction satisfies the sum rule exhaustively at genus 2") {
    const int g = 2;
    for (std::uint32_t x = 0; x < 16; ++x)
      for (std::uint32_t y = 0; y < 16; ++y) {
        Z2Class cx = z2_class(g, x), cy = z2_class(g, y);
        BPoly lhs = reduce_symbol(z2_add(cx, cy));
        BPoly rhs = bp_add(reduce_symbol(cx), reduce_symbol(cy));
        if (z2_pairing(cx, cy)) rhs = bp_add(rhs, bp_one(g));
        if (!(lhs == rhs)) FAIL("sum rule fails at x=", x, " y=", y);
      }
    CHECK(true);
  }

  TEST_CASE("split order does not matter for triples") {
    const int g = 3;
    Rng rng(37);
    std::uniform_int_distribution<std::uint32_t> u(0, (1u << (2 * g)) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      Z2Class x = z2_class(g, u(rng)), y = z2_class(g, u(rng)), z = z2_class(g, u(rng));
      // ((x+y)+z): expand x+y first, then add z with the cross pairing.
      BPoly left = bp_add(reduce_symbol(z2_add(x, y)), reduce_symbol(z));
      if (z2_pairing(z2_add(x, y), z)) left = bp_add(left, bp_one(g));
      // (x+(y+z)) the other way.
      BPoly right = bp_add(reduce_symbol(x), reduce_symbol(z2_add(y, z)));
      if (z2_pairing(x, z2_add(y, z))) right = bp_add(right, bp_one(g));
      CHECK(left == right);
      CHECK(left == reduce_symbol(z2_add(z2_add(x, y), z)));
    }
  }

  TEST_CASE("idempotent truncated product") {
    const int g = 2;
    CHECK(mul_truncated(bp_var(g, 0), bp_var(g, 0)) == bp_var(g, 0));
    CHECK(mul_truncated(bp_one(g), alpha_element(g)) == alpha_element(g));
    BPoly triple = mul_truncated(mul_truncated(bp_var(g, 0), bp_var(g, 1)), bp_var(g, 2));
    CHECK(triple.support == std::set<std::uint32_t>{0b0111});
    CHECK_THROWS_AS(mul_truncated(triple, bp_var(g, 3)), DegreeOverflow);
    CHECK(mul_truncated(bp_zero(g), bp_var(g, 0)) == bp_zero(g));
  }

  TEST_CASE("products are order independent within the degree bound") {
    const int g = 3;
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      int a = static_cast<int>(rng() % (2 * g)), b = static_cast<int>(rng() % (2 * g)),
          c = static_cast<int>(rng() % (2 * g));
      BPoly left = mul_truncated(mul_truncated(bp_var(g, a), bp_var(g, b)), bp_var(g, c));
      BPoly right = mul_truncated(bp_var(g, a), mul_truncated(bp_var(g, b), bp_var(g, c)));
      CHECK(left == right);
      CHECK(mul_truncated(bp_var(g, a), bp_var(g, b)) ==
            mul_truncated(bp_var(g, b), bp_var(g, a)));
    }
  }

  TEST_CASE("dimension formula and basis enumeration") {
    CHECK(b3_dim(1) == 4);
    CHECK(b3_dim(3) == 42);
    for (int g = 1; g <= 3; ++g) {
      auto basis = b3_basis(g);
      CHECK(static_cast<long long>(basis.size()) == b3_dim(g));
      for (auto m : basis) CHECK(std::popcount(m) <= 3);
      for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
    }
  }

  TEST_CASE("orders of the space and its constant quotient") {
    CHECK(b3_orders(1) == std::pair<BigInt, BigInt>{pow2(4), pow2(3)});
    CHECK(b3_orders(3) == std::pair<BigInt, BigInt>{pow2(42), pow2(41)});
  }

  TEST_CASE("pair element and its multiplication map") {
    const int g = 3;
    BPoly alpha = alpha_element(g);
    CHECK(alpha.support.size() == static_cast<std::size_t>(g));
    for (auto m : alpha.support) CHECK(std::popcount(m) == 2);

    Mat map = alpha_multiplication_map(g);
    REQUIRE(map.size() == static_cast<std::size_t>(b3_dim(g)));
    REQUIRE(map[0].size() == static_cast<std::size_t>(2 * g + 1));
    // First column is the image of the constant: alpha itself.
    auto basis = b3_basis(g);
    for (std::size_t r = 0; r < basis.size(); ++r)
      CHECK(map[r][0] == (alpha.support.count(basis[r]) ? 1 : 0));
  }

  TEST_CASE("rank of the multiplication map and the quotient dimension") {
    CHECK(alpha_map_rank(1) == 1);  // all three inputs hit the single pair
    CHECK(alpha_map_rank(2) == 5);
    CHECK(alpha_map_rank(3) == 7);
    // Quotient dimensions (4g^3 - g)/3 for g >= 2.
    for (int g = 2; g <= 4; ++g)
      CHECK(b3_dim(g) - alpha_map_rank(g) == (4ll * g * g * g - g) / 3);
  }

  TEST_CASE("handle products stay within the degree bound") {
    for (int g = 2; g <= 3; ++g) {
      BPoly alpha = alpha_element(g);
      for (int l = 0; l < 2 * g; ++l) CHECK_NOTHROW(mul_truncated(alpha, bp_var(g, l)));
      // but a product of the pair element with itself overflows for g >= 2
      CHECK_THROWS_AS(mul_truncated(alpha, alpha), DegreeOverflow);
    }
  }
}
