#include <doctest.h>

#include <bit>

#include "levelmcg/enhancement.hpp"
#include "levelmcg/fixtures.hpp"

using namespace levelmcg;

namespace {

// The three-generator reference space: x.y = x.z = 1, y.z = 0, with values
// (3, 1, 0) or (3, 3, 0) depending on the flag.
Enhancement reference(bool flip_y) { return surface_f_enhancement(flip_y); }

}  // namespace

TEST_SUITE("enhancement") {
  TEST_CASE("construction forces diagonal to match value parity") {
    Enhancement e({{1}}, {3});
    CHECK(e.n == 1);
    CHECK_THROWS_AS(Enhancement({{0}}, {3}), Error);       // odd value needs x.x = 1
    CHECK_THROWS_AS(Enhancement({{1}}, {2}), Error);       // even value needs x.x = 0
    CHECK_THROWS_AS(Enhancement({{0, 1}, {0, 0}}, {0, 0}), Error);  // asymmetric
    CHECK_THROWS_AS(Enhancement({{0}}, {4}), Error);       // value out of Z_4 range
    CHECK_THROWS_AS(Enhancement({{0, 0}, {0, 0}}, {0}), Error);     // shape mismatch
  }

  TEST_CASE("reference surface value table") {
    Enhancement e = reference(false);
    // subsets are bitmasks over (x, y, z)
    CHECK(qhat_eval(e, 0b000) == 0);
    CHECK(qhat_eval(e, 0b001) == 3);
    CHECK(qhat_eval(e, 0b010) == 1);
    CHECK(qhat_eval(e, 0b100) == 0);
    CHECK(qhat_eval(e, 0b011) == 2);  // x + y
    CHECK(qhat_eval(e, 0b110) == 1);  // y + z
    CHECK(qhat_eval(e, 0b101) == 1);  // z + x
    CHECK(qhat_eval(e, 0b111) == 0);
  }

  TEST_CASE("enhancement law holds exhaustively for small spaces") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 1 + static_cast<int>(rng() % 4);
      std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
      std::vector<int> vals(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p[i][j] = p[j][i] = static_cast<int>(rng() % 2);
      for (int i = 0; i < n; ++i) {
        vals[i] = static_cast<int>(rng() % 4);
        p[i][i] = vals[i] % 2;
      }
      Enhancement e(p, vals);
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        for (std::uint32_t y = 0; y < (1u << n); ++y) {
          if ((x & y) != 0) continue;  // disjoint supports give genuine sums
          int cross = 0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              if (((x >> i) & 1) && ((y >> j) & 1)) cross ^= p[i][j];
          int lhs = qhat_eval(e, x | y);
          int rhs = (qhat_eval(e, x) + qhat_eval(e, y) + 2 * cross) % 4;
          if (lhs != rhs) FAIL("law fails n=", n, " x=", x, " y=", y);
        }
    }
    CHECK(true);
  }

  TEST_CASE("gauss sums of the reference surface") {
    CHECK(gauss_sum(reference(false)) == GaussianInt{2, 2});
    CHECK(gauss_sum(reference(true)) == GaussianInt{2, -2});
    CHECK(gauss_sum(Enhancement({{0}}, {0})) == GaussianInt{2, 0});
  }

  TEST_CASE("brown invariant of the reference surface") {
    CHECK(brown_invariant(reference(false)) == 1);
    CHECK(brown_invariant(reference(true)) == 7);
  }

  TEST_CASE("zero-value one-dimensional space has no phase") {
    // Gauss sum is 2, but |G|^2 = 4 != 2^1: a radical vector with value 0
    // keeps the sum nonzero yet off the magnitude-sqrt(2^n) circle.
    CHECK_THROWS_AS(brown_invariant(Enhancement({{0}}, {0})), DegenerateEnhancement);
  }

  TEST_CASE("radical vector with value two kills the gauss sum") {
    // One-dimensional: q(v) = 2, v orthogonal to everything.
    CHECK(gauss_sum(Enhancement({{0}}, {2})) == GaussianInt{0, 0});
    CHECK_THROWS_AS(brown_invariant(Enhancement({{0}}, {2})), DegenerateEnhancement);
    // Same inside a larger space.
    Enhancement e({{1, 0}, {0, 0}}, {1, 2});
    CHECK(gauss_sum(e) == GaussianInt{0, 0});
  }

  TEST_CASE("nondegenerate pairing gives squared magnitude 2^n") {
    for (int n = 1; n <= 4; ++n) {
      for (std::uint32_t pm = 0; pm < (1u << (n * (n - 1) / 2)); ++pm) {
        std::vector<std::vector<int>> p(n, std::vector<int>(n, 0));
        int bit = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) p[i][j] = p[j][i] = (pm >> bit++) & 1;
        for (std::uint32_t vm = 0; vm < (1u << (2 * n)); ++vm) {
          std::vector<int> vals(n);
          for (int i = 0; i < n; ++i) {
            vals[i] = (vm >> (2 * i)) & 3;
            p[i][i] = vals[i] % 2;
          }
          Enhancement e(p, vals);
          if (!pairing_nondegenerate(e)) continue;
          if (gauss_sum(e).norm() != pow2(n)) FAIL("magnitude off at n=", n, " pm=", pm, " vm=", vm);
        }
      }
    }
    CHECK(true);
  }

  TEST_CASE("brown is additive under orthogonal direct sum") {
    Rng rng(17);
    std::vector<Enhancement> pool;
    pool.push_back(reference(false));
    pool.push_back(reference(true));
    pool.push_back(Enhancement({{1}}, {1}));
    pool.push_back(Enhancement({{1}}, {3}));
    pool.push_back(Enhancement({{0, 1}, {1, 0}}, {0, 2}));
    for (int trial = 0; trial < 30; ++trial) {
      const Enhancement& a = pool[rng() % pool.size()];
      const Enhancement& b = pool[rng() % pool.size()];
      Enhancement s = direct_sum(a, b);
      CHECK(s.n == a.n + b.n);
      GaussianInt prod = gauss_sum(a) * gauss_sum(b);
      CHECK(gauss_sum(s) == prod);
      CHECK(brown_invariant(s) == (brown_invariant(a) + brown_invariant(b)) % 8);
    }
  }

  TEST_CASE("doubled spin forms have brown four times arf") {
    for (int g = 1; g <= 3; ++g)
      for (std::uint32_t sv = 0; sv < (1u << (2 * g)); ++sv) {
        SpinForm s{g, sv};
        Enhancement e = doubled(s);
        REQUIRE(e.n == 2 * g);
        // doubled values live in {0, 2}
        for (int v : e.basis_values) CHECK(v % 2 == 0);
        if (brown_invariant(e) != 4 * arf(s)) FAIL("doubling mismatch at g=", g, " s=", sv);
      }
    CHECK(true);
  }

  TEST_CASE("doubled form evaluates to twice the spin value everywhere") {
    const int g = 2;
    for (std::uint32_t sv = 0; sv < 16; ++sv) {
      SpinForm s{g, sv};
      Enhancement e = doubled(s);
      for (std::uint32_t x = 0; x < 16; ++x)
        CHECK(qhat_eval(e, x) == 2 * q_eval(s, z2_class(g, x)));
    }
  }

  TEST_CASE("json round trip") {
    Enhancement e = reference(false);
    ordered_json j = enhancement_to_json(e);
    CHECK(j["dim"] == 3);
    Enhancement back = enhancement_from_json(j);
    CHECK(back == e);
    j["dim"] = 5;
    CHECK_THROWS_AS(enhancement_from_json(j), Error);
  }

  TEST_CASE("size guard") {
    std::vector<std::vector<int>> p(25, std::vector<int>(25, 0));
    std::vector<int> vals(25, 0);
    CHECK_THROWS_AS(Enhancement(p, vals), SizeLimit);
  }
}
