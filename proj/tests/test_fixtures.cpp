#include <doctest.h>

#include "levelmcg/fixtures.hpp"

using namespace levelmcg;

namespace {

// x . y = sum_i (x_i y_{g+i} - x_{g+i} y_i) on coordinate vectors.
BigInt pair_vec(const std::vector<BigInt>& x, const std::vector<BigInt>& y, int g) {
  BigInt s = 0;
  for (int i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
  return s;
}

std::vector<BigInt> basis_vec(int l, int g) {
  std::vector<BigInt> v(2 * g, 0);
  v[l] = 1;
  return v;
}

}  // namespace

TEST_SUITE("fixtures") {
  TEST_CASE("registry layout") {
    auto r1 = fixture_registry(1, 3);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].first == "twist_a1_pow_d");
    CHECK(r1[1].first == "twist_b1_pow_d");

    auto r3 = fixture_registry(3, 3);
    REQUIRE(r3.size() == 9);
    CHECK(r3[0].first == "twist_a1_pow_d");
    CHECK(r3[5].first == "twist_b3_pow_d");
    CHECK(r3[6].first == "belt_twist_pow_d");
    CHECK(r3[7].first == "separating_twist");
    CHECK(r3.back().first == "bounding_pair");
  }

  TEST_CASE("registry entries fix homology mod d and the boundary") {
    for (int g : {2, 3}) {
      for (long long d : {3, 5}) {
        for (const auto& [name, e] : fixture_registry(g, d)) {
          INFO("fixture ", name, " g=", g, " d=", d);
          CHECK(e.g == g);
          CHECK(e.d == d);
          CHECK(check_ia(e));
          CHECK(boundary_preserved(e));
        }
      }
    }
  }

  TEST_CASE("basic twists are transvections on homology") {
    const int g = 3;
    EndoF ta = twist_a(g, 3, 2);
    // b_2 -> b_2 a_2, everything else fixed.
    for (int l = 0; l < 2 * g; ++l) {
      auto img = abelianize(ta.images[l], g);
      auto expect = basis_vec(l, g);
      if (l == g + 1) expect[1] += 1;
      CHECK(img == expect);
    }
    EndoF tb = twist_b(g, 3, 1);
    for (int l = 0; l < 2 * g; ++l) {
      auto img = abelianize(tb.images[l], g);
      auto expect = basis_vec(l, g);
      if (l == 0) expect[g] -= 1;
      CHECK(img == expect);
    }
  }

  TEST_CASE("belt twist is the transvection along b1 plus b2") {
    const int g = 3;
    EndoF belt = belt_twist(g, 3);
    std::vector<BigInt> c(2 * g, 0);
    c[g] = 1;      // B_1
    c[g + 1] = 1;  // B_2
    for (int l = 0; l < 2 * g; ++l) {
      auto x = basis_vec(l, g);
      BigInt coef = pair_vec(x, c, g);
      std::vector<BigInt> expect = x;
      for (int j = 0; j < 2 * g; ++j) expect[j] -= coef * c[j];
      CHECK(abelianize(belt.images[l], g) == expect);
    }
  }

  TEST_CASE("partner twist matches twist_b1 on homology and commutes with it") {
    const int g = 2;
    const long long d = 3;
    EndoF partner = partner_twist(g, d);
    EndoF tb1 = twist_b(g, d, 1);
    bool same_word = true;
    for (int l = 0; l < 2 * g; ++l) {
      CHECK(abelianize(partner.images[l], g) == abelianize(tb1.images[l], g));
      if (word_reduce(partner.images[l]) != word_reduce(tb1.images[l])) same_word = false;
    }
    CHECK(!same_word);  // equal only after abelianizing

    EndoF pq = compose(partner, tb1);
    EndoF qp = compose(tb1, partner);
    for (int l = 0; l < 2 * g; ++l)
      CHECK(word_reduce(pq.images[l]) == word_reduce(qp.images[l]));
  }

  TEST_CASE("bounding pair map is trivial on exact homology") {
    for (int g : {2, 3}) {
      EndoF bp = bounding_pair_map(g, 7);
      for (int l = 0; l < 2 * g; ++l)
        CHECK(abelianize(bp.images[l], g) == basis_vec(l, g));
    }
  }

  TEST_CASE("tau across the registry") {
    const int g = 3;
    const long long d = 3;
    for (const auto& [name, e] : fixture_registry(g, d)) {
      JohnsonValue v = tau(e);
      INFO("fixture ", name);
      if (name == "bounding_pair") {
        CHECK(!v.is_zero());
        CHECK(in_lambda3(v));
        JohnsonValue expect = trivector_value(g, d, 1, 3, 4);
        JohnsonValue neg = expect;
        for (auto& mat : neg.m)
          for (auto& row : mat)
            for (auto& x : row) x = emod_ll(-x, d);
        CHECK((v == expect || v == neg));
      } else {
        CHECK(v.is_zero());
      }
    }
  }

  TEST_CASE("endomorphism json round trip") {
    for (const auto& [name, e] : fixture_registry(2, 5)) {
      ordered_json j = endo_to_json(e);
      CHECK(j.at("g") == 2);
      CHECK(j.at("d") == 5);
      EndoF back = endo_from_json(j);
      CHECK(back.g == e.g);
      CHECK(back.d == e.d);
      CHECK(back.images == e.images);
    }
    ordered_json j = endo_to_json(endo_identity(1, 3));
    CHECK(j.at("images") == std::vector<std::string>{"a1", "b1"});
  }

  TEST_CASE("enhancement fixture and its json round trip") {
    for (int q : {0, 1}) {
      Enhancement e = surface_f_enhancement(q);
      CHECK(e.n == 3);
      CHECK(e.pairing == std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 0}, {1, 0, 0}});
      CHECK(e.basis_values == std::vector<int>{3, q ? 3 : 1, 0});
      Enhancement back = enhancement_from_json(enhancement_to_json(e));
      CHECK(back.pairing == e.pairing);
      CHECK(back.basis_values == e.basis_values);
    }
    CHECK(brown_invariant(surface_f_enhancement(0)) == 1);
    CHECK(brown_invariant(surface_f_enhancement(1)) == 7);
    CHECK_THROWS_AS(surface_f_enhancement(2), Error);

    ordered_json bad;
    bad["dim"] = 2;
    bad["pairing"] = std::vector<std::vector<int>>{{1}};
    bad["basis_values"] = std::vector<int>{1};
    CHECK_THROWS_AS(enhancement_from_json(bad), Error);
  }
}
