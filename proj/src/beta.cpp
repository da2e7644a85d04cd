#include "levelmcg/beta.hpp"

#include <bit>

namespace levelmcg {

bool Z8Function::is_zero() const {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

Z8Function z8f_zero(int g) {
  Z8Function f;
  f.g = g;
  f.v.assign(std::size_t(1) << (2 * g), 0);
  return f;
}

Z8Function z8f_add(const Z8Function& a, const Z8Function& b) {
  if (a.g != b.g) throw GenusMismatch();
  Z8Function r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = (r.v[i] + b.v[i]) & 7;
  return r;
}

Z8Function z8f_scale(long long k, const Z8Function& a) {
  Z8Function r = a;
  long long km = emod_ll(k, 8);
  for (auto& x : r.v) x = static_cast<std::uint8_t>((x * km) & 7);
  return r;
}

Z8Function beta_generator(const SpinForm& s, const Z2Class& C) {
  if (s.g != C.g) throw GenusMismatch();
  if (C.bits == 0) throw ZeroClass();
  Z8Function f = z8f_zero(s.g);
  auto ind = indicator(C);
  long long sign = q_eval(s, C) == 0 ? 1 : 7;
  for (std::size_t i = 0; i < f.v.size(); ++i)
    f.v[i] = static_cast<std::uint8_t>((sign * ind[i]) & 7);
  return f;
}

Z8Function beta_extend(const SpinForm& s, const GroupRingElt& e) {
  if (s.g != e.g) throw GenusMismatch();
  Z8Function f = z8f_zero(e.g);
  for (std::size_t cls = 1; cls < e.c.size(); ++cls) {
    if (e.c[cls] == 0) continue;
    Z8Function gen = beta_generator(s, Z2Class{e.g, static_cast<std::uint32_t>(cls)});
    f = z8f_add(f, z8f_scale(e.c[cls], gen));
  }
  return f;
}

std::vector<std::uint8_t> psi_project(const Z8Function& f, int g) {
  if (f.g != g) throw GenusMismatch();
  int n = 2 * g;
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(n + binom_ll(n, 2) + binom_ll(n, 3)));
  for (int i = 0; i < n; ++i) out.push_back(f.v[1u << i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(f.v[(1u << i) | (1u << j)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back(f.v[(1u << i) | (1u << j) | (1u << k)]);
  return out;
}

InvariantFactors image_of_psi_beta(int g, const SpinForm* sigma) {
  if (g > 4) throw SizeLimit("image computation limited to g <= 4");
  SpinForm s = sigma ? *sigma : SpinForm{g, 0};
  std::size_t total = std::size_t(1) << (2 * g);
  Mat gens;
  std::size_t cols = 0;
  for (std::size_t cls = 1; cls < total; ++cls) {
    auto p = psi_project(beta_extend(s, gr_basis(Z2Class{g, static_cast<std::uint32_t>(cls)})), g);
    cols = p.size();
    std::vector<BigInt> row(p.begin(), p.end());
    gens.push_back(std::move(row));
  }
  return subgroup_mod8(gens, cols);
}

BigInt beta_image_order(int g, const SpinForm& s) {
  std::size_t total = std::size_t(1) << (2 * g);
  Mat gens;
  for (std::size_t cls = 1; cls < total; ++cls) {
    auto f = beta_extend(s, gr_basis(Z2Class{g, static_cast<std::uint32_t>(cls)}));
    std::vector<BigInt> row(f.v.begin(), f.v.end());
    gens.push_back(std::move(row));
  }
  return subgroup_mod8(gens, total).order();
}

namespace {

Z2Class random_class(int g, Rng& rng, bool nonzero) {
  std::uint32_t mask = (1u << (2 * g)) - 1u;
  std::uint32_t bits = static_cast<std::uint32_t>(rng()) & mask;
  while (nonzero && bits == 0) bits = static_cast<std::uint32_t>(rng()) & mask;
  return Z2Class{g, bits};
}

}  // namespace

bool kernel_contains_L(const SpinForm& s, int g, Rng& rng, int trials) {
  if (g > 4) throw SizeLimit("kernel check limited to g <= 4");
  for (const auto& rel : build_L_open(g))
    if (!beta_extend(s, rel).is_zero()) return false;
  for (int t = 0; t < trials; ++t) {
    std::vector<Z2Class> xs;
    int n = 2 + static_cast<int>(rng() % 4);  // tuple sizes 2..5
    for (int i = 0; i < n; ++i) xs.push_back(random_class(g, rng, false));
    for (bool alt : {false, true}) {
      GroupRingElt d2 = alt ? delta_sigma_alt(s, {xs[0], xs[1]}) : delta_sigma(s, {xs[0], xs[1]});
      if (!beta_extend(s, gr_scale(4, d2)).is_zero()) return false;
      if (n >= 3) {
        GroupRingElt d3 = alt ? delta_sigma_alt(s, {xs[0], xs[1], xs[2]})
                              : delta_sigma(s, {xs[0], xs[1], xs[2]});
        if (!beta_extend(s, gr_scale(2, d3)).is_zero()) return false;
      }
      if (n >= 4) {
        GroupRingElt dn = alt ? delta_sigma_alt(s, xs) : delta_sigma(s, xs);
        if (!beta_extend(s, dn).is_zero()) return false;
      }
    }
  }
  return true;
}

std::vector<std::pair<GroupRingElt, GroupRingElt>> iota_relations(int g) {
  if (g < 2) throw Error("relation pairs need g >= 2");
  auto A1 = z2_class(g, 1u << 0);
  auto B1 = z2_class(g, 1u << g);
  auto B2 = z2_class(g, 1u << (g + 1));
  auto sum2 = [&](Z2Class a, Z2Class b) { return z2_add(a, b); };

  std::vector<std::pair<GroupRingElt, GroupRingElt>> out;

  // product of the two degree-1 symbols for a handle
  GroupRingElt lhs1 = gr_add(gr_scale(2, delta0({A1, B1})),
                             gr_add(gr_scale(4, gr_basis(A1)), gr_scale(4, gr_basis(B1))));
  GroupRingElt rhs1 = gr_add(gr_scale(2, gr_basis(A1)),
                             gr_add(gr_scale(2, gr_basis(B1)), gr_scale(2, gr_basis(sum2(A1, B1)))));
  out.emplace_back(lhs1, rhs1);

  // degree-3 product A_1 B_1 B_2
  GroupRingElt lhs2 = delta0({A1, B1, B2});
  lhs2 = gr_add(lhs2, gr_scale(2, delta0({A1, B2})));
  lhs2 = gr_add(lhs2, gr_scale(2, delta0({B1, B2})));
  lhs2 = gr_add(lhs2, gr_scale(4, gr_basis(B2)));
  GroupRingElt rhs2 = gr_basis(A1);
  rhs2 = gr_add(rhs2, gr_basis(B1));
  rhs2 = gr_add(rhs2, gr_basis(sum2(B1, B2)));
  rhs2 = gr_add(rhs2, gr_basis(sum2(A1, B1)));
  rhs2 = gr_add(rhs2, gr_basis(z2_add(sum2(A1, B1), B2)));
  rhs2 = gr_add(rhs2, gr_basis(sum2(A1, B2)));
  rhs2 = gr_add(rhs2, gr_scale(7, gr_basis(B2)));
  out.emplace_back(lhs2, rhs2);

  // single symbol: 4[x] with x translated by a disjoint handle class
  GroupRingElt lhs3 = gr_scale(4, gr_basis(A1));
  GroupRingElt rhs3 = gr_add(gr_scale(4, gr_basis(sum2(A1, B2))), gr_scale(4, gr_basis(B2)));
  out.emplace_back(lhs3, rhs3);

  // image of the constant: must vanish in the quotient
  out.emplace_back(gr_scale(4, delta0({A1, B1})), gr_zero(g));
  return out;
}

bool iota_relations_check(int g) {
  auto L = build_L_open(g);
  for (const auto& [lhs, rhs] : iota_relations(g)) {
    GroupRingElt diff = gr_add(lhs, gr_scale(7, rhs));
    if (!membership_in_span(L, diff)) return false;
  }
  return true;
}

}  // namespace levelmcg
