#include "levelmcg/groupring.hpp"

#include <bit>

#include "levelmcg/bpoly.hpp"
#include "levelmcg/symplectic.hpp"

namespace levelmcg {

bool GroupRingElt::is_zero() const {
  for (auto x : c)
    if (x != 0) return false;
  return true;
}

GroupRingElt gr_zero(int g) {
  GroupRingElt e;
  e.g = g;
  e.c.assign(std::size_t(1) << (2 * g), 0);
  return e;
}

GroupRingElt gr_basis(const Z2Class& x) {
  GroupRingElt e = gr_zero(x.g);
  e.c[x.bits] = 1;
  return e;
}

GroupRingElt gr_add(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.g != b.g) throw GenusMismatch();
  GroupRingElt r = a;
  for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) & 7;
  return r;
}

GroupRingElt gr_scale(long long k, const GroupRingElt& a) {
  GroupRingElt r = a;
  long long km = emod_ll(k, 8);
  for (auto& x : r.c) x = static_cast<std::uint8_t>((x * km) & 7);
  return r;
}

int sign_I(const std::vector<Z2Class>& xs) {
  if (xs.empty()) throw Error("sign_I needs a nonempty tuple");
  int s = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) s ^= z2_pairing(xs[i], xs[j]);
  return s;
}

namespace {

// Shared subset expansion: sign_of(subset tuple, subset sum) -> +-1.
template <typename SignFn>
GroupRingElt delta_expand(const std::vector<Z2Class>& xs, SignFn sign_of) {
  if (xs.empty()) throw Error("delta needs a nonempty tuple");
  int g = xs[0].g;
  for (const auto& x : xs)
    if (x.g != g) throw GenusMismatch();
  GroupRingElt out = gr_zero(g);
  std::size_t n = xs.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Z2Class> sub;
    std::uint32_t sum = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        sub.push_back(xs[i]);
        sum ^= xs[i].bits;
      }
    int sgn = sign_of(sub, Z2Class{g, sum});
    out.c[sum] = static_cast<std::uint8_t>((out.c[sum] + (sgn > 0 ? 1 : 7)) & 7);
  }
  return out;
}

}  // namespace

GroupRingElt delta0(const std::vector<Z2Class>& xs) {
  return delta_expand(xs, [](const std::vector<Z2Class>& sub, const Z2Class&) {
    return sign_I(sub) == 0 ? 1 : -1;
  });
}

GroupRingElt delta_sigma(const SpinForm& s, const std::vector<Z2Class>& xs) {
  return delta_expand(xs, [&](const std::vector<Z2Class>&, const Z2Class& sum) {
    return q_eval(s, sum) == 0 ? 1 : -1;
  });
}

GroupRingElt delta_sigma_alt(const SpinForm& s, const std::vector<Z2Class>& xs) {
  return delta_expand(xs, [&](const std::vector<Z2Class>& sub, const Z2Class& sum) {
    int sgn = (q_eval(s, sum) + sub.size() + 1) & 1;
    return sgn == 0 ? 1 : -1;
  });
}

namespace {

std::vector<Z2Class> basis_classes(int g) {
  std::vector<Z2Class> xs;
  for (int l = 0; l < 2 * g; ++l) xs.push_back(z2_class(g, 1u << l));
  return xs;
}

}  // namespace

std::vector<GroupRingElt> build_L_open(int g) {
  auto xs = basis_classes(g);
  int n = 2 * g;
  std::vector<GroupRingElt> out;
  out.push_back(gr_basis(z2_class(g, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(gr_scale(4, delta0({xs[i], xs[j]})));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back(gr_scale(2, delta0({xs[i], xs[j], xs[k]})));
  // Coefficient-1 expansions only from size 4 up: the size-3 expansion enters
  // with coefficient 2 (its image under the weighted indicator map is 4 times
  // an indicator product, which is nonzero mod 8).
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    std::vector<Z2Class> sub;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) sub.push_back(xs[i]);
    out.push_back(delta0(sub));
  }
  return out;
}

std::vector<GroupRingElt> build_L_closed(int g) {
  auto out = build_L_open(g);
  auto A = [&](int i) { return z2_class(g, 1u << i); };
  auto B = [&](int i) { return z2_class(g, 1u << (g + i)); };

  GroupRingElt pairs = gr_zero(g);
  for (int i = 0; i < g; ++i) {
    pairs = gr_add(pairs, gr_scale(2, delta0({A(i), B(i)})));
    pairs = gr_add(pairs, gr_scale(4, gr_basis(A(i))));
    pairs = gr_add(pairs, gr_scale(4, gr_basis(B(i))));
  }
  out.push_back(pairs);

  for (int l = 0; l < 2 * g; ++l) {
    Z2Class X = z2_class(g, 1u << l);
    GroupRingElt e = gr_zero(g);
    for (int i = 0; i < g; ++i) {
      e = gr_add(e, delta0({A(i), B(i), X}));
      e = gr_add(e, gr_scale(2, delta0({A(i), X})));
      e = gr_add(e, gr_scale(2, delta0({B(i), X})));
      e = gr_add(e, gr_scale(4, gr_basis(X)));
    }
    out.push_back(e);
  }
  return out;
}

InvariantFactors smith_normal_form(const PresentationMatrix& pm) {
  return cokernel(pm.rows, pm.generators);
}

PresentationMatrix quotient_presentation(int g, bool closed) {
  if (g > 4) throw SizeLimit("quotient limited to g <= 4");
  if (g < 1) throw Error("genus must be >= 1");
  std::size_t n = std::size_t(1) << (2 * g);
  PresentationMatrix pm;
  pm.generators = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> row(n, 0);
    row[i] = 8;
    pm.rows.push_back(std::move(row));
  }
  for (const auto& e : closed ? build_L_closed(g) : build_L_open(g)) {
    std::vector<BigInt> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = e.c[i];
    pm.rows.push_back(std::move(row));
  }
  return pm;
}

InvariantFactors quotient_structure(int g, bool closed) {
  // The presentation includes 8 e_X for every X, so the cokernel can be
  // computed entirely in Z/8; the generic integer elimination suffers severe
  // entry growth from genus 4 on.
  PresentationMatrix pm = quotient_presentation(g, closed);
  return cokernel_mod8(pm.rows, pm.generators);
}

bool membership_in_span(const std::vector<GroupRingElt>& gens, const GroupRingElt& v) {
  if (gens.empty()) return v.is_zero();
  std::size_t n = gens[0].c.size();
  Mat rows;
  rows.reserve(gens.size());
  for (const auto& e : gens) {
    std::vector<BigInt> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = e.c[i];
    rows.push_back(std::move(row));
  }
  std::vector<BigInt> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = v.c[i];
  return in_span_mod8(rows, n, w);
}

bool counting_identity(int g) {
  if (g < 2) throw Error("counting identity stated for g >= 2");
  auto orders = b3_orders(g);
  BigInt lhs = orders.second * abelianization_formula(g, 2).order();
  BigInt rhs = pow2(6 * g + 2 * binom_ll(2 * g, 2) + binom_ll(2 * g, 3));
  return lhs == rhs;
}

}  // namespace levelmcg
