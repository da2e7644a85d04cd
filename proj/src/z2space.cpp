#include "levelmcg/z2space.hpp"

#include <bit>

namespace levelmcg {

namespace {
std::uint32_t low_mask(int g) { return (1u << g) - 1u; }
}  // namespace

Z2Class z2_class(int g, std::uint32_t bits) {
  if (g < 1 || g > 15) throw Error("genus out of range");
  if (bits >> (2 * g)) throw Error("class has bits beyond 2g");
  return Z2Class{g, bits};
}

Z2Class z2_add(const Z2Class& x, const Z2Class& y) {
  if (x.g != y.g) throw GenusMismatch();
  return Z2Class{x.g, x.bits ^ y.bits};
}

int z2_pairing(const Z2Class& x, const Z2Class& y) {
  if (x.g != y.g) throw GenusMismatch();
  int g = x.g;
  std::uint32_t m = low_mask(g);
  std::uint32_t cross = ((x.bits & m) & (y.bits >> g)) ^ ((x.bits >> g) & (y.bits & m));
  return std::popcount(cross) & 1;
}

std::string z2_serialize(const Z2Class& x) {
  std::string s;
  for (int i = 0; i < x.g; ++i) s += ((x.bits >> i) & 1) ? '1' : '0';
  s += '|';
  for (int i = 0; i < x.g; ++i) s += ((x.bits >> (x.g + i)) & 1) ? '1' : '0';
  return s;
}

Z2Class z2_parse(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos || s.size() != 2 * bar + 1)
    throw Error("class string must be g bits, '|', g bits");
  int g = static_cast<int>(bar);
  std::uint32_t bits = 0;
  for (int i = 0; i < g; ++i) {
    char a = s[i], b = s[bar + 1 + i];
    if ((a != '0' && a != '1') || (b != '0' && b != '1')) throw Error("class string must be binary");
    if (a == '1') bits |= 1u << i;
    if (b == '1') bits |= 1u << (g + i);
  }
  return z2_class(g, bits);
}

int q_eval(const SpinForm& s, const Z2Class& x) {
  if (s.g != x.g) throw GenusMismatch();
  int g = s.g;
  std::uint32_t m = low_mask(g);
  // base values on the support, plus one cross term per handle fully present
  int v = std::popcount(s.basis_values & x.bits) + std::popcount(x.bits & (x.bits >> g) & m);
  return v & 1;
}

int arf(const SpinForm& s) {
  std::uint32_t m = low_mask(s.g);
  return std::popcount(s.basis_values & (s.basis_values >> s.g) & m) & 1;
}

SpinForm act(const SpinForm& s, const Z2Class& x) {
  if (s.g != x.g) throw GenusMismatch();
  int g = s.g;
  std::uint32_t m = low_mask(g);
  // new basis value on X_l is q(X_l) + x.X_l; pairing with a basis class
  // reads off the partner coordinate of x
  std::uint32_t flip = ((x.bits >> g) & m) | ((x.bits & m) << g);
  return SpinForm{g, s.basis_values ^ flip};
}

std::vector<std::uint8_t> indicator(const Z2Class& x) {
  std::size_t n = std::size_t(1) << (2 * x.g);
  std::vector<std::uint8_t> t(n);
  for (std::size_t y = 0; y < n; ++y)
    t[y] = static_cast<std::uint8_t>(z2_pairing(x, Z2Class{x.g, static_cast<std::uint32_t>(y)}));
  return t;
}

bool primitive_mod_d(const std::vector<BigInt>& x, const BigInt& d) {
  if (d < 2) throw Error("modulus must be >= 2");
  for (const auto& c : x)
    if (gcd(emod(c, d), d) == 1) return true;
  return false;
}

std::vector<BigInt> sd_representative(const std::vector<BigInt>& x, const BigInt& d) {
  if (d < 2) throw Error("modulus must be >= 2");
  std::vector<BigInt> plus(x.size()), minus(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    plus[i] = emod(x[i], d);
    minus[i] = emod(-x[i], d);
  }
  return plus <= minus ? plus : minus;
}

}  // namespace levelmcg
