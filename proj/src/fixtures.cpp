#include "levelmcg/fixtures.hpp"

namespace levelmcg {

namespace {

// Genus-2 images below are written with interleaved letters 1=a1, 2=b1,
// 3=a2, 4=b2 (sign = inverse) and embedded into genus g block indexing
// (a_i -> i, b_i -> g+i), identity on handles beyond the second.
FreeWord embed_g2(int g, std::initializer_list<int> letters) {
  FreeWord w;
  for (int l : letters) {
    int a = l > 0 ? l : -l;
    int mapped;
    switch (a) {
      case 1: mapped = 1; break;
      case 2: mapped = g + 1; break;
      case 3: mapped = 2; break;
      case 4: mapped = g + 2; break;
      default: throw Error("embed_g2 letter out of range");
    }
    w.push_back(l > 0 ? mapped : -mapped);
  }
  return w;
}

EndoF endo_from_g2(int g, long long d, std::initializer_list<int> a1,
                   std::initializer_list<int> b1, std::initializer_list<int> a2,
                   std::initializer_list<int> b2) {
  if (g < 2) throw Error("fixture needs g >= 2");
  std::vector<FreeWord> imgs(2 * g);
  for (int l = 1; l <= 2 * g; ++l) imgs[l - 1] = {l};
  imgs[0] = embed_g2(g, a1);
  imgs[g] = embed_g2(g, b1);
  imgs[1] = embed_g2(g, a2);
  imgs[g + 1] = embed_g2(g, b2);
  return EndoF(g, d, std::move(imgs));
}

}  // namespace

EndoF twist_a(int g, long long d, int i) {
  if (i < 1 || i > g) throw Error("handle index out of range");
  std::vector<FreeWord> imgs(2 * g);
  for (int l = 1; l <= 2 * g; ++l) imgs[l - 1] = {l};
  imgs[g + i - 1] = {g + i, i};  // b_i -> b_i a_i
  return EndoF(g, d, std::move(imgs));
}

EndoF twist_b(int g, long long d, int i) {
  if (i < 1 || i > g) throw Error("handle index out of range");
  std::vector<FreeWord> imgs(2 * g);
  for (int l = 1; l <= 2 * g; ++l) imgs[l - 1] = {l};
  imgs[i - 1] = {i, -(g + i)};  // a_i -> a_i b_i^{-1}
  return EndoF(g, d, std::move(imgs));
}

EndoF belt_twist(int g, long long d) {
  return endo_from_g2(g, d,
                      {-2, 3, -4, -3, 2, 1, -2},              // a1
                      {2},                                    // b1
                      {3, -4, -3, 2, 1, -2, -1, -2, 3},       // a2
                      {4});                                   // b2
}

EndoF partner_twist(int g, long long d) {
  return endo_from_g2(g, d,
                      {-2, 4, 3, -4, -3, 2, 1, -2},
                      {2},
                      {4, 3, -4, -3, 2, 1, -2, -1, -2, 3, 2, 1, 2, -1, -2, 3, 4, -3, -4},
                      {4, 3, -4, -3, 2, 1, -2, -1, -2, 4, 2, 1, 2, -1, -2, 3, 4, -3, -4});
}

EndoF bounding_pair_map(int g, long long d) {
  return endo_from_g2(g, d,
                      {1, 2, -1, -2, 3, 4, -3, -4, 2, 1, -2},
                      {2},
                      {2, 1, 2, -1, -2, 3, 4, -3, -4, 3, 4, 3, -4, -3, 2, 1, -2, -1, -2},
                      {2, 1, 2, -1, -2, 3, 4, -3, 4, 3, -4, -3, 2, 1, -2, -1, -2});
}

EndoF separating_twist(int g, long long d) {
  if (g < 2) throw Error("fixture needs g >= 2");
  EndoF prod = compose(twist_a(g, d, 1), twist_b(g, d, 1));
  return endo_power(prod, 6);
}

std::vector<std::pair<std::string, EndoF>> fixture_registry(int g, long long d) {
  std::vector<std::pair<std::string, EndoF>> r;
  for (int i = 1; i <= g; ++i) {
    r.emplace_back("twist_a" + std::to_string(i) + "_pow_d", endo_power(twist_a(g, d, i), d));
    r.emplace_back("twist_b" + std::to_string(i) + "_pow_d", endo_power(twist_b(g, d, i), d));
  }
  if (g >= 2) {
    r.emplace_back("belt_twist_pow_d", endo_power(belt_twist(g, d), d));
    r.emplace_back("separating_twist", separating_twist(g, d));
    r.emplace_back("bounding_pair", bounding_pair_map(g, d));
  }
  return r;
}

ordered_json endo_to_json(const EndoF& e) {
  ordered_json j;
  j["g"] = e.g;
  j["d"] = e.d;
  std::vector<std::string> imgs;
  for (const auto& w : e.images) imgs.push_back(word_format(w, e.g));
  j["images"] = imgs;
  return j;
}

EndoF endo_from_json(const ordered_json& j) {
  int g = j.at("g").get<int>();
  long long d = j.at("d").get<long long>();
  std::vector<FreeWord> imgs;
  for (const auto& s : j.at("images")) imgs.push_back(word_parse(s.get<std::string>(), g));
  return EndoF(g, d, std::move(imgs));
}

ordered_json enhancement_to_json(const Enhancement& e) {
  ordered_json j;
  j["dim"] = e.n;
  j["pairing"] = e.pairing;
  j["basis_values"] = e.basis_values;
  return j;
}

Enhancement enhancement_from_json(const ordered_json& j) {
  auto pairing = j.at("pairing").get<std::vector<std::vector<int>>>();
  auto values = j.at("basis_values").get<std::vector<int>>();
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != values.size())
    throw Error("dim does not match basis_values length");
  return Enhancement(std::move(pairing), std::move(values));
}

Enhancement surface_f_enhancement(int q_b1) {
  if (q_b1 != 0 && q_b1 != 1) throw Error("q_b1 must be 0 or 1");
  std::vector<std::vector<int>> pairing = {{1, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  std::vector<int> values = {3, q_b1 ? 3 : 1, 0};
  return Enhancement(std::move(pairing), std::move(values));
}

}  // namespace levelmcg
