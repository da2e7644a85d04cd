// Batch front-end: every library check and computation as a subcommand with
// deterministic, machine-readable output.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage / size / input
// errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "levelmcg/acceptance.hpp"
#include "levelmcg/beta.hpp"
#include "levelmcg/bpoly.hpp"
#include "levelmcg/enhancement.hpp"
#include "levelmcg/fixtures.hpp"
#include "levelmcg/groupring.hpp"
#include "levelmcg/magnus.hpp"
#include "levelmcg/smith.hpp"
#include "levelmcg/symplectic.hpp"
#include "levelmcg/z2space.hpp"

using levelmcg::BigInt;
using levelmcg::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  bool text = false;

  void emit(const ordered_json& j) const {
    if (!text) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : j.items()) {
      if (value.is_string())
        std::cout << key << ": " << value.get<std::string>() << "\n";
      else
        std::cout << key << ": " << value.dump() << "\n";
    }
  }
};

std::vector<std::string> factor_strings(const levelmcg::InvariantFactors& f) {
  std::vector<std::string> out;
  for (const auto& d : f.factors) out.push_back(d.str());
  for (long long i = 0; i < f.free_rank; ++i) out.push_back("0");
  return out;
}

ordered_json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw levelmcg::Error("cannot open " + path);
  ordered_json j;
  in >> j;
  return j;
}

levelmcg::SympElement load_matrix(const std::string& path) {
  ordered_json j = load_json(path);
  int g = j.at("g").get<int>();
  auto entries = j.at("entries").get<std::vector<long long>>();
  std::size_t n = 2 * static_cast<std::size_t>(g);
  if (entries.size() != n * n) throw levelmcg::Error("entries length must be (2g)^2");
  levelmcg::Mat m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[i][k] = entries[i * n + k];
  return levelmcg::SympElement(g, std::move(m));
}

std::vector<BigInt> parse_int_vector(const std::string& s, int expected_len) {
  std::vector<BigInt> v;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) v.emplace_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (expected_len >= 0 && v.size() != static_cast<std::size_t>(expected_len))
    throw levelmcg::Error("expected " + std::to_string(expected_len) + " comma-separated integers");
  return v;
}

std::uint32_t parse_bits(const std::string& s, int nbits) {
  std::uint32_t bits = 0;
  int pos = 0;
  for (char ch : s) {
    if (ch == '|' || ch == ' ') continue;
    if (ch != '0' && ch != '1') throw levelmcg::Error("bit strings use only 0, 1, '|'");
    if (pos >= nbits) throw levelmcg::Error("bit string longer than " + std::to_string(nbits));
    if (ch == '1') bits |= 1u << pos;
    ++pos;
  }
  if (pos != nbits) throw levelmcg::Error("bit string must have " + std::to_string(nbits) + " bits");
  return bits;
}

std::string json_vec(const std::vector<BigInt>& v, ordered_json* out) {
  std::vector<std::string> s;
  for (const auto& e : v) s.push_back(e.str());
  *out = s;
  return "";
}

int run_reproduce(std::uint64_t seed, int only_id, const Output& out) {
  std::vector<levelmcg::CriterionResult> results;
  if (only_id > 0)
    results.push_back(levelmcg::run_criterion(only_id, seed));
  else
    results = levelmcg::run_all(seed);
  int failures = 0;
  if (out.text) {
    for (const auto& r : results) {
      std::printf("[%2d] %s  %-30s %8.2fs  %s\n", r.id, r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.seconds, r.detail.c_str());
      std::fflush(stdout);
      if (!r.pass) ++failures;
    }
    std::printf("%zu checks, %d failed\n", results.size(), failures);
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      if (!r.pass) ++failures;
      arr.push_back({{"id", r.id},
                     {"name", r.name},
                     {"pass", r.pass},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
    }
    ordered_json j;
    j["command"] = "reproduce";
    j["seed"] = seed;
    j["results"] = arr;
    j["failures"] = failures;
    std::cout << j.dump(2) << "\n";
  }
  return failures == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks: symplectic congruence subgroups, quadratic"
               " enhancements and their Gauss sums, mod-8 group-ring quotients, and"
               " degree-2 free-group expansions"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool text = false, json_flag = false;
  app.add_option("--seed", seed, "Base RNG seed (default 0)");
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--text", text, "Plain-text output");

  int exit_code = kExitPass;
  Output out;

  // ---- symp ---------------------------------------------------------------
  auto* symp = app.add_subcommand("symp", "Symplectic congruence-subgroup checks");
  symp->require_subcommand(1);

  struct {
    long long a1 = 1, b1 = 0, a2 = -1, d = 2;
    int g = 2;
  } lm;
  auto* symp_lm = symp->add_subcommand("verify-transvection-product",
                                       "Exact transvection-product identity for one parameter tuple");
  symp_lm->add_option("--a1", lm.a1);
  symp_lm->add_option("--b1", lm.b1);
  symp_lm->add_option("--a2", lm.a2);
  symp_lm->add_option("--d", lm.d);
  symp_lm->add_option("--g", lm.g);

  struct {
    int g = 3;
    long long trials = 100;
    std::string x, y;
  } la;
  auto* symp_la = symp->add_subcommand("verify-lantern",
                                       "T_{x+y} T_{x-y} = T_x^2 T_y^2 for orthogonal pairs");
  symp_la->add_option("--g", la.g);
  symp_la->add_option("--trials", la.trials, "Random orthogonal pairs when --x/--y absent");
  symp_la->add_option("--x", la.x, "Comma-separated 2g integers");
  symp_la->add_option("--y", la.y, "Comma-separated 2g integers");

  struct {
    std::string input;
    long long d = 2;
    bool igusa = false;
  } mem;
  auto* symp_mem = symp->add_subcommand("membership", "Level / refined-level membership of a matrix");
  symp_mem->add_option("--input", mem.input)->required();
  symp_mem->add_option("--d", mem.d);
  symp_mem->add_flag("--igusa", mem.igusa, "Also require even q,r diagonals (even d)");

  struct {
    std::string which, input;
    long long d = 2;
  } mm;
  for (const char* name : {"m", "m1", "m2"}) {
    auto* sc = symp->add_subcommand(name, std::string("Evaluate the ") + name + " coordinate map");
    auto opts = std::make_shared<decltype(mm)>();
    opts->which = name;
    sc->add_option("--input", opts->input)->required();
    sc->add_option("--d", opts->d);
    sc->final_callback([opts, &mm] { mm = *opts; });
  }

  struct {
    int g = 2;
    long long d = 3;
  } ab;
  auto* symp_ab = symp->add_subcommand("abelianization",
                                       "Closed-form invariant factors of the level-d subgroup");
  symp_ab->add_option("--g", ab.g);
  symp_ab->add_option("--d", ab.d);

  // ---- brown --------------------------------------------------------------
  std::string brown_input;
  auto* brown = app.add_subcommand("brown", "Gauss sum and eighth-root phase of an enhancement");
  brown->add_option("--input", brown_input)->required();

  // ---- module -------------------------------------------------------------
  auto* module_cmd = app.add_subcommand("module", "Mod-8 group-ring quotient computations");
  module_cmd->require_subcommand(1);
  struct {
    int g = 3;
    bool closed = false;
  } mq;
  auto* module_q = module_cmd->add_subcommand("quotient", "Invariant factors of the relation quotient");
  module_q->add_option("--g", mq.g);
  module_q->add_flag("--closed", mq.closed);
  struct {
    int g = 3;
    long long trials = 500;
  } mr;
  auto* module_r = module_cmd->add_subcommand("check-recurrence",
                                              "Three-term recurrence of the spin-weighted expansion");
  module_r->add_option("--g", mr.g);
  module_r->add_option("--trials", mr.trials);

  // ---- beta ---------------------------------------------------------------
  auto* beta = app.add_subcommand("beta", "The sign-weighted indicator map and its image");
  beta->require_subcommand(1);
  struct {
    int g = 3;
    std::string spin, cls;
  } be;
  auto* beta_eval = beta->add_subcommand("eval", "Value table of the generator map");
  beta_eval->add_option("--g", be.g);
  beta_eval->add_option("--spin", be.spin, "2g bits of basis values")->required();
  beta_eval->add_option("--class", be.cls, "2g bits of the class")->required();
  int beta_image_g = 3;
  auto* beta_img = beta->add_subcommand("image", "Invariant factors of the projected image");
  beta_img->add_option("--g", beta_image_g);
  struct {
    int g = 3;
    long long trials = 50;
  } bl;
  auto* beta_l = beta->add_subcommand("check-L", "Relation generators map to zero");
  beta_l->add_option("--g", bl.g);
  beta_l->add_option("--trials", bl.trials);

  // ---- b3 -----------------------------------------------------------------
  auto* b3 = app.add_subcommand("b3", "Degree-3 squarefree polynomial space");
  b3->require_subcommand(1);
  int b3_g = 3;
  auto* b3_dims = b3->add_subcommand("dims", "Dimensions, orders, and the counting identity");
  b3_dims->add_option("--g", b3_g);

  // ---- johnson ------------------------------------------------------------
  auto* johnson = app.add_subcommand("johnson", "Degree-2 expansion invariants of automorphisms");
  johnson->require_subcommand(1);
  struct {
    std::string input;
    long long d = 0;
  } jt;
  auto* johnson_tau = johnson->add_subcommand("tau", "Invariant of a JSON automorphism");
  johnson_tau->add_option("--input", jt.input)->required();
  johnson_tau->add_option("--d", jt.d, "Override the modulus stored in the file");
  struct {
    int g = 3;
    long long d = 3;
    bool closed = false;
  } jr;
  auto* johnson_rank = johnson->add_subcommand("rank", "Closed-form mod-d abelianization rank");
  johnson_rank->add_option("--g", jr.g);
  johnson_rank->add_option("--d", jr.d);
  johnson_rank->add_flag("--closed", jr.closed);
  struct {
    int g = 2;
    long long d = 3;
    std::string dir = "fixtures";
  } jf;
  auto* johnson_fix = johnson->add_subcommand("fixtures", "Write the automorphism fixture files");
  johnson_fix->add_option("--g", jf.g);
  johnson_fix->add_option("--d", jf.d);
  johnson_fix->add_option("--out", jf.dir);

  // ---- reproduce ----------------------------------------------------------
  auto* reproduce = app.add_subcommand("reproduce", "Run the complete verification suite");
  int reproduce_id = 0;
  reproduce->add_option("--id", reproduce_id, "Run a single numbered check");

  for (CLI::App* top : {symp, brown, module_cmd, beta, b3, johnson, reproduce}) {
    top->fallthrough();
    for (auto* sc : top->get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  out.text = text && !json_flag;

  try {
    levelmcg::Rng rng(seed);
    if (symp_lm->parsed()) {
      bool ok = levelmcg::verify_transvection_product(lm.a1, lm.b1, lm.a2, lm.d, lm.g);
      ordered_json j{{"command", "symp verify-transvection-product"},
                     {"a1", lm.a1},
                     {"b1", lm.b1},
                     {"a2", lm.a2},
                     {"d", lm.d},
                     {"g", lm.g},
                     {"pass", ok}};
      out.emit(j);
      exit_code = ok ? kExitPass : kExitCheckFailure;
    } else if (symp_la->parsed()) {
      bool ok = true;
      long long done = 0;
      if (!la.x.empty() || !la.y.empty()) {
        auto x = parse_int_vector(la.x, 2 * la.g);
        auto y = parse_int_vector(la.y, 2 * la.g);
        ok = levelmcg::verify_lantern(x, y);
        done = 1;
      } else {
        std::uniform_int_distribution<int> u(-4, 4);
        while (done < la.trials) {
          levelmcg::IntVec x(2 * la.g), y1(2 * la.g), y2(2 * la.g), y(2 * la.g);
          for (auto& e : x) e = u(rng);
          for (auto& e : y1) e = u(rng);
          for (auto& e : y2) e = u(rng);
          BigInt c1 = levelmcg::sform(x, y2), c2 = levelmcg::sform(x, y1);
          bool nz = false;
          for (int i = 0; i < 2 * la.g; ++i) {
            y[i] = c1 * y1[i] - c2 * y2[i];
            if (y[i] != 0) nz = true;
          }
          if (!nz) continue;
          ++done;
          if (!levelmcg::verify_lantern(x, y)) ok = false;
        }
      }
      ordered_json j{{"command", "symp verify-lantern"}, {"g", la.g}, {"pairs", done}, {"pass", ok}};
      out.emit(j);
      exit_code = ok ? kExitPass : kExitCheckFailure;
    } else if (symp_mem->parsed()) {
      levelmcg::SympElement a = load_matrix(mem.input);
      bool member = mem.igusa ? levelmcg::in_igusa(a, mem.d) : levelmcg::in_level(a, mem.d);
      ordered_json j{{"command", "symp membership"},
                     {"d", mem.d},
                     {"igusa", mem.igusa},
                     {"member", member}};
      out.emit(j);
      exit_code = member ? kExitPass : kExitCheckFailure;
    } else if (!mm.which.empty()) {
      levelmcg::SympElement a = load_matrix(mm.input);
      std::vector<BigInt> v;
      if (mm.which == "m")
        v = levelmcg::m_map(a, mm.d);
      else if (mm.which == "m1")
        v = levelmcg::m1_map(a, mm.d);
      else
        v = levelmcg::m2_map(a, mm.d);
      ordered_json vals;
      json_vec(v, &vals);
      ordered_json j{{"command", "symp " + mm.which}, {"d", mm.d}, {"values", vals}};
      out.emit(j);
    } else if (symp_ab->parsed()) {
      levelmcg::InvariantFactors f = levelmcg::abelianization_formula(ab.g, ab.d);
      ordered_json j{{"command", "symp abelianization"},
                     {"g", ab.g},
                     {"d", ab.d},
                     {"invariant_factors", factor_strings(f)},
                     {"pretty", f.to_string()}};
      out.emit(j);
    } else if (brown->parsed()) {
      levelmcg::Enhancement e = levelmcg::enhancement_from_json(load_json(brown_input));
      levelmcg::GaussianInt gs = levelmcg::gauss_sum(e);
      ordered_json j{{"command", "brown"},
                     {"input", brown_input},
                     {"gauss_sum", {gs.re.str(), gs.im.str()}}};
      try {
        j["brown"] = levelmcg::brown_invariant(e);
      } catch (const levelmcg::DegenerateEnhancement&) {
        j["brown"] = "degenerate";
      }
      out.emit(j);
    } else if (module_q->parsed()) {
      levelmcg::PresentationMatrix pm = levelmcg::quotient_presentation(mq.g, mq.closed);
      levelmcg::InvariantFactors f = levelmcg::quotient_structure(mq.g, mq.closed);
      ordered_json j{{"command", "module quotient"},
                     {"g", mq.g},
                     {"closed", mq.closed},
                     {"generators", pm.generators},
                     {"relations", pm.rows.size()},
                     {"invariant_factors", factor_strings(f)},
                     {"pretty", f.to_string()}};
      out.emit(j);
    } else if (module_r->parsed()) {
      bool ok = true;
      std::uniform_int_distribution<std::uint32_t> ucls(1, (1u << (2 * mr.g)) - 1);
      std::uniform_int_distribution<std::uint32_t> uspin(0, (1u << (2 * mr.g)) - 1);
      for (long long t = 0; t < mr.trials && ok; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);  // recurrence tuple length n+1 in 3..5
        std::vector<levelmcg::Z2Class> xs;
        for (int i = 0; i < n + 1; ++i) xs.push_back(levelmcg::z2_class(mr.g, ucls(rng)));
        levelmcg::SpinForm s{mr.g, uspin(rng)};
        std::vector<levelmcg::Z2Class> head(xs.begin(), xs.end() - 2);
        auto merged = head, with_n = head, with_n1 = head;
        merged.push_back(levelmcg::z2_add(xs[n - 1], xs[n]));
        with_n.push_back(xs[n - 1]);
        with_n1.push_back(xs[n]);
        levelmcg::GroupRingElt lhs = levelmcg::delta_sigma(s, xs);
        levelmcg::GroupRingElt rhs = levelmcg::gr_add(
            levelmcg::gr_add(levelmcg::delta_sigma(s, merged), levelmcg::delta_sigma(s, with_n)),
            levelmcg::gr_add(levelmcg::delta_sigma(s, with_n1),
                             levelmcg::gr_scale(-2, levelmcg::delta_sigma(s, head))));
        if (!(lhs == rhs)) ok = false;
      }
      ordered_json j{{"command", "module check-recurrence"},
                     {"g", mr.g},
                     {"trials", mr.trials},
                     {"pass", ok}};
      out.emit(j);
      exit_code = ok ? kExitPass : kExitCheckFailure;
    } else if (beta_eval->parsed()) {
      levelmcg::SpinForm s{be.g, parse_bits(be.spin, 2 * be.g)};
      levelmcg::Z2Class c = levelmcg::z2_class(be.g, parse_bits(be.cls, 2 * be.g));
      levelmcg::Z8Function f = levelmcg::beta_generator(s, c);
      std::vector<int> vals(f.v.begin(), f.v.end());
      ordered_json j{{"command", "beta eval"},
                     {"g", be.g},
                     {"spin", be.spin},
                     {"class", be.cls},
                     {"values", vals}};
      out.emit(j);
    } else if (beta_img->parsed()) {
      levelmcg::InvariantFactors f = levelmcg::image_of_psi_beta(beta_image_g);
      levelmcg::SpinForm s{beta_image_g, 0};
      BigInt order = levelmcg::beta_image_order(beta_image_g, s);
      ordered_json j{{"command", "beta image"},
                     {"g", beta_image_g},
                     {"projected_invariant_factors", factor_strings(f)},
                     {"pretty", f.to_string()},
                     {"image_order", order.str()}};
      out.emit(j);
    } else if (beta_l->parsed()) {
      bool ok = levelmcg::kernel_contains_L(levelmcg::SpinForm{bl.g, 0}, bl.g, rng,
                                            static_cast<int>(bl.trials));
      std::uniform_int_distribution<std::uint32_t> uspin(0, (1u << (2 * bl.g)) - 1);
      for (int rep = 0; rep < 3 && ok; ++rep)
        ok = levelmcg::kernel_contains_L(levelmcg::SpinForm{bl.g, uspin(rng)}, bl.g, rng,
                                         static_cast<int>(bl.trials));
      ordered_json j{{"command", "beta check-L"}, {"g", bl.g}, {"trials", bl.trials}, {"pass", ok}};
      out.emit(j);
      exit_code = ok ? kExitPass : kExitCheckFailure;
    } else if (b3_dims->parsed()) {
      auto orders = levelmcg::b3_orders(b3_g);
      bool ok = levelmcg::counting_identity(b3_g);
      ordered_json j{{"command", "b3 dims"},
                     {"g", b3_g},
                     {"dim", levelmcg::b3_dim(b3_g)},
                     {"order", orders.first.str()},
                     {"order_mod_constant", orders.second.str()},
                     {"alpha_rank", levelmcg::alpha_map_rank(b3_g)},
                     {"counting_identity", ok}};
      out.emit(j);
      exit_code = ok ? kExitPass : kExitCheckFailure;
    } else if (johnson_tau->parsed()) {
      levelmcg::EndoF e = levelmcg::endo_from_json(load_json(jt.input));
      if (jt.d > 0) e = levelmcg::EndoF(e.g, jt.d, e.images);
      ordered_json j{{"command", "johnson tau"}, {"input", jt.input}, {"g", e.g}, {"d", e.d}};
      j["acts_trivially_mod_d"] = levelmcg::check_ia(e);
      j["boundary_preserved"] = levelmcg::boundary_preserved(e);
      levelmcg::JohnsonValue v = levelmcg::tau(e);
      j["tau"] = v.m;
      j["is_zero"] = v.is_zero();
      if (e.d % 2 == 1) j["in_wedge_cube"] = levelmcg::in_lambda3(v);
      out.emit(j);
    } else if (johnson_rank->parsed()) {
      levelmcg::RankResult r = levelmcg::odd_level_rank_formula(jr.g, jr.d, jr.closed);
      ordered_json j{{"command", "johnson rank"},
                     {"g", jr.g},
                     {"d", jr.d},
                     {"closed", jr.closed},
                     {"exponent", r.exponent},
                     {"small_genus", r.small_genus}};
      out.emit(j);
    } else if (johnson_fix->parsed()) {
      std::vector<std::string> written;
      for (const auto& [name, e] : levelmcg::fixture_registry(jf.g, jf.d)) {
        std::string path = jf.dir + "/" + name + "_g" + std::to_string(jf.g) + "_d" +
                           std::to_string(jf.d) + ".json";
        std::ofstream f(path);
        if (!f) throw levelmcg::Error("cannot write " + path);
        f << levelmcg::endo_to_json(e).dump(2) << "\n";
        written.push_back(path);
      }
      for (int qb : {0, 1}) {
        std::string path = jf.dir + "/surface_f_q" + std::to_string(qb) + ".json";
        std::ofstream f(path);
        if (!f) throw levelmcg::Error("cannot write " + path);
        f << levelmcg::enhancement_to_json(levelmcg::surface_f_enhancement(qb)).dump(2) << "\n";
        written.push_back(path);
      }
      ordered_json j{{"command", "johnson fixtures"}, {"written", written}};
      out.emit(j);
    } else if (reproduce->parsed()) {
      exit_code = run_reproduce(seed, reproduce_id, out);
    }
  } catch (const levelmcg::SizeLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const levelmcg::EvenModulus& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const levelmcg::OddLevelIgusa& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const levelmcg::ZeroClass& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const levelmcg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const ordered_json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
