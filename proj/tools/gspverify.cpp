#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsp/ce_oracle.hpp"
#include "gsp/endoscopy.hpp"
#include "gsp/kostant.hpp"
#include "gsp/satake.hpp"
#include "gsp/verify.hpp"

using namespace gsp;
using json = nlohmann::ordered_json;

namespace {

bool use_color(bool to_file) {
  const char* nc = std::getenv("NO_COLOR");
  if (nc && *nc) return false;
  return !to_file && isatty(STDOUT_FILENO);
}

Q json_rational(const json& v) {
  if (v.is_number_integer()) return make_q(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw std::invalid_argument("rationals are integers or strings like \"-3/2\"");
}

// {"c": q, "e": [q, ...]} in the basis (c, e_1..e_n)
Weight json_weight(const json& v, int n) {
  if (!v.is_object()) throw std::invalid_argument("weight must be an object {\"c\":..,\"e\":[..]}");
  Q c = v.contains("c") ? json_rational(v["c"]) : Q(0);
  std::vector<Q> e;
  if (v.contains("e"))
    for (const auto& x : v["e"]) e.push_back(json_rational(x));
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("weight needs n e-coefficients");
  Weight w = Weight::from_coeffs(c, e);
  if (!(w.coeff_c() == c)) throw std::invalid_argument("weight coefficients must lie in (1/2)Z");
  for (int i = 1; i <= n; ++i)
    if (!(w.coeff(i) == e[i - 1])) throw std::invalid_argument("weight coefficients must lie in (1/2)Z");
  return w;
}

json weight_json(const Weight& w) {
  json e = json::array();
  for (int i = 1; i <= w.rank(); ++i) e.push_back(to_string(w.coeff(i)));
  return {{"c", to_string(w.coeff_c())}, {"e", e}};
}

std::string weight_text(const Weight& w) {
  std::string s;
  auto term = [&](const Q& q, const std::string& name) {
    if (q == 0) return;
    std::string mag = abs(q) == 1 ? "" : to_string(abs(q));
    if (s.empty()) s = (q < 0 ? "-" : "") + mag + name;
    else s += (q < 0 ? " - " : " + ") + mag + name;
  };
  term(w.coeff_c(), "c");
  for (int i = 1; i <= w.rank(); ++i) term(w.coeff(i), "e" + std::to_string(i));
  return s.empty() ? "0" : s;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int cmd_enumerate(int n) {
  json j;
  j["schema"] = "v1";
  j["n"] = n;
  json data = json::array();
  for (const auto& d : elliptic_data(n)) {
    json x{{"label", d.label()}, {"n1", d.n1}, {"n2", d.n2}, {"tau", tamagawa(d)},
           {"lambda_order", d.lambda_order()}, {"iota", to_string(iota(n, d))}};
    if (d.n2 % 2 == 0) x["k"] = k_constant(d.n1, d.n2);
    data.push_back(x);
  }
  j["endoscopic_data"] = data;
  json levis = json::array();
  for (const auto& M : cuspidal_levis(n)) {
    json triples = json::array();
    for (const auto& g : g_triples(M)) {
      json A = g.A, B = g.B;
      triples.push_back({{"M_prime", g.M_prime_label()}, {"H", g.H().label()}, {"A", A}, {"B", B},
                         {"m1", g.m1}, {"m2", g.m2}, {"n_Mp_H", g.n_Mp_H()}, {"cuspidal", g.cuspidal()}});
    }
    levis.push_back({{"label", M.label()}, {"r", M.r}, {"t", M.t}, {"m", M.m}, {"n_M_G", n_M_G(M)},
                     {"k", k_levi(M)}, {"tau", tau_levi(M)}, {"triples", triples}});
  }
  j["cuspidal_levis"] = levis;
  j["d_G"] = d_G(n);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_satake(int n, int a, const std::string& K, const std::string& format) {
  auto k = parse_list(K);
  auto f = satake_transfer(n, a, k);
  if (format == "table") {
    for (const auto& m : f.monomials()) std::cout << m << "\n";
    return 0;
  }
  json j;
  j["schema"] = "v1";
  j["n"] = n;
  j["a"] = a;
  j["K"] = k;
  j["monomials"] = f.monomials();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_kostant(const std::string& input, const std::string& format, bool oracle) {
  json in;
  if (input.empty() || input == "-") in = json::parse(std::cin);
  else if (input.front() == '{') in = json::parse(input);
  else {
    std::ifstream f(input);
    if (!f) throw std::invalid_argument("cannot read " + input);
    in = json::parse(f);
  }
  int n = in.at("n").get<int>();
  ParabolicIndex S(n, in.value("S", std::vector<int>{}));
  Weight lam = json_weight(in.at("lambda"), n);
  Weight lam0 = in.contains("lambda0") ? json_weight(in["lambda0"], n) : central_character(lam);
  std::string dir = in.value("direction", std::string("above"));
  if (dir != "above" && dir != "below") throw std::invalid_argument("direction is above or below");
  auto pieces = truncate(kostant_cohomology(S, lam), lam0, S, dir == "above" ? Direction::above : Direction::below);

  std::optional<bool> agrees;
  if (oracle) {
    auto o = chevalley_eilenberg_oracle(S, lam);
    auto k = graded_weights(pieces, static_cast<int>(o.size()) - 1);
    agrees = true;
    for (size_t i = 0; i < o.size(); ++i) agrees = *agrees && o[i].weights == k[i];
  }

  if (format == "table") {
    std::cout << "degree  dim  kept  weight\n";
    for (const auto& p : pieces)
      std::cout << std::setw(6) << p.degree << std::setw(5) << p.dimension << "  " << (p.kept_by_truncation ? "yes " : "no  ")
                << "  " << weight_text(p.kostant_weight) << "\n";
    if (agrees) std::cout << "oracle: " << (*agrees ? "agrees" : "DISAGREES") << "\n";
    return agrees.value_or(true) ? 0 : 1;
  }
  json j;
  j["schema"] = "v1";
  j["n"] = n;
  j["S"] = S.S;
  j["lambda"] = weight_json(lam);
  j["lambda0"] = weight_json(lam0);
  j["direction"] = dir;
  json arr = json::array();
  for (const auto& p : pieces)
    arr.push_back({{"degree", p.degree}, {"omega", p.omega.str()}, {"kostant_weight", weight_json(p.kostant_weight)},
                   {"weight_text", weight_text(p.kostant_weight)}, {"dimension", p.dimension},
                   {"kept_by_truncation", p.kept_by_truncation}});
  j["pieces"] = arr;
  if (agrees) j["oracle_agrees"] = *agrees;
  std::cout << j.dump(2) << "\n";
  return agrees.value_or(true) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for GSp_2n: endoscopy, Satake transforms, Kostant cohomology, partition identities"};
  app.require_subcommand(1);

  int en = 3;
  auto* enumerate = app.add_subcommand("enumerate", "elliptic endoscopic data and cuspidal Levis as JSON");
  enumerate->add_option("--n", en, "rank")->required()->check(CLI::Range(1, 8));

  int sn = 2, sa = 1;
  std::string sK, sformat = "json";
  auto* satake = app.add_subcommand("satake", "Satake transform of the transfer as a monomial list");
  satake->add_option("--n", sn, "rank")->required()->check(CLI::Range(0, 8));
  satake->add_option("--a", sa, "degree a")->required()->check(CLI::Range(1, 16));
  satake->add_option("--K", sK, "comma separated subset K of {1..n}");
  satake->add_option("--format", sformat)->check(CLI::IsMember({"json", "table"}));

  std::string kinput, kformat = "json";
  bool koracle = false;
  auto* kostant = app.add_subcommand("kostant", "Kostant pieces with truncation, input as JSON");
  kostant->add_option("--input", kinput, "JSON text, a file name, or - for stdin (the default)");
  kostant->add_option("--format", kformat)->check(CLI::IsMember({"json", "table"}));
  kostant->add_flag("--oracle", koracle, "compare with the Chevalley-Eilenberg oracle (n <= 2)");

  VerifyConfig cfg;
  std::string vformat = "json", vout;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember({"appendix", "endoscopy", "satake", "kostant", "all"}));
  verify->add_option("--n-max", cfg.n_max)->check(CLI::Range(1, 7));
  verify->add_option("--samples", cfg.samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--format", vformat)->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--out", vout, "write the report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(en);
    if (*satake) {
      if (sK.find_first_not_of("0123456789,") != std::string::npos) throw std::invalid_argument("--K is a comma separated list");
      return cmd_satake(sn, sa, sK, sformat);
    }
    if (*kostant) return cmd_kostant(kinput, kformat, koracle);
    if (*verify) {
      auto r = run_verify(cfg);
      std::string text = vformat == "json" ? report_json(r) : report_table(r, use_color(!vout.empty()));
      int rc = emit(text, vout);
      if (rc) return rc;
      return r.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
