#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsp/appendix.hpp"
#include "gsp/ce_oracle.hpp"
#include "gsp/endoscopy.hpp"
#include "gsp/kostant.hpp"
#include "gsp/satake.hpp"
#include "gsp/verify.hpp"

namespace py = pybind11;
using namespace gsp;

namespace {

// rationals cross the boundary as strings such as "-3/2"
std::vector<Q> parse_all(const std::vector<std::string>& v) {
  std::vector<Q> out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

Weight weight_of(const std::string& c, const std::vector<std::string>& e) {
  return Weight::from_coeffs(parse_rational(c), parse_all(e));
}

py::dict weight_dict(const Weight& w) {
  py::dict d;
  d["c"] = to_string(w.coeff_c());
  std::vector<std::string> e;
  for (int i = 1; i <= w.rank(); ++i) e.push_back(to_string(w.coeff(i)));
  d["e"] = e;
  return d;
}

py::tuple sides(const Sides& s) { return py::make_tuple(to_string(s.lhs), to_string(s.rhs)); }

}  // namespace

PYBIND11_MODULE(_gspcore, m) {
  m.doc() = "exact checks for GSp_2n";

  m.def("elliptic_data", [](int n) {
    py::list out;
    for (const auto& d : elliptic_data(n)) {
      py::dict x;
      x["label"] = d.label();
      x["n1"] = d.n1;
      x["n2"] = d.n2;
      x["tau"] = tamagawa(d);
      x["iota"] = to_string(iota(n, d));
      out.append(x);
    }
    return out;
  });
  m.def("cuspidal_levis", [](int n) {
    py::list out;
    for (const auto& M : cuspidal_levis(n)) {
      py::dict x;
      x["label"] = M.label();
      x["r"] = M.r;
      x["t"] = M.t;
      x["m"] = M.m;
      x["n_M_G"] = n_M_G(M);
      out.append(x);
    }
    return out;
  });
  m.def("d_G", &d_G);

  m.def("satake_phi", [](int n, int a) { return satake_phi(n, a).monomials(); });
  m.def("satake_transfer", [](int n, int a, const std::vector<int>& K) { return satake_transfer(n, a, K).monomials(); });

  m.def(
      "kostant",
      [](int n, const std::vector<int>& S, const std::string& c, const std::vector<std::string>& e,
         const std::string& direction) {
        ParabolicIndex P(n, S);
        Weight lam = weight_of(c, e);
        if (direction != "above" && direction != "below") throw std::invalid_argument("direction is above or below");
        auto pieces = truncate(kostant_cohomology(P, lam), central_character(lam), P,
                               direction == "above" ? Direction::above : Direction::below);
        py::list out;
        for (const auto& p : pieces) {
          py::dict x;
          x["degree"] = p.degree;
          x["weight"] = weight_dict(p.kostant_weight);
          x["dimension"] = p.dimension;
          x["kept"] = p.kept_by_truncation;
          out.append(x);
        }
        return out;
      },
      py::arg("n"), py::arg("S"), py::arg("c"), py::arg("e"), py::arg("direction") = "above");

  m.def("kostant_matches_oracle", [](int n, const std::vector<int>& S, const std::string& c,
                                     const std::vector<std::string>& e) {
    ParabolicIndex P(n, S);
    Weight lam = weight_of(c, e);
    auto o = chevalley_eilenberg_oracle(P, lam);
    auto k = graded_weights(kostant_cohomology(P, lam), static_cast<int>(o.size()) - 1);
    std::vector<long long> dims;
    bool same = true;
    for (size_t i = 0; i < o.size(); ++i) {
      same = same && o[i].weights == k[i];
      dims.push_back(o[i].dim());
    }
    return py::make_tuple(same, dims);
  });

  m.def("weyl_character", [](const std::string& c, const std::vector<std::string>& e, const std::vector<std::string>& g) {
    return to_string(weyl_character_trace(weight_of(c, e), parse_all(g)));
  });

  m.def("check_cor_A4", [](int n, int mm, const std::vector<std::string>& lam, unsigned Iplus) {
    return sides(check_cor_A4(n, mm, parse_all(lam), Iplus));
  });
  m.def("prop331_core", [](int r, int t, const std::string& c, const std::vector<std::string>& e, unsigned Iplus) {
    return sides(verify_prop331_core(r, t, parse_rational(c), parse_all(e), Iplus));
  });
  m.def("cor_A2", [](const std::vector<std::string>& lam) {
    auto v = parse_all(lam);
    return py::make_tuple(to_string(cor_A2_sum(v)), to_string(cor_A2_closed_form(v)));
  });

  m.def(
      "verify",
      [](const std::string& suite, int n_max, long long samples, std::uint64_t seed, bool with_time) {
        VerifyConfig cfg{suite, n_max, samples, seed};
        return report_json(run_verify(cfg), with_time);
      },
      py::arg("suite") = "all", py::arg("n_max") = 4, py::arg("samples") = 100, py::arg("seed") = 1,
      py::arg("with_time") = true);
}
