#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "lamhom/cell_solver.hpp"
#include "lamhom/hetero_solver.hpp"
#include "lamhom/json_io.hpp"
#include "lamhom/laminate_homogenizer.hpp"
#include "lamhom/macro_solver.hpp"
#include "lamhom/material.hpp"
#include "lamhom/sweep.hpp"

namespace py = pybind11;
using namespace lamhom;

namespace {

PlaneAssumption assumption_arg(const std::string& s) { return assumption_from_string(s); }

py::dict effective_dict(const EffectiveProperties& e) {
  py::dict d;
  d["C1111"] = e.C1111;
  d["C2222"] = e.C2222;
  d["C1122"] = e.C1122;
  d["C1212"] = e.C1212;
  d["alpha11"] = e.alpha11;
  d["alpha22"] = e.alpha22;
  d["beta11"] = e.beta11;
  d["beta22"] = e.beta22;
  d["K11"] = e.K11;
  d["K22"] = e.K22;
  d["D11"] = e.D11;
  d["D22"] = e.D22;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lamhom, m) {
  m.doc() = "Effective properties and multiscale validation of periodic "
            "thermodiffusive laminates";

  py::class_<PhaseProperties>(m, "PhaseProperties")
      .def(py::init<>())
      .def_readwrite("C1111", &PhaseProperties::C1111)
      .def_readwrite("C2222", &PhaseProperties::C2222)
      .def_readwrite("C1122", &PhaseProperties::C1122)
      .def_readwrite("C1212", &PhaseProperties::C1212)
      .def_readwrite("alpha11", &PhaseProperties::alpha11)
      .def_readwrite("alpha22", &PhaseProperties::alpha22)
      .def_readwrite("beta11", &PhaseProperties::beta11)
      .def_readwrite("beta22", &PhaseProperties::beta22)
      .def_readwrite("K11", &PhaseProperties::K11)
      .def_readwrite("K22", &PhaseProperties::K22)
      .def_readwrite("D11", &PhaseProperties::D11)
      .def_readwrite("D22", &PhaseProperties::D22)
      .def("validate", &PhaseProperties::validate)
      .def("is_isotropic", &PhaseProperties::is_isotropic, py::arg("rel_tol") = 1e-9);

  m.def(
      "make_isotropic_phase",
      [](double E, double nu, double alpha, double beta, double K, double D,
         const std::string& assumption) {
        return make_isotropic_phase(E, nu, alpha, beta, K, D, assumption_arg(assumption));
      },
      py::arg("E"), py::arg("nu"), py::arg("alpha"), py::arg("beta"), py::arg("K"),
      py::arg("D"), py::arg("assumption") = "plane-stress");

  py::class_<Laminate>(m, "Laminate")
      .def(py::init([](const std::vector<std::pair<PhaseProperties, double>>& layers,
                       double epsilon) {
             std::vector<Layer> ls;
             ls.reserve(layers.size());
             for (const auto& [phase, fraction] : layers)
               ls.push_back(Layer{phase, fraction});
             return Laminate(std::move(ls), epsilon);
           }),
           py::arg("layers"), py::arg("epsilon"))
      .def_property_readonly("epsilon", &Laminate::epsilon)
      .def_property_readonly("layer_count", &Laminate::layer_count)
      .def_property_readonly("zeta", &Laminate::zeta);

  m.def("laminate_from_json", [](const std::string& text) {
    return laminate_from_json(nlohmann::json::parse(text));
  });

  m.def("effective_constants", [](const Laminate& lam, const std::string& method) {
    if (method == "analytic") return effective_dict(effective_constants_biphase(lam));
    if (method == "isotropic") return effective_dict(effective_constants_isotropic(lam));
    if (method == "cell-solver") {
      const auto sols = solve_cell_problems(lam);
      return effective_dict(effective_from_profiles(lam, sols).effective);
    }
    throw std::invalid_argument("method must be analytic, isotropic or cell-solver");
  }, py::arg("laminate"), py::arg("method") = "analytic");

  m.def("normalized_constants", [](const Laminate& lam) {
    const NormalizedProperties n =
        normalize_constants(effective_constants_biphase(lam), lam);
    py::dict d;
    auto put = [&](const char* k, const std::optional<double>& v) {
      d[k] = v ? py::cast(*v) : py::none();
    };
    put("C1111", n.C1111);
    put("C2222", n.C2222);
    put("C1122", n.C1122);
    put("C1212", n.C1212);
    put("alpha11", n.alpha11);
    put("alpha22", n.alpha22);
    put("beta11", n.beta11);
    put("beta22", n.beta22);
    put("K11", n.K11);
    put("K22", n.K22);
    put("D11", n.D11);
    put("D22", n.D22);
    return d;
  });

  m.def("oracle_discrepancy", [](const Laminate& lam) {
    const auto sols = solve_cell_problems(lam);
    return max_relative_discrepancy(effective_constants_biphase(lam),
                                    effective_from_profiles(lam, sols).effective);
  });

  py::class_<HarmonicLoad>(m, "HarmonicLoad")
      .def(py::init<>())
      .def_readwrite("direction", &HarmonicLoad::direction)
      .def_readwrite("B", &HarmonicLoad::B)
      .def_readwrite("R", &HarmonicLoad::R)
      .def_readwrite("S", &HarmonicLoad::S)
      .def_readwrite("m", &HarmonicLoad::m)
      .def_readwrite("n", &HarmonicLoad::n)
      .def_readwrite("p", &HarmonicLoad::p)
      .def_readwrite("L", &HarmonicLoad::L);

  m.def("macro_fields", [](const Laminate& lam, const HarmonicLoad& load, int samples) {
    const MacroSolution sol = solve_homogenized(effective_constants_biphase(lam), load);
    std::vector<double> x(samples), U(samples), T(samples), Y(samples);
    for (int i = 0; i < samples; ++i) {
      x[i] = load.L * i / samples;
      U[i] = sol.U(x[i]);
      T[i] = sol.Theta(x[i]);
      Y[i] = sol.Upsilon(x[i]);
    }
    py::dict d;
    d["x"] = x;
    d["U"] = U;
    d["Theta"] = T;
    d["Upsilon"] = Y;
    d["residual"] = field_equation_residual(sol);
    return d;
  }, py::arg("laminate"), py::arg("load"), py::arg("samples") = 256);

  m.def("run_comparison", [](const Laminate& lam, const HarmonicLoad& load_in, int cells,
                             int nodes_per_layer) {
    HarmonicLoad load = load_in;
    load.L = cells * lam.epsilon();
    const EffectiveProperties eff = effective_constants_biphase(lam);
    const MacroSolution macro = solve_homogenized(eff, load);
    const MicroGrid grid(lam, cells, nodes_per_layer);
    const MicroSolution micro = solve_heterogeneous(lam, load, grid);
    const ComparisonReport rep = compare(macro, micro, lam);
    py::dict d;
    auto put = [&](const char* k, const FieldError& e) {
      d[k] = e.defined ? py::cast(e.l2) : py::none();
    };
    put("U_l2", rep.U);
    put("Theta_l2", rep.Theta);
    put("Upsilon_l2", rep.Upsilon);
    d["cells"] = rep.cells;
    d["nodes_per_layer"] = rep.nodes_per_layer;
    return d;
  }, py::arg("laminate"), py::arg("load"), py::arg("cells") = 10,
     py::arg("nodes_per_layer") = 16);

  m.def("dimensionless_ratios", [](const Laminate& lam) {
    const DimensionlessRatios r = dimensionless_ratios(lam);
    py::dict d;
    auto put = [&](const char* k, const std::optional<double>& v) {
      d[k] = v ? py::cast(*v) : py::none();
    };
    put("rho_C", r.rho_C);
    put("rho_alpha", r.rho_alpha);
    put("rho_beta", r.rho_beta);
    put("rho_K", r.rho_K);
    put("rho_D", r.rho_D);
    d["zeta"] = r.zeta;
    d["nu_a"] = r.nu_a;
    d["nu_b"] = r.nu_b;
    return d;
  });
}
