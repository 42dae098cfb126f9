#include "lamhom/json_io.hpp"

#include <stdexcept>

namespace lamhom {

using nlohmann::json;

namespace {

double number_at(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key))
    throw std::invalid_argument(path + ": missing \"" + key + "\"");
  if (!j.at(key).is_number())
    throw std::invalid_argument(path + "." + key + ": expected a number");
  return j.at(key).get<double>();
}

int int_at(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key))
    throw std::invalid_argument(path + ": missing \"" + key + "\"");
  if (!j.at(key).is_number_integer())
    throw std::invalid_argument(path + "." + key + ": expected an integer");
  return j.at(key).get<int>();
}

}  // namespace

PlaneAssumption assumption_from_string(const std::string& s) {
  if (s == "plane-stress") return PlaneAssumption::PlaneStress;
  if (s == "plane-strain") return PlaneAssumption::PlaneStrain;
  throw std::invalid_argument("assumption must be \"plane-stress\" or \"plane-strain\"");
}

Laminate laminate_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("laminate: expected an object");
  const PlaneAssumption assumption =
      assumption_from_string(j.value("assumption", std::string("plane-stress")));
  const double epsilon = number_at(j, "epsilon", "laminate");
  if (!j.contains("layers") || !j.at("layers").is_array() || j.at("layers").empty())
    throw std::invalid_argument("laminate.layers: expected a non-empty array");

  std::vector<Layer> layers;
  std::size_t idx = 0;
  for (const json& lj : j.at("layers")) {
    const std::string path = "laminate.layers[" + std::to_string(idx) + "]";
    Layer layer;
    layer.thickness_fraction = number_at(lj, "fraction", path);
    if (!lj.contains("phase"))
      throw std::invalid_argument(path + ": missing \"phase\"");
    const json& pj = lj.at("phase");
    if (pj.contains("isotropic")) {
      const json& ij = pj.at("isotropic");
      layer.phase = make_isotropic_phase(
          number_at(ij, "E", path), number_at(ij, "nu", path),
          number_at(ij, "alpha", path), number_at(ij, "beta", path),
          number_at(ij, "K", path), number_at(ij, "D", path), assumption);
    } else if (pj.contains("orthotropic")) {
      const json& oj = pj.at("orthotropic");
      PhaseProperties p;
      p.C1111 = number_at(oj, "C1111", path);
      p.C2222 = number_at(oj, "C2222", path);
      p.C1122 = number_at(oj, "C1122", path);
      p.C1212 = number_at(oj, "C1212", path);
      p.alpha11 = number_at(oj, "alpha11", path);
      p.alpha22 = number_at(oj, "alpha22", path);
      p.beta11 = number_at(oj, "beta11", path);
      p.beta22 = number_at(oj, "beta22", path);
      p.K11 = number_at(oj, "K11", path);
      p.K22 = number_at(oj, "K22", path);
      p.D11 = number_at(oj, "D11", path);
      p.D22 = number_at(oj, "D22", path);
      p.validate();
      layer.phase = p;
    } else {
      throw std::invalid_argument(path + ".phase: expected \"isotropic\" or \"orthotropic\"");
    }
    layers.push_back(layer);
    ++idx;
  }
  return Laminate(std::move(layers), epsilon);
}

HarmonicLoad load_from_json(const json& j, double L) {
  HarmonicLoad load;
  load.direction = int_at(j, "direction", "compare.load");
  load.B = number_at(j, "B", "compare.load");
  load.R = number_at(j, "R", "compare.load");
  load.S = number_at(j, "S", "compare.load");
  load.m = j.value("m", 1);
  load.n = j.value("n", 1);
  load.p = j.value("p", 1);
  load.L = L;
  load.validate();
  return load;
}

SweepConfig sweep_config_from_json(const json& j) {
  SweepConfig cfg;
  if (!j.contains("parameter") || !j.at("parameter").is_string())
    throw std::invalid_argument("sweep.parameter: expected a string");
  cfg.parameter = sweep_parameter_from_string(j.at("parameter").get<std::string>());

  if (!j.contains("grid"))
    throw std::invalid_argument("sweep: missing \"grid\"");
  const json& gj = j.at("grid");
  cfg.grid.min = number_at(gj, "min", "sweep.grid");
  cfg.grid.max = number_at(gj, "max", "sweep.grid");
  cfg.grid.count = int_at(gj, "count", "sweep.grid");
  cfg.grid.log_scale = gj.value("scale", std::string("log")) != "linear";

  if (j.contains("fixed")) {
    const json& fj = j.at("fixed");
    cfg.fixed.rho_C = fj.value("rho_C", 1.0);
    cfg.fixed.rho_alpha = fj.value("rho_alpha", 1.0);
    cfg.fixed.rho_beta = fj.value("rho_beta", 1.0);
    cfg.fixed.rho_K = fj.value("rho_K", 1.0);
    cfg.fixed.rho_D = fj.value("rho_D", 1.0);
    cfg.fixed.zeta = fj.value("zeta", 1.0);
    cfg.fixed.nu = fj.value("nu", 0.3);
  }
  cfg.fixed.assumption =
      assumption_from_string(j.value("assumption", std::string("plane-stress")));
  cfg.fixed.epsilon = j.value("epsilon", 0.1);
  return cfg;
}

json to_json(const EffectiveProperties& e) {
  return json{{"C1111", e.C1111}, {"C2222", e.C2222}, {"C1122", e.C1122},
              {"C1212", e.C1212}, {"alpha11", e.alpha11}, {"alpha22", e.alpha22},
              {"beta11", e.beta11}, {"beta22", e.beta22}, {"K11", e.K11},
              {"K22", e.K22}, {"D11", e.D11}, {"D22", e.D22}};
}

namespace {

json opt(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const NormalizedProperties& n) {
  return json{{"C1111", opt(n.C1111)}, {"C2222", opt(n.C2222)},
              {"C1122", opt(n.C1122)}, {"C1212", opt(n.C1212)},
              {"alpha11", opt(n.alpha11)}, {"alpha22", opt(n.alpha22)},
              {"beta11", opt(n.beta11)}, {"beta22", opt(n.beta22)},
              {"K11", opt(n.K11)}, {"K22", opt(n.K22)},
              {"D11", opt(n.D11)}, {"D22", opt(n.D22)}};
}

namespace {

json to_json(const FieldError& e) {
  if (!e.defined) return json{{"defined", false}};
  return json{{"defined", true}, {"l2", e.l2}, {"linf", e.linf}};
}

}  // namespace

json to_json(const ComparisonReport& r) {
  return json{{"U", to_json(r.U)},
              {"Theta", to_json(r.Theta)},
              {"Upsilon", to_json(r.Upsilon)},
              {"cells", r.cells},
              {"nodes_per_layer", r.nodes_per_layer},
              {"L_over_epsilon", r.L_over_epsilon},
              {"averaging", r.averaging},
              {"hetero_runtime_seconds", r.hetero_runtime_seconds},
              {"macro_runtime_seconds", r.macro_runtime_seconds}};
}

json to_json(const DimensionlessRatios& r) {
  return json{{"rho_C", opt(r.rho_C)},   {"rho_alpha", opt(r.rho_alpha)},
              {"rho_beta", opt(r.rho_beta)}, {"rho_K", opt(r.rho_K)},
              {"rho_D", opt(r.rho_D)},   {"zeta", r.zeta},
              {"nu_a", r.nu_a},          {"nu_b", r.nu_b}};
}

}  // namespace lamhom
