#include "fpspectral/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fpspectral/errors.hpp"

namespace fpspectral {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw BadParameter("config: cannot parse '" + value + "' as a number for key '" + key + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw BadParameter("config: cannot parse '" + value + "' as an integer for key '" + key + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "0" || value == "false") return false;
  if (value == "1" || value == "true") return true;
  throw BadParameter("config: cannot parse '" + value + "' as a flag for key '" + key + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

RunConfig::Case parse_case(const std::string& name) {
  if (name == "A" || name == "a") return RunConfig::Case::A;
  if (name == "B" || name == "b") return RunConfig::Case::B;
  if (name == "C" || name == "c") return RunConfig::Case::C;
  if (name == "custom") return RunConfig::Case::custom;
  if (name == "quadratic") return RunConfig::Case::quadratic;
  throw BadParameter("config: unknown case '" + name + "' (expected A, B, C, custom or quadratic)");
}

std::string case_to_string(RunConfig::Case c) {
  switch (c) {
    case RunConfig::Case::A: return "A";
    case RunConfig::Case::B: return "B";
    case RunConfig::Case::C: return "C";
    case RunConfig::Case::custom: return "custom";
    case RunConfig::Case::quadratic: return "quadratic";
  }
  return "?";
}

FourierRule parse_fourier_rule(const std::string& name) {
  if (name == "rectangle" || name == "composite-rectangle") return FourierRule::composite_rectangle;
  if (name == "gauss" || name == "per-element-gauss") return FourierRule::per_element_gauss;
  throw BadParameter("config: unknown fourier_rule '" + name + "' (expected rectangle or gauss)");
}

EigSolver parse_solver(const std::string& name) {
  if (name == "auto") return EigSolver::automatic;
  if (name == "dense") return EigSolver::dense;
  if (name == "lanczos") return EigSolver::lanczos;
  throw BadParameter("config: unknown solver '" + name + "' (expected auto, dense or lanczos)");
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream is(path);
  if (!is) throw IoFailure("config: cannot open " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw BadParameter("config: line " + std::to_string(line_no) + " is not 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "case") base.case_name = parse_case(value);
    else if (key == "gamma") base.gamma = parse_double(key, value);
    else if (key == "theta") base.theta = parse_double(key, value);
    else if (key == "delta") base.delta = parse_double(key, value);
    else if (key == "sigma") base.sigma = parse_int(key, value);
    else if (key == "vartheta") base.vartheta = parse_double(key, value);
    else if (key == "R") base.R = parse_double(key, value);
    else if (key == "n_elements") base.n_elements = parse_int(key, value);
    else if (key == "degree") base.degree = parse_int(key, value);
    else if (key == "quad_degree") base.quad_degree = parse_int(key, value);
    else if (key == "N_max") base.N_max = parse_int(key, value);
    else if (key == "rel_tol") base.rel_tol = parse_double(key, value);
    else if (key == "tol_zero") base.tol_zero = parse_double(key, value);
    else if (key == "s_tol") base.s_tol = parse_double(key, value);
    else if (key == "solver_tol") base.solver_tol = parse_double(key, value);
    else if (key == "oracle_tol") base.oracle_tol = parse_double(key, value);
    else if (key == "fourier_rule") base.fourier_rule = parse_fourier_rule(value);
    else if (key == "solver") base.solver = parse_solver(value);
    else if (key == "quad_points") base.quad_points = parse_int(key, value);
    else if (key == "quad_panels") base.quad_panels = parse_int(key, value);
    else if (key == "sweep_param") base.sweep_param = value;
    else if (key == "sweep_values") {
      base.sweep_values.clear();
      for (const auto& item : split_list(value)) base.sweep_values.push_back(parse_double(key, item));
    } else if (key == "output_dir") base.output_dir = value;
    else if (key == "formats") base.formats = split_list(value);
    else if (key == "dump_eigenfunctions") base.dump_eigenfunctions = parse_bool(key, value);
    else if (key == "dump_operators") base.dump_operators = parse_bool(key, value);
    else throw BadParameter("config: unknown key '" + key + "' at line " + std::to_string(line_no));
  }
  return base;
}

void validate_config(const RunConfig& config) {
  for (const auto& f : config.formats) {
    if (f != "csv" && f != "svg") throw BadParameter("config: unknown output format '" + f + "'");
  }
  if (config.formats.empty()) throw BadParameter("config: need at least one output format");
  if (!config.sweep_param.empty()) {
    if (config.sweep_param != "gamma" && config.sweep_param != "delta" && config.sweep_param != "theta") {
      throw BadParameter("config: sweep_param must be gamma, delta or theta");
    }
    if (config.sweep_values.empty()) throw BadParameter("config: sweep_values must be nonempty");
    for (double v : config.sweep_values) {
      if (!std::isfinite(v)) throw BadParameter("config: sweep values must be finite");
    }
    if (config.case_name == RunConfig::Case::quadratic) {
      throw BadParameter("config: sweeps are not defined for the quadratic reference");
    }
    if (config.sweep_param == "delta" &&
        (config.case_name == RunConfig::Case::A || config.case_name == RunConfig::Case::B)) {
      throw BadParameter("config: cases A and B have no tilt; sweep delta under case C or custom");
    }
  }
  if (config.N_max < 3) throw BadParameter("config: N_max must be at least 3");
  if (!(config.rel_tol >= 0.0)) throw BadParameter("config: rel_tol must be nonnegative");
  if (!(config.tol_zero > 0.0) || !(config.s_tol > 0.0) || !(config.solver_tol > 0.0)) {
    throw BadParameter("config: tolerances must be positive");
  }
  if (config.case_name == RunConfig::Case::C && config.sweep_param != "delta" && !(config.delta > 0.0)) {
    throw BadParameter("config: case C needs delta > 0");
  }
  if (config.sigma != 0 && config.sigma != 1) throw BadParameter("config: sigma must be 0 or 1");
}

PotentialSpec potential_from_config(const RunConfig& config, std::optional<double> sweep_value) {
  double gamma = config.gamma, theta = config.theta, delta = config.delta;
  if (sweep_value) {
    if (config.sweep_param == "gamma") gamma = *sweep_value;
    else if (config.sweep_param == "delta") delta = *sweep_value;
    else if (config.sweep_param == "theta") theta = *sweep_value;
  }
  switch (config.case_name) {
    case RunConfig::Case::A:
      return make_potential(gamma, theta, 0.0, false, config.R, config.quad_points, config.quad_panels);
    case RunConfig::Case::B:
      return make_potential(gamma, theta, 0.0, true, config.R, config.quad_points, config.quad_panels);
    case RunConfig::Case::C:
      if (!(delta > 0.0)) throw BadParameter("case C needs delta > 0");
      return make_potential(gamma, theta, delta, false, config.R, config.quad_points, config.quad_panels);
    case RunConfig::Case::custom:
      return make_potential(gamma, theta, delta, config.sigma != 0, config.R, config.quad_points,
                            config.quad_panels);
    case RunConfig::Case::quadratic:
      return make_quadratic_reference(config.vartheta, config.R, config.quad_points, config.quad_panels);
  }
  throw BadParameter("config: invalid case");
}

}  // namespace fpspectral
