// Copyright 2026 The superfock Authors
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "superfock/bogoliubov.hpp"

namespace superfock::cli {

namespace {

constexpr int kMaxCliModes = 10;
constexpr int kCostlyModes = 7;

const char* kNotationNote =
    "notation: the duality-map sign tau(K, N) is read with N equal to the full kernel index set "
    "M = {1, ..., n}";

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw InputError("write failed for " + path);
}

json vector_list(const Vector& v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

struct Options {
  std::vector<std::string> inputs;
  std::string out_path;
  Real tol = 1e-9;
  int modes = 3;
  std::optional<int> generators;
  std::uint64_t seed = 1;
  bool strict_notation = false;
  std::string format = "json";
};

OrthogonalTransform load_valid(const std::string& path, Real tol, json& report) {
  const TransformFile f = read_transform(path);
  const ValidationReport v = validate(f.u, f.v, tol);
  if (!v.ok) {
    report["residuals"]["orthogonality"] = v.residuals.max();
    throw ValidationError(path + ": (U, V) violates the orthogonality relations");
  }
  return OrthogonalTransform::unchecked(f.u, f.v);
}

void warn_cost(int d, json& report) {
  if (d >= kCostlyModes)
    report["warnings"].push_back("d = " + std::to_string(d) + ": exponential cost, 2^d x 2^d dense operators");
  if (d > kMaxCliModes) throw DimensionError("d = " + std::to_string(d) + " exceeds the CLI limit of 10 modes");
}

json residual_entry(const OrthogonalityResiduals& r) {
  return {{"uu_vv", r.uu_vv}, {"uu_vv_t", r.uu_vv_t}, {"uv_vu", r.uv_vu}, {"uv_vu_t", r.uv_vu_t}};
}

int cmd_check(const Options& o, json& report) {
  if (o.inputs.size() != 1) throw InputError("check expects one --input");
  const TransformFile f = read_transform(o.inputs[0]);
  const ValidationReport v = validate(f.u, f.v, o.tol);
  report["residuals"] = residual_entry(v.residuals);
  if (!v.ok) return kValidation;
  const OrthogonalTransform r = OrthogonalTransform::unchecked(f.u, f.v);
  const int d = r.dim();
  warn_cost(d, report);
  report["outputs"]["d"] = d;
  report["outputs"]["kernel_dim_u"] = kernel_dim(r.U());
  report["outputs"]["kernel_dim_u_adjoint"] = kernel_dim(r.U().adjoint());
  report["outputs"]["component"] = component(r) == Component::identity ? "identity" : "other";
  if (f.has_t) {
    require_dims(f.t.rows() == fock_dim(d) && f.t.cols() == fock_dim(d), "stored T has the wrong size");
    report["residuals"]["unitarity"] = unitarity_residual(f.t);
    report["residuals"]["intertwining"] = intertwining_residual(r, f.t);
    if (report["residuals"]["unitarity"].get<Real>() > o.tol || report["residuals"]["intertwining"].get<Real>() > o.tol)
      return kValidation;
  }
  return kOk;
}

int cmd_implement(const Options& o, json& report) {
  if (o.inputs.size() != 1) throw InputError("implement expects one --input");
  const OrthogonalTransform r = load_valid(o.inputs[0], o.tol, report);
  warn_cost(r.dim(), report);
  const Implementer imp = implement_general(r);
  for (const auto& w : imp.warnings) report["warnings"].push_back(w);
  const Real unit = unitarity_residual(imp.t), inter = intertwining_residual(r, imp.t);
  report["residuals"] = {{"unitarity", unit}, {"intertwining", inter}};
  report["outputs"]["d"] = r.dim();
  report["outputs"]["kernel_dim"] = imp.kernel_dim;
  json file = transform_to_json(r.U(), r.V());
  file["kernel_dim"] = imp.kernel_dim;
  file["e_basis"] = matrix_to_json(imp.e_basis);
  file["T"] = matrix_to_json(imp.t);
  if (o.out_path.empty()) {
    report["outputs"]["implementer"] = file;
  } else {
    write_json(o.out_path, file);
    report["outputs"]["written"] = o.out_path;
  }
  return unit <= o.tol && inter <= o.tol ? kOk : kValidation;
}

int cmd_compose(const Options& o, json& report) {
  if (o.inputs.size() != 2) throw InputError("compose expects two --input files: R2 then R1");
  const OrthogonalTransform r2 = load_valid(o.inputs[0], o.tol, report);
  const OrthogonalTransform r1 = load_valid(o.inputs[1], o.tol, report);
  if (r2.dim() != r1.dim()) throw DimensionError("compose: mode counts differ");
  warn_cost(r2.dim(), report);
  const OrthogonalTransform r = compose(r2, r1);
  report["outputs"]["composed"] = transform_to_json(r.U(), r.V());
  report["residuals"]["composed_orthogonality"] = orthogonality_residuals(r.U(), r.V()).max();
  const Cocycle c = cocycle(r2, r1, std::max(o.tol, 1e-9));
  report["outputs"]["chi"] = complex_to_json(c.chi);
  report["outputs"]["abs_chi"] = std::abs(c.chi);
  report["residuals"]["ray"] = c.residual;
  report["residuals"]["abs_chi"] = std::abs(std::abs(c.chi) - 1.0);
  return report["residuals"]["abs_chi"].get<Real>() <= o.tol ? kOk : kValidation;
}

int cmd_vacuum(const Options& o, json& report) {
  if (o.inputs.size() != 1) throw InputError("vacuum expects one --input");
  const OrthogonalTransform r = load_valid(o.inputs[0], o.tol, report);
  const int d = r.dim();
  warn_cost(d, report);
  const CosetPoint cp = coset_coordinate(r);
  const FockVector phi = vacuum_orbit(r);
  report["outputs"]["phi"] = vector_list(phi.amplitudes());
  report["outputs"]["overlap"] = complex_to_json(inner(FockVector::vacuum(d), phi));
  report["outputs"]["x"] = matrix_to_json(cp.x.matrix());
  report["outputs"]["h0"] = matrix_to_json(cp.h0);
  report["residuals"]["norm"] = std::abs(phi.norm() - 1.0);
  return report["residuals"]["norm"].get<Real>() <= o.tol ? kOk : kValidation;
}

int cmd_selftest(const Options& o, json& report) {
  SelftestConfig cfg;
  cfg.modes = o.modes;
  cfg.generators = o.generators.value_or(o.modes);
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  if (cfg.modes < 1 || cfg.generators < 0) throw InputError("selftest: --modes must be >= 1 and --generators >= 0");
  warn_cost(cfg.modes, report);
  report["outputs"]["modes"] = cfg.modes;
  report["outputs"]["generators"] = cfg.generators;
  report["outputs"]["seed"] = cfg.seed;
  return selftest(cfg, report) ? kOk : kValidation;
}

const char* status_name(int code) {
  switch (code) {
    case kOk:
      return "ok";
    case kValidation:
      return "validation_failure";
    case kInput:
      return "input_error";
    default:
      return "ambiguous";
  }
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<Real>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex entries must be [re, im]");
  return {j[0].get<Real>(), j[1].get<Real>()};
}

json matrix_to_json(const Matrix& m) {
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(complex_to_json(m(i, k)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    throw InputError("matrices need rows, cols and data");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) throw InputError("rows/cols must be integers");
  const auto rows = j["rows"].get<Eigen::Index>(), cols = j["cols"].get<Eigen::Index>();
  const json& data = j["data"];
  if (rows < 0 || cols < 0 || !data.is_array() || Eigen::Index(data.size()) != rows * cols)
    throw InputError("matrix data length does not match rows * cols");
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(data[std::size_t(i * cols + k)]);
  return m;
}

json transform_to_json(const Matrix& u, const Matrix& v) {
  return {{"d", u.rows()}, {"U", matrix_to_json(u)}, {"V", matrix_to_json(v)}};
}

TransformFile read_transform(const std::string& path) {
  const json j = read_json(path);
  if (!j.is_object() || !j.contains("U") || !j.contains("V")) throw InputError(path + ": expected keys U and V");
  TransformFile f;
  f.u = matrix_from_json(j["U"]);
  f.v = matrix_from_json(j["V"]);
  if (f.u.rows() != f.u.cols() || f.v.rows() != f.v.cols() || f.u.rows() != f.v.rows())
    throw InputError(path + ": U and V must be square of equal size");
  if (j.contains("d") && (!j["d"].is_number_integer() || j["d"].get<Eigen::Index>() != f.u.rows()))
    throw InputError(path + ": d does not match the matrix size");
  if (f.u.rows() == 0) throw InputError(path + ": empty transform");
  if (f.u.rows() > kMaxIndices) throw InputError(path + ": too many modes");
  if (j.contains("T")) {
    f.t = matrix_from_json(j["T"]);
    f.has_t = true;
  }
  return f;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermionic Bogoliubov transformations on finite Fock spaces"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.inputs, "Transform file(s), JSON");
    sub->add_option("-o,--out", o.out_path, "Output file for serialized results");
    sub->add_option("--tol", o.tol, "Residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--modes", o.modes, "Number of modes d for selftest");
    sub->add_option("--generators", o.generators, "Number of Grassmann generators G (default d)");
    sub->add_option("--seed", o.seed, "Random seed for selftest");
    sub->add_flag("--strict-notation", o.strict_notation, "Print notational assumptions");
    sub->add_option("--format", o.format, "Report format (json)");
  };
  CLI::App* check = app.add_subcommand("check", "Validate a transform, report kernels and component");
  CLI::App* implement = app.add_subcommand("implement", "Build the unitary implementer T(R)");
  CLI::App* comp = app.add_subcommand("compose", "Compose two transforms and extract the cocycle");
  CLI::App* vacuum = app.add_subcommand("vacuum", "Transformed vacuum and coset coordinate");
  CLI::App* self = app.add_subcommand("selftest", "Run the invariant battery on random instances");
  for (CLI::App* s : {check, implement, comp, vacuum, self}) add_common(s);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  json report;
  report["command"] = chosen->get_name();
  report["inputs"] = o.inputs;
  report["tolerance"] = o.tol;
  report["residuals"] = json::object();
  report["outputs"] = json::object();
  report["warnings"] = json::array();

  int code = kOk;
  try {
    if (o.format != "json") throw InputError("unsupported --format " + o.format + " (only json)");
    if (o.strict_notation) report["warnings"].push_back(kNotationNote);
    if (chosen == check) code = cmd_check(o, report);
    else if (chosen == implement) code = cmd_implement(o, report);
    else if (chosen == comp) code = cmd_compose(o, report);
    else if (chosen == vacuum) code = cmd_vacuum(o, report);
    else code = cmd_selftest(o, report);
  } catch (const AmbiguityError& e) {
    report["error"] = e.what();
    code = kAmbiguous;
  } catch (const ValidationError& e) {
    report["error"] = e.what();
    code = kValidation;
  } catch (const InputError& e) {
    report["error"] = e.what();
    code = kInput;
  } catch (const DimensionError& e) {
    report["error"] = e.what();
    code = kInput;
  }
  report["status"] = status_name(code);
  report["exit_code"] = code;
  for (const auto& w : report["warnings"]) err << "warning: " << w.get<std::string>() << '\n';
  if (report.contains("error")) err << "error: " << report["error"].get<std::string>() << '\n';
  out << report.dump(2) << '\n';
  return code;
}

}  // namespace superfock::cli
