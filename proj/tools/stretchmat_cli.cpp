// Command-line front end: Lamé extraction, normalization, the cube stretch
// test, modal comparison, table verification and mesh generation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stretchmat/compose.hpp"
#include "stretchmat/error.hpp"
#include "stretchmat/fem/experiments.hpp"
#include "stretchmat/filter.hpp"
#include "stretchmat/lame.hpp"
#include "stretchmat/material_spec.hpp"
#include "stretchmat/verify.hpp"

using nlohmann::json;
namespace sm = stretchmat;
namespace fem = stretchmat::fem;

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kConvergence = 3, kVerification = 4 };

struct MaterialFlags {
  std::string family;
  std::string params;
  std::optional<double> alpha;
  std::optional<double> E;
  std::optional<double> nu;
  std::vector<std::string> specs;
};

void add_material_flags(CLI::App* cmd, MaterialFlags& m, bool many_specs = false) {
  cmd->add_option("--family", m.family, "Material family id");
  cmd->add_option("--params", m.params, "Family parameters as a JSON object");
  cmd->add_option("--alpha", m.alpha, "Nonlinearity filter exponent");
  cmd->add_option("--E", m.E, "Young's modulus to normalize the family to");
  cmd->add_option("--nu", m.nu, "Poisson ratio to normalize the family to");
  auto* spec = cmd->add_option("--spec", m.specs, "Material spec: JSON text or a file name");
  if (!many_specs) spec->expected(0, 1);
}

json spec_from_flags(const MaterialFlags& m) {
  json spec{{"family", m.family}};
  if (!m.params.empty()) spec["params"] = sm::load_spec(m.params);
  if (m.alpha) spec["alpha"] = *m.alpha;
  if (m.E) spec["E"] = *m.E;
  if (m.nu) spec["nu"] = *m.nu;
  return spec;
}

std::vector<json> material_specs(const MaterialFlags& m) {
  std::vector<json> out;
  for (const std::string& s : m.specs) out.push_back(sm::load_spec(s));
  if (!m.family.empty()) {
    if (!out.empty()) throw sm::SchemaError("give either --spec or --family, not both");
    out.push_back(spec_from_flags(m));
  } else if (m.params.size() || m.alpha || m.E || m.nu) {
    throw sm::SchemaError("--params, --alpha, --E and --nu need --family");
  }
  if (out.empty()) throw sm::SchemaError("no material given; use --spec or --family");
  return out;
}

sm::EnergyPtr single_material(const MaterialFlags& m) {
  const json spec = material_specs(m).front();
  if (spec.contains("alpha") && spec["alpha"].is_number() &&
      !sm::alpha_in_recommended_range(spec["alpha"].get<double>())) {
    std::cerr << "warning: alpha outside the recommended range [0.2, 4]\n";
  }
  return sm::energy_from_spec(spec);
}

json lame_json(const sm::LameParams& l) {
  return {{"lambda_lame", l.lambda_lame}, {"mu_lame", l.mu_lame}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sm::InvalidParameter("cannot write " + path);
  out << text;
}

int cmd_lame(const MaterialFlags& m, bool fd, bool allow_prestress) {
  const sm::EnergyPtr energy = single_material(m);
  const sm::RestCheck check = allow_prestress ? sm::RestCheck::report : sm::RestCheck::enforce;
  const sm::LameAgreement agree = sm::compare_lame_methods(*energy, check);
  const sm::LameParams l = fd ? agree.fd : agree.analytic;
  const sm::IsotropicModuli mod = sm::lame_to_moduli(l);
  json out = lame_json(l);
  out["E"] = mod.E;
  out["nu"] = mod.nu;
  out["method"] = fd ? "fd" : "analytic";
  out["method_agreement"] = {{"analytic", lame_json(agree.analytic)},
                             {"fd", lame_json(agree.fd)},
                             {"relative_difference", agree.relative_difference}};
  out["rest_gradient_norm"] = sm::rest_gradient_norm(*energy);
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_normalize(const std::string& family_id, double E, double nu, const std::string& params) {
  const sm::Family family = sm::family_from_id(family_id);
  const sm::LameParams target = sm::moduli_to_lame({E, nu});
  std::optional<sm::MaterialParams> baseline;
  if (!params.empty()) baseline = sm::params_from_json(family, sm::load_spec(params));
  const sm::MaterialParams p =
      sm::normalize(family, target, sm::NormalizePolicy::hold_at_default, baseline);

  const sm::MaterialModel model = sm::make_material(family, p);
  const sm::LameParams got = sm::extract_lame(model, sm::LameMethod::fd, sm::RestCheck::report);
  const double scale = std::max(std::abs(target.lambda_lame), std::abs(target.mu_lame));
  const double err = std::max(std::abs(got.lambda_lame - target.lambda_lame),
                              std::abs(got.mu_lame - target.mu_lame)) /
                     scale;
  json out{{"family", sm::family_id(family)},
           {"policy", "hold_at_default"},
           {"params", sm::params_to_json(family, p)},
           {"target", lame_json(target)},
           {"round_trip", {{"fd", lame_json(got)}, {"relative_error", err}}}};
  std::cout << out.dump(2) << '\n';
  if (!(err <= 1e-6)) {
    std::cerr << "error: normalized parameters miss the target (relative error " << err << ")\n";
    return kVerification;
  }
  return kOk;
}

int cmd_stretch_test(const MaterialFlags& m, fem::StretchTestConfig config,
                     const std::string& out_path) {
  const sm::EnergyPtr energy = single_material(m);
  const auto curve = fem::run_stretch_test(*energy, config, [](const std::string& w) {
    std::cerr << "warning: " << w << '\n';
  });
  std::ostringstream csv;
  fem::write_curve_csv(csv, curve);
  write_output(out_path, csv.str());
  return kOk;
}

int cmd_modes(const MaterialFlags& m, const std::string& mesh_path, int n, int k, bool fd) {
  const std::vector<json> specs = material_specs(m);
  if (specs.size() != 2) throw sm::SchemaError("modes takes exactly two --spec arguments");
  const fem::TetMesh mesh =
      mesh_path.empty() ? fem::generate_mesh(fem::MeshKind::beam, n) : fem::load_mesh(mesh_path);
  const sm::EnergyPtr a = sm::energy_from_spec(specs[0]);
  const sm::EnergyPtr b = sm::energy_from_spec(specs[1]);
  const auto mode = fd ? fem::DerivativeMode::fd : fem::DerivativeMode::analytic;
  const fem::ModesComparison cmp = fem::compare_modes(mesh, *a, *b, k, mode);

  json freq = json::array();
  for (std::size_t i = 0; i < cmp.frequencies_a.size(); ++i) {
    const double fa = cmp.frequencies_a[i];
    const double fb = cmp.frequencies_b[i];
    freq.push_back({{"mode", i + 1},
                    {"a", fa},
                    {"b", fb},
                    {"relative_difference", std::abs(fa - fb) / std::abs(fb)}});
  }
  json out{{"materials", {specs[0], specs[1]}},
           {"mesh", {{"vertices", mesh.num_vertices()}, {"tets", mesh.num_tets()}}},
           {"frequencies_hz", freq},
           {"stiffness_difference", cmp.stiffness_difference}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_verify_table(std::uint64_t seed, int draws) {
  const sm::TableReport report = sm::verify_table(seed, draws);
  json families = json::array();
  for (const sm::FamilyCheck& c : report.families) {
    families.push_back({{"family", c.id},
                        {"passed", c.passed()},
                        {"lame", {{"ok", c.lame_ok}, {"max_relative_error", c.lame_error}}},
                        {"rest", {{"ok", c.rest_ok}, {"max_error", c.rest_error}}},
                        {"symmetry", {{"ok", c.symmetry_ok}, {"max_error", c.symmetry_error}}}});
  }
  json out{{"seed", report.seed},
           {"draws", report.draws},
           {"passed", report.num_passed()},
           {"total", report.families.size()},
           {"families", families}};
  std::cout << out.dump(2) << '\n';
  return report.all_passed() ? kOk : kVerification;
}

int cmd_genmesh(const std::string& kind, int n, double size, const std::string& out_path) {
  fem::MeshKind mk;
  if (kind == "cube") {
    mk = fem::MeshKind::cube;
  } else if (kind == "beam") {
    mk = fem::MeshKind::beam;
  } else {
    throw sm::InvalidParameter("mesh kind must be cube or beam");
  }
  std::ostringstream text;
  fem::write_mesh(text, fem::generate_mesh(mk, n, size));
  write_output(out_path, text.str());
  return kOk;
}

int exit_code(const sm::Error& e) {
  switch (e.kind()) {
    case sm::ErrorKind::convergence:
      return kConvergence;
    case sm::ErrorKind::verification:
      return kVerification;
    default:
      return kValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stretch-based isotropic materials: Lamé parameters, normalization, FEM checks"};
  app.require_subcommand(1);

  MaterialFlags mat;
  bool fd = false;
  bool allow_prestress = false;
  std::string out_path;
  std::string mesh_path;
  std::uint64_t seed = 0;
  int draws = 10;
  int n = 4;
  int k = 6;
  double size = 1.0;
  std::string kind = "cube";
  std::optional<double> E;
  std::optional<double> nu;
  fem::StretchTestConfig stretch;

  auto* lame = app.add_subcommand("lame", "Lamé parameters, E and nu of a material");
  add_material_flags(lame, mat);
  lame->add_flag("--fd", fd, "Report the finite-difference extraction");
  lame->add_flag("--allow-prestress", allow_prestress,
                 "Extract from the rest Hessian even with a rest stress");

  auto* norm = app.add_subcommand("normalize", "Family parameters for a target E and nu");
  norm->add_option("--family", mat.family, "Material family id")->required();
  norm->add_option("--E", E, "Young's modulus")->required();
  norm->add_option("--nu", nu, "Poisson ratio")->required();
  norm->add_option("--params", mat.params, "Baseline for the parameters held fixed");

  auto* st = app.add_subcommand("stretch-test", "Unit cube pulled apart between two faces");
  add_material_flags(st, mat);
  st->add_option("--n", stretch.resolution, "Cells per cube edge")->capture_default_str();
  st->add_option("--dmin", stretch.d_min, "Smallest face distance (m)")->capture_default_str();
  st->add_option("--dmax", stretch.d_max, "Largest face distance (m)")->capture_default_str();
  st->add_option("--steps", stretch.steps, "Number of distances")->capture_default_str();
  st->add_option("--out", out_path, "CSV file (default stdout)");
  st->add_flag("--slide", stretch.slide, "Constrain face vertices along x only");
  st->add_flag("--fd", fd, "Finite-difference stress derivatives");

  auto* modes = app.add_subcommand("modes", "Rest stiffness and modal frequencies of two materials");
  add_material_flags(modes, mat, true);
  modes->add_option("--mesh", mesh_path, "Mesh file (default: generated beam)");
  modes->add_option("--n", n, "Beam resolution when no mesh is given")->capture_default_str();
  modes->add_option("--k", k, "Number of frequencies")->capture_default_str();
  modes->add_flag("--fd", fd, "Finite-difference stress derivatives");

  auto* verify = app.add_subcommand("verify-table", "Check every family's closed-form Lamé column");
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--draws", draws, "Parameter draws per family")->capture_default_str();

  auto* gen = app.add_subcommand("genmesh", "Write a generated tetrahedral mesh");
  gen->add_option("--kind", kind, "cube or beam")->capture_default_str();
  gen->add_option("--n", n, "Resolution")->capture_default_str();
  gen->add_option("--size", size, "Edge length (m)")->capture_default_str();
  gen->add_option("--out", out_path, "Mesh file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*lame) return cmd_lame(mat, fd, allow_prestress);
    if (*norm) return cmd_normalize(mat.family, *E, *nu, mat.params);
    if (*st) {
      if (fd) stretch.derivatives = fem::DerivativeMode::fd;
      return cmd_stretch_test(mat, stretch, out_path);
    }
    if (*modes) return cmd_modes(mat, mesh_path, n, k, fd);
    if (*verify) return cmd_verify_table(seed, draws);
    if (*gen) return cmd_genmesh(kind, n, size, out_path);
  } catch (const sm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
