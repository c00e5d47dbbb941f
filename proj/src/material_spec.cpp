#include "stretchmat/material_spec.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "stretchmat/compose.hpp"
#include "stretchmat/error.hpp"
#include "stretchmat/filter.hpp"
#include "stretchmat/lame.hpp"

namespace stretchmat {

using nlohmann::json;

namespace {

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected a JSON object");
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw SchemaError(where + ": unknown key \"" + key + "\"");
  }
}

double number(const json& j, const std::string& key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number()) throw SchemaError(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

Profile profile_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return Profile(Profile::kind_from_name(j.get<std::string>()));
  require_object(j, where);
  reject_unknown(j, {"kind", "beta", "scale"}, where);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError(where + ": profile needs a string \"kind\"");
  }
  const ProfileKind kind = Profile::kind_from_name(j["kind"].get<std::string>());
  const double beta = j.contains("beta") ? number(j, "beta", where) : 1.0;
  const double scale = j.contains("scale") ? number(j, "scale", where) : 1.0;
  return Profile(kind, beta, scale);
}

json profile_to_json(const Profile& p) {
  json out{{"kind", p.kind_name()}, {"scale", p.scale()}};
  if (p.uses_beta()) out["beta"] = p.beta();
  return out;
}

double* scalar_field(MaterialParams& p, const std::string& name) {
  if (name == "mu") return &p.mu;
  if (name == "lambda") return &p.lambda;
  if (name == "alpha") return &p.alpha;
  if (name == "mu4") return &p.mu4;
  if (name == "E") return &p.youngs;
  if (name == "c1") return &p.c1;
  if (name == "c2") return &p.c2;
  return nullptr;
}

Profile* profile_field(MaterialParams& p, const std::string& name) {
  if (name == "f") return &p.f;
  if (name == "g") return &p.g;
  if (name == "h") return &p.h;
  return nullptr;
}

Family family_of(const json& spec, const std::string& where) {
  if (!spec.contains("family") || !spec["family"].is_string()) {
    throw SchemaError(where + ": needs a string \"family\"");
  }
  return family_from_id(spec["family"].get<std::string>());
}

// {"family", "params"?, "E"?, "nu"?}; the caller handles "alpha".
MaterialModel family_model(const json& spec, const std::string& where) {
  const Family family = family_of(spec, where);
  const bool has_e = spec.contains("E");
  const bool has_nu = spec.contains("nu");
  if (has_e != has_nu) throw SchemaError(where + ": \"E\" and \"nu\" go together");

  MaterialParams params = spec.contains("params") ? params_from_json(family, spec["params"])
                                                  : default_params(family);
  if (has_e) {
    const LameParams target =
        moduli_to_lame({number(spec, "E", where), number(spec, "nu", where)});
    params = normalize(family, target, NormalizePolicy::hold_at_default, params);
  }
  return make_material(family, params);
}

EnergyPtr with_alpha(EnergyPtr base, const json& spec, const std::string& where) {
  if (!spec.contains("alpha")) return base;
  const double alpha = number(spec, "alpha", where);
  if (alpha == 1.0) return base;
  return std::make_shared<FilteredMaterial>(std::move(base), alpha);
}

EnergyPart mu_part_of(const json& spec) {
  const std::string where = "combine.mu_part";
  require_object(spec, where);
  reject_unknown(spec, {"family", "params"}, where);
  const Family family = family_of(spec, where);
  const MaterialParams params = spec.contains("params") ? params_from_json(family, spec["params"])
                                                        : default_params(family);
  if (describe(family).separable) return decompose_energy(family, params).mu_part;
  return mu_part_from(std::make_shared<MaterialModel>(make_material(family, params)));
}

EnergyPart lambda_part_of(const json& spec) {
  const std::string where = "combine.lambda_part";
  if (spec.is_string()) {
    const std::string kind = spec.get<std::string>();
    if (kind == "j_minus_1_sq") return volumetric_part(VolumetricKind::j_minus_1_sq);
    if (kind == "log_j_sq") return volumetric_part(VolumetricKind::log_j_sq);
    throw SchemaError(where + ": unknown volumetric part \"" + kind +
                      "\" (expected j_minus_1_sq or log_j_sq)");
  }
  require_object(spec, where);
  reject_unknown(spec, {"family", "params"}, where);
  const Family family = family_of(spec, where);
  const MaterialParams params = spec.contains("params") ? params_from_json(family, spec["params"])
                                                        : default_params(family);
  return decompose_energy(family, params).lambda_part;
}

EnergyPtr combined(const json& c) {
  const std::string where = "combine";
  require_object(c, where);
  reject_unknown(c, {"mu_part", "lambda_part", "E", "nu", "alpha_mu", "alpha_lambda"}, where);
  for (const char* key : {"mu_part", "lambda_part", "E", "nu"}) {
    if (!c.contains(key)) throw SchemaError(where + ": missing \"" + std::string(key) + "\"");
  }
  const LameParams target = moduli_to_lame({number(c, "E", where), number(c, "nu", where)});
  const double alpha_mu = c.contains("alpha_mu") ? number(c, "alpha_mu", where) : 1.0;
  const double alpha_lambda = c.contains("alpha_lambda") ? number(c, "alpha_lambda", where) : 1.0;
  return std::make_shared<ComposedMaterial>(
      combine(mu_part_of(c["mu_part"]), lambda_part_of(c["lambda_part"]), target, alpha_mu,
              alpha_lambda));
}

}  // namespace

MaterialParams params_from_json(Family family, const json& params) {
  const std::string where = family_id(family) + ".params";
  require_object(params, where);
  const FamilyDescriptor& desc = describe(family);
  MaterialParams p = default_params(family);
  for (const auto& [key, value] : params.items()) {
    if (std::find(desc.fields.begin(), desc.fields.end(), key) == desc.fields.end()) {
      throw SchemaError(where + ": unknown key \"" + key + "\"");
    }
    if (double* s = scalar_field(p, key)) {
      *s = number(params, key, where);
    } else if (Profile* prof = profile_field(p, key)) {
      *prof = profile_from_json(value, where + "." + key);
    } else if (key == "terms") {
      if (!value.is_array()) throw SchemaError(where + ": \"terms\" must be an array");
      p.terms.clear();
      for (const json& t : value) {
        require_object(t, where + ".terms");
        reject_unknown(t, {"mu", "alpha"}, where + ".terms");
        if (!t.contains("mu") || !t.contains("alpha")) {
          throw SchemaError(where + ".terms: each term needs \"mu\" and \"alpha\"");
        }
        p.terms.push_back({number(t, "mu", where), number(t, "alpha", where)});
      }
    }
  }
  return p;
}

json params_to_json(Family family, const MaterialParams& params) {
  MaterialParams p = params;
  json out = json::object();
  for (const std::string& key : describe(family).fields) {
    if (const double* s = scalar_field(p, key)) {
      out[key] = *s;
    } else if (const Profile* prof = profile_field(p, key)) {
      out[key] = profile_to_json(*prof);
    } else if (key == "terms") {
      json terms = json::array();
      for (const OgdenTerm& t : p.terms) terms.push_back({{"mu", t.mu}, {"alpha", t.alpha}});
      out[key] = terms;
    }
  }
  return out;
}

EnergyPtr energy_from_spec(const json& spec) {
  require_object(spec, "spec");
  if (spec.contains("combine")) {
    reject_unknown(spec, {"combine"}, "spec");
    return combined(spec["combine"]);
  }
  reject_unknown(spec, {"family", "params", "E", "nu", "alpha"}, "spec");
  return with_alpha(std::make_shared<MaterialModel>(family_model(spec, "spec")), spec, "spec");
}

json load_spec(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && text_or_path[first] == '{') {
    text = text_or_path;
  } else {
    std::ifstream in(text_or_path);
    if (!in) throw SchemaError("cannot open spec file " + text_or_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace stretchmat
