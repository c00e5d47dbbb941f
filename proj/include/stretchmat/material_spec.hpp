#pragma once

#include <string>

#include <json.hpp>

#include "stretchmat/material.hpp"
#include "stretchmat/stretch.hpp"

namespace stretchmat {

/// Family parameters from a JSON object. Missing fields keep
/// default_params(family); keys the family does not use raise SchemaError.
///
///   scalars:  "mu", "lambda", "alpha", "mu4", "E", "c1", "c2"
///   profiles: "f", "g", "h" as a kind name or {"kind", "beta", "scale"}
///   Ogden:    "terms": [{"mu": .., "alpha": ..}, ...]
MaterialParams params_from_json(Family family, const nlohmann::json& params);

/// The fields the family reads, in the same layout params_from_json takes.
nlohmann::json params_to_json(Family family, const MaterialParams& params);

/// Builds an energy from one of
///
///   {"family": id, "params": {...}?, "alpha": a?}
///   {"family": id, "E": .., "nu": .., "params": {...}?, "alpha": a?}
///   {"combine": {"mu_part": spec, "lambda_part": "j_minus_1_sq" | "log_j_sq" | spec,
///                "E": .., "nu": .., "alpha_mu": ..?, "alpha_lambda": ..?}}
///
/// With E and nu the family is normalized to those moduli and "params"
/// supplies the held extra parameters. Specs inside "combine" take no
/// "alpha"; use alpha_mu and alpha_lambda instead. Unknown keys raise
/// SchemaError.
EnergyPtr energy_from_spec(const nlohmann::json& spec);

/// Parses `text` as JSON, or, if it does not start with '{', reads the file
/// it names. Throws SchemaError on malformed input.
nlohmann::json load_spec(const std::string& text_or_path);

}  // namespace stretchmat
