#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stretchmat/moduli.hpp"
#include "stretchmat/profile.hpp"
#include "stretchmat/stretch.hpp"

namespace stretchmat {

/// The nineteen isotropic families of the material table.
enum class Family {
  linear_corotational,
  st_venant_kirchhoff,
  hencky,
  seth_hill,
  symmetric_seth_hill,
  hill,
  neo_hookean,
  neo_hookean_ogden,
  stable_neo_hookean,
  sts,
  valanis_landel,
  valanis_landel_new,
  valanis_landel_xu,
  peng_landel,
  arap,
  symmetric_arap,
  symmetric_dirichlet,
  ogden,
  mooney_rivlin,
};

struct OgdenTerm {
  double mu = 0.0;
  double alpha = 0.0;

  friend bool operator==(const OgdenTerm&, const OgdenTerm&) = default;
};

/// Union of every family's parameters; each family reads only its own
/// fields (see FamilyDescriptor::fields).
struct MaterialParams {
  double mu = 0.0;
  double lambda = 0.0;
  double alpha = 1.0;   // Seth-Hill exponents
  double mu4 = 0.0;     // STS quartic term
  double youngs = 0.0;  // Peng-Landel E
  double c1 = 0.0;      // Mooney-Rivlin
  double c2 = 0.0;
  Profile f = Profile::log();
  Profile g = Profile::log_squared();
  Profile h = Profile::log_squared();
  std::vector<OgdenTerm> terms;

  friend bool operator==(const MaterialParams&, const MaterialParams&) = default;
};

struct FamilyDescriptor {
  Family family;
  std::string id;            // lower_snake_case, used in JSON configs
  std::string display_name;  // as in the table
  std::vector<std::string> fields;
  StretchDomain domain;
  bool separable;  // splits into lambda/mu parts
  /// False when the table's formula carries a rest stress for generic
  /// parameters (Ogden, Mooney-Rivlin).
  bool rest_stable_for_all_params;
};

const std::vector<FamilyDescriptor>& list_catalog();
const FamilyDescriptor& describe(Family family);
/// Accepts ids plus the short aliases "corotational", "stvk", "snh".
Family family_from_id(std::string_view id);
std::string family_id(Family family);

/// Parameters the normalizer and config parser fall back to.
MaterialParams default_params(Family family);

class MaterialModel final : public StretchEnergy {
 public:
  /// Validates `params` for `family`; throws InvalidParameter.
  MaterialModel(Family family, MaterialParams params);

  /// Skips validation. Used to build unit-coefficient energy terms (for
  /// example mu = 0, lambda = 1) that are not materials on their own.
  static MaterialModel unchecked(Family family, MaterialParams params);

  Family family() const { return family_; }
  const MaterialParams& params() const { return params_; }

  /// The table's closed-form Lamé column for these parameters.
  LameParams closed_form_lame() const;

  /// Principal stress the formula predicts at rest (same in all three
  /// directions). Zero for rest-stable parameter choices.
  double predicted_rest_stress() const;

  StretchDomain domain() const override;
  std::string name() const override;
  double stress_scale() const override;

 protected:
  double do_energy(const StretchTriple& s) const override;
  Evaluation do_evaluate(const StretchTriple& s) const override;

 private:
  struct Unchecked {};
  MaterialModel(Family family, MaterialParams params, Unchecked);

  Family family_;
  MaterialParams params_;
};

MaterialModel make_material(Family family, const MaterialParams& params);

}  // namespace stretchmat
