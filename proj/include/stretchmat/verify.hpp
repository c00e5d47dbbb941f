#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stretchmat/material.hpp"

namespace stretchmat {

/// A random parameter record the family accepts and that is rest-stable
/// whenever the family allows it.
MaterialParams random_params(Family family, std::mt19937_64& rng);

struct FamilyCheck {
  Family family;
  std::string id;
  int draws = 0;
  /// max |fd - closed form| / max(|lambda_lame|, |mu_lame|) over the draws.
  double lame_error = 0.0;
  /// max deviation of psi(1,1,1) and grad psi(1,1,1) from the predicted
  /// rest state, relative to max(1, stress scale).
  double rest_error = 0.0;
  /// max |psi(perm s) - psi(s)| / max(1, |psi(s)|).
  double symmetry_error = 0.0;
  bool lame_ok = false;
  bool rest_ok = false;
  bool symmetry_ok = false;

  bool passed() const { return lame_ok && rest_ok && symmetry_ok; }
};

struct TableReport {
  std::uint64_t seed = 0;
  int draws = 0;
  std::vector<FamilyCheck> families;

  int num_passed() const;
  bool all_passed() const { return num_passed() == static_cast<int>(families.size()); }
};

/// Stands in for MaterialModel::closed_form_lame, for negative controls.
using ClosedFormLame = std::function<LameParams(const MaterialModel&)>;

inline constexpr double kTableLameTolerance = 1e-5;
inline constexpr double kTableRestTolerance = 1e-8;
inline constexpr double kTableSymmetryTolerance = 1e-12;

/// For every catalog family and `draws` random parameter records:
/// finite-difference Lamé parameters against the closed form, the rest
/// state against MaterialModel::predicted_rest_stress, and energy symmetry
/// under all six permutations of three random stretch triples.
TableReport verify_table(std::uint64_t seed = 0, int draws = 10,
                         const ClosedFormLame& closed_form = {});

}  // namespace stretchmat
