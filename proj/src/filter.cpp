#include "stretchmat/filter.hpp"

#include <cmath>
#include <sstream>

#include "stretchmat/error.hpp"

namespace stretchmat {

FilteredMaterial::FilteredMaterial(EnergyPtr base, double alpha)
    : base_(std::move(base)), alpha_(alpha) {
  if (!base_) throw InvalidParameter("filter: base energy is null");
  if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) {
    throw InvalidParameter("filter: alpha must be a finite positive number");
  }
}

std::string FilteredMaterial::name() const {
  std::ostringstream s;
  s << base_->name() << "[alpha=" << alpha_ << "]";
  return s.str();
}

StretchTriple FilteredMaterial::powered(const StretchTriple& s) const {
  if (alpha_ == 1.0) return s;
  return {std::pow(s[0], alpha_), std::pow(s[1], alpha_), std::pow(s[2], alpha_)};
}

double FilteredMaterial::do_energy(const StretchTriple& s) const {
  return base_->energy(powered(s)) / (alpha_ * alpha_);
}

Evaluation FilteredMaterial::do_evaluate(const StretchTriple& s) const {
  const StretchTriple sa = powered(s);
  const Evaluation b = base_->evaluate(sa);
  if (alpha_ == 1.0) return b;

  const double a = alpha_;
  // l^(a-1) = l^a / l, l^(a-2) = l^a / l^2
  Vec3 d1;
  for (int i = 0; i < 3; ++i) d1[i] = sa[i] / s[i];

  Evaluation out;
  out.energy = b.energy / (a * a);
  for (int i = 0; i < 3; ++i) {
    out.gradient[i] = d1[i] * b.gradient[i] / a;
    for (int j = 0; j < 3; ++j) out.hessian(i, j) = d1[i] * d1[j] * b.hessian(i, j);
    out.hessian(i, i) += (a - 1.0) / a * (d1[i] / s[i]) * b.gradient[i];
  }
  return out;
}

FilteredMaterial filter(EnergyPtr base, double alpha) {
  return FilteredMaterial(std::move(base), alpha);
}

bool alpha_in_recommended_range(double alpha) { return alpha >= 0.2 && alpha <= 4.0; }

}  // namespace stretchmat
