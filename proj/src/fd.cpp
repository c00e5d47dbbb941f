#include "stretchmat/fd.hpp"

#include <algorithm>
#include <cmath>

#include "stretchmat/error.hpp"

namespace stretchmat {

void FDConfig::validate() const {
  if (!(step > 1e-9 && step < 1e-2)) {
    throw InvalidParameter("fd step must lie in (1e-9, 1e-2)");
  }
}

namespace {

double axis_step(const StretchTriple& s, int i, const FDConfig& cfg) {
  return cfg.step * std::max(1.0, std::abs(s[i]));
}

StretchTriple shifted(StretchTriple s, int i, double di, int j = -1, double dj = 0.0) {
  s[i] += di;
  if (j >= 0) s[j] += dj;
  return s;
}

}  // namespace

Vec3 fd_gradient(const ScalarField& f, const StretchTriple& s, const FDConfig& cfg) {
  cfg.validate();
  Vec3 g;
  for (int i = 0; i < 3; ++i) {
    const double h = axis_step(s, i, cfg);
    g[i] = (f(shifted(s, i, h)) - f(shifted(s, i, -h))) / (2.0 * h);
  }
  return g;
}

Mat3 fd_hessian(const ScalarField& f, const StretchTriple& s, const FDConfig& cfg) {
  cfg.validate();
  Mat3 H;
  const double f0 = f(s);
  for (int i = 0; i < 3; ++i) {
    const double hi = axis_step(s, i, cfg);
    H(i, i) = (f(shifted(s, i, hi)) - 2.0 * f0 + f(shifted(s, i, -hi))) / (hi * hi);
    for (int j = i + 1; j < 3; ++j) {
      const double hj = axis_step(s, j, cfg);
      const double cross = f(shifted(s, i, hi, j, hj)) - f(shifted(s, i, hi, j, -hj)) -
                           f(shifted(s, i, -hi, j, hj)) + f(shifted(s, i, -hi, j, -hj));
      H(i, j) = H(j, i) = cross / (4.0 * hi * hj);
    }
  }
  return H;
}

LameParams lame_from_rest_hessian(const Mat3& H) {
  const double d11 = (H(0, 0) + H(1, 1) + H(2, 2)) / 3.0;
  const double d12 = (H(0, 1) + H(0, 2) + H(1, 2)) / 3.0;
  return {d12, 0.5 * (d11 - d12)};
}

}  // namespace stretchmat
