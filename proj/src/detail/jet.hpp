#pragma once

// Second-order chain-rule helpers over the three principal stretches.
// Every catalog energy is assembled from these pieces so its gradient and
// Hessian come out of the same closed-form expressions as the value.

#include <cmath>

#include "stretchmat/profile.hpp"
#include "stretchmat/stretch.hpp"

namespace stretchmat::detail {

struct Jet {
  double value = 0.0;
  Vec3 grad = Vec3::Zero();
  Mat3 hess = Mat3::Zero();

  Jet& operator+=(const Jet& o) {
    value += o.value;
    grad += o.grad;
    hess += o.hess;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator*(double c, Jet a) {
    a.value *= c;
    a.grad *= c;
    a.hess *= c;
    return a;
  }
  Evaluation to_evaluation() const { return {value, grad, hess}; }
};

inline Jet constant(double c) {
  Jet j;
  j.value = c;
  return j;
}

/// outer(inner(s)).
inline Jet chain(const Jet& inner, const ScalarJet& outer) {
  Jet j;
  j.value = outer.value;
  j.grad = outer.d1 * inner.grad;
  j.hess = outer.d2 * inner.grad * inner.grad.transpose() + outer.d1 * inner.hess;
  return j;
}

inline Jet product(const Jet& a, const Jet& b) {
  Jet j;
  j.value = a.value * b.value;
  j.grad = a.grad * b.value + a.value * b.grad;
  j.hess = a.hess * b.value + a.value * b.hess + a.grad * b.grad.transpose() +
           b.grad * a.grad.transpose();
  return j;
}

/// sum_i fn(lambda_i) for a scalar map fn(x) -> ScalarJet.
template <class Fn>
Jet separable_sum(const StretchTriple& s, Fn&& fn) {
  Jet j;
  for (int i = 0; i < 3; ++i) {
    const ScalarJet t = fn(s[i]);
    j.value += t.value;
    j.grad[i] = t.d1;
    j.hess(i, i) = t.d2;
  }
  return j;
}

/// sum over unordered pairs {i, j} of fn(lambda_i * lambda_j).
template <class Fn>
Jet pair_sum(const StretchTriple& s, Fn&& fn) {
  Jet j;
  constexpr int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  for (const auto& p : pairs) {
    const int a = p[0];
    const int b = p[1];
    Jet prod;
    prod.value = s[a] * s[b];
    prod.grad[a] = s[b];
    prod.grad[b] = s[a];
    prod.hess(a, b) = prod.hess(b, a) = 1.0;
    j += chain(prod, fn(prod.value));
  }
  return j;
}

/// J - 1 = l1 l2 l3 - 1.
inline Jet volume_ratio_minus_one(const StretchTriple& s) {
  Jet j;
  j.value = s.volume_ratio() - 1.0;
  j.grad = {s[1] * s[2], s[0] * s[2], s[0] * s[1]};
  j.hess(0, 1) = j.hess(1, 0) = s[2];
  j.hess(0, 2) = j.hess(2, 0) = s[1];
  j.hess(1, 2) = j.hess(2, 1) = s[0];
  return j;
}

/// log J as sum_i log(lambda_i); requires positive stretches.
inline Jet log_volume_ratio(const StretchTriple& s) {
  return separable_sum(s, [](double x) { return ScalarJet{std::log(x), 1.0 / x, -1.0 / (x * x)}; });
}

/// x^2 / 2 style helpers for outer maps.
inline ScalarJet half_square(double v) { return {0.5 * v * v, v, 1.0}; }

}  // namespace stretchmat::detail
