#include "stretchmat/stretch.hpp"

#include <cmath>
#include <sstream>

#include "stretchmat/error.hpp"

namespace stretchmat {

bool StretchTriple::is_finite() const {
  return std::isfinite(v_[0]) && std::isfinite(v_[1]) && std::isfinite(v_[2]);
}

bool StretchEnergy::in_domain(const StretchTriple& s) const {
  if (!s.is_finite()) return false;
  return domain() == StretchDomain::unrestricted || s.all_positive();
}

namespace {

void check_domain(const StretchEnergy& e, const StretchTriple& s) {
  if (e.in_domain(s)) return;
  std::ostringstream msg;
  msg << e.name() << ": stretches (" << s[0] << ", " << s[1] << ", " << s[2]
      << ") outside validity domain";
  throw DomainViolation(msg.str());
}

}  // namespace

double StretchEnergy::energy(const StretchTriple& s) const {
  check_domain(*this, s);
  return do_energy(s);
}

Evaluation StretchEnergy::evaluate(const StretchTriple& s) const {
  check_domain(*this, s);
  return do_evaluate(s);
}

}  // namespace stretchmat
