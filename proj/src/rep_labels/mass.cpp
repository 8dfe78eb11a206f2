#include "lietab/rep_labels.hpp"

#include <stdexcept>

namespace lietab {

namespace {

Rational shifted(HalfInt h) {
  if (h.twice() < 0) throw std::invalid_argument("mass labels must be non-negative");
  return h.value() + make_rational(1, 2);
}

}  // namespace

std::string Mass::to_string() const {
  return rational_to_string(coefficient) + " · " + (unit == MassUnit::electron ? "m_e" : "m_H");
}

Mass mass_sl2c(HalfInt l, HalfInt l_dot) {
  return {Rational(2 * shifted(l) * shifted(l_dot)), MassUnit::electron};
}

Mass mass_so42(HalfInt l, HalfInt l_dot, HalfInt nu) {
  return {Rational(2 * shifted(l) * shifted(l_dot) * shifted(nu)), MassUnit::hydrogen};
}

}  // namespace lietab
