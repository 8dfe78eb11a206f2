#include "lietab/rep_labels.hpp"

#include <stdexcept>

namespace lietab {

HalfInt HalfInt::parse(std::string_view text) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed half-integer '" + std::string(text) + "'");
  }
  Rational doubled = 2 * r;
  if (doubled.get_den() != 1 || !doubled.get_num().fits_sint_p())
    throw std::invalid_argument("'" + std::string(text) + "' is not a half-integer");
  return HalfInt(static_cast<int>(doubled.get_num().get_si()));
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::string to_string(Spin s) { return s == Spin::minus_half ? "-1/2" : "+1/2"; }

Spin parse_spin(std::string_view text) {
  if (text == "-1/2") return Spin::minus_half;
  if (text == "+1/2" || text == "1/2") return Spin::plus_half;
  throw std::invalid_argument("spin must be -1/2 or +1/2, got '" + std::string(text) + "'");
}

HalfInt spin_value(Spin s) { return HalfInt::from_twice(s == Spin::minus_half ? -1 : 1); }

}  // namespace lietab
