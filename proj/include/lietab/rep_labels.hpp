#pragma once

#include "lietab/exact.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lietab {

/// Integer or half-integer, stored doubled.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }
  /// "0", "2", "-3/2", "+1/2". Throws std::invalid_argument otherwise.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  Rational value() const { return make_rational(twice_, 2); }
  /// "1/2", "-3/2", "2"
  std::string to_string() const;

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) { return h.twice() < 0 ? -h : h; }

/// |l, l_dot; m, m_dot> of an sl(2,C) multiplet.
struct WeightKet {
  HalfInt l, l_dot, m, m_dot;

  /// Throws std::invalid_argument when the labels leave the multiplet box.
  static WeightKet make(HalfInt l, HalfInt l_dot, HalfInt m, HalfInt m_dot);
  friend bool operator==(const WeightKet&, const WeightKet&) = default;
};

enum class LadderOp { x_plus, x_minus, y_plus, y_minus };

std::optional<WeightKet> apply_ladder(const WeightKet& ket, LadderOp op);

/// All (2l+1)(2l_dot+1) states, m-major then m_dot ascending.
std::vector<WeightKet> multiplet_states(HalfInt l, HalfInt l_dot);

enum class MassUnit { electron, hydrogen };

struct Mass {
  Rational coefficient;
  MassUnit unit;
  /// "p/q · m_e" or "p/q · m_H"
  std::string to_string() const;
  Mass in_unit(MassUnit other) const { return {coefficient, other}; }
  friend bool operator==(const Mass&, const Mass&) = default;
};

/// 2 m_e (l + 1/2)(l_dot + 1/2)
Mass mass_sl2c(HalfInt l, HalfInt l_dot);
/// 2 m_H (l + 1/2)(l_dot + 1/2)(nu + 1/2)
Mass mass_so42(HalfInt l, HalfInt l_dot, HalfInt nu);

enum class Spin { minus_half, plus_half };

/// "-1/2" or "+1/2"
std::string to_string(Spin s);
/// Accepts "-1/2", "+1/2", "1/2".
Spin parse_spin(std::string_view text);
HalfInt spin_value(Spin s);

/// |n, l, m, s> with n < 0 for the antimatter mirror.
struct MadelungKet {
  int n = 1;
  int l = 0;
  int m = 0;
  Spin s = Spin::minus_half;

  /// Throws std::invalid_argument unless n != 0, 0 <= l <= |n|-1, |m| <= l.
  static MadelungKet make(int n, int l, int m, Spin s);
  bool anti() const { return n < 0; }
  /// "|1,0,0,-1/2⟩"
  std::string to_string() const;
  friend bool operator==(const MadelungKet&, const MadelungKet&) = default;
};

/// |nu, nu_dot; lam, lam_dot; mu, mu_dot; sigma, sigma_dot|
struct DottedKet {
  HalfInt nu, nu_dot, lam, lam_dot, mu, mu_dot, sigma, sigma_dot;

  /// Throws std::invalid_argument when a label leaves its range.
  static DottedKet make(HalfInt nu, HalfInt nu_dot, HalfInt lam, HalfInt lam_dot, HalfInt mu, HalfInt mu_dot,
                        HalfInt sigma, HalfInt sigma_dot);
  /// Eight comma-separated labels in the order above.
  static DottedKet parse(std::string_view text);
};

enum class Branch { matter, antimatter };

/// n = |nu - nu_dot|, l = |lam - lam_dot|, m = |mu - mu_dot|, s signed by sigma.
/// Throws std::invalid_argument when the result is not a valid Madelung ket.
MadelungKet dotted_to_madelung(const DottedKet& d, Branch branch = Branch::matter);

/// (k+1)(r+1)(p+1)
std::uint64_t sym_dim(std::uint32_t k, std::uint32_t r, std::uint32_t p);

/// Nodes (l, l_dot) with l + l_dot <= max_sum, ordered by l + l_dot, then l.
std::vector<std::pair<HalfInt, HalfInt>> extended_weyl_diagram(HalfInt max_sum);

}  // namespace lietab
