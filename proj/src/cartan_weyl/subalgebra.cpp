#include "lietab/cartan_weyl.hpp"

#include <algorithm>

namespace lietab {

Subalgebra parse_subalgebra(std::string_view text) {
  if (text == "sl2c") return Subalgebra::sl2c;
  if (text == "so4") return Subalgebra::so4;
  if (text == "so22_LΔ" || text == "so22_LD" || text == "so22_l_delta") return Subalgebra::so22_l_delta;
  if (text == "so22_AΔ" || text == "so22_AD" || text == "so22_a_delta") return Subalgebra::so22_a_delta;
  throw std::invalid_argument("unknown subalgebra '" + std::string(text) + "'");
}

std::string to_string(Subalgebra which) {
  switch (which) {
    case Subalgebra::sl2c: return "sl2c";
    case Subalgebra::so4: return "so4";
    case Subalgebra::so22_l_delta: return "so22_LΔ";
    case Subalgebra::so22_a_delta: return "so22_AΔ";
  }
  return "?";
}

namespace {

std::vector<NamedOperator> shell(const GeneratorSet& gs) {
  const GaussianRational half(make_rational(1, 2));
  const GaussianRational i_half(0, make_rational(1, 2));
  std::vector<NamedOperator> x, y;
  for (int k = 1; k <= 3; ++k) {
    ExactMatrix l = alias_matrix(gs, "L" + std::to_string(k));
    ExactMatrix b = alias_matrix(gs, "B" + std::to_string(k));
    x.push_back({"X" + std::to_string(k), half * l + i_half * b, OperatorKind::raw});
    y.push_back({"Y" + std::to_string(k), half * l - i_half * b, OperatorKind::raw});
  }
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

std::vector<NamedOperator> pick(const std::vector<NamedOperator>& basis, std::initializer_list<const char*> names) {
  std::vector<NamedOperator> out;
  for (const char* n : names) {
    auto it = std::find_if(basis.begin(), basis.end(), [&](const NamedOperator& op) { return op.name == n; });
    out.push_back(*it);
  }
  return out;
}

}  // namespace

SubalgebraBasis subalgebra_basis(const GeneratorSet& gs, Subalgebra which) {
  if (!(gs.metric() == Metric(4, 2))) throw WrongSignature("subalgebra_basis needs signature 4,2");
  SubalgebraBasis out;
  out.name = to_string(which);
  std::string h1, h2;
  switch (which) {
    case Subalgebra::sl2c:
      out.components = shell(gs);
      out.halves = {"X", "Y"};
      h1 = "X3", h2 = "Y3";
      break;
    case Subalgebra::so4:
      out.components = pick(yao_basis(gs), {"K1", "K2", "K3", "J1", "J2", "J3"});
      out.halves = {"K", "J"};
      h1 = "K3", h2 = "J3";
      break;
    case Subalgebra::so22_l_delta:
      out.components = pick(yao_basis(gs), {"T1", "T2", "T0", "S1", "S2", "S0"});
      out.halves = {"T", "S"};
      h1 = "T0", h2 = "S0";
      break;
    case Subalgebra::so22_a_delta:
      out.components = pick(yao_basis(gs), {"P1", "P2", "P0", "Q1", "Q2", "Q0"});
      out.halves = {"P", "Q"};
      h1 = "P0", h2 = "Q0";
      break;
  }
  for (const auto& op : out.components)
    if (op.name == h1 || op.name == h2) out.cartan.push_back({op.name, op.matrix, OperatorKind::cartan});
  out.weyl = ladder_operators(out.components);
  return out;
}

}  // namespace lietab
