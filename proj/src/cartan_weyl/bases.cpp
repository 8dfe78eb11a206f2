#include "lietab/cartan_weyl.hpp"

#include <array>

namespace lietab {

namespace {

struct SignedPair {
  int sign;
  int a;
  int b;
};

// Each component is 1/2 (first + second).
struct ComponentSpec {
  const char* name;
  SignedPair first;
  SignedPair second;
};

constexpr std::array<ComponentSpec, 18> kFirstHalf{{
    {"K1", {+1, 2, 3}, {+1, 1, 4}}, {"K2", {+1, 3, 1}, {+1, 2, 4}}, {"K3", {+1, 1, 2}, {+1, 3, 4}},
    {"J1", {+1, 2, 3}, {-1, 1, 4}}, {"J2", {+1, 3, 1}, {-1, 2, 4}}, {"J3", {+1, 1, 2}, {-1, 3, 4}},
    {"T1", {-1, 1, 5}, {-1, 2, 6}}, {"T2", {+1, 2, 5}, {-1, 1, 6}}, {"T0", {-1, 1, 2}, {-1, 5, 6}},
    {"S1", {-1, 1, 5}, {+1, 2, 6}}, {"S2", {-1, 2, 5}, {-1, 1, 6}}, {"S0", {+1, 1, 2}, {-1, 5, 6}},
    {"P1", {-1, 3, 5}, {-1, 4, 6}}, {"P2", {+1, 4, 5}, {-1, 3, 6}}, {"P0", {-1, 3, 4}, {-1, 5, 6}},
    {"Q1", {+1, 3, 5}, {-1, 4, 6}}, {"Q2", {+1, 4, 5}, {+1, 3, 6}}, {"Q0", {+1, 3, 4}, {-1, 5, 6}},
}};

constexpr std::array<ComponentSpec, 18> kSecondHalf{{
    {"K1", {+1, 6, 7}, {+1, 5, 8}}, {"K2", {-1, 5, 7}, {+1, 6, 8}}, {"K3", {+1, 5, 6}, {+1, 7, 8}},
    {"J1", {+1, 6, 7}, {-1, 5, 8}}, {"J2", {-1, 5, 7}, {-1, 6, 8}}, {"J3", {+1, 5, 6}, {-1, 7, 8}},
    {"T1", {+1, 1, 7}, {+1, 2, 8}}, {"T2", {-1, 2, 7}, {+1, 1, 8}}, {"T0", {+1, 1, 2}, {+1, 7, 8}},
    {"S1", {+1, 1, 7}, {-1, 2, 8}}, {"S2", {+1, 2, 7}, {+1, 1, 8}}, {"S0", {-1, 1, 2}, {+1, 7, 8}},
    {"P1", {+1, 3, 7}, {+1, 4, 8}}, {"P2", {-1, 4, 7}, {+1, 3, 8}}, {"P0", {+1, 3, 4}, {+1, 7, 8}},
    {"Q1", {+1, 3, 7}, {-1, 4, 8}}, {"Q2", {+1, 4, 7}, {+1, 3, 8}}, {"Q0", {-1, 3, 4}, {+1, 7, 8}},
}};

std::vector<NamedOperator> build(const GeneratorSet& gs, const std::array<ComponentSpec, 18>& specs,
                                 const std::string& prefix) {
  const GaussianRational half(make_rational(1, 2));
  std::vector<NamedOperator> out;
  for (const auto& s : specs) {
    ExactMatrix m = GaussianRational(s.first.sign) * gs(s.first.a, s.first.b) +
                    GaussianRational(s.second.sign) * gs(s.second.a, s.second.b);
    out.push_back({prefix + s.name, half * m, OperatorKind::raw});
  }
  return out;
}

void require(const GeneratorSet& gs, int p, int q, const char* what) {
  if (!(gs.metric() == Metric(p, q)))
    throw WrongSignature(std::string(what) + " needs signature " + Metric(p, q).to_string() + ", got " +
                         gs.metric().to_string());
}

}  // namespace

std::vector<NamedOperator> yao_basis(const GeneratorSet& gs) {
  require(gs, 4, 2, "yao_basis");
  return build(gs, kFirstHalf, "");
}

SplitBasis split_basis_so44(const GeneratorSet& gs) {
  require(gs, 4, 4, "split_basis_so44");
  return {build(gs, kFirstHalf, "1"), build(gs, kSecondHalf, "2")};
}

std::vector<NamedOperator> SplitBasis::all() const {
  std::vector<NamedOperator> out = first;
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace lietab
