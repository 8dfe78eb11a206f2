#include "lietab/cartan_weyl.hpp"

#include <algorithm>
#include <cctype>

namespace lietab {

std::string to_string(const LinearExpr& expr) {
  std::vector<std::pair<GaussianRational, std::string>> terms;
  for (const auto& t : expr) terms.emplace_back(t.coefficient, t.name);
  return format_combination(terms);
}

void OperatorDictionary::add(const NamedOperator& op) {
  auto [it, inserted] = ops_.emplace(op.name, op.matrix);
  if (!inserted) throw std::invalid_argument("duplicate operator name '" + op.name + "'");
  order_.push_back(op.name);
}

void OperatorDictionary::add(std::span<const NamedOperator> ops) {
  for (const auto& op : ops) add(op);
}

bool OperatorDictionary::contains(std::string_view name) const { return ops_.find(name) != ops_.end(); }

const ExactMatrix& OperatorDictionary::at(std::string_view name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw UnknownOperator("unknown operator '" + std::string(name) + "'");
  return it->second;
}

ExactMatrix OperatorDictionary::evaluate(const LinearExpr& expr) const {
  if (expr.empty()) {
    if (ops_.empty()) throw std::invalid_argument("cannot size an empty expression");
    return ExactMatrix(ops_.begin()->second.dim());
  }
  ExactMatrix out(at(expr.front().name).dim());
  for (const auto& t : expr) out += t.coefficient * at(t.name);
  return out;
}

std::vector<NamedOperator> raw_operators(const GeneratorSet& gs) {
  std::vector<NamedOperator> out;
  for (const auto& g : gs.generators()) out.push_back({g.name, g.matrix, OperatorKind::raw});
  return out;
}

bool ChainResult::holds() const {
  return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.holds; });
}

std::size_t EmulationReport::chains_holding() const {
  return static_cast<std::size_t>(
      std::count_if(chains.begin(), chains.end(), [](const ChainResult& c) { return c.holds(); }));
}

namespace {

Term t(long num, long den, std::string name) { return {GaussianRational(make_rational(num, den)), std::move(name)}; }

}  // namespace

std::vector<EmulationChain> yao_emulation_chains() {
  return {
      {"Em1", {{t(1, 1, "J3"), t(1, 1, "K3")}, {t(1, 1, "S0"), t(-1, 1, "T0")}, {t(1, 1, "L12")}}},
      {"Em2", {{t(1, 1, "J3"), t(-1, 1, "K3")}, {t(1, 1, "P0"), t(-1, 1, "Q0")}, {t(-1, 1, "L34")}}},
      {"Em3", {{t(1, 1, "P0"), t(1, 1, "Q0")}, {t(1, 1, "S0"), t(1, 1, "T0")}, {t(-1, 1, "L56")}}},
  };
}

std::vector<EmulationChain> split_emulation_chains() {
  return {
      {"Em1_2",
       {{t(1, 1, "1J3"), t(1, 1, "1K3")}, {t(1, 1, "1S0"), t(-1, 1, "1T0")}, {t(1, 1, "2T0"), t(-1, 1, "2S0")},
        {t(1, 1, "L12")}}},
      {"Em2_2",
       {{t(1, 1, "1J3"), t(-1, 1, "1K3")}, {t(1, 1, "1P0"), t(-1, 1, "1Q0")}, {t(1, 1, "2Q0"), t(-1, 1, "2P0")},
        {t(-1, 1, "L34")}}},
      {"Em3_2",
       {{t(1, 1, "1P0"), t(1, 1, "1Q0")}, {t(1, 1, "1S0"), t(1, 1, "1T0")}, {t(-1, 1, "2K3"), t(-1, 1, "2J3")},
        {t(-1, 1, "L56")}}},
      {"Em4_2",
       {{t(1, 1, "2K3"), t(-1, 1, "2J3")}, {t(1, 1, "2T0"), t(1, 1, "2S0")}, {t(1, 1, "2P0"), t(1, 1, "2Q0")},
        {t(1, 1, "L78")}}},
  };
}

EmulationReport emulation_check(const GeneratorSet& gs, std::span<const NamedOperator> basis,
                                std::span<const EmulationChain> chains) {
  OperatorDictionary dict;
  dict.add(basis);
  dict.add(raw_operators(gs));
  EmulationReport report;
  for (const auto& chain : chains) {
    ChainResult result{chain.label, {}};
    for (std::size_t k = 0; k + 1 < chain.members.size(); ++k) {
      const auto& lhs = chain.members[k];
      const auto& rhs = chain.members[k + 1];
      result.links.push_back({to_string(lhs), to_string(rhs), dict.evaluate(lhs) == dict.evaluate(rhs)});
    }
    report.chains.push_back(std::move(result));
  }
  return report;
}

namespace {

// "K1" -> stem "K", "2Q1" -> stem "2Q". Empty when the name is not a family component.
std::string family_stem(const std::string& name) {
  if (name.size() < 2 || name.size() > 3) return {};
  char letter = name[name.size() - 2];
  if (!std::isupper(static_cast<unsigned char>(letter))) return {};
  if (name.size() == 3 && name[0] != '1' && name[0] != '2') return {};
  return name.substr(0, name.size() - 1);
}

}  // namespace

std::vector<NamedOperator> ladder_operators(std::span<const NamedOperator> basis) {
  auto find = [&](const std::string& name) -> const NamedOperator* {
    for (const auto& op : basis)
      if (op.name == name) return &op;
    return nullptr;
  };
  const auto i = GaussianRational::imaginary_unit();
  std::vector<NamedOperator> out;
  for (const auto& op : basis) {
    if (op.name.back() != '1') continue;
    std::string stem = family_stem(op.name);
    if (stem.empty()) continue;
    const NamedOperator* second = find(stem + "2");
    if (!second) throw UnknownOperator("ladder family " + stem + " lacks component " + stem + "2");
    out.push_back({stem + "+", op.matrix + i * second->matrix, OperatorKind::weyl});
    out.push_back({stem + "-", op.matrix - i * second->matrix, OperatorKind::weyl});
  }
  return out;
}

RootVector RootVector::operator-() const {
  RootVector out;
  for (const auto& c : components) out.components.push_back(-c);
  return out;
}

bool RootVector::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Rational& c) { return sgn(c) == 0; });
}

std::string to_string(const RootVector& root) {
  std::string out = "(";
  for (std::size_t k = 0; k < root.components.size(); ++k) {
    if (k) out += ",";
    out += rational_to_string(root.components[k]);
  }
  return out + ")";
}

const RootVector& RootTable::at(std::string_view name) const {
  for (const auto& r : roots)
    if (r.name == name) return r.root;
  throw UnknownOperator("no root for '" + std::string(name) + "'");
}

}  // namespace lietab
