#include "lietab/relations.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace lietab {

std::size_t RelationReport::holding() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const RelationResult& r) { return r.holds; }));
}

std::vector<RelationResult> RelationReport::deviations() const {
  std::vector<RelationResult> out;
  for (const auto& r : results)
    if (!r.holds) out.push_back(r);
  return out;
}

namespace {

bool is_raw_name(const std::string& name) {
  return name.size() == 3 && name[0] == 'L' && std::isdigit(static_cast<unsigned char>(name[1])) &&
         std::isdigit(static_cast<unsigned char>(name[2]));
}

// Describes a commutator value: a multiple of the printed right-hand side if
// possible, else a multiple of the first proportional named operator, else
// an expansion over the raw L_ab.
std::string describe(const OperatorDictionary& dict, const PrintedRelation& rel, const ExactMatrix& value) {
  if (value.is_zero()) return "0";
  auto as_multiple = [&](const std::string& name) -> std::optional<std::string> {
    const ExactMatrix& m = dict.at(name);
    if (m.is_zero()) return std::nullopt;
    auto lambda = scalar_multiple_of(value, m);
    if (!lambda) return std::nullopt;
    return to_string(LinearExpr{{*lambda, name}});
  };
  if (rel.rhs.size() == 1)
    if (auto s = as_multiple(rel.rhs.front().name)) return *s;
  for (const auto& name : dict.names())
    if (auto s = as_multiple(name)) return *s;
  std::vector<ExactMatrix> raw;
  std::vector<std::string> raw_names;
  for (const auto& name : dict.names())
    if (is_raw_name(name)) {
      raw.push_back(dict.at(name));
      raw_names.push_back(name);
    }
  if (!raw.empty())
    if (auto coeffs = BasisExpander(raw).expand(value)) {
      LinearExpr expr;
      for (std::size_t k = 0; k < coeffs->size(); ++k) expr.push_back({(*coeffs)[k], raw_names[k]});
      return to_string(expr);
    }
  return "(outside the named span)";
}

}  // namespace

RelationReport check_relations(const OperatorDictionary& dict, std::span<const PrintedRelation> relations) {
  RelationReport report;
  if (!relations.empty()) report.source = relations.front().source;
  for (const auto& rel : relations) {
    ExactMatrix value = commutator(dict.at(rel.lhs_a), dict.at(rel.lhs_b));
    ExactMatrix expected = rel.rhs.empty() ? ExactMatrix(value.dim()) : dict.evaluate(rel.rhs);
    bool holds = value == expected;
    std::string lhs = "[" + rel.lhs_a + "," + rel.lhs_b + "] = ";
    report.results.push_back({rel, holds, lhs + (holds ? to_string(rel.rhs) : describe(dict, rel, value))});
  }
  return report;
}

OperatorDictionary so42_dictionary(const GeneratorSet& gs) {
  OperatorDictionary dict;
  auto yao = yao_basis(gs);
  dict.add(yao);
  dict.add(ladder_operators(yao));
  auto sl2c = subalgebra_basis(gs, Subalgebra::sl2c);
  dict.add(sl2c.components);
  dict.add(sl2c.weyl);
  for (const auto& alias : hydrogen_aliases())
    dict.add({alias.name, gs(alias.pair.first, alias.pair.second), OperatorKind::raw});
  dict.add(raw_operators(gs));
  return dict;
}

OperatorDictionary so44_dictionary(const GeneratorSet& gs) {
  OperatorDictionary dict;
  auto split = split_basis_so44(gs);
  dict.add(split.first);
  dict.add(split.second);
  dict.add(ladder_operators(split.first));
  dict.add(ladder_operators(split.second));
  dict.add(raw_operators(gs));
  return dict;
}

}  // namespace lietab
