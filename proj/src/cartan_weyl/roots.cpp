#include "lietab/cartan_weyl.hpp"

namespace lietab {

RootVector extract_root(const CartanSet& cartan, const NamedOperator& e) {
  if (e.matrix.is_zero()) throw std::invalid_argument("extract_root: '" + e.name + "' is zero");
  RootVector root;
  for (const auto& h : cartan.members) {
    auto lambda = scalar_multiple_of(commutator(h.matrix, e.matrix), e.matrix);
    if (!lambda) throw NotARootVector("'" + e.name + "' is not an eigenvector of [" + h.name + ", .]");
    if (!lambda->is_real())
      throw NotARootVector("'" + e.name + "' has complex eigenvalue " + lambda->to_string() + " under " + h.name);
    root.components.push_back(lambda->re());
  }
  return root;
}

RootTable root_system(const CartanSet& cartan, std::span<const NamedOperator> weyl) {
  RootTable table;
  for (const auto& h : cartan.members) table.cartan.push_back(h.name);
  for (const auto& e : weyl) table.roots.push_back({e.name, extract_root(cartan, e)});
  return table;
}

CartanSet hydrogen_cartan(const GeneratorSet& gs) {
  if (!(gs.metric() == Metric(4, 2))) throw WrongSignature("hydrogen labels exist only for so(4,2)");
  CartanSet cartan = find_cartan(gs);
  for (auto& h : cartan.members)
    for (const auto& alias : hydrogen_aliases())
      if (alias.pair.first < alias.pair.second && pair_name(alias.pair) == h.name &&
          (alias.name.back() == '3')) {
        h.name = alias.name;
        break;
      }
  return cartan;
}

}  // namespace lietab
