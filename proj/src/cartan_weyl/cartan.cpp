#include "lietab/cartan_weyl.hpp"

namespace lietab {

namespace {

struct CliqueSearch {
  std::vector<std::vector<bool>> commutes;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  // Depth-first in increasing index order visits cliques lexicographically,
  // so the first clique of a given size is the canonical one.
  void extend(std::size_t next) {
    if (current.size() > best.size()) best = current;
    const std::size_t n = commutes.size();
    for (std::size_t v = next; v < n; ++v) {
      if (current.size() + (n - v) <= best.size()) return;
      bool ok = true;
      for (std::size_t u : current)
        if (!commutes[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  }
};

}  // namespace

CartanSet find_cartan(const GeneratorSet& gs) {
  auto gens = gs.generators();
  const std::size_t n = gens.size();
  CliqueSearch search;
  search.commutes.assign(n, std::vector<bool>(n, true));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      search.commutes[x][y] = search.commutes[y][x] = commutator(gens[x].matrix, gens[y].matrix).is_zero();
  search.extend(0);
  CartanSet out;
  for (std::size_t v : search.best) out.members.push_back({gens[v].name, gens[v].matrix, OperatorKind::cartan});
  return out;
}

bool is_maximal_abelian(const GeneratorSet& gs, const CartanSet& cartan) {
  for (const auto& a : cartan.members)
    for (const auto& b : cartan.members)
      if (!commutator(a.matrix, b.matrix).is_zero()) return false;
  for (const auto& g : gs.generators()) {
    bool member = false;
    for (const auto& h : cartan.members) member = member || h.matrix == g.matrix;
    if (member) continue;
    bool commutes_with_all = true;
    for (const auto& h : cartan.members)
      if (!commutator(h.matrix, g.matrix).is_zero()) {
        commutes_with_all = false;
        break;
      }
    if (commutes_with_all) return false;
  }
  return true;
}

}  // namespace lietab
