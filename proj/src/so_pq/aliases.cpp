#include "lietab/so_pq.hpp"

#include <array>
#include <stdexcept>

namespace lietab {

namespace {

const std::array<HydrogenAlias, 15> kAliases{{
    {"L1", {2, 3}}, {"L2", {3, 1}}, {"L3", {1, 2}},
    {"A1", {1, 4}}, {"A2", {2, 4}}, {"A3", {3, 4}},
    {"B1", {1, 5}}, {"B2", {2, 5}}, {"B3", {3, 5}},
    {"Γ1", {1, 6}}, {"Γ2", {2, 6}}, {"Γ3", {3, 6}},
    {"Δ1", {4, 6}}, {"Δ2", {4, 5}}, {"Δ3", {5, 6}},
}};

}  // namespace

std::span<const HydrogenAlias> hydrogen_aliases() { return kAliases; }

ExactMatrix alias_matrix(const GeneratorSet& gs, std::string_view name) {
  for (const auto& alias : kAliases)
    if (alias.name == name) return gs(alias.pair.first, alias.pair.second);
  throw std::out_of_range("unknown hydrogen alias '" + std::string(name) + "'");
}

}  // namespace lietab
