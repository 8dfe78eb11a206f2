#pragma once

#include "lietab/rep_labels.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lietab {

/// First max_z kets, ordered by (n+l, n), then s=-1/2 before s=+1/2, then m ascending.
std::vector<MadelungKet> madelung_sequence(std::size_t max_z);

class UnknownElement : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Z -> symbol, parsed from "z,symbol" CSV.
class ElementTable {
 public:
  static constexpr int kMaxZ = 120;

  /// Throws std::invalid_argument on a malformed file, gaps, or duplicates.
  static ElementTable parse_csv(std::string_view text);

  const std::string& symbol(int z) const;
  /// Throws UnknownElement whose message names the closest known symbol.
  int z_of(std::string_view symbol) const;
  std::size_t size() const { return symbols_.size(); }

 private:
  std::vector<std::string> symbols_;  // index z-1
};

/// Table compiled in from data/elements.csv.
const ElementTable& default_element_table();
std::string_view embedded_element_csv();

struct Element {
  int z = 0;
  std::string symbol;
  MadelungKet ket;
  bool anti = false;
  friend bool operator==(const Element&, const Element&) = default;
};

std::vector<Element> assign_elements(const ElementTable& table);
/// Throws std::invalid_argument when e is already a mirror.
Element antimatter_mirror(const Element& e);
/// Throws UnknownElement outside 1..120.
const Element& element_by_z(const std::vector<Element>& elements, int z);

struct TowerPoint {
  int m = 0;
  std::optional<Element> element;
  friend bool operator==(const TowerPoint&, const TowerPoint&) = default;
};

struct Subshell {
  int l = 0;
  std::vector<TowerPoint> points;
  friend bool operator==(const Subshell&, const Subshell&) = default;
};

struct Floor {
  int n = 0;
  std::vector<Subshell> subshells;
  friend bool operator==(const Floor&, const Floor&) = default;
};

struct TowerSlice {
  Spin s = Spin::minus_half;
  std::vector<Floor> floors;
  std::size_t occupied() const;
  friend bool operator==(const TowerSlice&, const TowerSlice&) = default;
};

/// Floors 1..8 carrying the elements of spin s; every (l, m) point is present.
TowerSlice projection_slice(const std::vector<Element>& elements, Spin s);
/// The slice with every floor mirrored to -n.
TowerSlice antimatter_slice(const TowerSlice& matter);

/// Sizes of consecutive runs that each start at an ns subshell.
std::vector<std::size_t> period_lengths(const std::vector<Element>& elements);

struct HaenzelStats {
  std::uint64_t points = 0;
  std::uint64_t transversals = 0;
  std::uint64_t rings = 0;
  friend bool operator==(const HaenzelStats&, const HaenzelStats&) = default;
};

HaenzelStats haenzel_stats(std::uint32_t n);

/// Occupied points at equal (l, m) on floors n and n+1 of one slice.
struct HomologStep {
  int l = 0;
  int m = 0;
  int lower_z = 0;
  int upper_z = 0;
};

std::vector<HomologStep> homolog_steps(const TowerSlice& slice);

}  // namespace lietab
