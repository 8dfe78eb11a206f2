#include "lietab/periodic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace lietab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  return s;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) == std::tolower(static_cast<unsigned char>(b[j - 1]));
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace

ElementTable ElementTable::parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != "z,symbol") throw std::invalid_argument("element table needs a 'z,symbol' header");
  ElementTable table;
  std::set<std::string> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = trim(line);
    if (row.empty()) continue;
    auto comma = row.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("line " + std::to_string(line_no) + ": missing comma");
    int z = 0;
    auto zs = row.substr(0, comma);
    auto [ptr, ec] = std::from_chars(zs.data(), zs.data() + zs.size(), z);
    if (ec != std::errc{} || ptr != zs.data() + zs.size())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad atomic number");
    if (z != static_cast<int>(table.symbols_.size()) + 1)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected z = " +
                                  std::to_string(table.symbols_.size() + 1));
    std::string symbol(trim(row.substr(comma + 1)));
    if (symbol.empty()) throw std::invalid_argument("line " + std::to_string(line_no) + ": empty symbol");
    if (!seen.insert(symbol).second) throw std::invalid_argument("duplicate symbol " + symbol);
    table.symbols_.push_back(std::move(symbol));
  }
  if (table.symbols_.size() != kMaxZ)
    throw std::invalid_argument("element table has " + std::to_string(table.symbols_.size()) + " rows, expected 120");
  return table;
}

const std::string& ElementTable::symbol(int z) const {
  if (z < 1 || z > static_cast<int>(symbols_.size()))
    throw UnknownElement("Z = " + std::to_string(z) + " out of range 1.." + std::to_string(symbols_.size()));
  return symbols_[z - 1];
}

int ElementTable::z_of(std::string_view symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it != symbols_.end()) return static_cast<int>(it - symbols_.begin()) + 1;
  auto best = std::min_element(symbols_.begin(), symbols_.end(), [&](const std::string& a, const std::string& b) {
    return edit_distance(symbol, a) < edit_distance(symbol, b);
  });
  throw UnknownElement("unknown element '" + std::string(symbol) + "' (did you mean " + *best + "?)");
}

const ElementTable& default_element_table() {
  static const ElementTable table = ElementTable::parse_csv(embedded_element_csv());
  return table;
}

std::vector<Element> assign_elements(const ElementTable& table) {
  auto kets = madelung_sequence(ElementTable::kMaxZ);
  std::vector<Element> out;
  out.reserve(kets.size());
  for (std::size_t i = 0; i < kets.size(); ++i) {
    int z = static_cast<int>(i) + 1;
    out.push_back({z, table.symbol(z), kets[i], false});
  }
  return out;
}

Element antimatter_mirror(const Element& e) {
  if (e.anti) throw std::invalid_argument(e.symbol + " is already an antimatter mirror");
  Element out = e;
  out.ket.n = -e.ket.n;
  out.anti = true;
  out.symbol = "anti-" + e.symbol;
  return out;
}

const Element& element_by_z(const std::vector<Element>& elements, int z) {
  if (z < 1 || z > static_cast<int>(elements.size()))
    throw UnknownElement("Z = " + std::to_string(z) + " out of range 1.." + std::to_string(elements.size()));
  return elements[z - 1];
}

}  // namespace lietab
