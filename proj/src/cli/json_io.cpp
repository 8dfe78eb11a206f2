#include "lietab/export.hpp"

#include <stdexcept>

namespace lietab {

namespace {

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& array_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array())
    throw std::invalid_argument(std::string("missing array '") + key + "'");
  return doc.at(key);
}

}  // namespace

Json to_json(const CommutationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"lhs_pair", pair_name(f.lhs)},
                        {"rhs_pair", pair_name(f.rhs)},
                        {"got", f.got ? Json(to_string(*f.got)) : Json(nullptr)},
                        {"expected", to_string(f.expected)}});
  }
  return {{"signature", report.signature.to_string()},
          {"pair_count", report.pair_count},
          {"failures", std::move(failures)}};
}

Json to_json(const RootTable& table) {
  Json roots = Json::array();
  for (const auto& entry : table.roots) {
    Json components = Json::array();
    for (const auto& c : entry.root.components) components.push_back(rational_to_string(c));
    roots.push_back({{"name", entry.name}, {"components", std::move(components)}});
  }
  return {{"cartan", table.cartan}, {"roots", std::move(roots)}};
}

RootTable root_table_from_json(const Json& doc) {
  RootTable table;
  table.cartan = field<std::vector<std::string>>(doc, "cartan");
  for (const auto& entry : array_field(doc, "roots")) {
    RootVector root;
    for (const auto& c : field<std::vector<std::string>>(entry, "components")) root.components.push_back(parse_rational(c));
    if (root.components.size() != table.cartan.size())
      throw std::invalid_argument("root has " + std::to_string(root.components.size()) + " components for " +
                                  std::to_string(table.cartan.size()) + " Cartan axes");
    table.roots.push_back({field<std::string>(entry, "name"), std::move(root)});
  }
  return table;
}

Json to_json(const MadelungKet& ket) {
  return {{"n", ket.n}, {"l", ket.l}, {"m", ket.m}, {"s", to_string(ket.s)}};
}

MadelungKet madelung_ket_from_json(const Json& doc) {
  return MadelungKet::make(field<int>(doc, "n"), field<int>(doc, "l"), field<int>(doc, "m"),
                           parse_spin(field<std::string>(doc, "s")));
}

Json to_json(const WeightKet& ket) {
  return {{"two_l", ket.l.twice()}, {"two_ldot", ket.l_dot.twice()}, {"two_m", ket.m.twice()}, {"two_mdot", ket.m_dot.twice()}};
}

WeightKet weight_ket_from_json(const Json& doc) {
  return WeightKet::make(HalfInt::from_twice(field<int>(doc, "two_l")), HalfInt::from_twice(field<int>(doc, "two_ldot")),
                         HalfInt::from_twice(field<int>(doc, "two_m")), HalfInt::from_twice(field<int>(doc, "two_mdot")));
}

Json to_json(const TowerSlice& slice) {
  Json floors = Json::array();
  for (const auto& floor : slice.floors) {
    Json subshells = Json::array();
    for (const auto& sub : floor.subshells) {
      Json points = Json::array();
      for (const auto& point : sub.points) {
        Json p = {{"m", point.m}};
        if (point.element) {
          p["z"] = point.element->z;
          p["symbol"] = point.element->symbol;
        }
        points.push_back(std::move(p));
      }
      subshells.push_back({{"l", sub.l}, {"points", std::move(points)}});
    }
    floors.push_back({{"n", floor.n}, {"subshells", std::move(subshells)}});
  }
  return {{"s", to_string(slice.s)}, {"floors", std::move(floors)}};
}

TowerSlice tower_slice_from_json(const Json& doc) {
  TowerSlice slice{parse_spin(field<std::string>(doc, "s")), {}};
  for (const auto& f : array_field(doc, "floors")) {
    Floor floor{field<int>(f, "n"), {}};
    for (const auto& s : array_field(f, "subshells")) {
      Subshell sub{field<int>(s, "l"), {}};
      for (const auto& p : array_field(s, "points")) {
        TowerPoint point{field<int>(p, "m"), std::nullopt};
        if (p.contains("z")) {
          MadelungKet ket = MadelungKet::make(floor.n, sub.l, point.m, slice.s);
          point.element = Element{field<int>(p, "z"), field<std::string>(p, "symbol"), ket, floor.n < 0};
        }
        sub.points.push_back(std::move(point));
      }
      floor.subshells.push_back(std::move(sub));
    }
    slice.floors.push_back(std::move(floor));
  }
  return slice;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace lietab
