#pragma once

#include "lietab/cartan_weyl.hpp"
#include "lietab/periodic.hpp"
#include "lietab/so_pq.hpp"

#include <json.hpp>

#include <string>

namespace lietab {

using Json = nlohmann::ordered_json;

Json to_json(const CommutationReport& report);

Json to_json(const RootTable& table);
/// Throws std::invalid_argument on a malformed document.
RootTable root_table_from_json(const Json& doc);

Json to_json(const MadelungKet& ket);
MadelungKet madelung_ket_from_json(const Json& doc);
Json to_json(const WeightKet& ket);
WeightKet weight_ket_from_json(const Json& doc);

Json to_json(const TowerSlice& slice);
/// Elements are rebuilt from their position; "anti-" symbols on n < 0 floors.
TowerSlice tower_slice_from_json(const Json& doc);

/// Two-space indent, trailing newline.
std::string dump(const Json& doc);

/// One panel per pair of Cartan axes holding the roots that lie in that plane;
/// rank-3 tables add an isometric panel.
std::string roots_svg(const RootTable& table);
/// Matter floors above the mirror line, antimatter floors below.
std::string tower_svg(const TowerSlice& slice);

}  // namespace lietab
