#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "segre/orbits.hpp"
#include "segre/projective.hpp"
#include "segre/varieties.hpp"

namespace segre {

// All exporters emit objects in canonical coordinate order (points by
// coordinate string, lines by their canonical point pair), so repeated runs
// produce byte-identical files.

// Document skeleton: {"meta": {"field": .., "m": .., "object": ..},
// "items": [...]}; orbit documents also carry a "summary" array.
nlohmann::json make_document(int m, int field, const std::string& object,
                             nlohmann::json items);

// Serialized JSON text: two-space indentation, sorted keys, trailing newline.
std::string to_json_text(const nlohmann::json& doc);

std::string point_string(const ProjectivePoint& p);
nlohmann::json line_json(const ProjectiveLine& l);  // ["E:..", "E:.."]

// Item builders (one per exportable object kind).
nlohmann::json point_items(std::vector<ProjectivePoint> pts);
nlohmann::json line_items(std::vector<ProjectiveLine> lines);
nlohmann::json spread_items(std::vector<SpreadLine> spread);
nlohmann::json substructure_items(const IncidenceStructure& s);
// Orbit items carry 1-based ids following the given display order.
nlohmann::json point_orbit_items(const OrbitPartition<ProjectivePoint>& orbits,
                                 const std::vector<int>& display_order);
nlohmann::json line_orbit_items(const OrbitPartition<ProjectiveLine>& orbits,
                                const std::vector<int>& display_order);
nlohmann::json orbit_summary(const OrbitPartition<ProjectivePoint>& orbits,
                             const std::vector<int>& display_order);
nlohmann::json orbit_summary(const OrbitPartition<ProjectiveLine>& orbits,
                             const std::vector<int>& display_order);

// CSV renderings: no header row, one record per line, fields comma-separated.
std::string point_csv(std::vector<ProjectivePoint> pts);
std::string line_csv(std::vector<ProjectiveLine> lines);
std::string spread_csv(std::vector<SpreadLine> spread);
std::string substructure_csv(const IncidenceStructure& s);
std::string point_orbit_csv(const OrbitPartition<ProjectivePoint>& orbits,
                            const std::vector<int>& display_order);
std::string line_orbit_csv(const OrbitPartition<ProjectiveLine>& orbits,
                           const std::vector<int>& display_order);

}  // namespace segre
