#include "segre/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace segre {

namespace {

// One orbit record per object, sorted by object, with 1-based display ids.
std::vector<int> display_rank_of_label(const std::vector<int>& display_order) {
  std::vector<int> rank(display_order.size());
  for (std::size_t r = 0; r < display_order.size(); ++r)
    rank[static_cast<std::size_t>(display_order[r])] = static_cast<int>(r) + 1;
  return rank;
}

template <class T, class Compare>
std::vector<std::size_t> sorted_object_order(const std::vector<T>& objects, Compare cmp) {
  std::vector<std::size_t> order(objects.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return cmp(objects[a], objects[b]); });
  return order;
}

}  // namespace

nlohmann::json make_document(int m, int field, const std::string& object,
                             nlohmann::json items) {
  nlohmann::json doc;
  doc["meta"]["m"] = m;
  doc["meta"]["field"] = field;
  doc["meta"]["object"] = object;
  doc["items"] = std::move(items);
  return doc;
}

std::string to_json_text(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

std::string point_string(const ProjectivePoint& p) { return p.tensor().to_string(); }

nlohmann::json line_json(const ProjectiveLine& l) {
  return nlohmann::json::array(
      {point_string(l.first()), point_string(l.second())});
}

nlohmann::json point_items(std::vector<ProjectivePoint> pts) {
  std::sort(pts.begin(), pts.end());
  nlohmann::json items = nlohmann::json::array();
  for (const ProjectivePoint& p : pts) items.push_back(point_string(p));
  return items;
}

nlohmann::json line_items(std::vector<ProjectiveLine> lines) {
  std::sort(lines.begin(), lines.end());
  nlohmann::json items = nlohmann::json::array();
  for (const ProjectiveLine& l : lines) items.push_back(line_json(l));
  return items;
}

nlohmann::json spread_items(std::vector<SpreadLine> spread) {
  std::sort(spread.begin(), spread.end(),
            [](const SpreadLine& a, const SpreadLine& b) { return a.line < b.line; });
  nlohmann::json items = nlohmann::json::array();
  for (const SpreadLine& s : spread) {
    nlohmann::json entry;
    entry["line"] = line_json(s.line);
    entry["contact"] = point_string(s.contact_even);
    entry["class"] = s.class_r;
    items.push_back(std::move(entry));
  }
  return items;
}

nlohmann::json substructure_items(const IncidenceStructure& s) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& [pi, li] : s.incidences) {
    nlohmann::json entry;
    entry["point"] = point_string(s.points[static_cast<std::size_t>(pi)]);
    entry["line"] = line_json(s.lines[static_cast<std::size_t>(li)]);
    items.push_back(std::move(entry));
  }
  return items;
}

nlohmann::json point_orbit_items(const OrbitPartition<ProjectivePoint>& orbits,
                                 const std::vector<int>& display_order) {
  const std::vector<int> rank = display_rank_of_label(display_order);
  nlohmann::json items = nlohmann::json::array();
  for (std::size_t i : sorted_object_order(orbits.objects, std::less<>{})) {
    nlohmann::json entry;
    entry["point"] = point_string(orbits.objects[i]);
    entry["orbit"] = rank[static_cast<std::size_t>(orbits.labels[i])];
    items.push_back(std::move(entry));
  }
  return items;
}

nlohmann::json line_orbit_items(const OrbitPartition<ProjectiveLine>& orbits,
                                const std::vector<int>& display_order) {
  const std::vector<int> rank = display_rank_of_label(display_order);
  nlohmann::json items = nlohmann::json::array();
  for (std::size_t i : sorted_object_order(orbits.objects, std::less<>{})) {
    nlohmann::json entry;
    entry["line"] = line_json(orbits.objects[i]);
    entry["orbit"] = rank[static_cast<std::size_t>(orbits.labels[i])];
    items.push_back(std::move(entry));
  }
  return items;
}

namespace {

template <class T, class RepFn>
nlohmann::json orbit_summary_impl(const OrbitPartition<T>& orbits,
                                  const std::vector<int>& display_order,
                                  RepFn&& rep) {
  nlohmann::json summary = nlohmann::json::array();
  for (std::size_t r = 0; r < display_order.size(); ++r) {
    const auto o = static_cast<std::size_t>(display_order[r]);
    nlohmann::json entry;
    entry["orbit"] = r + 1;
    entry["size"] = orbits.sizes[o];
    entry["representative"] = rep(orbits.representatives[o]);
    summary.push_back(std::move(entry));
  }
  return summary;
}

}  // namespace

nlohmann::json orbit_summary(const OrbitPartition<ProjectivePoint>& orbits,
                             const std::vector<int>& display_order) {
  return orbit_summary_impl(orbits, display_order,
                            [](const ProjectivePoint& p) { return point_string(p); });
}

nlohmann::json orbit_summary(const OrbitPartition<ProjectiveLine>& orbits,
                             const std::vector<int>& display_order) {
  return orbit_summary_impl(orbits, display_order,
                            [](const ProjectiveLine& l) { return line_json(l); });
}

std::string point_csv(std::vector<ProjectivePoint> pts) {
  std::sort(pts.begin(), pts.end());
  std::ostringstream out;
  for (const ProjectivePoint& p : pts) out << point_string(p) << '\n';
  return out.str();
}

std::string line_csv(std::vector<ProjectiveLine> lines) {
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const ProjectiveLine& l : lines)
    out << point_string(l.first()) << ',' << point_string(l.second()) << '\n';
  return out.str();
}

std::string spread_csv(std::vector<SpreadLine> spread) {
  std::sort(spread.begin(), spread.end(),
            [](const SpreadLine& a, const SpreadLine& b) { return a.line < b.line; });
  std::ostringstream out;
  for (const SpreadLine& s : spread)
    out << point_string(s.line.first()) << ',' << point_string(s.line.second())
        << ',' << point_string(s.contact_even) << ',' << s.class_r << '\n';
  return out.str();
}

std::string substructure_csv(const IncidenceStructure& s) {
  std::ostringstream out;
  for (const auto& [pi, li] : s.incidences) {
    const ProjectiveLine& l = s.lines[static_cast<std::size_t>(li)];
    out << point_string(s.points[static_cast<std::size_t>(pi)]) << ','
        << point_string(l.first()) << ',' << point_string(l.second()) << '\n';
  }
  return out.str();
}

std::string point_orbit_csv(const OrbitPartition<ProjectivePoint>& orbits,
                            const std::vector<int>& display_order) {
  const std::vector<int> rank = display_rank_of_label(display_order);
  std::ostringstream out;
  for (std::size_t i : sorted_object_order(orbits.objects, std::less<>{}))
    out << point_string(orbits.objects[i]) << ','
        << rank[static_cast<std::size_t>(orbits.labels[i])] << '\n';
  return out.str();
}

std::string line_orbit_csv(const OrbitPartition<ProjectiveLine>& orbits,
                           const std::vector<int>& display_order) {
  const std::vector<int> rank = display_rank_of_label(display_order);
  std::ostringstream out;
  for (std::size_t i : sorted_object_order(orbits.objects, std::less<>{}))
    out << point_string(orbits.objects[i].first()) << ','
        << point_string(orbits.objects[i].second()) << ','
        << rank[static_cast<std::size_t>(orbits.labels[i])] << '\n';
  return out.str();
}

}  // namespace segre
