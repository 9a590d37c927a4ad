#include "shamrock/region_io.hpp"

#include <json.hpp>

namespace shamrock {

using nlohmann::json;

std::string to_json(const Region& region, int indent) {
  json doc;
  if (const auto& spec = region.spec()) {
    doc["family"] = std::string(family_name(spec->family));
    doc["params"] = spec->params;
  } else {
    doc["family"] = nullptr;
    doc["params"] = nullptr;
  }
  json cells = json::array();
  for (const auto& t : region.cells()) {
    cells.push_back({t.i, t.j, t.orient == Orientation::Up ? "U" : "D"});
  }
  doc["cells"] = std::move(cells);
  return doc.dump(indent);
}

Region region_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    std::optional<RegionSpec> spec;
    if (doc.contains("family") && !doc.at("family").is_null()) {
      const auto name = doc.at("family").get<std::string>();
      const auto family = parse_family(name);
      if (!family) throw RegionFormatError("unknown family: " + name);
      spec = RegionSpec{*family, doc.at("params").get<std::vector<int>>()};
    }
    std::vector<TriRef> cells;
    for (const auto& c : doc.at("cells")) {
      if (!c.is_array() || c.size() != 3) throw RegionFormatError("cell must be [i, j, \"U\"|\"D\"]");
      const auto o = c.at(2).get<std::string>();
      if (o != "U" && o != "D") throw RegionFormatError("cell orientation must be \"U\" or \"D\"");
      cells.push_back({c.at(0).get<int>(), c.at(1).get<int>(),
                       o == "U" ? Orientation::Up : Orientation::Down});
    }
    return Region(std::move(cells), std::move(spec));
  } catch (const json::exception& e) {
    throw RegionFormatError(e.what());
  } catch (const GeometryError& e) {
    throw RegionFormatError(e.what());
  }
}

}  // namespace shamrock
