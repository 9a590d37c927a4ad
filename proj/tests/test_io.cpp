#include <doctest.h>

#include <json.hpp>
#include <regex>

#include "shamrock/oracle.hpp"
#include "shamrock/region_io.hpp"
#include "shamrock/render.hpp"

using namespace shamrock;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("region json round trip") {
  const auto r = build_s_cored_hexagon(1, 2, 2, 1, 0, 1, 1);
  const auto text = to_json(r);
  const auto j = nlohmann::json::parse(text);
  CHECK(j.at("family") == "s_cored_hexagon");
  CHECK(j.at("params") == std::vector<int>{1, 2, 2, 1, 0, 1, 1});
  CHECK(j.at("cells").size() == r.size());
  CHECK(j.at("cells")[0] == nlohmann::json::array({0, 0, r.cells()[0].orient == Orientation::Up ? "U" : "D"}));

  const auto back = region_from_json(text);
  CHECK(back == r);
  CHECK(back.spec() == r.spec());
  CHECK(to_json(back) == text);
}

TEST_CASE("anonymous regions and malformed input") {
  const Region r({{0, 0, Orientation::Down}, {0, 0, Orientation::Up}});
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("family").is_null());
  CHECK(j.at("cells") == nlohmann::json::parse(R"([[0,0,"U"],[0,0,"D"]])"));
  CHECK(region_from_json(to_json(r)) == r);

  CHECK_THROWS_AS(region_from_json("{"), RegionFormatError);
  CHECK_THROWS_AS(region_from_json(R"({"cells": [[0, 0, "X"]]})"), RegionFormatError);
  CHECK_THROWS_AS(region_from_json(R"({"cells": [[0, 0, "U"], [0, 0, "U"]]})"), RegionFormatError);
  CHECK_THROWS_AS(region_from_json(R"({"family": "disc", "params": [], "cells": []})"),
                  RegionFormatError);
}

TEST_CASE("svg rendering") {
  const auto hex = build_hexagon({7, 6, 8, 7, 6, 8});
  const auto svg = render_svg(hex);
  CHECK(occurrences(svg, "<path class=\"up\"") == hex.up_count());
  CHECK(occurrences(svg, "<path class=\"down\"") == hex.down_count());
  CHECK(svg == render_svg(hex));
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.find("e+") == std::string::npos);

  const auto unit = build_hexagon({1, 1, 1, 1, 1, 1});
  const auto tiled = render_svg(unit, find_one_tiling(unit));
  CHECK(occurrences(tiled, "<g class=\"lozenges\"") == 1);
  CHECK(occurrences(tiled, "<path fill=") == 3);
  // 40 px unit: width is 2 units plus margins, height 2 * sqrt(3)/2 units.
  CHECK(tiled.find("width=\"100.000\" height=\"89.282\"") != std::string::npos);

  const auto empty = render_svg(Region{});
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("</svg>") != std::string::npos);
  CHECK(occurrences(empty, "<path") == 0);
}

TEST_CASE("holes are left out of the picture") {
  const auto cored = build_cored_hexagon(2, 2, 2, 2);
  const auto full = build_hexagon({2, 4, 2, 4, 2, 4});
  CHECK(occurrences(render_svg(cored), "<path") + 4 == occurrences(render_svg(full), "<path"));
}

}  // TEST_SUITE
