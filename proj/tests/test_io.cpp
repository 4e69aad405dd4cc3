#include <doctest.h>

#include <regex>

#include "shadowpi/render.hpp"
#include "support.hpp"

using namespace testing;

namespace {

int count_of(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(rational_to_json(mpq_class(3, 4)) == json::parse("[3, 4]"));
  CHECK(rational_from_json(json::parse("[6, -8]")) == mpq_class(-3, 4));
  CHECK(rational_from_json(json::parse("5")) == 5);
  const mpq_class big(mpz_class("98765432109876543210987654321"), 11);
  CHECK(rational_to_json(big)[0].is_string());
  CHECK(rational_from_json(rational_to_json(big)) == big);
  CHECK(error_of([] { rational_from_json(json::parse("[1, 0]")); }) == ErrorCode::ParseError);
  CHECK(error_of([] { rational_from_json(json::parse("\"abc\"")); }) == ErrorCode::ParseError);
}

TEST_CASE("schema round trips") {
  const json divide = read_json_file(fixture("fig16.divide.json"));
  CHECK(divide_input_to_json(divide_input_from_json(divide)) ==
        divide_input_to_json(divide_input_from_json(divide_input_to_json(divide_input_from_json(divide)))));
  const json arr = read_json_file(fixture("fig18.arr.json"));
  const json arr2 = arrangement_to_json(arrangement_from_json(arr));
  CHECK(arrangement_to_json(arrangement_from_json(arr2)) == arr2);
  CHECK(arrangement_from_json(arr2).lines == arrangement_from_json(arr).lines);

  for (const char* name : {"fig15.shadow.json", "fig16.shadow.json", "fig18.shadow.json"}) {
    const json j = read_json_file(fixture(name));
    const auto s = shadow_from_json(j);
    CHECK(shadow_to_json(s) == j);
    const CuttingSystem cs = random_cut(s.map(), 5);
    const json cj = cutting_to_json(s.map(), cs);
    CHECK(cutting_from_json(s.map(), cj).parent_dart == cs.parent_dart);
    const Presentation p = present(s, select_regions(s, Preset::Yac), cs);
    const Presentation q = presentation_from_json(presentation_to_json(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
  }
}

TEST_CASE("shadow file errors") {
  json j = read_json_file(fixture("fig15.shadow.json"));
  json wrong = j;
  wrong["schema"] = "shadow/2";
  CHECK(error_of([&] { shadow_from_json(wrong); }) == ErrorCode::SchemaMismatch);
  json missing = j;
  missing.erase("over");
  CHECK(error_of([&] { shadow_from_json(missing); }) == ErrorCode::ParseError);
  json partial = j;
  partial["regions"][1].erase("label");
  CHECK(error_of([&] { shadow_from_json(partial); }) == ErrorCode::ParseError);
  json no_gleam = j;
  no_gleam["regions"].erase(1);
  CHECK(error_of([&] { shadow_from_json(no_gleam); }) == ErrorCode::ParseError);
  json broken = j;
  broken["edges"][0][1] = broken["edges"][0][0];
  CHECK(error_of([&] { shadow_from_json(broken); }) == ErrorCode::BrokenInvolution);
  CHECK(error_of([] { read_json_file("/nonexistent/x.json"); }) == ErrorCode::ParseError);

  const Error e(ErrorCode::InvalidCut, "bad", {{"region", 3}});
  const json ej = e.to_json();
  CHECK(ej["code"] == "InvalidCut");
  CHECK(ej["message"] == "bad");
  CHECK(ej["context"]["region"] == 3);
}

TEST_CASE("cutting file errors") {
  const auto s = load_shadow("fig15.shadow.json");
  json cj = cutting_to_json(s.map(), auto_cut(s.map()));
  cj["parents"].erase(0);
  CHECK(error_of([&] { cutting_from_json(s.map(), cj); }) == ErrorCode::InvalidCut);
}

TEST_CASE("svg rendering") {
  const auto s = load_shadow("fig15.shadow.json");
  const std::string svg = render_svg(s);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_of(svg, "<circle") == 4);
  CHECK(count_of(svg, ">c 0</text>") == 4);
  CHECK(count_of(svg, ">b -1</text>") == 1);
  CHECK(svg.find("schematic") == std::string::npos);
  CHECK(svg.find("font-weight") == std::string::npos);
  CHECK(render_svg(s) == svg);

  RenderOptions opts;
  opts.selection = select_regions(s, Preset::Yac);
  CHECK(count_of(render_svg(s, opts), "font-weight=\"bold\"") == 4);
  opts.selection = select_regions(s, std::vector<RegionId>{});
  CHECK(render_svg(s, opts) == svg);

  const auto arr = load_shadow("fig18.shadow.json");
  const std::string arr_svg = render_svg(arr);
  CHECK(arr_svg.find("schematic") == std::string::npos);
  CHECK(count_of(arr_svg, "<circle") == 32);
  CHECK(count_of(arr_svg, ">a 1/2</text>") == 16);

  const auto bare = with_c_gleams(alternating(closed_curve(trefoil_polygon())));
  const std::string schematic = render_svg(bare);
  CHECK(schematic.find("schematic") != std::string::npos);
  CHECK(count_of(schematic, "<circle") == 3);
  // No NaN or infinity in coordinates.
  CHECK(schematic.find("nan") == std::string::npos);
  CHECK(schematic.find("inf") == std::string::npos);
}
