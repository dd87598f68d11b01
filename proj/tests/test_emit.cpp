#include <doctest.h>

#include "cliffspec/emit.hpp"
#include "cliffspec/operator_zoo.hpp"

using namespace cliffspec;

namespace {

ScanGrid small_grid() {
  ZooSpec spec;
  spec.kind = ZooSpec::Kind::two_projection;
  spec.z = 0.0;
  const HermitianTuple A = build(spec);
  Region region{{-1.0, -1.0}, {1.0, 1.0}, {5, 5}};
  return grid_scan(A, region, {true, true, false}, gamma_rep(2), 1);
}

}  // namespace

TEST_CASE("grid json validates against the embedded schema") {
  const ScanGrid grid = small_grid();
  const std::string doc = grid_to_json(grid);
  CHECK(validate_against_schema(doc, grid_schema_json()) == "");
}

TEST_CASE("curve json validates against the embedded schema") {
  const CurveTrace tr = curve_trace(1.0, {0.2, 0.5, 0.8, 1.0}, 100);
  const std::string doc = curve_to_json(tr);
  CHECK(validate_against_schema(doc, curve_schema_json()) == "");
}

TEST_CASE("schema validator catches structural violations") {
  CHECK(validate_against_schema("{}", grid_schema_json()) != "");
  CHECK(validate_against_schema("[1,2]", grid_schema_json()) != "");
  CHECK(validate_against_schema("{\"schema\":\"wrong/0\"}", grid_schema_json()) != "");
  CHECK(validate_against_schema("not json", grid_schema_json()) != "");
}

TEST_CASE("svg outputs contain the expected structure") {
  const ScanGrid grid = small_grid();
  const std::string svg = svg_heatmap(grid, 'c', grid.epsilon);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);

  const CurveTrace tr = curve_trace(1.0, {0.2, 0.5, 0.8}, 100);
  const std::string cs = svg_curve(tr);
  CHECK(cs.find("polyline") != std::string::npos);

  CHECK_THROWS_AS(svg_heatmap(grid, 'x', 0.1), std::invalid_argument);
}

TEST_CASE("curve csv has the documented column order") {
  const CurveTrace tr = curve_trace(1.0, {0.5}, 100);
  const std::string csv = curve_to_csv(tr);
  CHECK(csv.substr(0, csv.find('\n')) == "z,x,e,f,eig_small,residual");
}
