#include "psc/catalog.hpp"
#include "psc/classifier.hpp"
#include "psc/io.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace psc;
using psc::io::Json;

namespace {

Verdict classify(const io::ClassifyInput& in) {
  if (const auto* d = std::get_if<GroupDiagram>(&in)) return classify_cohom1(*d);
  return classify_homogeneous(std::get<HomogeneousPair>(in));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("catalog entries survive a JSON round trip") {
  for (const auto& item : catalog_items()) {
    const auto entry = catalog_lookup(item.name);
    if (std::holds_alternative<LieAlgebra>(entry)) continue;
    CAPTURE(item.name);
    const Json by_name = io::to_json(classify(io::parse_classify_input({{"catalog", item.name}})));
    const Json described = std::visit(
        [](const auto& x) -> Json {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, LieAlgebra>) return nullptr;
          else return io::to_json(x);
        },
        entry);
    const Json reparsed = io::parse_text(described.dump());
    CHECK(io::to_json(classify(io::parse_classify_input(reparsed))) == by_name);
  }
}

TEST_CASE("algebra input") {
  SUBCASE("missing antisymmetric partners are filled in") {
    const Json j = {{"dim", 3},
                    {"structure_constants", {{0, 1, 2, 1.0}, {1, 2, 0, 1.0}, {2, 0, 1, 1.0}}}};
    const LieAlgebra g = io::parse_algebra(j);
    CHECK(g.constant(1, 0, 2) == -1.0);
    CHECK(g.constant(0, 2, 1) == -1.0);
    CHECK(validate_algebra(g).passed());
  }
  SUBCASE("explicit partners are kept") {
    const Json j = {{"dim", 2}, {"structure_constants", {{0, 1, 0, 1.0}, {1, 0, 0, -0.5}}}};
    const LieAlgebra g = io::parse_algebra(j);
    CHECK(g.constant(1, 0, 0) == -0.5);
    CHECK_FALSE(validate_algebra(g).passed());
  }
  SUBCASE("catalog forms") {
    CHECK(io::parse_algebra("su2").dim() == 3);
    CHECK(io::parse_algebra({{"catalog", "t4"}}).dim() == 4);
    CHECK_THROWS_AS(io::parse_algebra("sl2"), UnknownCatalogEntry);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(io::parse_algebra(Json::array()), io::ParseError);
    CHECK_THROWS_AS(io::parse_algebra({{"dim", 3}, {"structure_constants", {{0, 1, 5, 1.0}}}}), io::ParseError);
    CHECK_THROWS_AS(io::parse_algebra({{"dim", 3}, {"structure_constants", {{0, 1, 2}}}}), io::ParseError);
    CHECK_THROWS_AS(io::parse_algebra({{"dim", -1}, {"structure_constants", Json::array()}}), io::ParseError);
  }
  SUBCASE("round trip") {
    const LieAlgebra g = catalog_algebra("su2+t1");
    const LieAlgebra h = io::parse_algebra(io::to_json(g));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) CHECK(g.constant(i, j, k) == h.constant(i, j, k));
  }
}

TEST_CASE("subgroup input") {
  CHECK(io::parse_subgroup("trivial", 3).is_trivial());
  CHECK(io::parse_subgroup("full", 3).algebra.dim() == 3);
  const auto z = io::parse_subgroup({{"finite_generators", {{0.5, 0.0}, {0.0, 0.5}}}}, 2);
  CHECK(z.algebra.dim() == 0);
  CHECK(z.component_count == 4);
  const auto line = io::parse_subgroup({{"basis", {{0, 0, 2}}}}, 3);
  CHECK(line.algebra.dim() == 1);
  CHECK(std::abs(line.algebra.basis()(2, 0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(io::parse_subgroup({{"basis", {{0, 1}}}}, 3), io::ParseError);
  CHECK_THROWS_AS(io::parse_subgroup("half", 3), io::ParseError);
  CHECK_THROWS_AS(io::parse_subgroup({{"components", 0}}, 3), io::ParseError);
}

TEST_CASE("classification input errors") {
  CHECK_THROWS_AS(io::parse_text("{\"kind\": "), io::ParseError);
  CHECK_THROWS_AS(io::parse_classify_input({{"kind", "sphere"}, {"G", "su2"}, {"H", "trivial"}}), io::ParseError);
  CHECK_THROWS_AS(io::parse_classify_input({{"kind", "interval"}, {"G", "su2"}, {"H", "trivial"}}), io::ParseError);
  CHECK_THROWS_AS(io::parse_classify_input({{"catalog", "diagram:nope"}}), UnknownCatalogEntry);
  CHECK_THROWS_AS(io::read_file("/nonexistent/psc.json"), std::exception);

  const auto in = io::parse_classify_input({{"kind", "ray"}, {"G", "su2"}, {"H", "trivial"}, {"K", "full"}});
  const Verdict v = classify(in);
  CHECK(v.psc);
  CHECK(v.n == 4);
}

TEST_CASE("verdict JSON layout") {
  const Json k = io::to_json(classify_cohom1(catalog_diagram("diagram:klein-bottle-x-s1")));
  CHECK(k["psc"] == false);
  CHECK(k["n"] == 3);
  CHECK(k["flat_type"] == "KleinTimesTorus");
  CHECK(k["witness"].is_null());
  CHECK(k["statements"].size() == 5);
  const Json s = io::to_json(classify_cohom1(catalog_diagram("diagram:su2-circle")));
  CHECK(s["psc"] == true);
  CHECK(s["flat_type"].is_null());
  CHECK(s["witness"]["type"] == "bracket");
}

TEST_CASE("profile requests") {
  const auto req = io::parse_profile_request(
      {{"variant", "gz"}, {"a", 0.25}, {"d", {2, 0, 1}}, {"delta", 0.02}});
  CHECK(req.variant == "gz");
  CHECK(req.params.a == 0.25);
  CHECK(req.params.b == 0.5);
  CHECK(req.params.dims == std::array<int, 3>{2, 0, 1});
  CHECK(req.delta == 0.02);
  CHECK_THROWS_AS(io::parse_profile_request({{"d", {1, 1}}}), io::ParseError);
  CHECK_THROWS_AS(io::parse_profile_request({{"a", "half"}}), io::ParseError);

  io::ProfileRequest bad;
  bad.variant = "cubic";
  CHECK_THROWS_AS(io::build_profile(bad), warp::ProfileError);

  io::ProfileRequest def;
  def.params.t_max = 10.0;
  const auto p = io::build_profile(def);
  CHECK(p.kind == warp::ProfileKind::Modified);
  CHECK(p.delta == doctest::Approx(0.01));
}

TEST_CASE("CSV samples") {
  io::ProfileRequest req;
  req.variant = "gz";
  req.params.dims = {1, 0, 1};
  req.params.t_max = 3.0;
  const auto p = io::build_profile(req);
  std::ostringstream a, b;
  io::write_samples_csv(a, p, 64);
  io::write_samples_csv(b, p, 64);
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,F0,F1,F2,dF0,dF1,dF2,ric_t,ric_0,ric_1,ric_2");
  const auto ts = io::sample_points(p, 64);
  CHECK(ts.front() == 0.0);
  CHECK(std::is_sorted(ts.begin(), ts.end()));
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto cells = split(line);
    REQUIRE(cells.size() == 11);
    CHECK(std::stod(cells[0]) == ts[rows]);
    CHECK(cells[2] == "nan");
    CHECK(cells[5] == "nan");
    CHECK(cells[9] == "nan");
    CHECK(std::isfinite(std::stod(cells[10])));
    ++rows;
  }
  CHECK(rows == ts.size());
  for (double bp : p.functions[2].breakpoints()) CHECK(std::binary_search(ts.begin(), ts.end(), bp));

  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(std::nan("")) == "nan");
  CHECK(std::stod(io::format_double(M_PI)) == M_PI);
}
