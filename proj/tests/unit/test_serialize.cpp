#include <doctest.h>

#include "symorb/presets.hpp"
#include "symorb/serialize.hpp"

using namespace symorb;
using io::Json;

TEST_CASE("floats round to 12 significant digits") {
  CHECK(io::round12(0.1234567890123456) == 0.123456789012);
  CHECK(io::round12(-0.0) == 0.0);
  CHECK(io::number(2.0 / 3).dump() == "0.666666666667");
  CHECK(io::number(1e-17).dump() == "1e-17");
}

TEST_CASE("permutation and group encodings") {
  const auto g = parse_cycles("(1 3 2)", 4);
  CHECK(io::to_json(g).dump() == "[3,1,2,4]");
  const PermGroup C4 = cyclic_group(4);
  const Json j = io::to_json(C4);
  CHECK(j.dump() == R"({"n":4,"generators":[[2,3,4,1]],"name":"C4"})");
  const PermGroup back = io::group_from_json(j);
  CHECK(back.elements() == C4.elements());
  const PermGroup cyc = io::group_from_json(Json::parse(R"j({"n":4,"generators":["(1 2 3 4)"]})j"));
  CHECK(cyc.elements() == C4.elements());
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"n":4,"generators":[[1,2]]})")), InvalidArgument);
  CHECK_THROWS_AS(io::group_from_json(Json::parse(R"({"generators":[]})")), InvalidArgument);
}

TEST_CASE("state round trip") {
  const StateVector w = w_state(3);
  const Json j = io::to_json(w);
  CHECK(j["n"] == 3);
  CHECK(j["amplitudes"].size() == 8);
  const StateVector back = io::state_from_json(j);
  for (std::size_t i = 0; i < w.dim(); ++i) CHECK(std::abs(back[i] - w[i]) < 1e-12);
  CHECK_THROWS_AS(io::state_from_json(Json::parse(R"({"n":1,"d":2,"amplitudes":[[1]]})")), InvalidArgument);
}

TEST_CASE("reports are deterministic") {
  const auto a = io::dump(io::to_json(reduction_report(cyclic_group(8), 3)));
  const auto b = io::dump(io::to_json(reduction_report(cyclic_group(8), 3)));
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["stages"]["g_orbits"] == 7);
  CHECK(j["stages"]["normalizer_classes"] == 4);
  CHECK(j["stages"]["unique"] == 3);
}

TEST_CASE("dot drawings") {
  const auto r = reduction_report(preset("O6"), 2);
  const std::string dot = io::orbit_dot(r, parse_preset("O6"));
  CHECK(dot.rfind("graph orbits {", 0) == 0);
  CHECK(dot.find("cluster_0") != std::string::npos);
  CHECK(dot.find("cluster_1") != std::string::npos);
  CHECK(dot.find("cluster_2") == std::string::npos);
  CHECK(dot.find("fillcolor") != std::string::npos);
  const auto ring = io::layout(4, std::nullopt);
  CHECK(ring[0].first == doctest::Approx(0.0));
  CHECK(ring[0].second == doctest::Approx(1.0));
  CHECK(ring[1].first == doctest::Approx(1.0));
}
