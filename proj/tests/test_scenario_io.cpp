#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "navsim/env/random_scenario.hpp"
#include "navsim/env/scenario.hpp"

using namespace navsim;

TEST_CASE("scenario survives a save/load round trip") {
  const MapGeometry map = make_open_map(20.0, 15.0);
  CurriculumStage stage;
  stage.pedestrian_count = 4;
  const Scenario sc = sample_random_scenario(map, 77, stage);

  const auto path = std::filesystem::temp_directory_path() / "navsim_roundtrip.json";
  save_scenario(sc, path.string());
  const Scenario back = load_scenario(path.string());
  std::filesystem::remove(path);

  REQUIRE(back.robot_start == sc.robot_start);
  REQUIRE(back.robot_heading == sc.robot_heading);
  REQUIRE(back.robot_goal == sc.robot_goal);
  REQUIRE(back.seed == sc.seed);
  REQUIRE(back.peds.size() == sc.peds.size());
  for (size_t i = 0; i < sc.peds.size(); ++i) {
    REQUIRE(back.peds[i].cls == sc.peds[i].cls);
    REQUIRE(back.peds[i].start == sc.peds[i].start);
    REQUIRE(back.peds[i].waypoints.size() == sc.peds[i].waypoints.size());
  }
  REQUIRE(back.map.walls.size() == sc.map.walls.size());
}

TEST_CASE("missing version field is rejected") {
  nlohmann::json j;
  j["map"]["bounds"] = {0.0, 0.0, 10.0, 10.0};
  j["robot"]["start"] = {1.0, 1.0};
  j["robot"]["goal"] = {9.0, 9.0};
  REQUIRE_THROWS_AS(scenario_from_json(j), ScenarioError);
}

TEST_CASE("malformed scenario json is a scenario error") {
  nlohmann::json j;
  j["version"] = 1;
  j["robot"]["start"] = {1.0, 1.0};  // map missing entirely
  REQUIRE_THROWS_AS(scenario_from_json(j), ScenarioError);
}

TEST_CASE("unknown pedestrian class is rejected") {
  nlohmann::json j;
  j["version"] = 1;
  j["map"]["bounds"] = {0.0, 0.0, 10.0, 10.0};
  j["robot"]["start"] = {1.0, 1.0, 0.0};
  j["robot"]["goal"] = {9.0, 9.0};
  j["peds"] = {{{"class", "giraffe"}, {"start", {5.0, 5.0}}, {"waypoints", {{6.0, 6.0}}}}};
  REQUIRE_THROWS_AS(scenario_from_json(j), std::invalid_argument);
}

TEST_CASE("problem list names each violated invariant") {
  Scenario sc;
  sc.map = make_open_map(10.0, 10.0);
  sc.robot_start = {1.0, 1.0};
  sc.robot_goal = {-5.0, 5.0};  // outside bounds
  PedestrianSpec p;
  p.cls = AgentClassId::Child;
  p.start = {1.0, 1.0};  // on top of the robot
  p.waypoints = {{2.0, 2.0}};
  sc.peds.push_back(p);
  const auto problems = scenario_problems(sc);
  REQUIRE(problems.size() >= 2);
}
