#include <catch2/catch_amalgamated.hpp>

#include "navsim/env/environment.hpp"
#include "navsim/env/random_scenario.hpp"

using namespace navsim;

namespace {

Scenario open_scenario() {
  Scenario sc;
  sc.name = "open";
  sc.map = make_open_map(20.0, 15.0);
  sc.robot_start = {2.0, 7.5};
  sc.robot_goal = {18.0, 7.5};
  return sc;
}

}  // namespace

TEST_CASE("reset places the scripted roster") {
  Scenario sc = open_scenario();
  for (int i = 0; i < 3; ++i) {
    PedestrianSpec p;
    p.cls = AgentClassId::Adult;
    p.start = {8.0 + 2.0 * i, 5.0};
    p.waypoints = {{8.0 + 2.0 * i, 10.0}};
    sc.peds.push_back(p);
  }
  Environment env(ZoneModel::Static, RewardSystem::StaticZone);
  const Observation obs = env.reset(sc);
  REQUIRE(env.world().pedestrians.size() == 3);
  for (const auto& p : env.world().pedestrians) {
    REQUIRE(p.cls.id == AgentClassId::Adult);
  }
  REQUIRE(env.world().sim_time == 0.0);
  REQUIRE(obs.normalized_time == 0.0);
}

TEST_CASE("goal inside a wall is rejected at reset") {
  Scenario sc = open_scenario();
  sc.map.obstacles.push_back({9.0, 6.0, 11.0, 9.0});
  sc.robot_goal = {10.0, 7.5};
  Environment env(ZoneModel::Static, RewardSystem::StaticZone);
  REQUIRE_THROWS_AS(env.reset(sc), ScenarioError);
}

TEST_CASE("fully walled-off goal is rejected as unreachable") {
  Scenario sc = open_scenario();
  sc.map.walls.push_back({{15.0, 0.0}, {15.0, 15.0}});
  Environment env(ZoneModel::Static, RewardSystem::StaticZone);
  REQUIRE_THROWS_AS(env.reset(sc), ScenarioError);
}

TEST_CASE("reaching the goal terminates with the arrival reward") {
  Scenario sc = open_scenario();
  sc.robot_start = {17.5, 7.5};  // 0.5 m from goal, heading +x
  Environment env(ZoneModel::Static, RewardSystem::StaticZone);
  env.reset(sc);
  StepResult last;
  for (int i = 0; i < 10 && !env.done(); ++i) last = env.step({0.6, 0.0});
  REQUIRE(last.done);
  REQUIRE(last.cause == TerminationCause::Goal);
  REQUIRE(last.reward.r_s == 2.0);
}

TEST_CASE("driving into a pedestrian terminates with the collision penalty") {
  Scenario sc = open_scenario();
  PedestrianSpec p;
  p.cls = AgentClassId::Elder;
  p.start = {4.0, 7.5};
  p.waypoints = {{4.0, 7.5}};
  sc.peds.push_back(p);
  Environment env(ZoneModel::Static, RewardSystem::StaticZone);
  env.reset(sc);
  StepResult last;
  for (int i = 0; i < 80 && !env.done(); ++i) last = env.step({0.6, 0.0});
  REQUIRE(last.done);
  REQUIRE(last.cause == TerminationCause::Collision);
  REQUIRE(last.reward.r_c == -4.0);
}

TEST_CASE("an idle episode runs out the clock") {
  Scenario sc = open_scenario();
  TaskConstraints constraints;
  constraints.timeout = 1.0;  // 10 steps
  Environment env(ZoneModel::Static, RewardSystem::StaticZone, constraints);
  env.reset(sc);
  StepResult last;
  int steps = 0;
  while (!env.done()) {
    last = env.step({0.0, 0.0});
    ++steps;
  }
  REQUIRE(steps == 10);
  REQUIRE(last.cause == TerminationCause::Timeout);
  REQUIRE_THROWS_AS(env.step({0.0, 0.0}), std::logic_error);
}

TEST_CASE("normalized time grows linearly to one at the timeout") {
  Scenario sc = open_scenario();
  TaskConstraints constraints;
  constraints.timeout = 2.0;
  Environment env(ZoneModel::Static, RewardSystem::StaticZone, constraints);
  env.reset(sc);
  const StepResult r1 = env.step({0.0, 0.0});
  REQUIRE(r1.observation.normalized_time == Catch::Approx(0.05));
}

TEST_CASE("episodes are a pure function of scenario and action sequence") {
  auto run = [] {
    Scenario sc = open_scenario();
    PedestrianSpec p;
    p.cls = AgentClassId::Child;
    p.start = {10.0, 5.0};
    p.waypoints = {{10.0, 10.0}, {10.0, 5.0}};
    sc.peds.push_back(p);
    Environment env(ZoneModel::Dynamic, RewardSystem::DynamicZone);
    env.reset(sc);
    std::vector<double> trace;
    Rng rng(41);
    while (!env.done()) {
      const StepResult r = env.step({rng.uniform(0.0, 0.6), rng.uniform(-0.4, 0.4)});
      trace.push_back(r.reward.total);
      trace.push_back(r.observation.robot.goal_distance);
    }
    return trace;
  };
  REQUIRE(run() == run());
}

TEST_CASE("curriculum promotes, holds, and demotes with a floor") {
  const auto stages = default_curriculum();
  REQUIRE(curriculum_update(0, 1.5, stages) == 1);
  REQUIRE(curriculum_update(2, 0.5, stages) == 2);
  REQUIRE(curriculum_update(0, -1.0, stages) == 0);
  REQUIRE(curriculum_update(5, 2.0, stages) == 5);  // ceiling
  REQUIRE(curriculum_update(3, -0.2, stages) == 2);
}

TEST_CASE("stage pedestrian counts never decrease") {
  const auto stages = default_curriculum();
  for (size_t i = 1; i < stages.size(); ++i) {
    REQUIRE(stages[i].pedestrian_count >= stages[i - 1].pedestrian_count);
  }
}

TEST_CASE("random scenarios honor the stage roster size and the seed") {
  const MapGeometry map = make_open_map(20.0, 15.0);
  CurriculumStage stage;
  stage.pedestrian_count = 6;
  const Scenario a = sample_random_scenario(map, 123, stage);
  REQUIRE(a.peds.size() == 6);
  REQUIRE(scenario_problems(a).empty());

  const Scenario b = sample_random_scenario(map, 123, stage);
  REQUIRE(a.robot_start == b.robot_start);
  REQUIRE(a.robot_goal == b.robot_goal);
  REQUIRE(a.peds.size() == b.peds.size());
  for (size_t i = 0; i < a.peds.size(); ++i) {
    REQUIRE(a.peds[i].start == b.peds[i].start);
    REQUIRE(a.peds[i].cls == b.peds[i].cls);
  }

  const Scenario c = sample_random_scenario(map, 124, stage);
  REQUIRE_FALSE(a.robot_start == c.robot_start);
}

TEST_CASE("an over-packed map fails scenario sampling") {
  const MapGeometry map = make_open_map(2.0, 2.0);
  CurriculumStage stage;
  stage.pedestrian_count = 9;
  REQUIRE_THROWS_AS(sample_random_scenario(map, 7, stage), ScenarioError);
}

TEST_CASE("fixed class split overrides the uniform mix") {
  const MapGeometry map = make_open_map(20.0, 15.0);
  CurriculumStage stage;
  stage.pedestrian_count = 3;
  stage.class_counts = {{0, 1, 2}};
  const Scenario sc = sample_random_scenario(map, 5, stage);
  int counts[3] = {0, 0, 0};
  for (const auto& p : sc.peds) counts[static_cast<int>(p.cls)]++;
  REQUIRE(counts[0] == 0);
  REQUIRE(counts[1] == 1);
  REQUIRE(counts[2] == 2);
}
