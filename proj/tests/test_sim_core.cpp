#include <catch2/catch_amalgamated.hpp>

#include "navsim/core/robot.hpp"
#include "navsim/core/rng.hpp"
#include "navsim/core/social_force.hpp"

using namespace navsim;

namespace {

World open_world(double w = 20.0, double h = 15.0) {
  World world;
  world.map = make_open_map(w, h);
  world.robot.position = {w / 2.0, h / 2.0};
  world.robot.goal = {w - 1.0, h / 2.0};
  return world;
}

PedestrianState make_ped(AgentClassId cls, Vec2 pos, Vec2 waypoint, int id = 0) {
  PedestrianState p;
  p.id = id;
  p.cls = agent_class(cls);
  p.position = pos;
  p.waypoints = {waypoint};
  return p;
}

}  // namespace

TEST_CASE("lone adult relaxes to walking speed within three relaxation times") {
  World world = open_world(30.0, 15.0);
  world.robot.position = {1.0, 1.0};  // far away, negligible repulsion
  world.pedestrians.push_back(make_ped(AgentClassId::Adult, {10.0, 8.0}, {20.0, 8.0}));
  const SfmParams prm;
  const double horizon = 3.0 * prm.relaxation_time;
  for (double t = 0.0; t < horizon; t += world.step_dt) {
    step_pedestrians(world, world.step_dt, prm);
  }
  REQUIRE(world.pedestrians[0].velocity.norm() >= 0.95 * 0.6);
}

TEST_CASE("lone elder settles at its class walking speed") {
  World world = open_world(30.0, 15.0);
  world.robot.position = {1.0, 1.0};
  world.pedestrians.push_back(make_ped(AgentClassId::Elder, {10.0, 8.0}, {20.0, 8.0}));
  for (int i = 0; i < 100; ++i) step_pedestrians(world, world.step_dt);
  const double speed = world.pedestrians[0].velocity.norm();
  REQUIRE(speed == Catch::Approx(0.1).margin(0.005));
}

TEST_CASE("pedestrian at rest on its waypoint stays put") {
  World world;  // isolated agent: no walls, robot ignored
  world.map.bounds = {0.0, 0.0, 20.0, 15.0};
  world.pedestrians.push_back(make_ped(AgentClassId::Adult, {10.0, 8.0}, {10.0, 8.0}));
  SfmParams prm;
  prm.robot_is_repulsive = false;
  const Vec2 before = world.pedestrians[0].position;
  step_pedestrians(world, world.step_dt, prm);
  REQUIRE(world.pedestrians[0].position == before);
}

TEST_CASE("overlapping agents at identical positions are rejected") {
  World world = open_world();
  world.pedestrians.push_back(make_ped(AgentClassId::Adult, {5.0, 5.0}, {10.0, 5.0}, 0));
  world.pedestrians.push_back(make_ped(AgentClassId::Child, {5.0, 5.0}, {10.0, 6.0}, 1));
  REQUIRE_THROWS_AS(step_pedestrians(world, world.step_dt), std::runtime_error);
}

TEST_CASE("free-flow mean speeds preserve the class ordering") {
  World world = open_world(40.0, 30.0);
  world.robot.position = {1.0, 1.0};
  world.pedestrians.push_back(make_ped(AgentClassId::Adult, {5.0, 10.0}, {35.0, 10.0}, 0));
  world.pedestrians.push_back(make_ped(AgentClassId::Child, {5.0, 15.0}, {35.0, 15.0}, 1));
  world.pedestrians.push_back(make_ped(AgentClassId::Elder, {5.0, 20.0}, {35.0, 20.0}, 2));
  double mean[3] = {0.0, 0.0, 0.0};
  const int steps = 100;  // 10 s
  for (int i = 0; i < steps; ++i) {
    step_pedestrians(world, world.step_dt);
    for (int c = 0; c < 3; ++c) mean[c] += world.pedestrians[c].velocity.norm() / steps;
  }
  REQUIRE(mean[0] > mean[1]);
  REQUIRE(mean[1] > mean[2]);
}

TEST_CASE("pedestrians do not sink into walls beyond the soft tolerance") {
  World world = open_world(10.0, 6.0);
  world.robot.position = {9.0, 5.0};
  // Waypoint behind the bottom wall forces a sustained head-on push.
  auto ped = make_ped(AgentClassId::Adult, {5.0, 2.0}, {5.0, -3.0});
  ped.waypoints = {{5.0, -3.0}};
  world.pedestrians.push_back(ped);
  const auto segs = world.map.solid_segments();
  for (int i = 0; i < 200; ++i) {
    step_pedestrians(world, world.step_dt);
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& s : segs) {
      clearance = std::min(clearance, distance_to_segment(s, world.pedestrians[0].position));
    }
    const double r = world.pedestrians[0].cls.body_radius;
    REQUIRE(clearance >= r - 0.05 * r);
  }
}

TEST_CASE("waypoint lists loop once a waypoint is reached") {
  World world = open_world();
  world.robot.position = {1.0, 1.0};
  auto ped = make_ped(AgentClassId::Adult, {10.0, 8.0}, {10.0, 8.0});
  ped.waypoints = {{10.25, 8.0}, {12.0, 8.0}};
  world.pedestrians.push_back(ped);
  step_pedestrians(world, world.step_dt);  // already within 0.3 m of the first
  REQUIRE(world.pedestrians[0].waypoint_index == 1);
}

TEST_CASE("identical seed and action sequence reproduce the trajectory bit for bit") {
  auto run = [] {
    World world = open_world();
    world.pedestrians.push_back(make_ped(AgentClassId::Adult, {8.0, 8.0}, {18.0, 8.0}, 0));
    world.pedestrians.push_back(make_ped(AgentClassId::Elder, {12.0, 6.0}, {2.0, 6.0}, 1));
    std::vector<double> log;
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      step_pedestrians(world, world.step_dt);
      step_robot(world, {rng.uniform(0.0, 0.6), rng.uniform(-0.5, 0.5)}, world.step_dt);
      log.push_back(world.robot.position.x);
      log.push_back(world.robot.position.y);
      for (const auto& p : world.pedestrians) {
        log.push_back(p.position.x);
        log.push_back(p.position.y);
      }
    }
    return log;
  };
  REQUIRE(run() == run());
}

TEST_CASE("robot holds pose under the identity action") {
  World world = open_world();
  const RobotState before = world.robot;
  step_robot(world, {0.0, 0.0}, 1.0);
  REQUIRE(world.robot.position == before.position);
  REQUIRE(world.robot.heading == before.heading);
}

TEST_CASE("robot advances straight at full speed") {
  World world = open_world();
  world.robot.position = {5.0, 5.0};
  world.robot.heading = 0.0;
  step_robot(world, {0.6, 0.0}, 1.0);
  REQUIRE(world.robot.position.x == Catch::Approx(5.6));
  REQUIRE(world.robot.position.y == Catch::Approx(5.0));
}

TEST_CASE("pure rotation changes heading only") {
  World world = open_world();
  world.robot.position = {5.0, 5.0};
  world.robot.heading = 0.0;
  step_robot(world, {0.0, M_PI / 6.0}, 1.0);
  REQUIRE(world.robot.heading == Catch::Approx(M_PI / 6.0));
  REQUIRE(world.robot.position == Vec2{5.0, 5.0});
}

TEST_CASE("out-of-bounds commands are rejected, not clamped") {
  World world = open_world();
  REQUIRE_THROWS_AS(step_robot(world, {0.7, 0.0}, 0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(step_robot(world, {-0.1, 0.0}, 0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(step_robot(world, {0.3, 0.6}, 0.1), std::invalid_argument);
}

TEST_CASE("per-step pose change is bounded by the action limits") {
  World world = open_world();
  world.robot.position = {10.0, 7.0};
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Vec2 before = world.robot.position;
    const double heading_before = world.robot.heading;
    const Action a{rng.uniform(0.0, 0.6), rng.uniform(-M_PI / 6.0, M_PI / 6.0)};
    step_robot(world, a, world.step_dt);
    REQUIRE((world.robot.position - before).norm() <= 0.6 * world.step_dt + 1e-12);
    const double dh = std::abs(wrap_angle(world.robot.heading - heading_before));
    REQUIRE(dh <= (M_PI / 6.0) * world.step_dt + 1e-12);
  }
}
