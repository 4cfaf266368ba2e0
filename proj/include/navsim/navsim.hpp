#pragma once

#include "navsim/core/agent.hpp"
#include "navsim/core/geometry.hpp"
#include "navsim/core/rng.hpp"
#include "navsim/core/robot.hpp"
#include "navsim/core/social_force.hpp"
#include "navsim/core/vec2.hpp"
#include "navsim/core/world.hpp"
#include "navsim/env/curriculum.hpp"
#include "navsim/env/environment.hpp"
#include "navsim/env/random_scenario.hpp"
#include "navsim/env/scenario.hpp"
#include "navsim/reward/rewards.hpp"
#include "navsim/sense/lidar.hpp"
#include "navsim/sense/observation.hpp"
#include "navsim/zones/zones.hpp"
