#pragma once

#include <cstdio>
#include <deque>
#include <functional>
#include <memory>

#include "navsim/env/environment.hpp"
#include "navsim/env/random_scenario.hpp"
#include "navsim/learn/checkpoint.hpp"

namespace navsim {

// Produces the layout for the next episode; stage carries the curriculum
// difficulty for randomized providers.
using ScenarioProvider =
    std::function<Scenario(uint64_t episode_seed, const CurriculumStage& stage)>;

inline ScenarioProvider random_scenario_provider(MapGeometry map, double robot_radius = 0.3) {
  return [map = std::move(map), robot_radius](uint64_t seed, const CurriculumStage& stage) {
    return sample_random_scenario(map, seed, stage, robot_radius);
  };
}

inline ScenarioProvider fixed_scenario_provider(Scenario sc) {
  return [sc = std::move(sc)](uint64_t, const CurriculumStage&) { return sc; };
}

inline ScenarioProvider cycling_scenario_provider(std::vector<Scenario> set) {
  if (set.empty()) throw ConfigError("cycling_scenario_provider: empty scenario set");
  return [set = std::move(set)](uint64_t seed, const CurriculumStage&) {
    return set[seed % set.size()];
  };
}

struct TrainOptions {
  long total_steps{200000};
  uint64_t seed{0};
  ZoneModel zone_model{ZoneModel::Static};
  RewardSystem reward_system{RewardSystem::StaticZone};
  TaskConstraints constraints{};
  bool use_curriculum{true};
  int initial_stage{0};
  int reward_window{100};      // episodes in the rolling statistics
  std::string log_path;        // CSV, appended row by row; empty keeps it in memory
  std::string checkpoint_path; // final weights; empty skips persistence
  int checkpoint_interval{0};  // additionally every N updates when > 0
};

struct TrainLogRow {
  int update{0};
  long total_steps{0};
  double mean_reward{0.0};
  double success_rate{0.0};
  int stage{0};
  double policy_loss{0.0};
  double value_loss{0.0};
  double entropy{0.0};
  double approx_kl{0.0};
};

inline const char* train_log_header() {
  return "update,steps,mean_reward,success_rate,stage,policy_loss,value_loss,entropy,approx_kl";
}

inline std::string format_log_row(const TrainLogRow& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%d,%ld,%.17g,%.17g,%d,%.17g,%.17g,%.17g,%.17g", r.update,
                r.total_steps, r.mean_reward, r.success_rate, r.stage, r.policy_loss,
                r.value_loss, r.entropy, r.approx_kl);
  return buf;
}

struct EpisodeOutcome {
  double reward_sum{0.0};
  TerminationCause cause{TerminationCause::Running};
  int steps{0};
};

struct TrainResult {
  std::vector<TrainLogRow> log;
  std::vector<EpisodeOutcome> episodes;
  int final_stage{0};
  long steps_run{0};
};

// Collection/update loop: n_envs environments stepped sequentially feed one
// PPO learner; curriculum moves on the rolling mean episode reward once the
// window is filled. Fully deterministic for a fixed seed.
inline TrainResult train(PolicyNetwork& net, const TrainerConfig& cfg,
                         const TrainOptions& options, const ScenarioProvider& provider) {
  if (cfg.n_envs < 1) throw ConfigError("train: n_envs must be >= 1");
  const int steps_per_env = std::max(1, cfg.rollout_length / cfg.n_envs);

  const auto stages = default_curriculum();
  int stage = std::clamp(options.initial_stage, 0, static_cast<int>(stages.size()) - 1);

  struct EnvSlot {
    std::unique_ptr<Environment> env;
    Observation obs;
    EncodedObs enc;
    double episode_return{0.0};
    int episode_steps{0};
    bool needs_reset{true};
  };
  std::vector<EnvSlot> slots(static_cast<size_t>(cfg.n_envs));
  for (auto& s : slots) {
    s.env = std::make_unique<Environment>(options.zone_model, options.reward_system,
                                          options.constraints);
  }

  AdamOptimizer opt(cfg.learning_rate);
  Rng action_rng(options.seed ^ 0x5deece66dULL);
  Rng shuffle_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  uint64_t episode_seed = options.seed;

  TrainResult result;
  result.final_stage = stage;
  std::deque<double> reward_window;
  std::deque<int> success_window;

  std::ofstream log_file;
  if (!options.log_path.empty()) {
    log_file.open(options.log_path);
    if (!log_file) throw ConfigError("train: cannot write log file " + options.log_path);
    log_file << train_log_header() << "\n";
  }

  int update = 0;
  while (result.steps_run < options.total_steps) {
    ++update;
    Rollout rollout;
    rollout.envs.resize(slots.size());

    for (size_t ei = 0; ei < slots.size(); ++ei) {
      EnvSlot& slot = slots[ei];
      EnvRollout& env_roll = rollout.envs[ei];
      for (int t = 0; t < steps_per_env; ++t) {
        if (slot.needs_reset) {
          const Scenario sc = provider(episode_seed++, stages[static_cast<size_t>(stage)]);
          slot.obs = slot.env->reset(sc);
          slot.enc = encode_observation(slot.obs);
          slot.episode_return = 0.0;
          slot.episode_steps = 0;
          slot.needs_reset = false;
        }
        auto out = net.forward(slot.enc);
        const Eigen::Vector2d u = out.dist.sample(action_rng);

        Transition tr;
        tr.obs = slot.enc;
        tr.u = u;
        tr.log_prob = out.dist.log_prob(u);
        tr.value = out.value;

        const StepResult sr = slot.env->step(squash_to_action(u));
        tr.reward = sr.reward.total;
        tr.done = sr.done;
        env_roll.steps.push_back(std::move(tr));

        slot.episode_return += sr.reward.total;
        slot.episode_steps += 1;

        if (sr.done) {
          result.episodes.push_back({slot.episode_return, sr.cause, slot.episode_steps});
          reward_window.push_back(slot.episode_return);
          success_window.push_back(sr.cause == TerminationCause::Goal ? 1 : 0);
          while (static_cast<int>(reward_window.size()) > options.reward_window) {
            reward_window.pop_front();
            success_window.pop_front();
          }
          slot.needs_reset = true;
        } else {
          slot.obs = sr.observation;
          slot.enc = encode_observation(slot.obs);
        }
      }
      env_roll.bootstrap_value =
          (!env_roll.steps.empty() && env_roll.steps.back().done)
              ? 0.0
              : net.forward(slot.enc).value;
    }

    const PpoStats stats = ppo_update(net, rollout, cfg, opt, shuffle_rng);
    result.steps_run += static_cast<long>(rollout.size());

    double mean_reward = 0.0;
    double success_rate = 0.0;
    if (!reward_window.empty()) {
      for (double r : reward_window) mean_reward += r;
      mean_reward /= static_cast<double>(reward_window.size());
      for (int s : success_window) success_rate += s;
      success_rate /= static_cast<double>(success_window.size());
    }

    if (options.use_curriculum &&
        static_cast<int>(reward_window.size()) >= options.reward_window) {
      stage = curriculum_update(stage, mean_reward, stages);
    }

    TrainLogRow row{update,          result.steps_run, mean_reward,
                    success_rate,    stage,            stats.policy_loss,
                    stats.value_loss, stats.entropy,   stats.approx_kl};
    result.log.push_back(row);
    if (log_file) {
      log_file << format_log_row(row) << "\n";
      log_file.flush();
    }

    if (options.checkpoint_interval > 0 && update % options.checkpoint_interval == 0 &&
        !options.checkpoint_path.empty()) {
      save_checkpoint(net, options.checkpoint_path);
    }
  }

  result.final_stage = stage;
  if (!options.checkpoint_path.empty()) save_checkpoint(net, options.checkpoint_path);
  return result;
}

}  // namespace navsim
