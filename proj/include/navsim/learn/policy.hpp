#pragma once

#include <array>

#include "navsim/learn/layers.hpp"
#include "navsim/sense/observation.hpp"

namespace navsim {

// Feature scaling keeps every input roughly in [-1, 1]; distances share a
// common 10 m scale so the same weights serve every map of this size class.
constexpr double kDistanceScale = 10.0;
constexpr int kHumanFeatureDim = 13;  // s_p (7) + s_r (6)

struct NetworkConfig {
  int lstm_hidden{64};
  std::array<int, 3> lidar_widths{128, 64, 64};
  std::array<int, 2> merge_widths{128, 128};
  double initial_log_std{-0.7};  // sigma ~ 0.5 pre-squash

  bool operator==(const NetworkConfig&) const = default;
};

struct EncodedObs {
  Eigen::VectorXd lidar;                   // 360, scaled by max range
  std::vector<Eigen::VectorXd> humans;     // farthest-first, 13 features each
  Eigen::Vector2d goal;                    // robot frame, scaled
  double time{0.0};                        // normalized episode time
};

inline EncodedObs encode_observation(const Observation& obs) {
  EncodedObs e;
  e.lidar.resize(kLidarBeams);
  for (int i = 0; i < kLidarBeams; ++i) e.lidar(i) = obs.lidar.ranges[i] / obs.lidar.max_range;
  e.humans.reserve(obs.humans.size());
  for (const auto& h : obs.humans) {
    Eigen::VectorXd f(kHumanFeatureDim);
    f << h.rel_position.x / kDistanceScale, h.rel_position.y / kDistanceScale,
        h.body_radius / kDistanceScale, h.distance / kDistanceScale,
        h.zone_radius / kDistanceScale, h.combined_clearance / kDistanceScale,
        h.class_id / 2.0,
        obs.robot.goal_distance / kDistanceScale, obs.robot.position.x / kDistanceScale,
        obs.robot.position.y / kDistanceScale, obs.robot.v_linear / kVLinearMax,
        obs.robot.v_angular / kVAngularMax, obs.robot.radius / kDistanceScale;
    e.humans.push_back(std::move(f));
  }
  e.goal = {obs.goal_in_robot_frame.x / kDistanceScale,
            obs.goal_in_robot_frame.y / kDistanceScale};
  e.time = obs.normalized_time;
  return e;
}

// Diagonal Gaussian over the pre-squash action u.
struct DiagGaussian {
  Eigen::Vector2d mean;
  Eigen::Vector2d log_std;

  Eigen::Vector2d sample(Rng& rng) const {
    return {mean(0) + std::exp(log_std(0)) * rng.normal(),
            mean(1) + std::exp(log_std(1)) * rng.normal()};
  }

  double log_prob(const Eigen::Vector2d& u) const {
    double lp = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double sigma = std::exp(log_std(i));
      const double z = (u(i) - mean(i)) / sigma;
      lp += -0.5 * z * z - log_std(i) - 0.5 * std::log(2.0 * M_PI);
    }
    return lp;
  }

  double entropy() const {
    return log_std.sum() + std::log(2.0 * M_PI * M_E);
  }
};

// Squash the unbounded sample into the command box [0,0.6] x [-pi/6,pi/6].
inline Action squash_to_action(const Eigen::Vector2d& u) {
  return {0.5 * kVLinearMax * (std::tanh(u(0)) + 1.0), kVAngularMax * std::tanh(u(1))};
}

// Actor-critic over (lidar ring, recurrent human encoding, goal, time).
// The semantic stream runs through an LSTM, the scan through three dense
// layers; both merge with goal and time into a shared trunk feeding the
// Gaussian policy head and the value head.
class PolicyNetwork {
 public:
  struct ForwardCache {
    EncodedObs input;
    LstmCell::SequenceCache lstm;
    Eigen::VectorXd lidar_z1, lidar_a1, lidar_z2, lidar_a2, lidar_z3, lidar_a3;
    Eigen::VectorXd merge_in, merge_z1, merge_a1, merge_z2, merge_a2;
  };

  struct Output {
    DiagGaussian dist;
    double value{0.0};
    ForwardCache cache;
  };

  PolicyNetwork() : PolicyNetwork(NetworkConfig{}, 0) {}

  explicit PolicyNetwork(const NetworkConfig& cfg, uint64_t init_seed)
      : cfg_(cfg),
        lstm_("lstm", kHumanFeatureDim, cfg.lstm_hidden),
        lidar1_("lidar1", kLidarBeams, cfg.lidar_widths[0]),
        lidar2_("lidar2", cfg.lidar_widths[0], cfg.lidar_widths[1]),
        lidar3_("lidar3", cfg.lidar_widths[1], cfg.lidar_widths[2]),
        merge1_("merge1", cfg.lstm_hidden + cfg.lidar_widths[2] + 3, cfg.merge_widths[0]),
        merge2_("merge2", cfg.merge_widths[0], cfg.merge_widths[1]),
        actor_mean_("actor_mean", cfg.merge_widths[1], 2),
        critic_("critic", cfg.merge_widths[1], 1),
        log_std_("log_std", 2, 1) {
    Rng rng(init_seed);
    lstm_.init(rng);
    lidar1_.init(rng);
    lidar2_.init(rng);
    lidar3_.init(rng);
    merge1_.init(rng);
    merge2_.init(rng);
    actor_mean_.init(rng, 0.01);  // near-zero policy head keeps early actions tame
    critic_.init(rng);
    log_std_.value.setConstant(cfg.initial_log_std);
  }

  const NetworkConfig& config() const { return cfg_; }

  Output forward(const EncodedObs& obs) const {
    Output out;
    ForwardCache& c = out.cache;
    c.input = obs;
    c.lstm = lstm_.forward(obs.humans);

    c.lidar_z1 = lidar1_.forward(obs.lidar);
    c.lidar_a1 = relu(c.lidar_z1);
    c.lidar_z2 = lidar2_.forward(c.lidar_a1);
    c.lidar_a2 = relu(c.lidar_z2);
    c.lidar_z3 = lidar3_.forward(c.lidar_a2);
    c.lidar_a3 = relu(c.lidar_z3);

    c.merge_in.resize(cfg_.lstm_hidden + cfg_.lidar_widths[2] + 3);
    c.merge_in << c.lstm.h_final, c.lidar_a3, obs.goal(0), obs.goal(1), obs.time;
    c.merge_z1 = merge1_.forward(c.merge_in);
    c.merge_a1 = relu(c.merge_z1);
    c.merge_z2 = merge2_.forward(c.merge_a1);
    c.merge_a2 = relu(c.merge_z2);

    out.dist.mean = actor_mean_.forward(c.merge_a2);
    out.dist.log_std = log_std_.value.col(0);
    out.value = critic_.forward(c.merge_a2)(0);
    return out;
  }

  Output forward(const Observation& obs) const { return forward(encode_observation(obs)); }

  // Accumulates parameter gradients for one sample given the gradients at
  // the network outputs.
  void backward(const ForwardCache& c, const Eigen::Vector2d& d_mean,
                const Eigen::Vector2d& d_log_std, double d_value) {
    log_std_.grad.col(0) += d_log_std;

    Eigen::VectorXd d_merge_a2 = actor_mean_.backward(c.merge_a2, d_mean);
    d_merge_a2 += critic_.backward(c.merge_a2, Eigen::VectorXd::Constant(1, d_value));

    const Eigen::VectorXd d_merge_z2 = relu_backward(c.merge_z2, d_merge_a2);
    const Eigen::VectorXd d_merge_a1 = merge2_.backward(c.merge_a1, d_merge_z2);
    const Eigen::VectorXd d_merge_z1 = relu_backward(c.merge_z1, d_merge_a1);
    const Eigen::VectorXd d_merge_in = merge1_.backward(c.merge_in, d_merge_z1);

    const Eigen::VectorXd d_h = d_merge_in.segment(0, cfg_.lstm_hidden);
    const Eigen::VectorXd d_lidar_a3 =
        d_merge_in.segment(cfg_.lstm_hidden, cfg_.lidar_widths[2]);

    if (!c.lstm.steps.empty()) lstm_.backward(c.lstm, d_h);

    const Eigen::VectorXd d_lidar_z3 = relu_backward(c.lidar_z3, d_lidar_a3);
    const Eigen::VectorXd d_lidar_a2 = lidar3_.backward(c.lidar_a2, d_lidar_z3);
    const Eigen::VectorXd d_lidar_z2 = relu_backward(c.lidar_z2, d_lidar_a2);
    const Eigen::VectorXd d_lidar_a1 = lidar2_.backward(c.lidar_a1, d_lidar_z2);
    const Eigen::VectorXd d_lidar_z1 = relu_backward(c.lidar_z1, d_lidar_a1);
    lidar1_.backward(c.input.lidar, d_lidar_z1);
  }

  ParamList parameters() {
    ParamList out;
    lstm_.collect(out);
    lidar1_.collect(out);
    lidar2_.collect(out);
    lidar3_.collect(out);
    merge1_.collect(out);
    merge2_.collect(out);
    actor_mean_.collect(out);
    critic_.collect(out);
    out.push_back(&log_std_);
    return out;
  }

 private:
  NetworkConfig cfg_;
  LstmCell lstm_;
  Linear lidar1_, lidar2_, lidar3_;
  Linear merge1_, merge2_;
  Linear actor_mean_;
  Linear critic_;
  ParamBlock log_std_;
};

}  // namespace navsim
