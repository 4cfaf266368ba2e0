#pragma once

#include <numeric>
#include <span>

#include "navsim/learn/policy.hpp"

namespace navsim {

struct TrainerConfig {
  double gamma{0.95};
  double gae_lambda{0.95};
  double clip_ratio{0.2};
  double learning_rate{1e-4};
  int rollout_length{2048};  // transitions per update across all environments
  int minibatch_size{256};
  int epochs{4};
  double entropy_coef{0.005};
  double value_coef{0.5};
  int n_envs{4};
  double kl_hard_cap{0.05};   // early-stop threshold on approx KL
  double max_grad_norm{0.5};
};

struct Transition {
  EncodedObs obs;
  Eigen::Vector2d u;    // pre-squash action sample
  double log_prob{0.0};  // under the collection-time policy
  double value{0.0};
  double reward{0.0};
  bool done{false};
};

// One environment's contiguous slice of a rollout plus the bootstrap value
// for its (possibly unfinished) tail.
struct EnvRollout {
  std::vector<Transition> steps;
  double bootstrap_value{0.0};
};

struct Rollout {
  std::vector<EnvRollout> envs;

  size_t size() const {
    size_t n = 0;
    for (const auto& e : envs) n += e.steps.size();
    return n;
  }
};

struct AdvantageBuffer {
  std::vector<const Transition*> transitions;
  std::vector<double> advantages;
  std::vector<double> returns;
};

// Generalized advantage estimation per environment stream; advantages are
// normalized over the whole rollout afterwards.
inline AdvantageBuffer compute_gae(const Rollout& rollout, const TrainerConfig& cfg,
                                   bool normalize = true) {
  AdvantageBuffer buf;
  for (const auto& env : rollout.envs) {
    const auto& steps = env.steps;
    std::vector<double> adv(steps.size());
    double gae = 0.0;
    for (size_t i = steps.size(); i-- > 0;) {
      const double next_value =
          steps[i].done ? 0.0
                        : (i + 1 < steps.size() ? steps[i + 1].value : env.bootstrap_value);
      const double not_done = steps[i].done ? 0.0 : 1.0;
      const double delta = steps[i].reward + cfg.gamma * next_value - steps[i].value;
      gae = delta + cfg.gamma * cfg.gae_lambda * not_done * gae;
      adv[i] = gae;
    }
    for (size_t i = 0; i < steps.size(); ++i) {
      buf.transitions.push_back(&steps[i]);
      buf.advantages.push_back(adv[i]);
      buf.returns.push_back(adv[i] + steps[i].value);
    }
  }
  if (normalize && buf.advantages.size() > 1) {
    const double mean = std::accumulate(buf.advantages.begin(), buf.advantages.end(), 0.0) /
                        buf.advantages.size();
    double var = 0.0;
    for (double a : buf.advantages) var += (a - mean) * (a - mean);
    const double stdev = std::sqrt(var / buf.advantages.size());
    for (double& a : buf.advantages) a = (a - mean) / (stdev + 1e-8);
  }
  return buf;
}

struct LossTerms {
  double policy{0.0};
  double value{0.0};
  double entropy{0.0};
  double total{0.0};
  double approx_kl{0.0};
};

// Clipped-surrogate loss over one minibatch, averaged over samples. When
// accumulate_grads is set, parameter gradients of the total loss land in the
// network's grad blocks (callers zero them first).
inline LossTerms ppo_loss(PolicyNetwork& net, std::span<const Transition* const> batch,
                          std::span<const double> advantages, std::span<const double> returns,
                          const TrainerConfig& cfg, bool accumulate_grads) {
  LossTerms terms;
  const double inv_n = 1.0 / static_cast<double>(batch.size());

  for (size_t b = 0; b < batch.size(); ++b) {
    const Transition& tr = *batch[b];
    auto out = net.forward(tr.obs);
    const double logp_new = out.dist.log_prob(tr.u);
    const double ratio = std::exp(logp_new - tr.log_prob);
    const double adv = advantages[b];
    const double surr1 = ratio * adv;
    const double clipped =
        std::clamp(ratio, 1.0 - cfg.clip_ratio, 1.0 + cfg.clip_ratio) * adv;
    const bool use_unclipped = surr1 <= clipped;

    const double value_err = out.value - returns[b];
    const double ent = out.dist.entropy();

    terms.policy += -std::min(surr1, clipped) * inv_n;
    terms.value += 0.5 * value_err * value_err * inv_n;
    terms.entropy += ent * inv_n;
    terms.approx_kl += (tr.log_prob - logp_new) * inv_n;

    if (!accumulate_grads) continue;

    // d(total)/d(logp_new): only the active unclipped branch moves
    const double d_logp = use_unclipped ? -ratio * adv * inv_n : 0.0;
    Eigen::Vector2d d_mean = Eigen::Vector2d::Zero();
    Eigen::Vector2d d_log_std = Eigen::Vector2d::Zero();
    for (int i = 0; i < 2; ++i) {
      const double sigma = std::exp(out.dist.log_std(i));
      const double z = (tr.u(i) - out.dist.mean(i)) / sigma;
      d_mean(i) = d_logp * z / sigma;
      d_log_std(i) = d_logp * (z * z - 1.0);
      d_log_std(i) += -cfg.entropy_coef * inv_n;  // entropy bonus: dH/dlog_std = 1
    }
    const double d_value = cfg.value_coef * value_err * inv_n;
    net.backward(out.cache, d_mean, d_log_std, d_value);
  }

  terms.total = terms.policy + cfg.value_coef * terms.value - cfg.entropy_coef * terms.entropy;
  return terms;
}

struct PpoStats {
  double policy_loss{0.0};
  double value_loss{0.0};
  double entropy{0.0};
  double approx_kl{0.0};
  int epochs_run{0};
  int minibatches_run{0};
  bool early_stopped{false};
};

// One optimization phase over a collected rollout: GAE, then several epochs
// of shuffled minibatch Adam steps with a hard KL stop.
inline PpoStats ppo_update(PolicyNetwork& net, const Rollout& rollout,
                           const TrainerConfig& cfg, AdamOptimizer& opt, Rng& rng) {
  const AdvantageBuffer buf = compute_gae(rollout, cfg);
  const size_t n = buf.transitions.size();
  if (n == 0) throw std::invalid_argument("ppo_update: empty rollout");

  ParamList params = net.parameters();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  PpoStats stats;
  double weight = 0.0;
  for (int epoch = 0; epoch < cfg.epochs && !stats.early_stopped; ++epoch) {
    rng.shuffle(order);
    for (size_t start = 0; start < n; start += cfg.minibatch_size) {
      const size_t end = std::min(n, start + cfg.minibatch_size);
      std::vector<const Transition*> batch;
      std::vector<double> adv, ret;
      for (size_t i = start; i < end; ++i) {
        batch.push_back(buf.transitions[order[i]]);
        adv.push_back(buf.advantages[order[i]]);
        ret.push_back(buf.returns[order[i]]);
      }
      zero_grads(params);
      const LossTerms terms = ppo_loss(net, batch, adv, ret, cfg, true);
      if (terms.approx_kl > cfg.kl_hard_cap) {
        stats.early_stopped = true;
        break;
      }
      if (cfg.max_grad_norm > 0.0) clip_grad_norm(params, cfg.max_grad_norm);
      opt.step(params);

      stats.policy_loss += terms.policy;
      stats.value_loss += terms.value;
      stats.entropy += terms.entropy;
      stats.approx_kl += terms.approx_kl;
      stats.minibatches_run += 1;
      weight += 1.0;
    }
    if (!stats.early_stopped) stats.epochs_run += 1;
  }
  if (weight > 0.0) {
    stats.policy_loss /= weight;
    stats.value_loss /= weight;
    stats.entropy /= weight;
    stats.approx_kl /= weight;
  }
  return stats;
}

}  // namespace navsim
