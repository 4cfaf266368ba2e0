#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace navsim {

// One learnable tensor with its gradient and Adam moments.
struct ParamBlock {
  std::string name;
  Eigen::MatrixXd value;
  Eigen::MatrixXd grad;
  Eigen::MatrixXd adam_m;
  Eigen::MatrixXd adam_v;

  ParamBlock() = default;
  ParamBlock(std::string n, Eigen::Index rows, Eigen::Index cols)
      : name(std::move(n)),
        value(Eigen::MatrixXd::Zero(rows, cols)),
        grad(Eigen::MatrixXd::Zero(rows, cols)),
        adam_m(Eigen::MatrixXd::Zero(rows, cols)),
        adam_v(Eigen::MatrixXd::Zero(rows, cols)) {}

  void zero_grad() { grad.setZero(); }
};

using ParamList = std::vector<ParamBlock*>;

inline void zero_grads(const ParamList& params) {
  for (auto* p : params) p->zero_grad();
}

inline double grad_norm(const ParamList& params) {
  double sq = 0.0;
  for (const auto* p : params) sq += p->grad.squaredNorm();
  return std::sqrt(sq);
}

inline void clip_grad_norm(const ParamList& params, double max_norm) {
  const double norm = grad_norm(params);
  if (norm <= max_norm || norm == 0.0) return;
  const double scale = max_norm / norm;
  for (auto* p : params) p->grad *= scale;
}

class AdamOptimizer {
 public:
  AdamOptimizer(double lr = 1e-4, double beta1 = 0.9, double beta2 = 0.999,
                double epsilon = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), epsilon_(epsilon) {}

  void step(const ParamList& params) {
    ++t_;
    const double bias1 = 1.0 - std::pow(beta1_, t_);
    const double bias2 = 1.0 - std::pow(beta2_, t_);
    for (auto* p : params) {
      p->adam_m = beta1_ * p->adam_m + (1.0 - beta1_) * p->grad;
      p->adam_v = beta2_ * p->adam_v + (1.0 - beta2_) * p->grad.cwiseProduct(p->grad);
      const Eigen::MatrixXd m_hat = p->adam_m / bias1;
      const Eigen::MatrixXd v_hat = p->adam_v / bias2;
      p->value -= lr_ * (m_hat.array() / (v_hat.array().sqrt() + epsilon_)).matrix();
    }
  }

  double learning_rate() const { return lr_; }

 private:
  double lr_;
  double beta1_;
  double beta2_;
  double epsilon_;
  long t_{0};
};

}  // namespace navsim
