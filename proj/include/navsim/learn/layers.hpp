#pragma once

#include "navsim/core/rng.hpp"
#include "navsim/learn/params.hpp"

namespace navsim {

inline void init_uniform(Eigen::MatrixXd& m, double scale, Rng& rng) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      m(i, j) = rng.uniform(-scale, scale);
    }
  }
}

// Fully connected layer, optionally tracked activations for backprop.
class Linear {
 public:
  Linear() = default;
  Linear(const std::string& name, Eigen::Index in, Eigen::Index out)
      : weight_(name + ".weight", out, in), bias_(name + ".bias", out, 1) {}

  void init(Rng& rng, double gain = 1.0) {
    const double scale = gain * std::sqrt(6.0 / static_cast<double>(weight_.value.rows() +
                                                                    weight_.value.cols()));
    init_uniform(weight_.value, scale, rng);
    bias_.value.setZero();
  }

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const {
    return weight_.value * x + bias_.value;
  }

  // dy is dLoss/doutput; returns dLoss/dinput and accumulates weight grads.
  Eigen::VectorXd backward(const Eigen::VectorXd& x, const Eigen::VectorXd& dy) {
    weight_.grad += dy * x.transpose();
    bias_.grad += dy;
    return weight_.value.transpose() * dy;
  }

  void collect(ParamList& out) {
    out.push_back(&weight_);
    out.push_back(&bias_);
  }

  Eigen::Index in_dim() const { return weight_.value.cols(); }
  Eigen::Index out_dim() const { return weight_.value.rows(); }

 private:
  ParamBlock weight_;
  ParamBlock bias_;
};

inline Eigen::VectorXd relu(const Eigen::VectorXd& z) { return z.cwiseMax(0.0); }

inline Eigen::VectorXd relu_backward(const Eigen::VectorXd& z, const Eigen::VectorXd& da) {
  return (z.array() > 0.0).select(da, Eigen::VectorXd::Zero(da.size()));
}

// Single LSTM cell unrolled over a variable-length sequence. Gate layout in
// the stacked weight matrices is [input, forget, cell, output].
class LstmCell {
 public:
  struct StepCache {
    Eigen::VectorXd x;
    Eigen::VectorXd h_prev;
    Eigen::VectorXd c_prev;
    Eigen::VectorXd i, f, g, o;
    Eigen::VectorXd c;
    Eigen::VectorXd tanh_c;
  };

  struct SequenceCache {
    std::vector<StepCache> steps;
    Eigen::VectorXd h_final;
  };

  LstmCell() = default;
  LstmCell(const std::string& name, Eigen::Index input, Eigen::Index hidden)
      : wx_(name + ".wx", 4 * hidden, input),
        wh_(name + ".wh", 4 * hidden, hidden),
        bias_(name + ".bias", 4 * hidden, 1),
        hidden_(hidden) {}

  void init(Rng& rng) {
    const double sx = std::sqrt(6.0 / static_cast<double>(wx_.value.rows() + wx_.value.cols()));
    const double sh = std::sqrt(6.0 / static_cast<double>(wh_.value.rows() + wh_.value.cols()));
    init_uniform(wx_.value, sx, rng);
    init_uniform(wh_.value, sh, rng);
    bias_.value.setZero();
    // forget-gate bias of 1 keeps early memories alive
    bias_.value.col(0).segment(hidden_, hidden_).setOnes();
  }

  Eigen::Index hidden_size() const { return hidden_; }
  Eigen::Index input_size() const { return wx_.value.cols(); }

  SequenceCache forward(const std::vector<Eigen::VectorXd>& sequence) const {
    SequenceCache cache;
    Eigen::VectorXd h = Eigen::VectorXd::Zero(hidden_);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(hidden_);
    for (const auto& x : sequence) {
      StepCache s;
      s.x = x;
      s.h_prev = h;
      s.c_prev = c;
      const Eigen::VectorXd z = wx_.value * x + wh_.value * h + bias_.value;
      s.i = sigmoid(z.segment(0, hidden_));
      s.f = sigmoid(z.segment(hidden_, hidden_));
      s.g = z.segment(2 * hidden_, hidden_).array().tanh();
      s.o = sigmoid(z.segment(3 * hidden_, hidden_));
      c = s.f.cwiseProduct(c) + s.i.cwiseProduct(s.g);
      s.c = c;
      s.tanh_c = c.array().tanh();
      h = s.o.cwiseProduct(s.tanh_c);
      cache.steps.push_back(std::move(s));
    }
    cache.h_final = h;
    return cache;
  }

  // Backprop through time from the gradient at the final hidden state.
  void backward(const SequenceCache& cache, const Eigen::VectorXd& dh_final) {
    Eigen::VectorXd dh = dh_final;
    Eigen::VectorXd dc = Eigen::VectorXd::Zero(hidden_);
    for (auto it = cache.steps.rbegin(); it != cache.steps.rend(); ++it) {
      const StepCache& s = *it;
      const Eigen::VectorXd do_ = dh.cwiseProduct(s.tanh_c);
      dc += dh.cwiseProduct(s.o).cwiseProduct(
          (1.0 - s.tanh_c.array().square()).matrix());
      const Eigen::VectorXd di = dc.cwiseProduct(s.g);
      const Eigen::VectorXd df = dc.cwiseProduct(s.c_prev);
      const Eigen::VectorXd dg = dc.cwiseProduct(s.i);

      Eigen::VectorXd dz(4 * hidden_);
      dz.segment(0, hidden_) = di.cwiseProduct(s.i).cwiseProduct((1.0 - s.i.array()).matrix());
      dz.segment(hidden_, hidden_) =
          df.cwiseProduct(s.f).cwiseProduct((1.0 - s.f.array()).matrix());
      dz.segment(2 * hidden_, hidden_) = dg.cwiseProduct((1.0 - s.g.array().square()).matrix());
      dz.segment(3 * hidden_, hidden_) =
          do_.cwiseProduct(s.o).cwiseProduct((1.0 - s.o.array()).matrix());

      wx_.grad += dz * s.x.transpose();
      wh_.grad += dz * s.h_prev.transpose();
      bias_.grad += dz;

      dh = wh_.value.transpose() * dz;
      dc = dc.cwiseProduct(s.f);
    }
  }

  void collect(ParamList& out) {
    out.push_back(&wx_);
    out.push_back(&wh_);
    out.push_back(&bias_);
  }

 private:
  static Eigen::VectorXd sigmoid(const Eigen::VectorXd& z) {
    return (1.0 / (1.0 + (-z.array()).exp())).matrix();
  }

  ParamBlock wx_;
  ParamBlock wh_;
  ParamBlock bias_;
  Eigen::Index hidden_{0};
};

}  // namespace navsim
