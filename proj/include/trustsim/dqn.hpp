// From-scratch deep Q-learning for the push/pull decision: a fixed 9-6-2
// network, experience replay, a slowly synced target network and one SGD step
// per stored experience.
#pragma once

#include <Eigen/Core>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trustsim/features.hpp"
#include "trustsim/random.hpp"

namespace trustsim::dqn {

enum class Action { Push = 0, Pull = 1 };

using State = features::FeatureVector;

struct QNetwork {
  Eigen::Matrix<double, 6, 9> w1;
  Eigen::Matrix<double, 6, 1> b1;
  Eigen::Matrix<double, 2, 6> w2;
  Eigen::Matrix<double, 2, 1> b2;
};

struct Hyperparams {
  double epsilon = 0.05;
  double l2_lambda = 0.01;
  double alpha_dqn = 0.3;  // TD-target blending rate
  double sgd_rate = 0.15;  // gradient step size
  double gamma = 0.95;
  int memory_capacity = 50;
  int minibatch = 5;
  int target_sync_every = 5;
  bool input_layer_sigmoid = true;
  double init_weight_range = 0.5;
};

QNetwork make_network(Rng& rng, const Hyperparams& hp);

// x' = sigmoid(state) (when enabled), h = sigmoid(W1 x' + b1), q = W2 h + b2.
Eigen::Vector2d forward(const QNetwork& net, const State& state,
                        const Hyperparams& hp);

Action select_action(const Eigen::Vector2d& q, double epsilon, Rng& rng);

struct Experience {
  State s;
  Action a = Action::Push;
  double r = 0.0;
  State s_next;
};

class ReplayMemory {
 public:
  explicit ReplayMemory(std::size_t capacity = 50) : capacity_(capacity) {}
  void remember(const Experience& exp) {
    items_.push_back(exp);
    if (items_.size() > capacity_) items_.pop_front();
  }
  std::size_t size() const { return items_.size(); }
  const Experience& at(std::size_t i) const { return items_[i]; }

 private:
  std::size_t capacity_;
  std::deque<Experience> items_;
};

// TD targets y = Q(s,a) + alpha * (r + gamma * max_a' Qbar(s',a') - Q(s,a)),
// frozen before the gradient step.
std::vector<double> td_targets(const QNetwork& online, const QNetwork& target,
                               std::span<const Experience> batch,
                               const Hyperparams& hp);

// Mean over the batch of (y - Q(s,a))^2 plus l2_lambda * ||weights||^2
// (biases excluded from the penalty).
double minibatch_loss(const QNetwork& net, std::span<const Experience> batch,
                      std::span<const double> targets, const Hyperparams& hp);

struct Gradients {
  Eigen::Matrix<double, 6, 9> w1;
  Eigen::Matrix<double, 6, 1> b1;
  Eigen::Matrix<double, 2, 6> w2;
  Eigen::Matrix<double, 2, 1> b2;
};

Gradients minibatch_gradients(const QNetwork& net,
                              std::span<const Experience> batch,
                              std::span<const double> targets,
                              const Hyperparams& hp);

void apply_gradients(QNetwork& net, const Gradients& grads, double rate);

void sync_target(const QNetwork& online, QNetwork& target);

bool all_finite(const QNetwork& net);

// Flat text dump, layer-major and row-major, one value per line.
std::string dump_parameters(const QNetwork& net);

// One consumer's private learner.
class Learner {
 public:
  Learner(Rng& rng, const Hyperparams& hp);

  Action act(const State& state, Rng& rng, const Hyperparams& hp);

  // Stores the experience and runs one training step (a no-op while the
  // memory holds fewer than minibatch experiences). Throws on divergence.
  void remember_and_train(const Experience& exp, Rng& rng,
                          const Hyperparams& hp);

  bool train_step(Rng& rng, const Hyperparams& hp);

  QNetwork& online() { return online_; }
  const QNetwork& online() const { return online_; }
  const QNetwork& target() const { return target_; }
  ReplayMemory& memory() { return memory_; }
  int steps() const { return steps_; }

  // The transition begun at the previous activation, awaiting its s'.
  struct PendingStep {
    State s;
    Action a = Action::Push;
    double r = 0.0;
  };
  std::optional<PendingStep> pending;

 private:
  QNetwork online_;
  QNetwork target_;
  ReplayMemory memory_;
  int steps_ = 0;
};

}  // namespace trustsim::dqn
