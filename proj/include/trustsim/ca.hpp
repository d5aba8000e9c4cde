// CA trust model (push side): trustee-held connection weights, threshold
// volunteering, weight reinforcement/decay and the staged broadcast protocol.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "trustsim/random.hpp"
#include "trustsim/types.hpp"

namespace trustsim {
struct Provider;
struct Consumer;
}  // namespace trustsim

namespace trustsim::ca {

struct CaParams {
  double threshold = 0.5;
  double alpha = 0.1;  // reinforcement rate on success
  double beta = 0.1;   // decay rate on failure
  double initial_weight = 0.5;
};

inline double update_weight_success(double w, double alpha) {
  return std::min(1.0, w + alpha * (1.0 - w));
}

inline double update_weight_failure(double w, double beta) {
  return std::max(0.0, w - beta * (1.0 - w));
}

// One weight per performance level; a connection comes into existence the
// first time a request at that level is seen.
class ConnectionWeights {
 public:
  double& at_or_create(PerformanceLevel level, double initial) {
    const auto i = static_cast<std::size_t>(level);
    if (!present_[i]) {
      weights_[i] = initial;
      present_[i] = true;
    }
    return weights_[i];
  }

  const double* find(PerformanceLevel level) const {
    const auto i = static_cast<std::size_t>(level);
    return present_[i] ? &weights_[i] : nullptr;
  }

 private:
  std::array<double, 5> weights_{};
  std::array<bool, 5> present_{};
};

// Volunteer iff the connection weight is not less than the threshold.
inline bool decide_execute(ConnectionWeights& weights, PerformanceLevel level,
                           const CaParams& params) {
  return weights.at_or_create(level, params.initial_weight) >= params.threshold;
}

struct RequestMessage {
  AgentId requester;
  PerformanceLevel level = PerformanceLevel::Perfect;
  Round round = 0;
};

struct PushParticipant {
  Consumer* consumer = nullptr;
  std::vector<Provider*> nearby;
};

struct Assignment {
  AgentId consumer;
  std::optional<AgentId> provider;  // empty when the consumer went unserved
  PerformanceLevel level = PerformanceLevel::Perfect;
};

// Broadcast stages run PERFECT -> GOOD -> OK -> BAD; within a stage every
// still-unserved consumer broadcasts to its nearby providers and one volunteer
// (uniform over the id-sorted volunteer list) is assigned.
std::vector<Assignment> staged_allocation(std::vector<PushParticipant>& participants,
                                          Round now, const CaParams& params,
                                          Rng& rng);

// Success means the delivered utility met the requested level.
void settle_task(Provider& provider, PerformanceLevel level,
                 double delivered_ug, const CaParams& params);

}  // namespace trustsim::ca
