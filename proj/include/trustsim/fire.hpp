// FIRE trust model (pull side): per-consumer rating stores, the four trust
// components (interaction, role-based, witness, certified), reliability
// weighting and provider selection.
#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "trustsim/random.hpp"
#include "trustsim/types.hpp"

namespace trustsim {
struct Provider;
struct Consumer;
}  // namespace trustsim

namespace trustsim::fire {

// Normalized rating over one interaction: value = delivered UG / 10.
struct Rating {
  AgentId consumer;
  AgentId provider;
  Round round = 0;
  double value = 0.0;  // [-1, +1]
};

// A consumer's own rating history: per provider, the most recent ratings up
// to the history size H.
class LocalRatingDb {
 public:
  explicit LocalRatingDb(int capacity_per_provider = 10)
      : capacity_(capacity_per_provider) {}

  void add(const Rating& rating);
  std::span<const Rating> ratings_for(AgentId provider) const;
  bool has_rating_for(AgentId provider) const;

 private:
  int capacity_;
  std::unordered_map<AgentId, std::vector<Rating>> by_provider_;
};

// Provider-side store of third-party references. Only the highest-valued H
// ratings are kept, which is what makes certified reputation optimistic.
class CertifiedStore {
 public:
  explicit CertifiedStore(int capacity = 10) : capacity_(capacity) {}

  void offer(const Rating& rating);
  std::span<const Rating> ratings() const { return items_; }

 private:
  int capacity_;
  std::vector<Rating> items_;
};

struct ComponentResult {
  double trust = 0.0;        // [-1, +1]
  double reliability = 0.0;  // [0, 1]
  bool available = false;
};

struct FireParams {
  int history_size = 10;                             // H
  double recency_lambda = -(5.0 / std::log(0.5));    // IT recency scaling
  int branching = 2;                                 // n_BF
  int referral_depth = 5;                            // n_RL
  double w_interaction = 2.0;
  double w_role = 2.0;
  double w_witness = 1.0;
  double w_certified = 0.5;
  double gamma_interaction = -std::log(0.5);
  double gamma_role = -std::log(0.5);
  double gamma_witness = -std::log(0.5);
  double gamma_certified = -std::log(0.5);
  double p_explore = 0.1;  // chance of trying a provider with unknown trust

  // No role rule base exists in this testbed; tests may install one.
  std::function<std::optional<ComponentResult>(AgentId evaluator,
                                               AgentId provider)>
      role_rules;
};

inline double recency_weight(double delta_t, double lambda) {
  return std::exp(-delta_t / lambda);
}

// Recency-weighted mean trust plus the two-factor reliability (rating volume
// and rating consistency).
ComponentResult component_trust(std::span<const Rating> ratings, Round now,
                                double lambda, double gamma);

ComponentResult interaction_trust(const LocalRatingDb& db, AgentId provider,
                                  Round now, const FireParams& params);

ComponentResult certified_reputation(const CertifiedStore& store, Round now,
                                     const FireParams& params);

ComponentResult role_based_trust(AgentId evaluator, AgentId provider,
                                 const FireParams& params);

ComponentResult overall_trust(const ComponentResult& interaction,
                              const ComponentResult& role,
                              const ComponentResult& witness,
                              const ComponentResult& certified,
                              const FireParams& params);

// Round-scoped lookup of consumers and their acquaintances (consumers within
// a consumer's radius of operation). Lists are built lazily; positions are
// fixed within a round.
class WitnessIndex {
 public:
  explicit WitnessIndex(const std::vector<Consumer>& consumers);

  const Consumer* by_id(AgentId id) const;
  std::span<const AgentId> acquaintances_of(AgentId id);

 private:
  const std::vector<Consumer>* consumers_;
  std::unordered_map<AgentId, std::size_t> slot_;
  std::vector<std::vector<AgentId>> lists_;
  std::vector<char> built_;
};

// Witness-query observables accumulated over one consumer's evaluations in a
// round; feeds the consumer-population-change feature.
struct WitnessRoundLog {
  IdSet queried;   // every consumer asked for ratings
  IdSet answered;  // those that returned at least one rating for some query
};

// Breadth-limited referral search: query up to n_BF acquaintances likely to
// hold ratings for the provider; consumers without matches refer to their own
// n_BF acquaintances, down to depth n_RL.
ComponentResult witness_reputation(const Consumer& evaluator, AgentId provider,
                                   WitnessIndex& index, Round now,
                                   const FireParams& params, Rng& rng,
                                   WitnessRoundLog* log = nullptr);

struct TrustEvaluation {
  AgentId provider;
  ComponentResult interaction;
  ComponentResult role;
  ComponentResult witness;
  ComponentResult certified;
  ComponentResult overall;
};

struct NearbyEvaluation {
  std::vector<TrustEvaluation> evaluations;  // input order
  std::vector<AgentId> has_trust;
  std::vector<AgentId> no_trust;
  std::vector<AgentId> certified_only;  // trust determinable through CR alone

  const TrustEvaluation* find(AgentId provider) const;
};

NearbyEvaluation evaluate_nearby(const Consumer& evaluator,
                                 const std::vector<const Provider*>& nearby,
                                 WitnessIndex& index, Round now,
                                 const FireParams& params, Rng& rng,
                                 WitnessRoundLog* log = nullptr);

struct Selection {
  std::optional<AgentId> chosen;
  bool chosen_has_trust = false;
  double chosen_trust = 0.0;  // meaningful when chosen_has_trust
};

// Exploration picks uniformly from the no-trust set; otherwise the provider
// with maximal overall trust wins (ties broken uniformly).
Selection choose_provider(const NearbyEvaluation& evaluation,
                          const FireParams& params, Rng& rng);

struct SelectionResult {
  Selection selection;
  NearbyEvaluation evaluation;
};

SelectionResult select_provider(const Consumer& evaluator,
                                const std::vector<const Provider*>& nearby,
                                WitnessIndex& index, Round now,
                                const FireParams& params, Rng& rng,
                                WitnessRoundLog* log = nullptr);

// Stores the rating on the consumer side and offers it to the provider's
// certified store.
void record_interaction(Consumer& consumer, Provider& provider, double ug,
                        Round round);

}  // namespace trustsim::fire
