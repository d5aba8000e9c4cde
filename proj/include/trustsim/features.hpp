// The nine-feature state extractor for adaptable consumers. Everything is
// computed from the consumer's own observables: nearby provider ids, the
// trust-evaluation partition, witness-query outcomes, its rating database and
// its location.
#pragma once

#include <Eigen/Core>
#include <deque>
#include <optional>
#include <span>
#include <utility>

#include "trustsim/fire.hpp"
#include "trustsim/types.hpp"
#include "trustsim/world.hpp"

namespace trustsim::features {

using FeatureVector = Eigen::Matrix<double, 9, 1>;

// Fraction of nearby providers not seen in the previous observation.
// A missing previous set reads as "everything is new".
double providers_direct_change(const IdSet& nearby_now, const IdSet* nearby_prev);

// Fraction of nearby providers whose trust is unknown or rests on certified
// reputation alone.
double providers_indirect_change(const IdSet& no_trust,
                                 const IdSet& certified_only,
                                 const IdSet& nearby_now);

// 1 iff the rating database holds nothing about any nearby provider.
int newcomer_estimate(const fire::LocalRatingDb& db, const IdSet& nearby_now);

// Fraction of queried witnesses that returned no ratings for any query.
double consumers_indirect_change(const IdSet& queried,
                                 const IdSet& returned_nothing);

// Mean |trust*10 - actual UG| over the remembered prediction/outcome pairs.
double providers_performance_change(
    std::span<const std::pair<double, double>> pairs);

// 1 iff any polar coordinate differs from the previous observation.
int consumers_location_change(const world::PolarCoord& now,
                              const world::PolarCoord* prev);

// FIFO ring of per-round values, capacity n.
class ValueWindow {
 public:
  explicit ValueWindow(int capacity = 10) : capacity_(capacity) {}
  void push(double value) {
    values_.push_back(value);
    if (static_cast<int>(values_.size()) > capacity_) values_.pop_front();
  }
  std::size_t size() const { return values_.size(); }
  const std::deque<double>& values() const { return values_; }

 private:
  int capacity_;
  std::deque<double> values_;
};

double windowed_mean(const ValueWindow& window);

FeatureVector assemble_state(double direct_change, double mean_direct_change,
                             double indirect_change,
                             double mean_indirect_change, int newcomer,
                             double consumers_change,
                             double mean_consumers_change,
                             double performance_change_ug, int location_change);

struct RoundObservables {
  IdSet nearby;
  IdSet no_trust;
  IdSet certified_only;
  IdSet wr_queried;
  IdSet wr_silent;
  world::PolarCoord coord;
};

// Per-consumer feature bookkeeping across its activations.
class ObservationCache {
 public:
  explicit ObservationCache(int window = 10, int perf_capacity = 10)
      : direct_(window), indirect_(window), consumers_(window),
        perf_capacity_(perf_capacity) {}

  FeatureVector observe(const RoundObservables& obs,
                        const fire::LocalRatingDb& db);

  // Feeds the performance-change ring; called after pull interactions where a
  // trust value existed at selection time.
  void record_trust_outcome(double trust_value, double actual_ug);

  std::span<const std::pair<double, double>> performance_pairs() const {
    return perf_pairs_;
  }

 private:
  std::optional<IdSet> prev_nearby_;
  std::optional<world::PolarCoord> prev_coord_;
  ValueWindow direct_;
  ValueWindow indirect_;
  ValueWindow consumers_;
  int perf_capacity_;
  std::vector<std::pair<double, double>> perf_pairs_;
};

}  // namespace trustsim::features
