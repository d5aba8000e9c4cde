// Shared domain vocabulary: agent identities, consumer groups, service
// performance levels and the utility-gain scale.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>

namespace trustsim {

using Round = int;

inline constexpr double kMinUg = -10.0;
inline constexpr double kMaxUg = 10.0;

struct AgentId {
  std::uint64_t value = 0;
  friend bool operator==(AgentId a, AgentId b) { return a.value == b.value; }
  friend bool operator!=(AgentId a, AgentId b) { return a.value != b.value; }
  friend bool operator<(AgentId a, AgentId b) { return a.value < b.value; }
};

enum class Group { Fire = 0, Ca = 1, Adaptable = 2 };
inline constexpr std::array<Group, 3> kAllGroups{Group::Fire, Group::Ca,
                                                 Group::Adaptable};

// Service modes: pull = trustor selects a provider, push = trustees volunteer.
enum class Mode { Pull, Push };

enum class PerformanceLevel { Perfect = 0, Good = 1, Ok = 2, Bad = 3, Worst = 4 };

inline constexpr std::array<PerformanceLevel, 5> kAllLevels{
    PerformanceLevel::Perfect, PerformanceLevel::Good, PerformanceLevel::Ok,
    PerformanceLevel::Bad, PerformanceLevel::Worst};

// Broadcast stages walk down the quality ladder; the lowest level is never
// requested.
inline constexpr std::array<PerformanceLevel, 4> kRequestStages{
    PerformanceLevel::Perfect, PerformanceLevel::Good, PerformanceLevel::Ok,
    PerformanceLevel::Bad};

inline constexpr double level_utility(PerformanceLevel level) {
  constexpr std::array<double, 5> utilities{10.0, 5.0, 0.0, -5.0, -10.0};
  return utilities[static_cast<std::size_t>(level)];
}

inline constexpr double clamp_ug(double ug) {
  return ug < kMinUg ? kMinUg : (ug > kMaxUg ? kMaxUg : ug);
}

inline std::string to_string(Group g) {
  switch (g) {
    case Group::Fire: return "FIRE";
    case Group::Ca: return "CA";
    case Group::Adaptable: return "Adaptable";
  }
  return "?";
}

inline std::string to_string(Mode m) {
  return m == Mode::Pull ? "pull" : "push";
}

inline std::string to_string(PerformanceLevel level) {
  switch (level) {
    case PerformanceLevel::Perfect: return "PERFECT";
    case PerformanceLevel::Good: return "GOOD";
    case PerformanceLevel::Ok: return "OK";
    case PerformanceLevel::Bad: return "BAD";
    case PerformanceLevel::Worst: return "WORST";
  }
  return "?";
}

}  // namespace trustsim

template <>
struct std::hash<trustsim::AgentId> {
  std::size_t operator()(trustsim::AgentId id) const noexcept {
    return std::hash<std::uint64_t>{}(id.value);
  }
};

namespace trustsim {
using IdSet = std::unordered_set<AgentId>;
}
