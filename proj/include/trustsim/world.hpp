// Spherical-world geometry. Agents live inside a solid ball of radius 1.0,
// addressed by polar coordinates (r, phi, theta); distances are straight-line
// between the corresponding Cartesian points.
#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <vector>

#include "trustsim/random.hpp"
#include "trustsim/types.hpp"

namespace trustsim::world {

inline constexpr double kWorldRadius = 1.0;

struct PolarCoord {
  double r = 0.0;      // [0, 1]
  double phi = 0.0;    // [0, 2*pi)
  double theta = 0.0;  // [0, pi]
  friend bool operator==(const PolarCoord& a, const PolarCoord& b) {
    return a.r == b.r && a.phi == b.phi && a.theta == b.theta;
  }
};

// Canonical form: phi wraps modulo 2*pi, theta reflects at the poles (the
// reflection carries phi across by pi).
inline PolarCoord normalized(PolarCoord c) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double theta = std::fmod(c.theta, two_pi);
  double phi = c.phi;
  if (theta < 0.0) {
    theta = -theta;
    phi += std::numbers::pi;
  }
  if (theta > std::numbers::pi) {
    theta = two_pi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, two_pi);
  if (phi < 0.0) phi += two_pi;
  return {c.r, phi, theta};
}

inline Eigen::Vector3d to_cartesian(const PolarCoord& c) {
  const double sin_theta = std::sin(c.theta);
  return {c.r * sin_theta * std::cos(c.phi), c.r * sin_theta * std::sin(c.phi),
          c.r * std::cos(c.theta)};
}

// Volume-uniform point in the unit ball: radial CDF proportional to r^3,
// azimuth uniform, cos(theta) uniform.
inline PolarCoord place_uniform(Rng& rng) {
  const double r = std::cbrt(rng.uniform());
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double theta = std::acos(1.0 - 2.0 * rng.uniform());
  return normalized({r, phi, theta});
}

inline double distance(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return (a - b).norm();
}

inline double distance(const PolarCoord& a, const PolarCoord& b) {
  return distance(to_cartesian(a), to_cartesian(b));
}

// Adds angular deltas drawn uniformly from [-delta_phi_max, +delta_phi_max]
// to phi and theta. The radial coordinate never changes.
inline PolarCoord perturb_location(const PolarCoord& c, double delta_phi_max,
                                   Rng& rng) {
  if (delta_phi_max == 0.0) return c;
  const double dphi = rng.uniform(-delta_phi_max, delta_phi_max);
  const double dtheta = rng.uniform(-delta_phi_max, delta_phi_max);
  return normalized({c.r, c.phi + dphi, c.theta + dtheta});
}

struct Neighborhood {
  AgentId center;
  double radius = 0.0;
  std::vector<AgentId> members;  // everyone within radius, center excluded
};

template <typename Range, typename IdOf, typename XyzOf>
Neighborhood neighborhood(AgentId center, const Eigen::Vector3d& center_xyz,
                          const Range& agents, IdOf&& id_of, XyzOf&& xyz_of,
                          double r_o) {
  Neighborhood out{center, r_o, {}};
  for (const auto& agent : agents) {
    const AgentId id = id_of(agent);
    if (id == center) continue;
    if (distance(center_xyz, xyz_of(agent)) <= r_o) out.members.push_back(id);
  }
  return out;
}

}  // namespace trustsim::world
