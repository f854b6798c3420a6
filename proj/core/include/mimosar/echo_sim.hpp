#ifndef MIMOSAR_ECHO_SIM_HPP
#define MIMOSAR_ECHO_SIM_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimosar/geometry.hpp"

namespace mimosar {

struct Target {
  Vec3 position;
  std::complex<double> reflectivity{1.0, 0.0};
  /// Per-slow-time position offset velocity. Zero for physical (static)
  /// scenes; nonzero only as a test utility to inject moving-target
  /// outliers into autofocus runs.
  Vec3 drift{};
};

struct Scene {
  std::vector<Target> targets;
};

/// Range-compressed data cube, indexed (range bin, channel, slow time).
/// Storage is slow-time major, then channel, then range bin, matching the
/// RCC1 file layout; a (channel, slow time) column is contiguous.
struct RcCube {
  std::vector<double> range_axis;
  std::vector<double> slow_times;
  RadarParams params;
  std::vector<std::complex<float>> data;

  std::size_t n_range() const { return range_axis.size(); }
  std::size_t n_channels() const { return std::size_t(params.n_virtual()); }
  std::size_t n_pulses() const { return slow_times.size(); }

  double range_spacing() const {
    return range_axis.size() > 1 ? range_axis[1] - range_axis[0] : 0.0;
  }

  std::complex<float>* column(std::size_t channel, std::size_t pulse) {
    return data.data() + (pulse * n_channels() + channel) * n_range();
  }
  const std::complex<float>* column(std::size_t channel, std::size_t pulse) const {
    return data.data() + (pulse * n_channels() + channel) * n_range();
  }

  void validate() const;
};

/// rho_r = c / (2B)
double range_resolution(const RadarParams& params);

struct SimOptions {
  double noise_power = 0.0;     // E|n|^2 per complex sample
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double max_range = 27.0;      // range axis extent [m]
  int range_oversample = 2;     // spacing = rho_r / oversample, >= 2
  std::optional<Vec3> heading;  // override; default true-velocity direction
};

/// Closed-form range-compressed simulation of point targets along the
/// TRUE trajectory: each (pulse, channel, target) adds
///   a * sinc[(r - r_k)/rho_r] * exp(-j 4 pi r_k / lambda)
/// over the whole range axis (exact per-APC ranges, unit T_p amplitude),
/// plus circular complex Gaussian noise of total power noise_power.
/// Deterministic for a given seed, independent of worker count.
RcCube simulate_rc(const Scene& scene, const TrajectorySet& traj, const RadarParams& params,
                   const SimOptions& opts);

/// Targets never closer than max_range to any aperture position are
/// invisible to the simulation; reported as warnings, not errors.
std::vector<std::string> scene_warnings(const Scene& scene, const TrajectorySet& traj,
                                        double max_range);

}  // namespace mimosar

#endif
