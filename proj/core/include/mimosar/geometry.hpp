#ifndef MIMOSAR_GEOMETRY_HPP
#define MIMOSAR_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mimosar {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s, exact

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("Vec3::normalized: zero vector");
    return *this / n;
  }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Slant range r > 0, elevation theta in (0, pi) measured from +z,
/// azimuth phi measured from +x toward +y.
struct SphericalDir {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  Vec3 to_cartesian() const {
    const double st = std::sin(theta);
    return {r * st * std::cos(phi), r * st * std::sin(phi), r * std::cos(theta)};
  }
  static SphericalDir from_cartesian(const Vec3& v) {
    SphericalDir d;
    d.r = v.norm();
    if (d.r == 0.0) throw std::invalid_argument("SphericalDir: zero-length direction");
    d.theta = std::acos(std::clamp(v.z / d.r, -1.0, 1.0));
    d.phi = std::atan2(v.y, v.x);
    return d;
  }
};

/// Radar and virtual-array description. The virtual array is a ULA of
/// n_tx*n_rx phase centers spaced dy apart, orthogonal to the heading in
/// the horizontal plane, centered on mount_offset (vehicle frame:
/// x forward, y left, z up).
struct RadarParams {
  double fc = 77e9;           // carrier [Hz]
  double bandwidth = 3e9;     // sweep bandwidth B [Hz]
  double pulse_len = 55e-6;   // chirp duration T_p [s]
  double pri = 1e-3;          // pulse repetition interval [s]
  int n_tx = 2;
  int n_rx = 4;
  double dy = 0.0;            // virtual element spacing [m]; 0 -> lambda/4
  double mount_height = 0.5;  // nominal APC height over ground q [m]
  Vec3 mount_offset{0.0, 0.0, 0.5};  // array center, vehicle frame [m]

  double wavelength() const { return kSpeedOfLight / fc; }
  int n_virtual() const { return n_tx * n_rx; }
  double element_spacing() const { return dy > 0.0 ? dy : wavelength() / 4.0; }
  /// Spacing above lambda/4 undersamples the array response and aliases
  /// DOA estimates; flags it without refusing to run.
  bool spatially_ambiguous() const {
    return element_spacing() > wavelength() / 4.0 * (1.0 + 1e-12);
  }

  void validate() const {
    if (fc <= 0 || bandwidth <= 0 || pulse_len <= 0 || pri <= 0)
      throw std::invalid_argument("RadarParams: fc, bandwidth, pulse_len, pri must be > 0");
    if (n_tx < 1 || n_rx < 1)
      throw std::invalid_argument("RadarParams: n_tx and n_rx must be >= 1");
    if (dy < 0) throw std::invalid_argument("RadarParams: dy must be >= 0");
  }
};

struct PlatformState {
  Vec3 position;
  Vec3 velocity;
};

/// True and navigation (error-corrupted) platform states on a uniform
/// slow-time grid. nav = true + error; a constant velocity error dv maps
/// to a nav position offset dv*(tau_m - tau_0).
struct TrajectorySet {
  std::vector<double> slow_times;
  std::vector<PlatformState> true_states;
  std::vector<PlatformState> nav_states;

  std::size_t size() const { return slow_times.size(); }
  double pri() const {
    return slow_times.size() > 1 ? slow_times[1] - slow_times[0] : 0.0;
  }
  /// Aperture (integration) time: one PRI per pulse.
  double aperture_time() const {
    if (slow_times.empty()) return 0.0;
    const std::size_t m = slow_times.size();
    return m > 1 ? (slow_times.back() - slow_times.front()) * m / double(m - 1)
                 : 0.0;
  }
  /// Path length traversed by the true trajectory.
  double aperture_length() const;

  void validate() const;
};

TrajectorySet make_constant_velocity_trajectory(const Vec3& start, const Vec3& velocity,
                                                double pri, std::size_t n_pulses,
                                                const Vec3& velocity_error = {},
                                                double t0 = 0.0);

/// Waypoint path sampled at the PRI; piecewise-constant segment velocity.
TrajectorySet make_waypoint_trajectory(const std::vector<Vec3>& waypoints, double speed,
                                       double pri, const Vec3& velocity_error = {},
                                       double t0 = 0.0);

/// Virtual APC positions at one slow time. The array axis is
/// z x heading (left of travel), spacing exactly dy, mean equal to
/// position + mount_offset rotated into the world frame.
std::vector<Vec3> apc_positions(const RadarParams& params, const PlatformState& state,
                                const Vec3& heading);

/// Heading for a state: explicit override, else nav/true velocity direction.
Vec3 heading_of(const PlatformState& state, const std::optional<Vec3>& override_heading);

/// k(x) = (4 pi / lambda) [sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)]
Vec3 wavenumber(const SphericalDir& dir, double lambda);
/// Analytic d k / d theta.
Vec3 wavenumber_dtheta(const SphericalDir& dir, double lambda);
/// Analytic d k / d phi.
Vec3 wavenumber_dphi(const SphericalDir& dir, double lambda);

inline double range_to(const Vec3& apc, const Vec3& pixel) { return (pixel - apc).norm(); }

/// Aperture phase reference: mean APC position and the slow time at the
/// (temporally) central pulse. Everything downstream that freezes k(x)
/// over the aperture anchors here.
struct ApertureRef {
  Vec3 center;
  double t_ref = 0.0;
};

ApertureRef aperture_reference(const TrajectorySet& traj, const RadarParams& params,
                               bool use_nav = true,
                               const std::optional<Vec3>& heading = std::nullopt);

}  // namespace mimosar

#endif
