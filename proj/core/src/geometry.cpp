#include "mimosar/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace mimosar {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double TrajectorySet::aperture_length() const {
  double len = 0.0;
  for (std::size_t m = 1; m < true_states.size(); ++m)
    len += (true_states[m].position - true_states[m - 1].position).norm();
  // extend by one segment so M pulses at constant v cover |v| * M * pri
  if (true_states.size() > 1) len *= double(true_states.size()) / double(true_states.size() - 1);
  return len;
}

void TrajectorySet::validate() const {
  if (slow_times.size() != true_states.size() || slow_times.size() != nav_states.size())
    throw std::invalid_argument("TrajectorySet: state/time length mismatch");
  if (slow_times.size() > 1) {
    const double step = slow_times[1] - slow_times[0];
    if (step <= 0) throw std::invalid_argument("TrajectorySet: slow times not increasing");
    for (std::size_t m = 1; m < slow_times.size(); ++m) {
      const double d = slow_times[m] - slow_times[m - 1];
      if (std::abs(d - step) > 1e-12)
        throw std::invalid_argument("TrajectorySet: non-uniform slow-time grid");
    }
  }
}

TrajectorySet make_constant_velocity_trajectory(const Vec3& start, const Vec3& velocity,
                                                double pri, std::size_t n_pulses,
                                                const Vec3& velocity_error, double t0) {
  if (pri <= 0) throw std::invalid_argument("trajectory: pri must be > 0");
  if (n_pulses == 0) throw std::invalid_argument("trajectory: need at least one pulse");
  TrajectorySet traj;
  traj.slow_times.resize(n_pulses);
  traj.true_states.resize(n_pulses);
  traj.nav_states.resize(n_pulses);
  for (std::size_t m = 0; m < n_pulses; ++m) {
    const double dt = double(m) * pri;
    traj.slow_times[m] = t0 + dt;
    traj.true_states[m] = {start + velocity * dt, velocity};
    traj.nav_states[m] = {start + velocity * dt + velocity_error * dt,
                          velocity + velocity_error};
  }
  return traj;
}

TrajectorySet make_waypoint_trajectory(const std::vector<Vec3>& waypoints, double speed,
                                       double pri, const Vec3& velocity_error, double t0) {
  if (waypoints.size() < 2) throw std::invalid_argument("trajectory: need >= 2 waypoints");
  if (speed <= 0 || pri <= 0) throw std::invalid_argument("trajectory: speed and pri must be > 0");

  // Arc-length parameterization sampled every pri.
  std::vector<double> seg_len(waypoints.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    seg_len[i] = (waypoints[i + 1] - waypoints[i]).norm();
    if (seg_len[i] == 0.0) throw std::invalid_argument("trajectory: repeated waypoint");
    total += seg_len[i];
  }
  const auto n_pulses = std::size_t(std::floor(total / (speed * pri))) + 1;

  TrajectorySet traj;
  traj.slow_times.resize(n_pulses);
  traj.true_states.resize(n_pulses);
  traj.nav_states.resize(n_pulses);
  for (std::size_t m = 0; m < n_pulses; ++m) {
    const double dt = double(m) * pri;
    double s = speed * dt;
    std::size_t seg = 0;
    while (seg + 1 < seg_len.size() && s > seg_len[seg]) s -= seg_len[seg++];
    const Vec3 dir = (waypoints[seg + 1] - waypoints[seg]) / seg_len[seg];
    const Vec3 pos = waypoints[seg] + dir * std::min(s, seg_len[seg]);
    traj.slow_times[m] = t0 + dt;
    traj.true_states[m] = {pos, dir * speed};
    traj.nav_states[m] = {pos + velocity_error * dt, dir * speed + velocity_error};
  }
  return traj;
}

std::vector<Vec3> apc_positions(const RadarParams& params, const PlatformState& state,
                                const Vec3& heading) {
  const double hn = heading.norm();
  if (hn == 0.0) throw std::invalid_argument("apc_positions: zero-norm heading");
  const Vec3 fwd = heading / hn;
  const Vec3 up{0.0, 0.0, 1.0};
  Vec3 left = up.cross(fwd);
  const double ln = left.norm();
  if (ln < 1e-12) throw std::invalid_argument("apc_positions: heading parallel to vertical");
  left = left / ln;
  const Vec3 up_ortho = fwd.cross(left);

  // mount_offset given in the vehicle frame (fwd, left, up)
  const Vec3 center = state.position + fwd * params.mount_offset.x +
                      left * params.mount_offset.y + up_ortho * params.mount_offset.z;

  const int n = params.n_virtual();
  const double dy = params.element_spacing();
  std::vector<Vec3> apcs(n);
  for (int i = 0; i < n; ++i) {
    const double off = (double(i) - 0.5 * double(n - 1)) * dy;
    apcs[i] = center + left * off;
  }
  return apcs;
}

Vec3 heading_of(const PlatformState& state, const std::optional<Vec3>& override_heading) {
  if (override_heading) return override_heading->normalized();
  const double vn = state.velocity.norm();
  if (vn == 0.0)
    throw std::invalid_argument(
        "heading_of: zero velocity and no explicit heading");
  return state.velocity / vn;
}

Vec3 wavenumber(const SphericalDir& dir, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("wavenumber: lambda must be > 0");
  const double k = 2.0 * kTwoPi / lambda;
  const double st = std::sin(dir.theta), ct = std::cos(dir.theta);
  const double cp = std::cos(dir.phi), sp = std::sin(dir.phi);
  return {k * st * cp, k * st * sp, k * ct};
}

Vec3 wavenumber_dtheta(const SphericalDir& dir, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("wavenumber_dtheta: lambda must be > 0");
  const double k = 2.0 * kTwoPi / lambda;
  const double st = std::sin(dir.theta), ct = std::cos(dir.theta);
  const double cp = std::cos(dir.phi), sp = std::sin(dir.phi);
  return {k * ct * cp, k * ct * sp, -k * st};
}

Vec3 wavenumber_dphi(const SphericalDir& dir, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("wavenumber_dphi: lambda must be > 0");
  const double k = 2.0 * kTwoPi / lambda;
  const double st = std::sin(dir.theta);
  const double cp = std::cos(dir.phi), sp = std::sin(dir.phi);
  return {-k * st * sp, k * st * cp, 0.0};
}

ApertureRef aperture_reference(const TrajectorySet& traj, const RadarParams& params,
                               bool use_nav, const std::optional<Vec3>& heading) {
  if (traj.size() == 0) throw std::invalid_argument("aperture_reference: empty trajectory");
  const std::size_t c = traj.size() / 2;
  const PlatformState& st = use_nav ? traj.nav_states[c] : traj.true_states[c];
  const auto apcs = apc_positions(params, st, heading_of(st, heading));
  Vec3 mean{};
  for (const auto& p : apcs) mean += p;
  return {mean / double(apcs.size()), traj.slow_times[c]};
}

}  // namespace mimosar
