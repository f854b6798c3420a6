#include "mimosar/echo_sim.hpp"

#include <cmath>
#include <numbers>

#include "mimosar/parallel.hpp"
#include "mimosar/rng.hpp"

namespace mimosar {

namespace {

constexpr std::uint64_t kNoiseStream = 0x6e6f697365ULL;  // "noise"

/// Adds amp * sinc[(axis_i - r0)/rho] to col over the full axis.
/// sin(pi u) follows a fixed-angle rotation recurrence along the uniform
/// grid; the denominator is evaluated directly per bin.
void add_sinc_echo(std::complex<float>* col, const std::vector<double>& axis, double spacing,
                   double rho, double r0, std::complex<double> amp) {
  const double pi = std::numbers::pi;
  const double u0 = (axis.front() - r0) / rho * pi;
  const double du = spacing / rho * pi;
  double s = std::sin(u0), c = std::cos(u0);
  const double sd = std::sin(du), cd = std::cos(du);
  double u = u0;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    double env;
    if (std::abs(u) < 1e-6) {
      env = 1.0 - u * u / 6.0;
    } else {
      env = s / u;
    }
    col[i] += std::complex<float>(float(env * amp.real()), float(env * amp.imag()));
    const double s2 = s * cd + c * sd;
    c = c * cd - s * sd;
    s = s2;
    u += du;
  }
}

}  // namespace

double range_resolution(const RadarParams& params) {
  if (params.bandwidth <= 0) throw std::invalid_argument("range_resolution: bandwidth must be > 0");
  return kSpeedOfLight / (2.0 * params.bandwidth);
}

void RcCube::validate() const {
  if (range_axis.size() < 2) throw std::invalid_argument("RcCube: range axis too short");
  const double step = range_axis[1] - range_axis[0];
  if (step <= 0) throw std::invalid_argument("RcCube: range axis not increasing");
  for (std::size_t i = 1; i < range_axis.size(); ++i)
    if (std::abs(range_axis[i] - range_axis[i - 1] - step) > 1e-12)
      throw std::invalid_argument("RcCube: non-uniform range axis");
  if (data.size() != n_range() * n_channels() * n_pulses())
    throw std::invalid_argument("RcCube: data size inconsistent with axes");
}

RcCube simulate_rc(const Scene& scene, const TrajectorySet& traj, const RadarParams& params,
                   const SimOptions& opts) {
  params.validate();
  traj.validate();
  if (traj.size() == 0) throw std::invalid_argument("simulate_rc: empty trajectory");
  if (opts.noise_power < 0) throw std::invalid_argument("simulate_rc: noise_power must be >= 0");
  if (opts.range_oversample < 2)
    throw std::invalid_argument("simulate_rc: range_oversample must be >= 2");
  if (opts.max_range <= 0) throw std::invalid_argument("simulate_rc: max_range must be > 0");

  const double rho = range_resolution(params);
  const double spacing = rho / double(opts.range_oversample);
  const auto n_bins = std::size_t(std::floor(opts.max_range / spacing)) + 1;

  RcCube cube;
  cube.params = params;
  cube.slow_times = traj.slow_times;
  cube.range_axis.resize(n_bins);
  for (std::size_t i = 0; i < n_bins; ++i) cube.range_axis[i] = double(i) * spacing;

  const std::size_t n_ch = cube.n_channels();
  const std::size_t n_pulses = cube.n_pulses();
  cube.data.assign(n_bins * n_ch * n_pulses, {0.0f, 0.0f});

  const double lambda = params.wavelength();
  const double k4pi = 4.0 * std::numbers::pi / lambda;
  const double t0 = traj.slow_times.front();
  const double noise_sigma = std::sqrt(opts.noise_power / 2.0);

  parallel_for(n_pulses, opts.workers, [&](std::size_t m) {
    const PlatformState& state = traj.true_states[m];
    const auto apcs = apc_positions(params, state, heading_of(state, opts.heading));
    const double dt = traj.slow_times[m] - t0;
    for (std::size_t n = 0; n < n_ch; ++n) {
      std::complex<float>* col = cube.column(n, m);
      for (const Target& tgt : scene.targets) {
        const Vec3 pos = tgt.position + tgt.drift * dt;
        const double r = range_to(apcs[n], pos);
        const double phase = -k4pi * r;
        const std::complex<double> amp =
            tgt.reflectivity * std::complex<double>(std::cos(phase), std::sin(phase));
        add_sinc_echo(col, cube.range_axis, spacing, rho, r, amp);
      }
    }
    if (noise_sigma > 0) {
      Rng rng(derive_seed(opts.seed, kNoiseStream, m));
      std::complex<float>* block = cube.column(0, m);
      for (std::size_t i = 0; i < n_ch * n_bins; ++i) {
        const auto [g1, g2] = rng.normal_pair();
        block[i] += std::complex<float>(float(g1 * noise_sigma), float(g2 * noise_sigma));
      }
    }
  });

  return cube;
}

std::vector<std::string> scene_warnings(const Scene& scene, const TrajectorySet& traj,
                                        double max_range) {
  std::vector<std::string> warnings;
  for (std::size_t k = 0; k < scene.targets.size(); ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& st : traj.true_states)
      best = std::min(best, (scene.targets[k].position - st.position).norm());
    if (best > max_range)
      warnings.push_back("target " + std::to_string(k) + " at minimum range " +
                         std::to_string(best) + " m exceeds max range " +
                         std::to_string(max_range) + " m and is invisible");
  }
  return warnings;
}

}  // namespace mimosar
