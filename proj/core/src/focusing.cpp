#include "mimosar/focusing.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mimosar/parallel.hpp"

namespace mimosar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvTwoPi = 1.0 / kTwoPi;

void check_finite_slice(const RcCube& cube, std::size_t pulse) {
  const std::complex<float>* block = cube.column(0, pulse);
  const std::size_t n = cube.n_channels() * cube.n_range();
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(block[i].real()) || !std::isfinite(block[i].imag()))
      throw std::invalid_argument("focus: non-finite sample in RC cube at pulse " +
                                  std::to_string(pulse));
}

/// Back-projects one pulse onto the grid. Channel sum runs in index order
/// per pixel, so results are independent of any outer parallel schedule.
void backproject_pulse(const RcCube& cube, std::size_t pulse, const std::vector<Vec3>& apcs,
                       const ImageGrid& grid, std::complex<float>* out) {
  const std::size_t n_ch = cube.n_channels();
  const std::size_t n_bins = cube.n_range();
  const double r0 = cube.range_axis.front();
  const double inv_dr = 1.0 / cube.range_spacing();
  const double k4pi = 4.0 * std::numbers::pi / cube.params.wavelength();

  const std::size_t nx = grid.nx(), ny = grid.ny();
  std::vector<const std::complex<float>*> cols(n_ch);
  for (std::size_t n = 0; n < n_ch; ++n) cols[n] = cube.column(n, pulse);

  for (std::size_t ix = 0; ix < nx; ++ix) {
    const double px = grid.x_axis[ix];
    std::complex<float>* row = out + ix * ny;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double py = grid.y_axis[iy];
      double acc_re = 0.0, acc_im = 0.0;
      for (std::size_t n = 0; n < n_ch; ++n) {
        const Vec3& a = apcs[n];
        const double dx = px - a.x, dy = py - a.y, dz = grid.z_plane - a.z;
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        const double t = (r - r0) * inv_dr;
        if (t < 0.0) continue;
        const auto i = std::size_t(t);
        if (i + 1 >= n_bins) continue;
        const double frac = t - double(i);
        const std::complex<float> c0 = cols[n][i], c1 = cols[n][i + 1];
        const double vre = double(c0.real()) + frac * (double(c1.real()) - double(c0.real()));
        const double vim = double(c0.imag()) + frac * (double(c1.imag()) - double(c0.imag()));
        double ph = k4pi * r;
        ph -= kTwoPi * std::floor(ph * kInvTwoPi);
        const double c = std::cos(ph), s = std::sin(ph);
        acc_re += vre * c - vim * s;
        acc_im += vre * s + vim * c;
      }
      row[iy] = std::complex<float>(float(acc_re), float(acc_im));
    }
  }
}

}  // namespace

ImageGrid ImageGrid::make(double x_min, double x_max, double y_min, double y_max, double spacing,
                          double z_plane) {
  if (spacing <= 0) throw std::invalid_argument("ImageGrid: spacing must be > 0");
  if (x_max < x_min || y_max < y_min) throw std::invalid_argument("ImageGrid: empty extent");
  ImageGrid g;
  g.z_plane = z_plane;
  const auto nx = std::size_t(std::floor((x_max - x_min) / spacing + 1e-9)) + 1;
  const auto ny = std::size_t(std::floor((y_max - y_min) / spacing + 1e-9)) + 1;
  g.x_axis.resize(nx);
  g.y_axis.resize(ny);
  for (std::size_t i = 0; i < nx; ++i) g.x_axis[i] = x_min + double(i) * spacing;
  for (std::size_t j = 0; j < ny; ++j) g.y_axis[j] = y_min + double(j) * spacing;
  return g;
}

ImageGrid ImageGrid::default_fan(const RadarParams& params, double max_range) {
  const double s = range_resolution(params) / 2.0;
  return make(2.0, max_range, -max_range / 2.0, max_range / 2.0, s, 0.0);
}

void ImageGrid::validate() const {
  if (x_axis.empty() || y_axis.empty()) throw std::invalid_argument("ImageGrid: empty axis");
  for (const auto* axis : {&x_axis, &y_axis}) {
    if (axis->size() < 2) continue;
    const double step = (*axis)[1] - (*axis)[0];
    if (step <= 0) throw std::invalid_argument("ImageGrid: axis not strictly increasing");
    for (std::size_t i = 1; i < axis->size(); ++i)
      if (std::abs((*axis)[i] - (*axis)[i - 1] - step) > 1e-9)
        throw std::invalid_argument("ImageGrid: non-uniform axis");
  }
}

std::pair<std::size_t, std::size_t> ComplexImage::argmax_abs() const {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t p = 0; p < pixels.size(); ++p) {
    const double m = std::norm(pixels[p]);
    if (m > best_mag) {
      best_mag = m;
      best = p;
    }
  }
  return {best / grid.ny(), best % grid.ny()};
}

std::pair<std::size_t, std::size_t> RealImage::argmax() const {
  std::size_t best = 0;
  for (std::size_t p = 1; p < values.size(); ++p)
    if (values[p] > values[best]) best = p;
  return {best / grid.ny(), best % grid.ny()};
}

ComplexImage ImageStack::image_copy(std::size_t m) const {
  ComplexImage img;
  img.grid = grid;
  const auto view = image(m);
  img.pixels.assign(view.begin(), view.end());
  return img;
}

std::complex<double> interp_rc(std::span<const std::complex<float>> column,
                               const std::vector<double>& range_axis, double r_query) {
  if (column.size() != range_axis.size())
    throw std::invalid_argument("interp_rc: column/axis length mismatch");
  if (range_axis.size() < 2) return {0.0, 0.0};
  const double r0 = range_axis.front();
  const double dr = range_axis[1] - range_axis[0];
  const double t = (r_query - r0) / dr;
  if (t < 0.0) return {0.0, 0.0};
  const auto i = std::size_t(t);
  if (i + 1 >= column.size()) return {0.0, 0.0};
  const double frac = t - double(i);
  const std::complex<float> c0 = column[i], c1 = column[i + 1];
  return {double(c0.real()) + frac * (double(c1.real()) - double(c0.real())),
          double(c0.imag()) + frac * (double(c1.imag()) - double(c0.imag()))};
}

std::complex<double> focus_pixel(const RcCube& cube, std::size_t pulse,
                                 const std::vector<Vec3>& apcs, const Vec3& pixel) {
  const double k4pi = 4.0 * std::numbers::pi / cube.params.wavelength();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t n = 0; n < apcs.size(); ++n) {
    const double r = range_to(apcs[n], pixel);
    const auto v = interp_rc({cube.column(n, pulse), cube.n_range()}, cube.range_axis, r);
    double ph = k4pi * r;
    ph -= kTwoPi * std::floor(ph * kInvTwoPi);
    acc += v * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return acc;
}

ComplexImage focus_mimo_single(const RcCube& cube, std::size_t pulse, const PlatformState& state,
                               const ImageGrid& grid, const FocusOptions& opts) {
  cube.validate();
  grid.validate();
  if (pulse >= cube.n_pulses()) throw std::invalid_argument("focus_mimo_single: pulse out of range");
  check_finite_slice(cube, pulse);

  ComplexImage img;
  img.grid = grid;
  img.pixels.resize(grid.n_pixels());
  const auto apcs = apc_positions(cube.params, state, heading_of(state, opts.heading));
  backproject_pulse(cube, pulse, apcs, grid, img.pixels.data());
  return img;
}

ImageStack focus_stack(const RcCube& cube, const TrajectorySet& traj, const ImageGrid& grid,
                       const FocusOptions& opts) {
  cube.validate();
  grid.validate();
  traj.validate();
  if (traj.size() != cube.n_pulses())
    throw std::invalid_argument("focus_stack: trajectory/cube pulse count mismatch");

  ImageStack stack;
  stack.grid = grid;
  stack.slow_times = cube.slow_times;
  stack.data.resize(grid.n_pixels() * cube.n_pulses());

  parallel_for(cube.n_pulses(), opts.workers, [&](std::size_t m) {
    check_finite_slice(cube, m);
    const PlatformState& state = opts.use_nav ? traj.nav_states[m] : traj.true_states[m];
    const auto apcs = apc_positions(cube.params, state, heading_of(state, opts.heading));
    backproject_pulse(cube, m, apcs, grid, stack.data.data() + m * grid.n_pixels());
  });
  return stack;
}

ComplexImage coherent_sum(const ImageStack& stack) {
  if (stack.size() == 0) throw std::invalid_argument("coherent_sum: empty stack");
  const std::size_t n_px = stack.grid.n_pixels();
  std::vector<std::complex<double>> acc(n_px, {0.0, 0.0});
  for (std::size_t m = 0; m < stack.size(); ++m) {
    const auto img = stack.image(m);
    for (std::size_t p = 0; p < n_px; ++p)
      acc[p] += std::complex<double>(img[p].real(), img[p].imag());
  }
  ComplexImage out;
  out.grid = stack.grid;
  out.pixels.resize(n_px);
  for (std::size_t p = 0; p < n_px; ++p)
    out.pixels[p] = std::complex<float>(float(acc[p].real()), float(acc[p].imag()));
  return out;
}

double sar_angular_resolution(double lambda, double aperture_len, double phi) {
  if (lambda <= 0 || aperture_len <= 0)
    throw std::invalid_argument("sar_angular_resolution: lambda and aperture must be > 0");
  const double s = std::abs(std::sin(phi));
  if (s == 0.0) return std::numeric_limits<double>::infinity();
  return lambda / (2.0 * aperture_len * s);
}

double mimo_angular_resolution(double lambda, int n, double dy, double phi) {
  if (lambda <= 0 || n < 1 || dy <= 0)
    throw std::invalid_argument("mimo_angular_resolution: invalid array parameters");
  const double c = std::abs(std::cos(phi));
  if (c == 0.0) return std::numeric_limits<double>::infinity();
  return lambda / (2.0 * double(n) * dy * c);
}

}  // namespace mimosar
