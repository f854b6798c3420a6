#ifndef MIMOSAR_FOCUSING_HPP
#define MIMOSAR_FOCUSING_HPP

#include <complex>
#include <span>
#include <vector>

#include "mimosar/echo_sim.hpp"
#include "mimosar/geometry.hpp"

namespace mimosar {

/// Fixed focusing plane z = z_plane sampled by uniform, strictly
/// increasing x and y axes.
struct ImageGrid {
  std::vector<double> x_axis;
  std::vector<double> y_axis;
  double z_plane = 0.0;

  std::size_t nx() const { return x_axis.size(); }
  std::size_t ny() const { return y_axis.size(); }
  std::size_t n_pixels() const { return nx() * ny(); }
  double dx() const { return x_axis.size() > 1 ? x_axis[1] - x_axis[0] : 0.0; }
  double dy() const { return y_axis.size() > 1 ? y_axis[1] - y_axis[0] : 0.0; }

  Vec3 pixel_position(std::size_t i, std::size_t j) const {
    return {x_axis[i], y_axis[j], z_plane};
  }

  static ImageGrid make(double x_min, double x_max, double y_min, double y_max,
                        double spacing, double z_plane);
  /// Forward-looking fan: x in [2, max_range], y symmetric, ground plane,
  /// spacing rho_r/2.
  static ImageGrid default_fan(const RadarParams& params, double max_range);

  void validate() const;
  bool operator==(const ImageGrid&) const = default;
};

/// Complex pixels over an ImageGrid, x-major (index = ix * ny + iy).
struct ComplexImage {
  ImageGrid grid;
  std::vector<std::complex<float>> pixels;

  std::complex<float>& at(std::size_t ix, std::size_t iy) { return pixels[ix * grid.ny() + iy]; }
  std::complex<float> at(std::size_t ix, std::size_t iy) const { return pixels[ix * grid.ny() + iy]; }

  /// (ix, iy) of the magnitude maximum.
  std::pair<std::size_t, std::size_t> argmax_abs() const;
};

/// Real-valued image (e.g. incoherent mean), same layout as ComplexImage.
struct RealImage {
  ImageGrid grid;
  std::vector<double> values;

  double& at(std::size_t ix, std::size_t iy) { return values[ix * grid.ny() + iy]; }
  double at(std::size_t ix, std::size_t iy) const { return values[ix * grid.ny() + iy]; }
  std::pair<std::size_t, std::size_t> argmax() const;
};

/// M co-registered low-resolution images over one common grid, stored
/// contiguously (pulse-major).
struct ImageStack {
  ImageGrid grid;
  std::vector<double> slow_times;
  std::vector<std::complex<float>> data;

  std::size_t size() const { return slow_times.size(); }
  std::span<std::complex<float>> image(std::size_t m) {
    return {data.data() + m * grid.n_pixels(), grid.n_pixels()};
  }
  std::span<const std::complex<float>> image(std::size_t m) const {
    return {data.data() + m * grid.n_pixels(), grid.n_pixels()};
  }
  ComplexImage image_copy(std::size_t m) const;
};

/// Linear interpolation of a range-compressed column at r_query
/// (re/im separately); 0 outside the axis.
std::complex<double> interp_rc(std::span<const std::complex<float>> column,
                               const std::vector<double>& range_axis, double r_query);

struct FocusOptions {
  unsigned workers = 1;
  bool use_nav = true;          // focus with nav states; false = oracle mode
  std::optional<Vec3> heading;  // override; default state-velocity direction
};

/// Back-projection of the N channels received at one slow time onto the
/// grid: per pixel, sum over channels of s_rc interpolated at r(n;x)
/// times exp(+j 4 pi r(n;x) / lambda). APC positions come from `state`.
ComplexImage focus_mimo_single(const RcCube& cube, std::size_t pulse, const PlatformState& state,
                               const ImageGrid& grid, const FocusOptions& opts = {});

/// focus_mimo_single per slow time over the common grid.
ImageStack focus_stack(const RcCube& cube, const TrajectorySet& traj, const ImageGrid& grid,
                       const FocusOptions& opts = {});

/// Pixelwise complex sum over the stack (slow times in index order).
ComplexImage coherent_sum(const ImageStack& stack);

/// lambda / (2 A_s sin(phi)); +inf when sin(phi) = 0.
double sar_angular_resolution(double lambda, double aperture_len, double phi);
/// lambda / (2 N dy cos(phi)); +inf when cos(phi) = 0.
double mimo_angular_resolution(double lambda, int n, double dy, double phi);

/// Single-pixel back-projection kernel (channels in index order), exposed
/// for point-response probing off the Cartesian grid.
std::complex<double> focus_pixel(const RcCube& cube, std::size_t pulse,
                                 const std::vector<Vec3>& apcs, const Vec3& pixel);

}  // namespace mimosar

#endif
