#pragma once

// Eigenfunctions in the dimensionless coordinate y = x / a0.
//
//   even: psi(y) = A exp(-y^2/2) U(-nu/2, 1/2, y^2), extended as psi(|y|)
//   odd:  psi(y) = A exp(-y^2/2) H_n(y)
//
// A is fixed by unit L2 norm with psi > 0 just right of the origin.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltaho/error.hpp"
#include "deltaho/quadrature.hpp"
#include "deltaho/specfun.hpp"
#include "deltaho/spectrum.hpp"

namespace deltaho {

/// Real function sampled on a uniform grid [y_min, y_max], endpoints included.
/// Immutable once built.
class GridFunction {
 public:
  GridFunction(double y_min, double y_max, std::vector<double> values)
      : y_min_(y_min), y_max_(y_max), values_(std::move(values)) {
    if (!(y_max_ > y_min_)) throw grid_error("GridFunction: y_max must exceed y_min");
    if (values_.size() < 3) throw grid_error("GridFunction: need at least 3 points");
  }

  [[nodiscard]] double y_min() const { return y_min_; }
  [[nodiscard]] double y_max() const { return y_max_; }
  [[nodiscard]] std::size_t n_points() const { return values_.size(); }
  [[nodiscard]] double spacing() const {
    return (y_max_ - y_min_) / static_cast<double>(values_.size() - 1);
  }
  [[nodiscard]] double y(std::size_t i) const {
    return y_min_ + static_cast<double>(i) * spacing();
  }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

  [[nodiscard]] bool same_grid(const GridFunction& o) const {
    return y_min_ == o.y_min_ && y_max_ == o.y_max_ && values_.size() == o.values_.size();
  }

 private:
  double y_min_;
  double y_max_;
  std::vector<double> values_;
};

/// Symmetric sampling grid [-half_width, half_width] with an odd point count.
struct GridSpec {
  double half_width = 10.0;
  std::size_t n_points = 2001;
  /// Widen the domain (same spacing) until the state has decayed at the edges.
  bool auto_widen = true;
  double max_half_width = 40.0;
};

namespace wf_detail {

// exp(-y^2/2) is below the smallest double past this.
inline constexpr double gaussian_floor_y2 = 700.0;
inline constexpr double decay_tolerance = 1e-12;
// Largest tolerated evaluation error relative to max |psi| on a sampled grid.
inline constexpr double max_sample_error = 1e-6;

struct Sample {
  double value;
  double abs_error;
};

inline Sample even_sample(double nu, double y) {
  const double z = y * y;
  if (z > gaussian_floor_y2) return {0.0, 0.0};
  const auto u = specfun::kummer_u_half_estimated(nu, z);
  const double v = std::exp(-0.5 * z) * u.value;
  return {v, std::abs(v) * u.rel_error};
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline bool decayed(std::span<const double> v, double peak) {
  return std::abs(v.front()) <= decay_tolerance * peak &&
         std::abs(v.back()) <= decay_tolerance * peak;
}

}  // namespace wf_detail

/// Unnormalized even eigenfunction exp(-y^2/2) U(-nu/2, 1/2, y^2).
inline double eval_even(double nu, double y) { return wf_detail::even_sample(nu, y).value; }

/// Unnormalized odd eigenfunction exp(-y^2/2) H_n(y); n must be odd.
inline double eval_odd(unsigned n, double y) {
  if (n % 2 == 0) throw parity_error("eval_odd: n must be odd, got " + std::to_string(n));
  const double z = y * y;
  if (z > wf_detail::gaussian_floor_y2) return 0.0;
  return std::exp(-0.5 * z) * specfun::hermite(n, y);
}

/// Scale f to unit Simpson norm. Returns the scaled function and the
/// original L2 norm.
inline std::pair<GridFunction, double> normalize(const GridFunction& f) {
  const auto v = f.values();
  const double peak = wf_detail::max_abs(v);
  if (peak == 0.0) throw grid_error("normalize: function is identically zero");
  if (!wf_detail::decayed(v, peak)) {
    throw grid_error("normalize: function has not decayed at the grid edges [" +
                     fmt_num(f.y_min()) + ", " + fmt_num(f.y_max()) + "]");
  }
  const double norm = std::sqrt(quadrature::simpson_product<double>(v, v, f.spacing()));
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x /= norm;
  return {GridFunction(f.y_min(), f.y_max(), std::move(out)), norm};
}

/// |[psi'(0+) - psi'(0-)] - 2 g psi(0)| for the unnormalized even function,
/// using the analytic limits of U at the origin.
inline double jump_check(double nu, Coupling g) {
  const auto o = specfun::kummer_u_half_origin(nu);
  return std::abs(2.0 * o.slope_coefficient - 2.0 * g.value() * o.value0);
}

/// The normalized eigenfunction of `sol` on a symmetric grid.
inline GridFunction sample_state(const EigenSolution& sol, const GridSpec& spec = {}) {
  if (spec.n_points < 3 || spec.n_points % 2 == 0) {
    throw grid_error("sample_state: n_points must be odd and >= 3");
  }
  if (!(spec.half_width > 0.0)) throw grid_error("sample_state: half_width must be > 0");

  unsigned odd_n = 0;
  if (sol.parity == Parity::odd) {
    if (sol.nu < 1.0 || sol.nu != std::floor(sol.nu) || std::fmod(sol.nu, 2.0) != 1.0) {
      throw parity_error("sample_state: odd state needs nu = 1, 3, 5, ...");
    }
    odd_n = static_cast<unsigned>(sol.nu);
  }

  const double h = 2.0 * spec.half_width / static_cast<double>(spec.n_points - 1);
  std::size_t per_side = (spec.n_points - 1) / 2;
  while (true) {
    const std::size_t n = 2 * per_side + 1;
    std::vector<double> v(n);
    double worst_error = 0.0;
    for (std::size_t i = 0; i <= per_side; ++i) {
      const double y = static_cast<double>(i) * h;
      double value = 0.0;
      if (sol.parity == Parity::even) {
        const auto s = wf_detail::even_sample(sol.nu, y);
        value = s.value;
        worst_error = std::max(worst_error, s.abs_error);
        v[per_side - i] = value;
      } else {
        value = eval_odd(odd_n, y);
        v[per_side - i] = -value;
      }
      v[per_side + i] = value;
    }
    const double peak = wf_detail::max_abs(v);
    if (peak == 0.0) throw grid_error("sample_state: state vanishes on the grid");
    if (worst_error > wf_detail::max_sample_error * peak) {
      throw convergence_error("sample_state: U evaluation lost precision for nu = " +
                              fmt_num(sol.nu));
    }
    const double half_width = static_cast<double>(per_side) * h;
    if (!wf_detail::decayed(v, peak)) {
      if (!spec.auto_widen) {
        throw grid_error("sample_state: state not decayed at +-" + fmt_num(half_width));
      }
      std::size_t grow = std::max<std::size_t>(2, per_side / 5);
      grow += grow % 2;
      per_side += grow;
      if (static_cast<double>(per_side) * h > spec.max_half_width) {
        throw grid_error("sample_state: domain would exceed +-" +
                         fmt_num(spec.max_half_width));
      }
      continue;
    }
    // Sign convention: positive just right of the origin.
    double sign = 1.0;
    for (std::size_t i = per_side; i < n; ++i) {
      if (v[i] != 0.0) {
        sign = v[i] > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    if (sign < 0.0) {
      for (double& x : v) x = -x;
    }
    return normalize(GridFunction(-half_width, half_width, std::move(v))).first;
  }
}

/// Simpson inner product of two functions on the same grid.
inline double orthogonality(const GridFunction& a, const GridFunction& b) {
  if (!a.same_grid(b)) throw grid_error("orthogonality: grids differ");
  return quadrature::simpson_product<double>(a.values(), b.values(), a.spacing());
}

/// Pointwise |f|^2.
inline GridFunction density(const GridFunction& f) {
  std::vector<double> out(f.values().begin(), f.values().end());
  for (double& x : out) x *= x;
  return GridFunction(f.y_min(), f.y_max(), std::move(out));
}

/// Number of sign changes, ignoring exact zeros.
inline std::size_t count_sign_changes(std::span<const double> v) {
  std::size_t changes = 0;
  int last = 0;
  for (double x : v) {
    const int s = (x > 0.0) - (x < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace deltaho
