#pragma once

// Real-valued special functions for the oscillator-plus-delta problem:
// the Gamma family, Kummer's M and Tricomi's U at b = 1/2, and the
// physicists' Hermite polynomials.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>

#include "deltaho/error.hpp"

namespace deltaho::specfun {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Largest argument for which Gamma is a finite double.
inline constexpr double gamma_max_arg = 171.62437695630272;

inline double lanczos_sum(double xm) {
  double a = lanczos_coef[0];
  for (std::size_t i = 1; i < lanczos_coef.size(); ++i) {
    a += lanczos_coef[i] / (xm + static_cast<double>(i));
  }
  return a;
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// sin(pi x), exactly zero at integers.
inline double sinpi(double x) {
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;  // r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(pi * r);
}

// Gamma for x >= 0.5 (no reflection).
inline double gamma_positive(double x) {
  const double xm = x - 1.0;
  const double t = xm + lanczos_g + 0.5;
  // Split the power so t^(x-1/2) does not overflow before exp(-t) scales it.
  const double half = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * pi) * half * (std::exp(-t) * half) * lanczos_sum(xm);
}

inline double log_gamma_positive(double x) {
  const double xm = x - 1.0;
  const double t = xm + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (xm + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(xm));
}

}  // namespace detail

/// Natural log of Gamma for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw domain_error("log_gamma: argument must be positive and finite, got " +
                       fmt_num(x));
  }
  if (x < 0.5) return detail::log_gamma_positive(x + 1.0) - std::log(x);
  return detail::log_gamma_positive(x);
}

/// Gamma(x). Reflection is used below 1/2.
inline double gamma(double x) {
  if (!std::isfinite(x)) throw domain_error("gamma: non-finite argument");
  if (detail::is_nonpositive_integer(x)) {
    throw pole_error("gamma: pole at " + fmt_num(x));
  }
  if (x < 0.5) {
    const double s = detail::sinpi(x);
    const double y = 1.0 - x;
    if (y <= detail::gamma_max_arg) return pi / (s * detail::gamma_positive(y));
    // |Gamma(x)| is tiny here; go through logs so Gamma(1 - x) never overflows.
    return std::copysign(pi / std::abs(s) * std::exp(-log_gamma(y)), s);
  }
  if (x > detail::gamma_max_arg) {
    throw overflow_error("gamma: overflow at " + fmt_num(x));
  }
  return detail::gamma_positive(x);
}

/// 1/Gamma(x). Entire: exactly zero at 0, -1, -2, ...
inline double reciprocal_gamma(double x) {
  if (std::isnan(x)) return x;
  if (detail::is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) {
    if (x > detail::gamma_max_arg) return std::exp(-log_gamma(x));
    return 1.0 / detail::gamma_positive(x);
  }
  const double s = detail::sinpi(x);
  const double y = 1.0 - x;
  if (y <= detail::gamma_max_arg) return s * detail::gamma_positive(y) / pi;
  return s * std::exp(log_gamma(y)) / pi;
}

/// Arguments of Kummer's functions M(a, b, z) and U(a, b, z).
struct KummerParams {
  double a;
  double b;
  double z;
};

namespace detail {

inline constexpr int kummer_max_terms = 500;
inline constexpr double kummer_rel_stop = 1e-17;
inline constexpr int kummer_quiet_terms = 3;

}  // namespace detail

/// Kummer's M(a, b, z) by the ascending series. Terminates exactly when a is
/// zero or a negative integer.
inline double kummer_m(const KummerParams& p) {
  if (detail::is_nonpositive_integer(p.b)) {
    throw domain_error("kummer_m: b must not be a non-positive integer");
  }
  if (!(p.z >= 0.0)) throw domain_error("kummer_m: z must be >= 0");

  double term = 1.0;
  double sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < detail::kummer_max_terms; ++k) {
    term *= (p.a + k) / (p.b + k) * p.z / (k + 1);
    sum += term;
    if (!std::isfinite(sum)) {
      throw overflow_error("kummer_m: series overflow at z = " + fmt_num(p.z));
    }
    if (std::abs(term) < detail::kummer_rel_stop * std::abs(sum) || term == 0.0) {
      if (++quiet == detail::kummer_quiet_terms) return sum;
    } else {
      quiet = 0;
    }
  }
  throw convergence_error("kummer_m: no convergence in " +
                          std::to_string(detail::kummer_max_terms) + " terms (a = " +
                          fmt_num(p.a) + ", z = " + fmt_num(p.z) + ")");
}

/// A value of U together with an estimate of its relative error.
struct EstimatedValue {
  double value;
  double rel_error;
};

namespace detail {

inline constexpr double eps = std::numeric_limits<double>::epsilon();
inline constexpr double u_asymptotic_min_z = 10.0;
inline constexpr double u_connection_max_z = 700.0;

// U(a, 1/2, z) through M: the connection formula with reciprocal Gammas, so
// the term whose Gamma denominator has a pole drops out exactly.
inline EstimatedValue kummer_u_half_connection(double a, double z) {
  constexpr double rg_half = 1.0 / sqrt_pi;        // 1/Gamma(1/2)
  constexpr double rg_three_halves = 2.0 / sqrt_pi;  // 1/Gamma(3/2)
  const double w1 = reciprocal_gamma(a + 0.5);
  const double w2 = reciprocal_gamma(a);
  double t1 = 0.0;
  double t2 = 0.0;
  if (w1 != 0.0) t1 = pi * rg_half * w1 * kummer_m({a, 0.5, z});
  if (w2 != 0.0) t2 = pi * rg_three_halves * w2 * std::sqrt(z) * kummer_m({a + 0.5, 1.5, z});
  const double u = t1 - t2;
  const double scale = std::abs(t1) + std::abs(t2);
  const double err = 8.0 * eps * scale / std::max(std::abs(u), std::numeric_limits<double>::min());
  return {u, err};
}

// U(a, 1/2, z) ~ z^(-a) sum_k (a)_k (a + 1/2)_k / k! (-1/z)^k, truncated
// before the smallest term. Exact (terminating) when a or a + 1/2 is a
// non-positive integer.
inline EstimatedValue kummer_u_half_asymptotic(double a, double z) {
  constexpr int max_terms = 400;
  const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(a + 0.5);
  double term = 1.0;
  double sum = 1.0;
  double err = std::numeric_limits<double>::infinity();
  for (int k = 0; k < max_terms; ++k) {
    const double next = term * (a + k) * (a + 0.5 + k) / ((k + 1) * -z);
    if (next == 0.0) {
      err = 0.0;
      break;
    }
    if (!terminating && std::abs(next) >= std::abs(term)) {
      err = std::abs(term / sum);
      break;
    }
    sum += next;
    term = next;
    if (!terminating && std::abs(term) < eps * std::abs(sum)) {
      err = eps;
      break;
    }
  }
  const double power = std::pow(z, -a);
  if (!std::isfinite(power)) {
    throw overflow_error("kummer_u_half: z^(nu/2) overflows at z = " + fmt_num(z));
  }
  return {power * sum, std::max(err, 2.0 * eps)};
}

// U(a, 1/2, z) = 1/Gamma(a) int_0^inf exp(-z t) t^(a-1) (1+t)^(-a-1/2) dt
// for a > 0, z > 0. With t = e^s the integrand is smooth, unimodal and decays
// at least exponentially both ways, so the trapezoid rule converges
// geometrically. Used for the deep bound state (large positive a) where the
// other two routes cancel.
inline EstimatedValue kummer_u_half_integral(double a, double z) {
  const double lg = log_gamma(a);
  auto log_f = [&](double s) {
    const double t = std::exp(s);
    const double log1pt = s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(t);
    return a * s - (a + 0.5) * log1pt - z * t - lg;
  };
  // Peak: a - (a + 1/2) t/(1+t) - z t = 0, decreasing in s.
  auto slope = [&](double s) {
    const double t = std::exp(s);
    return a - (a + 0.5) * t / (1.0 + t) - z * t;
  };
  double lo = -1.0;
  double hi = 1.0;
  while (slope(lo) < 0.0) lo *= 2.0;
  while (slope(hi) > 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  const double s0 = 0.5 * (lo + hi);
  const double t0 = std::exp(s0);
  const double curvature = (a + 0.5) * t0 / ((1.0 + t0) * (1.0 + t0)) + z * t0;
  const double h = 0.125 / std::sqrt(curvature);
  const double peak = log_f(s0);

  // Scaled by exp(-peak); coarse uses every second node.
  double fine = 0.0;
  double coarse = 0.0;
  for (int dir : {+1, -1}) {
    for (int k = (dir > 0 ? 0 : 1); k < 200000; ++k) {
      const double w = std::exp(log_f(s0 + dir * k * h) - peak);
      fine += w;
      if (k % 2 == 0) coarse += w;
      if (w < 1e-18 && k > 8) break;
    }
  }
  const double value = std::exp(peak) * h * fine;
  const double coarse_value = std::exp(peak) * 2.0 * h * coarse;
  const double err = std::max(std::abs(value - coarse_value) / std::abs(value), 4.0 * eps);
  return {value, err};
}

}  // namespace detail

/// U(-nu/2, 1/2, z) with an estimate of its relative error. The connection
/// formula through M is the primary route; the large-z asymptotic series and,
/// for nu <= -2, the integral representation take over where M cancels.
inline EstimatedValue kummer_u_half_estimated(double nu, double z) {
  if (!(z >= 0.0)) throw domain_error("kummer_u_half: z must be >= 0");
  const double a = -0.5 * nu;
  EstimatedValue best{0.0, std::numeric_limits<double>::infinity()};
  if (z >= detail::u_asymptotic_min_z) {
    best = detail::kummer_u_half_asymptotic(a, z);
    if (best.rel_error <= 4.0 * detail::eps) return best;
  }
  if (z <= detail::u_connection_max_z) {
    const auto conn = detail::kummer_u_half_connection(a, z);
    if (conn.rel_error < best.rel_error) best = conn;
  }
  if (a >= 1.0 && z > 0.0 && best.rel_error > 1e-12) {
    const auto integral = detail::kummer_u_half_integral(a, z);
    if (integral.rel_error < best.rel_error) best = integral;
  }
  if (!std::isfinite(best.value)) {
    throw overflow_error("kummer_u_half: non-finite result at z = " + fmt_num(z));
  }
  return best;
}

/// U(-nu/2, 1/2, z) for z >= 0.
inline double kummer_u_half(double nu, double z) {
  return kummer_u_half_estimated(nu, z).value;
}

/// Limits of U(-nu/2, 1/2, y^2) at y -> 0+.
struct OriginLimits {
  double value0;             ///< sqrt(pi) / Gamma(1/2 - nu/2)
  double slope_coefficient;  ///< d/dy at 0+: nu sqrt(pi) / Gamma(1 - nu/2)
};

inline OriginLimits kummer_u_half_origin(double nu) {
  return {sqrt_pi * reciprocal_gamma(0.5 - 0.5 * nu),
          nu * sqrt_pi * reciprocal_gamma(1.0 - 0.5 * nu)};
}

/// Physicists' Hermite polynomial H_n(y) by the three-term recurrence.
template <std::floating_point T>
T hermite(unsigned n, T y) {
  T prev = T(1);
  if (n == 0) return prev;
  T cur = T(2) * y;
  for (unsigned k = 1; k < n; ++k) {
    const T next = T(2) * y * cur - T(2) * T(k) * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) {
    throw overflow_error("hermite: overflow for n = " + std::to_string(n));
  }
  return cur;
}

}  // namespace deltaho::specfun
