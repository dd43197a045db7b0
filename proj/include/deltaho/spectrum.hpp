#pragma once

// Bound-state spectrum of the harmonic oscillator with a delta at the origin.
//
// Odd states never see the delta and keep nu = 1, 3, 5, ...  Even states
// satisfy the jump condition at y = 0, which for
// psi = exp(-y^2/2) U(-nu/2, 1/2, y^2) reads
//
//     nu / Gamma(1 - nu/2) - g / Gamma(1/2 - nu/2) = 0.
//
// This reciprocal-Gamma form has the same roots as
// nu - g Gamma(1 - nu/2) / Gamma(1/2 - nu/2) but no poles. Roots interlace
// with the odd integers: (2k, 2k+1) for g > 0, (2k-1, 2k) for g < 0, plus one
// root below zero for g < 0.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltaho/error.hpp"
#include "deltaho/specfun.hpp"

namespace deltaho {

/// Dimensionless delta strength g = alpha a0 m / hbar^2.
class Coupling {
 public:
  constexpr Coupling() = default;
  explicit Coupling(double g) : g_(g) {
    if (!std::isfinite(g)) throw domain_error("Coupling: g must be finite");
  }
  [[nodiscard]] constexpr double value() const { return g_; }

  friend constexpr bool operator==(Coupling, Coupling) = default;

 private:
  double g_ = 0.0;
};

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// One bound state. epsilon = nu + 1/2 is the energy in units of hbar omega.
struct EigenSolution {
  Parity parity = Parity::even;
  double nu = 0.0;
  double epsilon = 0.5;
  std::size_t index = 0;  ///< position in the energy-ordered spectrum

  static EigenSolution make(Parity parity, double nu, std::size_t index) {
    return {parity, nu, nu + 0.5, index};
  }

  friend bool operator==(const EigenSolution&, const EigenSolution&) = default;
};

struct SolverConfig {
  double root_tol = 1e-10;   ///< absolute bracket width on nu at exit
  int max_iter = 200;
  /// Starting point for the downward search for the g < 0 bound state.
  /// Defaults to -2 max(1, g^2).
  std::optional<double> nu_min;
  std::size_t n_states = 5;

  void validate() const {
    if (!(root_tol > 0.0)) throw domain_error("SolverConfig: root_tol must be > 0");
    if (max_iter < 10) throw domain_error("SolverConfig: max_iter must be >= 10");
    if (n_states < 1) throw domain_error("SolverConfig: n_states must be >= 1");
    if (nu_min && !(*nu_min < 0.0)) throw domain_error("SolverConfig: nu_min must be < 0");
  }
};

/// Open interval containing exactly one even-parity root.
struct Bracket {
  double lo;
  double hi;

  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/// Pole-free even-parity eigenvalue function
/// nu / Gamma(1 - nu/2) - g / Gamma(1/2 - nu/2).
inline double eigen_equation(double nu, Coupling g) {
  using specfun::reciprocal_gamma;
  return nu * reciprocal_gamma(1.0 - 0.5 * nu) - g.value() * reciprocal_gamma(0.5 - 0.5 * nu);
}

namespace detail {

inline constexpr int max_doublings = 60;

// Same sign as eigen_equation everywhere. For nu < 0 both Gammas are positive
// and finite, so the ratio form is evaluated in logs; the reciprocal form
// underflows to zero once -nu/2 passes ~170.
inline double eigen_sign_function(double nu, Coupling g) {
  if (nu < 0.0) {
    using specfun::log_gamma;
    return nu - g.value() * std::exp(log_gamma(1.0 - 0.5 * nu) - log_gamma(0.5 - 0.5 * nu));
  }
  return eigen_equation(nu, g);
}

inline bool opposite_signs(double a, double b) {
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

}  // namespace detail

/// Bracketed root refinement: alternates a secant step (only taken when it
/// lands strictly inside the bracket) with a bisection step, so the bracket
/// at least halves every two evaluations. Stops once the bracket width is
/// <= tol and returns the secant point inside that final bracket.
template <typename F>
double refine_root(F&& f, double lo, double hi, double tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!detail::opposite_signs(flo, fhi)) {
    throw bracket_error("refine_root: no sign change on [" + fmt_num(lo) + ", " +
                        fmt_num(hi) + "]");
  }
  auto final_point = [&] {
    const double s = hi - fhi * (hi - lo) / (fhi - flo);
    return std::clamp(s, lo, hi);
  };
  for (int it = 0; it < max_iter; ++it) {
    if (hi - lo <= tol) return final_point();
    double x = 0.5 * (lo + hi);
    if (it % 2 == 0) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (detail::opposite_signs(flo, fx)) {
      hi = x;
      fhi = fx;
    } else {
      lo = x;
      flo = fx;
    }
  }
  if (hi - lo <= tol) return final_point();
  throw convergence_error("refine_root: bracket width " + fmt_num(hi - lo) +
                          " after " + std::to_string(max_iter) + " iterations");
}

/// Intervals each holding exactly one even-parity root, in energy order.
inline std::vector<Bracket> bracket_even_roots(Coupling g, std::size_t n_states,
                                               const SolverConfig& cfg = {}) {
  if (g.value() == 0.0) throw domain_error("bracket_even_roots: g must be nonzero");
  if (n_states < 1) throw domain_error("bracket_even_roots: n_states must be >= 1");

  std::vector<Bracket> out;
  out.reserve(n_states);
  if (g.value() > 0.0) {
    for (std::size_t k = 0; k < n_states; ++k) {
      out.push_back({2.0 * k, 2.0 * k + 1.0});
    }
    return out;
  }

  // The bound state sits near -g^2 - 1/2; walk down until the sign flips.
  const double f_top = detail::eigen_sign_function(0.0, g);
  double lo = cfg.nu_min.value_or(-2.0 * std::max(1.0, g.value() * g.value()));
  int doublings = 0;
  while (!detail::opposite_signs(detail::eigen_sign_function(lo, g), f_top)) {
    if (++doublings > detail::max_doublings) {
      throw bracket_error("bracket_even_roots: no sign change below nu = 0 for g = " +
                          fmt_num(g.value()) + " (searched down to " +
                          fmt_num(lo) + ")");
    }
    lo *= 2.0;
  }
  out.push_back({lo, 0.0});
  for (std::size_t k = 1; k < n_states; ++k) {
    out.push_back({2.0 * k - 1.0, 2.0 * k});
  }
  return out;
}

/// Residual bound accepted for a refined even root.
inline double even_residual_bound(double nu) { return 1e-8 * (1.0 + std::abs(nu)); }

/// The first cfg.n_states even-parity states, energy ordered.
inline std::vector<EigenSolution> solve_even(Coupling g, const SolverConfig& cfg = {}) {
  cfg.validate();
  std::vector<EigenSolution> out;
  out.reserve(cfg.n_states);
  if (g.value() == 0.0) {
    for (std::size_t k = 0; k < cfg.n_states; ++k) {
      out.push_back(EigenSolution::make(Parity::even, 2.0 * k, 2 * k));
    }
    return out;
  }
  const auto brackets = bracket_even_roots(g, cfg.n_states, cfg);
  for (std::size_t k = 0; k < brackets.size(); ++k) {
    const auto [lo, hi] = brackets[k];
    const double nu = refine_root([g](double x) { return detail::eigen_sign_function(x, g); },
                                  lo, hi, cfg.root_tol, cfg.max_iter);
    if (!(nu > lo && nu < hi)) {
      throw bracket_error("solve_even: root " + fmt_num(nu) + " left bracket (" +
                          fmt_num(lo) + ", " + fmt_num(hi) + ")");
    }
    const double residual = std::abs(eigen_equation(nu, g));
    if (residual > even_residual_bound(nu)) {
      throw convergence_error("solve_even: residual " + fmt_num(residual) +
                              " at nu = " + fmt_num(nu));
    }
    out.push_back(EigenSolution::make(Parity::even, nu, 2 * k));
  }
  return out;
}

/// nu = 1, 3, 5, ... independent of g.
inline std::vector<EigenSolution> solve_odd(std::size_t n_states) {
  if (n_states < 1) throw domain_error("solve_odd: n_states must be >= 1");
  std::vector<EigenSolution> out;
  out.reserve(n_states);
  for (std::size_t j = 0; j < n_states; ++j) {
    out.push_back(EigenSolution::make(Parity::odd, 2.0 * j + 1.0, 2 * j + 1));
  }
  return out;
}

/// The lowest cfg.n_states states of both parities, sorted by energy.
inline std::vector<EigenSolution> full_spectrum(Coupling g, const SolverConfig& cfg = {}) {
  cfg.validate();
  const std::size_t n = cfg.n_states;
  SolverConfig even_cfg = cfg;
  even_cfg.n_states = (n + 1) / 2;
  auto states = solve_even(g, even_cfg);
  if (n / 2 > 0) {
    const auto odd = solve_odd(n / 2);
    states.insert(states.end(), odd.begin(), odd.end());
  }
  std::sort(states.begin(), states.end(),
            [](const EigenSolution& a, const EigenSolution& b) { return a.epsilon < b.epsilon; });
  for (std::size_t i = 0; i < states.size(); ++i) states[i].index = i;
  return states;
}

/// Deep-delta limit of the lowest energy: epsilon -> -g^2 / 2 as g -> -inf.
inline double bound_state_asymptote(Coupling g) {
  if (!(g.value() < 0.0)) throw domain_error("bound_state_asymptote: requires g < 0");
  return -0.5 * g.value() * g.value();
}

}  // namespace deltaho
