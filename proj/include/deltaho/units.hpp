#pragma once

#include <cmath>
#include <string>

#include "deltaho/error.hpp"
#include "deltaho/spectrum.hpp"

namespace deltaho {

/// Physical parameters of H = p^2/2m + m w^2 x^2/2 + alpha delta(x).
struct PhysicalScales {
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double alpha = 0.0;

  void validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw domain_error("mass must be > 0");
    if (!(omega > 0.0) || !std::isfinite(omega)) throw domain_error("omega must be > 0");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw domain_error("hbar must be > 0");
    if (!std::isfinite(alpha)) throw domain_error("alpha must be finite");
  }

  /// Oscillator length a0 = sqrt(hbar / (m omega)).
  [[nodiscard]] double length() const { return std::sqrt(hbar / (mass * omega)); }

  /// g = alpha a0 m / hbar^2.
  [[nodiscard]] Coupling coupling() const { return Coupling(alpha * length() * mass / (hbar * hbar)); }

  /// E = epsilon hbar omega.
  [[nodiscard]] double energy(double epsilon) const { return epsilon * hbar * omega; }

  /// Bound-state energy of the delta alone, -alpha^2 m / (2 hbar^2).
  [[nodiscard]] double isolated_delta_energy() const {
    return -alpha * alpha * mass / (2.0 * hbar * hbar);
  }

  /// Inverse decay length kappa = m |alpha| / hbar^2 of the isolated delta state.
  [[nodiscard]] double isolated_delta_kappa() const {
    return mass * std::abs(alpha) / (hbar * hbar);
  }
};

}  // namespace deltaho
