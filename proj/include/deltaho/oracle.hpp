#pragma once

// Finite-difference cross-check. The dimensionless Hamiltonian
//
//     -1/2 psi'' + y^2/2 psi + g delta(y) psi = eps psi
//
// on [-L, L] with Dirichlet ends and the delta as a g/dy spike on the y = 0
// node becomes a symmetric tridiagonal matrix. Its lowest eigenvalues come
// from Sturm-count bisection; eigenvectors (for parity only) from inverse
// iteration.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "deltaho/error.hpp"
#include "deltaho/spectrum.hpp"

namespace deltaho::oracle {

struct OracleConfig {
  double half_width = 8.0;        ///< L; the grid spans [-L, L]
  std::size_t n_intervals = 4000;  ///< even, so y = 0 is an interior node
  std::size_t n_eigen = 6;

  void validate() const {
    if (n_intervals < 4 || n_intervals % 2 != 0) {
      throw domain_error("OracleConfig: n_intervals must be even and >= 4");
    }
    if (!(half_width >= 6.0)) throw domain_error("OracleConfig: half_width must be >= 6");
    if (n_eigen < 1) throw domain_error("OracleConfig: n_eigen must be >= 1");
    if (n_eigen > n_intervals - 1) {
      throw domain_error("OracleConfig: n_eigen exceeds the matrix dimension");
    }
  }

  [[nodiscard]] double spacing() const {
    return 2.0 * half_width / static_cast<double>(n_intervals);
  }
};

/// Symmetric tridiagonal matrix: diag[i], off[i] couples i and i+1.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;
  double spacing = 0.0;  ///< grid spacing it was built on (0 when abstract)

  [[nodiscard]] std::size_t size() const { return diag.size(); }
};

struct OracleSpectrum {
  std::vector<double> epsilons;
  std::vector<Parity> parities;  ///< empty unless the matrix is mirror symmetric
  double delta_y = 0.0;
  std::vector<std::vector<double>> vectors;  ///< unit eigenvectors
};

/// Discretized Hamiltonian on the interior nodes of [-L, L].
inline TridiagonalMatrix build_hamiltonian(Coupling g, const OracleConfig& cfg) {
  cfg.validate();
  const double h = cfg.spacing();
  const std::size_t dim = cfg.n_intervals - 1;
  const std::size_t center = cfg.n_intervals / 2 - 1;
  TridiagonalMatrix t;
  t.spacing = h;
  t.diag.resize(dim);
  t.off.assign(dim - 1, -0.5 / (h * h));
  for (std::size_t j = 0; j < dim; ++j) {
    // Node j sits at y = -L + (j + 1) h; index from the centre so y = 0 is exact.
    const double y = (static_cast<double>(j) - static_cast<double>(center)) * h;
    t.diag[j] = 1.0 / (h * h) + 0.5 * y * y;
  }
  t.diag[center] += g.value() / h;
  return t;
}

/// Number of eigenvalues strictly below x (sign count of the LDL^T pivots).
inline std::size_t sturm_count(const TridiagonalMatrix& t, double x) {
  double max_off2 = 1.0;
  for (double e : t.off) max_off2 = std::max(max_off2, e * e);
  const double pivmin = std::numeric_limits<double>::min() * max_off2;
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    q = t.diag[i] - x - (i > 0 ? t.off[i - 1] * t.off[i - 1] / q : 0.0);
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

/// Even if the mirrored half matches, odd if it matches with a sign flip.
inline Parity classify_parity(std::span<const double> v) {
  double sym = 0.0;
  double anti = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    sym += std::abs(v[i] - v[n - 1 - i]);
    anti += std::abs(v[i] + v[n - 1 - i]);
  }
  if (std::abs(sym - anti) < 0.01 * std::max(sym, anti)) {
    throw parity_error("classify_parity: vector is neither even nor odd");
  }
  return sym < anti ? Parity::even : Parity::odd;
}

namespace detail {

inline constexpr double eigen_abs_tol = 1e-10;
inline constexpr int inverse_iterations = 3;
inline constexpr int inverse_restarts = 4;
inline constexpr double close_gap = 1e-6;

// LU of a tridiagonal matrix with partial pivoting (LAPACK dgttrf layout).
struct TridiagonalLU {
  std::vector<double> dl, d, du, du2;
  std::vector<unsigned char> swapped;

  TridiagonalLU(const TridiagonalMatrix& t, double shift) {
    const std::size_t n = t.size();
    d.resize(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    dl = t.off;
    du = t.off;
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 0 ? n - 1 : 0, 0);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      norm = std::max(norm, std::abs(d[i]) + (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                                (i + 1 < n ? std::abs(t.off[i]) : 0.0));
    }
    const double tiny = std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
    if (n > 0 && d[n - 1] == 0.0) d[n - 1] = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n == 1) return;
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
  }
};

inline void multiply(const TridiagonalMatrix& t, const std::vector<double>& x,
                     std::vector<double>& out) {
  const std::size_t n = t.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = t.diag[i] * x[i];
    if (i > 0) s += t.off[i - 1] * x[i - 1];
    if (i + 1 < n) s += t.off[i] * x[i + 1];
    out[i] = s;
  }
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void scale_to_unit(std::vector<double>& v) {
  const double n = std::sqrt(dot(v, v));
  for (double& x : v) x /= n;
}

inline double gershgorin_low(const TridiagonalMatrix& t) {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                     (i + 1 < t.size() ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
  }
  return lo;
}

inline double gershgorin_high(const TridiagonalMatrix& t) {
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                     (i + 1 < t.size() ? std::abs(t.off[i]) : 0.0);
    hi = std::max(hi, t.diag[i] + r);
  }
  return hi;
}

// k-th smallest eigenvalue (0-based) by bisection on the Sturm count.
inline double bisect_eigenvalue(const TridiagonalMatrix& t, std::size_t k, double lo,
                                double hi) {
  const double eps = std::numeric_limits<double>::epsilon();
  while (hi - lo > std::max(eigen_abs_tol, 4.0 * eps * std::max(std::abs(lo), std::abs(hi)))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline std::vector<double> inverse_iteration(const TridiagonalMatrix& t, double lambda,
                                             std::size_t seed,
                                             const std::vector<std::vector<double>>& neighbours) {
  const std::size_t n = t.size();
  const TridiagonalLU lu(t, lambda);
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(t.diag[i]));
  std::mt19937_64 rng(0x5eed0000ULL + seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> x(n), tx;
  for (int restart = 0; restart < inverse_restarts; ++restart) {
    for (double& v : x) v = uni(rng);
    scale_to_unit(x);
    double rq_prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < inverse_iterations; ++it) {
      lu.solve(x);
      for (const auto& w : neighbours) {
        const double c = dot(w, x);
        for (std::size_t i = 0; i < n; ++i) x[i] -= c * w[i];
      }
      scale_to_unit(x);
      multiply(t, x, tx);
      const double rq = dot(x, tx);
      if (std::abs(rq - rq_prev) <= 1e-12 * std::max(1.0, std::abs(rq))) break;
      rq_prev = rq;
    }
    multiply(t, x, tx);
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) resid += (tx[i] - lambda * x[i]) * (tx[i] - lambda * x[i]);
    if (std::sqrt(resid) <= 1e-6 * scale) return x;
  }
  throw convergence_error("inverse_iteration: no convergence for eigenvalue " +
                          fmt_num(lambda));
}

}  // namespace detail

/// The k smallest eigenvalues with unit eigenvectors and parity labels.
inline OracleSpectrum eigen_lowest(const TridiagonalMatrix& t, std::size_t k) {
  const std::size_t n = t.size();
  if (k < 1 || k > n) {
    throw domain_error("eigen_lowest: k must be in [1, " + std::to_string(n) + "]");
  }
  OracleSpectrum out;
  out.delta_y = t.spacing;
  // Parity is only defined when the matrix commutes with the reflection.
  bool mirror_symmetric = true;
  for (std::size_t i = 0; i < n; ++i) mirror_symmetric &= t.diag[i] == t.diag[n - 1 - i];
  for (std::size_t i = 0; i + 1 < n; ++i) mirror_symmetric &= t.off[i] == t.off[n - 2 - i];
  const double top = detail::gershgorin_high(t);
  double lo = detail::gershgorin_low(t);
  for (std::size_t j = 0; j < k; ++j) {
    const double lambda = detail::bisect_eigenvalue(t, j, lo, top);
    out.epsilons.push_back(lambda);
    lo = lambda - detail::eigen_abs_tol;
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::vector<double>> close;
    for (std::size_t i = 0; i < j; ++i) {
      if (std::abs(out.epsilons[j] - out.epsilons[i]) < detail::close_gap) {
        close.push_back(out.vectors[i]);
      }
    }
    out.vectors.push_back(detail::inverse_iteration(t, out.epsilons[j], j, close));
    if (mirror_symmetric) out.parities.push_back(classify_parity(out.vectors.back()));
  }
  return out;
}

/// Build and diagonalize in one step.
inline OracleSpectrum solve(Coupling g, const OracleConfig& cfg) {
  return eigen_lowest(build_hamiltonian(g, cfg), cfg.n_eigen);
}

}  // namespace deltaho::oracle
