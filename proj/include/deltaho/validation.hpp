#pragma once

// Analytic solver versus reference data: the four-decimal level table and the
// finite-difference oracle.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "deltaho/oracle.hpp"
#include "deltaho/spectrum.hpp"
#include "deltaho/reference_table.hpp"

namespace deltaho::validation {

using LevelTable =
    std::array<std::array<double, reference_table::couplings.size()>, reference_table::levels>;

/// Recompute the reference table: five even levels for each coupling.
inline LevelTable compute_reference_table(const SolverConfig& base = {}) {
  LevelTable out{};
  SolverConfig cfg = base;
  cfg.n_states = reference_table::levels;
  for (std::size_t c = 0; c < reference_table::couplings.size(); ++c) {
    const auto even = solve_even(Coupling(reference_table::couplings[c]), cfg);
    for (std::size_t r = 0; r < reference_table::levels; ++r) out[r][c] = even[r].nu;
  }
  return out;
}

struct ComparisonRow {
  std::size_t index;
  double analytic_epsilon;
  Parity analytic_parity;
  double oracle_epsilon;
  Parity oracle_parity;
  double gap;  ///< |analytic - oracle|
};

struct Comparison {
  double g;
  oracle::OracleConfig config;
  std::vector<ComparisonRow> rows;
  double max_gap = 0.0;
  bool parity_match = true;
  /// Ground-state error at the configured spacing over the error at half of
  /// it. About 2 for first-order convergence, 4 for second order.
  double halving_ratio = 0.0;
};

/// Compare the k lowest analytic states with the finite-difference oracle.
inline Comparison compare_with_oracle(Coupling g, std::size_t k, oracle::OracleConfig cfg,
                                      const SolverConfig& solver = {}) {
  cfg.n_eigen = k;
  cfg.validate();
  SolverConfig scfg = solver;
  scfg.n_states = k;
  const auto analytic = full_spectrum(g, scfg);
  const auto fd = oracle::solve(g, cfg);

  Comparison out{g.value(), cfg, {}, 0.0, true, 0.0};
  for (std::size_t i = 0; i < k; ++i) {
    const double gap = std::abs(analytic[i].epsilon - fd.epsilons[i]);
    out.rows.push_back({i, analytic[i].epsilon, analytic[i].parity, fd.epsilons[i],
                        fd.parities[i], gap});
    out.max_gap = std::max(out.max_gap, gap);
    out.parity_match &= analytic[i].parity == fd.parities[i];
  }

  oracle::OracleConfig fine = cfg;
  fine.n_intervals *= 2;
  fine.n_eigen = 1;
  const auto h_fine = oracle::build_hamiltonian(g, fine);
  const double fine_eps = oracle::eigen_lowest(h_fine, 1).epsilons[0];
  const double fine_err = std::abs(analytic[0].epsilon - fine_eps);
  const double coarse_err = out.rows[0].gap;
  out.halving_ratio = fine_err > 0.0 ? coarse_err / fine_err : 0.0;
  return out;
}

}  // namespace deltaho::validation
