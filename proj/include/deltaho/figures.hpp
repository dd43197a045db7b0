#pragma once

// Plot-ready data: the eigenvalue function across nu, the even levels as
// functions of g, and probability densities of selected states. Rendering is
// left to whatever plotting tool reads the CSV.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "deltaho/report.hpp"
#include "deltaho/spectrum.hpp"
#include "deltaho/wavefunction.hpp"

namespace deltaho::figures {

using report::CsvTable;
using report::format_number;

/// Couplings plotted in the eigenvalue-function panel.
inline const std::vector<double> eq_solution_couplings = {-5.0, -2.5, -1.0, -0.25,
                                                          0.25, 1.0,  2.5,  5.0};

/// Couplings for the density panels, spanning 1 to 10 in magnitude.
inline const std::vector<double> density_couplings = {1.0, 2.5, 5.0, 10.0};

struct NamedTable {
  std::string file_name;
  CsvTable table;
};

inline std::string g_label(double g) { return "g=" + format_number(g, false); }

/// Eigenvalue function on nu in [-15, 9], step 0.01, one column per coupling.
inline NamedTable eq_solution(bool full_precision) {
  CsvTable t;
  t.comments.push_back("eigen_equation(nu, g) = nu/Gamma(1-nu/2) - g/Gamma(1/2-nu/2); nu in [-15, 9] step 0.01");
  t.header.push_back("nu");
  for (double g : eq_solution_couplings) t.header.push_back("F(" + g_label(g) + ")");
  for (int i = -1500; i <= 900; ++i) {
    const double nu = i / 100.0;
    std::vector<std::string> row = {format_number(nu, full_precision)};
    for (double g : eq_solution_couplings) {
      row.push_back(format_number(eigen_equation(nu, Coupling(g)), full_precision));
    }
    t.rows.push_back(std::move(row));
  }
  return {"eq_solution.csv", std::move(t)};
}

/// Even levels nu_0..nu_4 for g in [-5, 5], step 0.1.
inline NamedTable nu_vs_g(bool full_precision, const SolverConfig& base = {}) {
  CsvTable t;
  t.comments.push_back("even-parity nu_k(g), k = 0..4; g in [-5, 5] step 0.1");
  t.header = {"g", "nu_0", "nu_1", "nu_2", "nu_3", "nu_4"};
  SolverConfig cfg = base;
  cfg.n_states = 5;
  for (int i = -50; i <= 50; ++i) {
    const double g = i / 10.0;
    const auto even = solve_even(Coupling(g), cfg);
    std::vector<std::string> row = {format_number(g, full_precision)};
    for (const auto& s : even) row.push_back(format_number(s.nu, full_precision));
    t.rows.push_back(std::move(row));
  }
  return {"nu_vs_g.csv", std::move(t)};
}

/// Second even state (the one that is n = 2 at g = 0) for coupling g.
inline EigenSolution second_even_state(double g, const SolverConfig& base = {}) {
  SolverConfig cfg = base;
  cfg.n_states = 2;
  return solve_even(Coupling(g), cfg)[1];
}

inline EigenSolution odd_state(unsigned n) {
  return EigenSolution::make(Parity::odd, static_cast<double>(n), n);
}

namespace detail {

inline NamedTable grid_table(std::string file_name, std::string comment,
                             const std::vector<std::pair<std::string, GridFunction>>& columns,
                             bool full_precision) {
  const GridFunction& first = columns.front().second;
  for (const auto& [name, f] : columns) {
    if (!f.same_grid(first)) throw grid_error("figure columns on different grids: " + name);
  }
  CsvTable t;
  t.comments.push_back(std::move(comment));
  t.header.push_back("y");
  for (const auto& c : columns) t.header.push_back(c.first);
  for (std::size_t i = 0; i < first.n_points(); ++i) {
    std::vector<std::string> row = {format_number(first.y(i), full_precision)};
    for (const auto& c : columns) row.push_back(format_number(c.second[i], full_precision));
    t.rows.push_back(std::move(row));
  }
  return {std::move(file_name), std::move(t)};
}

}  // namespace detail

/// Density panels: (a) repulsive couplings against |psi_3|^2, (b) attractive
/// couplings against |psi_1|^2, (c) the plain oscillator n = 1, 2, 3,
/// (d) signed amplitudes at |g| = 10 next to their odd neighbours.
inline std::vector<NamedTable> wavefunctions(bool full_precision, const GridSpec& grid = {}) {
  GridSpec fixed = grid;
  fixed.auto_widen = false;
  const auto ho2 = sample_state(EigenSolution::make(Parity::even, 2.0, 2), fixed);
  const auto odd1 = sample_state(odd_state(1), fixed);
  const auto odd3 = sample_state(odd_state(3), fixed);

  std::vector<NamedTable> out;
  const std::string note = "normalized |psi|^2; even columns are the second even state";
  for (int sign : {+1, -1}) {
    std::vector<std::pair<std::string, GridFunction>> cols;
    cols.emplace_back(sign > 0 ? "odd_n3" : "odd_n1", density(sign > 0 ? odd3 : odd1));
    cols.emplace_back("ho_n2", density(ho2));
    for (double g : density_couplings) {
      const auto s = second_even_state(sign * g);
      cols.emplace_back("even_" + g_label(sign * g) + "_nu=" + format_number(s.nu, false),
                        density(sample_state(s, fixed)));
    }
    out.push_back(detail::grid_table(sign > 0 ? "density_repulsive.csv" : "density_attractive.csv",
                                     note, cols, full_precision));
  }
  out.push_back(detail::grid_table(
      "density_oscillator.csv", "normalized |psi_n|^2 of the plain oscillator",
      {{"n1", density(odd1)}, {"n2", density(ho2)}, {"n3", density(odd3)}}, full_precision));

  const auto up = second_even_state(10.0);
  const auto down = second_even_state(-10.0);
  out.push_back(detail::grid_table(
      "amplitude_signed.csv", "normalized psi, positive just right of y = 0",
      {{"even_g=10", sample_state(up, fixed)},
       {"odd_n3", odd3},
       {"even_g=-10", sample_state(down, fixed)},
       {"odd_n1", odd1}},
      full_precision));
  return out;
}

/// Root-mean-square pointwise difference of two functions on one grid.
inline double rms_difference(const GridFunction& a, const GridFunction& b) {
  if (!a.same_grid(b)) throw grid_error("rms_difference: grids differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.n_points(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s / static_cast<double>(a.n_points()));
}

}  // namespace deltaho::figures
