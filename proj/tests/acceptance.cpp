// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "deltaho/figures.hpp"
#include "deltaho/oracle.hpp"
#include "deltaho/specfun.hpp"
#include "deltaho/spectrum.hpp"
#include "deltaho/reference_table.hpp"
#include "deltaho/validation.hpp"
#include "deltaho/wavefunction.hpp"

using namespace deltaho;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

SolverConfig states(std::size_t n) {
  SolverConfig c;
  c.n_states = n;
  return c;
}

const std::vector<double> nonzero_g = {-5.0, -2.5, -1.0, -0.25, 0.25, 1.0, 2.5, 5.0};

Outcome table_regression() {
  namespace rt = reference_table;
  const auto v = validation::compute_reference_table();
  double worst = 0.0;
  int n = 0;
  for (std::size_t c = 0; c < rt::couplings.size(); ++c) {
    if (rt::couplings[c] == 0.0) continue;
    for (std::size_t r = 0; r < rt::levels; ++r, ++n) {
      worst = std::max(worst, std::abs(v[r][c] - rt::reference[r][c]));
    }
  }
  return {n == 40 && worst <= rt::tolerance, fmt("40 values, max |dnu| = %.3g (bound 5e-4)", worst)};
}

Outcome weak_coupling() {
  double worst = 0.0;
  for (double g : {-1e-6, 1e-6}) {
    const auto s = solve_even(Coupling(g), states(5));
    for (std::size_t k = 0; k < 5; ++k) worst = std::max(worst, std::abs(s[k].nu - 2.0 * k));
  }
  return {worst <= 1e-5, fmt("g = +-1e-6, max |nu_k - 2k| = %.3g (bound 1e-5)", worst)};
}

Outcome deep_delta() {
  const double e5 = solve_even(Coupling(-5.0), states(1))[0].epsilon;
  const double gap5 = std::abs(e5 - bound_state_asymptote(Coupling(-5.0)));
  const double e20 = solve_even(Coupling(-20.0), states(1))[0].epsilon;
  const double rel20 = std::abs(e20 / bound_state_asymptote(Coupling(-20.0)) - 1.0);
  return {gap5 <= 0.011 && rel20 <= 1e-3,
          fmt("g=-5 gap %.4f (bound 0.011); g=-20 relative gap %.2e (bound 1e-3)", gap5, rel20)};
}

Outcome oracle_equivalence() {
  double worst_zero = 0.0;
  double worst_other = 0.0;
  bool parity = true;
  for (double g : {0.0, -1.0, 1.0, -2.5, 2.5}) {
    oracle::OracleConfig cfg;  // L = 8, N = 4000
    const auto c = validation::compare_with_oracle(Coupling(g), 6, cfg);
    (g == 0.0 ? worst_zero : worst_other) = std::max(g == 0.0 ? worst_zero : worst_other, c.max_gap);
    parity = parity && c.parity_match;
  }
  const bool ok = worst_zero <= 1e-4 && worst_other <= 2e-4 && parity;
  return {ok, fmt("max gap g=0 %.3g (bound 1e-4), g!=0 %.3g (bound 2e-4)", worst_zero, worst_other) +
                  (parity ? ", parities identical" : ", PARITY MISMATCH")};
}

Outcome jump_condition() {
  double worst = 0.0;
  int n = 0;
  for (double g : nonzero_g) {
    for (const auto& s : solve_even(Coupling(g), states(reference_table::levels))) {
      worst = std::max(worst, jump_check(s.nu, Coupling(g)));
      ++n;
    }
  }
  return {worst <= 1e-8, fmt("%.0f even states, max residual %.3g (bound 1e-8)", n, worst)};
}

Outcome special_functions() {
  double hermite = 0.0;
  for (unsigned n = 0; n <= 10; ++n) {
    for (int i = 1; i <= 80; ++i) {
      const double y = i * 0.05;
      // Scale: the Hermite polynomial with |coefficients| at y.
      double scale = 0.0;
      double hp = 1.0;
      double hc = 2.0 * y;
      double sp = 1.0;
      double sc = 2.0 * y;
      for (unsigned k = 1; k < n; ++k) {
        const double hn = 2.0 * y * hc - 2.0 * k * hp;
        const double sn = 2.0 * y * sc + 2.0 * k * sp;
        hp = hc;
        hc = hn;
        sp = sc;
        sc = sn;
      }
      const double h = n == 0 ? 1.0 : hc;
      scale = n == 0 ? 1.0 : sc;
      const double u = specfun::kummer_u_half(n, y * y) * std::ldexp(1.0, static_cast<int>(n));
      hermite = std::max(hermite, std::abs(u - h) / scale);
    }
  }
  double expo = 0.0;
  for (double z = 0.0; z <= 20.0; z += 0.125) {
    expo = std::max(expo, std::abs(specfun::kummer_m({1.0, 1.0, z}) / std::exp(z) - 1.0));
  }
  double refl = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double x = i / 1000.0;
    refl = std::max(refl, std::abs(specfun::reciprocal_gamma(x) * specfun::reciprocal_gamma(1.0 - x) -
                                   std::sin(std::numbers::pi * x) / std::numbers::pi));
  }
  const bool ok = hermite <= 1e-9 && expo <= 1e-12 && refl <= 1e-12;
  char buf[200];
  std::snprintf(buf, sizeof buf, "Hermite %.2g (1e-9), M(1,1,z)/e^z %.2g (1e-12), reflection %.2g (1e-12)",
                hermite, expo, refl);
  return {ok, buf};
}

Outcome orthonormality() {
  const auto s = full_spectrum(Coupling(1.0), states(6));
  GridSpec spec;
  spec.n_points = 4001;
  std::vector<GridFunction> f;
  for (const auto& st : s) f.push_back(sample_state(st, spec));
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      worst = std::max(worst, std::abs(orthogonality(f[i], f[j]) - (i == j ? 1.0 : 0.0)));
    }
  }
  return {worst <= 1e-5, fmt("g=1, 6x6 Gram, max |G - I| = %.3g (bound 1e-5)", worst)};
}

Outcome odd_invariance() {
  std::vector<std::vector<double>> odd;
  for (double g : {-5.0, 0.0, 5.0}) {
    oracle::OracleConfig cfg;
    cfg.n_eigen = 8;
    const auto s = oracle::solve(Coupling(g), cfg);
    std::vector<double> o;
    for (std::size_t i = 0; i < s.epsilons.size(); ++i) {
      if (s.parities[i] == Parity::odd) o.push_back(s.epsilons[i]);
    }
    odd.push_back(o);
  }
  const std::size_t n = std::min({odd[0].size(), odd[1].size(), odd[2].size()});
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    worst = std::max({worst, std::abs(odd[0][j] - odd[1][j]), std::abs(odd[2][j] - odd[1][j])});
  }
  return {n >= 3 && worst <= 1e-6, fmt("%.0f odd levels, max spread %.3g (bound 1e-6)", n, worst)};
}

// Shape-level density checks.
Outcome node_counts() {
  bool ok = true;
  for (double g : {2.5, -2.5}) {
    const auto s = full_spectrum(Coupling(g), states(8));
    GridSpec spec;
    spec.n_points = 8001;
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto f = sample_state(s[k], spec);
      double peak = 0.0;
      for (double v : f.values()) peak = std::max(peak, std::abs(v));
      std::vector<double> t;
      for (double v : f.values()) t.push_back(std::abs(v) < 1e-10 * peak ? 0.0 : v);
      ok = ok && count_sign_changes(t) == k;
    }
  }
  return {ok, "8 lowest states at g = +-2.5 have 0..7 nodes"};
}

Outcome kink_presence() {
  double smallest = INFINITY;
  for (double g : nonzero_g) {
    for (const auto& s : solve_even(Coupling(g), states(3))) {
      smallest = std::min(smallest, std::abs(specfun::kummer_u_half_origin(s.nu).slope_coefficient));
    }
  }
  const double plain = std::abs(specfun::kummer_u_half_origin(2.0).slope_coefficient);
  return {smallest > 1e-3 && plain == 0.0,
          fmt("min |psi'(0+)| over coupled even states %.3g; plain oscillator %.1f", smallest, plain)};
}

Outcome density_approach() {
  GridSpec fixed;
  fixed.auto_widen = false;
  const auto odd3 = density(sample_state(figures::odd_state(3), fixed));
  const auto odd1 = density(sample_state(figures::odd_state(1), fixed));
  double last_up = INFINITY;
  double last_down = INFINITY;
  bool monotone = true;
  for (double g : figures::density_couplings) {
    const double up = figures::rms_difference(density(sample_state(figures::second_even_state(g), fixed)), odd3);
    const double down =
        figures::rms_difference(density(sample_state(figures::second_even_state(-g), fixed)), odd1);
    monotone = monotone && up < last_up && down < last_down;
    last_up = up;
    last_down = down;
  }
  return {monotone && last_up < 0.05,
          fmt("RMS to odd neighbour falls with |g|; at |g|=10: %.4f (g>0), %.4f (g<0)", last_up, last_down)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"table-regression", table_regression},
      {"weak-coupling-limit", weak_coupling},
      {"deep-delta-asymptote", deep_delta},
      {"oracle-equivalence", oracle_equivalence},
      {"jump-condition", jump_condition},
      {"special-function-identities", special_functions},
      {"orthonormality", orthonormality},
      {"odd-branch-invariance", odd_invariance},
      {"density-node-counts", node_counts},
      {"density-kink-at-origin", kink_presence},
      {"density-approach-to-odd", density_approach},
  };
  int failures = 0;
  const auto t_all = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %-28s %8.1f ms  %s\n", o.pass ? "PASS" : "FAIL", c.name, ms, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_all).count();
  std::printf("%zu criteria, %d failed, %.2f s\n", criteria.size(), failures, total);
  return failures == 0 ? 0 : 1;
}
