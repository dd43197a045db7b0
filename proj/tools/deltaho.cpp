// deltaho: spectrum, eigenfunctions and validation data for the harmonic
// oscillator with a delta potential at the origin.
//
// Exit codes: 0 success, 2 usage, 3 solver failure, 4 I/O failure.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "deltaho/error.hpp"
#include "deltaho/figures.hpp"
#include "deltaho/oracle.hpp"
#include "deltaho/report.hpp"
#include "deltaho/spectrum.hpp"
#include "deltaho/reference_table.hpp"
#include "deltaho/units.hpp"
#include "deltaho/validation.hpp"
#include "deltaho/wavefunction.hpp"

namespace fs = std::filesystem;
using deltaho::report::CsvTable;
using deltaho::report::format_fixed;
using deltaho::report::format_number;
using json = nlohmann::json;

namespace {

enum ExitCode : int { ok = 0, usage = 2, solver = 3, io = 4 };

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double g = 0.0;
  std::size_t states = 0;
  std::string format = "csv";
  std::string out;
  std::size_t grid_n = 4000;
  double grid_l = 8.0;
  double tol = 1e-10;
  bool full_precision = false;
  bool stamp = false;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Temp file in the target directory, then rename over the destination.
void write_atomic(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw io_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw io_error("cannot open " + tmp.string() + " for writing");
    os << content;
    os.flush();
    if (!os) throw io_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw io_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

// To <out>/<name> when --out was given, else to stdout.
void emit(const Options& opt, const std::string& name, const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    return;
  }
  const fs::path path = fs::path(opt.out) / name;
  write_atomic(path, content);
  std::cerr << "wrote " << path.string() << '\n';
}

deltaho::SolverConfig solver_config(const Options& opt, std::size_t n_states) {
  deltaho::SolverConfig cfg;
  cfg.root_tol = opt.tol;
  cfg.n_states = n_states;
  cfg.validate();
  return cfg;
}

json config_echo(const Options& opt) {
  return {{"g", opt.g},           {"states", opt.states},   {"tol", opt.tol},
          {"grid_n", opt.grid_n}, {"grid_l", opt.grid_l}, {"format", opt.format}};
}

std::string config_comment(const Options& opt) {
  return "config " + config_echo(opt).dump();
}

void check_format(const Options& opt) {
  if (opt.format != "csv" && opt.format != "json") {
    throw usage_error("--format must be csv or json");
  }
}

deltaho::oracle::OracleConfig oracle_config(const Options& opt, std::size_t n_eigen) {
  deltaho::oracle::OracleConfig cfg;
  cfg.half_width = opt.grid_l;
  cfg.n_intervals = opt.grid_n;
  cfg.n_eigen = n_eigen;
  try {
    cfg.validate();
  } catch (const deltaho::domain_error& e) {
    throw usage_error(e.what());
  }
  return cfg;
}

int cmd_solve(Options opt, bool with_oracle) {
  check_format(opt);
  if (opt.states == 0) opt.states = 5;
  const std::size_t n = opt.states;
  const deltaho::Coupling g(opt.g);
  const auto cfg = solver_config(opt, n);

  deltaho::report::RunReport rep;
  rep.g = opt.g;
  rep.states = deltaho::full_spectrum(g, cfg);
  for (const auto& s : rep.states) {
    rep.residuals.push_back(s.parity == deltaho::Parity::even ? deltaho::jump_check(s.nu, g) : 0.0);
  }
  if (with_oracle) {
    const auto fd = deltaho::oracle::solve(g, oracle_config(opt, n));
    std::vector<double> gaps;
    for (std::size_t i = 0; i < n; ++i) gaps.push_back(std::abs(rep.states[i].epsilon - fd.epsilons[i]));
    rep.oracle_gaps = gaps;
  }
  rep.config = config_echo(opt);
  if (opt.stamp) rep.timestamp = utc_timestamp();

  if (opt.format == "json") {
    emit(opt, "spectrum.json", deltaho::report::to_json(rep).dump(2) + "\n");
  } else {
    auto t = deltaho::report::to_csv(rep, opt.full_precision);
    t.comments.insert(t.comments.begin() + 1, config_comment(opt));
    emit(opt, "spectrum.csv", t.str());
  }
  return ok;
}

int cmd_table(const Options& opt) {
  check_format(opt);
  namespace rt = deltaho::reference_table;
  const auto computed = deltaho::validation::compute_reference_table(solver_config(opt, rt::levels));

  if (opt.format == "json") {
    json j = {{"couplings", rt::couplings}, {"levels", json::array()}};
    for (std::size_t r = 0; r < rt::levels; ++r) {
      json row = {{"level", r}, {"nu", json::array()}, {"reference", json::array()}, {"abs_delta", json::array()}};
      for (std::size_t c = 0; c < rt::couplings.size(); ++c) {
        row["nu"].push_back(computed[r][c]);
        row["reference"].push_back(rt::reference[r][c]);
        row["abs_delta"].push_back(std::abs(computed[r][c] - rt::reference[r][c]));
      }
      j["levels"].push_back(row);
    }
    if (opt.stamp) j["timestamp"] = utc_timestamp();
    emit(opt, "even_levels.json", j.dump(2) + "\n");
    return ok;
  }

  CsvTable t;
  t.comments.push_back("even-parity nu, five levels; max_abs_delta is against the four-decimal reference values");
  if (opt.stamp) t.comments.push_back("timestamp " + utc_timestamp());
  t.header.push_back("level");
  for (double g : rt::couplings) t.header.push_back("g=" + format_number(g, false));
  t.header.push_back("max_abs_delta");
  for (std::size_t r = 0; r < rt::levels; ++r) {
    std::vector<std::string> row = {std::to_string(r)};
    double worst = 0.0;
    for (std::size_t c = 0; c < rt::couplings.size(); ++c) {
      row.push_back(format_fixed(computed[r][c], 4));
      worst = std::max(worst, std::abs(computed[r][c] - rt::reference[r][c]));
    }
    row.push_back(format_number(worst, opt.full_precision));
    t.rows.push_back(std::move(row));
  }
  emit(opt, "even_levels.csv", t.str());
  return ok;
}

int cmd_figures(Options opt, const std::string& which) {
  if (opt.out.empty()) opt.out = "figures";
  std::vector<deltaho::figures::NamedTable> tables;
  const auto cfg = solver_config(opt, 5);
  if (which == "eq-solution" || which == "all") tables.push_back(deltaho::figures::eq_solution(opt.full_precision));
  if (which == "nu-vs-g" || which == "all") tables.push_back(deltaho::figures::nu_vs_g(opt.full_precision, cfg));
  if (which == "wavefunctions" || which == "all") {
    for (auto& t : deltaho::figures::wavefunctions(opt.full_precision)) tables.push_back(std::move(t));
  }
  for (auto& [name, table] : tables) {
    if (opt.stamp) table.comments.push_back("timestamp " + utc_timestamp());
    emit(opt, name, table.str());
  }
  return ok;
}

int cmd_compare(Options opt) {
  check_format(opt);
  if (opt.states == 0) opt.states = 6;
  const std::size_t k = opt.states;
  const auto cmp = deltaho::validation::compare_with_oracle(
      deltaho::Coupling(opt.g), k, oracle_config(opt, k), solver_config(opt, k));

  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& r : cmp.rows) {
      rows.push_back({{"index", r.index},
                      {"analytic_epsilon", r.analytic_epsilon},
                      {"analytic_parity", deltaho::to_string(r.analytic_parity)},
                      {"oracle_epsilon", r.oracle_epsilon},
                      {"oracle_parity", deltaho::to_string(r.oracle_parity)},
                      {"gap", r.gap}});
    }
    json j = {{"g", cmp.g},
              {"rows", rows},
              {"max_gap", cmp.max_gap},
              {"parity_match", cmp.parity_match},
              {"halving_ratio", cmp.halving_ratio},
              {"config", config_echo(opt)}};
    if (opt.stamp) j["timestamp"] = utc_timestamp();
    emit(opt, "compare.json", j.dump(2) + "\n");
    return ok;
  }
  CsvTable t;
  t.comments.push_back(config_comment(opt));
  t.comments.push_back("max_gap " + format_number(cmp.max_gap, opt.full_precision) + " parity_match " +
                       (cmp.parity_match ? "true" : "false") + " halving_ratio " +
                       format_number(cmp.halving_ratio, opt.full_precision));
  if (opt.stamp) t.comments.push_back("timestamp " + utc_timestamp());
  t.header = {"index", "analytic_epsilon", "analytic_parity", "oracle_epsilon", "oracle_parity", "gap"};
  for (const auto& r : cmp.rows) {
    t.rows.push_back({std::to_string(r.index), format_number(r.analytic_epsilon, opt.full_precision),
                      deltaho::to_string(r.analytic_parity), format_number(r.oracle_epsilon, opt.full_precision),
                      deltaho::to_string(r.oracle_parity), format_number(r.gap, opt.full_precision)});
  }
  emit(opt, "compare.csv", t.str());
  return ok;
}

int cmd_units(Options opt, const deltaho::PhysicalScales& scales, const std::optional<double>& nu) {
  check_format(opt);
  if (opt.states == 0) opt.states = 5;
  try {
    scales.validate();
  } catch (const deltaho::domain_error& e) {
    throw usage_error(e.what());
  }
  const auto g = scales.coupling();
  const std::size_t n = opt.states;
  const auto spectrum = deltaho::full_spectrum(g, solver_config(opt, n));

  json j = {{"mass", scales.mass},   {"omega", scales.omega}, {"hbar", scales.hbar},
            {"alpha", scales.alpha}, {"a0", scales.length()}, {"g", g.value()}};
  if (nu) j["energy_for_nu"] = {{"nu", *nu}, {"energy", scales.energy(*nu + 0.5)}};
  json levels = json::array();
  for (const auto& s : spectrum) {
    levels.push_back({{"index", s.index}, {"parity", deltaho::to_string(s.parity)}, {"nu", s.nu},
                      {"energy", scales.energy(s.epsilon)}});
  }
  j["levels"] = levels;
  if (g.value() < 0.0) {
    j["isolated_delta_energy"] = scales.isolated_delta_energy();
    j["kappa"] = scales.isolated_delta_kappa();
  }

  if (opt.format == "json") {
    emit(opt, "units.json", j.dump(2) + "\n");
    return ok;
  }
  CsvTable t;
  t.header = {"quantity", "value"};
  auto add = [&](const std::string& k, double v) { t.rows.push_back({k, format_number(v, opt.full_precision)}); };
  add("a0", scales.length());
  add("g", g.value());
  if (nu) add("energy(nu=" + format_number(*nu, false) + ")", scales.energy(*nu + 0.5));
  for (const auto& s : spectrum) {
    add("energy[" + std::to_string(s.index) + "," + deltaho::to_string(s.parity) + "]", scales.energy(s.epsilon));
  }
  if (g.value() < 0.0) {
    add("isolated_delta_energy", scales.isolated_delta_energy());
    add("kappa", scales.isolated_delta_kappa());
  }
  emit(opt, "units.csv", t.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic oscillator with a delta potential at the origin"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; flags override it")->envname("DELTAHO_CONFIG");

  Options opt;
  auto* g_opt = app.add_option("--g", opt.g, "dimensionless delta strength");
  app.add_option("--states", opt.states, "number of states")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opt.out, "output directory (stdout when omitted)");
  app.add_option("--grid-n", opt.grid_n, "oracle intervals (even)");
  app.add_option("--grid-l", opt.grid_l, "oracle half width");
  app.add_option("--tol", opt.tol, "root tolerance on nu")->check(CLI::PositiveNumber);
  app.add_flag("--full-precision", opt.full_precision, "17 significant digits");
  app.add_flag("--stamp", opt.stamp, "add a timestamp to the output metadata");

  bool with_oracle = false;
  auto* solve = app.add_subcommand("solve", "energy-ordered spectrum")->fallthrough();
  solve->add_flag("--oracle", with_oracle, "also report gaps to the finite-difference oracle");
  app.add_subcommand("table", "five even levels per coupling, checked against reference values")->fallthrough();
  std::string which = "all";
  auto* figures = app.add_subcommand("figures", "plot-ready CSV data")->fallthrough();
  figures->add_option("--which", which, "eq-solution, nu-vs-g, wavefunctions or all")
      ->check(CLI::IsMember({"eq-solution", "nu-vs-g", "wavefunctions", "all"}));
  app.add_subcommand("compare", "analytic versus finite-difference oracle")->fallthrough();
  deltaho::PhysicalScales scales;
  std::optional<double> nu;
  auto* units = app.add_subcommand("units", "convert physical parameters")->fallthrough();
  units->add_option("--m", scales.mass, "mass");
  units->add_option("--omega", scales.omega, "oscillator frequency");
  units->add_option("--hbar", scales.hbar, "reduced Planck constant");
  units->add_option("--alpha", scales.alpha, "delta strength in physical units");
  units->add_option("--nu", nu, "quantum label to convert to an energy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (solve->parsed()) {
      if (g_opt->count() == 0) throw usage_error("solve requires --g");
      return cmd_solve(opt, with_oracle);
    }
    if (app.got_subcommand("table")) return cmd_table(opt);
    if (figures->parsed()) return cmd_figures(opt, which);
    if (app.got_subcommand("compare")) return cmd_compare(opt);
    if (units->parsed()) return cmd_units(opt, scales, nu);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const io_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return io;
  } catch (const deltaho::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const deltaho::error& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return solver;
  }
  return usage;
}
