#pragma once

// casimirbox command-line front end. Inputs are micrometers and kelvin;
// output is CSV on the given stream with dimensionless and SI columns.

#include <casimir/boxzero.hpp>
#include <casimir/error.hpp>
#include <casimir/geometry.hpp>
#include <casimir/plates.hpp>
#include <casimir/thermal.hpp>
#include <casimir/units.hpp>
#include <casimir/validate.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#ifndef CASIMIR_DEFAULT_FIXTURES
#define CASIMIR_DEFAULT_FIXTURES "data/fixtures.txt"
#endif

namespace casimir::cli {

enum ExitCode : int { ok = 0, validation_failed = 1, usage = 2, convergence = 3 };

inline const char* box_header =
    "a_um,b_um,c_um,T_K,t_reduced,e0_dimless,thermal_raw_dimless,bb_term_dimless,alpha1_term_dimless,"
    "alpha2_term_dimless,total_dimless,total_SI,error";
inline const char* thermo_header =
    "a_um,b_um,c_um,T_K,t_reduced,e0_dimless,thermal_raw_dimless,bb_term_dimless,alpha1_term_dimless,"
    "alpha2_term_dimless,total_dimless,total_SI,internal_energy_dimless,internal_energy_SI,entropy_kB,error";

/// Fixed CSV number format: scientific, 12 significant digits.
inline std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

/// Error text made safe for a CSV cell.
inline std::string cell(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

struct BoxPoint {
  double a_um, b_um, c_um, T_K;
};

enum class Quantity { FreeEnergy, Force, Thermo };

namespace detail {

inline std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

/// One CSV row for `q` at `p`. Numerical failures are reported in the error
/// column with every value set to nan; `failed` is set.
inline std::string box_row(Quantity q, FieldKind field, const BoxPoint& p, const ToleranceConfig& cfg, bool& failed) {
  const BoxGeometry g(units::um_to_m(p.a_um), units::um_to_m(p.b_um), units::um_to_m(p.c_um));
  const auto tp = units::thermal_point_kelvin(p.T_K);
  std::vector<std::string> cols{num(p.a_um), num(p.b_um), num(p.c_um), num(p.T_K), num(tp.reduced_t(g.a()))};
  const std::size_t values = q == Quantity::Thermo ? 10 : 7;
  const double a = g.a();
  try {
    if (q == Quantity::Force) {
      const auto f = force_x(g, field, tp, cfg);
      const double s = a * a;
      for (double v : {f.f0, f.mode_sum, f.bb_term, f.alpha1_term, f.alpha2_term, f.total}) cols.push_back(num(s * v));
      cols.push_back(num(units::to_newtons(f.total)));
    } else {
      const auto e = free_energy(g, field, tp, cfg);
      for (double v : {e.e0_ren, e.thermal_raw, e.bb_term, e.alpha1_term, e.alpha2_term, e.total})
        cols.push_back(num(a * v));
      cols.push_back(num(units::to_joules(e.total)));
      if (q == Quantity::Thermo) {
        const double u = internal_energy(g, field, tp, cfg);
        const double s = tp.is_zero() ? 0.0 : (u - e.total) / tp.kT();
        cols.push_back(num(a * u));
        cols.push_back(num(units::to_joules(u)));
        cols.push_back(num(s));
      }
    }
    cols.emplace_back();
  } catch (const ConvergenceError& ex) {
    failed = true;
    cols.resize(5, "");
    for (std::size_t i = 0; i < values; ++i) cols.push_back("nan");
    cols.push_back(cell(ex.what()));
  } catch (const DerivativeError& ex) {
    failed = true;
    cols.resize(5, "");
    for (std::size_t i = 0; i < values; ++i) cols.push_back("nan");
    cols.push_back(cell(ex.what()));
  }
  return join(cols);
}

inline std::vector<double> grid(double from, double to, int points, bool log) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    g[i] = log ? from * std::pow(to / from, f) : from + (to - from) * f;
  }
  g.back() = to;
  return g;
}

/// Evaluates `rows` concurrently and returns them in index order.
template <typename RowFn>
std::vector<std::string> parallel_rows(std::size_t n, RowFn&& row) {
  std::vector<std::string> out(n);
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) out[i] = row(i);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const auto nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, n));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  return out;
}

inline FieldKind parse_field(const std::string& s) {
  return s == "em" ? FieldKind::Electromagnetic : FieldKind::ScalarDirichlet;
}

} // namespace detail

/// Runs the command line `args` (program name excluded). Returns the exit
/// status: 0 success, 1 validation failure, 2 usage error, 3 numerical
/// (convergence) failure.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir free energy and force of ideal-metal boxes and plates", "casimirbox"};
  app.require_subcommand(1);

  std::string field = "scalar";
  double a = 0, b = 0, c = 0, temp = 0;
  double tol = 1e-10;
  std::int64_t max_shell = 1'000'000;

  const auto common = [&](CLI::App* sub, bool needs_temp) {
    sub->add_option("--field", field, "field kind")->check(CLI::IsMember({"scalar", "em"}))->required();
    sub->add_option("--a", a, "side a [um]")->check(CLI::PositiveNumber)->required();
    sub->add_option("--b", b, "side b [um]")->check(CLI::PositiveNumber)->required();
    sub->add_option("--c", c, "side c [um]")->check(CLI::PositiveNumber)->required();
    if (needs_temp) sub->add_option("--temp", temp, "temperature [K]")->check(CLI::NonNegativeNumber)->required();
    sub->add_option("--tol", tol, "relative series tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-shell", max_shell, "lattice-point budget per series")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* e0_cmd = app.add_subcommand("e0", "zero-temperature Casimir energy");
  common(e0_cmd, false);
  auto* fe_cmd = app.add_subcommand("free-energy", "physical free energy");
  common(fe_cmd, true);
  auto* force_cmd = app.add_subcommand("force", "force on the faces normal to a");
  common(force_cmd, true);
  auto* thermo_cmd = app.add_subcommand("thermo", "free energy, internal energy and entropy");
  common(thermo_cmd, true);

  auto* plates_cmd = app.add_subcommand("plates", "parallel ideal-metal plates");
  bool pressure = false;
  plates_cmd->add_option("--a", a, "separation [um]")->check(CLI::PositiveNumber)->required();
  plates_cmd->add_option("--temp", temp, "temperature [K]")->check(CLI::NonNegativeNumber)->required();
  plates_cmd->add_flag("--pressure", pressure, "also report the pressure");
  plates_cmd->add_option("--tol", tol, "relative series tolerance")->check(CLI::PositiveNumber)->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "grid of free energies or forces");
  std::string quantity, var;
  double from = 0, to = 0;
  int points = 0;
  bool log_scale = false;
  sweep_cmd->add_option("--quantity", quantity, "free-energy or force")
      ->check(CLI::IsMember({"free-energy", "force"}))
      ->required();
  sweep_cmd->add_option("--field", field, "field kind")->check(CLI::IsMember({"scalar", "em"}))->required();
  sweep_cmd->add_option("--var", var, "swept variable: a [um] or temp [K]")
      ->check(CLI::IsMember({"a", "temp"}))
      ->required();
  sweep_cmd->add_option("--from", from, "first grid value")->required();
  sweep_cmd->add_option("--to", to, "last grid value")->required();
  sweep_cmd->add_option("--points", points, "number of grid points (>= 2)")->check(CLI::Range(2, 1'000'000))->required();
  sweep_cmd->add_flag("--log", log_scale, "logarithmic grid");
  auto* sa = sweep_cmd->add_option("--a", a, "side a [um]")->check(CLI::PositiveNumber);
  auto* sb = sweep_cmd->add_option("--b", b, "side b [um]; follows a when omitted")->check(CLI::PositiveNumber);
  auto* sc = sweep_cmd->add_option("--c", c, "side c [um]; follows a when omitted")->check(CLI::PositiveNumber);
  auto* st = sweep_cmd->add_option("--temp", temp, "temperature [K]")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--tol", tol, "relative series tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--max-shell", max_shell, "lattice-point budget per series")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* validate_cmd = app.add_subcommand("validate", "compare against reference values");
  std::string filter;
  std::string fixtures = CASIMIR_DEFAULT_FIXTURES;
  validate_cmd->add_option("--filter", filter, "group name or substring of check names");
  validate_cmd->add_option("--fixtures", fixtures, "reference values file")->capture_default_str();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  ToleranceConfig cfg;
  cfg.rel_tol = tol;
  cfg.max_points = max_shell;

  try {
    if (*e0_cmd || *fe_cmd || *force_cmd || *thermo_cmd) {
      const auto q = *force_cmd ? Quantity::Force : *thermo_cmd ? Quantity::Thermo : Quantity::FreeEnergy;
      bool failed = false;
      const auto row = detail::box_row(q, detail::parse_field(field), {a, b, c, *e0_cmd ? 0.0 : temp}, cfg, failed);
      out << (q == Quantity::Thermo ? thermo_header : box_header) << '\n' << row << '\n';
      if (failed) {
        err << "casimirbox: numerical failure: " << row.substr(row.rfind(',') + 1) << '\n';
        return ExitCode::convergence;
      }
      return ExitCode::ok;
    }

    if (*plates_cmd) {
      const double a_m = units::um_to_m(a);
      const PlatesConfig p(a_m, units::thermal_point_kelvin(temp));
      const double f = plates_free_energy(p, cfg);
      out << "a_um,T_K,t_reduced,free_energy_dimless,free_energy_SI" << (pressure ? ",pressure_dimless,pressure_SI" : "")
          << ",error\n";
      out << num(a) << ',' << num(temp) << ',' << num(p.reduced_t()) << ',' << num(a_m * a_m * a_m * f) << ','
          << num(units::to_joules_per_m2(f));
      if (pressure) {
        const double pr = plates_pressure(p, cfg);
        out << ',' << num(a_m * a_m * a_m * a_m * pr) << ',' << num(units::to_pascals(pr));
      }
      out << ",\n";
      return ExitCode::ok;
    }

    if (*sweep_cmd) {
      if (!(from < to)) throw CLI::ValidationError("--from/--to", "--from must be smaller than --to");
      if (log_scale && !(from > 0)) throw CLI::ValidationError("--from", "a logarithmic grid needs --from > 0");
      const bool over_a = var == "a";
      if (over_a && !(from > 0)) throw CLI::ValidationError("--from", "side lengths must be positive");
      if (!over_a && from < 0) throw CLI::ValidationError("--from", "temperatures must be >= 0");
      if (over_a && !*st) throw CLI::RequiredError("--temp");
      if (!over_a && !*sa) throw CLI::RequiredError("--a");
      const auto values = detail::grid(from, to, points, log_scale);
      const auto q = quantity == "force" ? Quantity::Force : Quantity::FreeEnergy;
      const auto fk = detail::parse_field(field);
      std::atomic<bool> any_failed{false};
      const auto rows = detail::parallel_rows(values.size(), [&](std::size_t i) {
        BoxPoint p{a, b, c, temp};
        if (over_a) p.a_um = values[i];
        else p.T_K = values[i];
        if (!*sb) p.b_um = p.a_um;
        if (!*sc) p.c_um = p.a_um;
        bool failed = false;
        auto r = detail::box_row(q, fk, p, cfg, failed);
        if (failed) any_failed = true;
        return r;
      });
      out << box_header << '\n';
      for (const auto& r : rows) out << r << '\n';
      if (any_failed) {
        err << "casimirbox: some grid points failed; see the error column\n";
        return ExitCode::convergence;
      }
      return ExitCode::ok;
    }

    if (*validate_cmd) {
      const auto fx = validate::load_fixtures(fixtures);
      const auto summary = validate::run_validation(fx, filter, out, cfg);
      return summary.ok() ? ExitCode::ok : ExitCode::validation_failed;
    }
  } catch (const CLI::Error& e) {
    err << "casimirbox: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const DomainError& e) {
    err << "casimirbox: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const ConvergenceError& e) {
    err << "casimirbox: convergence failure in " << e.series() << ": " << e.what() << '\n';
    return ExitCode::convergence;
  } catch (const DerivativeError& e) {
    err << "casimirbox: " << e.what() << '\n';
    return ExitCode::convergence;
  } catch (const validate::FixtureError& e) {
    err << "casimirbox: " << e.what() << '\n';
    return ExitCode::validation_failed;
  }
  return ExitCode::usage;
}

} // namespace casimir::cli
