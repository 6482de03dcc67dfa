#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unigamma/cli.hpp"

namespace unigamma::cli {

namespace {

struct CommonFlags {
  std::optional<double> sigma;
  std::optional<double> tol;
  std::optional<int> max_refine;
  bool json = false;
  std::string out_path;

  SpecOverrides overrides() const {
    SpecOverrides o;
    o.sigma = sigma;
    o.tol = tol;
    o.max_refinements = max_refine;
    return o;
  }
};

void add_spec_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--sigma", f.sigma, "contour abscissa, 0 < sigma <= 8 (default 1)");
  cmd->add_option("--tol", f.tol, "absolute tolerance (default 1e-12)");
  cmd->add_option("--max-refine", f.max_refine, "maximum step halvings (default 12)");
}

// Writes to --out when given, otherwise to `fallback`.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw UsageError("failed writing '" + path + "'");
}

int eval_command(const std::string& fn, const std::string& z_text, const CommonFlags& flags,
                 std::ostream& out) {
  const Function f = parse_function(fn);
  const Complex z = parse_complex(z_text);
  SpecOverrides o = flags.overrides();
  const EvalResult e = evaluate(f, z, o);
  emit(flags.out_path, out, [&](std::ostream& os) {
    if (flags.json) {
      os << to_json(f, e).dump(2) << '\n';
      return;
    }
    os << "function      " << function_name(f) << '\n'
       << "z             " << format_complex(e.z) << '\n'
       << "value         " << format_complex(e.value) << '\n'
       << "err_estimate  " << format_number(e.err_estimate) << '\n'
       << "sigma         " << format_number(e.spec_used.sigma) << '\n'
       << "T             " << format_number(e.spec_used.half_width) << '\n'
       << "h             " << format_number(e.spec_used.step) << '\n'
       << "evaluations   " << e.evaluations << '\n'
       << "converged     " << (e.converged ? "true" : "false") << '\n';
  });
  return e.converged ? kExitOk : kExitFailure;
}

int constants_command(const CommonFlags& flags, std::ostream& out) {
  constexpr double kReference = std::numbers::egamma;
  const SpecOverrides o = flags.overrides();
  const EvalResult gam = euler_mascheroni(o);
  const EvalResult g1 = g_integral(1.0, o);
  const Complex gamma_one = std::numbers::pi / g1.value;
  const bool ok = gam.converged && g1.converged;
  emit(flags.out_path, out, [&](std::ostream& os) {
    if (flags.json) {
      const nlohmann::json j{{"euler_mascheroni", gam.value.real()},
                             {"euler_mascheroni_err_estimate", gam.err_estimate},
                             {"euler_mascheroni_reference", kReference},
                             {"euler_mascheroni_abs_diff", std::abs(gam.value.real() - kReference)},
                             {"G_1", to_json(g1.value)},
                             {"G_1_err_estimate", g1.err_estimate},
                             {"pi_over_G_1", to_json(gamma_one)},
                             {"converged", ok}};
      os << j.dump(2) << '\n';
      return;
    }
    os << "euler_mascheroni   " << format_number(gam.value.real()) << '\n'
       << "  err_estimate     " << format_number(gam.err_estimate) << '\n'
       << "  reference        " << format_number(kReference) << '\n'
       << "  abs_diff         " << format_number(std::abs(gam.value.real() - kReference)) << '\n'
       << "G(1)               " << format_complex(g1.value) << '\n'
       << "  err_estimate     " << format_number(g1.err_estimate) << '\n'
       << "pi/G(1) = Gamma(1) " << format_complex(gamma_one) << '\n'
       << "converged          " << (ok ? "true" : "false") << '\n';
  });
  return ok ? kExitOk : kExitFailure;
}

int grid_command(const std::string& fn, GridRequest req, const CommonFlags& flags,
                 std::ostream& out) {
  req.function = parse_function(fn);
  req.overrides = flags.overrides();
  req.validate();
  const std::vector<GridRow> rows = compute_grid(req, worker_limit());
  emit(flags.out_path, out, [&](std::ostream& os) { write_grid_csv(rows, os); });
  const bool all = std::all_of(rows.begin(), rows.end(), [](const GridRow& r) { return r.converged; });
  return all ? kExitOk : kExitFailure;
}

int sweep_command(const std::string& fn, const std::string& z_text,
                  const std::vector<double>& sigmas, const CommonFlags& flags, std::ostream& out) {
  const Function f = parse_function(fn);
  const Complex z = parse_complex(z_text);
  SpecOverrides base = flags.overrides();
  base.sigma.reset();
  const SweepReport rep = sweep_sigma(f, z, sigmas, base);
  emit(flags.out_path, out, [&](std::ostream& os) { os << to_json(rep).dump(2) << '\n'; });
  const bool all = std::all_of(rep.entries.begin(), rep.entries.end(),
                               [](const SweepEntry& e) { return e.converged; });
  return all ? kExitOk : kExitFailure;
}

int verify_command(const std::optional<std::string>& only, std::optional<double> threshold,
                   const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  if (only) {
    const auto& names = identity_check_names();
    if (std::find(names.begin(), names.end(), *only) == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw UsageError("unknown check '" + *only + "' (expected one of " + known + ")");
    }
  }
  if (threshold && !(*threshold > 0.0)) throw UsageError("--threshold must be positive");
  const Thresholds th = threshold ? Thresholds::uniform(*threshold) : Thresholds{};
  const std::vector<OracleReport> reports = run_identity_suite(default_grid(), th, only);

  nlohmann::json j = nlohmann::json::array();
  std::size_t passed = 0;
  for (const OracleReport& r : reports) {
    j.push_back(to_json(r));
    if (r.passed) ++passed;
  }
  emit(flags.out_path, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  err << "verify: " << passed << "/" << reports.size() << " checks passed\n";
  return passed == reports.size() ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"unigamma: Gamma-family functions from one entire contour integral"};
  app.require_subcommand(1);
  std::function<int()> action;

  CommonFlags flags;
  std::string fn;
  std::string z_text;

  auto* eval = app.add_subcommand("eval", "evaluate one function at one point");
  eval->add_option("function", fn, "G, recip_gamma, gamma, gamma_sin_pi, digamma, laplace_recip_gamma")
      ->required();
  eval->add_option("z", z_text, "complex literal such as 0.5+3i")->required();
  add_spec_flags(eval, flags);
  eval->add_flag("--json", flags.json, "JSON output");
  eval->add_option("--out", flags.out_path, "write to a file instead of stdout");
  eval->callback([&] { action = [&] { return eval_command(fn, z_text, flags, out); }; });

  GridRequest req;
  auto* grid = app.add_subcommand("grid", "scan a rectangle and compare with the oracle (CSV)");
  grid->add_option("function", fn, "G, recip_gamma, gamma, gamma_sin_pi, digamma")->required();
  grid->add_option("--re-min", req.re_min)->required();
  grid->add_option("--re-max", req.re_max)->required();
  grid->add_option("--re-steps", req.re_steps, "number of nodes along Re")->required();
  grid->add_option("--im-min", req.im_min)->required();
  grid->add_option("--im-max", req.im_max)->required();
  grid->add_option("--im-steps", req.im_steps, "number of nodes along Im")->required();
  add_spec_flags(grid, flags);
  grid->add_option("--out", flags.out_path, "CSV path (default stdout)");
  grid->callback([&] { action = [&] { return grid_command(fn, req, flags, out); }; });

  std::vector<double> sigmas{0.5, 1.0, 2.0};
  auto* sweep = app.add_subcommand("sweep-sigma", "evaluate at several sigma (JSON)");
  sweep->add_option("function", fn)->required();
  sweep->add_option("z", z_text)->required();
  sweep->add_option("--sigmas", sigmas, "comma-separated sigma values (default 0.5,1,2)")
      ->delimiter(',');
  sweep->add_option("--tol", flags.tol);
  sweep->add_option("--max-refine", flags.max_refine);
  sweep->add_flag("--json", flags.json, "accepted; output is always JSON");
  sweep->add_option("--out", flags.out_path);
  sweep->callback([&] { action = [&] { return sweep_command(fn, z_text, sigmas, flags, out); }; });

  std::optional<std::string> only;
  std::optional<double> threshold;
  auto* verify = app.add_subcommand("verify", "run the identity suite on the default grid (JSON)");
  verify->add_option("--only", only, "run a single check");
  verify->add_option("--threshold", threshold, "replace every check threshold");
  verify->add_flag("--json", flags.json, "accepted; output is always JSON");
  verify->add_option("--out", flags.out_path);
  verify->callback([&] {
    action = [&] { return verify_command(only, threshold, flags, out, err); };
  });

  auto* constants = app.add_subcommand("constants", "Euler's gamma and pi/G(1) diagnostics");
  add_spec_flags(constants, flags);
  constants->add_flag("--json", flags.json, "JSON output");
  constants->add_option("--out", flags.out_path);
  constants->callback([&] { action = [&] { return constants_command(flags, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << '\n';
    return kExitPole;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QuadratureError& e) {
    err << "quadrature failure: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace unigamma::cli
