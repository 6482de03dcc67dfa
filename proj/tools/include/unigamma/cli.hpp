#pragma once

// Command-line front end. Everything main() does is reachable from here so the
// tests can drive commands without spawning processes.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unigamma/gamma.hpp"
#include "unigamma/oracle.hpp"

namespace unigamma::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFailure = 2,  // verification or convergence failure
  kExitPole = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "a+bi", "a-bi", "a", "bi", "i", "-i"; no spaces; a and b may use
/// scientific notation. Throws UsageError.
Complex parse_complex(std::string_view text);

/// 17 significant digits, shortest of %g style.
std::string format_number(double x);
/// Inverse of parse_complex, e.g. "1.5-2i".
std::string format_complex(Complex z);

enum class Function { G, RecipGamma, Gamma, GammaSinPi, Digamma, Laplace };

/// Accepts G, recip_gamma, gamma, gamma_sin_pi, digamma, laplace_recip_gamma.
Function parse_function(std::string_view name);
std::string_view function_name(Function f) noexcept;

EvalResult evaluate(Function f, Complex z, const SpecOverrides& overrides);

/// Oracle counterpart of `evaluate`; NaN where the function has a pole.
Complex oracle_value(Function f, Complex z);

struct GridRequest {
  double re_min = 0.0, re_max = 0.0;
  double im_min = 0.0, im_max = 0.0;
  int re_steps = 1, im_steps = 1;
  Function function = Function::RecipGamma;
  SpecOverrides overrides;

  /// Throws UsageError.
  void validate() const;
  /// Node k of an axis: min + k (max - min) / (steps - 1); min when steps = 1.
  static double node(double lo, double hi, int steps, int k);
};

struct GridRow {
  Complex z;
  Complex value;
  double err_estimate = 0.0;
  Complex oracle;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool converged = false;
};

/// UNIGAMMA_THREADS if set (positive integer, else UsageError), otherwise
/// the hardware concurrency; at least 1.
unsigned worker_limit();

/// Rows in row-major order over im, then re. Rows of the grid are shared out
/// to `workers` threads; the result does not depend on the worker count.
/// Pole and quadrature failures become NaN rows with converged = false.
std::vector<GridRow> compute_grid(const GridRequest& req, unsigned workers);

inline constexpr std::string_view kGridHeader =
    "re_z,im_z,re_value,im_value,err_estimate,oracle_re,oracle_im,abs_err,rel_err,converged";
void write_grid_csv(const std::vector<GridRow>& rows, std::ostream& out);

struct SweepEntry {
  double sigma = 0.0;
  Complex value;
  double err_estimate = 0.0;
  double half_width = 0.0;
  double step = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct SweepReport {
  Complex z;
  std::vector<SweepEntry> entries;
  double max_pairwise_rel_diff = 0.0;
};

/// `base` supplies tol and max_refinements; its sigma is replaced per entry.
SweepReport sweep_sigma(Function f, Complex z, const std::vector<double>& sigmas,
                        const SpecOverrides& base = {});

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const SweepReport& report);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(Function f, const EvalResult& result);

/// Full command line, argv[0] included. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unigamma::cli
