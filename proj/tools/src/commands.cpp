#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>
#include <thread>

#include "unigamma/cli.hpp"

namespace unigamma::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const Complex kNaNComplex{kNaN, kNaN};

struct NamedFunction {
  Function f;
  std::string_view name;
};

constexpr std::array<NamedFunction, 6> kFunctions{{
    {Function::G, "G"},
    {Function::RecipGamma, "recip_gamma"},
    {Function::Gamma, "gamma"},
    {Function::GammaSinPi, "gamma_sin_pi"},
    {Function::Digamma, "digamma"},
    {Function::Laplace, "laplace_recip_gamma"},
}};

GridRow compute_row(Function f, Complex z, const SpecOverrides& overrides) {
  GridRow row;
  row.z = z;
  row.oracle = oracle_value(f, z);
  try {
    const EvalResult e = evaluate(f, z, overrides);
    row.value = e.value;
    row.err_estimate = e.err_estimate;
    row.converged = e.converged;
  } catch (const PoleError&) {
    row.value = kNaNComplex;
    row.err_estimate = kNaN;
  } catch (const QuadratureError&) {
    row.value = kNaNComplex;
    row.err_estimate = kNaN;
  }
  row.abs_err = std::abs(row.value - row.oracle);
  const double scale = std::abs(row.oracle);
  row.rel_err = scale > 0.0 && std::isfinite(scale) ? row.abs_err / scale : kNaN;
  return row;
}

void check_overrides(const SpecOverrides& o) {
  if (o.sigma && !(*o.sigma > 0.0 && *o.sigma <= ContourSpec::kMaxSigma)) {
    throw UsageError("--sigma must lie in (0, 8]");
  }
  if (o.tol && !(*o.tol > 0.0)) throw UsageError("--tol must be positive");
  if (o.max_refinements && *o.max_refinements < 1) {
    throw UsageError("--max-refine must be at least 1");
  }
}

}  // namespace

Function parse_function(std::string_view name) {
  for (const auto& nf : kFunctions) {
    if (nf.name == name) return nf.f;
  }
  std::string known;
  for (const auto& nf : kFunctions) known += (known.empty() ? "" : ", ") + std::string(nf.name);
  throw UsageError("unknown function '" + std::string(name) + "' (expected one of " + known +
                   ")");
}

std::string_view function_name(Function f) noexcept {
  for (const auto& nf : kFunctions) {
    if (nf.f == f) return nf.name;
  }
  return "?";
}

EvalResult evaluate(Function f, Complex z, const SpecOverrides& o) {
  switch (f) {
    case Function::G: return g_integral(z, o);
    case Function::RecipGamma: return recip_gamma(z, o);
    case Function::Gamma: return gamma(z, o);
    case Function::GammaSinPi: return gamma_sin_pi(z, o);
    case Function::Digamma: return digamma(z, o);
    case Function::Laplace: return laplace_recip_gamma(z, o);
  }
  throw UsageError("unknown function");
}

Complex oracle_value(Function f, Complex z) {
  try {
    switch (f) {
      case Function::G: return std::numbers::pi * oracle_recip_gamma(z);
      case Function::RecipGamma:
      case Function::Laplace: return oracle_recip_gamma(z);
      case Function::Gamma: return lanczos_gamma(z);
      // Gamma(z) sin(pi z) = pi / Gamma(1 - z), finite at the integers.
      case Function::GammaSinPi: return std::numbers::pi * oracle_recip_gamma(1.0 - z);
      case Function::Digamma: return oracle_digamma(z);
    }
  } catch (const PoleError&) {
  }
  return kNaNComplex;
}

void GridRequest::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(re_min) || !finite(re_max) || !finite(im_min) || !finite(im_max)) {
    throw UsageError("grid bounds must be finite");
  }
  if (re_min > re_max || im_min > im_max) throw UsageError("grid bounds need min <= max");
  if (re_steps < 1 || im_steps < 1) throw UsageError("grid steps must be at least 1");
  if (function == Function::Laplace) {
    throw UsageError("grid supports G, recip_gamma, gamma, gamma_sin_pi, digamma");
  }
  check_overrides(overrides);
}

double GridRequest::node(double lo, double hi, int steps, int k) {
  if (steps == 1) return lo;
  if (k == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

unsigned worker_limit() {
  if (const char* env = std::getenv("UNIGAMMA_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
      throw UsageError("UNIGAMMA_THREADS must be a positive integer, got '" + std::string(env) +
                       "'");
    }
    return static_cast<unsigned>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<GridRow> compute_grid(const GridRequest& req, unsigned workers) {
  req.validate();
  const auto n_re = static_cast<std::size_t>(req.re_steps);
  const auto n_im = static_cast<std::size_t>(req.im_steps);
  std::vector<GridRow> rows(n_re * n_im);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n_im; i = next++) {
      const double im = GridRequest::node(req.im_min, req.im_max, req.im_steps, static_cast<int>(i));
      for (std::size_t j = 0; j < n_re; ++j) {
        const double re =
            GridRequest::node(req.re_min, req.re_max, req.re_steps, static_cast<int>(j));
        rows[i * n_re + j] = compute_row(req.function, {re, im}, req.overrides);
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_im)));
  if (count == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned k = 0; k < count; ++k) pool.emplace_back(work);
  }
  return rows;
}

void write_grid_csv(const std::vector<GridRow>& rows, std::ostream& out) {
  out << kGridHeader << '\n';
  for (const GridRow& r : rows) {
    out << format_number(r.z.real()) << ',' << format_number(r.z.imag()) << ','
        << format_number(r.value.real()) << ',' << format_number(r.value.imag()) << ','
        << format_number(r.err_estimate) << ',' << format_number(r.oracle.real()) << ','
        << format_number(r.oracle.imag()) << ',' << format_number(r.abs_err) << ','
        << format_number(r.rel_err) << ',' << (r.converged ? "true" : "false") << '\n';
  }
}

SweepReport sweep_sigma(Function f, Complex z, const std::vector<double>& sigmas,
                        const SpecOverrides& base) {
  if (sigmas.empty()) throw UsageError("at least one sigma is required");
  check_overrides(base);
  for (double s : sigmas) {
    if (!(s > 0.0 && s <= ContourSpec::kMaxSigma)) {
      throw UsageError("sigma must lie in (0, 8], got " + format_number(s));
    }
  }
  SweepReport rep;
  rep.z = z;
  for (double s : sigmas) {
    SpecOverrides o = base;
    o.sigma = s;
    const EvalResult e = evaluate(f, z, o);
    rep.entries.push_back({s, e.value, e.err_estimate, e.spec_used.half_width, e.spec_used.step,
                           e.evaluations, e.converged});
  }
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.entries.size(); ++j) {
      const Complex a = rep.entries[i].value;
      const Complex b = rep.entries[j].value;
      const double scale = std::max(std::abs(a), std::abs(b));
      if (scale > 0.0) {
        rep.max_pairwise_rel_diff = std::max(rep.max_pairwise_rel_diff, std::abs(a - b) / scale);
      }
    }
  }
  return rep;
}

nlohmann::json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const SweepEntry& e : report.entries) {
    entries.push_back({{"sigma", e.sigma},
                       {"value_re", e.value.real()},
                       {"value_im", e.value.imag()},
                       {"err_estimate", e.err_estimate},
                       {"T", e.half_width},
                       {"h", e.step},
                       {"evaluations", e.evaluations},
                       {"converged", e.converged}});
  }
  return {{"z", to_json(report.z)},
          {"entries", std::move(entries)},
          {"max_pairwise_rel_diff", report.max_pairwise_rel_diff}};
}

nlohmann::json to_json(const OracleReport& r) {
  return {{"check_name", r.check_name},
          {"points_tested", r.points_tested},
          {"max_rel_err", r.max_rel_err},
          {"max_abs_err", r.max_abs_err},
          {"passed", r.passed},
          {"worst_point", to_json(r.worst_point)},
          {"all_converged", r.all_converged},
          {"threshold", r.threshold}};
}

nlohmann::json to_json(Function f, const EvalResult& e) {
  return {{"function", function_name(f)},
          {"z", to_json(e.z)},
          {"value", to_json(e.value)},
          {"err_estimate", e.err_estimate},
          {"sigma", e.spec_used.sigma},
          {"T", e.spec_used.half_width},
          {"h", e.spec_used.step},
          {"evaluations", e.evaluations},
          {"converged", e.converged},
          {"truncation_capped", e.truncation_capped}};
}

}  // namespace unigamma::cli
