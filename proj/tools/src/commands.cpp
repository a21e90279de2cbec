#include "lommelcheck/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lommelcheck/bessel.hpp"
#include "lommelcheck/cli/csv.hpp"
#include "lommelcheck/cli/verify.hpp"
#include "lommelcheck/errors.hpp"
#include "lommelcheck/hankel.hpp"
#include "lommelcheck/lommel.hpp"

namespace lommelcheck::cli {
namespace {

enum class EvalMethod { Auto, Series, Asymptotic, Closed };
enum class Spacing { Log, Linear };

struct EvalArgs {
  double nu_re = 0.0;
  double nu_im = 0.0;
  double z_re = 0.0;
  double z_im = 0.0;
  EvalMethod method = EvalMethod::Auto;
};

struct SweepArgs {
  double nu_re = 0.0;
  double nu_im = 0.0;
  double theta = 0.0;
  double t_min = 10.0;
  double t_max = 1000.0;
  int n = 100;
  Spacing spacing = Spacing::Log;
  Normalization normalization = Normalization::None;
  std::string out = "-";
};

struct VerifyArgs {
  std::vector<std::string> nus;
  std::string theorem = "all";
  std::vector<double> t_values;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const Order nu(Complex(a.nu_re, a.nu_im));
  const CutPlanePoint z(a.z_re, a.z_im);
  EvalResult r;
  switch (a.method) {
    case EvalMethod::Auto:
      r = bessel_j(nu, z);
      break;
    case EvalMethod::Series:
      r = bessel_j_series(nu, z);
      break;
    case EvalMethod::Asymptotic:
      r = bessel_j_asymptotic(nu, z);
      break;
    case EvalMethod::Closed: {
      const auto twice = nu.twice_half_odd();
      if (!twice) {
        throw UnsupportedOrder("closed form needs a half-odd real order");
      }
      r.value = bessel_j_closed_half_odd(*twice, z);
      r.method = Method::ClosedForm;
      r.terms_used = 0;
      r.error_estimate = 0.0;
      break;
    }
  }
  out << format_real(r.value.real()) << ',' << format_real(r.value.imag()) << ','
      << to_string(r.method) << ',' << r.terms_used << ',' << format_real(r.error_estimate) << '\n';
  return kSuccess;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.t_min > 0.0) || !(a.t_max > a.t_min) || a.n < 2) {
    throw DomainError("sweep: need 0 < t-min < t-max and n >= 2");
  }
  const std::vector<double> t = a.spacing == Spacing::Log ? log_spaced(a.t_min, a.t_max, a.n)
                                                          : linear_spaced(a.t_min, a.t_max, a.n);
  const RaySweep sweep =
      ray_sweep(Order(Complex(a.nu_re, a.nu_im)), a.theta, t, a.normalization);
  if (a.out == "-") {
    write_sweep_csv(out, sweep);
    return out ? kSuccess : kIoError;
  }
  std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "sweep: cannot open '" << a.out << "' for writing\n";
    return kIoError;
  }
  write_sweep_csv(file, sweep);
  file.close();
  if (!file) {
    err << "sweep: write to '" << a.out << "' failed\n";
    return kIoError;
  }
  return kSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  for (const std::string& s : a.nus) {
    options.nus.push_back(parse_complex(s));
  }
  options.theorem = parse_theorem(a.theorem);
  if (!a.t_values.empty()) {
    options.t_values = a.t_values;
  }
  const std::vector<CheckRow> rows = run_verification(options);
  print_table(out, rows);
  std::size_t failed = 0;
  for (const CheckRow& r : rows) {
    failed += r.passed ? 0 : 1;
  }
  out << rows.size() - failed << '/' << rows.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of the Lommel relation J_nu^2 + J_{nu+1}^2 ~ 2/(pi z)", "lommelcheck"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate J_nu(z) at one point");
  eval->add_option("--nu-re", eval_args.nu_re, "Real part of the order")->required();
  eval->add_option("--nu-im", eval_args.nu_im, "Imaginary part of the order");
  eval->add_option("--z-re", eval_args.z_re, "Real part of the argument")->required();
  eval->add_option("--z-im", eval_args.z_im, "Imaginary part of the argument");
  eval->add_option("--method", eval_args.method, "auto, series, asym or closed")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, EvalMethod>{{"auto", EvalMethod::Auto},
                                            {"series", EvalMethod::Series},
                                            {"asym", EvalMethod::Asymptotic},
                                            {"closed", EvalMethod::Closed}}));

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Sample the deviation D along a ray z = t e^(i theta)");
  sweep->add_option("--nu-re", sweep_args.nu_re, "Real part of the order");
  sweep->add_option("--nu-im", sweep_args.nu_im, "Imaginary part of the order");
  sweep->add_option("--theta", sweep_args.theta, "Ray angle in (-pi, pi)");
  sweep->add_option("--t-min", sweep_args.t_min, "First ray parameter");
  sweep->add_option("--t-max", sweep_args.t_max, "Last ray parameter");
  sweep->add_option("--n", sweep_args.n, "Number of samples");
  sweep->add_option("--spacing", sweep_args.spacing, "log or linear")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Spacing>{{"log", Spacing::Log}, {"linear", Spacing::Linear}}));
  sweep->add_option("--normalization", sweep_args.normalization, "none, theorem1, theorem2 or rayf")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Normalization>{
          {"none", Normalization::None},
          {"theorem1", Normalization::Theorem1},
          {"theorem2", Normalization::Theorem2},
          {"rayf", Normalization::RayF}}));
  sweep->add_option("--out", sweep_args.out, "Output CSV path, - for standard output");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suite and print a report");
  verify->add_option("--nu", verify_args.nus, "Orders to check, e.g. 0.5 or 1+1i");
  verify->add_option("--theorem", verify_args.theorem, "1, 2, ray or all");
  verify->add_option("--t", verify_args.t_values, "Ray parameters for theorem 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "lommelcheck: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*eval) return cmd_eval(eval_args, out);
    if (*sweep) return cmd_sweep(sweep_args, out, err);
    if (*verify) return cmd_verify(verify_args, out);
  } catch (const Error& e) {
    err << "lommelcheck: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace lommelcheck::cli
