#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lommelcheck/cli/commands.hpp"
#include "lommelcheck/cli/csv.hpp"
#include "lommelcheck/cli/verify.hpp"
#include "lommelcheck/errors.hpp"
#include "lommelcheck/lommel.hpp"

using namespace lommelcheck;
using namespace lommelcheck::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lommelcheck");
  std::vector<const char*> argv;
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(LOMMELCHECK_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) {
    fields.push_back(f);
  }
  return fields;
}

const std::string kHalfPi = "1.5707963267948966";

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (const double x : {0.0, -0.0, 1.0, 0.1, kPi, 1e-300, 4.9e-324, 1.7976931348623157e308, -2.5e-17}) {
    CHECK(parse_real(format_real(x)) == x);
    CHECK(std::signbit(parse_real(format_real(x))) == std::signbit(x));
  }
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(std::isinf(parse_real(format_real(-INFINITY))));
  CHECK_THROWS_AS(parse_real("1.0x"), DomainError);
  CHECK_THROWS_AS(parse_real(""), DomainError);
}

TEST_CASE("complex order parsing") {
  CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
  CHECK(parse_complex("-0.5") == Complex(-0.5, 0.0));
  CHECK(parse_complex("1+1i") == Complex(1.0, 1.0));
  CHECK(parse_complex("2.3-0.7i") == Complex(2.3, -0.7));
  CHECK(parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1e-3+2e+1i") == Complex(1e-3, 20.0));
  CHECK_THROWS_AS(parse_complex("abc"), DomainError);
  CHECK_THROWS_AS(parse_complex(""), DomainError);
}

TEST_CASE("eval") {
  const Outcome r = invoke({"eval", "--nu-re", "0.5", "--z-re", "1"});
  REQUIRE(r.code == kSuccess);
  const auto f = split(r.out.substr(0, r.out.find('\n')));
  REQUIRE(f.size() == 5);
  CHECK(std::abs(parse_real(f[0]) - std::sqrt(2.0 / kPi) * std::sin(1.0)) <= 1e-15);
  CHECK(parse_real(f[1]) == 0.0);
  CHECK(f[2] == "series");

  const Outcome closed = invoke({"eval", "--nu-re", "-0.5", "--z-re", "2", "--method", "closed"});
  REQUIRE(closed.code == kSuccess);
  const auto g = split(closed.out);
  CHECK(std::abs(parse_real(g[0]) - std::sqrt(1.0 / kPi) * std::cos(2.0)) <= 1e-15);
  CHECK(g[2] == "closed");

  const Outcome asym = invoke({"eval", "--nu-re", "0", "--z-re", "40", "--z-im", "3", "--method", "asym"});
  CHECK(asym.code == kSuccess);
  CHECK(split(asym.out)[2] == "asymptotic");

  const Outcome cut = invoke({"eval", "--nu-re", "0.5", "--z-re", "-3"});
  CHECK(cut.code == kUsageError);
  CHECK(cut.err.find("point on cut") != std::string::npos);
  CHECK(std::count(cut.err.begin(), cut.err.end(), '\n') == 1);

  CHECK(invoke({"eval", "--nu-re", "x", "--z-re", "1"}).code == kUsageError);
  CHECK(invoke({"eval", "--z-re", "1"}).code == kUsageError);
  CHECK(invoke({"eval", "--nu-re", "0.3", "--z-re", "1", "--method", "closed"}).code == kUsageError);
  CHECK(invoke({"eval", "--nu-re", "0", "--z-re", "1", "--method", "magic"}).code == kUsageError);
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"--help"}).code == kSuccess);
}

TEST_CASE("sweep writes the documented columns") {
  const Outcome r = invoke({"sweep", "--nu-re", "0.5", "--theta", "0", "--t-min", "10", "--t-max", "1000",
                            "--n", "200", "--normalization", "theorem1"});
  REQUIRE(r.code == kSuccess);
  std::istringstream in(r.out);
  const auto rows = read_sweep_csv(in);
  REQUIRE(rows.size() == 200);
  CHECK(rows.front().t == 10.0);
  CHECK(rows.back().t == 1000.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    if (i > 0) {
      CHECK(row.t > rows[i - 1].t);
    }
    CHECK(std::abs(row.normalized_re) <= 1.1);
    const double t = row.t;
    const double expected = std::sin(t) * std::sin(t) / t - std::sin(2.0 * t);
    CHECK(std::abs(row.normalized_re - expected) <= 1e-12);
  }
}

TEST_CASE("sweep round-trips bit for bit") {
  const RaySweep sweep = ray_sweep(Order(Complex(1.0, 0.5)), 0.3, log_spaced(15.0, 200.0, 40),
                                   Normalization::RayF);
  std::stringstream buf;
  write_sweep_csv(buf, sweep);
  const auto rows = read_sweep_csv(buf);
  REQUIRE(rows.size() == sweep.samples.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow expected = to_row(sweep.samples[i]);
    CHECK(rows[i].t == expected.t);
    CHECK(rows[i].z_re == expected.z_re);
    CHECK(rows[i].z_im == expected.z_im);
    CHECK(rows[i].D_re == expected.D_re);
    CHECK(rows[i].D_im == expected.D_im);
    CHECK(rows[i].abs_D == expected.abs_D);
    CHECK(rows[i].normalized_re == expected.normalized_re);
    CHECK(rows[i].normalized_im == expected.normalized_im);
    CHECK(rows[i].method == expected.method);
  }
}

TEST_CASE("sweep limits") {
  const Outcome t2 = invoke({"sweep", "--nu-re", "0.5", "--theta", kHalfPi, "--t-min", "10", "--t-max",
                             "1e4", "--n", "30", "--normalization", "theorem2"});
  REQUIRE(t2.code == kSuccess);
  std::istringstream in2(t2.out);
  const auto rows2 = read_sweep_csv(in2);
  for (const SweepRow& row : rows2) {
    CHECK(std::abs(row.normalized_re + 1.0) <= 1.0 / (2.0 * row.t) + 1e-9);
  }
  CHECK(rows2.back().method == "logscaled");

  const Outcome ray = invoke({"sweep", "--nu-re", "0.5", "--theta", "0.7853981633974483", "--t-min", "10",
                              "--t-max", "1e4", "--n", "20", "--normalization", "rayf", "--spacing", "linear"});
  REQUIRE(ray.code == kSuccess);
  std::istringstream in3(ray.out);
  const auto rows3 = read_sweep_csv(in3);
  CHECK(std::abs(rows3.back().normalized_re) <= 1e-3);
  CHECK(std::abs(rows3.back().normalized_im + 1.0) <= 1e-3);
  CHECK(rows3[1].t - rows3[0].t == doctest::Approx(rows3[2].t - rows3[1].t));
}

TEST_CASE("sweep errors") {
  CHECK(invoke({"sweep", "--t-min", "5", "--t-max", "1"}).code == kUsageError);
  CHECK(invoke({"sweep", "--n", "1"}).code == kUsageError);
  CHECK(invoke({"sweep", "--theta", "3.141592653589793"}).code == kUsageError);
  CHECK(invoke({"sweep", "--spacing", "cubic"}).code == kUsageError);
  CHECK(invoke({"sweep", "--normalization", "theorem3"}).code == kUsageError);
  const Outcome io = invoke({"sweep", "--n", "3", "--out", "/nonexistent-dir/out.csv"});
  CHECK(io.code == kIoError);
  CHECK_FALSE(io.err.empty());
}

TEST_CASE("verify") {
  const Outcome t2 = invoke({"verify", "--nu", "0.5", "--theorem", "2", "--t", "20"});
  CHECK(t2.code == kSuccess);
  CHECK(t2.out.find("theorem2 t=20") != std::string::npos);
  CHECK(t2.out.find("-0.9750000000000") != std::string::npos);
  CHECK(t2.out.find("1/1 checks passed") != std::string::npos);

  const Outcome minus_half = invoke({"verify", "--nu", "-0.5"});
  CHECK(minus_half.code == kSuccess);
  CHECK(minus_half.out.find("nu=-0.5 max|D| over 500 points") != std::string::npos);

  VerifyOptions all;
  const auto rows = run_verification(all);
  CHECK(rows.size() >= 25);
  for (const CheckRow& r : rows) {
    CAPTURE(r.name);
    CHECK(r.passed);
  }

  CHECK(invoke({"verify", "--theorem", "5"}).code == kUsageError);
  CHECK(invoke({"verify", "--nu", "2", "--theorem", "2"}).code == kUsageError);
  CHECK(invoke({"verify", "--nu", "zz"}).code == kUsageError);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("eval --nu-re 0.5 --z-re 1") == 0);
  CHECK(run_binary("eval --nu-re 0.5 --z-re -3") == 2);
  CHECK(run_binary("eval --nu-re 0.5") == 2);
  CHECK(run_binary("sweep --n 3 --out /nonexistent-dir/out.csv") == 3);
  CHECK(run_binary("verify --nu 0.5 --theorem 2 --t 20") == 0);
}

TEST_CASE("golden theorem 2 sweep") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "lommelcheck_cli_test";
  std::filesystem::create_directories(dir);
  const std::string args = "sweep --nu-re 0.5 --theta " + kHalfPi +
                           " --t-min 10 --t-max 100 --n 16 --normalization theorem2 --out ";
  REQUIRE(run_binary(args + (dir / "a.csv").string()) == 0);
  REQUIRE(run_binary(args + (dir / "b.csv").string()) == 0);
  const std::string a = slurp(dir / "a.csv");
  CHECK(a == slurp(dir / "b.csv"));
  CHECK(a == slurp(LOMMELCHECK_GOLDEN_DIR "/theorem2_sweep16.csv"));

  // the golden values themselves against the closed form
  std::istringstream in(a);
  const auto rows = read_sweep_csv(in);
  REQUIRE(rows.size() == 16);
  for (const SweepRow& row : rows) {
    const double t = row.t;
    const double one_minus = -std::expm1(-2.0 * t);
    const double expected = one_minus * one_minus / (2.0 * t) - 1.0 + std::exp(-4.0 * t);
    CHECK(std::abs(row.normalized_re - expected) <= 1e-12 * std::abs(expected));
  }
  std::filesystem::remove_all(dir);
}
