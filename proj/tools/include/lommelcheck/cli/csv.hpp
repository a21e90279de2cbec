#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lommelcheck/lommel.hpp"

namespace lommelcheck::cli {

inline constexpr std::string_view kSweepHeader =
    "t,z_re,z_im,D_re,D_im,abs_D,normalized_re,normalized_im,method";

// Shortest form is not used: 17 significant digits, round-trip exact for binary64.
std::string format_real(double x);
double parse_real(std::string_view text);  // throws DomainError on malformed input

struct SweepRow {
  double t;
  double z_re;
  double z_im;
  double D_re;
  double D_im;
  double abs_D;
  double normalized_re;
  double normalized_im;
  std::string method;
};

SweepRow to_row(const DeviationSample& sample);
void write_sweep_csv(std::ostream& out, const RaySweep& sweep);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace lommelcheck::cli
