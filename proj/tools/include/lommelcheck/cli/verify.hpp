#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lommelcheck/numerics.hpp"

namespace lommelcheck::cli {

enum class TheoremSelection { All, Theorem1, Theorem2, Ray };

struct VerifyOptions {
  std::vector<Complex> nus;  // empty: default order set and the full suite
  TheoremSelection theorem = TheoremSelection::All;
  std::vector<double> t_values{20.0, 100.0};
};

struct CheckRow {
  std::string name;
  double value;   // quantity reported for information
  double metric;  // quantity compared against bound
  double bound;
  bool passed;
};

// Accepts "0.5", "-2", "1+1i", "2.3-0.7i", "3i".
Complex parse_complex(std::string_view text);
TheoremSelection parse_theorem(std::string_view text);

std::vector<CheckRow> run_verification(const VerifyOptions& options);
void print_table(std::ostream& out, const std::vector<CheckRow>& rows);

}  // namespace lommelcheck::cli
