#include "lommelcheck/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "lommelcheck/errors.hpp"

namespace lommelcheck::cli {

std::string format_real(double x) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                       std::chars_format::general, 17);
  if (ec != std::errc{}) {
    throw DomainError("format_real: conversion failed");
  }
  return {buf.data(), end};
}

double parse_real(std::string_view text) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw DomainError("not a real number: '" + std::string(text) + "'");
  }
  return x;
}

SweepRow to_row(const DeviationSample& sample) {
  const Complex d = sample.value();
  const double abs_d = sample.log_scale == 0.0 ? std::abs(sample.D) : std::exp(sample.log_abs());
  return {sample.t,    sample.z.re(),           sample.z.im(),           d.real(),
          d.imag(),    abs_d,                   sample.normalized.real(), sample.normalized.imag(),
          std::string(to_string(sample.method))};
}

void write_sweep_csv(std::ostream& out, const RaySweep& sweep) {
  out << kSweepHeader << '\n';
  for (const DeviationSample& s : sweep.samples) {
    const SweepRow r = to_row(s);
    out << format_real(r.t) << ',' << format_real(r.z_re) << ',' << format_real(r.z_im) << ','
        << format_real(r.D_re) << ',' << format_real(r.D_im) << ',' << format_real(r.abs_D) << ','
        << format_real(r.normalized_re) << ',' << format_real(r.normalized_im) << ',' << r.method
        << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw DomainError("read_sweep_csv: missing header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 9) {
      throw DomainError("read_sweep_csv: expected 9 fields, got " + std::to_string(fields.size()));
    }
    rows.push_back({parse_real(fields[0]), parse_real(fields[1]), parse_real(fields[2]),
                    parse_real(fields[3]), parse_real(fields[4]), parse_real(fields[5]),
                    parse_real(fields[6]), parse_real(fields[7]), fields[8]});
  }
  return rows;
}

}  // namespace lommelcheck::cli
