#pragma once

#include <stdexcept>

namespace lommelcheck {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (on the cut, non-finite, bad tolerance).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Gamma evaluated at (or within one ulp of) a non-positive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

// Closed forms exist only for the orders -1/2, 1/2 and 3/2.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

// exp() of an imaginary part beyond the binary64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Too little usable data for a power-law fit.
class DegenerateData : public Error {
 public:
  using Error::Error;
};

}  // namespace lommelcheck
