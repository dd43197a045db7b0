#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace deltaho {

/// Compact number formatting for error messages.
inline std::string fmt_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class domain_error : public error {
 public:
  using error::error;
};

/// Evaluation at a pole (Gamma at 0, -1, -2, ...).
class pole_error : public domain_error {
 public:
  using domain_error::domain_error;
};

/// Result not representable as a finite double.
class overflow_error : public error {
 public:
  using error::error;
};

/// Series or iteration hit its cap before meeting the stopping rule.
class convergence_error : public error {
 public:
  using error::error;
};

/// No sign change where the eigenvalue structure guarantees one.
class bracket_error : public error {
 public:
  using error::error;
};

/// Grid too narrow, mismatched, or degenerate.
class grid_error : public error {
 public:
  using error::error;
};

/// Wrong parity for the requested operation, or parity could not be decided.
class parity_error : public error {
 public:
  using error::error;
};

}  // namespace deltaho
