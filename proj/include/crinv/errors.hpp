#pragma once

#include <stdexcept>
#include <string>

namespace crinv {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class order_mismatch_error : public error {
 public:
  using error::error;
};

class insufficient_order_error : public error {
 public:
  using error::error;
};

/// Argument outside the domain of an elementary function (zero divisor,
/// non-square constant under sqrt, log of a series with bad constant term).
class domain_error : public error {
 public:
  using error::error;
};

class not_strictly_pseudoconvex_error : public error {
 public:
  using error::error;
};

class malformed_defining_function_error : public error {
 public:
  using error::error;
};

/// A quantity needs an odd power of e^{phi} that is irrational on this chart.
class representation_error : public error {
 public:
  using error::error;
};

class invalid_fiber_point_error : public error {
 public:
  using error::error;
};

class insufficient_probes_error : public error {
 public:
  using error::error;
};

class inconsistency_error : public error {
 public:
  using error::error;
};

class evaluation_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class format_error : public error {
 public:
  format_error(const std::string& what, std::size_t line)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace crinv
